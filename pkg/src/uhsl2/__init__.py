"""Exact arithmetic in the formal homogeneous enveloping algebra of sl2.

Elements live in the divided-power PBW basis x^a y^b z^c h^d / (a!b!c!d!)
over the relations yx = xy + 2xh, zx = xz - yh, zy = yz + 2zh with h central.
The noncommutative product is available through three independent routes that
cross-check each other: the closed coefficient formula (`algebra`), a
term-rewriting normalizer (`rewrite`), and a labelled-set species enumeration
(`species`).
"""

from .algebra import (
    Element,
    IntegralityViolation,
    NormalMonomial,
    ProductIndexAssignment,
    add,
    exp_series,
    mono_star_mono,
    negate,
    normal_order_yx,
    normal_order_zx,
    normal_order_zy,
    product_index_assignments,
    scalar_mul,
    star,
    structural_coefficient,
)
from .combinatorics import (
    BiPoly,
    elementary_symmetric,
    falling_factorial,
    pochhammer_k,
    shifted_elem,
    tableaux_count_oracle,
    vam3_lhs,
    vam3_rhs,
)
from .expressions import EvalError, ParseError, evaluate, parse, to_text
from .rewrite import normalize, oracle_star, rewrite_step, to_element
from .serialize import element_from_json, element_to_json, pretty
from .species import (
    ColoredSizes,
    DividedPower,
    Exponential,
    FunctorSpec,
    Singleton,
    ascending_maps_count,
    functor_value,
    species_coefficient_check,
    star_species,
    valuation_element,
)

__version__ = "0.1.0"
