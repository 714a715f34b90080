"""Divided-power PBW elements and the closed-form star product.

An element is a finitely supported map from normal monomials (a, b, c, d),
standing for x^a y^b z^c h^d / (a! b! c! d!), to exact rationals.  The star
product of two such monomials is a finite signed sum over index assignments;
``product_index_assignments`` enumerates them and ``mono_star_mono``
accumulates the summands.  Coefficients of monomial-by-monomial products are
always integers; ``structural_coefficient`` enforces that.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, NamedTuple

from .combinatorics import falling_factorial, shifted_elem

COLORS = "xyzh"


class IntegralityViolation(Exception):
    """A structural coefficient came out non-integer: the formula or the
    index convention is broken, never a valid result."""


class NormalMonomial(NamedTuple):
    a: int
    b: int
    c: int
    d: int

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c + self.d

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        letters = " ".join(
            f"{name}^{e}" if e > 1 else name
            for name, e in zip(COLORS, self)
            if e
        )
        bangs = " ".join(f"{e}!" for e in self if e > 1)
        return f"{letters} / ({bangs})" if bangs else letters


UNIT = NormalMonomial(0, 0, 0, 0)


class ProductIndexAssignment(NamedTuple):
    """One summand of the closed product formula.

    The thirteen indices split the output exponents: alpha1 + alpha2 = alpha,
    beta_f + beta_g + beta_c = beta, gamma1 + gamma2 = gamma, rho1 + ... +
    rho6 = rho, with the linking constraint beta_c + rho4 = rho3.  beta_f and
    beta_g are the y-blocks surviving from the two factors; beta_c is the
    block created by z-x commutation.
    """

    alpha1: int
    alpha2: int
    beta_f: int
    beta_g: int
    beta_c: int
    gamma1: int
    gamma2: int
    rho1: int
    rho2: int
    rho3: int
    rho4: int
    rho5: int
    rho6: int

    @property
    def output(self) -> NormalMonomial:
        return NormalMonomial(
            self.alpha1 + self.alpha2,
            self.beta_f + self.beta_g + self.beta_c,
            self.gamma1 + self.gamma2,
            self.rho1 + self.rho2 + self.rho3 + self.rho4 + self.rho5 + self.rho6,
        )

    def summand(self) -> int:
        """The exact integer contribution of this assignment."""
        alpha, beta, gamma, rho = self.output
        return (
            (-1) ** self.rho3
            * multinomial(alpha, (self.alpha1, self.alpha2))
            * multinomial(beta, (self.beta_f, self.beta_g, self.beta_c))
            * multinomial(gamma, (self.gamma1, self.gamma2))
            * multinomial(rho, (self.rho1, self.rho2, self.rho3,
                                self.rho4, self.rho5, self.rho6))
            * (2 * self.alpha2) ** self.rho5
            * (2 * self.gamma1) ** self.rho6
            * factorial(self.beta_c)
            * factorial(self.rho4)
            * shifted_elem(self.gamma1 + self.alpha2, self.rho4, self.rho3)
        )


def multinomial(total: int, parts: tuple[int, ...]) -> int:
    """Exact multinomial coefficient total! / (parts[0]! parts[1]! ...)."""
    out, rem = 1, total
    for p in parts:
        out *= comb(rem, p)
        rem -= p
    return out


def product_index_assignments(
    m1: NormalMonomial, m2: NormalMonomial
) -> Iterator[ProductIndexAssignment]:
    """All index assignments consistent with the factor monomials m1, m2.

    m1 plays the left role, so its exponents pin alpha1 = m1.a,
    beta_f + rho5 = m1.b, gamma1 + rho3 = m1.c, rho1 = m1.d; m2 pins
    alpha2 + rho3 = m2.a, beta_g + rho6 = m2.b, gamma2 = m2.c, rho2 = m2.d.
    rho3 (bounded by min(m1.c, m2.a)), rho4 <= rho3, rho5 and rho6 range
    freely; everything else is forced.
    """
    a1, b1, c1, d1 = m1
    a2, b2, c2, d2 = m2
    for rho3 in range(min(c1, a2) + 1):
        for rho4 in range(rho3 + 1):
            for rho5 in range(b1 + 1):
                for rho6 in range(b2 + 1):
                    yield ProductIndexAssignment(
                        alpha1=a1, alpha2=a2 - rho3,
                        beta_f=b1 - rho5, beta_g=b2 - rho6, beta_c=rho3 - rho4,
                        gamma1=c1 - rho3, gamma2=c2,
                        rho1=d1, rho2=d2, rho3=rho3, rho4=rho4,
                        rho5=rho5, rho6=rho6,
                    )


@lru_cache(maxsize=None)
def _mono_star(m1: NormalMonomial, m2: NormalMonomial) -> dict[NormalMonomial, int]:
    out: dict[NormalMonomial, int] = {}
    for asg in product_index_assignments(m1, m2):
        term = asg.summand()
        if term:
            key = asg.output
            out[key] = out.get(key, 0) + term
    return {k: v for k, v in out.items() if v}


class Element:
    """A finitely supported divided-power PBW element.

    ``terms`` maps NormalMonomial to an exact rational (int or Fraction);
    zero coefficients are pruned on construction.  ``cap``, when set, is a
    total-degree bound: monomials above it are discarded, and arithmetic
    between elements with distinct explicit caps is rejected.  Elements are
    treated as immutable values.
    """

    __slots__ = ("terms", "cap")

    def __init__(self, terms: dict | None = None, cap: int | None = None):
        self.cap = cap
        clean: dict[NormalMonomial, Fraction | int] = {}
        for key, val in (terms or {}).items():
            if isinstance(val, float):
                raise TypeError("coefficients must be exact (int or Fraction)")
            if not val:
                continue
            mono = key if isinstance(key, NormalMonomial) else NormalMonomial(*key)
            if min(mono) < 0:
                raise ValueError(f"negative exponent in monomial {tuple(mono)}")
            if cap is not None and mono.degree > cap:
                continue
            clean[mono] = val
        self.terms = clean

    @classmethod
    def zero(cls, cap: int | None = None) -> "Element":
        return cls({}, cap)

    @classmethod
    def unit(cls, cap: int | None = None) -> "Element":
        return cls({UNIT: 1}, cap)

    @classmethod
    def monomial(cls, mono, coeff=1, cap: int | None = None) -> "Element":
        return cls({NormalMonomial(*mono): coeff}, cap)

    def coefficient(self, mono) -> Fraction | int:
        return self.terms.get(NormalMonomial(*mono), 0)

    def degree(self) -> int:
        """Largest total degree in the support (-1 for the zero element)."""
        return max((m.degree for m in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def with_cap(self, cap: int | None) -> "Element":
        return Element(self.terms, cap)

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Element") -> "Element":
        cap = _combine_caps(self.cap, other.cap)
        out = dict(self.terms)
        for key, val in other.terms.items():
            out[key] = out.get(key, 0) + val
        return Element(out, cap)

    def __neg__(self) -> "Element":
        return Element({k: -v for k, v in self.terms.items()}, self.cap)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, q) -> "Element":
        """Multiply every coefficient by the exact rational q."""
        if not q:
            return Element.zero(self.cap)
        return Element({k: v * q for k, v in self.terms.items()}, self.cap)

    def __mul__(self, other):
        if isinstance(other, Element):
            return star(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything; Element * Element goes via __mul__
        return self.scale(other)

    def __repr__(self) -> str:
        if not self.terms:
            return "Element(0)"
        parts = []
        for mono in sorted(self.terms):
            coeff = self.terms[mono]
            parts.append(f"{coeff}*[{mono}]")
        return "Element(" + " + ".join(parts) + ")"


def _combine_caps(c1: int | None, c2: int | None) -> int | None:
    if c1 is None:
        return c2
    if c2 is None:
        return c1
    if c1 != c2:
        raise ValueError(f"degree cap mismatch: {c1} != {c2}")
    return c1


def add(f: Element, g: Element) -> Element:
    return f + g


def negate(f: Element) -> Element:
    return -f


def scalar_mul(q, f: Element) -> Element:
    return f.scale(q)


def mono_star_mono(m1, m2, cap: int | None = None) -> Element:
    """Star product of two divided monomials, by the closed formula."""
    return Element(_mono_star(NormalMonomial(*m1), NormalMonomial(*m2)), cap)


def star(f: Element, g: Element) -> Element:
    """Bilinear extension of the monomial product.

    The product is graded, so a shared degree cap commutes with truncation:
    nothing at or below the cap is lost when both factors are capped.
    """
    cap = _combine_caps(f.cap, g.cap)
    out: dict[NormalMonomial, Fraction | int] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            if cap is not None and m1.degree + m2.degree > cap:
                continue
            c12 = c1 * c2
            for mono, coeff in _mono_star(m1, m2).items():
                out[mono] = out.get(mono, 0) + c12 * coeff
    return Element(out, cap)


def structural_coefficient(m1, m2, out) -> int:
    """The integer coefficient of ``out`` in the product of two basis monomials."""
    value = mono_star_mono(m1, m2).coefficient(out)
    as_fraction = Fraction(value)
    if as_fraction.denominator != 1:
        raise IntegralityViolation(
            f"coefficient of {tuple(out)} in {tuple(m1)} * {tuple(m2)} is {value}"
        )
    return int(as_fraction)


def normal_order_zy(a: int, b: int) -> Element:
    """Normal form of z^a/a! y^b/b!: sum over k of (2a)^k y^(b-k) z^a h^k."""
    terms = {}
    for k in range(b + 1):
        coeff = (2 * a) ** k
        if coeff:
            terms[NormalMonomial(0, b - k, a, k)] = coeff
    return Element(terms)


def normal_order_yx(a: int, b: int) -> Element:
    """Normal form of y^a/a! x^b/b!: sum over k of (2b)^k x^b y^(a-k) h^k."""
    terms = {}
    for k in range(a + 1):
        coeff = (2 * b) ** k
        if coeff:
            terms[NormalMonomial(b, a - k, 0, k)] = coeff
    return Element(terms)


def normal_order_zx(a: int, b: int) -> Element:
    """Normal form of z^a/a! x^b/b!.

    Double sum over 0 <= w <= v <= min(a, b) with coefficient
    (-1)^v (v-w)! (v+w)_w (a+b-2v)^w_v on the divided monomial
    x^(b-v) y^(v-w) z^(a-v) h^(v+w).
    """
    terms: dict[NormalMonomial, int] = {}
    for v in range(min(a, b) + 1):
        for w in range(v + 1):
            coeff = (
                (-1) ** v
                * factorial(v - w)
                * falling_factorial(v + w, w)
                * shifted_elem(a + b - 2 * v, w, v)
            )
            if coeff:
                mono = NormalMonomial(b - v, v - w, a - v, v + w)
                terms[mono] = terms.get(mono, 0) + coeff
    return Element(terms)


def exp_series(color: str, cap: int) -> Element:
    """Truncated exponential series in one generator: sum of its divided powers."""
    if cap < 0:
        raise ValueError("cap must be a natural number")
    if color.lower() not in COLORS:
        raise ValueError(f"unknown generator {color!r}")
    i = COLORS.index(color.lower())
    terms = {}
    for k in range(cap + 1):
        mono = [0, 0, 0, 0]
        mono[i] = k
        terms[NormalMonomial(*mono)] = 1
    return Element(terms, cap)
