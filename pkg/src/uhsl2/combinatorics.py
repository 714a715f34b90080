"""Symmetric-function and Pochhammer symbols behind the product coefficients.

Everything here is exact integer arithmetic.  The shifted symbol (a)^s_n is
the workhorse: it is computed by its recursion, while ``elementary_symmetric``
and ``tableaux_count_oracle`` recompute it by brute-force enumeration so the
three routes can be cross-checked against each other.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product


def elementary_symmetric(s: int, values: list[int]) -> int:
    """Sum of all products of s distinct entries of ``values``.

    This is the defining enumeration over s-subsets: 1 for s = 0 (empty
    product), 0 for s > len(values).
    """
    if s < 0:
        raise ValueError("subset size must be a natural number")
    total = 0
    for subset in combinations(values, s):
        term = 1
        for v in subset:
            term *= v
        total += term
    return total


@lru_cache(maxsize=None)
def shifted_elem(a: int, s: int, n: int) -> int:
    """The shifted symbol (a)^s_n = e^s_n(a, a+1, ..., a+n-1).

    Evaluated through the recursion
    (a)^s_n = (a)^s_{n-1} + (a+n-1)(a)^{s-1}_{n-1}
    with boundary conditions (a)^0_n = 1 and (a)^s_n = 0 for s > n.
    """
    if s == 0:
        return 1
    if s > n:
        return 0
    return shifted_elem(a, s, n - 1) + (a + n - 1) * shifted_elem(a, s - 1, n - 1)


def tableaux_count_oracle(a: int, s: int, n: int) -> int:
    """Count dot configurations on a staircase tableau, by listing them all.

    The tableau has n rows of lengths a, a+1, ..., a+n-1; a configuration
    places s unlabeled dots with at most one dot per row.  Every placement is
    visited explicitly, so this stays independent of ``shifted_elem``.
    """
    if a < 0:
        raise ValueError("row lengths must be natural numbers")
    lengths = [a + i for i in range(n)]
    count = 0
    for rows in combinations(range(n), s):
        for _placement in product(*(range(lengths[r]) for r in rows)):
            count += 1
    return count


def falling_factorial(a: int, n: int) -> int:
    """The descending product a(a-1)...(a-n+1), with (a)_0 = 1."""
    out = 1
    for i in range(n):
        out *= a - i
    return out


def pochhammer_k(a, n: int, k):
    """The k-shifted product a(a+k)(a+2k)...(a+(n-1)k).

    ``a`` and ``k`` may be integers or BiPoly values (any commuting ring
    elements supporting + and *).  n = 0 gives 1 by the empty-product
    convention, which is what lets the shift recursions bottom out.
    """
    out = 1
    term = a
    for _ in range(n):
        out = out * term
        term = term + k
    return out


class BiPoly:
    """Polynomial in two commuting indeterminates y and h, integer coefficients.

    Coefficients live in a dict keyed by (y-exponent, h-exponent); zero
    coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {(0, 0): coeffs} if coeffs else {}
        self.coeffs = {k: v for k, v in coeffs.items() if v}

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def h(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly(other)
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly(other)
        out = dict(self.coeffs)
        for key, val in other.coeffs.items():
            out[key] = out.get(key, 0) + val
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other) -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly(other)
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return BiPoly(other) + (-self)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly(other)
        out: dict[tuple[int, int], int] = {}
        for (y1, h1), v1 in self.coeffs.items():
            for (y2, h2), v2 in other.coeffs.items():
                key = (y1 + y2, h1 + h2)
                out[key] = out.get(key, 0) + v1 * v2
        return BiPoly(out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self.coeffs:
            return "BiPoly(0)"
        parts = []
        for (ye, he), v in sorted(self.coeffs.items()):
            mono = "".join(
                f"{name}^{e}" if e > 1 else name
                for name, e in (("y", ye), ("h", he))
                if e
            )
            parts.append(f"{v}{('*' + mono) if mono else ''}")
        return f"BiPoly({' + '.join(parts)})"


def vam3_lhs(a: int, n: int) -> BiPoly:
    """The product of the n factors y + (a-(n+i+1))h for i = 0..n-1."""
    y, h = BiPoly.y(), BiPoly.h()
    out = BiPoly(1)
    for i in range(n):
        out = out * (y + (a - (n + i + 1)) * h)
    return out


def vam3_rhs(a: int, n: int) -> BiPoly:
    """The sum over w of (a-2n)^w_n y^(n-w) h^w, built from ``shifted_elem``."""
    out = BiPoly(0)
    for w in range(n + 1):
        out = out + shifted_elem(a - 2 * n, w, n) * BiPoly({(n - w, w): 1})
    return out
