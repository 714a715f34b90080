"""Ground-truth normalizer for free words in x, y, z, h.

Words are strings over the alphabet X Y Z H.  The three commutation rules
plus the centrality swaps for H are applied exhaustively until every word is
sorted in the order x < y < z < h; the result is a signed integer combination
of normal words.  This path never touches the closed product formula, which
is the whole point: ``oracle_star`` gives an independent answer to compare
against.

Normalization terminates: a rule output either sorts a pair in place (the
inversion count drops by one) or trades a non-H letter for an H (the non-H
letter count drops), so the pair (#non-H letters, #inversions) decreases
lexicographically with every step.

The per-strategy memo is the only shared state; entries are only ever added,
never mutated, so concurrent callers at worst recompute a word.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .algebra import Element, NormalMonomial

FreeWord = str
WordSum = dict[str, int]

ALPHABET = "XYZH"
_RANK = {c: i for i, c in enumerate(ALPHABET)}

# adjacent inverted pair -> replacement terms
_RULES: dict[str, tuple[tuple[str, int], ...]] = {
    "YX": (("XY", 1), ("XH", 2)),
    "ZX": (("XZ", 1), ("YH", -1)),
    "ZY": (("YZ", 1), ("ZH", 2)),
    "HX": (("XH", 1),),
    "HY": (("YH", 1),),
    "HZ": (("ZH", 1),),
}

_CACHE: dict[str, dict[str, WordSum]] = {"leftmost": {}, "rightmost": {}}


def is_normal(word: FreeWord) -> bool:
    return all(_RANK[a] <= _RANK[b] for a, b in zip(word, word[1:]))


def rewrite_step(word: FreeWord, strategy: str = "leftmost") -> WordSum | None:
    """Rewrite the leftmost (or rightmost) out-of-order adjacent pair.

    Returns None when the word is already in normal order.
    """
    positions = range(len(word) - 1)
    if strategy == "rightmost":
        positions = reversed(positions)
    elif strategy != "leftmost":
        raise ValueError(f"unknown strategy {strategy!r}")
    for i in positions:
        pair = word[i : i + 2]
        if _RANK[pair[0]] > _RANK[pair[1]]:
            return {
                word[:i] + repl + word[i + 2 :]: coeff
                for repl, coeff in _RULES[pair]
            }
    return None


def normalize(word: FreeWord, strategy: str = "leftmost") -> WordSum:
    """Exhaustively rewrite ``word`` into a combination of normal words.

    Memoized per strategy: identical words reappear constantly across rewrite
    branches, and the cache is what makes large verification sweeps cheap.
    Implemented with an explicit stack so long rewrite chains cannot hit the
    recursion limit.
    """
    cache = _CACHE[strategy]
    stack = [word]
    while stack:
        w = stack[-1]
        if w in cache:
            stack.pop()
            continue
        step = rewrite_step(w, strategy)
        if step is None:
            cache[w] = {w: 1}
            stack.pop()
            continue
        pending = [u for u in step if u not in cache]
        if pending:
            stack.extend(pending)
            continue
        combined: WordSum = {}
        for u, coeff in step.items():
            for nw, nc in cache[u].items():
                combined[nw] = combined.get(nw, 0) + coeff * nc
        cache[w] = {k: v for k, v in combined.items() if v}
        stack.pop()
    return dict(cache[word])


def clear_caches() -> None:
    for cache in _CACHE.values():
        cache.clear()


def to_element(word_sum: WordSum) -> Element:
    """Convert a sum of normal words to divided-basis coefficients.

    A plain monomial x^a y^b z^c h^d equals a!b!c!d! times the divided one,
    so each coefficient is scaled up accordingly.
    """
    terms: dict[NormalMonomial, int] = {}
    for word, coeff in word_sum.items():
        if not is_normal(word):
            raise ValueError(f"word {word!r} is not in normal order")
        counts = tuple(word.count(c) for c in ALPHABET)
        scale = 1
        for e in counts:
            scale *= factorial(e)
        mono = NormalMonomial(*counts)
        terms[mono] = terms.get(mono, 0) + coeff * scale
    return Element(terms)


def word_of_monomial(mono) -> FreeWord:
    a, b, c, d = mono
    return "X" * a + "Y" * b + "Z" * c + "H" * d


def oracle_star(m1, m2) -> Element:
    """Star product of two divided monomials via plain-word rewriting.

    The concatenated plain word is normalized and the result divided by the
    factorials of the input exponents (the inputs are divided monomials).
    """
    m1, m2 = NormalMonomial(*m1), NormalMonomial(*m2)
    word = word_of_monomial(m1) + word_of_monomial(m2)
    den = 1
    for e in (*m1, *m2):
        den *= factorial(e)
    return to_element(normalize(word)).scale(Fraction(1, den))
