"""Tests for the term-rewriting normalizer."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uhsl2.algebra import Element
from uhsl2.rewrite import (
    ALPHABET,
    is_normal,
    normalize,
    oracle_star,
    rewrite_step,
    to_element,
    word_of_monomial,
)

words = st.text(alphabet=ALPHABET, max_size=8)


def inversions(word):
    rank = {c: i for i, c in enumerate(ALPHABET)}
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if rank[word[i]] > rank[word[j]]
    )


def non_h_count(word):
    return sum(1 for c in word if c != "H")


class TestRewriteStep:
    def test_yx_rule(self):
        assert rewrite_step("YX") == {"XY": 1, "XH": 2}

    def test_zx_rule(self):
        assert rewrite_step("ZX") == {"XZ": 1, "YH": -1}

    def test_zy_rule(self):
        assert rewrite_step("ZY") == {"YZ": 1, "ZH": 2}

    def test_h_swaps_have_unit_coefficient(self):
        assert rewrite_step("HX") == {"XH": 1}
        assert rewrite_step("HY") == {"YH": 1}
        assert rewrite_step("HZ") == {"ZH": 1}

    def test_normal_word_returns_none(self):
        assert rewrite_step("XYZH") is None
        assert rewrite_step("") is None
        assert rewrite_step("X") is None

    def test_leftmost_position_chosen(self):
        # both ZY (position 0) and YX (position 1) are inverted; leftmost wins
        assert rewrite_step("ZYX") == {"YZX": 1, "ZHX": 2}

    def test_rightmost_strategy(self):
        assert rewrite_step("ZYX", strategy="rightmost") == {"ZXY": 1, "ZXH": 2}

    def test_unknown_strategy_rejected(self):
        with pytest.raises(ValueError):
            rewrite_step("YX", strategy="middle")

    @given(words)
    def test_rewrite_outputs_preserve_length(self, word):
        step = rewrite_step(word)
        if step is None:
            assert is_normal(word)
        else:
            assert all(len(w) == len(word) for w in step)

    @given(words)
    def test_measure_decreases(self, word):
        # termination measure: (#non-H letters, #inversions) drops lexicographically
        step = rewrite_step(word)
        if step is not None:
            before = (non_h_count(word), inversions(word))
            for out in step:
                assert (non_h_count(out), inversions(out)) < before


class TestNormalize:
    def test_worked_example_plain_words(self):
        assert normalize("ZXX") == {"XXZ": 1, "XYH": -2, "XHH": -2}

    def test_defining_relation(self):
        assert normalize("ZY") == {"YZ": 1, "ZH": 2}

    def test_h_is_central(self):
        assert normalize("HXYZ") == {"XYZH": 1}

    def test_normal_input_is_fixed(self):
        assert normalize("XXYZZH") == {"XXYZZH": 1}

    @given(words)
    def test_results_are_normal(self, word):
        for out in normalize(word):
            assert is_normal(out)

    @given(words)
    def test_degree_homogeneity(self, word):
        for out in normalize(word):
            assert len(out) == len(word)

    @given(words)
    def test_no_zero_coefficients(self, word):
        assert all(c != 0 for c in normalize(word).values())

    def test_confluence_exhaustive_to_length_8(self):
        frontier = [""]
        for _ in range(8):
            frontier = [w + c for w in frontier for c in ALPHABET]
            for word in frontier:
                assert normalize(word, "leftmost") == normalize(word, "rightmost")

    def test_termination_on_long_words(self):
        rng = random.Random(23)
        for _ in range(300):
            word = "".join(rng.choice(ALPHABET) for _ in range(12))
            result = normalize(word)
            assert all(is_normal(w) for w in result)


class TestToElement:
    def test_factorial_conversion(self):
        assert to_element({"XX": 1}) == Element({(2, 0, 0, 0): 2})

    def test_unit_factorials(self):
        assert to_element({"XYZH": 5}) == Element({(1, 1, 1, 1): 5})

    def test_zero_sum(self):
        assert to_element({}).is_zero()

    def test_rejects_non_normal_words(self):
        with pytest.raises(ValueError):
            to_element({"YX": 1})


class TestOracleStar:
    def test_defining_relation_yx(self):
        assert oracle_star((0, 1, 0, 0), (1, 0, 0, 0)) == Element(
            {(1, 1, 0, 0): 1, (1, 0, 0, 1): 2}
        )

    def test_worked_example(self):
        assert oracle_star((0, 0, 1, 0), (2, 0, 0, 0)) == Element(
            {(2, 0, 1, 0): 1, (1, 1, 0, 1): -1, (1, 0, 0, 2): -2}
        )

    def test_five_term_identity(self):
        assert oracle_star((0, 0, 2, 0), (2, 0, 0, 0)) == Element(
            {(2, 0, 2, 0): 1, (1, 1, 1, 1): -1, (1, 0, 1, 2): -4,
             (0, 2, 0, 2): 2, (0, 1, 0, 3): 3}
        )

    def test_division_by_input_factorials(self):
        # x^2/2! * x'^0...: oracle must divide out the 2! of the left factor
        result = oracle_star((2, 0, 0, 0), (1, 0, 0, 0))
        assert result == Element({(3, 0, 0, 0): 3})

    def test_word_of_monomial(self):
        assert word_of_monomial((2, 1, 0, 3)) == "XXYHHH"

    def test_oracle_coefficients_are_exact(self):
        for coeff in oracle_star((0, 0, 3, 0), (3, 0, 0, 0)).terms.values():
            assert Fraction(coeff).denominator == 1
