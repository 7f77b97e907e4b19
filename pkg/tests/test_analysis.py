from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from dompoly import analyze, domination_polynomial, generate, mode_bounds_check, ratio_sequence
from dompoly.analysis import small_case_mode_window, concavity_window
from oracles import all_edge_sets, brute_coeffs, brute_mode


@pytest.mark.parametrize("seq, mode", [
    ([0, 3, 3, 1], 2),
    ([0, 1, 3, 4, 1], 3),
    ([1], 0),
    ([5, 5, 5], 2),
    ([4, 3, 2], 0),
])
def test_mode_examples(seq, mode):
    rep = analyze(seq)
    assert rep.unimodal and rep.mode == mode and rep.first_violation is None


def test_violation_reported():
    rep = analyze([0, 2, 1, 2])
    assert not rep.unimodal and rep.mode is None
    assert rep.first_violation == (2, (2, 1, 2))


def test_violation_after_plateau():
    rep = analyze([3, 1, 1, 2])
    assert rep.first_violation == (2, (1, 1, 2))


def test_empty_rejected():
    with pytest.raises(ValueError):
        analyze([])


def test_concavity_window():
    assert concavity_window([0, 3, 3, 1]) == [0, 1]
    assert concavity_window([1, 2, 3]) == []


@pytest.mark.parametrize("g, ratios", [
    (generate("complete", n=3), [0, 1, 1, 1]),
    (generate("path", n=4), [0, 0, F(2, 3), 1, 1]),
    (generate("star", n=4), [0, F(1, 4), F(1, 2), 1, 1]),
])
def test_ratio_examples(g, ratios):
    rs = ratio_sequence(domination_polynomial(g))
    assert list(rs.ratios) == ratios and rs.non_decreasing


def test_ratio_decrease_detected():
    assert not ratio_sequence([0, 1, 0]).non_decreasing


@given(st.lists(st.integers(0, 20), min_size=1, max_size=12))
def test_mode_matches_brute(seq):
    rep = analyze(seq)
    expected = brute_mode(seq)
    assert rep.mode == expected
    assert rep.unimodal == (expected is not None)
    if rep.first_violation is not None:
        i, (a, b, c) = rep.first_violation
        assert a >= b < c


def test_mode_bounds_examples():
    assert mode_bounds_check([0, 1, 3, 4, 1])      # n=4, mode 3
    assert not mode_bounds_check([3, 2, 1, 0, 0])  # mode 0 < n/2
    assert not mode_bounds_check([0, 2, 1, 2])
    # n=4: allowed up to 2 + 2 + 2 = 6, so any mode <= 4 passes
    assert mode_bounds_check([0, 0, 0, 0, 1])
    # n=16: upper end is 8 + 4 + 2 = 14
    seq14 = [0] * 14 + [2, 1, 1]
    seq15 = [0] * 15 + [2, 1]
    assert mode_bounds_check(seq14) and not mode_bounds_check(seq15)


def test_window():
    assert small_case_mode_window(7) == (3, 4)
    assert small_case_mode_window(6) == (3, 3)


def test_small_graphs_unimodal():
    # every graph on 5 vertices: coefficients from the oracle, shape from the package
    for edges in all_edge_sets(5):
        d = brute_coeffs(5, edges)
        assert analyze(d).mode == brute_mode(d)
