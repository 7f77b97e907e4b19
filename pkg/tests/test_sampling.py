from fractions import Fraction as F
from math import comb

import pytest

from dompoly import Graph, generate
from dompoly.sampling import clopper_pearson, compare_coefficients, estimate_rk


@pytest.mark.parametrize("hits, samples, lo, hi", [
    (0, 10, 0.0, 0.30850),
    (10, 10, 0.69150, 1.0),
    (5, 10, 0.18709, 0.81291),
])
def test_clopper_pearson_vectors(hits, samples, lo, hi):
    a, b = clopper_pearson(hits, samples)
    assert a == pytest.approx(lo, abs=1e-5) and b == pytest.approx(hi, abs=1e-5)


def test_level_validated():
    with pytest.raises(ValueError):
        clopper_pearson(1, 2, level=1.0)


def test_reproducible_and_seed_sensitive(backend):
    g = generate("gnp", n=40, p=0.2, seed=1)
    a = estimate_rk(g, 15, 3000, seed=9, backend=backend)
    assert a == estimate_rk(g, 15, 3000, seed=9, backend=backend)
    assert a.hits != estimate_rk(g, 15, 3000, seed=10, backend=backend).hits


def test_backends_agree():
    g = generate("star", n=100)
    hits = {b: estimate_rk(g, 10, 2000, seed=7, backend=b).hits for b in ("compiled", "python")
            if b in __import__("dompoly").kernels.BACKENDS}
    assert len(set(hits.values())) == 1


def test_complete_graph_always_hits(backend):
    e = estimate_rk(generate("complete", n=50), 3, 500, backend=backend)
    assert e.hits == 500 and e.point == 1 and e.ci_high == 1.0


def test_empty_graph_needs_everything(backend):
    g = Graph(70)
    assert estimate_rk(g, 69, 200, backend=backend).hits == 0
    assert estimate_rk(g, 70, 200, backend=backend).hits == 200


def test_star_interval_covers_truth():
    e = estimate_rk(generate("star", n=100), 10, 100_000, seed=7)
    truth = comb(99, 9) / comb(100, 10)
    assert e.ci_low <= truth <= e.ci_high
    assert e.point == F(e.hits, 100_000)


def test_input_errors():
    g = generate("star", n=10)
    with pytest.raises(ValueError):
        estimate_rk(g, 0, 10)
    with pytest.raises(ValueError):
        estimate_rk(g, 11, 10)
    with pytest.raises(ValueError):
        estimate_rk(g, 2, 0)
    with pytest.raises(ValueError):
        compare_coefficients(g, 10, 10)


def test_compare_matches_exact():
    g = generate("star", n=30)   # d_k = C(29, k-1) for k < 29, peaking near k = 15
    assert compare_coefficients(g, 5, 20_000, seed=1) == "less"
    assert compare_coefficients(g, 24, 20_000, seed=1) == "greater"
    assert compare_coefficients(g, 29, 20_000, seed=1) == "greater"  # d_29 = 30 > d_30 = 1, both exact at the top


def test_compare_tiny_budget_inconclusive():
    assert compare_coefficients(generate("star", n=30), 14, 5, seed=1) == "inconclusive"
