import random
from math import comb

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

FIXTURE_OK = [HealthCheck.function_scoped_fixture]

from dompoly import Graph, GraphError, generate
from dompoly.engine import (
    CapacityError,
    domination_polynomial,
    dominator_count,
    e_statistics,
    e_tables,
    pair_count,
    split_count,
)
from dompoly.graphio import gnp
from oracles import brute_D, brute_coeffs, brute_e_table, brute_pairs, brute_split

P3 = generate("path", n=3)
P4 = generate("path", n=4)
K3 = generate("complete", n=3)


@pytest.mark.parametrize("g, expected", [
    (K3, (0, 3, 3, 1)),
    (P4, (0, 0, 4, 4, 1)),
    (generate("star", n=4), (0, 1, 3, 4, 1)),
    (Graph(1), (0, 1)),
    (Graph(0), (1,)),
    (Graph(3), (0, 0, 0, 1)),
])
def test_small_polynomials(g, expected, backend):
    assert domination_polynomial(g, backend=backend) == expected


def test_capacity():
    with pytest.raises(CapacityError):
        domination_polynomial(Graph(33))
    with pytest.raises(CapacityError):
        domination_polynomial(Graph(10), limit=65)
    with pytest.raises(CapacityError):
        e_statistics(Graph(40), 3)


@settings(max_examples=80, deadline=None, suppress_health_check=FIXTURE_OK)
@given(n=st.integers(1, 11), p=st.floats(0, 1), seed=st.integers(0, 2**32))
def test_matches_brute_force(n, p, seed, backend):
    g = gnp(n, p, seed)
    assert list(domination_polynomial(g, backend=backend)) == brute_coeffs(n, g.edges())


@pytest.mark.parametrize("workers", [2, 3, 8])
def test_workers_do_not_change_result(workers, backend):
    g = gnp(20, 0.25, 99)
    assert domination_polynomial(g, workers=workers, backend=backend) == domination_polynomial(
        g, workers=1, backend=backend)


def test_backends_agree_on_larger_graphs():
    from dompoly import kernels

    if "compiled" not in kernels.BACKENDS:
        pytest.skip("compiled kernel not built")
    for seed, p in [(1, 0.1), (2, 0.3), (3, 0.6)]:
        g = gnp(22, p, seed)
        assert domination_polynomial(g, backend="compiled") == domination_polynomial(g, backend="python")


def test_coefficient_invariants():
    rnd = random.Random(3)
    for _ in range(30):
        n = rnd.randint(1, 14)
        g = gnp(n, rnd.random(), rnd.getrandbits(32))
        d = domination_polynomial(g)
        assert d[0] == 0 and d[n] == 1
        assert all(0 <= d[k] <= comb(n, k) for k in range(n + 1))
        assert sum(d) <= 2 ** n


def test_e_statistics_examples(backend):
    assert e_statistics(P3, 1, backend=backend).as_sets() == {
        frozenset(): 1, frozenset({0}): 1, frozenset({2}): 1}
    for k in range(1, 6):
        assert e_statistics(generate("complete", n=5), k, backend=backend).as_sets() == {
            frozenset(): comb(5, k)}
    assert e_statistics(P4, 0, backend=backend).as_sets() == {frozenset(range(4)): 1}
    with pytest.raises(ValueError):
        e_statistics(P4, 5)


@settings(max_examples=40, deadline=None, suppress_health_check=FIXTURE_OK)
@given(n=st.integers(1, 9), p=st.floats(0, 1), seed=st.integers(0, 2**32))
def test_e_statistics_brute(n, p, seed, backend):
    g = gnp(n, p, seed)
    tables = e_tables(g)
    d = domination_polynomial(g)
    for k in range(n + 1):
        expect = brute_e_table(n, g.edges(), k)
        assert e_statistics(g, k, backend=backend).as_sets() == expect
        assert tables[k].as_sets() == expect
        assert tables[k].total() == comb(n, k)
        assert tables[k].dominating() == d[k]


def test_e_tables_large_path_matches_kernel():
    g = gnp(16, 0.2, 4)
    tables = e_tables(g)
    for k in (0, 3, 8):
        assert tables[k].table == e_statistics(g, k).table


def test_dominator_count():
    assert dominator_count(P3, {0, 2}) == 1
    assert dominator_count(generate("complete", n=6), range(6)) == 6
    assert dominator_count(P4, {0}) == 2
    with pytest.raises(GraphError):
        dominator_count(P4, set())


def test_split_count():
    assert split_count(P3, {0, 2}, {0}) == 1
    assert split_count(P3, {0, 2}, {2}) == 1
    assert split_count(K3, {0, 1}, {0}) == 0
    for s, t in [({0, 2}, set()), ({0, 2}, {0, 2}), ({0}, {1})]:
        with pytest.raises(GraphError):
            split_count(P3, s, t)


def test_pair_count():
    assert pair_count(P3, {0, 2}) == 2
    assert pair_count(generate("complete", n=5), {1, 3}) == 0
    assert pair_count(P4, range(4)) == 8  # brute-force oracle over 16 ordered pairs
    with pytest.raises(GraphError):
        pair_count(P4, set())


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.floats(0, 1), st.integers(0, 2**32), st.data())
def test_statistics_brute(n, p, seed, data):
    g = gnp(n, p, seed)
    s = data.draw(st.sets(st.integers(0, n - 1), min_size=1))
    assert dominator_count(g, s) == brute_D(n, g.edges(), s)
    assert pair_count(g, s) == brute_pairs(n, g.edges(), s)
    assert pair_count(g, s) <= n * (n - 1)
    if len(s) >= 2:
        t = data.draw(st.sets(st.sampled_from(sorted(s)), min_size=1, max_size=len(s) - 1))
        assert split_count(g, s, t) == brute_split(n, g.edges(), s, t)
