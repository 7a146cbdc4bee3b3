import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from radchaos import oracle
from radchaos.core import BudgetExceeded, Coloring, InvariantError, WeightedHypergraph, build_bipartite, build_complete, CoeffTensor
from radchaos.discrepancy import (
    balance,
    balance_two_block,
    disc_exact,
    disc_for_coloring,
    disc_monte_carlo,
    expected_disc_exact,
    subset_sum,
    trial_coloring,
)

from strategies import graphs, reals

K3 = build_complete(3, 2)
K4 = build_complete(4, 2)


def test_disc_for_coloring_values():
    assert disc_for_coloring(K3, Coloring((1, 1, 1))).value == 3.0
    assert disc_for_coloring(K3, Coloring((1, 1, -1))).value == 1.0
    edge = WeightedHypergraph(2, 2, (((0, 1), -2.5),))
    assert disc_for_coloring(edge, Coloring((-1,))).value == 2.5
    with pytest.raises(InvariantError):
        disc_for_coloring(K3, Coloring((1, 1)))


def test_disc_exact_values():
    assert disc_exact(K3).value == 1.0
    r = disc_exact(K4)
    assert r.value == 1.0
    assert disc_for_coloring(K4, r.coloring).value == 1.0
    # + on the path 01, 12, 23 and - on the chords
    path = {(0, 1), (1, 2), (2, 3)}
    theta = Coloring(tuple(1 if e in path else -1 for e, _ in K4.edges))
    assert disc_for_coloring(K4, theta).value == 1.0
    assert disc_exact(WeightedHypergraph(2, 2, (((0, 1), 3.0),))).value == 3.0
    assert disc_exact(WeightedHypergraph(3, 2)).value == 0.0


def test_expected_values():
    assert expected_disc_exact(K3).value == 1.5
    assert expected_disc_exact(K4).value == 2.8125
    assert expected_disc_exact(WeightedHypergraph(2, 2, (((0, 1), -4.0),))).value == 4.0
    # two disjoint unit edges: aligned colorings give 2, opposite ones give 1
    two = WeightedHypergraph(4, 2, (((0, 1), 1.0), ((2, 3), 1.0)))
    assert expected_disc_exact(two).value == 1.5
    assert oracle.expected_disc(two) == 1.5


def test_witness_subset_attains():
    r = disc_exact(K4)
    assert abs(subset_sum(K4, r.coloring, r.witness_subset)) == r.value


def test_monte_carlo_k3():
    r = disc_monte_carlo(K3, 10_000, seed=0)
    assert r.trials == 10_000
    assert abs(r.value - 1.5) <= 3 * r.stderr
    assert r.best == 1.0
    assert disc_for_coloring(K3, r.coloring).value == r.best


@given(graphs(max_n=5, max_m=6), st.integers(0, 2**32))
def test_single_trial_identity(h, seed):
    r = disc_monte_carlo(h, 1, seed)
    assert r.stderr is None
    theta = Coloring(tuple(int(s) for s in trial_coloring(h.m, seed, 0)))
    assert r.value == disc_for_coloring(h, theta).value == r.best


def test_monte_carlo_deterministic():
    h = build_complete(6, 2)
    a = disc_monte_carlo(h, 3000, seed=5, workers=1)
    b = disc_monte_carlo(h, 3000, seed=5, workers=4)
    assert a == b
    c = disc_monte_carlo(h, 3000, seed=6)
    assert c.value != a.value
    with pytest.raises(ValueError):
        disc_monte_carlo(h, 0)


def test_trial_prefix_stability():
    # trial t only depends on (seed, t)
    h = build_complete(5, 2)
    short = disc_monte_carlo(h, 10, seed=3)
    long = disc_monte_carlo(h, 2000, seed=3)
    assert np.array_equal(trial_coloring(h.m, 3, 7), trial_coloring(h.m, 3, 7))
    assert long.best <= short.best


def test_balance_values():
    assert balance(K3) == pytest.approx(3 * math.sqrt(2), rel=1e-15)
    for n in range(2, 8):
        assert balance(build_complete(n, 2)) == pytest.approx(n * math.sqrt(n - 1), rel=1e-14)
    for n, d in [(5, 3), (6, 3), (6, 4)]:
        assert balance(build_complete(n, d)) == pytest.approx(n * math.sqrt(math.comb(n - 1, d - 1)), rel=1e-14)
    bip = build_bipartite(CoeffTensor(np.ones((2, 3))))
    assert balance_two_block(bip, 2) == pytest.approx(max(2 * math.sqrt(3), 3 * math.sqrt(2)))


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        disc_exact(build_complete(7, 2), budget=10_000)


# oracle agreement


@given(graphs(max_n=5, max_m=6, elements=reals))
def test_disc_exact_matches_oracle(h):
    r = disc_exact(h)
    assert r.value == pytest.approx(oracle.disc_exact(h), rel=1e-12, abs=1e-12)
    assert r.coloring.signs[0] == 1


@given(graphs(max_n=5, max_m=6, elements=reals))
def test_expected_matches_oracle(h):
    assert expected_disc_exact(h).value == pytest.approx(oracle.expected_disc(h), rel=1e-12, abs=1e-12)


@given(graphs(d=3, max_n=5, max_m=5, elements=reals))
def test_hypergraph_matches_oracle(h):
    assert disc_exact(h).value == pytest.approx(oracle.disc_exact(h), rel=1e-12, abs=1e-12)
    assert expected_disc_exact(h).value == pytest.approx(oracle.expected_disc(h), rel=1e-12, abs=1e-12)


@given(graphs(max_n=6, max_m=8, elements=reals), st.data())
def test_disc_for_coloring_matches_oracle(h, data):
    signs = data.draw(st.lists(st.sampled_from([1, -1]), min_size=h.m, max_size=h.m))
    theta = Coloring(tuple(signs))
    r = disc_for_coloring(h, theta)
    assert r.value == pytest.approx(oracle.disc_for_coloring(h, signs), rel=1e-12, abs=1e-12)
    assert abs(subset_sum(h, theta, r.witness_subset)) == pytest.approx(r.value, rel=1e-12, abs=1e-12)


# invariances


@given(graphs(max_n=5, max_m=6, elements=reals), st.data())
def test_global_sign_flip(h, data):
    signs = data.draw(st.lists(st.sampled_from([1, -1]), min_size=h.m, max_size=h.m))
    theta = Coloring(tuple(signs))
    assert disc_for_coloring(h, theta).value == disc_for_coloring(h, -theta).value


@given(graphs(max_n=5, max_m=6, elements=reals), st.data())
def test_edge_weight_sign_flip(h, data):
    flips = np.array(data.draw(st.lists(st.sampled_from([1.0, -1.0]), min_size=h.m, max_size=h.m)))
    g = h.with_weights(flips * h.weights)
    assert disc_exact(g).value == pytest.approx(disc_exact(h).value, rel=1e-12, abs=1e-12)
    assert expected_disc_exact(g).value == pytest.approx(expected_disc_exact(h).value, rel=1e-12, abs=1e-12)


@given(graphs(max_n=5, max_m=6, elements=reals), st.sampled_from([-3.0, 0.5, 2.0]))
def test_homogeneity(h, lam):
    g = h.with_weights(lam * h.weights)
    a = abs(lam)
    assert disc_exact(g).value == pytest.approx(a * disc_exact(h).value, rel=1e-12, abs=1e-12)
    assert expected_disc_exact(g).value == pytest.approx(a * expected_disc_exact(h).value, rel=1e-12, abs=1e-12)
    assert disc_monte_carlo(g, 50, 1).value == pytest.approx(a * disc_monte_carlo(h, 50, 1).value, rel=1e-12, abs=1e-12)
    assert balance(g) == pytest.approx(a * balance(h), rel=1e-12, abs=1e-12)


@given(graphs(max_n=5, max_m=6, elements=reals))
def test_disc_below_expected(h):
    assert disc_exact(h).value <= expected_disc_exact(h).value * (1 + 1e-12) + 1e-12


def test_workers_identical():
    h = build_complete(6, 2, weight=lambda e: 1.0 + 0.1 * e[0])
    assert disc_exact(h, workers=1) == disc_exact(h, workers=4)
    assert expected_disc_exact(h, workers=1) == expected_disc_exact(h, workers=4)
