"""Naive reference evaluators.

Every quantity here is a literal max/min/mean over the full configuration
space with plain loops: no closed-form last axis, no Gray code, no symmetry
halving.  Only usable at toy sizes; they exist to cross-check the fast paths.
"""

from itertools import product
from math import factorial

import numpy as np

from .core import CoeffTensor, SimplexCoeffs, WeightedHypergraph


def _signs(n):
    return product((1.0, -1.0), repeat=n)


def _subsets(n):
    return product((0.0, 1.0), repeat=n)


def _form(arr, vectors):
    total = 0.0
    for idx in np.ndindex(*arr.shape):
        term = arr[idx]
        for k, i in enumerate(idx):
            term *= vectors[k][i]
        total += term
    return total


def opnorm(a: CoeffTensor) -> float:
    arr = a.values
    n, m = arr.shape
    return max(
        sum(y[i] * arr[i, j] * x[j] for i in range(n) for j in range(m))
        for x in _signs(m)
        for y in _signs(n)
    )


def linf_multiple(a: CoeffTensor) -> float:
    arr = a.values
    return max(_form(arr, xs) for xs in product(*[list(_signs(n)) for n in arr.shape]))


def cut_norm(a: CoeffTensor) -> float:
    arr = a.values
    return max(abs(_form(arr, zs)) for zs in product(*[list(_subsets(n)) for n in arr.shape]))


def _keyed_sum(a: SimplexCoeffs, vec) -> float:
    total = 0.0
    for key, v in a.values.items():
        term = v
        for j in key:
            term *= vec[j - 1]
        total += term
    return total


def cut_norm_star(a: SimplexCoeffs) -> float:
    return max(abs(_keyed_sum(a, z)) for z in _subsets(a.n))


def linf_chaos(a: SimplexCoeffs) -> float:
    return max(abs(_keyed_sum(a, e)) for e in _signs(a.n))


def lp_rademacher(a, p: float) -> float:
    a = list(np.ravel(a))
    vals = [abs(sum(x * s for x, s in zip(a, eps))) ** p for eps in _signs(len(a))]
    return (sum(vals) / len(vals)) ** (1.0 / p)


def disc_for_coloring(h: WeightedHypergraph, theta) -> float:
    best = 0.0
    for z in _subsets(h.n):
        total = 0.0
        for (verts, w), s in zip(h.edges, theta):
            if all(z[v] for v in verts):
                total += s * w
        best = max(best, abs(total))
    return best


def disc_exact(h: WeightedHypergraph) -> float:
    return min(disc_for_coloring(h, th) for th in _signs(h.m))


def expected_disc(h: WeightedHypergraph) -> float:
    vals = [disc_for_coloring(h, th) for th in _signs(h.m)]
    return sum(vals) / len(vals)


def ruc_expectation(a: CoeffTensor) -> tuple[float, float]:
    """(mean, min) over all cell sign patterns theta of linf_multiple(theta * a)."""
    arr = a.values
    vals = []
    for th in _signs(arr.size):
        vals.append(linf_multiple(CoeffTensor(arr * np.reshape(th, arr.shape))))
    return sum(vals) / len(vals), min(vals)


def decoupled_norm(a: SimplexCoeffs) -> float:
    """max over x^1..x^d of sum over distinct (j_1..j_d) of a_{sorted j} / d! * prod x^k_{j_k}."""
    n, d = a.n, a.d
    best = float("-inf")
    for xs in product(*[list(_signs(n)) for _ in range(d)]):
        total = 0.0
        for idx in product(range(n), repeat=d):
            if len(set(idx)) < d:
                continue
            v = a.values.get(tuple(sorted(j + 1 for j in idx)), 0.0)
            term = v / factorial(d)
            for k, i in enumerate(idx):
                term *= xs[k][i]
            total += term
        best = max(best, total)
    return best
