"""Discrepancy of edge-weighted graphs and uniform hypergraphs.

disc(h, theta) = max over vertex subsets V' of |sum of theta(e) w(e) over edges inside V'|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import (
    Coloring,
    InvariantError,
    WeightedHypergraph,
    chaos_coeffs,
)
from .norms import cut_norm_star
from .parallel import blocks, check_budget, pmap, reduce_min

COLORING_BLOCK = 1 << 12
MC_BLOCK = 1 << 10
SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class DiscResult:
    """``value`` is the discrepancy (exact modes) or the sample mean (Monte-Carlo).

    ``coloring``/``witness_subset`` describe the minimizing coloring for
    disc_exact, the evaluated one for disc_for_coloring and the best sampled
    one for Monte-Carlo; ``best`` is the best sampled disc.
    """

    value: float
    coloring: Coloring | None = None
    witness_subset: int | None = None
    stderr: float | None = None
    trials: int | None = None
    best: float | None = None


def signed_weights(h: WeightedHypergraph, theta: Coloring) -> WeightedHypergraph:
    if len(theta) != h.m:
        raise InvariantError(f"coloring has {len(theta)} signs for {h.m} edges")
    return h.with_weights(theta.as_array() * h.weights)


def subset_sum(h: WeightedHypergraph, theta: Coloring, subset: int) -> float:
    """Signed weight of the edges inside the vertex subset (bit-mask)."""
    masks = h.edge_masks
    inside = (masks & subset) == masks
    return float((theta.as_array() * h.weights)[inside].sum()) if h.m else 0.0


def disc_for_coloring(h: WeightedHypergraph, theta: Coloring, budget: int | None = None,
                      workers: int | None = 1) -> DiscResult:
    res = cut_norm_star(chaos_coeffs(signed_weights(h, theta)), budget=budget, workers=workers)
    return DiscResult(res.value, coloring=theta, witness_subset=res.witness["I"])


def _coloring_blocks(h: WeightedHypergraph, budget):
    check_budget((1 << max(h.m - 1, 0)) << h.n, budget)
    return blocks(1 << (h.m - 1), COLORING_BLOCK)


def disc_exact(h: WeightedHypergraph, budget: int | None = None, workers: int | None = 1) -> DiscResult:
    """min over colorings of disc_for_coloring.

    The first edge is pinned to +1 since disc(theta) = disc(-theta).  Ties
    go to the smallest coloring mask (bit e set means theta_e = +1).
    """
    if h.m == 0:
        return DiscResult(0.0, coloring=Coloring(()), witness_subset=0)
    emasks, w = h.edge_masks, h.weights
    parts = _coloring_blocks(h, budget)
    results = pmap(lambda b: _kernels.disc_block(emasks, w, h.n, b[0], b[1], True), parts, workers)
    _, mask = reduce_min((float(v), int(m)) for v, m in results)
    theta = Coloring.from_mask(mask, h.m)
    return disc_for_coloring(h, theta, budget=budget)


def expected_disc_exact(h: WeightedHypergraph, budget: int | None = None,
                        workers: int | None = 1) -> DiscResult:
    """Mean of disc_for_coloring over all 2^m colorings (uniform measure)."""
    if h.m == 0:
        return DiscResult(0.0)
    emasks, w = h.edge_masks, h.weights
    parts = _coloring_blocks(h, budget)
    results = pmap(lambda b: _kernels.disc_block(emasks, w, h.n, b[0], b[1], False), parts, workers)
    total = math.fsum(float(v) for v, _ in results)
    return DiscResult(total / (1 << (h.m - 1)))


def trial_coloring(m: int, seed: int, t: int) -> np.ndarray:
    """Signs for trial t: a Philox stream keyed by (seed, t), counter starting at 0."""
    key = (seed & SEED_MASK) | ((t & SEED_MASK) << 64)
    rng = np.random.Generator(np.random.Philox(key=key))
    return np.where(rng.integers(0, 2, size=m) == 1, 1.0, -1.0)


def disc_monte_carlo(h: WeightedHypergraph, trials: int, seed: int = 0, budget: int | None = None,
                     workers: int | None = 1) -> DiscResult:
    """Sample mean and standard error of disc over uniform random colorings.

    Also reports the smallest sampled disc (an upper bound on disc_exact) and
    its coloring.  Trial t depends only on (seed, t).
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    check_budget(1 << h.n, budget)
    m = h.m
    emasks, w = h.edge_masks, h.weights

    def run(b):
        thetas = np.array([trial_coloring(m, seed, t) for t in range(b[0], b[1])]).reshape(b[1] - b[0], m)
        return _kernels.disc_batch(emasks, w, h.n, thetas)

    parts = pmap(run, blocks(trials, MC_BLOCK), workers)
    values = np.concatenate([v for v, _ in parts])
    subsets = np.concatenate([s for _, s in parts])
    mean = math.fsum(values) / trials
    stderr = None
    if trials > 1:
        var = math.fsum((values - mean) ** 2) / (trials - 1)
        stderr = math.sqrt(var / trials)
    i = int(np.argmin(values))
    best_theta = Coloring(tuple(int(s) for s in trial_coloring(m, seed, i)))
    return DiscResult(mean, coloring=best_theta, witness_subset=int(subsets[i]), stderr=stderr,
                      trials=trials, best=float(values[i]))


def balance(h: WeightedHypergraph) -> float:
    """sum over vertices of the Euclidean norm of the incident edge weights."""
    sq = np.zeros(h.n)
    for verts, w in h.edges:
        for v in verts:
            sq[v] += w * w
    return float(np.sqrt(sq).sum())


def balance_two_block(h: WeightedHypergraph, left: int) -> float:
    """max of the left-block and right-block vertex sums, for bipartite graphs
    whose left block is vertices [0, left)."""
    sq = np.zeros(h.n)
    for verts, w in h.edges:
        for v in verts:
            sq[v] += w * w
    norms = np.sqrt(sq)
    return float(max(norms[:left].sum(), norms[left:].sum()))
