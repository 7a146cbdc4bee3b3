"""Pinned extremal instances.

``values`` are frozen results of the naive oracles (tests recompute them).
``attains`` names the constants an instance meets with equality; suites
assert the equality, so a constant that drifts in either direction fails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import CoeffTensor, SimplexCoeffs, WeightedHypergraph, build_complete

_u = np.array([1.0, -1.0])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    obj: object
    values: dict = field(default_factory=dict)
    attains: tuple[str, ...] = ()


CATALOG: tuple[CatalogEntry, ...] = (
    # tensors
    CatalogEntry("signed-2x2", CoeffTensor(np.outer(_u, _u)),
                 {"cut": 1.0, "opnorm": 4.0, "linf": 4.0, "ruc_mean": 3.0, "ruc_min": 2.0},
                 ("alon_naor", "szarek_min_theta")),
    CatalogEntry("signed-2x2x2", CoeffTensor(np.einsum("i,j,k->ijk", _u, _u, _u)),
                 {"cut": 1.0, "linf": 8.0, "ruc_mean": 5.25, "ruc_min": 4.0},
                 ("multi_sandwich",)),
    CatalogEntry("ones-2x2", CoeffTensor(np.ones((2, 2))),
                 {"cut": 4.0, "opnorm": 4.0, "linf": 4.0, "ruc_mean": 3.0, "ruc_min": 2.0},
                 ("szarek_min_theta",)),
    CatalogEntry("ones-2x2x2", CoeffTensor(np.ones((2, 2, 2))),
                 {"cut": 8.0, "linf": 8.0, "ruc_mean": 5.25, "ruc_min": 4.0}),
    CatalogEntry("zero-2x2", CoeffTensor(np.zeros((2, 2))),
                 {"cut": 0.0, "opnorm": 0.0, "linf": 0.0, "ruc_mean": 0.0, "ruc_min": 0.0}),
    CatalogEntry("scalar-1x1", CoeffTensor([[1.5]]),
                 {"cut": 1.5, "opnorm": 1.5, "linf": 1.5, "ruc_mean": 1.5, "ruc_min": 1.5}),
    # Rademacher coefficient vectors
    CatalogEntry("pair-ones", CoeffTensor([1.0, 1.0]), {"l1": 1.0, "l2": math.sqrt(2.0)}, ("szarek",)),
    CatalogEntry("single", CoeffTensor([1.0]), {"l1": 1.0, "l2": 1.0}, ("khintchine",)),
    # chaos coefficients
    CatalogEntry("edge-12", SimplexCoeffs(2, 2, {(1, 2): 1.0}),
                 {"cut_star": 1.0, "chaos": 1.0, "decoupled": 1.0}),
    CatalogEntry("k3-unit", SimplexCoeffs(2, 3, {(1, 2): 1.0, (1, 3): 1.0, (2, 3): 1.0}),
                 {"cut_star": 3.0, "chaos": 3.0, "decoupled": 3.0}),
    CatalogEntry("k3-signed", SimplexCoeffs(2, 3, {(1, 2): 1.0, (1, 3): 1.0, (2, 3): -1.0}),
                 {"cut_star": 1.0, "chaos": 3.0, "decoupled": 3.0}),
    CatalogEntry("triple-123", SimplexCoeffs(3, 3, {(1, 2, 3): 1.0}),
                 {"cut_star": 1.0, "chaos": 1.0, "decoupled": 1.0}),
    CatalogEntry("h43-unit", SimplexCoeffs(3, 4, {k: 1.0 for k in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]}),
                 {"cut_star": 4.0, "chaos": 4.0, "decoupled": 4.0}),
    # graphs
    CatalogEntry("k3", build_complete(3, 2), {"disc": 1.0, "expected": 1.5}),
    CatalogEntry("k4", build_complete(4, 2), {"disc": 1.0, "expected": 2.8125}),
    CatalogEntry("single-edge", WeightedHypergraph(2, 2, (((0, 1), 2.0),)), {"disc": 2.0, "expected": 2.0}),
    CatalogEntry("two-disjoint-edges", WeightedHypergraph(4, 2, (((0, 1), 1.0), ((2, 3), 1.0))),
                 {"disc": 1.0, "expected": 1.5}),
)


def entries(kind: type) -> list[CatalogEntry]:
    return [e for e in CATALOG if isinstance(e.obj, kind)]
