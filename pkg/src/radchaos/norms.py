"""Exact norms by exhaustive sign/subset enumeration.

The last index family is always resolved in closed form: for sign vectors
the best last vector takes the signs of the slice sums (sum of absolute
values), for subsets the best last set is the positive or the negative
support.  For order 2 the remaining enumeration runs in Gray-code order with
single-flip updates (see ``_kernels``); higher orders evaluate blocks of
configurations with numpy contractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from . import _kernels
from .core import (
    BudgetExceeded,
    CoeffTensor,
    InvariantError,
    MixedNormProfile,
    SimplexCoeffs,
    mask_to_indicator,
    mask_to_signs,
    signs_to_mask,
    indicator_to_mask,
)
from .parallel import TIE_RTOL, blocks, check_budget, pmap, reduce_max

GRAY_BLOCK = 1 << 14
NUMPY_BLOCK = 1 << 11
LP_MAX_TERMS = 24


@dataclass(frozen=True)
class NormResult:
    """A maximum together with the configuration attaining it.

    ``witness`` maps a name to a bit-mask: subsets use bit j for member j,
    sign vectors use bit j for a +1 at position j.
    """

    value: float
    witness: dict[str, int] = field(default_factory=dict)


# --------------------------------------------------------------------------
# objective evaluators (used to re-derive every reported value from its witness)


def multilinear_value(a: np.ndarray, vectors) -> float:
    out = np.asarray(a, dtype=float)
    for x in vectors:
        out = np.tensordot(np.asarray(x, dtype=float), out, axes=(0, 0))
    return float(out)


def cut_value(a: np.ndarray, subsets) -> float:
    sub = np.asarray(a, dtype=float)[np.ix_(*[np.asarray(s, dtype=bool) for s in subsets])]
    return abs(float(sub.sum()))


def star_value(s: SimplexCoeffs, members) -> float:
    members = np.asarray(members, dtype=bool)
    keys = s.keys_array()
    if len(keys) == 0:
        return 0.0
    inside = members[keys].all(axis=1)
    return abs(float(s.coeffs_array() @ inside))


def chaos_value(s: SimplexCoeffs, eps) -> float:
    eps = np.asarray(eps, dtype=float)
    keys = s.keys_array()
    if len(keys) == 0:
        return 0.0
    return abs(float(s.coeffs_array() @ eps[keys].prod(axis=1)))


# --------------------------------------------------------------------------
# enumeration drivers


def _run_gray(kernel, arr, nbits, workers):
    total = 1 << nbits
    results = pmap(lambda blk: kernel(arr, blk[0], blk[1]), blocks(total, GRAY_BLOCK), workers)
    return reduce_max((float(v), int(m)) for v, m in results)


def _pick(vals: np.ndarray, masks: np.ndarray) -> tuple[float, int]:
    top = vals.max()
    i = int(np.flatnonzero(vals >= top - TIE_RTOL * abs(top))[0])
    return float(vals[i]), int(masks[i])


def _last_axis_sums(arr: np.ndarray, start: int, stop: int, signs: bool) -> tuple[np.ndarray, np.ndarray]:
    """Contract every axis but the last against the configurations start..stop-1.

    Axis k owns the bit range following axes 0..k-1.  Returns the masks and the
    resulting last-axis vectors, shape (stop-start, n_d).
    """
    masks = np.arange(start, stop, dtype=np.int64)
    b = len(masks)
    cur = None
    off = 0
    for k, nk in enumerate(arr.shape[:-1]):
        bits = ((masks[:, None] >> (off + np.arange(nk))) & 1).astype(float)
        vec = 2.0 * bits - 1.0 if signs else bits
        if k == 0:
            cur = vec @ arr.reshape(nk, -1)
        else:
            cur = np.einsum("bi,bir->br", vec, cur.reshape(b, nk, -1))
        off += nk
    return masks, cur


def _split_mask(mask: int, dims) -> list[int]:
    out, off = [], 0
    for nk in dims:
        out.append((mask >> off) & ((1 << nk) - 1))
        off += nk
    return out


def _bit_blocks(nbits: int, budget, workers, fn):
    total = 1 << nbits
    check_budget(total, budget)
    return reduce_max(pmap(fn, blocks(total, NUMPY_BLOCK), workers))


def _require_tensor(a) -> CoeffTensor:
    if not isinstance(a, CoeffTensor):
        a = CoeffTensor(np.asarray(a, dtype=float))
    return a


# --------------------------------------------------------------------------
# public norms


def opnorm_inf_to_1(a: CoeffTensor, budget: int | None = None, workers: int | None = 1) -> NormResult:
    """Norm of the matrix as an operator l_inf^m -> l_1^n.

    Enumerates column signs x; the row signs are the signs of A x.
    """
    a = _require_tensor(a)
    if a.d != 2:
        raise InvariantError(f"operator norm needs an order-2 tensor, got order {a.d}")
    arr = np.ascontiguousarray(a.values)
    n, m = arr.shape
    check_budget(1 << m, budget)
    _, mask = _run_gray(_kernels.absrow_block, arr, m, workers)
    x = mask_to_signs(mask, m)
    s = arr @ x
    y = np.where(s >= 0, 1.0, -1.0)
    return NormResult(float(np.abs(s).sum()), {"x": mask, "y": signs_to_mask(y)})


def linf_multiple(a: CoeffTensor, budget: int | None = None, workers: int | None = 1) -> NormResult:
    """Sup-norm of sum a_j r_{j1}(t1)...r_{jd}(td) over the cube.

    Equals the max of the multilinear form over sign vectors x1..xd; witness
    keys are ``x1``..``xd``.
    """
    a = _require_tensor(a)
    arr = np.ascontiguousarray(a.values)
    d = a.d
    if d == 1:
        x = np.where(arr >= 0, 1.0, -1.0)
        return NormResult(float(np.abs(arr).sum()), {"x1": signs_to_mask(x)})
    head = a.dims[:-1]
    nbits = sum(head)
    if d == 2:
        check_budget(1 << nbits, budget)
        _, mask = _run_gray(_kernels.absrow_block, np.ascontiguousarray(arr.T), nbits, workers)
        masks = [mask]
    else:
        def block(blk):
            ms, last = _last_axis_sums(arr, blk[0], blk[1], signs=True)
            return _pick(np.abs(last).sum(axis=1), ms)

        _, mask = _bit_blocks(nbits, budget, workers, block)
        masks = _split_mask(mask, head)
    xs = [mask_to_signs(mk, nk) for mk, nk in zip(masks, head)]
    last = arr
    for x in xs:
        last = np.tensordot(x, last, axes=(0, 0))
    x_last = np.where(last >= 0, 1.0, -1.0)
    xs.append(x_last)
    witness = {f"x{k + 1}": signs_to_mask(x) for k, x in enumerate(xs)}
    return NormResult(abs(multilinear_value(arr, xs)), witness)


def cut_norm(a: CoeffTensor, budget: int | None = None, workers: int | None = 1) -> NormResult:
    """max over index sets I1..Id of |sum of the sub-array|; empty sets allowed.

    Witness keys ``I1``..``Id``.
    """
    a = _require_tensor(a)
    if a.d < 2:
        raise InvariantError("cut norm needs order >= 2")
    arr = np.ascontiguousarray(a.values)
    head = a.dims[:-1]
    nbits = sum(head)
    if a.d == 2:
        check_budget(1 << nbits, budget)
        _, mask = _run_gray(_kernels.cutrow_block, arr, nbits, workers)
        masks = [mask]
    else:
        def block(blk):
            ms, last = _last_axis_sums(arr, blk[0], blk[1], signs=False)
            pos = np.where(last > 0, last, 0.0).sum(axis=1)
            neg = -np.where(last < 0, last, 0.0).sum(axis=1)
            return _pick(np.maximum(pos, neg), ms)

        _, mask = _bit_blocks(nbits, budget, workers, block)
        masks = _split_mask(mask, head)
    sets = [mask_to_indicator(mk, nk) for mk, nk in zip(masks, head)]
    last = arr
    for z in sets:
        last = np.tensordot(z, last, axes=(0, 0))
    pos = last[last > 0].sum()
    neg = -last[last < 0].sum()
    sets.append((last > 0) if pos >= neg else (last < 0))
    witness = {f"I{k + 1}": indicator_to_mask(z) for k, z in enumerate(sets)}
    return NormResult(cut_value(arr, sets), witness)


def cut_norm_star(a: SimplexCoeffs, budget: int | None = None, workers: int | None = 1) -> NormResult:
    """max over I of |sum of a_j over increasing tuples inside I|; witness ``I``."""
    n = a.n
    check_budget(1 << n, budget)
    if not a.values:
        return NormResult(0.0, {"I": 0})
    if a.d == 2:
        _, mask = _run_gray(_kernels.star_block, a.symmetric_matrix(), n, workers)
    else:
        keys, vals = a.keys_array(), a.coeffs_array()

        def block(blk):
            ms = np.arange(blk[0], blk[1], dtype=np.int64)
            z = ((ms[:, None] >> np.arange(n)) & 1).astype(bool)
            return _pick(np.abs(z[:, keys].all(axis=2) @ vals), ms)

        _, mask = reduce_max(pmap(block, blocks(1 << n, NUMPY_BLOCK), workers))
    return NormResult(star_value(a, mask_to_indicator(mask, n)), {"I": mask})


def linf_chaos(a: SimplexCoeffs, budget: int | None = None, workers: int | None = 1) -> NormResult:
    """Sup-norm of the chaos sum = max over eps of |sum a_j eps_j1...eps_jd|; witness ``eps``."""
    n = a.n
    check_budget(1 << n, budget)
    if not a.values:
        return NormResult(0.0, {"eps": 0})
    if a.d == 2:
        _, mask = _run_gray(_kernels.chaos_block, a.symmetric_matrix(), n, workers)
    else:
        keys, vals = a.keys_array(), a.coeffs_array()

        def block(blk):
            ms = np.arange(blk[0], blk[1], dtype=np.int64)
            eps = np.where((ms[:, None] >> np.arange(n)) & 1, 1.0, -1.0)
            return _pick(np.abs(eps[:, keys].prod(axis=2) @ vals), ms)

        _, mask = reduce_max(pmap(block, blocks(1 << n, NUMPY_BLOCK), workers))
    return NormResult(chaos_value(a, mask_to_signs(mask, n)), {"eps": mask})


def lp_rademacher_exact(a, p: float) -> float:
    """Exact L_p norm of sum a_j r_j: the p-th power mean of |sum a_j eps_j| over all 2^k signs."""
    a = np.asarray(a, dtype=float).ravel()
    k = len(a)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if k > LP_MAX_TERMS:
        raise BudgetExceeded(1 << k, 1 << LP_MAX_TERMS)
    if k == 0:
        return 0.0
    if math.isinf(p):
        return float(np.abs(a).sum())
    # meet in the middle: all sums of the low half against chunks of the high half
    half = k // 2
    lo = _all_sign_sums(a[:half])
    hi = _all_sign_sums(a[half:])
    chunk = max(1, (1 << 20) // len(lo))
    acc = 0.0
    for s in range(0, len(hi), chunk):
        tot = np.abs(hi[s : s + chunk, None] + lo[None, :])
        acc += float((tot if p == 1 else tot**p).sum())
    mean = acc / (1 << k)
    return mean if p == 1 else mean ** (1.0 / p)


def _all_sign_sums(a: np.ndarray) -> np.ndarray:
    sums = np.zeros(1)
    for x in a:
        sums = np.concatenate([sums + x, sums - x])
    return sums


def decouple(a: SimplexCoeffs) -> CoeffTensor:
    """Symmetric order-d tensor with a_{sorted(j)}/d! on distinct-index cells, zero elsewhere."""
    out = np.zeros((a.n,) * a.d)
    scale = 1.0 / math.factorial(a.d)
    for key, v in a.values.items():
        idx = tuple(j - 1 for j in key)
        for perm in permutations(idx):
            out[perm] = v * scale
    return CoeffTensor(out)


def mixed_norm_profile(a) -> MixedNormProfile:
    """M_k = sum_l ||slice with j_k = l||_2 for each axis k.

    SimplexCoeffs use their upper (increasing-index) dense embedding.
    """
    arr = a.upper_dense() if isinstance(a, SimplexCoeffs) else _require_tensor(a).values
    sq = arr**2
    out = []
    for k in range(arr.ndim):
        other = tuple(i for i in range(arr.ndim) if i != k)
        out.append(float(np.sqrt(sq.sum(axis=other)).sum()) if other else float(np.abs(arr).sum()))
    return MixedNormProfile(tuple(out))
