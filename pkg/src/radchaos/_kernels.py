"""Compiled Gray-code enumeration loops.

Each block kernel walks Gray-code indices ``start <= idx < stop``; the
configuration visited at idx is the bit-mask ``idx ^ (idx >> 1)`` and
consecutive indices differ in bit ``ctz(idx)``.  State is rebuilt from scratch
at ``start`` so blocks are independent.
"""

import numpy as np
from numba import njit

TIE_RTOL = 1e-12


@njit(cache=True, nogil=True)
def _ctz(x):
    k = 0
    while (x & 1) == 0:
        x >>= 1
        k += 1
    return k


@njit(cache=True, nogil=True)
def _beats(v, mask, best, best_mask):
    tol = TIE_RTOL * max(abs(v), abs(best))
    if v > best + tol:
        return True
    return v >= best - tol and mask < best_mask


@njit(cache=True, nogil=True)
def absrow_block(a, start, stop):
    """max over x in {+-1}^m of sum_i |(a x)_i|; bit j of the mask is x_j = +1."""
    n, m = a.shape
    g = start ^ (start >> 1)
    x = np.empty(m)
    for j in range(m):
        x[j] = 1.0 if (g >> j) & 1 else -1.0
    s = np.zeros(n)
    for i in range(n):
        acc = 0.0
        for j in range(m):
            acc += a[i, j] * x[j]
        s[i] = acc
    best = 0.0
    for i in range(n):
        best += abs(s[i])
    best_mask = g
    for idx in range(start + 1, stop):
        j = _ctz(idx)
        step = -2.0 * x[j]
        for i in range(n):
            s[i] += step * a[i, j]
        x[j] = -x[j]
        g ^= 1 << j
        v = 0.0
        for i in range(n):
            v += abs(s[i])
        if _beats(v, g, best, best_mask):
            best = v
            best_mask = g
    return best, best_mask


@njit(cache=True, nogil=True)
def cutrow_block(a, start, stop):
    """max over row subsets I of max(sum of positive, -sum of negative) column sums."""
    n, m = a.shape
    g = start ^ (start >> 1)
    c = np.zeros(m)
    for i in range(n):
        if (g >> i) & 1:
            for j in range(m):
                c[j] += a[i, j]
    pos = 0.0
    neg = 0.0
    for j in range(m):
        if c[j] > 0:
            pos += c[j]
        else:
            neg -= c[j]
    best = max(pos, neg)
    best_mask = g
    for idx in range(start + 1, stop):
        i = _ctz(idx)
        g ^= 1 << i
        sgn = 1.0 if (g >> i) & 1 else -1.0
        pos = 0.0
        neg = 0.0
        for j in range(m):
            c[j] += sgn * a[i, j]
            if c[j] > 0:
                pos += c[j]
            else:
                neg -= c[j]
        v = max(pos, neg)
        if _beats(v, g, best, best_mask):
            best = v
            best_mask = g
    return best, best_mask


@njit(cache=True, nogil=True)
def star_block(s, start, stop):
    """max over vertex subsets I of |sum_{i<j in I} a_ij|, s symmetric with zero diagonal.

    gvec[u] tracks sum_{w in I} s[u, w]; adding v to I raises the total by gvec[v].
    """
    n = s.shape[0]
    g = start ^ (start >> 1)
    gvec = np.zeros(n)
    total = 0.0
    for v in range(n):
        if (g >> v) & 1:
            total += gvec[v]
            for u in range(n):
                gvec[u] += s[u, v]
    best = abs(total)
    best_mask = g
    for idx in range(start + 1, stop):
        v = _ctz(idx)
        g ^= 1 << v
        if (g >> v) & 1:
            total += gvec[v]
            for u in range(n):
                gvec[u] += s[u, v]
        else:
            for u in range(n):
                gvec[u] -= s[u, v]
            total -= gvec[v]
        val = abs(total)
        if _beats(val, g, best, best_mask):
            best = val
            best_mask = g
    return best, best_mask


@njit(cache=True, nogil=True)
def chaos_block(s, start, stop):
    """max over eps in {+-1}^n of |sum_{i<j} a_ij eps_i eps_j| = |eps' s eps| / 2.

    Flipping eps_v changes the sum by -2 eps_v (s eps)_v.
    """
    n = s.shape[0]
    g = start ^ (start >> 1)
    eps = np.empty(n)
    for v in range(n):
        eps[v] = 1.0 if (g >> v) & 1 else -1.0
    gvec = np.zeros(n)
    for u in range(n):
        acc = 0.0
        for v in range(n):
            acc += s[u, v] * eps[v]
        gvec[u] = acc
    total = 0.0
    for u in range(n):
        total += eps[u] * gvec[u]
    total *= 0.5
    best = abs(total)
    best_mask = g
    for idx in range(start + 1, stop):
        v = _ctz(idx)
        step = -2.0 * eps[v]
        total += step * gvec[v]
        for u in range(n):
            gvec[u] += step * s[u, v]
        eps[v] = -eps[v]
        g ^= 1 << v
        val = abs(total)
        if _beats(val, g, best, best_mask):
            best = val
            best_mask = g
    return best, best_mask


@njit(cache=True, nogil=True)
def _subset_sums(emasks, signed, n):
    size = 1 << n
    sums = np.zeros(size)
    for sub in range(size):
        acc = 0.0
        for e in range(emasks.shape[0]):
            if (sub & emasks[e]) == emasks[e]:
                acc += signed[e]
        sums[sub] = acc
    return sums


@njit(cache=True, nogil=True)
def disc_block(emasks, w, n, start, stop, minimize):
    """Walk colorings of edges 1..m-1 (edge 0 fixed to +1) in Gray order.

    Keeps the signed sum of every vertex subset; flipping edge e touches only
    the supersets of e.  ``minimize`` returns (min disc, coloring mask);
    otherwise (sum of disc over the block, 0).  Coloring bit e set is theta_e = +1.
    """
    m = emasks.shape[0]
    size = 1 << n
    full = size - 1
    g = start ^ (start >> 1)
    theta = np.empty(m)
    theta[0] = 1.0
    for e in range(1, m):
        theta[e] = 1.0 if (g >> (e - 1)) & 1 else -1.0
    signed = theta * w
    sums = _subset_sums(emasks, signed, n)
    best = np.inf
    best_mask = -1
    total = 0.0
    for idx in range(start, stop):
        if idx > start:
            b = _ctz(idx)
            e = b + 1
            delta = -2.0 * theta[e] * w[e]
            theta[e] = -theta[e]
            g ^= 1 << b
            em = emasks[e]
            comp = full & ~em
            sub = comp
            while True:
                sums[em | sub] += delta
                if sub == 0:
                    break
                sub = (sub - 1) & comp
        cur = 0.0
        if minimize:
            cutoff = best + TIE_RTOL * abs(best) if best_mask >= 0 else np.inf
            pruned = False
            for sub in range(size):
                a = abs(sums[sub])
                if a > cur:
                    cur = a
                    if cur > cutoff:
                        pruned = True
                        break
            if not pruned:
                mask = 1 | (g << 1)
                if best_mask < 0 or _beats(-cur, mask, -best, best_mask):
                    best = cur
                    best_mask = mask
        else:
            for sub in range(size):
                a = abs(sums[sub])
                if a > cur:
                    cur = a
            total += cur
    if minimize:
        return best, best_mask
    return total, 0


@njit(cache=True, nogil=True)
def disc_batch(emasks, w, n, thetas):
    """disc_for_coloring for each row of ``thetas`` by Gray walk over vertex subsets.

    Moving vertex v changes the subset sum by the signed weights of edges
    through v whose other vertices are already present.
    """
    trials, m = thetas.shape
    values = np.empty(trials)
    witnesses = np.empty(trials, dtype=np.int64)
    size = 1 << n
    for t in range(trials):
        signed = thetas[t] * w
        cur = 0.0
        g = 0
        best = 0.0
        best_mask = 0
        for idx in range(1, size):
            v = _ctz(idx)
            bit = 1 << v
            if g & bit:
                g ^= bit
                for e in range(m):
                    if (emasks[e] & bit) and (emasks[e] & ~bit & ~g) == 0:
                        cur -= signed[e]
            else:
                for e in range(m):
                    if (emasks[e] & bit) and (emasks[e] & ~bit & ~g) == 0:
                        cur += signed[e]
                g ^= bit
            val = abs(cur)
            if _beats(val, g, best, best_mask):
                best = val
                best_mask = g
        values[t] = best
        witnesses[t] = best_mask
    return values, witnesses
