"""Compiled fast paths for the orbit probe and the exhaustive census.

These replicate the pure-Python steppers in uint64 arithmetic so that
width-16/32 orbits (tens of millions of steps) finish in seconds; the test
suite asserts bit-equality against the canonical classes before anything
here is trusted.  Golden vectors never come from this module.
"""

import numpy as np
from numba import njit

_U1 = np.uint64(1)


@njit(cache=True)
def brent_a(x0, a0, w0, s, mask, budget):
    """Brent orbit scan of the A-shape state map (x, a, weyl) at width<=32.

    Returns (tail, cycle, evals, status); status 1 means budget exhausted.
    """
    tx, ta, tw = x0, a0, w0
    hx, ha, hw = x0, a0, w0
    # one step for the hare
    ha = (ha + hx) & mask
    hx = (((hx >> _U1) * (ha | _U1)) & mask) ^ ((hw + s) & mask)
    hw = (hw + s) & mask
    evals = _U1
    power = _U1
    lam = _U1
    while not (tx == hx and ta == ha and tw == hw):
        if power == lam:
            tx, ta, tw = hx, ha, hw
            power += power
            lam = np.uint64(0)
        ha = (ha + hx) & mask
        t = ((hx >> _U1) * (ha | _U1)) & mask
        hw = (hw + s) & mask
        hx = t ^ hw
        evals += _U1
        lam += _U1
        if evals > budget:
            return np.uint64(0), lam, evals, np.uint64(1)
    tx, ta, tw = x0, a0, w0
    hx, ha, hw = x0, a0, w0
    for _ in range(lam):
        ha = (ha + hx) & mask
        t = ((hx >> _U1) * (ha | _U1)) & mask
        hw = (hw + s) & mask
        hx = t ^ hw
    evals += lam
    if evals > budget:
        return np.uint64(0), lam, evals, np.uint64(1)
    mu = np.uint64(0)
    while not (tx == hx and ta == ha and tw == hw):
        ta = (ta + tx) & mask
        t = ((tx >> _U1) * (ta | _U1)) & mask
        tw = (tw + s) & mask
        tx = t ^ tw
        ha = (ha + hx) & mask
        t = ((hx >> _U1) * (ha | _U1)) & mask
        hw = (hw + s) & mask
        hx = t ^ hw
        mu += _U1
        evals += np.uint64(2)
        if evals > budget:
            return mu, lam, evals, np.uint64(1)
    return mu, lam, evals, np.uint64(0)


@njit(cache=True)
def brent_b(x0, a0, w0, s, mask, mask2, budget):
    """Brent orbit scan of the B-shape map (2n-bit x) at width<=32."""
    tx, ta, tw = x0, a0, w0
    hx, ha, hw = x0, a0, w0
    ha = (ha + hx) & mask
    hw = (hw + s) & mask
    hx = (((hx | _U1) * (ha >> _U1)) & mask2) ^ hw
    evals = _U1
    power = _U1
    lam = _U1
    while not (tx == hx and ta == ha and tw == hw):
        if power == lam:
            tx, ta, tw = hx, ha, hw
            power += power
            lam = np.uint64(0)
        ha = (ha + hx) & mask
        t = ((hx | _U1) * (ha >> _U1)) & mask2
        hw = (hw + s) & mask
        hx = t ^ hw
        evals += _U1
        lam += _U1
        if evals > budget:
            return np.uint64(0), lam, evals, np.uint64(1)
    tx, ta, tw = x0, a0, w0
    hx, ha, hw = x0, a0, w0
    for _ in range(lam):
        ha = (ha + hx) & mask
        t = ((hx | _U1) * (ha >> _U1)) & mask2
        hw = (hw + s) & mask
        hx = t ^ hw
    evals += lam
    if evals > budget:
        return np.uint64(0), lam, evals, np.uint64(1)
    mu = np.uint64(0)
    while not (tx == hx and ta == ha and tw == hw):
        ta = (ta + tx) & mask
        t = ((tx | _U1) * (ta >> _U1)) & mask2
        tw = (tw + s) & mask
        tx = t ^ tw
        ha = (ha + hx) & mask
        t = ((hx | _U1) * (ha >> _U1)) & mask2
        hw = (hw + s) & mask
        hx = t ^ hw
        mu += _U1
        evals += np.uint64(2)
        if evals > budget:
            return mu, lam, evals, np.uint64(1)
    return mu, lam, evals, np.uint64(0)


@njit(cache=True)
def census_a8(s):
    """Decompose the full 2^24-state functional graph of CwgA(8).

    Returns (component count, cycle lengths, component sizes, per-state
    distance-to-cycle, per-state component id).
    """
    N = 1 << 24
    comp = np.full(N, -1, np.int32)   # -1 unvisited, -2 on current path
    dist = np.zeros(N, np.int32)
    path = np.empty(N, np.int32)
    cyc_len = np.zeros(1 << 16, np.int64)   # a cycle needs >= 256 states
    comp_nodes = np.zeros(1 << 16, np.int64)
    ncomp = 0
    for v0 in range(N):
        if comp[v0] != -1:
            continue
        v = v0
        length = 0
        while comp[v] == -1:
            comp[v] = -2
            path[length] = v
            length += 1
            x = v & 255
            a = ((v >> 8) + x) & 255
            t = ((x >> 1) * (a | 1)) & 255
            w = ((v >> 16) + s) & 255
            x = t ^ w
            v = x | (a << 8) | (w << 16)
        if comp[v] == -2:
            # closed a brand-new cycle: locate its entry point on the path
            i = length - 1
            while path[i] != v:
                i -= 1
            cid = ncomp
            ncomp += 1
            cyc_len[cid] = length - i
            for j in range(i, length):
                u = path[j]
                comp[u] = cid
                dist[u] = 0
            for j in range(i - 1, -1, -1):
                u = path[j]
                comp[u] = cid
                dist[u] = i - j
        else:
            cid = comp[v]
            base = dist[v]
            for j in range(length - 1, -1, -1):
                u = path[j]
                comp[u] = cid
                dist[u] = base + (length - j)
        comp_nodes[cid] += length
    return ncomp, cyc_len[:ncomp], comp_nodes[:ncomp], dist, comp
