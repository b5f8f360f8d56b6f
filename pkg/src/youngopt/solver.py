"""Polynomial-time optimization over Young diagrams by a layered shortest-path DP.

A diagram of type k is a walk through k layers.  The state reached after
layer i is ``(i, c_i, r_{i+1}, n_i)``: c_i rows placed so far, the length
r_{i+1} of the next (shorter) row block, and the n_i cells used.  Moving from
layer i-1 to layer i appends ``c_i - c_{i-1}`` rows of length r_i and closes
``r_i - r_{i+1}`` columns of height c_i, costing

    (c_i - c_{i-1}) * f(r_i) + (r_i - r_{i+1}) * f*(c_i).

A walk ending in ``(k, c_k, 0, n)`` spells out one diagram with n cells, and
its length is exactly f(λ) + f*(λ*).  The walk graph is never built: each
layer is relaxed from the previous one.  The relaxation over all (c_i, r_{i+1})
pairs is split into two unit-step scans (add one row at a time, then drop one
column length at a time), which visits every candidate edge implicitly in
O(1) amortized work per state.

Ties are broken toward the lexicographically smallest partition.  Two walks
reaching the same state have prefixes of the same length c_i, and their
lexicographic order equals the order of the label sequence
(r_1, c_1, r_2, ..., c_{i-1}, r_i).  Each layer therefore ranks its states by
(rank of predecessor, c_i, r_{i+1}) and candidates compare by (cost, rank).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

from .core import (
    FuncTable,
    InputError,
    Partition,
    TypedDiagram,
    _check_tables,
    check_int64,
    from_typed,
    max_type,
    preference_key,
    type_of,
)

#: Default ceiling on n; keeps every path length well inside 64 bits.
DEFAULT_MAX_N = 2000


@dataclass(frozen=True)
class DpState:
    """A reached state ``(layer, c, r_next, cells)`` with its best path cost."""

    layer: int
    c: int
    r_next: int
    cells: int
    cost: int
    pred: Optional["DpState"] = None


@dataclass(frozen=True)
class SolveResult:
    partition: Partition
    conjugate: Partition
    k: int
    value: int

    @property
    def n(self) -> int:
        return self.partition.n


def transition_cost(c_prev, c_i, r_i, r_next, f: FuncTable, fstar: FuncTable) -> int:
    """Length of the edge that appends ``c_i - c_prev`` rows of length ``r_i``
    and closes ``r_i - r_next`` columns of height ``c_i``."""
    assert c_i > c_prev >= 0 and r_i > r_next >= 0
    cost = (c_i - c_prev) * f(r_i) + (r_i - r_next) * fstar(c_i)
    assert -(2**63) <= cost < 2**63, "edge length overflows 64 bits"
    return cost


def _sweep(n, f, fstar, k=None):
    """Forward relaxation.

    With ``k=None`` all types share one pass (the first layers are identical
    for every k) and finishing states are collected at every layer up to
    max_type(n).  With ``k`` given, only walks of exactly k layers survive and
    states that cannot be completed in the remaining layers are pruned.

    Returns ``(layers, finals)``: ``layers[i]`` maps each state
    ``(c, r_next, cells)`` to ``(cost, pred_state)``; ``finals[i]`` lists the
    finishing states ``(c_k, 0, n)`` reached at layer i.
    """
    fv = (0,) + f.values
    fsv = (0,) + fstar.values
    last = max_type(n) if k is None else k

    def keep(i, c, r_next, m):
        if k is None:
            return m + r_next <= n
        left = k - i
        return (
            r_next >= left
            and m + r_next + (left - 1) * left // 2 <= n
            and (n - c) * r_next >= n - m
        )

    # working entries are (cost, tie_rank, origin_state)
    current = {}
    for r in range(1, n + 1):
        if keep(0, 0, r, 0):
            current[(0, r, 0)] = (0, r, None)
    layers = [{s: (0, None) for s in current}]
    finals = {}

    for i in range(1, last + 1):
        if not current:
            break
        # Rows step: rows[(c', r, m')] = min over c < c' of A(c, r, m) + (c' - c) f(r).
        # Chains move by (+1 row, +r cells), so group seeds by (r, m - c*r).
        chains = defaultdict(dict)
        for (c, r, m), (cost, rank, _) in current.items():
            chains[(r, m - c * r)][c] = (cost, rank, (c, r, m))
        rows = defaultdict(dict)
        for (r, base), seeds in chains.items():
            fr = fv[r]
            best = None
            c = min(seeds)
            while True:
                seed = seeds.get(c)
                if seed is not None and (best is None or seed < best):
                    best = seed
                c += 1
                m = base + c * r
                if m > n:
                    break
                best = (best[0] + fr, best[1], best[2])
                rows[(c, m)][r] = best

        # Columns step: next[(c, r'', m)] = min over r > r'' of rows(c, r, m) + (r - r'') f*(c).
        nxt = {}
        final_here = []
        for (c, m), by_r in rows.items():
            fsc = fsv[c]
            best = None
            for r in range(max(by_r), 0, -1):
                cand = by_r.get(r)
                if cand is not None and (best is None or cand < best):
                    best = cand
                best = (best[0] + fsc, best[1], best[2])
                r_next = r - 1
                if r_next == 0:
                    if m == n and (k is None or i == k):
                        final_here.append(((c, 0, m), best[0], best[2]))
                elif (k is None or i < k) and keep(i, c, r_next, m):
                    nxt[(c, r_next, m)] = best

        if final_here:
            finals[i] = final_here
        order = sorted(nxt, key=lambda s: (nxt[s][1], s[0], s[1]))
        current = {s: (nxt[s][0], rank, nxt[s][2]) for rank, s in enumerate(order)}
        layers.append({s: (e[0], e[2]) for s, e in current.items()})
    return layers, finals


def _materialize(layers, layer, state, cost, pred_key) -> DpState:
    pred = None
    if pred_key is not None:
        pcost, ppred = layers[layer - 1][pred_key]
        pred = _materialize(layers, layer - 1, pred_key, pcost, ppred)
    c, r_next, cells = state
    return DpState(layer, c, r_next, cells, check_int64(cost, "path length"), pred)


def final_states(n: int, f: FuncTable, fstar: FuncTable, k: Optional[int] = None) -> dict[int, list[DpState]]:
    """All reached finishing states ``(i, c_i, 0, n)`` grouped by type i.

    Each finishing state is one in-edge of the sink; its cost is the best
    walk length into that state.  Pass ``k`` to restrict to a single type.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    _check_tables(n, f, fstar)
    if k is not None and k * (k + 1) // 2 > n:
        return {}
    layers, finals = _sweep(n, f, fstar, k)
    return {
        i: [_materialize(layers, i, s, cost, pred) for s, cost, pred in entries]
        for i, entries in finals.items()
    }


def reconstruct(final_state: DpState) -> TypedDiagram:
    """Recover (r_1..r_k, c_1..c_k) by walking predecessor links."""
    if final_state.r_next != 0:
        raise InputError("reconstruct needs a finishing state (r_next = 0)")
    chain = []
    s = final_state
    while s is not None:
        chain.append(s)
        s = s.pred
    chain.reverse()
    if chain[0].layer != 0 or len(chain) != final_state.layer + 1:
        raise InputError("predecessor chain does not lead back to layer 0")
    r = tuple(s.r_next for s in chain[:-1])
    c = tuple(s.c for s in chain[1:])
    return TypedDiagram(r, c)


def _result(state: DpState) -> SolveResult:
    lam, lam_star = from_typed(reconstruct(state))
    return SolveResult(lam, lam_star, type_of(lam), state.cost)


def _best(states) -> Optional[SolveResult]:
    states = list(states)
    if not states:
        return None
    low = min(s.cost for s in states)
    results = [_result(s) for s in states if s.cost == low]
    return min(results, key=lambda res: preference_key(res.value, res.partition))


def _check_n(n, max_n):
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if n > max_n:
        raise InputError(f"n = {n} exceeds the configured maximum {max_n}")


def solve_for_type(
    n: int, k: int, f: FuncTable, fstar: FuncTable, max_n: int = DEFAULT_MAX_N
) -> Optional[SolveResult]:
    """Best diagram with exactly ``k`` distinct row lengths, or None if no
    partition of ``n`` has type ``k``."""
    _check_n(n, max_n)
    _check_tables(n, f, fstar)
    if k < 1:
        raise InputError(f"type must be positive, got {k}")
    finals = final_states(n, f, fstar, k)
    return _best(finals.get(k, []))


def solve(n: int, f: FuncTable, fstar: FuncTable, max_n: int = DEFAULT_MAX_N) -> SolveResult:
    """Global minimizer of f(λ) + f*(λ*) over all partitions λ of ``n``.

    Optimal diagrams are compared by (value, type, parts), so ties go to the
    smallest type and then to the lexicographically smallest partition.
    """
    _check_n(n, max_n)
    _check_tables(n, f, fstar)
    finals = final_states(n, f, fstar)
    return _best(s for group in finals.values() for s in group)
