"""Exhaustive ground truth: enumerate every partition of n and minimize directly."""

from __future__ import annotations

from typing import Iterator, Optional

from .core import FuncTable, InputError, Partition, _check_tables, conjugate, objective, preference_key, type_of
from .solver import SolveResult

DEFAULT_ORACLE_LIMIT = 45


class OracleLimitError(InputError):
    pass


def _check_limit(n, limit):
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if n > limit:
        raise OracleLimitError(
            f"n = {n} is above the oracle limit {limit}; exhaustive enumeration refused"
        )


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, limit: int = DEFAULT_ORACLE_LIMIT) -> Iterator[Partition]:
    """Every partition of ``n`` once, in decreasing lexicographic order: (n) first, (1^n) last."""
    _check_limit(n, limit)
    for parts in _partitions(n, n):
        yield Partition(parts)


def brute_force_solve(
    n: int,
    f: FuncTable,
    fstar: FuncTable,
    type_filter: Optional[int] = None,
    limit: int = DEFAULT_ORACLE_LIMIT,
) -> Optional[SolveResult]:
    _check_limit(n, limit)
    _check_tables(n, f, fstar)
    best = None
    for p in enumerate_partitions(n, limit):
        if type_filter is not None and type_of(p) != type_filter:
            continue
        key = preference_key(objective(p, f, fstar), p)
        if best is None or key < best[0]:
            best = (key, p)
    if best is None:
        return None
    (value, k, _), p = best
    return SolveResult(p, conjugate(p), k, value)
