"""Partitions, conjugation, typed (run-length) form and the objective f(λ) + f*(λ*)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import groupby
from typing import Sequence

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

#: Input contract: every table entry satisfies |f(j)| <= VALUE_BOUND.
VALUE_BOUND = 2**31


class InputError(ValueError):
    """Malformed or out-of-contract user input."""


def check_int64(value: int, what: str = "value") -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise InputError(f"{what} {value} overflows a signed 64-bit integer")
    return value


@dataclass(frozen=True)
class Partition:
    """A partition of ``n``: non-increasing positive parts, stored expanded."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InputError("a partition needs at least one part")
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise InputError(f"part {p!r} is not an integer")
            if p < 1:
                raise InputError(f"part {p} is not positive")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InputError(f"parts must be non-increasing, got {a} before {b}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the comma-separated form, e.g. ``"3,2,1"``."""
        tokens = [t.strip() for t in text.split(",")]
        try:
            parts = tuple(int(t) for t in tokens)
        except ValueError:
            raise InputError(f"cannot read partition {text!r}: expected comma-separated integers")
        return cls(parts)


@dataclass(frozen=True)
class TypedDiagram:
    """Run-length view of a diagram: distinct row lengths ``r`` (decreasing) and
    cumulative row counts ``c`` (increasing).

    Row block ``i`` has ``c[i] - c[i-1]`` rows of length ``r[i]``; the boundary
    values c_0 = 0 and r_{k+1} = 0 are implicit.
    """

    r: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        r, c = tuple(self.r), tuple(self.c)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "c", c)
        if not r or len(r) != len(c):
            raise InputError("r and c must be non-empty and of equal length")
        if r[-1] < 1 or any(a <= b for a, b in zip(r, r[1:])):
            raise InputError(f"r must be strictly decreasing positive integers, got {r}")
        if c[0] < 1 or any(a >= b for a, b in zip(c, c[1:])):
            raise InputError(f"c must be strictly increasing positive integers, got {c}")

    @property
    def k(self) -> int:
        return len(self.r)

    def cells_by_rows(self) -> int:
        return sum((ci - cp) * ri for ri, ci, cp in zip(self.r, self.c, (0,) + self.c))

    def cells_by_columns(self) -> int:
        return sum((ri - rn) * ci for ri, rn, ci in zip(self.r, self.r[1:] + (0,), self.c))


@dataclass(frozen=True)
class FuncTable:
    """Integer values f(1), ..., f(n)."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise InputError("a function table needs at least one value")
        for j, v in enumerate(values, start=1):
            if isinstance(v, bool) or not isinstance(v, int):
                raise InputError(f"f({j}) = {v!r} is not an integer")
            if abs(v) > VALUE_BOUND:
                raise InputError(f"f({j}) = {v} exceeds the magnitude bound 2^31")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        if not 1 <= j <= len(self.values):
            raise IndexError(f"argument {j} outside 1..{len(self.values)}")
        return self.values[j - 1]

    def __len__(self) -> int:
        return len(self.values)


def conjugate(p: Partition) -> Partition:
    """Column lengths: the j-th part counts the parts of ``p`` that are >= j."""
    parts = p.parts
    out = []
    i = len(parts)
    for j in range(1, parts[0] + 1):
        while parts[i - 1] < j:
            i -= 1
        out.append(i)
    return Partition(tuple(out))


def type_of(p: Partition) -> int:
    return len(set(p.parts))


def max_type(n: int) -> int:
    """Largest k with k(k+1)/2 <= n, the most distinct parts a partition of n can have."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return (math.isqrt(8 * n + 1) - 1) // 2


def to_typed(p: Partition) -> TypedDiagram:
    r, c = [], []
    total = 0
    for value, run in groupby(p.parts):
        total += sum(1 for _ in run)
        r.append(value)
        c.append(total)
    return TypedDiagram(tuple(r), tuple(c))


def from_typed(t: TypedDiagram) -> tuple[Partition, Partition]:
    """Expand to (λ, λ*)."""
    rows = []
    for ri, ci, cp in zip(t.r, t.c, (0,) + t.c):
        rows.extend([ri] * (ci - cp))
    cols = []
    # λ* lists c_k first: the shortest rows give the tallest columns
    for ri, rn, ci in reversed(list(zip(t.r, t.r[1:] + (0,), t.c))):
        cols.extend([ci] * (ri - rn))
    return Partition(tuple(rows)), Partition(tuple(cols))


def _check_tables(n: int, f: FuncTable, fstar: FuncTable):
    if len(f) != n or len(fstar) != n:
        raise InputError(
            f"function tables must have length n = {n}, got {len(f)} and {len(fstar)}"
        )


def objective(p: Partition, f: FuncTable, fstar: FuncTable) -> int:
    """f(λ) + f*(λ*), summed over the parts of λ and of its conjugate."""
    _check_tables(p.n, f, fstar)
    total = sum(f(x) for x in p.parts) + sum(fstar(x) for x in conjugate(p).parts)
    return check_int64(total, "objective")


def preference_key(value: int, p: Partition) -> tuple:
    """Sort key realizing the tie rule: lowest value, then smallest type, then
    lexicographically smallest parts."""
    return (value, type_of(p), p.parts)


def render(p: Partition, glyph: str = "#") -> str:
    return "\n".join(glyph * x for x in p.parts)
