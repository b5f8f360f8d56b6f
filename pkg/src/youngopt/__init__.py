"""Optimization over Young diagrams: minimize f(λ) + f*(λ*) over partitions λ of n."""

from .core import (
    FuncTable,
    InputError,
    Partition,
    TypedDiagram,
    conjugate,
    from_typed,
    max_type,
    objective,
    render,
    to_typed,
    type_of,
)
from .funcspec import load_table, parse_expr, resolve, tabulate
from .oracle import brute_force_solve, enumerate_partitions
from .solver import DpState, SolveResult, reconstruct, solve, solve_for_type, transition_cost

__all__ = [
    "DpState",
    "FuncTable",
    "InputError",
    "Partition",
    "SolveResult",
    "TypedDiagram",
    "brute_force_solve",
    "conjugate",
    "enumerate_partitions",
    "from_typed",
    "load_table",
    "max_type",
    "objective",
    "parse_expr",
    "reconstruct",
    "render",
    "resolve",
    "solve",
    "solve_for_type",
    "tabulate",
    "to_typed",
    "transition_cost",
    "type_of",
]
