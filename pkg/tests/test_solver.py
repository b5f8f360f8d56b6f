import random

import pytest

from youngopt.core import FuncTable, InputError, from_typed, max_type, objective, type_of
from youngopt.funcspec import resolve
from youngopt.oracle import brute_force_solve, enumerate_partitions
from youngopt.solver import final_states, reconstruct, solve, solve_for_type, transition_cost

BUILTINS = ["square", "identity", "zero"]


def tables(n, seed):
    rng = random.Random(seed)
    f = FuncTable(tuple(rng.randint(-50, 50) for _ in range(n)))
    g = FuncTable(tuple(rng.randint(-50, 50) for _ in range(n)))
    return f, g


def chain(state):
    out = []
    while state is not None:
        out.append(state)
        state = state.pred
    return out[::-1]


@pytest.mark.parametrize(
    "c_prev, c_i, r_i, r_next, n, expected",
    [(0, 2, 1, 0, 2, 6), (0, 1, 2, 0, 2, 6), (0, 1, 3, 2, 6, 10), (1, 2, 2, 1, 6, 8)],
)
def test_transition_cost(c_prev, c_i, r_i, r_next, n, expected):
    sq = resolve("square", n)
    assert transition_cost(c_prev, c_i, r_i, r_next, sq, sq) == expected


def test_path_of_321_sums_to_28():
    sq = resolve("square", 6)
    # blocks (r, c): (3, 1), (2, 2), (1, 3)
    legs = [(0, 1, 3, 2), (1, 2, 2, 1), (2, 3, 1, 0)]
    assert sum(transition_cost(*leg, sq, sq) for leg in legs) == 28


def test_transition_cost_rejects_non_monotone():
    sq = resolve("square", 4)
    with pytest.raises(AssertionError):
        transition_cost(2, 2, 3, 1, sq, sq)


def test_example_six():
    sq = resolve("square", 6)
    res = solve(6, sq, sq)
    assert (res.partition.parts, res.conjugate.parts, res.k, res.value) == ((3, 2, 1), (3, 2, 1), 3, 28)
    res3 = solve_for_type(6, 3, sq, sq)
    assert res3 == res


def test_two_path_case():
    sq = resolve("square", 2)
    res = solve_for_type(2, 1, sq, sq)
    assert res.partition.parts == (1, 1) and res.value == 6
    finals = final_states(2, FuncTable((10, 20)), FuncTable((1, 5)), k=1)
    assert sorted(s.cost for s in finals[1]) == [22, 25]
    parts = {s.cost: from_typed(reconstruct(s))[0].parts for s in finals[1]}
    assert parts == {25: (1, 1), 22: (2,)}


def test_reconstruct_examples():
    sq = resolve("square", 6)
    best = min(final_states(6, sq, sq, k=3)[3], key=lambda s: s.cost)
    t = reconstruct(best)
    assert (t.k, t.r, t.c) == (3, (3, 2, 1), (1, 2, 3))
    two = [s for s in final_states(2, resolve("square", 2), resolve("square", 2), k=1)[1] if s.c == 2][0]
    assert (two.layer, two.c, two.r_next, two.cells) == (1, 2, 0, 2)
    t = reconstruct(two)
    assert (t.r, t.c) == ((1,), (2,))
    with pytest.raises(InputError):
        reconstruct(two.pred)


@pytest.mark.parametrize(
    "n, f, expected, k",
    [(6, "identity", (1,) * 6, 1), (1, "square", (1,), 1), (7, "zero", (1,) * 7, 1)],
)
def test_solve_builtin_cases(n, f, expected, k):
    t = resolve(f, n)
    res = solve(n, t, t)
    assert res.partition.parts == expected and res.k == k
    assert res.value == objective(res.partition, t, t)


def test_single_cell_any_tables():
    res = solve(1, FuncTable((-3,)), FuncTable((11,)))
    assert (res.partition.parts, res.value, res.k) == ((1,), 8, 1)


def test_infeasible_type_is_absent():
    sq = resolve("square", 3)
    assert solve_for_type(3, 3, sq, sq) is None
    for n in range(1, 101):
        z = resolve("zero", n)
        assert solve_for_type(n, max_type(n) + 1, z, z) is None


def test_input_errors():
    sq = resolve("square", 4)
    with pytest.raises(InputError):
        solve(5, sq, sq)
    with pytest.raises(InputError):
        solve_for_type(4, 0, sq, sq)
    with pytest.raises(InputError):
        solve(0, sq, sq)
    with pytest.raises(InputError, match="maximum"):
        solve(4, sq, sq, max_n=3)


@pytest.mark.parametrize("n", range(1, 19))
def test_matches_oracle(n):
    pairs = [(resolve(a, n), resolve(b, n)) for a in BUILTINS for b in BUILTINS]
    pairs += [tables(n, 1000 * n + s) for s in range(5)]
    for f, g in pairs:
        assert solve(n, f, g) == brute_force_solve(n, f, g)


@pytest.mark.parametrize("n", range(1, 13))
def test_per_type_matches_oracle(n):
    for seed in range(3):
        f, g = tables(n, 77 * n + seed)
        for k in range(1, max_type(n) + 1):
            res = solve_for_type(n, k, f, g)
            assert res == brute_force_solve(n, f, g, type_filter=k)
            assert type_of(res.partition) == k


@pytest.mark.parametrize("n", [1, 4, 9, 14, 20])
def test_every_finishing_state_is_a_consistent_walk(n):
    f, g = tables(n, n)
    for k, states in final_states(n, f, g).items():
        for s in states:
            walk = chain(s)
            assert len(walk) == k + 1 and walk[0].layer == 0
            assert (walk[0].c, walk[0].cells) == (0, 0) and walk[0].r_next >= 1
            assert (s.r_next, s.cells) == (0, n)
            for a, b in zip(walk, walk[1:]):
                assert b.layer == a.layer + 1
                assert b.c > a.c and b.r_next < a.r_next
                assert b.cells == a.cells + (b.c - a.c) * a.r_next
                assert b.cost - a.cost == transition_cost(a.c, b.c, a.r_next, b.r_next, f, g)
            lam, _ = from_typed(reconstruct(s))
            assert lam.n == n and type_of(lam) == k
            assert s.cost == objective(lam, f, g)


def test_finishing_states_cover_every_diagram_end():
    # one finishing state per distinct (type, number of rows) pair among partitions of n
    n = 11
    z = resolve("zero", n)
    finals = final_states(n, z, z)
    got = {(k, s.c) for k, states in finals.items() for s in states}
    want = {(type_of(p), len(p)) for p in enumerate_partitions(n)}
    assert got == want


def test_per_type_and_shared_pass_agree_beyond_oracle_range():
    for n in (40, 57):
        f, g = tables(n, n)
        best = solve(n, f, g)
        per_type = [solve_for_type(n, k, f, g) for k in range(1, max_type(n) + 1)]
        per_type = [r for r in per_type if r is not None]
        assert min(r.value for r in per_type) == best.value
        assert best in per_type
