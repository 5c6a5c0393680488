from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from fingerbound.core import AccessSequence, Point, PointSet
from fingerbound.errors import KeyOutOfRangeError
from fingerbound.geometry import is_arborally_satisfied
from fingerbound.greedy import (
    GreedyState,
    brute_min_row,
    greedy_cost,
    greedy_execute,
    greedy_row,
    greedy_row_reference,
)
from fingerbound.workloads import Splitmix64


def state_after(n, accesses):
    state = GreedyState(n)
    for x in accesses:
        state.step(x)
    return state


class TestGreedyRow:
    def test_staircase_blocks_older_key(self):
        # 1 touched at t=1, then greedy on 2 touches {1,2}; key 1 now blocks
        # nothing newer than key 2, so accessing 3 touches {2,3}
        state = state_after(3, [1, 2])
        assert greedy_row(state, 3) == {2, 3}

    def test_empty_history(self):
        state = GreedyState(5)
        assert greedy_row(state, 5) == {5}

    def test_untouched_keys_never_block(self):
        state = state_after(3, [3])
        assert greedy_row(state, 1) == {1, 3}

    def test_own_column_dominates(self):
        # after (1, 2, 1) .. at t=3 the rectangle to (2,2) is witnessed by
        # (1,2), so key 2 must not be touched; confirmed by brute_min_row
        state = state_after(2, [1, 2])
        assert greedy_row(state, 1) == {1}

    def test_out_of_range(self):
        state = GreedyState(3)
        with pytest.raises(KeyOutOfRangeError):
            greedy_row(state, 4)

    def test_rows_match_brute_force_oracle(self):
        for n, accesses, x, expect in [
            (2, [1], 2, {1, 2}),
            (5, [], 4, {4}),
            (3, [1, 2], 3, {2, 3}),
            (3, [1, 2, 1], 3, {1, 2, 3}),
        ]:
            state = state_after(n, accesses)
            t = len(accesses) + 1
            assert greedy_row(state, x) == expect
            assert brute_min_row(state.emitted(), x, t, n) == expect


class TestGreedyExecute:
    def test_repeated_access_touches_only_itself(self):
        points, cost = greedy_execute(AccessSequence(3, (2, 2, 2)))
        assert points == PointSet([(2, 1), (2, 2), (2, 3)])
        assert cost.total == 3

    def test_sequential_three(self):
        points, cost = greedy_execute(AccessSequence(3, (1, 2, 3)))
        assert cost.per_access == (1, 2, 2)
        assert cost.total == 5
        assert points.row_keys(2) == (1, 2)
        assert points.row_keys(3) == (2, 3)

    def test_far_jump(self):
        # rows {3}, {1,3}; the stated rows sum to 3 points
        points, cost = greedy_execute(AccessSequence(3, (3, 1)))
        assert points.row_keys(1) == (3,)
        assert points.row_keys(2) == (1, 3)
        assert cost.total == 3

    def test_greedy_cost_matches_execute(self):
        seq = AccessSequence(8, (5, 2, 7, 2, 8, 1))
        _, cost = greedy_execute(seq)
        assert greedy_cost(seq).per_access == cost.per_access


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_execution_properties(data):
    n = data.draw(st.integers(1, 24))
    accesses = data.draw(st.lists(st.integers(1, n), min_size=1, max_size=40))
    seq = AccessSequence(n, tuple(accesses))
    points, cost = greedy_execute(seq)
    # satisfaction
    assert is_arborally_satisfied(points)
    # superset of the access points, every row pays at least 1
    for t, k in enumerate(seq, start=1):
        assert Point(k, t) in points
    assert all(c >= 1 for c in cost.per_access)
    assert sum(cost.per_access) == len(points)
    # determinism
    again, cost2 = greedy_execute(seq)
    assert again == points and cost2.per_access == cost.per_access
    # online prefix consistency
    t = data.draw(st.integers(1, seq.m))
    pre_points, pre_cost = greedy_execute(seq.prefix(t))
    assert pre_cost.per_access == cost.per_access[:t]
    assert pre_points.points == frozenset(p for p in points if p.time <= t)


def test_fast_path_matches_reference_scan():
    rng = Splitmix64(2024)
    for _ in range(150):
        n = rng.below(48) + 1
        m = rng.below(80) + 1
        state = GreedyState(n)
        for _ in range(m):
            x = rng.below(n) + 1
            assert greedy_row(state, x) == greedy_row_reference(state, x)
            state.step(x)


def test_exhaustive_minimality_small():
    # tiny slice of the exhaustive check; the acceptance suite runs n,m <= 5
    for n, m in ((3, 3), (4, 2)):
        for accesses in product(range(1, n + 1), repeat=m):
            state = GreedyState(n)
            for t, x in enumerate(accesses, start=1):
                assert greedy_row(state, x) == brute_min_row(state.emitted(), x, t, n)
                state.step(x)


class TestBruteMinRow:
    def test_needs_the_witness_column(self):
        assert brute_min_row(PointSet([(1, 1)]), 2, 2, 2) == {1, 2}

    def test_empty_set(self):
        assert brute_min_row(PointSet([]), 4, 1, 5) == {4}

    def test_three_key_case(self):
        pset = PointSet([(1, 1), (2, 2), (1, 2)])
        assert brute_min_row(pset, 3, 3, 3) == {2, 3}

    def test_rejects_unsatisfied_input(self):
        with pytest.raises(ValueError):
            brute_min_row(PointSet([(1, 1), (2, 2)]), 1, 3, 2)

    def test_rejects_future_points(self):
        with pytest.raises(ValueError):
            brute_min_row(PointSet([(1, 5)]), 1, 3, 2)
