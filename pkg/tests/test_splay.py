import pytest

from fingerbound.core import AccessSequence
from fingerbound.errors import KeyOutOfRangeError
from fingerbound.splay import (
    SplayTree,
    run_splay,
    run_splay_reference,
    splay_access,
)
from fingerbound.workloads import Splitmix64


class TestAccess:
    def test_single_node(self):
        tree = SplayTree(1)
        assert tree.access(1) == 1
        assert tree.in_order() == [1]

    def test_zig_zig_from_right_spine(self):
        tree = SplayTree(3, "right_spine")
        assert tree.access(3) == 3
        assert tree.root.key == 3
        assert tree.root.left.key == 2
        assert tree.root.left.left.key == 1

    def test_accessing_root_changes_nothing(self):
        tree = SplayTree(7, "balanced")
        root = tree.root.key
        assert tree.access(root) == 1
        assert tree.root.key == root

    def test_rotations_equal_cost_minus_one(self):
        tree = SplayTree(31, "balanced")
        rng = Splitmix64(3)
        for _ in range(200):
            before = tree.rotations
            cost = tree.access(rng.below(31) + 1)
            assert tree.rotations - before == cost - 1

    def test_out_of_range(self):
        with pytest.raises(KeyOutOfRangeError):
            SplayTree(3).access(4)

    def test_splay_access_function(self):
        tree = SplayTree(3, "right_spine")
        assert splay_access(tree, 3) == 3


class TestRunSplay:
    def test_repeated_key_formula(self):
        # depth_initial(k) + 1 for the first access, then 1 each
        for initial, depth1 in (("balanced", 2), ("left_spine", 6), ("right_spine", 0)):
            rep = run_splay(AccessSequence(7, (1,) * 10), initial)
            assert rep.total == depth1 + 1 + 9

    def test_first_access_balanced(self):
        rep = run_splay(AccessSequence(7, (1,)), "balanced")
        assert rep.per_access == (3,)

    def test_sequential_left_spine_frozen(self):
        # frozen from a calibration run; stays linear (5n for n=64)
        rep = run_splay(AccessSequence(64, tuple(range(1, 65))), "left_spine")
        assert rep.total == 320

    def test_bad_initial(self):
        with pytest.raises(ValueError):
            run_splay(AccessSequence(3, (1,)), "bushy")


def test_inorder_preserved_and_root_updated():
    rng = Splitmix64(12)
    for _ in range(30):
        n = rng.below(40) + 1
        tree = SplayTree(n, ("balanced", "left_spine", "right_spine")[rng.below(3)])
        assert tree.in_order() == list(range(1, n + 1))
        for _ in range(30):
            x = rng.below(n) + 1
            tree.access(x)
            assert tree.root.key == x
            assert tree.in_order() == list(range(1, n + 1))


def test_reference_agrees_sampled():
    # the full 500-instance differential run lives in the verify suite
    rng = Splitmix64(9)
    shapes = ("balanced", "left_spine", "right_spine")
    for _ in range(60):
        n = rng.below(64) + 1
        m = rng.below(256) + 1
        seq = AccessSequence(n, tuple(rng.below(n) + 1 for _ in range(m)))
        initial = shapes[rng.below(3)]
        assert run_splay(seq, initial).per_access == run_splay_reference(seq, initial).per_access
