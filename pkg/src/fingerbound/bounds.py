"""Weighted finger bound, static-finger cost, and tree/weight equivalences.

The per-access bound term for consecutive accesses prev -> cur under a weight
assignment w is

    1 + log2( sum of w over the closed key interval [prev, cur]
              / min(w_prev, w_cur) )

which is always at least 1 because the interval contains both endpoints. With
all-equal weights the term collapses to 1 + log2(|cur - prev| + 1), the
unweighted finger term. Logs are base 2 throughout so tests are deterministic.

The equivalence constructions map a static tree to weights (w_i = c^-depth_i)
and weights back to a tree by recursive weighted-median splits, which
guarantees depth(i) <= log2(W_total / w_i) + 1.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import AccessSequence, BoundReport, CostReport, Key, WeightAssignment
from .errors import (
    BadBaseError,
    BadKeyspaceError,
    DimensionMismatchError,
    KeyOutOfRangeError,
    TooLargeError,
)

START_SELF = "self"
START_ROOT = "root"
MAX_ENUM_N = 12


@dataclass(frozen=True)
class StaticTree:
    """An explicit BST shape over keys 1..n with precomputed depths.

    left/right/parent are 1-indexed arrays (entry 0 unused, 0 = absent);
    depth[root] = 0. In-order traversal must yield 1..n.
    """

    n: int
    root: Key
    left: tuple[int, ...]
    right: tuple[int, ...]
    parent: tuple[int, ...] = field(init=False, repr=False, compare=False)
    depth: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise BadKeyspaceError(f"tree size must be positive, got {self.n}")
        if len(self.left) != self.n + 1 or len(self.right) != self.n + 1:
            raise DimensionMismatchError("left/right arrays must have length n + 1")
        if not 1 <= self.root <= self.n:
            raise KeyOutOfRangeError(f"root {self.root} outside [1, {self.n}]")
        parent = [0] * (self.n + 1)
        depth = [0] * (self.n + 1)
        order: list[int] = []
        # Iterative in-order traversal; also fills parent/depth and validates
        # that the shape is a BST over exactly 1..n.
        stack: list[tuple[int, bool]] = [(self.root, False)]
        seen = 0
        while stack:
            node, expanded = stack.pop()
            if expanded:
                order.append(node)
                continue
            seen += 1
            if seen > self.n:
                raise ValueError("tree structure has a cycle or duplicate links")
            l, r = self.left[node], self.right[node]
            if r:
                parent[r] = node
                depth[r] = depth[node] + 1
                stack.append((r, False))
            stack.append((node, True))
            if l:
                parent[l] = node
                depth[l] = depth[node] + 1
                stack.append((l, False))
        if order != list(range(1, self.n + 1)):
            raise ValueError("in-order traversal must yield 1..n")
        object.__setattr__(self, "parent", tuple(parent))
        object.__setattr__(self, "depth", tuple(depth))

    @classmethod
    def balanced(cls, n: int) -> "StaticTree":
        left = [0] * (n + 1)
        right = [0] * (n + 1)
        stack = [(1, n, 0, False)]
        root = (1 + n) // 2
        while stack:
            lo, hi, par, is_right = stack.pop()
            if lo > hi:
                continue
            mid = (lo + hi) // 2
            if par:
                if is_right:
                    right[par] = mid
                else:
                    left[par] = mid
            stack.append((lo, mid - 1, mid, False))
            stack.append((mid + 1, hi, mid, True))
        return cls(n, root, tuple(left), tuple(right))

    @classmethod
    def left_spine(cls, n: int) -> "StaticTree":
        """Root n, every left child one key smaller."""
        left = [0] + [k - 1 for k in range(1, n + 1)]
        right = [0] * (n + 1)
        return cls(n, n, tuple(left), tuple(right))

    @classmethod
    def right_spine(cls, n: int) -> "StaticTree":
        """Root 1, every right child one key larger."""
        left = [0] * (n + 1)
        right = [0] + [k + 1 if k < n else 0 for k in range(1, n + 1)]
        return cls(n, 1, tuple(left), tuple(right))

    def lca(self, a: Key, b: Key) -> Key:
        """Lowest common ancestor via the key-interval walk from the root."""
        self._check(a)
        self._check(b)
        lo, hi = (a, b) if a <= b else (b, a)
        node = self.root
        while node < lo or node > hi:
            node = self.left[node] if node > hi else self.right[node]
        return node

    def path_nodes(self, a: Key, b: Key) -> int:
        """Number of nodes on the unique tree path from a to b, inclusive."""
        w = self.lca(a, b)
        return self.depth[a] + self.depth[b] - 2 * self.depth[w] + 1

    def _check(self, k: Key) -> None:
        if not 1 <= k <= self.n:
            raise KeyOutOfRangeError(f"key {k} outside [1, {self.n}]")


def wdf_term(w: WeightAssignment, prev: Key, cur: Key) -> float:
    """Single weighted finger term for the access pair prev -> cur."""
    if prev == cur:
        w._check(prev)
        return 1.0
    num = w.range_weight(prev, cur)
    den = min(w.weight(prev), w.weight(cur))
    return 1.0 + math.log2(num / den)


def weighted_df_bound(
    seq: AccessSequence, w: WeightAssignment, start: str = START_SELF
) -> BoundReport:
    """Per-access weighted finger terms over a whole sequence.

    start="self" treats the first access as its own finger (t_1 = 1);
    start="root" charges the first access 1 + log2(W_total / w_first).
    """
    if w.n != seq.n:
        raise DimensionMismatchError(f"weights cover {w.n} keys but sequence has n={seq.n}")
    if start not in (START_SELF, START_ROOT):
        raise ValueError(f"start must be '{START_SELF}' or '{START_ROOT}', got {start!r}")
    first = seq.accesses[0]
    if start == START_SELF:
        t1 = 1.0
    else:
        t1 = 1.0 + math.log2(w.total / w.weight(first))
    terms = [t1]
    prev = first
    for cur in seq.accesses[1:]:
        terms.append(wdf_term(w, prev, cur))
        prev = cur
    return BoundReport(tuple(terms))


def dynamic_finger_bound(seq: AccessSequence) -> BoundReport:
    """Equal-weights specialization: t_i = 1 + log2(|s_i - s_{i-1}| + 1)."""
    return weighted_df_bound(seq, WeightAssignment.equal(seq.n), START_SELF)


def static_finger_cost(tree: StaticTree, seq: AccessSequence) -> CostReport:
    """Cost of serving a sequence on a fixed tree, walking from the previous
    accessed node; the first access walks from the root. Costs count nodes,
    so a repeated access costs 1."""
    if tree.n != seq.n:
        raise DimensionMismatchError(f"tree has n={tree.n} but sequence has n={seq.n}")
    costs = [tree.depth[seq.accesses[0]] + 1]
    prev = seq.accesses[0]
    for cur in seq.accesses[1:]:
        costs.append(tree.path_nodes(prev, cur))
        prev = cur
    return CostReport(tuple(costs))


def weights_from_tree(tree: StaticTree, base: float = 2.0) -> WeightAssignment:
    """w_i = base^(-depth_i): deeper keys get geometrically lighter."""
    if not base > 1.0:
        raise BadBaseError(f"base must exceed 1, got {base}")
    return WeightAssignment(tuple(base ** -tree.depth[k] for k in range(1, tree.n + 1)))


def tree_from_weights(w: WeightAssignment) -> StaticTree:
    """Recursive weighted-median construction.

    The root of the subtree over [a, b] is the smallest key r with
    range_weight(a, r) >= range_weight(a, b) / 2; ties therefore break toward
    the smaller key. Both child intervals carry at most half the interval
    weight, giving depth(i) <= log2(W_total / w_i) + 1.
    """
    n = w.n
    prefix = w.prefix
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    root = 0
    stack: list[tuple[int, int, int, bool]] = [(1, n, 0, False)]
    while stack:
        lo, hi, par, is_right = stack.pop()
        if lo > hi:
            continue
        target = (prefix[lo - 1] + prefix[hi]) / 2.0
        r = bisect_left(prefix, target, lo, hi + 1)
        if par == 0:
            root = r
        elif is_right:
            right[par] = r
        else:
            left[par] = r
        stack.append((lo, r - 1, r, False))
        stack.append((r + 1, hi, r, True))
    return StaticTree(n, root, tuple(left), tuple(right))


def _interval_shapes(lo: int, hi: int, memo: dict) -> tuple:
    """All BST shapes over [lo, hi] as nested (root, left, right) tuples."""
    if lo > hi:
        return (None,)
    key = (lo, hi)
    got = memo.get(key)
    if got is not None:
        return got
    out = []
    for r in range(lo, hi + 1):
        for ls in _interval_shapes(lo, r - 1, memo):
            for rs in _interval_shapes(r + 1, hi, memo):
                out.append((r, ls, rs))
    memo[key] = tuple(out)
    return memo[key]


def _shape_arrays(n: int, shape: tuple) -> tuple[int, list[int], list[int], list[int]]:
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    depth = [0] * (n + 1)
    root = shape[0]
    stack = [(shape, 0)]
    while stack:
        (r, ls, rs), d = stack.pop()
        depth[r] = d
        if ls is not None:
            left[r] = ls[0]
            stack.append((ls, d + 1))
        if rs is not None:
            right[r] = rs[0]
            stack.append((rs, d + 1))
    return root, left, right, depth


def _finger_total(root: int, left: list[int], right: list[int], depth: list[int],
                  accesses: Sequence[int]) -> int:
    prev = accesses[0]
    total = depth[prev] + 1
    for cur in accesses[1:]:
        if cur == prev:
            total += 1
            continue
        lo, hi = (prev, cur) if prev <= cur else (cur, prev)
        node = root
        while node < lo or node > hi:
            node = left[node] if node > hi else right[node]
        total += depth[prev] + depth[cur] - 2 * depth[node] + 1
        prev = cur
    return total


def iter_bsts(n: int) -> Iterator[StaticTree]:
    """All BSTs over 1..n in deterministic (root-ascending) order."""
    if n > MAX_ENUM_N:
        raise TooLargeError(f"BST enumeration is guarded to n <= {MAX_ENUM_N}, got {n}")
    memo: dict = {}
    for shape in _interval_shapes(1, n, memo):
        root, left, right, _ = _shape_arrays(n, shape)
        yield StaticTree(n, root, tuple(left), tuple(right))


def best_static_finger_cost(seq: AccessSequence) -> tuple[StaticTree, int]:
    """Exhaustively optimal static finger tree for a sequence, with its cost.

    Enumerates all Catalan(n) shapes; guarded to n <= 12. Ties go to the
    first shape in enumeration order.
    """
    n = seq.n
    if n > MAX_ENUM_N:
        raise TooLargeError(f"static-tree search is guarded to n <= {MAX_ENUM_N}, got n={n}")
    memo: dict = {}
    best_total = None
    best_shape = None
    accesses = seq.accesses
    for shape in _interval_shapes(1, n, memo):
        root, left, right, depth = _shape_arrays(n, shape)
        total = _finger_total(root, left, right, depth, accesses)
        if best_total is None or total < best_total:
            best_total = total
            best_shape = shape
    root, left, right, _ = _shape_arrays(n, best_shape)
    return StaticTree(n, root, tuple(left), tuple(right)), best_total
