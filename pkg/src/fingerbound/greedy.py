"""Greedy arborally-satisfied-set execution in the geometric model.

The algorithm sweeps access times 1..m. At each time t it places the accessed
point (s_t, t) plus the minimal set of extra points on row t that keeps the
emitted set arborally satisfied. The touched keys admit a staircase
characterization: scanning away from the accessed key x, a previously touched
key is touched again exactly when its last-touch time strictly exceeds both
the last-touch time of every touched key between it and x, and the last-touch
time of x itself. Untouched keys are never touched and never block. Both
strictness conditions come from the closed-rectangle convention: on a tie the
nearer key's point lies on the boundary of the farther pair's rectangle, and
a key dominated by x's own column is witnessed by the point (x, last(x)).
This is exactly the unique minimum completion, which the exhaustive
`brute_min_row` oracle confirms on small instances.

Cost of an access = number of points placed on its row.

`greedy_row` walks the staircase through a max segment tree (O(log n) per
touched key). `greedy_row_reference` is a plain O(n) prefix-maximum scan kept
for differential testing, and `brute_min_row` is the exhaustive
minimum-cardinality oracle for tiny instances.
"""

from __future__ import annotations

from itertools import combinations

from .core import AccessSequence, CostReport, Key, Point, PointSet
from .errors import KeyOutOfRangeError
from .geometry import is_arborally_satisfied
from .segtree import MaxSegTree


class GreedyState:
    """Mutable sweep state: last-touch times plus the emitted rows so far.

    track_points=False drops the emitted-point log (long cost-only runs).
    """

    __slots__ = ("n", "time", "_times", "_tree", "_points", "per_row_cost")

    def __init__(self, n: int, track_points: bool = True):
        if n < 1:
            raise ValueError(f"keyspace size must be positive, got {n}")
        self.n = n
        self.time = 0
        self._times = [0] * (n + 1)
        self._tree = MaxSegTree(n)
        self._points: list[Point] | None = [] if track_points else None
        self.per_row_cost: list[int] = []

    def last_touched(self, key: Key) -> int | None:
        self._check(key)
        t = self._times[key]
        return t if t else None

    def step(self, x: Key) -> set[Key]:
        """Process the next access: emit row points and update touch times."""
        row = greedy_row(self, x)
        t = self.time + 1
        self.time = t
        ordered = sorted(row)
        for y in ordered:
            self._times[y] = t
            self._tree.raise_to(y - 1, t)
        if self._points is not None:
            self._points.extend(Point(y, t) for y in ordered)
        self.per_row_cost.append(len(row))
        return row

    def emitted(self) -> PointSet:
        if self._points is None:
            raise ValueError("point tracking was disabled for this state")
        return PointSet(self._points)

    def cost_report(self) -> CostReport:
        return CostReport(tuple(self.per_row_cost))

    def _check(self, key: Key) -> None:
        if not 1 <= key <= self.n:
            raise KeyOutOfRangeError(f"key {key} outside [1, {self.n}]")


def greedy_row(state: GreedyState, x: Key) -> set[Key]:
    """Touched key set for an access to x, without mutating the state."""
    state._check(x)
    tree = state._tree
    times = state._times
    touched = {x}
    # Left staircase: strict records of last-touch time above x's own.
    thr = times[x]
    hi = x - 2
    while hi >= 0:
        j = tree.rightmost_above(hi, thr)
        if j < 0:
            break
        key = j + 1
        touched.add(key)
        thr = times[key]
        hi = j - 1
    # Right staircase, symmetric.
    thr = times[x]
    lo = x
    while lo <= state.n - 1:
        j = tree.leftmost_above(lo, thr)
        if j < 0:
            break
        key = j + 1
        touched.add(key)
        thr = times[key]
        lo = j + 1
    return touched


def greedy_row_reference(state: GreedyState, x: Key) -> set[Key]:
    """O(n) prefix-maximum scan implementing the same staircase rule."""
    state._check(x)
    times = state._times
    touched = {x}
    best = times[x]
    for y in range(x - 1, 0, -1):
        t = times[y]
        if t > best:
            touched.add(y)
            best = t
    best = times[x]
    for y in range(x + 1, state.n + 1):
        t = times[y]
        if t > best:
            touched.add(y)
            best = t
    return touched


def greedy_execute(seq: AccessSequence) -> tuple[PointSet, CostReport]:
    """Run the full sweep; returns the emitted point set and per-row costs."""
    state = GreedyState(seq.n)
    for x in seq:
        state.step(x)
    return state.emitted(), state.cost_report()


def greedy_cost(seq: AccessSequence) -> CostReport:
    """Per-row costs only, skipping point-set assembly (for long runs)."""
    state = GreedyState(seq.n, track_points=False)
    for x in seq:
        state.step(x)
    return state.cost_report()


def brute_min_row(pset: PointSet, x: Key, t: int, n: int) -> set[Key]:
    """Smallest row-t completion containing x that keeps the set satisfied.

    Enumerates subsets of {1..n} containing x by increasing cardinality, then
    lexicographically, and returns the first feasible one. Exhaustive: meant
    for n at most about 12.
    """
    if not 1 <= x <= n:
        raise KeyOutOfRangeError(f"key {x} outside [1, {n}]")
    base = list(pset)
    if any(p.time >= t for p in base):
        raise ValueError(f"point set must lie strictly before time {t}")
    if not is_arborally_satisfied(pset):
        raise ValueError("point set must be arborally satisfied")
    others = [k for k in range(1, n + 1) if k != x]
    for size in range(len(others) + 1):
        for combo in combinations(others, size):
            row = {x, *combo}
            candidate = PointSet(base + [Point(y, t) for y in row])
            if is_arborally_satisfied(candidate):
                return row
    raise AssertionError("full row completion must always be feasible")
