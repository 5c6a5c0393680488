"""Shared data model: rank-space keys, access sequences, weights, points.

Keys are dense integers 1..n. Arbitrary ordered key types are expected to be
mapped to ranks before they reach this layer; everything downstream depends
only on key order.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    BadKeyspaceError,
    EmptySequenceError,
    KeyOutOfRangeError,
)

Key = int


@dataclass(frozen=True)
class AccessSequence:
    """A validated stream of key accesses s_1..s_m over the keyspace 1..n."""

    n: int
    accesses: tuple[Key, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise BadKeyspaceError(f"keyspace size must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "accesses", tuple(self.accesses))
        if not self.accesses:
            raise EmptySequenceError("access sequence is empty")
        for i, k in enumerate(self.accesses, start=1):
            if not isinstance(k, int) or not 1 <= k <= self.n:
                raise KeyOutOfRangeError(f"access {i}: key {k!r} outside [1, {self.n}]")

    @property
    def m(self) -> int:
        return len(self.accesses)

    def __len__(self) -> int:
        return len(self.accesses)

    def __iter__(self) -> Iterator[Key]:
        return iter(self.accesses)

    def prefix(self, t: int) -> "AccessSequence":
        """First t accesses as a sequence over the same keyspace."""
        return AccessSequence(self.n, self.accesses[:t])


def validate_sequence(raw: Sequence[int], n: int) -> AccessSequence:
    """Validate a raw key list against the keyspace size n."""
    return AccessSequence(n, tuple(raw))


@dataclass(frozen=True)
class WeightAssignment:
    """Strictly positive per-key weights with prefix sums for range queries.

    prefix[k] holds the sum of the first k weights, prefix[0] = 0. Prefix
    entries must be strictly increasing, which rules out weights so skewed
    that they underflow into the running sum.
    """

    weights: tuple[float, ...]
    prefix: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ws = tuple(float(w) for w in self.weights)
        if not ws:
            raise BadKeyspaceError("weight vector is empty")
        object.__setattr__(self, "weights", ws)
        acc = [0.0]
        for i, w in enumerate(ws, start=1):
            if not math.isfinite(w) or w <= 0.0:
                raise ValueError(f"weight {i} must be a finite positive number, got {w!r}")
            acc.append(acc[-1] + w)
            if not acc[-1] > acc[-2]:
                raise ValueError(f"weight {i} vanishes in the prefix sum; rescale the vector")
        object.__setattr__(self, "prefix", tuple(acc))

    @classmethod
    def equal(cls, n: int) -> "WeightAssignment":
        if n < 1:
            raise BadKeyspaceError(f"keyspace size must be positive, got {n}")
        return cls((1.0,) * n)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> float:
        return self.prefix[-1]

    def weight(self, k: Key) -> float:
        self._check(k)
        return self.weights[k - 1]

    def range_weight(self, a: Key, b: Key) -> float:
        self._check(a)
        self._check(b)
        lo, hi = (a, b) if a <= b else (b, a)
        return self.prefix[hi] - self.prefix[lo - 1]

    def scaled(self, alpha: float) -> "WeightAssignment":
        return WeightAssignment(tuple(w * alpha for w in self.weights))

    def _check(self, k: Key) -> None:
        if not 1 <= k <= self.n:
            raise KeyOutOfRangeError(f"key {k} outside [1, {self.n}]")


def range_weight(w: WeightAssignment, a: Key, b: Key) -> float:
    """Sum of weights over the closed key interval between a and b (order-free)."""
    return w.range_weight(a, b)


class Point(NamedTuple):
    """A (key, time) point in the geometric access model."""

    key: Key
    time: int


class PointSet:
    """Immutable set of distinct points with row and column indices.

    Rows are indexed by time (sorted key lists), columns by key (sorted time
    lists). Iteration order is (time, key), which every listing operation
    relies on for determinism.
    """

    __slots__ = ("_points", "_rows", "_cols", "_times", "_keys")

    def __init__(self, points: Iterable[Point]):
        pts = frozenset(Point(int(k), int(t)) for (k, t) in points)
        for p in pts:
            if p.key < 1 or p.time < 1:
                raise ValueError(f"point {p} has non-positive coordinates")
        rows: dict[int, list[int]] = {}
        cols: dict[int, list[int]] = {}
        for p in pts:
            rows.setdefault(p.time, []).append(p.key)
            cols.setdefault(p.key, []).append(p.time)
        self._points = pts
        self._rows = {t: tuple(sorted(ks)) for t, ks in rows.items()}
        self._cols = {k: tuple(sorted(ts)) for k, ts in cols.items()}
        self._times = tuple(sorted(rows))
        self._keys = tuple(sorted(cols))

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> "PointSet":
        return cls(points)

    @property
    def points(self) -> frozenset[Point]:
        return self._points

    @property
    def times(self) -> tuple[int, ...]:
        return self._times

    @property
    def keys(self) -> tuple[int, ...]:
        return self._keys

    @property
    def max_key(self) -> int:
        return self._keys[-1] if self._keys else 0

    def row_keys(self, t: int) -> tuple[int, ...]:
        return self._rows.get(t, ())

    def col_times(self, k: Key) -> tuple[int, ...]:
        return self._cols.get(k, ())

    def keys_between(self, lo: Key, hi: Key) -> tuple[int, ...]:
        """Distinct keys of the set lying in [lo, hi]."""
        i = bisect_left(self._keys, lo)
        j = bisect_right(self._keys, hi)
        return self._keys[i:j]

    def has_third_point_in_rect(self, p: Point, q: Point) -> bool:
        """True iff the closed rectangle spanned by p and q contains a point
        of the set other than p and q themselves."""
        klo, khi = min(p.key, q.key), max(p.key, q.key)
        tlo, thi = min(p.time, q.time), max(p.time, q.time)
        for k in self.keys_between(klo, khi):
            ts = self._cols[k]
            i = bisect_left(ts, tlo)
            while i < len(ts) and ts[i] <= thi:
                cand = Point(k, ts[i])
                if cand != p and cand != q:
                    return True
                i += 1
        return False

    def __len__(self) -> int:
        return len(self._points)

    def __contains__(self, p: object) -> bool:
        return p in self._points

    def __iter__(self) -> Iterator[Point]:
        for t in self._times:
            for k in self._rows[t]:
                yield Point(k, t)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PointSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"PointSet({sorted(self._points, key=lambda p: (p.time, p.key))!r})"


@dataclass(frozen=True)
class CostReport:
    """Per-access integer costs of one algorithm run."""

    per_access: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.per_access)

    def __len__(self) -> int:
        return len(self.per_access)


@dataclass(frozen=True)
class BoundReport:
    """Per-access bound terms t_i and their total."""

    per_access: tuple[float, ...]

    @property
    def total(self) -> float:
        return sum(self.per_access)

    def __len__(self) -> int:
        return len(self.per_access)
