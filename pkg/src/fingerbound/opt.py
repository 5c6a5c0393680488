"""Exact minimum arborally satisfied superset for tiny instances.

Searches over supersets of the access points within the grid
{1..n} x {1..m} by iterative deepening on the number of added points, so the
first feasible superset found has provably minimum size. Guarded to n, m <= 5;
the grid blow-up is factorial beyond that.
"""

from __future__ import annotations

from itertools import combinations

from .core import AccessSequence, Point, PointSet
from .errors import TooLargeError
from .geometry import is_arborally_satisfied

MAX_N = 5
MAX_M = 5


class OptResult:
    """Minimum superset size together with one witness set."""

    __slots__ = ("size", "witness")

    def __init__(self, size: int, witness: PointSet):
        self.size = size
        self.witness = witness

    def __repr__(self) -> str:
        return f"OptResult(size={self.size})"


def opt_satisfied_superset(seq: AccessSequence) -> OptResult:
    if seq.n > MAX_N or seq.m > MAX_M:
        raise TooLargeError(
            f"exact optimum is guarded to n <= {MAX_N}, m <= {MAX_M}; got n={seq.n}, m={seq.m}"
        )
    base = [Point(k, t) for t, k in enumerate(seq, start=1)]
    taken = set(base)
    free = [
        Point(k, t)
        for t in range(1, seq.m + 1)
        for k in range(1, seq.n + 1)
        if Point(k, t) not in taken
    ]
    free.sort(key=lambda p: (p.time, p.key))
    for added in range(len(free) + 1):
        for combo in combinations(free, added):
            candidate = PointSet(base + list(combo))
            if is_arborally_satisfied(candidate):
                return OptResult(len(candidate), candidate)
    raise AssertionError("the full grid is always arborally satisfied")
