"""Experiment driver: run an algorithm, evaluate its bound, fit constants.

Constant fitting works on cumulative cost and cumulative bound series, since
amortized bounds only constrain prefix sums. The fit reports the totals
quotient plus a least-squares slope/intercept/r2 of cumulative cost against
cumulative bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import AccessSequence, BoundReport, CostReport, WeightAssignment
from .errors import DimensionMismatchError
from .bounds import START_SELF, weighted_df_bound
from .greedy import greedy_cost
from .splay import run_splay

ALGORITHMS = ("greedy", "splay")


@dataclass(frozen=True)
class FitResult:
    ratio: float
    slope: float
    intercept: float
    r2: float


def fit(cost_series: Sequence[float], bound_series: Sequence[float]) -> FitResult:
    """Fit cumulative cost against cumulative bound."""
    if len(cost_series) != len(bound_series):
        raise DimensionMismatchError(
            f"series lengths differ: {len(cost_series)} vs {len(bound_series)}"
        )
    if not cost_series:
        raise DimensionMismatchError("series are empty")
    cum_c: list[float] = []
    cum_b: list[float] = []
    tc = tb = 0.0
    for c, b in zip(cost_series, bound_series):
        tc += c
        tb += b
        cum_c.append(tc)
        cum_b.append(tb)
    ratio = tc / tb
    k = len(cum_c)
    if k == 1:
        return FitResult(ratio=ratio, slope=ratio, intercept=0.0, r2=1.0)
    mx = sum(cum_b) / k
    my = sum(cum_c) / k
    sxx = sum((x - mx) ** 2 for x in cum_b)
    syy = sum((y - my) ** 2 for y in cum_c)
    sxy = sum((x - mx) * (y - my) for x, y in zip(cum_b, cum_c))
    if sxx == 0.0:
        slope = 0.0
        intercept = my
        r2 = 1.0 if syy == 0.0 else 0.0
    else:
        slope = sxy / sxx
        intercept = my - slope * mx
        r2 = 1.0 if syy == 0.0 else min(1.0, (sxy * sxy) / (sxx * syy))
    return FitResult(ratio=ratio, slope=slope, intercept=intercept, r2=r2)


def run_experiment(
    seq: AccessSequence,
    algo: str,
    weights: WeightAssignment | None = None,
    start: str = START_SELF,
    initial: str = "balanced",
) -> tuple[CostReport, BoundReport, FitResult]:
    """Execute one algorithm on a sequence and fit its cost to the bound.

    weights=None means equal weights. `initial` only matters for splay.
    """
    if algo not in ALGORITHMS:
        raise ValueError(f"algo must be one of {ALGORITHMS}, got {algo!r}")
    w = weights if weights is not None else WeightAssignment.equal(seq.n)
    if algo == "greedy":
        cost = greedy_cost(seq)
    else:
        cost = run_splay(seq, initial)
    bound = weighted_df_bound(seq, w, start)
    return cost, bound, fit(cost.per_access, bound.per_access)


def experiment_rows(
    seq: AccessSequence, cost: CostReport, bound: BoundReport
) -> Iterator[tuple[int, int, int, float]]:
    """Per-access CSV rows (i, key, cost, bound)."""
    for i, (key, c, b) in enumerate(
        zip(seq.accesses, cost.per_access, bound.per_access), start=1
    ):
        yield i, key, c, b
