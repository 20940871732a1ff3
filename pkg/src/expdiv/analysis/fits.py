"""Residual-exponent fitting: the empirical stand-in for O(x^theta) claims.

Given exact summatory values S(x) on a grid and a main-term model, the fitted
exponent is the least-squares slope of log|S(x) - main(x)| against log x.
A claim "error is O(x^theta) (up to log factors)" passes when the fitted
slope is at most theta + slack; the default slack of 0.1 absorbs the log
powers that the power-law fit cannot see.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..sieve import SummatoryGrid

MIN_POINTS = 8
MIN_DECADES = 3.0
DEFAULT_SLACK = 0.1


@dataclass(frozen=True)
class FitReport:
    xs: tuple[int, ...]
    sums: tuple[int, ...]
    main: tuple[float, ...]
    residuals: tuple[float, ...]
    fitted_exponent: Optional[float]
    claimed_exponent: Optional[float]
    slack: float
    verdict: str  # "pass" | "fail" | "degenerate" | "unjudged"

    def rows(self):
        for x, s, m, r in zip(self.xs, self.sums, self.main, self.residuals):
            yield {"x": x, "sum": s, "main": m, "residual": r}


def residual_fit(
    grid: SummatoryGrid,
    main_term: Callable[[int], float],
    claimed_exponent: Optional[float] = None,
    slack: float = DEFAULT_SLACK,
) -> FitReport:
    """Fit the power-law envelope of the residuals on a geometric grid."""
    xs = grid.xs()
    sums = grid.sums()
    if len(xs) < MIN_POINTS:
        raise ValueError(f"need at least {MIN_POINTS} grid points")
    if math.log10(xs[-1] / xs[0]) < MIN_DECADES:
        raise ValueError(f"grid must span at least {MIN_DECADES} decades")
    main = [float(main_term(x)) for x in xs]
    resid = [float(s) - m for s, m in zip(sums, main)]
    lx, lr = [], []
    for x, r in zip(xs, resid):
        if r != 0.0:
            lx.append(math.log(x))
            lr.append(math.log(abs(r)))
    if not lx:
        return FitReport(
            tuple(xs), tuple(sums), tuple(main), tuple(resid),
            None, claimed_exponent, slack, "degenerate",
        )
    slope = float(np.polyfit(np.array(lx), np.array(lr), 1)[0])
    if claimed_exponent is None:
        verdict = "unjudged"
    else:
        verdict = "pass" if slope <= claimed_exponent + slack else "fail"
    return FitReport(
        tuple(xs), tuple(sums), tuple(main), tuple(resid),
        slope, claimed_exponent, slack, verdict,
    )


def growth_diagnostic(values: Sequence[int], exponent: float) -> dict[int, float]:
    """max_{n<=N} |f(n)| / n^exponent at N in powers of 10 (report-only)."""
    out = {}
    best = 0.0
    decade = 10
    for n in range(1, len(values)):
        v = abs(values[n]) / n**exponent
        if v > best:
            best = v
        if n == decade or n == len(values) - 1:
            out[n] = best
            decade *= 10
    return out
