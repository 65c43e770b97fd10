"""One-way ANOVA with a self-contained F-distribution tail.

The p-value comes from the regularized incomplete beta function,
evaluated by the standard continued-fraction expansion (modified Lentz),
so no statistics dependency is needed at runtime.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


class InvalidDesign(Exception):
    """The group layout cannot support a one-way ANOVA."""


@dataclass(frozen=True)
class AnovaResult:
    f: float
    df_between: int
    df_within: int
    p: float


_MAX_ITER = 500
_EPS = 1e-15


def _betacf(a: float, b: float, x: float) -> float:
    # Continued fraction for the incomplete beta, modified Lentz method.
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _EPS:
        d = _EPS
    d = 1.0 / d
    h = d
    for m in range(1, _MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _EPS:
            d = _EPS
        c = 1.0 + aa / c
        if abs(c) < _EPS:
            c = _EPS
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _EPS:
            d = _EPS
        c = 1.0 + aa / c
        if abs(c) < _EPS:
            c = _EPS
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-14:
            return h
    raise ArithmeticError(f"incomplete beta did not converge for a={a}, b={b}, x={x}")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if a <= 0 or b <= 0:
        raise ValueError("shape parameters must be positive")
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must be in [0, 1]")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def f_distribution_tail(f: float, df1: int, df2: int) -> float:
    """P(F >= f) for an F distribution with df1, df2 degrees of freedom."""
    if f < 0:
        raise ValueError("F statistic must be non-negative")
    if math.isinf(f):
        return 0.0
    x = df2 / (df2 + df1 * f)
    return regularized_incomplete_beta(df2 / 2.0, df1 / 2.0, x)


def anova_oneway(groups: Sequence[Sequence[float]]) -> AnovaResult:
    """One-way ANOVA over two or more groups of numeric observations.

    F is the ratio of between-group to within-group mean squares. With no
    between-group variance F is 0 and p is 1; with between-group variance
    but no within-group variance F is reported as +inf with p = 0.
    """
    if len(groups) < 2:
        raise InvalidDesign("need at least two groups")
    if any(len(g) < 1 for g in groups):
        raise InvalidDesign("every group needs at least one observation")
    k = len(groups)
    n_total = sum(len(g) for g in groups)
    if n_total <= k:
        raise InvalidDesign("total observations must exceed the number of groups")

    grand_mean = sum(sum(g) for g in groups) / n_total
    ss_between = sum(len(g) * (sum(g) / len(g) - grand_mean) ** 2 for g in groups)
    ss_within = sum(
        sum((x - sum(g) / len(g)) ** 2 for x in g) for g in groups
    )
    df_between = k - 1
    df_within = n_total - k

    if ss_between == 0.0:
        return AnovaResult(f=0.0, df_between=df_between, df_within=df_within, p=1.0)
    if ss_within == 0.0:
        return AnovaResult(
            f=math.inf, df_between=df_between, df_within=df_within, p=0.0
        )
    f = (ss_between / df_between) / (ss_within / df_within)
    return AnovaResult(
        f=f,
        df_between=df_between,
        df_within=df_within,
        p=f_distribution_tail(f, df_between, df_within),
    )
