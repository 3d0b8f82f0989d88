# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import math
import numpy as np
from typing             import Sequence
from ..utils.exceptions import StatsError, ZeroVarianceError
from .models            import TTestResult

CF_MAX_ITERATIONS = 10000
CF_TOLERANCE = 1e-15
FPMIN = 1e-300
SIGNIFICANCE = 0.05

def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    """Modified Lentz evaluation of the incomplete beta continued fraction"""
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    d = 1.0 / (d if abs(d) >= FPMIN else FPMIN)
    h = d
    for m in range(1, CF_MAX_ITERATIONS + 1):
        m2 = 2 * m
        for aa in (m * (b - m) * x / ((qam + m2) * (a + m2)),
                   -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))):
            d = 1.0 + aa * d
            d = 1.0 / (d if abs(d) >= FPMIN else FPMIN)
            c = 1.0 + aa / c
            c = c if abs(c) >= FPMIN else FPMIN
            step = d * c
            h *= step
        if abs(step - 1.0) < CF_TOLERANCE:
            return h
    raise StatsError(f"Incomplete beta continued fraction did not converge for a={a}, b={b}, x={x}")

def regularized_incomplete_beta(x: float, a: float, b: float) -> float:
    """
    I_x(a, b) by continued fraction

    Raises:
        StatsError: If x is outside [0, 1] or a, b are not positive
    """
    if not 0.0 <= x <= 1.0:
        raise StatsError(f"Incomplete beta needs x in [0, 1], got {x}")
    if a <= 0 or b <= 0:
        raise StatsError(f"Incomplete beta needs positive shape parameters, got a={a}, b={b}")
    if x == 0.0 or x == 1.0:
        return x

    log_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                 + a * math.log(x) + b * math.log1p(-x))
    # The fraction converges fastest on this side of the mean
    if x < (a + 1.0) / (a + b + 2.0):
        return math.exp(log_front) * _beta_continued_fraction(a, b, x) / a
    return 1.0 - math.exp(log_front) * _beta_continued_fraction(b, a, 1.0 - x) / b

def t_two_sided_p(t: float, df: float) -> float:
    """P(|T| >= |t|) for Student's t with df degrees of freedom"""
    return regularized_incomplete_beta(df / (df + t * t), df / 2.0, 0.5)

def two_sample_ttest(a: Sequence[float], b: Sequence[float], equal_var: bool = True) -> TTestResult:
    """
    Two-sided two-sample t-test

    Args:
        a, b: Samples (e.g. per-run AUCs)
        equal_var: Pooled-variance Student test (df = n_a + n_b - 2) when True,
            Welch's test otherwise

    Raises:
        StatsError: If either sample has fewer than two values
        ZeroVarianceError: If the standard error of the difference is zero
    """
    xa = np.asarray(a, dtype=np.float64)
    xb = np.asarray(b, dtype=np.float64)
    na, nb = xa.shape[0], xb.shape[0]
    if na < 2 or nb < 2:
        raise StatsError(f"Each sample needs at least 2 values, got {na} and {nb}")

    va, vb = xa.var(ddof=1), xb.var(ddof=1)
    if equal_var:
        df = float(na + nb - 2)
        pooled = ((na - 1) * va + (nb - 1) * vb) / df
        se = math.sqrt(pooled * (1.0 / na + 1.0 / nb))
    else:
        qa, qb = va / na, vb / nb
        se = math.sqrt(qa + qb)
        df = (qa + qb) ** 2 / (qa ** 2 / (na - 1) + qb ** 2 / (nb - 1)) if se > 0 else 0.0

    if se == 0.0:
        raise ZeroVarianceError("Both samples are constant; the t statistic is undefined")

    t = float((xa.mean() - xb.mean()) / se)
    p = t_two_sided_p(t, df)
    return TTestResult(
        t_statistic=t,
        degrees_of_freedom=df,
        p_value=p,
        significant_at_5pct=p < SIGNIFICANCE
    )
