"""Closed-form bound evaluation and the numeric derivation chain.

Every bound here is a leading term only: the suppressed lower-order
contribution grows like o(n^{3/2}) with no explicit constant, so reports
carry an ``excludes_lower_order`` flag and nothing in this module is ever
asserted against finite-n exact values as an upper bound.

The derivation check certifies, with outward-rounded interval arithmetic,
that the three-term bound instantiated at g(t) = sqrt(t ln t)/7 stays below
the single-formula bound (t^{3/2} + 55 t sqrt(ln t))/6 across a log grid of
t values: the inequality chain behind the headline constant.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable


def epsilon(delta: float) -> float:
    """Loss factor (1 + ln(delta+1))/(delta+1) of the dominated-set bound."""
    if delta < 2:
        raise ValueError(f"delta must be >= 2, got {delta}")
    return (1.0 + math.log(delta + 1.0)) / (delta + 1.0)


def default_g(t: float) -> float:
    """The g choice sqrt(t ln t)/7 that yields the headline bound."""
    return math.sqrt(t * math.log(t)) / 7.0


@dataclass
class BoundReport:
    """Evaluated bound with its term breakdown and normalized ratios."""

    inputs: dict
    terms: dict[str, float]
    total: float
    ratio_n32: float
    ratio_main_term: float
    excludes_lower_order: bool = True
    flags: dict[str, bool] = field(default_factory=dict)


def _n32(n: float) -> float:
    return n * math.sqrt(n)


def k2t_upper_bound(n: float, t: int) -> BoundReport:
    """Leading term (1/6)(t^{3/2} + 55 t sqrt(ln t)) n^{3/2}, for t >= 14."""
    if t < 14:
        raise ValueError(f"bound holds for t >= 14, got {t}")
    main = t ** 1.5 / 6.0 * _n32(n)
    log_term = 55.0 * t * math.sqrt(math.log(t)) / 6.0 * _n32(n)
    total = main + log_term
    return BoundReport(
        inputs={"n": n, "t": t},
        terms={"main": main, "log_term": log_term},
        total=total,
        ratio_n32=total / _n32(n),
        ratio_main_term=total / main,
    )


def three_term_upper_bound(n: float, t: int, g: Callable[[float], float]) -> BoundReport:
    """Sum of the sparse/medium/dense contributions for an admissible g.

    g must satisfy 14 <= t/g(t) <= t; the error message names the violated
    side.
    """
    gt = g(t)
    ratio = t / gt
    if ratio < 14:
        raise ValueError(f"t/g(t) = {ratio:.4f} violates the lower bound 14")
    if ratio > t:
        raise ValueError(f"t/g(t) = {ratio:.4f} violates the upper bound t = {t}")
    sparse = 0.5 * math.sqrt(t - 1) * _n32(n)
    medium = math.sqrt(6.0) / 2.0 * t ** 1.5 / gt * _n32(n)
    dense = (t + 5.0 * gt * math.log(t)) ** 1.5 / 6.0 * _n32(n)
    total = sparse + medium + dense
    return BoundReport(
        inputs={"n": n, "t": t, "g(t)": gt, "t/g(t)": ratio},
        terms={"sparse": sparse, "medium": medium, "dense": dense},
        total=total,
        ratio_n32=total / _n32(n),
        ratio_main_term=total / (t ** 1.5 / 6.0 * _n32(n)),
    )


def medium_codegree_bound(n: float, t: int, delta: float, k: float) -> float:
    """Leading term delta * (1/2) sqrt(k + 3t - 3) n^{3/2}, for t >= 4."""
    if t < 4:
        raise ValueError(f"medium co-degree bound needs t >= 4, got {t}")
    if delta < 2 or k < 2:
        raise ValueError("delta and k must be >= 2")
    return delta * 0.5 * math.sqrt(k + 3 * t - 3) * _n32(n)


def high_codegree_bound(n: float, k: float) -> float:
    """Leading term (1/6) k^{3/2} n^{3/2} for the dense edge class."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    return k ** 1.5 / 6.0 * _n32(n)


def quadratic_root(b: float, c: float, n: float) -> float:
    """Positive root (b + sqrt(b^2 + 4cn))/2 bounding an average degree d
    with d^2 - b d - c n <= 0."""
    return (b + math.sqrt(b * b + 4.0 * c * n)) / 2.0


# -- outward-rounded interval arithmetic -----------------------------------


def _down(x: float) -> float:
    return math.nextafter(x, -math.inf)


def _up(x: float) -> float:
    return math.nextafter(x, math.inf)


@dataclass(frozen=True)
class Interval:
    """Closed interval with outward rounding after every operation."""

    lo: float
    hi: float

    @staticmethod
    def point(x: float) -> "Interval":
        return Interval(x, x)

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(_down(self.lo + other.lo), _up(self.hi + other.hi))

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(_down(self.lo - other.hi), _up(self.hi - other.lo))

    def __mul__(self, other: "Interval") -> "Interval":
        prods = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(_down(min(prods)), _up(max(prods)))

    def __truediv__(self, other: "Interval") -> "Interval":
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval division through zero")
        quots = (
            self.lo / other.lo,
            self.lo / other.hi,
            self.hi / other.lo,
            self.hi / other.hi,
        )
        return Interval(_down(min(quots)), _up(max(quots)))

    def scale(self, k: float) -> "Interval":
        return self * Interval.point(k)

    def sqrt(self) -> "Interval":
        if self.lo < 0:
            raise ValueError("sqrt of an interval reaching below zero")
        return Interval(_down(math.sqrt(self.lo)), _up(math.sqrt(self.hi)))

    def log(self) -> "Interval":
        if self.lo <= 0:
            raise ValueError("log of an interval reaching zero")
        # libm log is within 1 ulp; widen twice to stay conservative
        return Interval(_down(_down(math.log(self.lo))), _up(_up(math.log(self.hi))))

    def pow32(self) -> "Interval":
        """x^{3/2} for nonnegative intervals."""
        return self * self.sqrt()


def epsilon_interval(delta: float) -> Interval:
    d1 = Interval.point(delta) + Interval.point(1.0)
    return (d1.log() + Interval.point(1.0)) / d1


@dataclass
class DerivationPoint:
    """Interval comparison of the two upper bounds at one t."""

    t: int
    lhs_hi: float
    rhs_lo: float
    certified: bool


def log_grid(lo: float = 14.0, hi: float = 1e6, points: int = 1000) -> list[int]:
    """At least ``points`` distinct integer t values log-spread over [lo, hi].

    Oversamples until rounding collisions no longer shrink the grid below
    the requested size (or the integer range is exhausted).
    """
    floor_lo, ceil_hi = int(math.ceil(lo)), int(hi)
    available = ceil_hi - floor_lo + 1
    m = points
    while True:
        raw = (lo * (hi / lo) ** (i / (m - 1)) for i in range(m))
        grid = sorted({min(max(int(round(x)), floor_lo), ceil_hi) for x in raw})
        if len(grid) >= min(points, available):
            return grid
        m = m * 13 // 10 + 1


def derivation_check(t_values: Iterable[int] | None = None) -> list[DerivationPoint]:
    """Certify three_term(g = sqrt(t ln t)/7) <= single-formula bound per t.

    Runs entirely in outward-rounded intervals so a True verdict is a
    rigorous inequality, not a float coincidence.  The common n^{3/2} factor
    cancels; the comparison is between coefficient intervals.
    """
    sixth = Interval(_down(1.0 / 6.0), _up(1.0 / 6.0))
    half = Interval.point(0.5)
    out = []
    for t in t_values if t_values is not None else log_grid():
        ti = Interval.point(float(t))
        lt = ti.log()
        g = (ti * lt).sqrt() / Interval.point(7.0)
        ratio = ti / g
        # Only the lower domain side matters for the comparison; the upper
        # side t/g <= t fails for t <= 17 (t ln t < 49) yet the inequality
        # below still holds with slack there.
        if ratio.lo < 14.0:
            raise ValueError(f"t/g(t) dips below 14 at t={t}")
        sparse = half * (ti - Interval.point(1.0)).sqrt()
        medium = Interval.point(6.0).sqrt() / Interval.point(2.0) * ti.pow32() / g
        dense = sixth * (ti + Interval.point(5.0) * g * lt).pow32()
        lhs = sparse + medium + dense
        rhs = sixth * (ti.pow32() + Interval.point(55.0) * ti * lt.sqrt())
        out.append(DerivationPoint(t, lhs.hi, rhs.lo, lhs.hi <= rhs.lo))
    return out


# -- ratio reporting --------------------------------------------------------

C4_WINDOW = (0.5, 5.0 / 6.0)


def ratio_table(rows: Iterable) -> str:
    """CSV of exact/constructed values normalized by n^{3/2} scales.

    Accepts objects with n/t/value attributes, dicts, or (n, t, value)
    tuples.  For t = 2 the asymptotic window [1/2, 5/6] is attached for
    reference only; finite-n values may legitimately fall outside it.
    """
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        ["n", "t", "value", "value/n^1.5", "value/(t^1.5 n^1.5 / 6)", "window_lo", "window_hi"]
    )
    for row in rows:
        if isinstance(row, dict):
            n, t, value = row["n"], row["t"], row["value"]
        elif isinstance(row, tuple):
            n, t, value = row[:3]
        else:
            n, t, value = row.n, row.t, row.value
        r1 = value / _n32(n)
        r2 = value / (t ** 1.5 * _n32(n) / 6.0)
        window = C4_WINDOW if t == 2 else ("", "")
        writer.writerow([n, t, value, f"{r1:.6f}", f"{r2:.6f}", window[0], window[1]])
    return buf.getvalue()
