"""Directed-rounding float intervals and rigorously padded numpy reductions.

All analytic constants in the certified pipeline (derivative norms, Fourier
coefficient enclosures, decay constants) are computed with these enclosures
and exported as exact rationals, so downstream inequality checks stay exact.

Library elementary functions are assumed correctly rounded to within 1 ulp;
every evaluation is padded by two ulp steps in each direction on top of
interval monotonicity arguments, which is the standard slack for libm-backed
rigorous enclosures.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Tuple

import numpy as np

_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(math.nextafter(x, -_INF), -_INF)


def _up(x: float) -> float:
    return math.nextafter(math.nextafter(x, _INF), _INF)


class FI:
    """Closed float interval [lo, hi] with outward-rounded arithmetic."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        self.lo = float(lo)
        self.hi = float(hi)
        if not self.lo <= self.hi:
            raise ValueError(f"bad interval [{lo}, {hi}]")

    # -- constructors --------------------------------------------------

    @staticmethod
    def exact(x: float) -> "FI":
        return FI(x, x)

    @staticmethod
    def from_fraction(q: Fraction) -> "FI":
        f = float(q)
        if Fraction(f) == q:
            return FI(f, f)
        return FI(math.nextafter(f, -_INF), math.nextafter(f, _INF))

    @staticmethod
    def hull(*vals: "FI") -> "FI":
        return FI(min(v.lo for v in vals), max(v.hi for v in vals))

    # -- exports ---------------------------------------------------------

    def lower_fraction(self) -> Fraction:
        return Fraction(self.lo)

    def upper_fraction(self) -> Fraction:
        return Fraction(self.hi)

    def as_fractions(self) -> Tuple[Fraction, Fraction]:
        return Fraction(self.lo), Fraction(self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def __repr__(self):
        return f"FI[{self.lo!r}, {self.hi!r}]"

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        o = other if isinstance(other, FI) else FI.exact(float(other))
        return FI(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __neg__(self):
        return FI(-self.hi, -self.lo)

    def __sub__(self, other):
        o = other if isinstance(other, FI) else FI.exact(float(other))
        return FI(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = other if isinstance(other, FI) else FI.exact(float(other))
        cands = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return FI(_down(min(cands)), _up(max(cands)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = other if isinstance(other, FI) else FI.exact(float(other))
        if o.lo <= 0.0 <= o.hi:
            raise ZeroDivisionError("division by interval containing zero")
        cands = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return FI(_down(min(cands)), _up(max(cands)))

    def __rtruediv__(self, other):
        return FI.exact(float(other)) / self

    def abs(self) -> "FI":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return FI(0.0, max(-self.lo, self.hi))

    def powi(self, k: int) -> "FI":
        if k == 0:
            return FI.exact(1.0)
        if k < 0:
            return FI.exact(1.0) / self.powi(-k)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi


def fi_exp(x: FI) -> FI:
    return FI(_down(math.exp(x.lo)), _up(math.exp(x.hi)))


def fi_log(x: FI) -> FI:
    if x.lo <= 0:
        raise ValueError("log of nonpositive interval")
    return FI(_down(math.log(x.lo)), _up(math.log(x.hi)))


def fi_sqrt(x: FI) -> FI:
    if x.lo < 0:
        raise ValueError("sqrt of negative interval")
    return FI(_down(math.sqrt(x.lo)), _up(math.sqrt(x.hi)))


_PI = FI(math.nextafter(math.pi, 0.0), math.nextafter(math.pi, 4.0))
TWO_PI = _PI * 2
E_INTERVAL = FI(_down(math.e), _up(math.e))


def fi_pi() -> FI:
    return _PI


def _cos_point(x: float) -> FI:
    c = math.cos(x)
    return FI(max(-1.0, _down(c)), min(1.0, _up(c)))


def _sin_point(x: float) -> FI:
    s = math.sin(x)
    return FI(max(-1.0, _down(s)), min(1.0, _up(s)))


def fi_cos(x: FI) -> FI:
    """cos over an interval, monotonicity pieces split at multiples of pi.

    For wide arguments (width >= 2*pi) returns [-1, 1].  Argument magnitudes
    beyond 2**40 are rejected: the point evaluations would no longer be
    trustworthy at ulp scale.
    """
    if abs(x.lo) > 2 ** 40 or abs(x.hi) > 2 ** 40:
        return FI(-1.0, 1.0)
    if x.width >= 2 * math.pi:
        return FI(-1.0, 1.0)
    vals = [_cos_point(x.lo), _cos_point(x.hi)]
    # interior critical points k*pi; use conservative pi bounds
    k_min = math.floor(x.lo / math.pi) - 1
    k_max = math.ceil(x.hi / math.pi) + 1
    for k in range(k_min, k_max + 1):
        kpi = k * math.pi
        if x.lo - 1e-9 <= kpi <= x.hi + 1e-9:
            vals.append(FI.exact(1.0) if k % 2 == 0 else FI.exact(-1.0))
    lo = min(v.lo for v in vals)
    hi = max(v.hi for v in vals)
    return FI(max(lo, -1.0), min(hi, 1.0))


def fi_sin(x: FI) -> FI:
    return fi_cos(x - _PI / 2)


def pow_frac(x: FI, p_num: int, p_den: int) -> FI:
    """x**(p_num/p_den) for x > 0 via exp(log), certified."""
    return fi_exp(fi_log(x) * FI.exact(p_num) / FI.exact(p_den))


# ---------------------------------------------------------------------------
# rigorously padded numpy reductions

_ULP = 2.0 ** -53


def gamma_factor(n: int) -> float:
    """Standard gamma_n = n*u/(1-n*u) rounding bound for length-n fl dots."""
    t = n * _ULP
    if t >= 0.5:
        raise ValueError("reduction too long for float64 rigor")
    return t / (1.0 - t) * (1.0 + 1e-12)


def dot_enclosure(a_mid, a_rad, b_mid, b_rad) -> Tuple[float, float]:
    """Enclosure of sum_i A_i * B_i for intervals A = a_mid+-a_rad, B likewise.

    Arrays are float64; the result pads the floating dot of midpoints with the
    interval cross terms and the gamma-style summation error, each itself
    computed in fl arithmetic and inflated.
    """
    n = len(a_mid)
    if n == 0:
        return (0.0, 0.0)
    mid = float(np.dot(a_mid, b_mid))
    abs_a = np.abs(a_mid)
    abs_b = np.abs(b_mid)
    cross = float(np.dot(abs_a, b_rad) + np.dot(a_rad, abs_b) + np.dot(a_rad, b_rad))
    absdot = float(np.dot(abs_a, abs_b)) + cross
    g = gamma_factor(2 * n + 4)
    err = _up((cross + g * absdot) * (1.0 + 1e-12) + 4 * _ULP * (abs(mid) + 1.0))
    return (_down(mid - err), _up(mid + err))
