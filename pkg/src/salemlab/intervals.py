"""Normalized finite unions of closed intervals over exact radical endpoints.

Carrier of every level set in the constructions: set algebra (union,
intersection), affine similarity images, the bounded Hausdorff distance of
the hyperspace metric, and certified diameter-power sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .endpoints import (
    EValue,
    Order,
    affine_image,
    compare,
    ev_le,
    ev_max,
    ev_min,
    exact_difference,
    from_rational,
)

Rational = Fraction


class IntervalUnion:
    """Sorted, pairwise-disjoint closed intervals (degenerate points allowed).

    Touching intervals are merged, so ``hi_i < lo_{i+1}`` holds strictly
    between consecutive members.  Instances are immutable.
    """

    __slots__ = ("intervals",)

    def __init__(self, intervals: Sequence[Tuple[EValue, EValue]] = (), _normalized=False):
        if _normalized:
            object.__setattr__(self, "intervals", tuple(intervals))
        else:
            object.__setattr__(self, "intervals", _normalize_pairs(intervals))

    def __setattr__(self, *a):
        raise AttributeError("IntervalUnion is immutable")

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __eq__(self, other):
        return isinstance(other, IntervalUnion) and self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __repr__(self):
        if not self.intervals:
            return "IntervalUnion(empty)"
        return "IntervalUnion(%s)" % ", ".join(
            f"[{lo!r}, {hi!r}]" for lo, hi in self.intervals[:4]
        ) + (f" ... {len(self.intervals)} intervals" if len(self.intervals) > 4 else "")

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def contains_point(self, x: EValue) -> bool:
        lob, hib = 0, len(self.intervals)
        while lob < hib:
            mid = (lob + hib) // 2
            lo, hi = self.intervals[mid]
            if compare(x, lo) is Order.LT:
                hib = mid
            elif compare(x, hi) is Order.GT:
                lob = mid + 1
            else:
                return True
        return False

    def contains_rational(self, q) -> bool:
        return self.contains_point(from_rational(q))


def _normalize_pairs(raw) -> tuple:
    pairs = []
    for lo, hi in raw:
        if compare(lo, hi) is Order.GT:
            raise ValueError("interval with lo > hi")
        pairs.append((lo, hi))
    pairs.sort(key=_SortKey)
    merged: List[Tuple[EValue, EValue]] = []
    for lo, hi in pairs:
        if merged and ev_le(lo, merged[-1][1]):
            plo, phi = merged[-1]
            merged[-1] = (plo, ev_max(phi, hi))
        else:
            merged.append((lo, hi))
    return tuple(merged)


class _SortKey:
    """Exact comparison key for sorting interval pairs by left endpoint."""

    __slots__ = ("pair",)

    def __init__(self, pair):
        self.pair = pair

    def __lt__(self, other):
        a, b = self.pair, other.pair
        c = compare(a[0], b[0])
        if c is Order.LT:
            return True
        if c is Order.GT:
            return False
        return compare(a[1], b[1]) is Order.LT


EMPTY_UNION = IntervalUnion(())
FULL_UNIT = IntervalUnion(((from_rational(0), from_rational(1)),), _normalized=True)


def normalize(raw: Iterable[Tuple[EValue, EValue]]) -> IntervalUnion:
    """Merge overlapping/touching intervals into canonical form."""
    return IntervalUnion(raw)


def union(a: IntervalUnion, b: IntervalUnion) -> IntervalUnion:
    return IntervalUnion(tuple(a.intervals) + tuple(b.intervals))


def intersect(a: IntervalUnion, b: IntervalUnion) -> IntervalUnion:
    """Exact set intersection via endpoint comparison (two-pointer sweep)."""
    out = []
    i = j = 0
    ai, bi = a.intervals, b.intervals
    while i < len(ai) and j < len(bi):
        lo = ev_max(ai[i][0], bi[j][0])
        hi = ev_min(ai[i][1], bi[j][1])
        if ev_le(lo, hi):
            out.append((lo, hi))
        # advance whichever interval ends first
        if compare(ai[i][1], bi[j][1]) is Order.LT:
            i += 1
        else:
            j += 1
    return IntervalUnion(out)


def subtract_open_ball(a: IntervalUnion, center, radius) -> IntervalUnion:
    """Remove the open ball (center−radius, center+radius), rationals only.

    Used by the hyperspace cover search, where all data is rational; the
    removed set is open so boundary points stay.
    """
    c, r = Fraction(center), Fraction(radius)
    lo_cut = from_rational(c - r)
    hi_cut = from_rational(c + r)
    out = []
    for lo, hi in a.intervals:
        if compare(hi, lo_cut) is not Order.GT or compare(lo, hi_cut) is not Order.LT:
            out.append((lo, hi))
            continue
        # interval meets the open ball; keep the closed remainders
        if compare(lo, lo_cut) is not Order.GT:
            out.append((lo, ev_min(hi, lo_cut)))
        if compare(hi, hi_cut) is not Order.LT:
            out.append((ev_max(lo, hi_cut), hi))
    return IntervalUnion(out)


def similarity(a: IntervalUnion, target_lo, target_hi) -> IntervalUnion:
    """Image of ``a ⊆ [0,1]`` under the affine map sending [0,1] onto the target."""
    tlo, thi = Fraction(target_lo), Fraction(target_hi)
    if thi < tlo:
        raise ValueError("target_lo must be <= target_hi")
    if a.intervals:
        first_lo = a.intervals[0][0]
        last_hi = a.intervals[-1][1]
        if compare(first_lo, from_rational(0)) is Order.LT or compare(
            last_hi, from_rational(1)
        ) is Order.GT:
            raise ValueError("similarity input must be a subset of [0,1]")
    c = thi - tlo
    out = [(affine_image(lo, c, tlo), affine_image(hi, c, tlo)) for lo, hi in a.intervals]
    return IntervalUnion(out)


def is_subset(a: IntervalUnion, b: IntervalUnion) -> bool:
    """Exact subset test: every interval of a is inside one interval of b."""
    j = 0
    bi = b.intervals
    for lo, hi in a.intervals:
        while j < len(bi) and compare(bi[j][1], lo) is Order.LT:
            j += 1
        if j >= len(bi):
            return False
        if not (ev_le(bi[j][0], lo) and ev_le(hi, bi[j][1])):
            return False
    return True


# ---------------------------------------------------------------------------
# Hausdorff distance (bounded form of the hyperspace metric)


@dataclass(frozen=True)
class HausdorffDistanceResult:
    """Enclosure of the bounded Hausdorff distance; width <= 2**-precision."""

    value: Tuple[Rational, Rational]
    precision: int


def hausdorff_distance(a: IntervalUnion, b: IntervalUnion, precision: int) -> HausdorffDistanceResult:
    """The bounded metric max{δ(a,b), δ(b,a)} with δ(K,L) = max d(x,L)/(1+d(x,L)).

    Empty-set cases: 0 if both empty, 1 if exactly one is empty.  For finite
    interval unions the inner max is attained at interval endpoints or gap
    midpoints of the other set, so the enclosure comes from finitely many
    candidate values refined to the requested width.
    """
    if a.is_empty and b.is_empty:
        return HausdorffDistanceResult((Fraction(0), Fraction(0)), precision)
    if a.is_empty or b.is_empty:
        return HausdorffDistanceResult((Fraction(1), Fraction(1)), precision)
    work = precision + 4
    while True:
        d1 = _directed_deviation(a, b, work)
        d2 = _directed_deviation(b, a, work)
        raw = (max(d1[0], d2[0]), max(d1[1], d2[1]))
        val = (raw[0] / (1 + raw[0]), raw[1] / (1 + raw[1]))
        if val[1] - val[0] <= Fraction(1, 2 ** precision):
            return HausdorffDistanceResult(val, precision)
        work += 8


def _directed_deviation(k: IntervalUnion, l: IntervalUnion, prec):
    """Enclosure of max_{x in k} d(x, l) (raw, untransformed distance)."""
    eps = Fraction(1, 2 ** prec)
    l_encl = [(lo.refine(prec), hi.refine(prec)) for lo, hi in l.intervals]
    gaps = []
    for idx in range(len(l.intervals) - 1):
        g1 = l.intervals[idx][1].refine(prec)
        g2 = l.intervals[idx + 1][0].refine(prec)
        mid = ((g1[0] + g2[0]) / 2, (g1[1] + g2[1]) / 2)
        half = ((g2[0] - g1[1]) / 2, (g2[1] - g1[0]) / 2)
        gaps.append((mid, half))
    lo_best = Fraction(0)
    hi_best = Fraction(0)
    for lo, hi in k.intervals:
        ka = lo.refine(prec)
        kb = hi.refine(prec)
        for pt in (ka, kb):
            dl, dh = _point_set_distance(pt, l_encl)
            lo_best = max(lo_best, dl)
            hi_best = max(hi_best, dh)
        for mid, half in gaps:
            # candidate only counts if the gap midpoint lies in [lo, hi]
            certainly_in = ka[1] <= mid[0] and mid[1] <= kb[0]
            possibly_in = ka[0] <= mid[1] + eps and mid[0] - eps <= kb[1]
            if certainly_in:
                lo_best = max(lo_best, max(half[0], Fraction(0)))
            if possibly_in:
                hi_best = max(hi_best, max(half[1], Fraction(0)))
    return (lo_best, hi_best)


def _point_set_distance(pt, l_encl):
    """Enclosure of d(x, L) for x enclosed by pt, L by interval enclosures."""
    best_lo = None
    best_hi = None
    for (alo, ahi), (blo, bhi) in l_encl:
        # distance from x to [a, b]: max(a - x, x - b, 0)
        cand_lo = max(alo - pt[1], pt[0] - bhi, Fraction(0))
        cand_hi = max(ahi - pt[0], pt[1] - blo, Fraction(0))
        if best_hi is None or cand_hi < best_hi:
            best_hi = cand_hi
        if best_lo is None or cand_lo < best_lo:
            best_lo = cand_lo
    return (best_lo, best_hi)


# ---------------------------------------------------------------------------
# certified diameter-power sums


def sqrt_upper(x: Rational, work_bits: int) -> Rational:
    """Rational upper bound on sqrt(x), within 2**-work_bits."""
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return Fraction(0)
    scale = 1 << (2 * work_bits)
    t = x.numerator * scale // x.denominator
    if t * x.denominator < x.numerator * scale:
        t += 1
    root = math.isqrt(t)
    if root * root < t:
        root += 1
    return Fraction(root, 1 << work_bits)


def sqrt_lower(x: Rational, work_bits: int) -> Rational:
    if x <= 0:
        return Fraction(0)
    scale = 1 << (2 * work_bits)
    t = x.numerator * scale // x.denominator
    return Fraction(math.isqrt(t), 1 << work_bits)


def dyadic_power_upper(x: Rational, s_num: int, s_den_log2: int, work_bits: int) -> Rational:
    """Upper bound on x**(s_num / 2**s_den_log2) for x >= 0.

    Computed as s_den_log2 iterated certified square roots of x**s_num; only
    dyadic exponents are needed by the shrink-stage bookkeeping.
    """
    if x < 0:
        raise ValueError("negative base")
    val = x ** s_num
    for _ in range(s_den_log2):
        val = sqrt_upper(val, work_bits)
    return val


def dyadic_power_lower(x: Rational, s_num: int, s_den_log2: int, work_bits: int) -> Rational:
    if x <= 0:
        return Fraction(0)
    val = x ** s_num
    for _ in range(s_den_log2):
        val = sqrt_lower(val, work_bits)
    return val


def diam_power_sum(a: IntervalUnion, s_num: int, s_den_log2: int, precision: int) -> Rational:
    """Certified upper bound on sum_i diam(I_i)**s, s = s_num * 2**-s_den_log2.

    The bound is within 2**-precision of the true sum.  Exponent must lie in
    (0, 1]; diameters use exact rational differences when the two endpoints
    share a radical and certified enclosures otherwise.
    """
    s = Fraction(s_num, 2 ** s_den_log2)
    if not (0 < s <= 1):
        raise ValueError("exponent must be in (0, 1]")
    count = max(1, len(a.intervals))
    work = precision + s_den_log2 + count.bit_length() + 4
    total = Fraction(0)
    for lo, hi in a.intervals:
        diff = exact_difference(hi, lo)
        if diff is None:
            llo, lhi = lo.refine(work)
            hlo, hhi = hi.refine(work)
            diff_hi = hhi - llo
        else:
            diff_hi = diff
        diff_hi = max(diff_hi, Fraction(0))
        total += dyadic_power_upper(diff_hi, s_num, s_den_log2, work)
    return total
