"""Exact arithmetic and decidable total order for radical endpoints.

The endpoint field consists of real numbers of the form ``s + sign * r**(n/m)``
with ``s, r`` rational, ``r >= 0``, ``n, m`` natural and ``m >= 1``.  These are
exactly the numbers that occur as interval endpoints in the well-approximable
level sets (centers ``a/b`` shifted by radii ``(1/b)**(2+alpha)`` with rational
``alpha``), and the point of this module is that ``<=`` and ``=`` on them are
decidable.

Equality is decided without a general real-closed-field procedure: values are
kept in a canonical form under which equal values have identical
representations, and strict order is certified by refining integer-root
enclosures down to a Mahler-type root-separation bound for the pair of
annihilating polynomials.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

Rational = Fraction


class Order(Enum):
    """Outcome of an exact comparison; exactly one tag per pair."""

    LT = -1
    EQ = 0
    GT = 1


# ---------------------------------------------------------------------------
# integer helpers


def integer_nthroot(x: int, k: int) -> Tuple[int, bool]:
    """Largest integer ``r`` with ``r**k <= x`` and whether it is exact.

    ``x >= 0`` and ``k >= 1``.  Newton iteration on integers.
    """
    if x < 0 or k < 1:
        raise ValueError("integer_nthroot needs x >= 0, k >= 1")
    if x in (0, 1) or k == 1:
        return x, True
    if k == 2:
        r = math.isqrt(x)
        return r, r * r == x
    # initial guess from bit length, then Newton; all-integer and safe
    r = 1 << -(-x.bit_length() // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r, r ** k == x


def _max_power_exponent(x: int) -> int:
    """Largest ``k`` with ``x = b**k`` for some integer ``b`` (x >= 2)."""
    best = 1
    for k in range(x.bit_length(), 1, -1):
        root, exact = integer_nthroot(x, k)
        if exact and root >= 2:
            best = k
            break
    return best


def perfect_power_decomposition(q: Rational) -> Tuple[Rational, int]:
    """Write a positive rational as ``base**k`` with ``k`` maximal.

    The base is then not a perfect ``j``-th power for any ``j >= 2``, which
    makes the canonical radical form unique.
    """
    if q <= 0:
        raise ValueError("positive rationals only")
    p, d = q.numerator, q.denominator
    if p == 1 and d == 1:
        return Fraction(1), 1
    if p == 1:
        k = _max_power_exponent(d)
    elif d == 1:
        k = _max_power_exponent(p)
    else:
        k = math.gcd(_max_power_exponent(p), _max_power_exponent(d))
    if k == 1:
        return q, 1
    pr, _ = integer_nthroot(p, k)
    dr, _ = integer_nthroot(d, k)
    return Fraction(pr, dr), k


# ---------------------------------------------------------------------------
# the endpoint value


class EValue:
    """Canonical endpoint ``s + sign * r**(n/m)``.

    Canonical form invariants:

    * rational values: ``r == 0, n == 0, m == 1, sign == 1`` and the value is
      plainly ``s``;
    * irrational values: ``r > 0`` is not a perfect power, ``gcd(n, m) == 1``,
      ``m >= 2`` and ``sign`` is ``+1`` or ``-1``.

    The serialized schema is ``{"s", "r", "n", "m"}`` plus an optional
    ``"sign"`` key that is only present for negative radical parts.  (Left
    endpoints of radius-``r**(n/m)`` balls need the negative branch; a plain
    ``s + r**(n/m)`` cannot express them.)

    Instances are immutable; enclosure refinements are cached per instance.
    """

    __slots__ = ("s", "r", "n", "m", "sign", "_encl")

    def __init__(self, s, r, n, m, sign=1, _canonical=False):
        s = Fraction(s)
        r = Fraction(r)
        if m < 1:
            raise ValueError("root index m must be >= 1")
        if r < 0:
            raise ValueError("radicand r must be >= 0")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not _canonical:
            s, r, n, m, sign = _canonicalize(s, r, n, m, sign)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "_encl", {})

    def __setattr__(self, *a):
        raise AttributeError("EValue is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.r == 0

    def rational_value(self) -> Rational:
        if not self.is_rational:
            raise ValueError("value is irrational")
        return self.s

    def _key(self):
        return (self.s, self.r, self.n, self.m, self.sign)

    def __eq__(self, other):
        return isinstance(other, EValue) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.is_rational:
            return f"EValue({self.s})"
        sgn = "-" if self.sign < 0 else "+"
        return f"EValue({self.s} {sgn} ({self.r})^({self.n}/{self.m}))"

    # -- numerics ----------------------------------------------------------

    def refine(self, precision: int) -> Tuple[Rational, Rational]:
        """Enclosure ``[lo, hi]`` with width <= 2**-precision.

        Enclosures at higher precision are nested inside lower-precision ones
        (dyadic floor construction), which several callers rely on.
        """
        if precision < 0:
            precision = 0
        if self.is_rational:
            return (self.s, self.s)
        cached = self._encl.get(precision)
        if cached is not None:
            return cached
        q = precision + 1
        num = self.r.numerator ** self.n
        den = self.r.denominator ** self.n
        t = (num << (self.m * q)) // den
        root, exact = integer_nthroot(t, self.m)
        if exact and root ** self.m * den == num << (self.m * q):
            lo = hi = Fraction(root, 1 << q)
        else:
            lo = Fraction(root, 1 << q)
            hi = Fraction(root + 2, 1 << q)
        if self.sign < 0:
            lo, hi = -hi, -lo
        res = (self.s + lo, self.s + hi)
        self._encl[precision] = res
        return res

    def to_float(self) -> float:
        lo, hi = self.refine(60)
        return float((lo + hi) / 2)


def _canonicalize(s, r, n, m, sign):
    if r == 0:
        if n == 0:
            # bare rational marker: radical contribution is zero
            return s, Fraction(0), 0, 1, 1
        return s, Fraction(0), 0, 1, 1
    if n == 0:
        # r**0 == 1 for r > 0
        return s + sign, Fraction(0), 0, 1, 1
    g = math.gcd(n, m)
    n //= g
    m //= g
    base, k = perfect_power_decomposition(r)
    if k > 1:
        r = base
        n *= k
        g = math.gcd(n, m)
        n //= g
        m //= g
    if base == 1:
        return s + sign, Fraction(0), 0, 1, 1
    if m == 1:
        return s + sign * r ** n, Fraction(0), 0, 1, 1
    return s, r, n, m, sign


def make_evalue(s, r, n: int, m: int, sign: int = 1) -> EValue:
    """Canonical endpoint numerically equal to ``s + sign * r**(n/m)``.

    Rejects ``m == 0`` and ``r < 0``.
    """
    return EValue(s, r, n, m, sign)


def from_rational(x) -> EValue:
    return EValue(Fraction(x), Fraction(0), 0, 1)


E_ZERO = from_rational(0)
E_ONE = from_rational(1)


def refine_interval(a: EValue, precision: int) -> Tuple[Rational, Rational]:
    """Rational interval containing ``a`` with width <= 2**-precision."""
    return a.refine(precision)


def affine_image(a: EValue, c, t) -> EValue:
    """The endpoint ``c*a + t`` for rational ``c >= 0`` and rational ``t``.

    Uses the closure identity ``c * r**(n/m) = (c**m * r**n) ** (1/m)``.
    Orientation-reversing maps are composed from endpoint swaps one level up,
    so negative ``c`` is rejected here.
    """
    c = Fraction(c)
    t = Fraction(t)
    if c < 0:
        raise ValueError("negative scaling is handled at the interval level")
    if a.is_rational or c == 0:
        return from_rational(c * a.s + t)
    new_r = c ** a.m * a.r ** a.n
    return EValue(c * a.s + t, new_r, 1, a.m, a.sign)


def add_rational(a: EValue, t) -> EValue:
    """The endpoint ``a + t`` for rational ``t`` (radical part untouched)."""
    t = Fraction(t)
    if a.is_rational:
        return from_rational(a.s + t)
    return EValue(a.s + t, a.r, a.n, a.m, a.sign, _canonical=True)


def exact_difference(a: EValue, b: EValue) -> Optional[Rational]:
    """``a - b`` when it is rational (equal radical parts), else None."""
    if a.is_rational and b.is_rational:
        return a.s - b.s
    if (a.r, a.n, a.m, a.sign) == (b.r, b.n, b.m, b.sign):
        return a.s - b.s
    return None


# ---------------------------------------------------------------------------
# comparison


def compare(a: EValue, b: EValue) -> Order:
    """Exact order of the represented reals; terminates on equal inputs.

    Canonical forms are unique, so equality reduces to structural equality
    plus two rational collisions (equal radical parts, or a radical part that
    is a shifted copy of the other side).  Strict order is certified by
    refining enclosures; a root-separation bound for the two annihilating
    polynomials gives the precision at which non-equal values must separate.
    """
    if a._key() == b._key():
        return Order.EQ
    if a.is_rational and b.is_rational:
        return _order_from_sign(a.s - b.s)
    d = b.s - a.s
    if d == 0:
        # compare the signed radical parts sign*r**(n/m) exactly
        return _compare_signed_radicals(a, b)
    # Distinct canonical forms with d != 0 always denote distinct reals
    # (single radicals shifted by distinct rationals cannot collide), so the
    # refinement loop below terminates; the separation bound of the pair of
    # annihilating polynomials certifies the stopping precision.
    la = a.m if not a.is_rational else 1
    lb = b.m if not b.is_rational else 1
    big_l = la * lb // math.gcd(la, lb)
    target = _separation_precision(a, b, big_l)
    prec = 16
    while True:
        alo, ahi = a.refine(prec)
        blo, bhi = b.refine(prec)
        if ahi < blo:
            return Order.LT
        if bhi < alo:
            return Order.GT
        if prec >= target:
            # closer than the separation bound: the values are equal
            return Order.EQ
        prec = min(prec * 2, target)


def _order_from_sign(x: Rational) -> Order:
    if x < 0:
        return Order.LT
    if x > 0:
        return Order.GT
    return Order.EQ


def _compare_signed_radicals(a: EValue, b: EValue) -> Order:
    """Order of sign_a*w_a vs sign_b*w_b; radical values w are > 0 or absent."""
    wa_sign = 0 if a.is_rational else a.sign
    wb_sign = 0 if b.is_rational else b.sign
    if wa_sign != wb_sign:
        return _order_from_sign(Fraction(wa_sign - wb_sign))
    # same strict sign, both irrational: compare magnitudes via L-th powers
    big_l = a.m * b.m // math.gcd(a.m, b.m)
    ua = a.r ** (a.n * big_l // a.m)
    ub = b.r ** (b.n * big_l // b.m)
    if wa_sign > 0:
        return _order_from_sign(ua - ub)
    return _order_from_sign(ub - ua)


def _separation_precision(a: EValue, b: EValue, big_l: int) -> int:
    """Precision guaranteeing separation of distinct values a, b.

    Both values are roots of ``P(X) = (X - s)**L - sign^L * u`` for their
    respective data.  Distinct roots of the product are separated by Mahler's
    bound for its squarefree part; we return ``ceil(log2(4/sep))``.
    """
    pa = _annihilator(a, big_l)
    pb = _annihilator(b, big_l)
    prod = _poly_mul(pa, pb)
    prod = _squarefree_part(prod)
    coeffs = _clear_denominators(prod)
    deg = len(coeffs) - 1
    if deg <= 1:
        return 8
    norm_sq = sum(c * c for c in coeffs)
    s_bound = math.isqrt(norm_sq) + 1
    t_bound = deg ** ((deg + 2 + 1) // 2)
    # sep > sqrt(3) * deg^-(deg+2)/2 * ||f||^-(deg-1) >= 1/(t_bound*s_bound^(deg-1))
    denom = t_bound * s_bound ** (deg - 1)
    return denom.bit_length() + 3


def _annihilator(a: EValue, big_l: int) -> List[Rational]:
    """Coefficients (low to high) of a rational polynomial with root a."""
    if a.is_rational:
        return [-a.s, Fraction(1)]
    u = a.r ** (a.n * big_l // a.m)
    # radical part w satisfies w^L = u (sign folded: for odd L, (sign*w)^L =
    # sign*u; for even L both signs are roots of X^L - u)
    rhs = u if big_l % 2 == 0 else a.sign * u
    # (X - s)^L - rhs
    poly = [Fraction(0)] * (big_l + 1)
    s = a.s
    for k in range(big_l + 1):
        poly[k] = Fraction(math.comb(big_l, k)) * (-s) ** (big_l - k)
    poly[0] -= rhs
    return poly


# -- small dense polynomial helpers over Fraction ---------------------------


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out


def _poly_diff(p):
    return [Fraction(i) * p[i] for i in range(1, len(p))]


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mod(p, q):
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    while len(p) - 1 >= dq and any(c != 0 for c in p):
        p = _poly_trim(p)
        if len(p) - 1 < dq:
            break
        factor = p[-1] / lead
        shift = len(p) - 1 - dq
        for i, c in enumerate(q):
            p[shift + i] -= factor * c
        p = _poly_trim(p[:-1] + [Fraction(0)])
        p = _poly_trim(p)
    return _poly_trim(p)


def _poly_gcd(p, q):
    p, q = _poly_trim(list(p)), _poly_trim(list(q))
    while not (len(q) == 1 and q[0] == 0):
        p, q = q, _poly_mod(p, q)
        q = _poly_trim(q)
    if p[-1] != 0:
        p = [c / p[-1] for c in p]
    return p


def _poly_divexact(p, g):
    """Divide p by g (g | p exactly in Q[X])."""
    p = _poly_trim(list(p))
    g = _poly_trim(list(g))
    out = [Fraction(0)] * (len(p) - len(g) + 1)
    while len(p) >= len(g) and any(c != 0 for c in p):
        shift = len(p) - len(g)
        factor = p[-1] / g[-1]
        out[shift] = factor
        for i, c in enumerate(g):
            p[shift + i] -= factor * c
        p = _poly_trim(p)
        if len(p) < len(g):
            break
    return _poly_trim(out)


def _squarefree_part(p):
    g = _poly_gcd(p, _poly_diff(p))
    if len(g) == 1:
        return p
    return _poly_divexact(p, g)


def _clear_denominators(p) -> List[int]:
    lcm = 1
    for c in p:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [int(c * lcm) for c in p]


# convenience relational wrappers used across the package

def ev_le(a: EValue, b: EValue) -> bool:
    return compare(a, b) is not Order.GT


def ev_lt(a: EValue, b: EValue) -> bool:
    return compare(a, b) is Order.LT


def ev_min(a: EValue, b: EValue) -> EValue:
    return a if ev_le(a, b) else b


def ev_max(a: EValue, b: EValue) -> EValue:
    return b if ev_le(a, b) else a
