"""Arbitrary-precision dyadic floats, real intervals and rigorous elementary functions.

A :class:`BigFloat` is an exact dyadic rational ``man * 2**exp``.  Rounding is
never implicit: every inexact operation takes a target precision and a
direction, so interval endpoints can be rounded outward.

Elementary functions are evaluated in fixed point (a Python ``int`` scaled by
``2**-U``) at ``p + GUARD_BITS`` bits.  Every series keeps separate lower and
upper partial sums and adds an explicit remainder bound, so the returned
interval provably contains the exact value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZeroInterval, DomainError

GUARD_BITS = 32
MIN_PRECISION = 24


# ---------------------------------------------------------------------------
# BigFloat
# ---------------------------------------------------------------------------

def _normalize(man: int, exp: int) -> tuple[int, int]:
    if man == 0:
        return 0, 0
    tz = (man & -man).bit_length() - 1
    return man >> tz, exp + tz


def _round(man: int, exp: int, prec: int, up: bool) -> tuple[int, int]:
    bl = abs(man).bit_length()
    if bl > prec:
        shift = bl - prec
        man = -((-man) >> shift) if up else man >> shift
        exp += shift
    return _normalize(man, exp)


@dataclass(frozen=True, slots=True)
class BigFloat:
    """Exact dyadic number ``man * 2**exp`` with an odd (or zero) mantissa.

    The canonical odd-mantissa form makes equality structural.  Precision is
    not stored on the number; it is a parameter of each rounded operation.
    """

    man: int
    exp: int = 0

    @staticmethod
    def make(man: int, exp: int = 0) -> BigFloat:
        return BigFloat(*_normalize(man, exp))

    @staticmethod
    def rounded(man: int, exp: int, prec: int, up: bool) -> BigFloat:
        return BigFloat(*_round(man, exp, prec, up))

    @staticmethod
    def from_fraction(q: Fraction, prec: int, up: bool) -> BigFloat:
        num, den = q.numerator, q.denominator
        if den & (den - 1) == 0:
            return BigFloat.rounded(num, -(den.bit_length() - 1), prec, up)
        k = max(0, prec + den.bit_length() - num.bit_length() + 2)
        quo, rem = divmod(num << k, den)
        if up and rem:
            quo += 1
        return BigFloat.rounded(quo, -k, prec, up)

    # -- inspection -------------------------------------------------------
    @property
    def sign(self) -> int:
        return (self.man > 0) - (self.man < 0)

    def is_zero(self) -> bool:
        return self.man == 0

    def magnitude(self) -> int:
        """Exponent ``m`` with ``2**(m-1) <= |x| < 2**m`` (x nonzero)."""
        return self.exp + abs(self.man).bit_length()

    def to_fraction(self) -> Fraction:
        if self.exp >= 0:
            return Fraction(self.man << self.exp)
        return Fraction(self.man, 1 << -self.exp)

    def __float__(self) -> float:
        if self.man == 0:
            return 0.0
        m, e = self.man, self.exp
        bl = abs(m).bit_length()
        if bl > 60:
            m >>= bl - 60
            e += bl - 60
        try:
            return math.ldexp(float(m), e)
        except OverflowError:
            return math.copysign(math.inf, m)

    def fixed(self, scale: int, up: bool) -> int:
        """Floor (or ceiling) of ``self * 2**scale`` as an integer."""
        shift = self.exp + scale
        if shift >= 0:
            return self.man << shift
        if up:
            return -((-self.man) >> -shift)
        return self.man >> -shift

    def __neg__(self) -> BigFloat:
        return BigFloat(-self.man, self.exp)

    def __abs__(self) -> BigFloat:
        return BigFloat(abs(self.man), self.exp)

    # -- exact comparison --------------------------------------------------
    def _cmp(self, other: BigFloat) -> int:
        if self.sign != other.sign:
            return (self.sign > other.sign) - (self.sign < other.sign)
        if self.man == 0:
            return 0
        e = min(self.exp, other.exp)
        a = self.man << (self.exp - e)
        b = other.man << (other.exp - e)
        return (a > b) - (a < b)

    def __lt__(self, other: BigFloat) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: BigFloat) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: BigFloat) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: BigFloat) -> bool:
        return self._cmp(other) >= 0

    def __repr__(self) -> str:
        return f"BigFloat({self.man}, {self.exp})"


ZERO = BigFloat(0, 0)
ONE = BigFloat(1, 0)


def bf_add(a: BigFloat, b: BigFloat, prec: int, up: bool) -> BigFloat:
    if a.man == 0:
        return BigFloat.rounded(b.man, b.exp, prec, up)
    if b.man == 0:
        return BigFloat.rounded(a.man, a.exp, prec, up)
    # A far smaller addend only matters through its sign: replace it by a
    # sticky value below the rounding position.
    if a.magnitude() < b.magnitude():
        a, b = b, a
    if b.magnitude() < a.magnitude() - prec - 4:
        e = a.magnitude() - prec - 8
        b = BigFloat(b.sign, e)
        if a.exp > e:
            a = BigFloat(a.man << (a.exp - e), e)
    e = min(a.exp, b.exp)
    man = (a.man << (a.exp - e)) + (b.man << (b.exp - e))
    return BigFloat.rounded(man, e, prec, up)


def bf_sub(a: BigFloat, b: BigFloat, prec: int, up: bool) -> BigFloat:
    return bf_add(a, -b, prec, up)


def bf_mul(a: BigFloat, b: BigFloat, prec: int, up: bool) -> BigFloat:
    return BigFloat.rounded(a.man * b.man, a.exp + b.exp, prec, up)


def bf_div(a: BigFloat, b: BigFloat, prec: int, up: bool) -> BigFloat:
    if b.man == 0:
        raise ZeroDivisionError("BigFloat division by zero")
    if a.man == 0:
        return ZERO
    k = max(0, prec + abs(b.man).bit_length() - abs(a.man).bit_length() + 2)
    quo, rem = divmod(a.man << k, b.man)
    if up and rem:
        quo += 1
    return BigFloat.rounded(quo, a.exp - k - b.exp, prec, up)


def bf_sqrt(a: BigFloat, prec: int, up: bool) -> BigFloat:
    if a.man < 0:
        raise DomainError("sqrt of negative number")
    if a.man == 0:
        return ZERO
    s = max(0, 2 * prec + 4 - a.man.bit_length())
    if (a.exp - s) % 2:
        s += 1
    n = a.man << s
    root = math.isqrt(n)
    if up and root * root != n:
        root += 1
    return BigFloat.rounded(root, (a.exp - s) // 2, prec, up)


def _bf_min(*xs: BigFloat) -> BigFloat:
    best = xs[0]
    for x in xs[1:]:
        if x < best:
            best = x
    return best


def _bf_max(*xs: BigFloat) -> BigFloat:
    best = xs[0]
    for x in xs[1:]:
        if x > best:
            best = x
    return best


def ulp(x: BigFloat, prec: int) -> BigFloat:
    """Unit in the last place of ``x`` at ``prec`` bits (2**-prec for x = 0)."""
    if x.man == 0:
        return BigFloat(1, -prec)
    return BigFloat(1, x.magnitude() - prec)


# ---------------------------------------------------------------------------
# Fixed-point series kernels.  All operate on ints scaled by 2**-U and return
# (lower, upper) integer bounds at the same scale.
# ---------------------------------------------------------------------------

def _cdiv(a: int, b: int) -> int:
    return -((-a) // b)


def _atan_inv_fixed(n: int, scale: int) -> tuple[int, int]:
    """Bounds of atan(1/n) * 2**scale by the alternating Gregory series."""
    one = 1 << scale
    n2 = n * n
    lo = hi = 0
    den = n
    k = 0
    while True:
        t_lo = one // (den * (2 * k + 1))
        t_hi = _cdiv(one, den * (2 * k + 1))
        if t_hi <= 1 and k > 0:
            # alternating, decreasing terms: remainder bounded by this term
            return lo - t_hi, hi + t_hi
        if k % 2 == 0:
            lo += t_lo
            hi += t_hi
        else:
            lo -= t_hi
            hi -= t_lo
        den *= n2
        k += 1


@lru_cache(maxsize=64)
def pi_fixed(scale: int) -> tuple[int, int]:
    """Bounds of pi * 2**scale via Machin's formula 16 atan(1/5) - 4 atan(1/239)."""
    w = scale + 8
    a_lo, a_hi = _atan_inv_fixed(5, w)
    b_lo, b_hi = _atan_inv_fixed(239, w)
    lo = 16 * a_lo - 4 * b_hi
    hi = 16 * a_hi - 4 * b_lo
    return lo >> 8, _cdiv(hi, 1 << 8)


@lru_cache(maxsize=64)
def e_fixed(scale: int) -> tuple[int, int]:
    """Bounds of e * 2**scale from sum 1/k!, tail below 2/(n+1)!."""
    w = scale + 8
    one = 1 << w
    lo = hi = 0
    t_lo = t_hi = one
    k = 0
    while True:
        lo += t_lo
        hi += t_hi
        k += 1
        t_lo //= k
        t_hi = _cdiv(t_hi, k)
        if t_hi <= 1:
            # tail sum_{j>=k} 1/j! <= 2/k! <= 2 * t_hi
            hi += 2 * t_hi
            break
    return lo >> 8, _cdiv(hi, 1 << 8)


@lru_cache(maxsize=64)
def ln2_fixed(scale: int) -> tuple[int, int]:
    """Bounds of ln 2 * 2**scale from ln 2 = 2 atanh(1/3)."""
    w = scale + 8
    one = 1 << w
    lo = hi = 0
    den = 3
    k = 0
    while True:
        t_lo = (2 * one) // (den * (2 * k + 1))
        t_hi = _cdiv(2 * one, den * (2 * k + 1))
        lo += t_lo
        hi += t_hi
        if t_hi <= 1:
            # positive terms with ratio < 1/9: remainder below this term
            hi += t_hi
            break
        den *= 9
        k += 1
    return lo >> 8, _cdiv(hi, 1 << 8)


def _exp_fixed_nonneg(r: int, scale: int, up: bool) -> int:
    """Bound of exp(r / 2**scale) * 2**scale for 0 <= r <= 2**scale."""
    s = 10
    u = scale + 2 * s + 8
    x = r << (u - scale - s)  # r / 2**s at scale u, exact
    one = 1 << u
    total = one
    term = one
    k = 1
    while True:
        if up:
            term = _cdiv(_cdiv(term * x, one), k)
        else:
            term = ((term * x) >> u) // k
        if term == 0:
            break
        total += term
        if up and term <= 1:
            # ratio of successive terms < 2**-s: tail below current term
            total += term
            break
        k += 1
    for _ in range(s):
        total = _cdiv(total * total, one) if up else (total * total) >> u
    shift = u - scale
    return _cdiv(total, 1 << shift) if up else total >> shift


def _exp_fixed(r: int, scale: int, up: bool) -> int:
    if r >= 0:
        return _exp_fixed_nonneg(r, scale, up)
    inv = _exp_fixed_nonneg(-r, scale, not up)
    num = 1 << (2 * scale)
    return _cdiv(num, inv) if up else num // inv


def _atanh_fixed(z: int, scale: int, up: bool) -> int:
    """Bound of atanh(z / 2**scale) * 2**scale for |z| <= 2**scale / 4."""
    if z < 0:
        return -_atanh_fixed(-z, scale, not up)
    if z == 0:
        return 0
    one = 1 << scale
    if up:
        z2 = _cdiv(z * z, one)
    else:
        z2 = (z * z) >> scale
    power = z
    total = 0
    k = 0
    while True:
        term = _cdiv(power, 2 * k + 1) if up else power // (2 * k + 1)
        total += term
        if term == 0:
            break
        if up and term <= 1:
            # ratio < 1/16 for |z| <= 1/4: remainder below current term
            total += term
            break
        power = _cdiv(power * z2, one) if up else (power * z2) >> scale
        k += 1
    return total


def _sin_cos_series(r: int, scale: int, odd: bool) -> tuple[int, int]:
    """Bounds of sin (odd) or cos (even) of r / 2**scale for 0 <= r <= 2**scale.

    Alternating series with decreasing terms, so the truncation error is
    bounded by the first omitted term.
    """
    one = 1 << scale
    r2_lo = (r * r) >> scale
    r2_hi = _cdiv(r * r, one)
    if odd:
        t_lo = t_hi = r
        k = 1
    else:
        t_lo = t_hi = one
        k = 0
    lo = hi = 0
    j = 0
    while True:
        if j % 2 == 0:
            lo += t_lo
            hi += t_hi
        else:
            lo -= t_hi
            hi += -t_lo
        d = (k + 1) * (k + 2)
        t_lo = ((t_lo * r2_lo) >> scale) // d
        t_hi = _cdiv(_cdiv(t_hi * r2_hi, one), d)
        k += 2
        j += 1
        if t_hi <= 1:
            return lo - t_hi, hi + t_hi


def _atan_series(z: int, scale: int) -> tuple[int, int]:
    """Bounds of atan(z / 2**scale) * 2**scale for 0 <= z <= 2**scale / 4."""
    one = 1 << scale
    z2_lo = (z * z) >> scale
    z2_hi = _cdiv(z * z, one)
    p_lo = p_hi = z
    lo = hi = 0
    k = 0
    while True:
        t_lo = p_lo // (2 * k + 1)
        t_hi = _cdiv(p_hi, 2 * k + 1)
        if t_hi <= 1 and k > 0:
            return lo - t_hi, hi + t_hi
        if k % 2 == 0:
            lo += t_lo
            hi += t_hi
        else:
            lo -= t_hi
            hi -= t_lo
        p_lo = (p_lo * z2_lo) >> scale
        p_hi = _cdiv(p_hi * z2_hi, one)
        k += 1


def _atan_fixed_unit(z: int, scale: int, up: bool) -> int:
    """One-sided bound of atan(z / 2**scale) * 2**scale for 0 <= z <= 2**scale.

    Two half-angle steps z -> z / (1 + sqrt(1 + z^2)) bring z below
    tan(pi/16).  The step is increasing in z, so rounding every operation
    toward the wanted side keeps the bound one-sided.
    """
    one = 1 << scale
    for _ in range(2):
        n = one * one + z * z
        root = math.isqrt(n)
        if up:
            z = _cdiv(z * one, one + root)
        else:
            if root * root != n:
                root += 1
            z = (z * one) // (one + root)
    lo, hi = _atan_series(z, scale)
    return 4 * (hi if up else lo)


# ---------------------------------------------------------------------------
# Point kernels: BigFloat -> (lower BigFloat, upper BigFloat), exact dyadics.
# ---------------------------------------------------------------------------

def _exp_point(x: BigFloat, wp: int) -> tuple[BigFloat, BigFloat]:
    if x.man == 0:
        return ONE, ONE
    if x.magnitude() > 64:
        raise OverflowError("exp argument too large")
    k = math.floor(float(x) / math.log(2))
    scale = wp + abs(k).bit_length() + 16
    l2_lo, l2_hi = ln2_fixed(scale)
    x_lo = x.fixed(scale, False)
    x_hi = x.fixed(scale, True)
    if k >= 0:
        r_lo, r_hi = x_lo - k * l2_hi, x_hi - k * l2_lo
    else:
        r_lo, r_hi = x_lo - k * l2_lo, x_hi - k * l2_hi
    e_lo = _exp_fixed(r_lo, scale, False)
    e_hi = _exp_fixed(r_hi, scale, True)
    return BigFloat.make(e_lo, k - scale), BigFloat.make(e_hi, k - scale)


def _ln_point(x: BigFloat, wp: int) -> tuple[BigFloat, BigFloat]:
    if x.man <= 0:
        raise DomainError("ln of non-positive number")
    m = x.man
    bl = m.bit_length()
    d_exp = bl - 1
    k = x.exp + bl - 1
    # y = m / 2**d_exp in [1, 2); fold to [2/3, 4/3)
    if 3 * m > 4 << d_exp:
        d_exp += 1
        k += 1
    den = 1 << d_exp
    num_z = m - den
    den_z = m + den
    if num_z == 0 and k == 0:
        return ZERO, ZERO
    extra = 0
    if k == 0:
        extra = max(0, den_z.bit_length() - abs(num_z).bit_length())
    scale = wp + 16 + extra + abs(k).bit_length()
    z_lo = (num_z << scale) // den_z
    z_hi = _cdiv(num_z << scale, den_z)
    a_lo = 2 * _atanh_fixed(z_lo, scale, False)
    a_hi = 2 * _atanh_fixed(z_hi, scale, True)
    if k:
        l2_lo, l2_hi = ln2_fixed(scale)
        if k > 0:
            a_lo += k * l2_lo
            a_hi += k * l2_hi
        else:
            a_lo += k * l2_hi
            a_hi += k * l2_lo
    return BigFloat.make(a_lo, -scale), BigFloat.make(a_hi, -scale)


def _pi_over_two_multiple(x: BigFloat) -> int:
    """Integer k with |x - k pi/2| small (any k is sound; this one is near)."""
    mag = max(x.magnitude(), 1)
    p_lo, _ = pi_fixed(mag + 64)
    q = x.to_fraction() * 2 * (1 << (mag + 64)) / p_lo
    return round(q)


def _sincos_point(x: BigFloat, wp: int) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Return ((sin_lo, sin_hi, scale), (cos_lo, cos_hi, scale)) for point x."""
    k = _pi_over_two_multiple(x)
    scale = wp + abs(k).bit_length() + 16
    p_lo, p_hi = pi_fixed(scale + 1)
    # r = x - k pi/2, at scale + 1
    s1 = scale + 1
    x_lo, x_hi = x.fixed(s1, False), x.fixed(s1, True)
    if k >= 0:
        r_lo = 2 * x_lo - k * p_hi
        r_hi = 2 * x_hi - k * p_lo
    else:
        r_lo = 2 * x_lo - k * p_lo
        r_hi = 2 * x_hi - k * p_hi
    # now r at scale s1 + 1; bring back to scale (floor/ceil)
    shift = 2
    r_lo >>= shift
    r_hi = _cdiv(r_hi, 1 << shift)

    def sin_at(r: int, up: bool) -> int:
        if r >= 0:
            lo, hi = _sin_cos_series(r, scale, True)
            return hi if up else lo
        lo, hi = _sin_cos_series(-r, scale, True)
        return -lo if up else -hi

    def cos_at(r: int, up: bool) -> int:
        lo, hi = _sin_cos_series(abs(r), scale, False)
        return hi if up else lo

    s_lo, s_hi = sin_at(r_lo, False), sin_at(r_hi, True)
    if r_lo >= 0:
        c_lo, c_hi = cos_at(r_hi, False), cos_at(r_lo, True)
    elif r_hi <= 0:
        c_lo, c_hi = cos_at(r_lo, False), cos_at(r_hi, True)
    else:
        c_lo = min(cos_at(r_lo, False), cos_at(r_hi, False))
        c_hi = 1 << scale
    q = k % 4
    sin_b, cos_b = (s_lo, s_hi), (c_lo, c_hi)
    neg = lambda b: (-b[1], -b[0])  # noqa: E731
    if q == 0:
        res = sin_b, cos_b
    elif q == 1:
        res = cos_b, neg(sin_b)
    elif q == 2:
        res = neg(sin_b), neg(cos_b)
    else:
        res = neg(cos_b), sin_b
    one = 1 << scale
    clamp = lambda b: (max(b[0], -one), min(b[1], one))  # noqa: E731
    (a, b), (c, d) = clamp(res[0]), clamp(res[1])
    return (a, b, scale), (c, d, scale)


def _atan_point(x: BigFloat, wp: int, up: bool) -> BigFloat:
    """One-sided bound of atan(x)."""
    if x.man == 0:
        return ZERO
    if x.man < 0:
        return -_atan_point(-x, wp, not up)
    scale = wp + 16
    one = 1 << scale
    if x <= ONE:
        z = x.fixed(scale, up)
        return BigFloat.make(_atan_fixed_unit(min(z, one), scale, up), -scale)
    # atan(x) = pi/2 - atan(1/x); atan increasing, so bound 1/x the other way
    sh = scale - x.exp
    if sh < 0:
        inv = 0 if up else 1
    else:
        inv = _cdiv(1 << sh, x.man) if not up else (1 << sh) // x.man
    a = _atan_fixed_unit(min(inv, one), scale, not up)
    # pi * 2**scale is pi/2 at scale + 1
    p_lo, p_hi = pi_fixed(scale)
    if up:
        return BigFloat.make(p_hi - 2 * a, -(scale + 1))
    return BigFloat.make(p_lo - 2 * a, -(scale + 1))


# ---------------------------------------------------------------------------
# RInterval
# ---------------------------------------------------------------------------

Number = int | Fraction



@dataclass(frozen=True, slots=True)
class RInterval:
    """Closed real interval ``[lo, hi]`` with outward-rounded dyadic endpoints.

    ``prec`` is the working precision (bits) used to round results of
    operations involving this interval.
    """

    lo: BigFloat
    hi: BigFloat
    prec: int = 53

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval: {self.lo!r} > {self.hi!r}")

    # -- construction -----------------------------------------------------
    @staticmethod
    def point(x: Number | BigFloat, prec: int = 53) -> RInterval:
        """Enclosure of an exact number; exact when ``x`` is dyadic."""
        if isinstance(x, BigFloat):
            return RInterval(x, x, prec)
        if isinstance(x, int):
            b = BigFloat.make(x)
            return RInterval(b, b, prec)
        if isinstance(x, float):
            m, e = math.frexp(x)
            b = BigFloat.make(int(m * (1 << 53)), e - 53)
            return RInterval(b, b, prec)
        q = Fraction(x)
        return RInterval(BigFloat.from_fraction(q, prec, False),
                         BigFloat.from_fraction(q, prec, True), prec)

    @staticmethod
    def of(lo: Number, hi: Number, prec: int = 53) -> RInterval:
        a = RInterval.point(lo, prec)
        b = RInterval.point(hi, prec)
        return RInterval(a.lo, b.hi, prec)

    @staticmethod
    def from_decimal(text: str, prec: int) -> RInterval:
        """Outward enclosure of an exact decimal literal such as ``"0.1"``."""
        return RInterval.point(Fraction(text), prec)

    def with_prec(self, prec: int) -> RInterval:
        return RInterval(self.lo, self.hi, prec)

    # -- inspection -------------------------------------------------------
    def is_point(self) -> bool:
        return self.lo == self.hi

    def width(self) -> BigFloat:
        return bf_sub(self.hi, self.lo, max(self.prec, 64), True)

    def width_fraction(self) -> Fraction:
        return self.hi.to_fraction() - self.lo.to_fraction()

    def mid(self) -> Fraction:
        return (self.lo.to_fraction() + self.hi.to_fraction()) / 2

    def __float__(self) -> float:
        return float(self.mid())

    def contains(self, x: Number | BigFloat | RInterval) -> bool:
        if isinstance(x, RInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, BigFloat):
            return self.lo <= x <= self.hi
        q = Fraction(x)
        return self.lo.to_fraction() <= q <= self.hi.to_fraction()

    def contains_zero(self) -> bool:
        return self.lo.man <= 0 <= self.hi.man

    def overlaps(self, other: RInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def mig(self) -> BigFloat:
        """Smallest absolute value over the interval."""
        if self.contains_zero():
            return ZERO
        return _bf_min(abs(self.lo), abs(self.hi))

    def mag(self) -> BigFloat:
        """Largest absolute value over the interval."""
        return _bf_max(abs(self.lo), abs(self.hi))

    def hull(self, other: RInterval) -> RInterval:
        return RInterval(_bf_min(self.lo, other.lo), _bf_max(self.hi, other.hi),
                         max(self.prec, other.prec))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> RInterval:
        if isinstance(other, RInterval):
            return other
        if isinstance(other, (int, float, Fraction)):
            return RInterval.point(other, self.prec)
        return NotImplemented

    def __neg__(self) -> RInterval:
        return RInterval(-self.hi, -self.lo, self.prec)

    def __pos__(self) -> RInterval:
        return self

    def __add__(self, other) -> RInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = max(self.prec, o.prec)
        return RInterval(bf_add(self.lo, o.lo, p, False), bf_add(self.hi, o.hi, p, True), p)

    __radd__ = __add__

    def __sub__(self, other) -> RInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = max(self.prec, o.prec)
        return RInterval(bf_sub(self.lo, o.hi, p, False), bf_sub(self.hi, o.lo, p, True), p)

    def __rsub__(self, other) -> RInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> RInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = max(self.prec, o.prec)
        a, b = self, o
        if a.lo == a.hi and b.lo == b.hi:
            return RInterval(bf_mul(a.lo, b.lo, p, False), bf_mul(a.lo, b.lo, p, True), p)
        prods = [BigFloat.make(x.man * y.man, x.exp + y.exp)
                 for x in (a.lo, a.hi) for y in (b.lo, b.hi)]
        lo, hi = _bf_min(*prods), _bf_max(*prods)
        return RInterval(BigFloat.rounded(lo.man, lo.exp, p, False),
                         BigFloat.rounded(hi.man, hi.exp, p, True), p)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.contains_zero():
            raise DivisionByZeroInterval("divisor interval contains 0")
        p = max(self.prec, o.prec)
        cands_lo = [bf_div(x, y, p, False) for x in (self.lo, self.hi) for y in (o.lo, o.hi)]
        cands_hi = [bf_div(x, y, p, True) for x in (self.lo, self.hi) for y in (o.lo, o.hi)]
        return RInterval(_bf_min(*cands_lo), _bf_max(*cands_hi), p)

    def __rtruediv__(self, other) -> RInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def sqr(self) -> RInterval:
        """Tight square (the dependency-free image of x -> x^2)."""
        p = self.prec
        lo, hi = self.mig(), self.mag()
        return RInterval(bf_mul(lo, lo, p, False), bf_mul(hi, hi, p, True), p)

    def __pow__(self, n: int) -> RInterval:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** (-n))
        if n == 0:
            return RInterval(ONE, ONE, self.prec)
        p = self.prec
        if n % 2 == 0:
            lo, hi = self.mig(), self.mag()
        else:
            lo, hi = self.lo, self.hi
        # x -> x**n is monotone on the chosen endpoints: exact powers, then round
        return RInterval(BigFloat.rounded(lo.man ** n, lo.exp * n, p, False),
                         BigFloat.rounded(hi.man ** n, hi.exp * n, p, True), p)

    def __abs__(self) -> RInterval:
        return RInterval(self.mig(), self.mag(), self.prec)

    # -- decimal display ----------------------------------------------------
    def decimal_bounds(self, digits: int = 20) -> tuple[str, str]:
        return to_decimal(self.lo, digits, False), to_decimal(self.hi, digits, True)

    def __str__(self) -> str:
        lo, hi = self.decimal_bounds(17)
        return f"[{lo}, {hi}]"

    def __repr__(self) -> str:
        lo, hi = self.decimal_bounds(17)
        return f"RInterval([{lo}, {hi}], prec={self.prec})"


def to_decimal(x: BigFloat, digits: int, up: bool) -> str:
    """Directed-rounded decimal string with ``digits`` significant digits.

    The result, read as an exact decimal, is <= x (``up=False``) or >= x.
    """
    if x.man == 0:
        return "0"
    q = x.to_fraction()
    e10 = math.floor((x.magnitude() - 1) * math.log10(2))
    s = digits - 1 - e10
    scaled = q * Fraction(10) ** s
    n = math.ceil(scaled) if up else math.floor(scaled)
    sign = "-" if n < 0 else ""
    body = str(abs(n))
    point = len(body) - s  # digits before the decimal point
    e_sci = point - 1
    if -8 < e_sci < 16:
        if point <= 0:
            text = "0." + "0" * (-point) + body
        elif point >= len(body):
            text = body + "0" * (point - len(body))
        else:
            text = body[:point] + "." + body[point:]
        if "." in text:
            text = text.rstrip("0").rstrip(".")
        return sign + text
    mant = body[0] + ("." + body[1:].rstrip("0") if body[1:].rstrip("0") else "")
    return f"{sign}{mant}e{e_sci:+d}"


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

def _check_prec(p: int) -> None:
    if p < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits, got {p}")


def _from_fixed(lo: int, hi: int, scale: int, prec: int, extra: int = 2) -> RInterval:
    return RInterval(BigFloat.rounded(lo, -scale, prec + extra, False),
                     BigFloat.rounded(hi, -scale, prec + extra, True), prec)


def const_pi(p: int) -> RInterval:
    """Enclosure of pi with width at most 4 * 2**-p."""
    _check_prec(p)
    lo, hi = pi_fixed(p + GUARD_BITS)
    return _from_fixed(lo, hi, p + GUARD_BITS, p)


def const_e(p: int) -> RInterval:
    """Enclosure of e with width at most 4 * 2**-p."""
    _check_prec(p)
    lo, hi = e_fixed(p + GUARD_BITS)
    return _from_fixed(lo, hi, p + GUARD_BITS, p)


def const_ln2(p: int) -> RInterval:
    _check_prec(p)
    lo, hi = ln2_fixed(p + GUARD_BITS)
    return _from_fixed(lo, hi, p + GUARD_BITS, p)


# ---------------------------------------------------------------------------
# Interval elementary functions
# ---------------------------------------------------------------------------

def _finish(lo: BigFloat, hi: BigFloat, p: int) -> RInterval:
    """Round outward to p bits and inflate by one ulp unless exact."""
    if lo == hi and abs(lo.man).bit_length() <= p:
        return RInterval(lo, hi, p)
    r_lo = BigFloat.rounded(lo.man, lo.exp, p, False)
    r_hi = BigFloat.rounded(hi.man, hi.exp, p, True)
    r_lo = bf_sub(r_lo, ulp(r_lo, p), p, False)
    r_hi = bf_add(r_hi, ulp(r_hi, p), p, True)
    return RInterval(r_lo, r_hi, p)


def exp(x: RInterval) -> RInterval:
    p = x.prec
    if x.lo.man == 0 and x.hi.man == 0:
        return RInterval(ONE, ONE, p)
    wp = p + GUARD_BITS
    lo, hi = _exp_point(x.lo, wp)
    if not x.is_point():
        hi = _exp_point(x.hi, wp)[1]
    return _finish(lo, hi, p)


def ln(x: RInterval) -> RInterval:
    if x.lo.man <= 0:
        raise DomainError("ln of interval touching (-inf, 0]")
    p = x.prec
    wp = p + GUARD_BITS
    lo, hi = _ln_point(x.lo, wp)
    if not x.is_point():
        hi = _ln_point(x.hi, wp)[1]
    if lo == hi == ZERO:
        return RInterval(ZERO, ZERO, p)
    return _finish(lo, hi, p)


def sqrt(x: RInterval) -> RInterval:
    if x.lo.man < 0:
        raise DomainError("sqrt of interval containing negative numbers")
    p = x.prec
    return RInterval(bf_sqrt(x.lo, p, False), bf_sqrt(x.hi, p, True), p)


def _critical_hits(x: RInterval, offset: Fraction) -> list[int]:
    """Integers j such that (j + offset) * pi may lie in x."""
    wp = x.prec + GUARD_BITS
    pi_i = const_pi(wp)
    pi_lo, pi_hi = pi_i.lo.to_fraction(), pi_i.hi.to_fraction()
    a, b = x.lo.to_fraction(), x.hi.to_fraction()
    j0 = math.floor(a / pi_hi - offset) - 1 if a >= 0 else math.floor(a / pi_lo - offset) - 1
    j1 = math.ceil(b / pi_lo - offset) + 1 if b >= 0 else math.ceil(b / pi_hi - offset) + 1
    hits = []
    for j in range(j0, j1 + 1):
        c = RInterval.point(Fraction(2 * j + 2 * offset), wp) * pi_i * Fraction(1, 2)
        if c.lo <= x.hi and x.lo <= c.hi:
            hits.append(j)
    return hits


def _sincos(x: RInterval, which: int) -> RInterval:
    p = x.prec
    wp = p + GUARD_BITS
    if x.is_point() and x.lo.man == 0:
        return RInterval(ZERO, ZERO, p) if which == 0 else RInterval(ONE, ONE, p)
    if x.width_fraction() >= 7:
        return RInterval.of(-1, 1, p)
    lo_s, lo_c = _sincos_point(x.lo, wp)
    b_lo = (lo_s, lo_c)[which]
    if x.is_point():
        lo = BigFloat.make(b_lo[0], -b_lo[2])
        hi = BigFloat.make(b_lo[1], -b_lo[2])
        return _clamp_unit(_finish(lo, hi, p))
    hi_s, hi_c = _sincos_point(x.hi, wp)
    b_hi = (hi_s, hi_c)[which]
    cands = [BigFloat.make(b_lo[0], -b_lo[2]), BigFloat.make(b_lo[1], -b_lo[2]),
             BigFloat.make(b_hi[0], -b_hi[2]), BigFloat.make(b_hi[1], -b_hi[2])]
    lo, hi = _bf_min(*cands), _bf_max(*cands)
    # sin extremes at (j + 1/2) pi, cos extremes at j pi
    offset = Fraction(1, 2) if which == 0 else Fraction(0)
    for j in _critical_hits(x, offset):
        v = ONE if j % 2 == 0 else -ONE
        lo, hi = _bf_min(lo, v), _bf_max(hi, v)
    return _clamp_unit(_finish(lo, hi, p))


def _clamp_unit(r: RInterval) -> RInterval:
    lo = _bf_max(r.lo, -ONE)
    hi = _bf_min(r.hi, ONE)
    return RInterval(lo, hi, r.prec)


def sin(x: RInterval) -> RInterval:
    return _sincos(x, 0)


def cos(x: RInterval) -> RInterval:
    return _sincos(x, 1)


def atan(x: RInterval) -> RInterval:
    p = x.prec
    wp = p + GUARD_BITS
    if x.is_point() and x.lo.man == 0:
        return RInterval(ZERO, ZERO, p)
    return _finish(_atan_point(x.lo, wp, False), _atan_point(x.hi, wp, True), p)


def acos(x: RInterval) -> RInterval:
    """Principal arccos on [-1, 1], via atan2(sqrt(1 - x^2), x) at p + 32 bits."""
    p = x.prec
    wp = p + GUARD_BITS
    if x.lo < -ONE or x.hi > ONE:
        raise DomainError("acos argument outside [-1, 1]")

    # acos is decreasing: evaluate each endpoint as a point
    def at(v: BigFloat) -> RInterval:
        if v.man < 0:
            # acos(v) = pi - acos(-v) keeps atan2 away from its cut at v = -1
            return const_pi(wp) - at(-v)
        xi = RInterval(v, v, wp)
        s = sqrt(1 - xi.sqr())
        return atan2(s, xi)

    a, b = at(x.hi), at(x.lo)
    return RInterval(BigFloat.rounded(a.lo.man, a.lo.exp, p, False),
                     BigFloat.rounded(b.hi.man, b.hi.exp, p, True), p)


def atan2(y: RInterval, x: RInterval) -> RInterval:
    """Principal angle of the point(s) (x, y), valid off the cut {x <= 0, y = 0}.

    Extremes over a rectangle missing the origin and the cut lie at corners.
    """
    p = max(x.prec, y.prec)
    corners = [(xv, yv) for xv in {x.lo, x.hi} for yv in {y.lo, y.hi}]
    lo = hi = None
    for xv, yv in corners:
        r = _atan2_point(RInterval(yv, yv, p), RInterval(xv, xv, p))
        lo = r.lo if lo is None else _bf_min(lo, r.lo)
        hi = r.hi if hi is None else _bf_max(hi, r.hi)
    return RInterval(lo, hi, p)


def _atan2_point(y: RInterval, x: RInterval) -> RInterval:
    p = x.prec
    if x.lo.man > 0:
        return atan(y / x)
    if y.lo.man > 0:
        half_pi = const_pi(p + 8) * Fraction(1, 2)
        return (half_pi - atan(x / y)).with_prec(p)
    if y.hi.man < 0:
        half_pi = const_pi(p + 8) * Fraction(1, 2)
        return (-half_pi - atan(x / y)).with_prec(p)
    raise DomainError("atan2 undefined on the branch cut")


def pow_real(x: RInterval, y: RInterval) -> RInterval:
    """x**y = exp(y ln x) for x > 0."""
    return exp(y * ln(x))


class Ordering:
    LESS = "Less"
    GREATER = "Greater"
    OVERLAP = "Overlap"


def certified_compare(a: RInterval, b: RInterval) -> str:
    """``Less`` iff a.hi < b.lo, ``Greater`` iff a.lo > b.hi, else ``Overlap``."""
    if a.hi < b.lo:
        return Ordering.LESS
    if a.lo > b.hi:
        return Ordering.GREATER
    return Ordering.OVERLAP


def arith(a: RInterval, b: RInterval, op: str) -> RInterval:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operator {op!r}")


_ELEM = {"exp": exp, "ln": ln, "sqrt": sqrt, "sin": sin, "cos": cos, "atan": atan}


def elem(x: RInterval, f: str) -> RInterval:
    try:
        return _ELEM[f](x)
    except KeyError:
        raise ValueError(f"unknown elementary function {f!r}") from None
