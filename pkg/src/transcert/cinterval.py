"""Axis-aligned complex rectangles and principal-branch elementary functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import mpreal as mr
from .errors import BranchCutError, DivisionByZeroInterval
from .mpreal import ONE, ZERO, RInterval, bf_add, bf_mul, bf_sqrt


def _zero(p: int) -> RInterval:
    return RInterval(ZERO, ZERO, p)


@dataclass(frozen=True, slots=True)
class CInterval:
    re: RInterval
    im: RInterval

    @property
    def prec(self) -> int:
        return max(self.re.prec, self.im.prec)

    @staticmethod
    def real(x: RInterval) -> CInterval:
        return CInterval(x, _zero(x.prec))

    @staticmethod
    def point(re, im=0, prec: int = 53) -> CInterval:
        return CInterval(RInterval.point(re, prec), RInterval.point(im, prec))

    @staticmethod
    def i(prec: int = 53) -> CInterval:
        return CInterval(_zero(prec), RInterval(ONE, ONE, prec))

    def is_real(self) -> bool:
        """True when the imaginary part is exactly zero."""
        return self.im.lo.man == 0 and self.im.hi.man == 0

    def contains(self, z: complex | tuple) -> bool:
        if isinstance(z, CInterval):
            return self.re.contains(z.re) and self.im.contains(z.im)
        if isinstance(z, tuple):
            re, im = z
        else:
            re, im = z.real, z.imag
        return self.re.contains(re) and self.im.contains(im)

    def _coerce(self, other) -> CInterval:
        if isinstance(other, CInterval):
            return other
        if isinstance(other, RInterval):
            return CInterval.real(other)
        if isinstance(other, (int, Fraction)):
            return CInterval.real(RInterval.point(other, self.prec))
        return NotImplemented

    def __neg__(self) -> CInterval:
        return CInterval(-self.re, -self.im)

    def __add__(self, other) -> CInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CInterval(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> CInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CInterval(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> CInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> CInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_real():
            return CInterval(self.re * o.re, self.im * o.re)
        if self.is_real():
            return CInterval(self.re * o.re, self.re * o.im)
        return CInterval(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> CInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_real():
            return CInterval(self.re / o.re, self.im / o.re)
        den = o.re.sqr() + o.im.sqr()
        if den.contains_zero():
            raise DivisionByZeroInterval("divisor rectangle contains 0")
        num = self * conj(o)
        return CInterval(num.re / den, num.im / den)

    def __rtruediv__(self, other) -> CInterval:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> CInterval:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** (-n))
        if self.is_real():
            return CInterval.real(self.re ** n)
        result = CInterval.real(RInterval(ONE, ONE, self.prec))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self) -> str:
        return f"({self.re} + {self.im}i)"


def carith(a: CInterval, b: CInterval, op: str) -> CInterval:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def conj(z: CInterval) -> CInterval:
    return CInterval(z.re, -z.im)


def cexp(z: CInterval) -> CInterval:
    r = mr.exp(z.re)
    if z.is_real():
        return CInterval.real(r)
    return CInterval(r * mr.cos(z.im), r * mr.sin(z.im))


def cabs(z: CInterval) -> RInterval:
    """Modulus range over the rectangle: distance to origin of its nearest and
    farthest points."""
    p = z.prec
    lo_x, lo_y = z.re.mig(), z.im.mig()
    hi_x, hi_y = z.re.mag(), z.im.mag()
    lo2 = bf_add(bf_mul(lo_x, lo_x, p + 4, False), bf_mul(lo_y, lo_y, p + 4, False), p + 4, False)
    hi2 = bf_add(bf_mul(hi_x, hi_x, p + 4, True), bf_mul(hi_y, hi_y, p + 4, True), p + 4, True)
    return RInterval(bf_sqrt(lo2, p, False), bf_sqrt(hi2, p, True), p)


def _check_cut(z: CInterval) -> None:
    if z.re.lo.man <= 0 and z.im.contains_zero():
        raise BranchCutError("rectangle intersects the cut {Re <= 0, Im = 0}")


def carg(z: CInterval) -> RInterval:
    """Principal argument in (-pi, pi)."""
    _check_cut(z)
    if z.is_real():
        return _zero(z.prec)
    return mr.atan2(z.im, z.re)


def cln(z: CInterval) -> CInterval:
    _check_cut(z)
    if z.is_real():
        return CInterval.real(mr.ln(z.re))
    p = z.prec
    modsq = z.re.sqr() + z.im.sqr()
    return CInterval(mr.ln(modsq) * Fraction(1, 2), mr.atan2(z.im, z.re).with_prec(p))


def cpow(z: CInterval, w: CInterval) -> CInterval:
    """Principal power exp(w ln z)."""
    return cexp(w * cln(z))


def csqrt(z: CInterval) -> CInterval:
    if z.is_real():
        if z.re.lo.man < 0:
            raise BranchCutError("sqrt of interval containing negative reals")
        return CInterval.real(mr.sqrt(z.re))
    if z.re.lo.man <= 0 and z.im.contains_zero():
        raise BranchCutError("sqrt on the branch cut")
    return cexp(cln(z) * Fraction(1, 2))


def _cosh_sinh(y: RInterval) -> tuple[RInterval, RInterval]:
    ep = mr.exp(y)
    em = mr.exp(-y)
    half = Fraction(1, 2)
    return (ep + em) * half, (ep - em) * half


def csin(z: CInterval) -> CInterval:
    if z.is_real():
        return CInterval.real(mr.sin(z.re))
    ch, sh = _cosh_sinh(z.im)
    return CInterval(mr.sin(z.re) * ch, mr.cos(z.re) * sh)


def ccos(z: CInterval) -> CInterval:
    if z.is_real():
        return CInterval.real(mr.cos(z.re))
    ch, sh = _cosh_sinh(z.im)
    return CInterval(mr.cos(z.re) * ch, -(mr.sin(z.re) * sh))
