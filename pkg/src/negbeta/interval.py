"""Outward-rounded dyadic interval arithmetic.

Endpoints are kept as exact ``Fraction`` values that are rounded outward to a
fixed number of significant bits after every operation, so an ``Interval``
always encloses the exact result of the same computation done in Q.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import UndecidableDigit


def _round(q: Fraction, bits: int, up: bool) -> Fraction:
    if q == 0:
        return q
    num, den = q.numerator, q.denominator
    # |q| < 2**(e+1)
    e = num.bit_length() - den.bit_length() if num > 0 else (-num).bit_length() - den.bit_length()
    shift = bits - e
    if shift >= 0:
        scaled_num, scaled_den = num << shift, den
    else:
        scaled_num, scaled_den = num, den << -shift
    k = -((-scaled_num) // scaled_den) if up else scaled_num // scaled_den
    if shift >= 0:
        return Fraction(k, 1 << shift)
    return Fraction(k << -shift)


class Interval:
    __slots__ = ("lo", "hi", "bits")

    def __init__(self, lo: Fraction, hi: Fraction, bits: int):
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = _round(Fraction(lo), bits, up=False)
        self.hi = _round(Fraction(hi), bits, up=True)
        self.bits = bits

    @classmethod
    def enclose(cls, q, bits: int) -> Interval:
        q = Fraction(q)
        return cls(q, q, bits)

    @classmethod
    def sqrt(cls, d: int, bits: int) -> Interval:
        """Enclosure of sqrt(d) for a non-negative integer d."""
        scale = 1 << (bits + 2)
        r = isqrt(d * scale * scale)
        hi = r if r * r == d * scale * scale else r + 1
        return cls(Fraction(r, scale), Fraction(hi, scale), bits)

    def _coerce(self, other) -> Interval:
        if isinstance(other, Interval):
            return other
        return Interval.enclose(other, self.bits)

    def __add__(self, other):
        o = self._coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi, self.bits)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo, self.bits)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(products), max(products), self.bits)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.lo <= 0 <= o.hi:
            raise UndecidableDigit("division by an interval containing zero")
        inv = Interval(1 / o.hi, 1 / o.lo, self.bits)
        return self * inv

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def contains(self, q) -> bool:
        return self.lo <= q <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def sign(self) -> int:
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        raise UndecidableDigit(f"sign undecided at {self.bits} bits: [{float(self.lo)}, {float(self.hi)}]")

    def floor(self) -> int:
        lo, hi = self.lo.__floor__(), self.hi.__floor__()
        if lo != hi:
            raise UndecidableDigit(
                f"floor undecided at {self.bits} bits: [{float(self.lo)}, {float(self.hi)}]"
            )
        return lo

    def __repr__(self):
        return f"Interval({float(self.lo)!r}, {float(self.hi)!r}, bits={self.bits})"
