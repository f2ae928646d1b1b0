"""Bases and exact arithmetic in Q(beta).

A quadratic base beta satisfies ``beta**2 = p*beta + q`` with integers p, q and
is written ``beta = (p + sqrt(disc)) / 2``. Every sign and floor decision on
``a + b*beta`` is reduced to comparing integers ``u`` and ``v*sqrt(disc)`` by
exact squaring.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, isqrt

from .errors import ConstraintViolation, MalformedSpec, NotQuadratic
from .interval import Interval
from .words import DigitWord


class Kind(Enum):
    INTEGER = "int"
    QUAD_A = "quad-"
    QUAD_B = "quad+"
    GENERIC = "real"


def sign_surd(u: int, v: int, disc: int) -> int:
    """Exact sign of ``u + v*sqrt(disc)`` for integers, disc >= 0."""
    if v == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return 1 if v > 0 else -1
    if u > 0 and v > 0:
        return 1
    if u < 0 and v < 0:
        return -1
    d = u * u - v * v * disc
    s = (d > 0) - (d < 0)
    return s if u > 0 else -s


def floor_surd(u: int, v: int, w: int, disc: int) -> int:
    """Exact ``floor((u + v*sqrt(disc)) / w)`` for integers, w > 0."""
    if v == 0:
        return u // w
    r = isqrt(v * v * disc)
    # v*sqrt(disc) lies in [s, s + 1]
    s = r if v > 0 else -r - (0 if r * r == v * v * disc else 1)
    f = (u + s) // w
    if sign_surd(u - (f + 1) * w, v, disc) >= 0:
        f += 1
    return f


@dataclass(frozen=True)
class Base:
    """The base beta > 1 of a (-beta) numeration system.

    ``m`` holds the integer base for ``Kind.INTEGER``; ``value`` and
    ``precision_bits`` are only used by ``Kind.GENERIC``.
    """

    kind: Kind
    m: int = 0
    n: int = 0
    value: Fraction | None = None
    precision_bits: int = 0

    @classmethod
    def integer(cls, b: int) -> Base:
        if b < 2:
            raise ConstraintViolation(f"integer base must be >= 2, got {b}")
        return cls(Kind.INTEGER, m=b)

    @classmethod
    def quad_a(cls, m: int, n: int) -> Base:
        """Larger root of x^2 = m*x - n; needs m - 2 >= n >= 1."""
        if not (n >= 1 and m - 2 >= n):
            raise ConstraintViolation(f"quad-:{m},{n} needs m-2 >= n >= 1")
        return cls(Kind.QUAD_A, m=m, n=n)

    @classmethod
    def quad_b(cls, m: int, n: int) -> Base:
        """Larger root of x^2 = m*x + n; needs m >= n >= 1."""
        if not (n >= 1 and m >= n):
            raise ConstraintViolation(f"quad+:{m},{n} needs m >= n >= 1")
        return cls(Kind.QUAD_B, m=m, n=n)

    @classmethod
    def generic(cls, value, precision_bits: int = 64) -> Base:
        value = Fraction(value)
        if value <= 1:
            raise ConstraintViolation(f"base must exceed 1, got {value}")
        if precision_bits < 8:
            raise ConstraintViolation("precision_bits must be at least 8")
        return cls(Kind.GENERIC, value=value, precision_bits=precision_bits)

    @classmethod
    def golden(cls) -> Base:
        return cls.quad_b(1, 1)

    @property
    def is_quadratic(self) -> bool:
        return self.kind in (Kind.QUAD_A, Kind.QUAD_B)

    @property
    def is_unit(self) -> bool:
        return self.is_quadratic and self.n == 1

    @cached_property
    def p(self) -> int:
        return self.m

    @cached_property
    def q(self) -> int:
        if self.kind is Kind.QUAD_A:
            return -self.n
        if self.kind is Kind.QUAD_B:
            return self.n
        return 0

    @cached_property
    def disc(self) -> int:
        return self.p * self.p + 4 * self.q

    @cached_property
    def beta(self) -> QuadElem:
        if self.kind is Kind.INTEGER:
            return QuadElem(self.m, 0, self)
        if self.kind is Kind.GENERIC:
            return QuadElem(self.value, 0, self)
        return QuadElem(0, 1, self)

    @cached_property
    def digit_max(self) -> int:
        if self.kind is Kind.GENERIC:
            return self.beta_interval().floor()
        return qfloor(self.beta)

    def beta_interval(self, bits: int | None = None) -> Interval:
        bits = bits or self.precision_bits or 64
        if self.kind is Kind.GENERIC:
            return Interval.enclose(self.value, bits)
        if self.kind is Kind.INTEGER:
            return Interval.enclose(self.m, bits)
        return (Interval.sqrt(self.disc, bits) + self.p) / 2

    @cached_property
    def beta_float(self) -> float:
        return float(self.beta)

    def __float__(self) -> float:
        return self.beta_float

    def __str__(self) -> str:
        if self.kind is Kind.INTEGER:
            return f"int:{self.m}"
        if self.kind is Kind.GENERIC:
            return f"real:{_decimal_text(self.value)}@{self.precision_bits}"
        return f"{self.kind.value}:{self.m},{self.n}"


def _decimal_text(q: Fraction) -> str:
    for k in range(64):
        scaled = q * 10**k
        if scaled.denominator == 1:
            break
    else:
        return f"{q.numerator}/{q.denominator}"
    digits = str(abs(scaled.numerator)).rjust(k + 1, "0")
    sign = "-" if q < 0 else ""
    return sign + (f"{digits[:-k]}.{digits[-k:]}" if k else digits)


_BASE_RE = re.compile(
    r"^(?:int:(?P<b>\d+)"
    r"|quad(?P<sgn>[-+]):(?P<m>\d+),(?P<n>\d+)"
    r"|real:(?P<dec>\d+(?:\.\d+)?)(?:@(?P<bits>\d+))?)$"
)


def parse_base(spec: str) -> Base:
    """Parse ``int:<b>``, ``quad-:<m>,<n>``, ``quad+:<m>,<n>`` or ``real:<decimal>@<bits>``."""
    match = _BASE_RE.match(spec.strip())
    if not match:
        raise MalformedSpec(f"unrecognised base spec {spec!r}")
    if match["b"] is not None:
        return Base.integer(int(match["b"]))
    if match["sgn"] is not None:
        m, n = int(match["m"]), int(match["n"])
        return Base.quad_a(m, n) if match["sgn"] == "-" else Base.quad_b(m, n)
    bits = int(match["bits"]) if match["bits"] else 64
    return Base.generic(Fraction(match["dec"]), bits)


class QuadElem:
    """The exact number ``a + b*beta`` with rational a, b.

    Over integer and generic bases beta itself is rational, so ``b`` is folded
    into ``a`` and always stored as 0.
    """

    __slots__ = ("a", "b", "base")

    def __init__(self, a, b, base: Base):
        a = a if type(a) is Fraction else Fraction(a)
        b = b if type(b) is Fraction else Fraction(b)
        if b and not base.is_quadratic:
            a += b * (base.m if base.kind is Kind.INTEGER else base.value)
            b = Fraction(0)
        self.a = a
        self.b = b
        self.base = base

    def _coerce(self, other) -> QuadElem:
        if isinstance(other, QuadElem):
            if other.base != self.base:
                raise ValueError(f"mixed bases {self.base} and {other.base}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(other, 0, self.base)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.a + o.a, self.b + o.b, self.base)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.base)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.a - o.a, self.b - o.b, self.base)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p, q = self.base.p, self.base.q
        bb = self.b * o.b
        return QuadElem(self.a * o.a + bb * q, self.a * o.b + self.b * o.a + bb * p, self.base)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Product with the field conjugate; for rational bases just ``a``."""
        if not self.base.is_quadratic:
            return self.a
        p, q = self.base.p, self.base.q
        return self.a * self.a + self.a * self.b * p - q * self.b * self.b

    def inverse(self) -> QuadElem:
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if not self.base.is_quadratic:
            return QuadElem(1 / self.a, 0, self.base)
        n = self.norm()
        return QuadElem((self.a + self.b * self.base.p) / n, -self.b / n, self.base)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        result, sq = QuadElem(1, 0, self.base), self
        while k:
            if k & 1:
                result = result * sq
            sq = sq * sq
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QuadElem):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.base == other.base

    def __hash__(self):
        return hash(self.a) if not self.b else hash((self.a, self.b))

    def sign(self) -> int:
        if not self.b:
            return (self.a > 0) - (self.a < 0)
        u, v, _ = self._surd()
        return sign_surd(u, v, self.base.disc)

    def _surd(self) -> tuple[int, int, int]:
        """Integers (u, v, w) with value == (u + v*sqrt(disc)) / w."""
        a, b = self.a, self.b
        da, db = a.denominator, b.denominator
        den = da * db // gcd(da, db)
        u = (2 * a.numerator * (den // da)) + b.numerator * (den // db) * self.base.p
        v = b.numerator * (den // db)
        return u, v, 2 * den

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        if not self.b:
            return float(self.a)
        u, v, w = self._surd()
        return (u + v * self.base.disc ** 0.5) / w

    def interval(self, bits: int) -> Interval:
        return self.a + self.b * self.base.beta_interval(bits)

    def conjugate(self) -> QuadElem:
        return conjugate(self)

    def __repr__(self):
        return f"QuadElem({format_value(self)}, base={self.base})"

    def __str__(self):
        return format_value(self)


def qfloor(x: QuadElem) -> int:
    """Exact floor of ``a + b*beta``."""
    if not x.b:
        return x.a.__floor__()
    u, v, w = x._surd()
    return floor_surd(u, v, w, x.base.disc)


def conjugate(x: QuadElem) -> QuadElem:
    """Image of x under beta -> beta' = p - beta (sum of the two roots)."""
    if not x.base.is_quadratic:
        raise NotQuadratic(f"no field conjugate over {x.base}")
    return QuadElem(x.a + x.b * x.base.p, -x.b, x.base)


def _frac_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_value(x: QuadElem) -> str:
    """Render in the value grammar ``p/q`` or ``p/q+r/s*beta``."""
    if not x.b:
        return _frac_text(x.a)
    sign = "+" if x.b >= 0 else "-"
    return f"{_frac_text(x.a)}{sign}{_frac_text(abs(x.b))}*beta"


_RAT = r"[-+]?\d+(?:/\d+)?"
_VALUE_RE = re.compile(rf"^(?P<a>{_RAT})(?:(?P<sgn>[-+])(?P<b>\d+(?:/\d+)?)\*beta)?$")


def parse_value(text: str, base: Base) -> QuadElem:
    """Parse ``<p>/<q>`` or ``<p>/<q>+<r>/<s>*beta`` (a ``-`` before the beta term is accepted)."""
    match = _VALUE_RE.match(text.replace(" ", ""))
    if not match:
        raise MalformedSpec(f"unrecognised value {text!r}")
    try:
        a = Fraction(match["a"])
        b = Fraction(match["b"]) if match["b"] else Fraction(0)
    except ZeroDivisionError as exc:
        raise MalformedSpec(f"zero denominator in {text!r}") from exc
    if match["sgn"] == "-":
        b = -b
    return QuadElem(a, b, base)


@lru_cache(maxsize=4096)
def neg_beta_power(base: Base, j: int) -> QuadElem:
    """(-beta)**j for any integer j."""
    return (-base.beta) ** j


def inverse_powers(base: Base, j: int) -> list[tuple[int, int, int]]:
    """(-beta)**(-i) for i <= j as integers (c, e, f) meaning (c + e*beta)/f, f > 0.

    The table lives on the base instance so lookups skip hashing the base.
    """
    table = base.__dict__.setdefault("_inverse_powers", [(1, 0, 1)])
    p, q = base.p, base.q
    while len(table) <= j:
        c, e, f = table[-1]
        # (c + e*beta)(p - beta) = (c*p - e*q) - c*beta, and 1/(-beta) = (p - beta)/q
        c, e, f = c * p - e * q, -c, f * q
        if f < 0:
            c, e, f = -c, -e, -f
        g = gcd(gcd(c, e), f)
        table.append((c // g, e // g, f // g))
    return table


def eval_word(w: DigitWord, base: Base) -> QuadElem:
    """The value sum of d * (-beta)**e over the digits of w (signed digits allowed)."""
    if base.is_quadratic:
        p, q = base.p, base.q
        a = b = 0
        for d in w.digits:
            # (a + b*beta) * (-beta) + d, reduced with beta**2 = p*beta + q
            a, b = -b * q + d, -a - b * p
        shift = w.last_exp
        for _ in range(shift):
            a, b = -b * q, -a - b * p
        if shift >= 0:
            return QuadElem(a, b, base)
        c, e, f = inverse_powers(base, -shift)[-shift]
        be = b * e
        return QuadElem(Fraction(a * c + be * q, f), Fraction(a * e + b * c + be * p, f), base)
    else:
        beta = base.m if base.kind is Kind.INTEGER else base.value
        total = 0
        for d in w.digits:
            total = total * -beta + d
        acc = QuadElem(total, 0, base)
    return acc * neg_beta_power(base, w.last_exp)
