"""The (-beta) transformation on I = [-beta/(beta+1), 1/(beta+1)) and its digit sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .base import Base, Kind, QuadElem, floor_surd, qfloor
from .errors import NotEventuallyPeriodicWithinBudget, OutOfDomain
from .interval import Interval
from .words import Digits, PeriodicWord

DEFAULT_MAX_ITER = 10_000


@lru_cache(maxsize=256)
def left_end(base: Base) -> QuadElem:
    """l = -beta/(beta+1), the closed left end of I."""
    beta = base.beta
    return -beta / (beta + 1)


@lru_cache(maxsize=256)
def right_end(base: Base) -> QuadElem:
    """r = 1/(beta+1), the open right end of I."""
    return (base.beta + 1).inverse()


def _interval_value(x: QuadElem) -> Interval:
    return Interval.enclose(x.a, x.base.precision_bits)


def in_domain(x: QuadElem) -> bool:
    """Exact test of l <= x < r, i.e. floor(x + beta/(beta+1)) == 0."""
    base = x.base
    if base.kind is Kind.GENERIC:
        beta = base.beta_interval()
        return (_interval_value(x) + beta / (beta + 1)).floor() == 0
    return qfloor(x - left_end(base)) == 0


def in_open_domain(x: QuadElem) -> bool:
    """l < x < r, the open interval used to place the radix point."""
    base = x.base
    if base.kind is Kind.GENERIC:
        beta = base.beta_interval()
        iv = _interval_value(x)
        return (iv - (-beta / (beta + 1))).sign() > 0 and (1 / (beta + 1) - iv).sign() > 0
    return x > left_end(base) and x < right_end(base)


@dataclass(frozen=True)
class OrbitState:
    value: QuadElem
    step_index: int = 0

    def __post_init__(self):
        if not in_domain(self.value):
            raise OutOfDomain(f"{self.value} is outside [l, r) for {self.value.base}")


@dataclass(frozen=True)
class Truncated:
    """Digits produced before the iteration budget ran out."""

    digits: Digits

    def __str__(self):
        return ",".join(map(str, self.digits)) + ",..."


def digit_of(x: QuadElem) -> int:
    """floor(-beta*x + beta/(beta+1))."""
    base = x.base
    if base.kind is Kind.GENERIC:
        beta = base.beta_interval()
        return (-beta * _interval_value(x) + beta / (beta + 1)).floor()
    beta = base.beta
    return qfloor(-beta * x + beta / (beta + 1))


def t_step(s: OrbitState) -> tuple[int, OrbitState]:
    x = s.value
    d = digit_of(x)
    return d, OrbitState(-x.base.beta * x - d, s.step_index + 1)


class _QuadOrbit:
    """T iterated on x = (A + B*beta)/D with the denominator D held fixed.

    -beta*x - d keeps the denominator, so the integer pair (A, B) is an exact
    state key for cycle detection.
    """

    def __init__(self, base: Base):
        self.p, self.q, self.disc = base.p, base.q, base.disc
        self.cden = base.p + 1 - base.q  # beta/(beta+1) = (beta - q)/cden

    def start(self, x: QuadElem):
        da, db = x.a.denominator, x.b.denominator
        den = da * db // gcd(da, db)
        return (x.a.numerator * (den // da), x.b.numerator * (den // db)), den

    def step(self, state, den):
        A, B = state
        p, q, cden = self.p, self.q, self.cden
        a2 = -B * q * cden - q * den
        b2 = (-A - B * p) * cden + den
        d = floor_surd(2 * a2 + b2 * p, b2, 2 * den * cden, self.disc)
        return d, (-B * q - d * den, -A - B * p)


class _IntegerOrbit:
    def __init__(self, base: Base):
        self.b = base.m

    def start(self, x: QuadElem):
        return x.a.numerator, x.a.denominator

    def step(self, A, den):
        b = self.b
        d = (-b * A * (b + 1) + b * den) // (den * (b + 1))
        return d, -b * A - d * den


class _GenericOrbit:
    def __init__(self, base: Base):
        self.base = base

    def start(self, x: QuadElem):
        return x.a, 1

    def step(self, x: Fraction, den):
        d = digit_of(QuadElem(x, 0, self.base))
        return d, -self.base.value * x - d


@lru_cache(maxsize=256)
def _orbit_for(base: Base):
    if base.is_quadratic:
        return _QuadOrbit(base)
    if base.kind is Kind.INTEGER:
        return _IntegerOrbit(base)
    return _GenericOrbit(base)


def _is_zero(state) -> bool:
    return state == (0, 0) if isinstance(state, tuple) else state == 0


def d_expansion(x: QuadElem, base: Base | None = None, max_iter: int = DEFAULT_MAX_ITER):
    """d(x) = x1 x2 x3 ... for x in I, as a PeriodicWord or Truncated.

    Exact states are remembered; the first revisit fixes preperiod and period.
    Generic bases never claim periodicity, only termination at 0.
    """
    base = base or x.base
    if not in_domain(x):
        raise OutOfDomain(f"{x} is outside [l, r) for {base}")
    return _iterate(x, base, max_iter)


def _iterate(x: QuadElem, base: Base, max_iter: int):
    orbit = _orbit_for(base)
    state, den = orbit.start(x)
    return iterate_state(orbit, state, den, base, max_iter)


def iterate_state(orbit, state, den, base: Base, max_iter: int):
    """Run an orbit from a raw integer state; shared by d_expansion and expand."""
    track = base.kind is not Kind.GENERIC
    seen: dict = {}
    digits: list[int] = []
    for i in range(max_iter + 1):
        if _is_zero(state):
            return PeriodicWord(tuple(digits), ())
        if track:
            first = seen.get(state)
            if first is not None:
                return PeriodicWord(tuple(digits[:first]), tuple(digits[first:]))
            seen[state] = i
        if i == max_iter:
            break
        d, state = orbit.step(state, den)
        digits.append(d)
    return Truncated(tuple(digits))


def closed_form_d_lb(base: Base) -> PeriodicWord | None:
    """((m-1) n)^omega for x^2 = mx - n and m (m-n)^omega for x^2 = mx + n."""
    if base.kind is Kind.QUAD_A:
        return PeriodicWord((), (base.m - 1, base.n))
    if base.kind is Kind.QUAD_B:
        return PeriodicWord((base.m,), (base.m - base.n,))
    return None


@lru_cache(maxsize=256)
def d_lb(base: Base, max_iter: int = DEFAULT_MAX_ITER) -> PeriodicWord:
    """d(l), the expansion of the left end point."""
    # l lies in I by definition; an interval test at the end point would straddle
    orbit = _iterate(left_end(base), base, max_iter)
    if isinstance(orbit, Truncated):
        raise NotEventuallyPeriodicWithinBudget(
            f"d(l) for {base} not periodic within {max_iter} digits"
        )
    closed = closed_form_d_lb(base)
    if closed is not None and closed != orbit:
        raise AssertionError(f"closed form {closed} disagrees with orbit {orbit} for {base}")
    return closed if closed is not None else orbit
