"""Alternate order and admissibility of digit strings.

A string is admissible when every suffix u of ``0 w`` (finite words padded
with zeros) satisfies ``d(l) <=_alt u <_alt d*(r)``. For quadratic bases the
same language is recognised by a one-pass forbidden-factor scanner, which the
tests use as an independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .base import Base, Kind
from .errors import NotQuadratic
from .transform import DEFAULT_MAX_ITER, d_lb
from .words import DigitWord, PeriodicWord, common_span


class Order(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class AltOrdering:
    outcome: Order
    decided_at: int | None = None  # 1-based index of the first differing digit


def alt_compare(u: PeriodicWord, v: PeriodicWord) -> AltOrdering:
    """u <_alt v iff at the first difference j: u_j > v_j for odd j, u_j < v_j for even j."""
    for i in range(common_span(u, v)):
        a, b = u.digit(i), v.digit(i)
        if a != b:
            j = i + 1
            less = a > b if j % 2 else a < b
            return AltOrdering(Order.LESS if less else Order.GREATER, j)
    return AltOrdering(Order.EQUAL)


def d_star_from_lb(lb: PeriodicWord) -> PeriodicWord:
    """The upper reference string built from d(l) = d1 d2 d3 ..."""
    if lb.is_purely_periodic and len(lb.period) % 2 == 1:
        per = lb.period
        return PeriodicWord((), (0,) + per[:-1] + (per[-1] - 1,))
    return lb.prepend((0,))


@lru_cache(maxsize=256)
def d_star_r(base: Base, max_iter: int = DEFAULT_MAX_ITER) -> PeriodicWord:
    return d_star_from_lb(d_lb(base, max_iter))


def _phi(word: PeriodicWord, length: int) -> tuple[int, ...]:
    # negating odd positions turns the alternate order into lexicographic order
    return tuple(-d if i % 2 == 0 else d for i, d in enumerate(word.prefix(length)))


@lru_cache(maxsize=4096)
def _references(base: Base, length: int):
    return _phi(d_lb(base), length), _phi(d_star_r(base), length)


def _admissible_periodic(word: PeriodicWord, base: Base) -> bool:
    lb, ub = d_lb(base), d_star_r(base)
    padded = word.prepend((0,))
    for s in range(padded.span + 1):
        u = padded.drop(s)
        if alt_compare(u, lb).outcome is Order.LESS:
            return False
        if alt_compare(u, ub).outcome is not Order.LESS:
            return False
    return True


def is_admissible(w: DigitWord | PeriodicWord, base: Base) -> bool:
    """Whether the digit string of w is a (-beta)-expansion string.

    Finite words are read as ``w 0^omega``; the radix point plays no role.
    """
    top = base.digit_max
    if isinstance(w, PeriodicWord):
        if any(d < 0 or d > top for d in w.preperiod + w.period):
            return False
        return _admissible_periodic(w, base)
    digits = w.digits
    for d in digits:
        if d < 0 or d > top:
            return False
    return _admissible_digits(digits, base)


def _admissible_digits(digits: tuple[int, ...], base: Base) -> bool:
    lb, ub = d_lb(base), d_star_r(base)
    size = len(digits) + 1
    # agreement on this many positions means agreement forever
    length = size + max(len(lb.preperiod), len(ub.preperiod)) + max(len(lb.period), len(ub.period), 1)
    phi_lb, phi_ub = _references(base, length)
    padded = (0,) + digits + (0,) * length
    even = tuple(-d if i % 2 == 0 else d for i, d in enumerate(padded))
    odd = tuple(-d for d in even)
    for s in range(size + 1):
        seg = (odd if s % 2 else even)[s:s + length]
        if seg < phi_lb or not seg < phi_ub:
            return False
    return True


class FactorScanner:
    """Incremental forbidden-factor recogniser, fed digits from the most significant one.

    x^2 = mx - n: digits in {0..m-1}, and m-1 must be followed by a digit >= n.
    x^2 = mx + n, with c = m - n: a digit m followed by c^(2k) and then a digit
    below c, or by c^(2k+1) and then a digit above c, is forbidden; when c = 0
    an m followed only by zeros is forbidden if the digit before it is 0.
    Integer base b: the digit b never occurs in a finite expansion.
    """

    def __init__(self, base: Base):
        if base.kind is Kind.GENERIC:
            raise NotQuadratic(f"no forbidden-factor description for {base}")
        self.base = base
        self.top = base.digit_max
        self.m, self.n = base.m, base.n
        self.c = self.m - self.n

    def start(self):
        if self.base.kind is Kind.QUAD_B:
            return (None, True, True)  # (pending run length, pending m after 0, last digit was 0)
        return False  # last digit was the largest digit

    def feed(self, state, d: int):
        """Next state, or None once a forbidden factor has been read."""
        kind = self.base.kind
        if d < 0 or d > self.top:
            return None
        if kind is Kind.INTEGER:
            return None if d == self.m else state
        if kind is Kind.QUAD_A:
            if state and d < self.n:
                return None
            return d == self.m - 1
        run, pending_after_zero, last_zero = state
        c = self.c
        if run is not None:
            if d == c:
                return (run + 1, pending_after_zero, d == 0)
            k = run + 1
            if (k % 2 == 1 and d < c) or (k % 2 == 0 and d > c):
                return None
            run = None
        if d == self.m:
            return (0, last_zero, False)
        return (None, False, d == 0)

    def accept(self, state) -> bool:
        """Whether the word read so far may end here (zeros follow)."""
        kind = self.base.kind
        if kind is Kind.INTEGER:
            return True
        if kind is Kind.QUAD_A:
            return not state
        run, pending_after_zero, _ = state
        if run is None:
            return True
        if self.c == 0:
            return not pending_after_zero
        return (run + 1) % 2 == 0

    def scan(self, digits) -> bool:
        state = self.start()
        for d in digits:
            state = self.feed(state, d)
            if state is None:
                return False
        return self.accept(state)


def forbidden_factor_check(w: DigitWord, base: Base) -> bool:
    """True iff the finite word avoids every forbidden factor of its quadratic class."""
    if not base.is_quadratic:
        raise NotQuadratic(f"forbidden factors are only tabulated for quadratic bases, not {base}")
    return FactorScanner(base).scan(w.digits)
