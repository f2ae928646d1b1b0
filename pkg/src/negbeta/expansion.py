"""The (-beta)-expansion of a number and the range brackets of leading digits.

To expand x, find the least j >= 0 with y = x * (-beta)**(-j) strictly inside
(l, r), read d(y) = y1 y2 y3 ... and put the radix point after j digits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from math import gcd

from .base import Base, QuadElem, eval_word, floor_surd, inverse_powers, neg_beta_power, sign_surd
from .errors import UndecidableDigit
from .transform import DEFAULT_MAX_ITER, Truncated, _iterate, _orbit_for, in_open_domain, iterate_state
from .words import DigitWord, PeriodicWord, format_digits


class Status(Enum):
    FINITE = "finite"
    INFINITE_PERIODIC = "infinite-periodic"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class Expansion:
    """<x> = integer_part . fractional; a truncated fractional part is only a prefix."""

    integer_part: DigitWord
    fractional: PeriodicWord
    status: Status

    @property
    def is_finite(self) -> bool:
        return self.status is Status.FINITE

    @property
    def word(self) -> DigitWord:
        """The whole expansion as one finite word (finite expansions only)."""
        if self.status is not Status.FINITE:
            raise ValueError(f"{self.status.value} expansion has no finite word")
        digits = self.integer_part.digits + self.fractional.preperiod
        return DigitWord(digits, self.integer_part.lead_exp)

    @property
    def frac_length(self) -> int:
        return len(self.fractional.preperiod) if self.status is Status.FINITE else -1

    def __str__(self) -> str:
        head = format_digits(self.integer_part.digits) + "."
        frac = self.fractional
        if self.status is Status.TRUNCATED:
            return head + format_digits(frac.preperiod) + ",..."
        if frac.is_finite:
            return head + format_digits(frac.preperiod)
        return head + str(frac)


ZERO = Expansion(DigitWord((0,), 0), PeriodicWord(), Status.FINITE)


def _log2_abs(x: QuadElem) -> float:
    # upper estimate of log2|x| that survives huge numerators
    a, b = abs(x.a), abs(x.b)
    total = a + b * math.ceil(float(x.base.beta))
    if not total:
        return -math.inf
    return total.numerator.bit_length() - total.denominator.bit_length() + 1


def _shift_window(x: QuadElem) -> tuple[int, int]:
    """A starting guess for j and the guard jmax ~ log_beta(|x| (beta+1)) + 2."""
    log_beta = math.log2(float(x.base.beta))
    upper = _log2_abs(x)
    jmax = max(0, math.ceil((upper + math.log2(float(x.base.beta) + 1)) / log_beta)) + 2
    try:
        size = abs(float(x))
    except OverflowError:
        return max(0, jmax - 4), jmax
    if size <= 1:
        return 0, jmax
    return max(0, int(math.log2(size) / log_beta) - 1), jmax


def radix_shift(x: QuadElem) -> int:
    """Least j >= 0 with x * (-beta)**(-j) in the open interval (l, r).

    Once inside, dividing by -beta keeps y inside, so the set of good j is an
    upward-closed range and a local search from a float guess is exact.
    """
    base = x.base
    j, jmax = _shift_window(x)
    while not in_open_domain(x * neg_beta_power(base, -j)):
        j += 1
        if j > jmax:
            raise UndecidableDigit(f"no radix position found for {x} up to {jmax}")
    while j > 0 and in_open_domain(x * neg_beta_power(base, -(j - 1))):
        j -= 1
    return j


def _open_member(A: int, B: int, D: int, p: int, q: int, disc: int) -> bool:
    """(A + B*beta)/D lies in (l, r), with D > 0.

    Multiplying by beta + 1 > 0 turns the test into the signs of
    (A + B*q) + (A + B + B*p + D)*beta and (D - A - B*q) - (A + B + B*p)*beta.
    """
    u = A + B * q
    v = A + B + B * p
    # u + v*beta = (2u + v*p + v*sqrt(disc)) / 2
    if sign_surd(2 * u + (v + D) * p, v + D, disc) <= 0:
        return False
    return sign_surd(2 * (D - u) - v * p, -v, disc) > 0


def _expand_quadratic(x: QuadElem, base: Base, max_iter: int) -> Expansion:
    a, b = x.a, x.b
    D = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    A, B = a.numerator * (D // a.denominator), b.numerator * (D // b.denominator)
    p, q, disc = base.p, base.q, base.disc
    beta = base.beta_float
    log_beta = math.log2(beta)

    # guard jmax ~ log_beta(|x| (beta+1)) + 2, from an integer upper bound on |x|
    top = abs(A) + abs(B) * (int(beta) + 1)
    jmax = max(0, math.ceil((top.bit_length() - D.bit_length() + 1 + math.log2(beta + 1)) / log_beta)) + 2
    try:
        size = abs((A + B * beta) / D)
    except OverflowError:
        size = 2.0 ** (top.bit_length() - D.bit_length())
    j = max(0, int(math.log2(size) / log_beta) - 1) if size > 1 else 0
    table = inverse_powers(base, jmax + 1)

    def shifted(i):
        c, e, f = table[i]
        ee = B * e
        return A * c + ee * q, A * e + B * c + ee * p, D * f

    while not _open_member(*shifted(j), p, q, disc):
        j += 1
        if j > jmax:
            raise UndecidableDigit(f"no radix position found for {x} up to {jmax}")
    while j > 0 and _open_member(*shifted(j - 1), p, q, disc):
        j -= 1
    A2, B2, D2 = shifted(j)
    g = gcd(gcd(A2, B2), D2)
    digits = iterate_state(_orbit_for(base), (A2 // g, B2 // g), D2 // g, base, max_iter + j)
    return _assemble(digits, j)


def _assemble(digits, j: int) -> Expansion:
    if isinstance(digits, Truncated):
        head = digits.digits
        return Expansion(DigitWord.integer(head[:j] or (0,)), PeriodicWord(head[j:], ()), Status.TRUNCATED)
    integer = DigitWord.integer(digits.prefix(j) or (0,))
    frac = digits.drop(j)
    status = Status.FINITE if frac.is_finite else Status.INFINITE_PERIODIC
    return Expansion(integer, frac, status)


def expand(x: QuadElem, base: Base | None = None, max_iter: int = DEFAULT_MAX_ITER) -> Expansion:
    """<x>, the (-beta)-expansion of x.

    max_iter bounds the number of fractional digits produced before giving up
    with status TRUNCATED.
    """
    base = base or x.base
    if x.base != base:
        raise ValueError(f"value over {x.base} expanded in {base}")
    if not x:
        return ZERO
    if base.is_quadratic:
        return _expand_quadratic(x, base, max_iter)
    j = radix_shift(x)
    return _assemble(_iterate(x * neg_beta_power(base, -j), base, max_iter + j), j)


def canonicalize(raw: DigitWord, base: Base, max_iter: int = DEFAULT_MAX_ITER) -> Expansion:
    """Re-expand an arbitrary (possibly signed or non-admissible) word."""
    return expand(eval_word(raw, base), base, max_iter)


def range_bracket(k: int, base: Base) -> tuple[QuadElem, QuadElem]:
    """Closed interval holding sum a_i (-beta)**(k-i), i >= 1, for admissible a with a_1 != 0.

    So a word whose leading nonzero digit sits at exponent e falls in
    range_bracket(e + 1).
    """
    beta = base.beta
    scale = (beta + 1).inverse()
    if k % 2:
        return beta ** (k - 1) * scale, beta ** (k + 1) * scale
    return -(beta ** (k + 1)) * scale, -(beta ** (k - 1)) * scale


def fractional_length(x: QuadElem, max_iter: int = DEFAULT_MAX_ITER) -> int | None:
    """Number of fractional digits of <x>.

    Returns -1 for an infinite (eventually periodic) expansion and None when
    max_iter digits do not settle it. Same answer as expand(x); for quadratic
    bases it is computed by frac_length_of without building any words.
    """
    base = x.base
    if not base.is_quadratic:
        result = expand(x, base, max_iter)
        return None if result.status is Status.TRUNCATED else result.frac_length
    a, b = x.a, x.b
    D = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    return frac_length_of(a.numerator * (D // a.denominator), b.numerator * (D // b.denominator), D, base, max_iter)


def frac_length_of(A: int, B: int, D: int, base: Base, max_iter: int = DEFAULT_MAX_ITER) -> int | None:
    """fractional_length of (A + B*beta)/D over a quadratic base, D > 0.

    Digits and interval membership are decided in floating point with an
    explicit error bound; whenever a value lands within that bound of a
    boundary the decision is redone exactly.
    """
    if not A and not B:
        return 0
    p, q, disc = base.p, base.q, base.disc
    beta = base.beta_float
    left, right = -beta / (beta + 1), 1 / (beta + 1)
    cden = p + 1 - q  # beta/(beta+1) = (beta - q)/cden

    scale = abs(A) + abs(B) * beta
    zf = (A + B * beta) / D
    err = 1e-14 * (1 + scale) / D
    # least j with z * (-beta)**(-j) strictly inside (l, r); good j form an upward-closed range
    j = max(0, int(math.log(abs(zf)) / math.log(beta)) - 1) if abs(zf) > 1 else 0
    table = None

    def member(i):
        nonlocal table
        yf = zf * (-1 / beta) ** i
        e = err * beta ** -i + 1e-15 * i * abs(yf)
        if yf - left > e and right - yf > e:
            return True
        if yf < left - e or yf > right + e:
            return False
        if table is None:
            table = inverse_powers(base, i + 1)
        elif len(table) <= i:
            table = inverse_powers(base, i)
        c, f_e, f = table[i]
        ee = B * f_e
        return _open_member(A * c + ee * q, A * f_e + B * c + ee * p, D * f, p, q, disc)

    guard = j + 8 + 2 * (scale.bit_length() if isinstance(scale, int) else int(math.log2(1 + scale)))
    while not member(j):
        j += 1
        if j > guard:
            raise UndecidableDigit(f"no radix position found for ({A} + {B}*beta)/{D}")
    while j > 0 and member(j - 1):
        j -= 1
    c, f_e, f = inverse_powers(base, j)[j]
    ee = B * f_e
    A, B, D = A * c + ee * q, A * f_e + B * c + ee * p, D * f
    g = gcd(gcd(A, B), D)
    A, B, D = A // g, B // g, D // g

    shift = beta / (beta + 1)
    seen = set()
    for steps in range(max_iter + j + 1):
        if not A and not B:
            return max(0, steps - j)
        key = (A, B)
        if key in seen:
            return -1
        seen.add(key)
        t = -beta * (A + B * beta) / D + shift
        d = math.floor(t)
        e = 1e-13 * (1 + abs(A) + abs(B) * beta) / D
        if t - d < e or d + 1 - t < e:
            a2 = -B * q * cden - q * D
            b2 = (-A - B * p) * cden + D
            d = floor_surd(2 * a2 + b2 * p, b2, 2 * D * cden, disc)
        A, B = -B * q - d * D, -A - B * p
    return None
