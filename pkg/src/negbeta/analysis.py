"""Classification of bases, the Fin-triviality test, scans for L_add / L_mul and H/K bounds.

L_add (L_mul) is the largest number of fractional digits that a sum (product)
of two (-beta)-integers can have when the result is finite. scan_L gives a
lower bound by brute force; hk_bounds gives upper bounds from the field
conjugates z' of (-beta)-integers z.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .admissibility import FactorScanner
from .base import Base, Kind, QuadElem, conjugate
from .errors import BudgetExceeded, KZero, NotQuadratic
from .expansion import Expansion, expand, frac_length_of, fractional_length
from .words import DigitWord

DEFAULT_MAX_DIGITS = 5
DEFAULT_EMPIRICAL_DIGITS = 12
DEFAULT_MAX_FRAC = 1000


# --- classification ------------------------------------------------------

def fin_trivial(base: Base) -> bool:
    """Whether Fin(-beta) = {0}, i.e. beta < (1 + sqrt 5)/2, i.e. beta**2 - beta - 1 < 0."""
    if base.kind is Kind.GENERIC:
        beta = base.beta_interval()
        return (beta * beta - beta - 1).sign() < 0
    beta = base.beta
    return (beta * beta - beta - 1).sign() < 0


@dataclass(frozen=True)
class Classification:
    kind: Kind
    pisot: bool
    conjugate_sign: int  # sign of beta' for quadratic bases, 0 when there is no conjugate
    ring_candidate: bool
    z_ring: bool


def classify(base: Base) -> Classification:
    """Pisot property, sign of the conjugate and which rings can occur.

    A generic base is an exact decimal, hence rational: it is Pisot exactly
    when it is an integer.
    """
    if base.is_quadratic:
        beta_conj = conjugate(base.beta)
        pisot = abs(beta_conj) < 1
        sign = beta_conj.sign()
        return Classification(base.kind, pisot, sign, sign > 0 and pisot, False)
    integral = base.kind is Kind.INTEGER or base.value.denominator == 1
    return Classification(base.kind, integral, 0, integral, integral)


# --- (-beta)-integers -----------------------------------------------------

def _scanner(base: Base) -> FactorScanner:
    if not (base.is_quadratic or base.kind is Kind.INTEGER):
        raise NotQuadratic(f"cannot enumerate (-beta)-integers over {base}")
    return FactorScanner(base)


def enumerate_z(base: Base, max_digits: int) -> Iterator[DigitWord]:
    """Every (-beta)-integer with at most max_digits digits, by length then digits."""
    scanner = _scanner(base)
    yield DigitWord((0,), 0)
    top = base.digit_max
    level = [((), scanner.start())]
    for _ in range(max_digits):
        nxt = []
        for prefix, state in level:
            for d in range(0 if prefix else 1, top + 1):
                after = scanner.feed(state, d)
                if after is None:
                    continue
                word = prefix + (d,)
                nxt.append((word, after))
                if scanner.accept(after):
                    yield DigitWord.integer(word)
        level = nxt


def _integer_value(digits, base: Base) -> tuple[int, int]:
    """(a, b) with value a + b*beta; b = 0 for integer bases."""
    if base.kind is Kind.INTEGER:
        total = 0
        for d in digits:
            total = total * -base.m + d
        return total, 0
    p, q = base.p, base.q
    a = b = 0
    for d in digits:
        a, b = -b * q + d, -a - b * p
    return a, b


# --- L scans ---------------------------------------------------------------

class Op(Enum):
    ADD = "add"
    MUL = "mul"


@dataclass(frozen=True)
class ScanReport:
    op: Op
    max_digits: int
    observed_L: int
    witness: tuple[DigitWord, DigitWord, Expansion] | None
    infinite_count: int
    pairs_tested: int


def _combine(x: tuple[int, int], y: tuple[int, int], op: Op, p: int, q: int) -> tuple[int, int]:
    if op is Op.ADD:
        return x[0] + y[0], x[1] + y[1]
    bb = x[1] * y[1]
    return x[0] * y[0] + bb * q, x[0] * y[1] + x[1] * y[0] + bb * p


def _scan_rows(base: Base, op: Op, words, values, rows, max_frac: int):
    """Best (frac_length, i, j), infinite count and pair count over rows i."""
    p, q = base.p, base.q
    quadratic = base.is_quadratic
    cache: dict[tuple[int, int], int] = {}
    best = (-1, 0, 0)
    infinite = pairs = 0
    for i in rows:
        vi = values[i]
        for j in range(i, len(words)):
            key = _combine(vi, values[j], op, p, q)
            length = cache.get(key)
            if length is None:
                if quadratic:
                    length = frac_length_of(key[0], key[1], 1, base, max_frac)
                else:
                    length = fractional_length(QuadElem(key[0], 0, base), max_frac)
                if length is None:
                    raise BudgetExceeded(
                        f"{words[i]} {op.value} {words[j]} not resolved within {max_frac} digits"
                    )
                cache[key] = length
            pairs += 1
            if length < 0:
                infinite += 1
            elif length > best[0]:
                best = (length, i, j)
    return best, infinite, pairs


def _scan_chunk(args):
    return _scan_rows(*args)


def scan_L(
    base: Base,
    op: Op,
    max_digits: int = DEFAULT_MAX_DIGITS,
    max_frac: int = DEFAULT_MAX_FRAC,
    workers: int = 1,
) -> ScanReport:
    """Largest fractional length of x op y over unordered pairs of (-beta)-integers.

    Results whose expansion is infinite are counted, not measured. The witness
    is the first pair, in enumeration order, reaching the maximum; the report
    does not depend on how the rows are split between workers.
    """
    words = list(enumerate_z(base, max_digits))
    values = [_integer_value(w.digits, base) for w in words]
    rows = range(len(words))
    if workers > 1:
        chunks = [(base, op, words, values, rows[k::workers], max_frac) for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, chunks))
    else:
        parts = [_scan_rows(base, op, words, values, rows, max_frac)]
    best = (-1, 0, 0)
    infinite = pairs = 0
    for (length, i, j), inf, count in parts:
        infinite += inf
        pairs += count
        # larger length wins, then the earlier pair
        if length > best[0] or (length == best[0] and (i, j) < best[1:]):
            best = (length, i, j)
    if best[0] < 0:
        return ScanReport(op, max_digits, 0, None, infinite, pairs)
    w1, w2 = words[best[1]], words[best[2]]
    x = QuadElem(*_combine(values[best[1]], values[best[2]], op, base.p, base.q), base)
    return ScanReport(op, max_digits, best[0], (w1, w2, expand(x, base, max_frac)), infinite, pairs)


# --- H and K ---------------------------------------------------------------

@dataclass(frozen=True)
class HKBounds:
    """H = sup |z'| and K = inf |z'| (z not divisible by -beta), with the induced bounds.

    bound_add is the largest l with (1/|beta'|)**l <= 2H/K and bound_mul the
    same for H**2/K; with strict=True the inequalities are strict. Empirical
    values come from words of bounded length: H is then a lower estimate and
    K an upper estimate of the true values.
    """

    H: QuadElem
    K: QuadElem
    bound_add: int
    bound_mul: int
    strict: bool
    empirical: bool


def _largest_power(ratio: QuadElem, limit: QuadElem, strict: bool) -> int:
    l, power = 0, ratio
    while (power < limit) if strict else (power <= limit):
        l += 1
        power = power * ratio
    return l


def _closed_form(base: Base) -> tuple[QuadElem, QuadElem] | None:
    if not base.is_unit:
        return None
    beta = base.beta
    if base.kind is Kind.QUAD_A:
        c = conjugate(beta)
        return (1 - c) / (c * (1 + c)), c * (1 - c) / (1 + c)
    if base.m >= 2:
        return beta, QuadElem(1, 0, base)
    # golden ratio: all-ones words give sup |z'| = 1/(1 - 1/beta) = beta**2, never reached;
    # K = 1 is the generic lower estimate for beta' in (-1, 0)
    return beta * beta, QuadElem(1, 0, base)


def conjugate_extremes(base: Base, digits: int) -> tuple[QuadElem, QuadElem]:
    """Exact max |z'| over (-beta)-integers z with at most `digits` digits, and
    min |z'| over those whose last digit is nonzero.

    Branch and bound over suffixes built from the last digit: the digit at
    position i contributes z_i * t**i with t = -beta' and |t| < 1, so an
    unfinished suffix pins |z'| down to within top * sum_{i > j} |t|**i.
    """
    scanner = _scanner(base)
    if not base.is_quadratic:
        raise NotQuadratic(f"no field conjugate over {base}")
    top = base.digit_max
    t_exact = -conjugate(base.beta)
    t = float(t_exact)
    tails = [top * sum(abs(t) ** i for i in range(j + 1, digits)) for j in range(digits)]
    eps = 1e-9
    best_h = QuadElem(0, 0, base)
    best_k: QuadElem | None = None
    h_float, k_float = 0.0, math.inf

    def exact(suffix) -> QuadElem:
        total = QuadElem(0, 0, base)
        for d in suffix:  # most significant first
            total = total * t_exact + d
        return abs(total)

    def visit(suffix, value, power, for_k):
        nonlocal best_h, best_k, h_float, k_float
        j = len(suffix) - 1
        size = abs(value)
        if for_k:
            if size < k_float + eps:
                cand = exact(suffix)
                if best_k is None or cand < best_k:
                    best_k, k_float = cand, float(cand)
            if j + 1 >= digits or size - tails[j] > k_float + eps:
                return
        else:
            if size > h_float - eps:
                cand = exact(suffix)
                if cand > best_h:
                    best_h, h_float = cand, float(cand)
            if j + 1 >= digits or size + tails[j] < h_float - eps:
                return
        power *= t
        for d in range(top, -1, -1):
            word = (d,) + suffix
            if scanner.scan(word):
                visit(word, value + d * power, power, for_k)

    for d0 in range(top + 1):
        if scanner.scan((d0,)):
            visit((d0,), float(d0), 1.0, False)
            if d0:
                visit((d0,), float(d0), 1.0, True)
    if best_k is None:
        raise KZero(f"no nonzero (-beta)-integer with at most {digits} digits over {base}")
    return best_h, best_k


def hk_bounds(base: Base, empirical_digits: int = DEFAULT_EMPIRICAL_DIGITS) -> HKBounds:
    if not base.is_quadratic:
        raise NotQuadratic(f"H and K need a conjugate |beta'| < 1; {base} has none")
    closed = _closed_form(base)
    if closed is not None:
        H, K = closed
        strict, empirical = True, False
    else:
        H, K = conjugate_extremes(base, empirical_digits)
        strict, empirical = False, True
    if K.sign() <= 0:
        raise KZero(f"K = {K} over {base}")
    ratio = abs(conjugate(base.beta)).inverse()
    return HKBounds(
        H, K,
        _largest_power(ratio, 2 * H / K, strict),
        _largest_power(ratio, H * H / K, strict),
        strict, empirical,
    )
