"""Arithmetic on finite expansions, and the digit-rewriting proof that x + 1 stays finite.

add, sub and mul work on values: exact field arithmetic followed by a fresh
expansion. add_one_rewrite instead reaches the expansion of x + 1 by adding
signed representations of zero digit-wise, for bases with beta**2 = m*beta - n.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .admissibility import FactorScanner
from .base import Base, Kind, eval_word
from .errors import ConstraintViolation, NotClassA, OutOfDomain, PatternNotMatched
from .expansion import Expansion, expand
from .transform import DEFAULT_MAX_ITER
from .words import DigitWord


class ZeroVariant(Enum):
    SHORT = "short"
    LONG_PLUS = "long-plus"
    LONG_MINUS = "long-minus"


@dataclass(frozen=True)
class ZeroIdentity:
    word: DigitWord
    variant: ZeroVariant
    k: int = 0

    def __neg__(self) -> ZeroIdentity:
        return ZeroIdentity(-self.word, self.variant, self.k)


def _require_class_a(base: Base) -> None:
    if base.kind is not Kind.QUAD_A:
        raise NotClassA(f"{base} is not of the form x^2 = mx - n")


def _zero_digits(variant: ZeroVariant, k: int, m: int, n: int) -> tuple[int, ...]:
    c = m - n - 1
    if variant is ZeroVariant.SHORT:
        return (1, m, n)
    if variant is ZeroVariant.LONG_PLUS:
        return (1, m - 1) + (-c, c) * k + (-(m - n), -n)
    return (1, m - 1, -c) + (c, -c) * k + (m - n, n)


def zero_word(variant: ZeroVariant, k: int, base: Base) -> ZeroIdentity:
    """An integer signed word of value 0, ending at exponent 0.

    SHORT is ``1 m n``; LONG_PLUS(k) is ``1 (m-1) [-c c]^k -(m-n) -n`` and
    LONG_MINUS(k) is ``1 (m-1) -c [c -c]^k (m-n) n`` with c = m - n - 1.
    """
    _require_class_a(base)
    if k < 0:
        raise ConstraintViolation("k must be non-negative")
    if variant is ZeroVariant.SHORT and k:
        raise ConstraintViolation("the short identity takes no k")
    word = DigitWord.integer(_zero_digits(variant, k, base.m, base.n))
    if eval_word(word, base):
        raise AssertionError(f"{word} does not evaluate to 0 over {base}")
    return ZeroIdentity(word, variant, k)


def add(w1: DigitWord, w2: DigitWord, base: Base, max_iter: int = DEFAULT_MAX_ITER) -> Expansion:
    return expand(eval_word(w1, base) + eval_word(w2, base), base, max_iter)


def sub(w1: DigitWord, w2: DigitWord, base: Base, max_iter: int = DEFAULT_MAX_ITER) -> Expansion:
    return expand(eval_word(w1, base) - eval_word(w2, base), base, max_iter)


def mul(w1: DigitWord, w2: DigitWord, base: Base, max_iter: int = DEFAULT_MAX_ITER) -> Expansion:
    return expand(eval_word(w1, base) * eval_word(w2, base), base, max_iter)


def _is_expansion(word: DigitWord, scanner: FactorScanner) -> bool:
    return not word.is_signed and scanner.scan(word.digits)


def _place(digits, lowest_exp: int) -> DigitWord:
    """Signed word whose last digit sits at lowest_exp."""
    return DigitWord(tuple(digits), lowest_exp + len(digits) - 1)


def add_one_rewrite(w: DigitWord, base: Base) -> DigitWord:
    """The expansion of eval(w) + 1 obtained by adding zero words digit-wise.

    Incrementing the digit at exponent 0 can only break admissibility when
    that digit was m-1 (it becomes m) or m-2 followed by a digit below n (it
    becomes m-1). Any other failure raises PatternNotMatched.
    """
    _require_class_a(base)
    scanner = FactorScanner(base)
    if not _is_expansion(w, scanner):
        raise OutOfDomain(f"{w} is not an expansion over {base}")
    m, n = base.m, base.n
    c = m - n - 1
    raised = w + DigitWord((1,), 0)
    if _is_expansion(raised, scanner):
        return raised
    d0 = w.digit_at(0)

    # pairs (m-1) n directly above exponent 0
    k = 0
    while raised.digit_at(2 * k + 2) == m - 1 and raised.digit_at(2 * k + 1) == n:
        k += 1
    B = raised.digit_at(2 * k + 1)

    if d0 == m - 1:
        if B == 0:
            fix = _place(_zero_digits(ZeroVariant.LONG_PLUS, k, m, n), -1)
        elif k == 0:
            fix = -_place(_zero_digits(ZeroVariant.SHORT, 0, m, n), -1)
        else:
            fix = -_place(_zero_digits(ZeroVariant.LONG_MINUS, k - 1, m, n), -1)
    elif d0 == m - 2 and raised.digit_at(-1) < n:
        # pairs X Y below the radix point with X >= m-n-1 and Y < n
        l = 0
        while raised.digit_at(-2 * l - 2) >= c and raised.digit_at(-2 * l - 3) < n:
            l += 1
        D = raised.digit_at(-2 * l - 2)
        if D <= c:
            z = (c, -c) * l + (m - n, n)
        else:
            z = (c, -c) * l + (c, -(m - n), -n)
        if B == 0:
            p_int = (1, m - 1, -c) + (c, -c) * k
        else:
            p_int = (-1, -(m - 1)) + (c, -c) * k
        fix = _place(p_int, 0) + DigitWord(z, -1)
    else:
        raise PatternNotMatched(f"no rewriting case for {w} + 1 over {base}")

    result = raised + fix
    if not _is_expansion(result, scanner):
        raise PatternNotMatched(f"rewriting {w} + 1 over {base} gave {result}, not an expansion")
    return result
