"""Digit strings: finite words with a radix point and eventually periodic tails.

Text format: digits are decimal integers separated by ``,``; a single ``.``
token marks the radix point (``"1,2.1"``); integer-only words end with ``.``;
a periodic tail is written ``(d,...)^w``. The zero word is ``"0."``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm

from .errors import MalformedSpec

Digits = tuple[int, ...]


@dataclass(frozen=True)
class DigitWord:
    """A finite word whose i-th digit sits at exponent ``lead_exp - i``.

    Always stored canonically: first digit nonzero (the zero word is
    ``(0,)`` at exponent 0), integer positions kept down to exponent 0, and no
    trailing zeros below the radix point. Digits may be negative internally.
    """

    digits: Digits
    lead_exp: int = 0

    def __post_init__(self):
        digits, lead = tuple(self.digits), self.lead_exp
        start = 0
        while start < len(digits) and digits[start] == 0:
            start += 1
        if start == len(digits):
            digits, lead = (0,), 0
        else:
            lead -= start
            digits = digits[start:]
            last_exp = lead - len(digits) + 1
            if last_exp > 0:
                digits = digits + (0,) * last_exp
            else:
                end = len(digits)
                while digits[end - 1] == 0 and lead - (end - 1) < 0:
                    end -= 1
                digits = digits[:end]
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "lead_exp", lead)

    @classmethod
    def from_map(cls, by_exp: dict[int, int]) -> DigitWord:
        nonzero = [e for e, d in by_exp.items() if d]
        if not nonzero:
            return cls((0,), 0)
        hi, lo = max(nonzero), min(nonzero)
        return cls(tuple(by_exp.get(e, 0) for e in range(hi, lo - 1, -1)), hi)

    @classmethod
    def integer(cls, digits) -> DigitWord:
        digits = tuple(digits)
        return cls(digits, len(digits) - 1)

    @property
    def last_exp(self) -> int:
        return self.lead_exp - len(self.digits) + 1

    @property
    def is_zero(self) -> bool:
        return self.digits == (0,)

    @property
    def is_signed(self) -> bool:
        return any(d < 0 for d in self.digits)

    @property
    def frac_length(self) -> int:
        return max(0, -self.last_exp)

    def digit_at(self, exp: int) -> int:
        i = self.lead_exp - exp
        return self.digits[i] if 0 <= i < len(self.digits) else 0

    def as_map(self) -> dict[int, int]:
        return {self.lead_exp - i: d for i, d in enumerate(self.digits) if d}

    def shift(self, j: int) -> DigitWord:
        """Multiply by (-beta)**j: the digits stay, the radix point moves."""
        return DigitWord(self.digits, self.lead_exp + j)

    def __add__(self, other: DigitWord) -> DigitWord:
        """Digitwise sum aligned on exponents (no carries)."""
        total = self.as_map()
        for e, d in other.as_map().items():
            total[e] = total.get(e, 0) + d
        return DigitWord.from_map(total)

    def __neg__(self) -> DigitWord:
        return DigitWord(tuple(-d for d in self.digits), self.lead_exp)

    def integer_digits(self) -> Digits:
        return tuple(self.digit_at(e) for e in range(max(self.lead_exp, 0), -1, -1))

    def fractional_digits(self) -> Digits:
        return tuple(self.digit_at(e) for e in range(-1, self.last_exp - 1, -1))

    def __str__(self) -> str:
        return format_digits(self.integer_digits()) + "." + format_digits(self.fractional_digits())

    @classmethod
    def parse(cls, text: str, signed: bool = False) -> DigitWord:
        text = text.strip()
        if text.count(".") > 1:
            raise MalformedSpec(f"digit word has more than one radix point: {text!r}")
        # a word without a radix point is read as an integer word
        int_part, _, frac_part = text.partition(".")
        int_digits = _parse_digits(int_part, signed)
        if not int_digits:
            raise MalformedSpec(f"empty integer part in {text!r}")
        frac_digits = _parse_digits(frac_part, signed)
        return cls(int_digits + frac_digits, len(int_digits) - 1)


_DIGIT = re.compile(r"^\d+$")
_SIGNED_DIGIT = re.compile(r"^-?\d+$")


def _parse_digits(text: str, signed: bool) -> Digits:
    if text == "":
        return ()
    pattern = _SIGNED_DIGIT if signed else _DIGIT
    out = []
    for token in text.split(","):
        if not pattern.match(token):
            raise MalformedSpec(f"bad digit token {token!r}")
        out.append(int(token))
    return tuple(out)


def format_digits(digits) -> str:
    return ",".join(str(d) for d in digits)


def _primitive_root(period: Digits) -> Digits:
    k = len(period)
    for size in range(1, k + 1):
        if k % size == 0 and period[:size] * (k // size) == period:
            return period[:size]
    return period


@dataclass(frozen=True)
class PeriodicWord:
    """The right-infinite word ``preperiod + period^omega``.

    An empty period means the word continues with zeros. The stored form has
    a primitive period and a minimal preperiod; a period of zeros becomes the
    empty period.
    """

    preperiod: Digits = ()
    period: Digits = ()

    def __post_init__(self):
        pre, per = tuple(self.preperiod), tuple(self.period)
        if per:
            per = _primitive_root(per)
            while pre and pre[-1] == per[-1]:
                pre = pre[:-1]
                per = per[-1:] + per[:-1]
            if per == (0,):
                per = ()
        if not per:
            end = len(pre)
            while end and pre[end - 1] == 0:
                end -= 1
            pre = pre[:end]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @property
    def is_finite(self) -> bool:
        return not self.period

    @property
    def is_purely_periodic(self) -> bool:
        return bool(self.period) and not self.preperiod

    def digit(self, i: int) -> int:
        """0-based digit access."""
        if i < len(self.preperiod):
            return self.preperiod[i]
        if not self.period:
            return 0
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, k: int) -> Digits:
        return tuple(self.digit(i) for i in range(k))

    def drop(self, k: int) -> PeriodicWord:
        """The tail after the first k digits."""
        if k <= len(self.preperiod):
            return PeriodicWord(self.preperiod[k:], self.period)
        if not self.period:
            return PeriodicWord()
        r = (k - len(self.preperiod)) % len(self.period)
        return PeriodicWord((), self.period[r:] + self.period[:r])

    def prepend(self, digits) -> PeriodicWord:
        return PeriodicWord(tuple(digits) + self.preperiod, self.period)

    @property
    def span(self) -> int:
        """Number of positions after which the word is known to repeat."""
        return len(self.preperiod) + max(len(self.period), 1)

    def __str__(self) -> str:
        if not self.period:
            return format_digits(self.preperiod) if self.preperiod else "(0)^w"
        tail = f"({format_digits(self.period)})^w"
        return f"{format_digits(self.preperiod)},{tail}" if self.preperiod else tail

    @classmethod
    def parse(cls, text: str) -> PeriodicWord:
        text = text.strip()
        match = re.match(r"^(?P<pre>[\d,]*?),?(?:\((?P<per>[\d,]+)\)\^w)?$", text)
        if not match or text == "":
            raise MalformedSpec(f"unrecognised periodic word {text!r}")
        pre = _parse_digits(match["pre"], False)
        per = _parse_digits(match["per"], False) if match["per"] else ()
        return cls(pre, per)

    @classmethod
    def from_word(cls, word: DigitWord) -> PeriodicWord:
        """The digit string of a finite word, read from its leading digit."""
        return cls(word.digits, ())


def common_span(u: PeriodicWord, v: PeriodicWord) -> int:
    """Length after which two eventually periodic words either differ or agree forever."""
    return max(len(u.preperiod), len(v.preperiod)) + lcm(max(len(u.period), 1), max(len(v.period), 1))
