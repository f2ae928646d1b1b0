"""Shared base grids and word generators for the test suite."""
from __future__ import annotations

import os
import random

from negbeta import Base, DigitWord
from negbeta.admissibility import FactorScanner

FULL_SCALE = os.environ.get("NEGBETA_FULL_SCALE") == "1"


def quad_a_grid(max_m: int):
    return [Base.quad_a(m, n) for m in range(3, max_m + 1) for n in range(1, m - 1)]


def quad_b_grid(max_m: int):
    return [Base.quad_b(m, n) for m in range(1, max_m + 1) for n in range(1, m + 1)]


def quad_grid(max_m: int):
    return quad_a_grid(max_m) + quad_b_grid(max_m)


def admissible_strings(base: Base, length: int, leading_zeros: bool = True):
    """Digit strings of exactly `length` positions that are expansion strings.

    Without leading_zeros the first digit is nonzero.
    """
    scanner = FactorScanner(base)
    level = [((), scanner.start())]
    for i in range(length):
        nxt = []
        low = 0 if (leading_zeros or i) else 1
        for prefix, state in level:
            for d in range(low, base.digit_max + 1):
                after = scanner.feed(state, d)
                if after is not None:
                    nxt.append((prefix + (d,), after))
        level = nxt
    return [digits for digits, state in level if scanner.accept(state)]


def admissible_words_up_to(base: Base, length: int):
    """Every nonzero admissible string with at most `length` digits, first digit nonzero."""
    out = []
    for k in range(1, length + 1):
        out.extend(admissible_strings(base, k, leading_zeros=False))
    return out


def random_admissible(base: Base, length: int, rng: random.Random, tries: int = 200):
    """A random admissible string, drawn digit by digit and restarted on dead ends.

    Returns None when no string is found within `tries` attempts (some lengths
    have none, e.g. length 1 for the golden ratio).
    """
    scanner = FactorScanner(base)
    for _ in range(tries):
        state, digits = scanner.start(), []
        for i in range(length):
            choices = [d for d in range(1 if i == 0 else 0, base.digit_max + 1)
                       if scanner.feed(state, d) is not None]
            d = rng.choice(choices)
            state = scanner.feed(state, d)
            digits.append(d)
        if scanner.accept(state):
            return tuple(digits)
    return None


def random_word(base: Base, rng: random.Random, max_len: int = 8, spread: int = 4) -> DigitWord:
    digits = None
    while digits is None:
        digits = random_admissible(base, rng.randint(1, max_len), rng)
    return DigitWord(digits, rng.randint(-spread, spread + len(digits)))
