import random

import pytest

from negbeta import (
    Base,
    ConstraintViolation,
    DigitWord,
    NotClassA,
    OutOfDomain,
    Status,
    ZeroVariant,
    add,
    add_one_rewrite,
    eval_word,
    expand,
    mul,
    parse_base,
    sub,
    zero_word,
)

from helpers import admissible_strings, quad_a_grid, random_word


@pytest.mark.parametrize("variant", list(ZeroVariant))
def test_zero_words_evaluate_to_zero(variant):
    for base in quad_a_grid(9):
        for k in ([0] if variant is ZeroVariant.SHORT else range(4)):
            z = zero_word(variant, k, base)
            assert eval_word(z.word, base) == 0
            assert eval_word((-z).word, base) == 0
            assert z.word.last_exp == 0


def test_zero_word_examples():
    assert str(zero_word(ZeroVariant.SHORT, 0, Base.quad_a(3, 1)).word) == "1,3,1."
    assert str(zero_word(ZeroVariant.LONG_PLUS, 1, Base.quad_a(4, 1)).word) == "1,3,-2,2,-3,-1."


def test_zero_word_errors():
    with pytest.raises(ConstraintViolation):
        zero_word(ZeroVariant.LONG_MINUS, -1, Base.quad_a(4, 1))
    with pytest.raises(ConstraintViolation):
        zero_word(ZeroVariant.SHORT, 2, Base.quad_a(4, 1))
    with pytest.raises(NotClassA):
        zero_word(ZeroVariant.SHORT, 0, Base.quad_b(2, 1))


def test_binary_operations_on_values():
    base = Base.quad_a(3, 1)
    one, one_two = DigitWord.parse("1."), DigitWord.parse("1,0,1.")
    assert str(add(one, one, base)) == "1,2,1.2,1"
    assert str(mul(one_two, one_two, base)) == "2,2,1,1,0.2,1"
    assert str(sub(DigitWord.parse("0."), one, base)) == "1,2.1"


def test_operations_are_exact():
    rng = random.Random(3)
    for _ in range(300):
        base = rng.choice(quad_a_grid(6) + [Base.quad_b(2, 1), Base.golden()])
        w1, w2 = random_word(base, rng), random_word(base, rng)
        x, y = eval_word(w1, base), eval_word(w2, base)
        for op, expected in ((add, x + y), (sub, x - y), (mul, x * y)):
            result = op(w1, w2, base)
            if result.is_finite:
                assert eval_word(result.word, base) == expected
            else:
                assert result.status is Status.INFINITE_PERIODIC


def test_class_b_subtraction_leaves_the_finite_set():
    result = sub(DigitWord.parse("0."), DigitWord.parse("1."), Base.quad_b(3, 1))
    assert str(result) == "1,3.(3)^w"


@pytest.mark.parametrize("spec", ["quad-:3,1", "quad-:4,2", "quad-:6,1", "quad-:6,4", "quad-:7,2"])
def test_add_one_rewrite_matches_expansion(spec):
    base = parse_base(spec)
    for digits in admissible_strings(base, 5):
        for lead in (2, 5):
            word = DigitWord(digits, lead)
            assert add_one_rewrite(word, base) == expand(eval_word(word, base) + 1, base).word


def test_add_one_rewrite_cases():
    base = Base.quad_a(4, 1)
    # plain increment
    assert str(add_one_rewrite(DigitWord.parse("1.1"), base)) == "2.1"
    # digit m-1 at exponent 0, with and without (m-1) n pairs above it
    for text in ("3.1", "1,3.3,2", "3,1,3.1", "2,3,1,3.2"):
        word = DigitWord.parse(text)
        assert add_one_rewrite(word, base) == expand(eval_word(word, base) + 1).word
    # digit m-2 followed by a digit below n
    word = DigitWord.parse("2.0,3,1")
    assert add_one_rewrite(word, base) == expand(eval_word(word, base) + 1).word


def test_add_one_rewrite_errors():
    with pytest.raises(OutOfDomain):
        add_one_rewrite(DigitWord.parse("3,0."), Base.quad_a(4, 1))
    with pytest.raises(NotClassA):
        add_one_rewrite(DigitWord.parse("1."), Base.quad_b(2, 1))
