import pytest

from negbeta import (
    Base,
    BudgetExceeded,
    DigitWord,
    Kind,
    NotQuadratic,
    Op,
    QuadElem,
    classify,
    conjugate,
    conjugate_extremes,
    enumerate_z,
    eval_word,
    expand,
    fin_trivial,
    hk_bounds,
    is_admissible,
    parse_base,
    scan_L,
)

from helpers import admissible_words_up_to


def test_classify():
    c = classify(Base.quad_a(3, 1))
    assert c.kind is Kind.QUAD_A and c.pisot and c.conjugate_sign == 1 and c.ring_candidate
    c = classify(Base.quad_b(2, 1))
    assert c.pisot and c.conjugate_sign == -1 and not c.ring_candidate
    c = classify(Base.integer(3))
    assert c.pisot and c.z_ring
    assert not classify(parse_base("real:1.5")).pisot
    assert classify(parse_base("real:3")).pisot


def test_fin_trivial():
    assert fin_trivial(parse_base("real:1.5"))
    assert fin_trivial(parse_base("real:1.618"))
    assert not fin_trivial(parse_base("real:1.619"))
    assert not fin_trivial(Base.golden())
    assert not fin_trivial(Base.quad_a(3, 1))
    assert not fin_trivial(Base.integer(2))


@pytest.mark.parametrize("spec, digits, expected", [
    ("quad-:4,1", 1, ["0.", "1.", "2."]),
    ("int:2", 1, ["0.", "1."]),
    ("quad+:1,1", 3, ["0.", "1,1.", "1,1,0.", "1,1,1."]),
])
def test_enumerate_small(spec, digits, expected):
    assert [str(w) for w in enumerate_z(parse_base(spec), digits)] == expected


@pytest.mark.parametrize("spec", ["quad-:3,1", "quad-:5,2", "quad+:2,2", "quad+:3,1"])
def test_enumerate_matches_brute_force(spec):
    base = parse_base(spec)
    words = list(enumerate_z(base, 4))
    assert words[0].is_zero
    brute = {DigitWord.integer(d) for d in admissible_words_up_to(base, 4)}
    assert set(words[1:]) == brute
    for w in words[1:]:
        assert is_admissible(w, base)
        assert expand(eval_word(w, base)).word == w


def test_enumerate_rejects_generic():
    with pytest.raises(NotQuadratic):
        list(enumerate_z(parse_base("real:1.5"), 2))


def test_scan_examples():
    report = scan_L(Base.quad_a(3, 1), Op.ADD, 4)
    assert report.observed_L == 2
    w1, w2, result = report.witness
    assert (str(w1), str(w2), str(result)) == ("1.", "1.", "1,2,1.2,1")
    report = scan_L(Base.quad_a(3, 1), Op.MUL, 3)
    assert report.observed_L == 2
    assert report.infinite_count == 0


def test_scan_pair_count():
    report = scan_L(Base.quad_b(2, 1), Op.ADD, 3)
    assert report.observed_L == 1
    assert report.infinite_count == 0
    n = len(list(enumerate_z(Base.quad_b(2, 1), 3)))
    assert report.pairs_tested == n * (n + 1) // 2


def test_scan_workers_do_not_change_the_report():
    base = Base.quad_a(4, 1)
    assert scan_L(base, Op.MUL, 3, workers=1) == scan_L(base, Op.MUL, 3, workers=2)


def test_scan_budget():
    with pytest.raises(BudgetExceeded):
        scan_L(Base.quad_b(2, 1), Op.ADD, 3, max_frac=0)


def test_hk_closed_forms():
    hk = hk_bounds(Base.quad_a(3, 1))
    assert (hk.bound_add, hk.bound_mul, hk.strict, hk.empirical) == (2, 2, True, False)
    c = conjugate(Base.quad_a(3, 1).beta)
    assert hk.H == (1 - c) / (c * (1 + c))
    hk = hk_bounds(Base.quad_b(2, 1))
    assert (hk.bound_add, hk.bound_mul) == (1, 1)
    assert hk.H == Base.quad_b(2, 1).beta and hk.K == 1
    hk = hk_bounds(Base.golden())
    assert (hk.bound_add, hk.bound_mul) == (3, 3)


def test_hk_empirical_for_non_units():
    hk = hk_bounds(Base.quad_a(5, 2), 8)
    assert hk.empirical and not hk.strict
    assert hk.K > 0 and hk.H >= hk.K


def test_conjugate_extremes_against_enumeration():
    base = Base.quad_a(5, 2)
    words = [w for w in enumerate_z(base, 5) if not w.is_zero]
    values = [abs(conjugate(eval_word(w, base))) for w in words]
    H, K = conjugate_extremes(base, 5)
    assert H == max(values)
    assert K == min(v for w, v in zip(words, values) if w.digits[-1] != 0)


def test_hk_needs_quadratic():
    with pytest.raises(NotQuadratic):
        hk_bounds(Base.integer(2))
