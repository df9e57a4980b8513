from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphchi.series import (
    HbarLaurent,
    SeriesDomainError,
    TruncatedSeries,
    TruncationError,
    VariableMismatchError,
    coeff,
    compose,
    exp_series,
    format_rational,
    log_series,
    parse_rational,
)

CAP = 5


def xs(*cs, cap=None):
    return TruncatedSeries(cs, cap)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series(draw, cap=CAP, zero_constant=False):
    cs = draw(st.lists(rationals, min_size=cap + 1, max_size=cap + 1))
    if zero_constant:
        cs[0] = Fraction(0)
    return TruncatedSeries(cs, cap)


@st.composite
def laurent(draw):
    terms = draw(st.dictionaries(st.integers(-3, 3), rationals, max_size=4))
    return HbarLaurent(terms)


# -- examples ---------------------------------------------------------------


def test_add_examples():
    assert xs(1, 1) + xs(1, -1) == xs(2, 0)
    s = xs(1, 2, 3)
    assert s + TruncatedSeries.zero(2) == s
    assert xs(0, 1, 1) + xs(0, 0, 1) == xs(0, 1, 2)


def test_add_truncates_to_smaller_cap():
    out = xs(1, 1, 1, 1) + xs(1, 1)
    assert out.cap == 1


def test_mul_examples():
    assert xs(1, 1) * xs(1, -1) == xs(1, 0, -1)
    s = xs(1, 2, 3)
    assert s * TruncatedSeries.one(2) == s
    prod = TruncatedSeries.monomial(1, 2, 4) * TruncatedSeries.monomial(1, 3, 4)
    assert prod.is_zero() and prod.cap == 4


def test_var_mismatch():
    a = TruncatedSeries([1, 1], 2, "x")
    b = TruncatedSeries([1, 1], 2, "λ")
    with pytest.raises(VariableMismatchError):
        a + b
    with pytest.raises(VariableMismatchError):
        a * b


def test_exp_examples():
    e = exp_series(xs(0, 1, cap=4))
    assert list(e.coeffs) == [Fraction(1, 1), 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]
    assert exp_series(TruncatedSeries.zero(4)) == TruncatedSeries.one(4)


def test_exp_hbar_example():
    # (h^-1 x^3/6)^2 / 2 = h^-2 x^6 / 72
    s = TruncatedSeries.monomial(HbarLaurent.monomial(Fraction(1, 6), -1), 3, 6)
    e = exp_series(s)
    assert e[0] == 1
    assert e[3] == HbarLaurent.monomial(Fraction(1, 6), -1)
    assert e[6] == HbarLaurent.monomial(Fraction(1, 72), -2)
    assert all(e[d] == 0 for d in (1, 2, 4, 5))


def test_exp_domain_error():
    with pytest.raises(SeriesDomainError):
        exp_series(xs(1, 1))


def test_log_examples():
    one_plus_x = xs(1, 1, cap=3)
    assert log_series(one_plus_x) == xs(0, 1, Fraction(-1, 2), Fraction(1, 3))
    assert log_series(TruncatedSeries.one(3)).is_zero()
    assert coeff(log_series(xs(1, 1, cap=5)), 5) == Fraction(1, 5)


def test_log_domain_error():
    with pytest.raises(SeriesDomainError):
        log_series(xs(2, 1))


def test_compose_examples():
    cap = 6
    ex_minus_1 = exp_series(xs(0, 1, cap=cap)) - 1
    assert compose(log_series(xs(1, 1, cap=cap)), ex_minus_1) == xs(0, 1, cap=cap)
    s = xs(3, 1, 4, 1, cap=3)
    assert compose(s, xs(0, 1, cap=3)) == s
    assert compose(xs(0, 0, 1, cap=3), xs(0, 1, 1, cap=3)) == xs(0, 0, 1, 2)


def test_compose_domain_error():
    with pytest.raises(SeriesDomainError):
        compose(xs(1, 1), xs(1, 1))


def test_coeff_examples_and_range():
    s = xs(1, Fraction(1, 3))
    assert coeff(s, 1) == Fraction(1, 3)
    assert coeff(exp_series(xs(0, 1, cap=3)), 0) == 1
    with pytest.raises(TruncationError):
        coeff(s, 2)


def test_reciprocal():
    s = xs(1, -1, cap=6)
    assert s.reciprocal() == TruncatedSeries([1] * 7, 6)


def test_rational_round_trip():
    for q in [Fraction(0), Fraction(-3), Fraction(41, 36), Fraction(-161, 5760)]:
        assert parse_rational(format_rational(q)) == q
    assert format_rational(Fraction(6, 4)) == "3/2"


# -- HbarLaurent ------------------------------------------------------------


def test_laurent_normal_form():
    z = HbarLaurent({0: 0, 3: 0})
    assert z.coeffs == () and z.is_zero()
    h = HbarLaurent({-2: 0, -1: 3, 1: 2})
    assert h.valuation == -1 and h.coeffs[0] != 0


def test_laurent_cap_drops_high_terms():
    h = HbarLaurent({-1: 1, 0: 1, 2: 1}, cap=1)
    assert h.terms() == {-1: 1, 0: 1}
    with pytest.raises(TruncationError):
        h[2]


def test_laurent_cap_through_negative_valuation():
    # known through h^3, times h^-2 (exact): known only through h^1
    a = HbarLaurent({0: 1, 3: 1}, cap=3)
    b = HbarLaurent.monomial(1, -2)
    assert (a * b).cap == 1


@given(laurent(), laurent())
def test_laurent_valuation_additive(a, b):
    if a and b:
        assert (a * b).valuation == a.valuation + b.valuation


@given(laurent(), laurent(), laurent())
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


# -- properties -------------------------------------------------------------


@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series(zero_constant=True))
def test_log_exp_inverse(s):
    assert log_series(exp_series(s)) == s


@given(series())
def test_exp_log_inverse(s):
    u = s.shift(1) + 1
    assert exp_series(log_series(u)) == u


@given(series(zero_constant=True), series(zero_constant=True))
def test_exp_additive(a, b):
    assert exp_series(a + b) == exp_series(a) * exp_series(b)


@settings(max_examples=50)
@given(series(cap=6, zero_constant=True), series(cap=6), st.integers(0, 5))
def test_truncation_consistency(a, b, d):
    def cut(s):
        return s.truncate(d)

    assert cut(a + b) == cut(a) + cut(b)
    assert cut(a * b) == cut(a) * cut(b)
    assert cut(exp_series(a)) == exp_series(cut(a))
    assert cut(log_series(a + 1)) == log_series(cut(a) + 1)
    assert cut(compose(b, a)) == compose(cut(b), cut(a))


def test_nested_coefficient_ring():
    lam = TruncatedSeries.monomial(1, 1, 3, "λ")
    s = TruncatedSeries([0, lam], 4)
    e = exp_series(s)
    assert e[2] == TruncatedSeries.monomial(Fraction(1, 2), 2, 3, "λ")
    assert e[4] == TruncatedSeries.zero(3, "λ")  # λ^4 is past the λ cap
