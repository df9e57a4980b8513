import math
from fractions import Fraction

import pytest

from graphchi import oracle
from graphchi.series import TruncatedSeries, exp_series, log_series
from graphchi.trees import (
    compute_expY,
    compute_Y,
    negativity_scan,
    renorm_check,
    renormalized_integrand,
    rooted_gf,
    signed_rooted_count,
    signed_tree_count,
    tree_gf,
    tree_potential,
)
from graphchi.genfunc import wick_sum


def lam_poly(*cs, cap):
    return TruncatedSeries(cs, cap, "λ")


def test_rooted_symbolic_first_terms():
    r = rooted_gf(4)
    cap = r[1].cap
    assert r[1] == lam_poly(1, cap=cap)
    assert r[2] == lam_poly(0, Fraction(1, 2), cap=cap)
    assert r[3] == lam_poly(0, Fraction(1, 6), Fraction(1, 2), cap=cap)


@pytest.mark.parametrize("lam", ["symbolic", -1, 2])
def test_rooted_is_fixed_point(lam):
    cap = 10
    r = rooted_gf(cap, lam)
    if lam == "symbolic":
        lam_elt = TruncatedSeries.monomial(1, 1, r[1].cap, "λ")
        x = TruncatedSeries([0, TruncatedSeries.one(r[1].cap, "λ")], cap)
    else:
        lam_elt = Fraction(lam)
        x = TruncatedSeries([0, 1], cap)
    assert x + (exp_series(r) - 1 - r).scale(lam_elt) == r


def test_rooted_at_minus_one_is_log():
    r = rooted_gf(30, -1)
    one_plus_x = TruncatedSeries([1, 1], 30)
    assert r == log_series(one_plus_x)
    assert exp_series(r) == one_plus_x
    assert [r[d] for d in range(1, 4)] == [1, Fraction(-1, 2), Fraction(1, 3)]


def test_rooted_coefficients_stabilize():
    # running more iterations than needed changes nothing
    assert rooted_gf(8, -1) == rooted_gf(12, -1).truncate(8)


def test_tree_gf_examples():
    t = tree_gf(8)
    assert t[3] == Fraction(-1, 6)
    assert t[4] == Fraction(1, 12)
    for n in range(3, 9):
        assert t[n] * math.factorial(n) == (-1) ** n * math.factorial(n - 2)


def test_tree_gf_closed_form_matches_coefficient_formula():
    assert tree_gf(25) == tree_potential(25)


def test_tree_derivative_is_rooted():
    cap = 20
    # T' = log(1+x) - x: unrooting drops the single-vertex tree
    x = TruncatedSeries([0, 1], cap - 1)
    assert tree_gf(cap).derivative() == rooted_gf(cap, -1).truncate(cap - 1) - x


@pytest.mark.parametrize("n,expected", [(1, 1), (3, 2), (6, -120)])
def test_signed_rooted_count(n, expected):
    assert signed_rooted_count(n) == expected
    assert oracle.tree_census(n, rooted=True) == expected
    assert rooted_gf(n, -1)[n] * math.factorial(n) == expected


def test_signed_tree_count():
    assert signed_tree_count(4) == 2


def test_expY_examples():
    e = compute_expY(4)
    assert e[0] == 1
    assert e[1] == Fraction(-1, 24)


def test_Y_fixture():
    y = compute_Y(3)
    assert y.coefficients[1:] == [Fraction(-1, 24), Fraction(-1, 48), Fraction(-161, 5760)]


def test_exp_Y_is_expY():
    assert exp_series(compute_Y(10).as_series()) == compute_expY(10).as_series()


def test_truncation_stability():
    n = 6
    assert compute_Y(n).coefficients == compute_Y(n, x_cap=6 * n + 2).coefficients
    assert compute_expY(n).coefficients == compute_expY(n, x_cap=6 * n + 2).coefficients


def test_renorm_first_order():
    assert renorm_check(1).passed


def test_renorm_order_four_exact_zero():
    rep = renorm_check(4)
    assert rep.passed
    assert rep.details["coefficients"] == [1, 0, 0, 0, 0]


def test_renorm_detects_corrupted_Y():
    y = compute_Y(3).as_series()
    bumped = y + TruncatedSeries([0, 1], 3, "hbar")
    rep = renorm_check(3, bumped)
    assert not rep.passed
    assert rep.failure["n"] == 1


def test_renorm_integrand_needs_Y():
    # Y = 0 leaves exp(-Φ/hbar + x/2); its Wick sum differs from 1 at hbar^1
    zero = TruncatedSeries.zero(2, "hbar")
    w = wick_sum(renormalized_integrand(zero, 2), 2)
    assert w[0] == 1 and w[1] != 0


@pytest.mark.parametrize("n", [3, 20])
def test_negativity(n):
    assert negativity_scan(n).passed


def test_negativity_flags_nonnegative():
    y = compute_Y(3)
    y.coefficients[2] = Fraction(0)
    rep = negativity_scan(3, y)
    assert not rep.passed and rep.failure["n"] == 2


@pytest.mark.parametrize("n", [2, 3, 5, 6])
def test_renorm_passes_at_every_order(n):
    rep = renorm_check(n)
    assert rep.passed and rep.details["coefficients"] == [1] + [0] * n
