"""Trees, forests and the generating function of χ(Out(F_n)).

Rooted admissible trees satisfy ``R = x + λ(e^R - 1 - R)``; at ``λ = -1`` this
collapses to ``R = log(1+x)``.  Signed unrooted trees are

    T(x) = -x - x^2/2 + (1+x) log(1+x) = sum_{n>=3} (-1)^n x^n / (n(n-1)),

and the Wick sum of ``exp(-T(x)/hbar)`` counts graphs with a marked forest.
Its logarithm is ``Y(hbar) = sum_n χ(Out(F_(n+1))) hbar^n``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .genfunc import (
    SeriesReport,
    VerificationReport,
    graph_potential,
    potential_exponential,
    wick_sum,
    x_cap_for,
)
from .series import HbarLaurent, TruncatedSeries, compose, exp_series, log_series

LAMBDA_SYMBOLIC = "symbolic"


def _extend(s: TruncatedSeries, cap: int) -> TruncatedSeries:
    return TruncatedSeries(s.coeffs, cap, s.var)


def rooted_gf(x_cap: int, lam=LAMBDA_SYMBOLIC) -> TruncatedSeries:
    """Solve ``R = x + λ(e^R - 1 - R)`` by fixed-point iteration from ``R = x``.

    ``lam`` is either ``"symbolic"`` (coefficients are polynomials in λ) or a
    rational value such as ``-1``.  Exactly ``x_cap`` iterations are run.
    Iteration ``i`` fixes the coefficient of ``x^(i+1)``, so it is carried out
    at cap ``i+1``; the unknown top coefficient cannot reach lower degrees
    because ``e^R - 1 - R`` starts at ``R^2``.
    """
    if x_cap < 1:
        raise ValueError("x_cap must be at least 1")
    if lam == LAMBDA_SYMBOLIC:
        # a rooted tree with n leaves has at most n-1 internal vertices
        lam_cap = max(x_cap - 1, 0)
        one = TruncatedSeries.one(lam_cap, "λ")
        lam_elt = TruncatedSeries.monomial(1, 1, lam_cap, "λ")
        x = TruncatedSeries([0, one], x_cap)
    else:
        lam_elt = Fraction(lam)
        x = TruncatedSeries([0, 1], x_cap)
    r = x.truncate(1)
    for i in range(1, x_cap + 1):
        cap = min(i + 1, x_cap)
        r = _extend(r, cap)
        step = exp_series(r) - 1 - r
        r = x.truncate(cap) + step.scale(lam_elt)
    return r


def tree_gf(x_cap: int) -> TruncatedSeries:
    """``T(x) = -x - x^2/2 + (1+x) log(1+x)``, signed unrooted trees by leaves."""
    if x_cap < 3:
        raise ValueError("x_cap must be at least 3")
    one_plus_x = TruncatedSeries([1, 1], x_cap)
    return one_plus_x * log_series(one_plus_x) - TruncatedSeries([0, 1, Fraction(1, 2)], x_cap)


def tree_potential(x_cap: int) -> TruncatedSeries:
    """The coefficient formula ``(-1)^n / (n(n-1))`` for ``n >= 3``."""
    return TruncatedSeries.from_function(lambda n: Fraction((-1) ** n, n * (n - 1)) if n >= 3 else 0, x_cap)


def signed_rooted_count(n: int) -> int:
    """Leaf-labeled rooted trees with n leaves, each with sign ``(-1)^v``."""
    if n < 1:
        raise ValueError("n must be positive")
    return (-1) ** (n + 1) * math.factorial(n - 1)


def signed_tree_count(n: int) -> int:
    """Leaf-labeled unrooted trees with n >= 3 leaves, each with sign ``(-1)^v``."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return (-1) ** n * math.factorial(n - 2)


def compute_expY(order: int, x_cap: int | None = None) -> SeriesReport:
    """``sum_m hbar^m (2m-1)!! [x^(2m)] exp(-T(x)/hbar)``: signed pairs (G, F)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    x_cap = x_cap_for(order) if x_cap is None else x_cap
    s = potential_exponential(tree_gf(max(x_cap, 3)).truncate(x_cap), -1)
    w = wick_sum(s, order)
    return SeriesReport("expY", order, list(w.coeffs), {"x_cap": x_cap, "route": "wick(exp(-T/hbar))"})


def compute_Y(order: int, x_cap: int | None = None) -> SeriesReport:
    """``log`` of :func:`compute_expY`; ``[hbar^n] Y = χ(Out(F_(n+1)))``."""
    if order < 1:
        raise ValueError("order must be positive")
    e = compute_expY(order, x_cap)
    y = log_series(e.as_series())
    return SeriesReport("Y", order, list(y.coeffs), {"x_cap": e.meta["x_cap"], "route": "log(expY)"})


def _as_x_series(c, x_cap: int) -> TruncatedSeries:
    if isinstance(c, TruncatedSeries):
        return c
    return TruncatedSeries((c,), x_cap)


def renormalized_integrand(y: TruncatedSeries, order: int) -> TruncatedSeries:
    """``exp(-Φ(x)/hbar + x/2 + Y(-hbar e^(-x)))`` as a series in x.

    The path integral carries ``-(e^x - 1 - x)/hbar``; its quadratic part
    ``-x^2/(2 hbar)`` is the Gaussian weight of the Wick sum, so only the
    potential ``Φ = e^x - 1 - x - x^2/2`` stays in the exponent.

    ``Y(-hbar e^(-x))`` is formed as a series in hbar whose coefficients are
    series in x, then rewritten with :class:`HbarLaurent` coefficients
    truncated at ``hbar^order``.
    """
    x_cap = x_cap_for(order)
    y = y.truncate(order)
    neg_exp = TruncatedSeries.from_function(lambda d: Fraction((-1) ** d, math.factorial(d)), x_cap)
    # inner = -hbar * e^(-x), a series in hbar over x-series
    inner = TruncatedSeries([TruncatedSeries.zero(x_cap), -neg_exp], order, "hbar")
    counterterm = exp_series(compose(y, inner))
    # transpose: x^d coefficient = sum_n [hbar^n][x^d]
    rows = [_as_x_series(c, x_cap) for c in counterterm.coeffs]
    transposed = TruncatedSeries(
        [HbarLaurent({n: row.coeff(d) for n, row in enumerate(rows)}, cap=order) for d in range(x_cap + 1)],
        x_cap,
    )
    half_x = exp_series(TruncatedSeries([0, Fraction(1, 2)], x_cap))
    gauss = potential_exponential(graph_potential(x_cap).series, -1)
    return gauss * half_x * transposed


def renorm_check(order: int, y: SeriesReport | TruncatedSeries | None = None) -> VerificationReport:
    """Check that the Wick sum of :func:`renormalized_integrand` is exactly 1
    through ``hbar^order``."""
    if order < 1:
        raise ValueError("order must be positive")
    if y is None:
        y = compute_Y(order)
    ys = y.as_series() if isinstance(y, SeriesReport) else y
    result = wick_sum(renormalized_integrand(ys, order), order)
    if result.coeff(0) != 1:
        return VerificationReport("renorm", False, 0, {"n": 0, "value": result.coeff(0)})
    for n in range(1, order + 1):
        if result.coeff(n) != 0:
            return VerificationReport("renorm", False, n - 1, {"n": n, "value": result.coeff(n)})
    return VerificationReport("renorm", True, order, details={"coefficients": list(result.coeffs)})


def negativity_scan(order: int, y: SeriesReport | None = None) -> VerificationReport:
    """Check ``[hbar^n] Y < 0`` for ``1 <= n <= order``."""
    if order < 1:
        raise ValueError("order must be positive")
    y = compute_Y(order) if y is None else y
    for n in range(1, order + 1):
        if not y[n] < 0:
            return VerificationReport("negativity", False, n - 1, {"n": n, "value": y[n]})
    return VerificationReport("negativity", True, order)
