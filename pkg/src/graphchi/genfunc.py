"""Generating functions for admissible graphs without leaves.

The central object is the formal Gaussian ("Wick") sum

    W[S](hbar) = sum_m hbar^m (2m-1)!! [x^(2m)] S(x, hbar),

applied to ``S = exp(±Φ(x)/hbar)`` with the graph potential
``Φ(x) = e^x - 1 - x - x^2/2``.  It produces

* ``F``: all admissible graphs weighted by ``hbar^(-χ)/|Aut|``,
* ``E``: the same with the sign ``(-1)^(edges)``,
* ``X = log E``: connected graphs only; ``[hbar^n] X = χ(GC_2^(n+1))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .series import (
    HbarLaurent,
    SeriesDomainError,
    TruncatedSeries,
    TruncationError,
    exp_series,
    format_rational,
    log_series,
)

SERIES_NAMES = ("F", "E", "X", "Y", "expY", "renorm")


class VerificationError(AssertionError):
    """A cross-check between two independent computations failed."""


class WickConsistencyError(ArithmeticError):
    """A negative power of hbar survived the Wick sum."""


@dataclass(frozen=True)
class PotentialSpec:
    name: str
    series: TruncatedSeries
    min_degree: int

    def __post_init__(self):
        for d in range(min(self.min_degree, self.series.cap + 1)):
            if self.series.coeffs[d] != 0:
                raise ValueError(f"potential {self.name!r} has a nonzero x^{d} term")


@dataclass
class SeriesReport:
    """Coefficients of ``hbar^0 .. hbar^order`` of a named series."""

    name: str
    order: int
    coefficients: list
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in SERIES_NAMES:
            raise ValueError(f"unknown series name {self.name!r}")
        if len(self.coefficients) != self.order + 1:
            raise ValueError("coefficient list must have length order + 1")

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def as_series(self) -> TruncatedSeries:
        return TruncatedSeries(self.coefficients, self.order, "hbar")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "coefficients": [{"n": n, "value": format_rational(c)} for n, c in enumerate(self.coefficients)],
        }


@dataclass
class VerificationReport:
    name: str
    passed: bool
    checked: int
    failure: dict | None = None
    details: dict = field(default_factory=dict)

    def raise_if_failed(self):
        if not self.passed:
            raise VerificationError(f"{self.name}: {self.failure}")

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.failure is not None:
            out["failure"] = {k: format_rational(v) if isinstance(v, Fraction) else v for k, v in self.failure.items()}
        return out


def x_cap_for(order: int) -> int:
    """x-degree needed to fix all coefficients through ``hbar^order``.

    A term ``hbar^(-k) x^d`` of ``exp(±Φ/hbar)`` has ``3k <= d``, so after the
    Wick sum it lands at ``hbar^(d/2 - k) >= hbar^(d/6)``.
    """
    return 6 * order


def double_factorial(m: int) -> int:
    """``(2m-1)!!``, the number of perfect matchings on ``2m`` points."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = 1
    for j in range(1, 2 * m, 2):
        out *= j
    return out


def graph_potential(x_cap: int) -> PotentialSpec:
    """``e^x - 1 - x - x^2/2``: one corolla with at least three half-edges."""
    s = TruncatedSeries.from_function(lambda d: Fraction(1, math.factorial(d)) if d >= 3 else 0, x_cap)
    return PotentialSpec("e^x-1-x-x^2/2", s, 3)


def fat_partition_gf(x_cap: int, lam_cap: int) -> TruncatedSeries:
    """``exp(λ Φ(x))`` as a series in x with polynomial-in-λ coefficients.

    ``n! [λ^k x^n]`` is the number of partitions of an n-set into k blocks of
    size at least 3.
    """
    phi = graph_potential(x_cap).series
    lam = TruncatedSeries.monomial(1, 1, lam_cap, "λ")
    return exp_series(phi.map(lambda c: lam.scale(c)))


def p_m(m: int) -> TruncatedSeries:
    """``(2m-1)!! [x^(2m)] exp(λΦ)``; ``[λ^k]`` is ``|LG(m,k)| / (2m)!``."""
    if m < 1:
        raise ValueError("m must be positive")
    gf = fat_partition_gf(2 * m, m)
    c = gf.coeff(2 * m)
    if not isinstance(c, TruncatedSeries):
        c = TruncatedSeries((c,), m, "λ")
    return c.scale(double_factorial(m))


def potential_exponential(potential: TruncatedSeries, sign: int = 1) -> TruncatedSeries:
    """``exp(sign * potential / hbar)`` with HbarLaurent coefficients."""
    arg = potential.map(lambda c: HbarLaurent.monomial(sign * c, -1) if c else HbarLaurent())
    return exp_series(arg)


def check_valuation_bound(s: TruncatedSeries) -> None:
    """Every x^d coefficient must have hbar-valuation at least ``-floor(d/3)``."""
    for d, c in enumerate(s.coeffs):
        if isinstance(c, HbarLaurent) and c and c.valuation < -(d // 3):
            raise ValueError(f"x^{d} coefficient has hbar-valuation {c.valuation} < {-(d // 3)}")


def wick_sum(s: TruncatedSeries, order: int, signed: bool = False) -> TruncatedSeries:
    """Formal Gaussian integral: ``x^(2m) -> (2m-1)!! hbar^m``, odd powers -> 0.

    ``s`` is a series in x with rational or :class:`HbarLaurent` coefficients.
    With ``signed=True`` every ``x^(2m)`` also picks up ``(-1)^m``.  Returns
    the rational series in hbar through ``hbar^order``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if s.cap < x_cap_for(order):
        raise TruncationError(f"x-cap {s.cap} is too small for hbar-order {order}; need {x_cap_for(order)}")
    check_valuation_bound(s)
    acc: dict[int, Fraction] = {}
    for m in range(s.cap // 2 + 1):
        c = s.coeffs[2 * m]
        if c == 0 and not (isinstance(c, HbarLaurent) and c.cap is not None):
            continue
        w = double_factorial(m) * (-1 if signed and m % 2 else 1)
        if isinstance(c, HbarLaurent):
            if c.cap is not None and c.cap + m < order:
                raise TruncationError(
                    f"x^{2 * m} coefficient is only known through hbar^{c.cap + m}, need hbar^{order}"
                )
            terms = c.terms()
        else:
            terms = {0: Fraction(c)}
        for e, v in terms.items():
            e += m
            if e <= order:
                acc[e] = acc.get(e, Fraction(0)) + w * v
    for e, v in acc.items():
        if e < 0 and v != 0:
            raise WickConsistencyError(f"hbar^{e} survived the Wick sum with coefficient {v}")
    return TruncatedSeries([acc.get(n, Fraction(0)) for n in range(order + 1)], order, "hbar")


def _graph_exponential(order: int, sign: int, x_cap: int | None) -> TruncatedSeries:
    x_cap = x_cap_for(order) if x_cap is None else x_cap
    return potential_exponential(graph_potential(x_cap).series, sign)


def compute_F(order: int, x_cap: int | None = None) -> SeriesReport:
    """All admissible leafless graphs, ``sum_G hbar^(-χ(G)) / |Aut(G)|``."""
    s = _graph_exponential(order, 1, x_cap)
    w = wick_sum(s, order)
    return SeriesReport("F", order, list(w.coeffs), {"x_cap": s.cap, "route": "wick(exp(Φ/hbar))"})


def compute_E(order: int, x_cap: int | None = None) -> SeriesReport:
    """Graphs signed by ``(-1)^(edges)``: the sign-twisted Wick sum."""
    s = _graph_exponential(order, 1, x_cap)
    w = wick_sum(s, order, signed=True)
    return SeriesReport("E", order, list(w.coeffs), {"x_cap": s.cap, "route": "signed wick(exp(Φ/hbar))"})


def compute_E_via_negated_potential(order: int, x_cap: int | None = None) -> SeriesReport:
    """Second route to E: ``E(-hbar) = W[exp(-Φ/hbar)]``, then hbar -> -hbar."""
    s = _graph_exponential(order, -1, x_cap)
    w = wick_sum(s, order).substitute_neg()
    return SeriesReport("E", order, list(w.coeffs), {"x_cap": s.cap, "route": "wick(exp(-Φ/hbar)) at -hbar"})


def compute_X(order: int, x_cap: int | None = None) -> SeriesReport:
    """``log E``; ``[hbar^n] X = χ(GC_2^(n+1))``."""
    e = compute_E(order, x_cap)
    x = log_series(e.as_series())
    return SeriesReport("X", order, list(x.coeffs), {"x_cap": e.meta["x_cap"], "route": "log(E)"})


def bernoulli(n: int) -> Fraction:
    """``B_n`` from ``x / (e^x - 1)`` (so ``B_1 = -1/2``), by series inversion."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    # (e^x - 1)/x = sum x^d / (d+1)!
    s = TruncatedSeries.from_function(lambda d: Fraction(1, math.factorial(d + 1)), n)
    return s.reciprocal().coeff(n) * math.factorial(n)


def chi_gc2(n: int) -> Fraction:
    """``[hbar^n] X``: ``-B_(n+1) / (n(n+1))`` for odd n, zero for even n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2 == 0:
        return Fraction(0)
    return -bernoulli(n + 1) / (n * (n + 1))


def verify_gc2(order: int) -> VerificationReport:
    """Compare ``log E`` against the Bernoulli closed form and check that X is odd."""
    if order < 1:
        raise ValueError("order must be positive")
    x = compute_X(order)
    for n in range(1, order + 1):
        expected = chi_gc2(n)
        if x[n] != expected:
            return VerificationReport("gc2", False, n - 1, {"n": n, "series": x[n], "closed_form": expected})
    xs = x.as_series()
    odd = xs.substitute_neg() == -xs
    if not odd:
        bad = next(n for n in range(order + 1) if n % 2 == 0 and x[n] != 0)
        return VerificationReport("gc2", False, order, {"n": bad, "series": x[bad], "closed_form": Fraction(0)})
    return VerificationReport("gc2", True, order, details={"x_cap": x.meta["x_cap"]})


__all__ = [
    "PotentialSpec",
    "SeriesReport",
    "VerificationReport",
    "VerificationError",
    "WickConsistencyError",
    "SeriesDomainError",
    "double_factorial",
    "graph_potential",
    "fat_partition_gf",
    "p_m",
    "potential_exponential",
    "wick_sum",
    "compute_F",
    "compute_E",
    "compute_E_via_negated_potential",
    "compute_X",
    "bernoulli",
    "chi_gc2",
    "verify_gc2",
    "x_cap_for",
]
