"""Exact coefficient rings and truncated formal power series.

Three coefficient rings are used throughout the package:

* ``fractions.Fraction`` (plain ints are promoted on construction),
* :class:`HbarLaurent`, truncated Laurent polynomials in the formal variable
  hbar, and
* :class:`TruncatedSeries` itself, e.g. polynomials in ``λ`` sitting inside a
  series in ``x``.

All values are immutable; every operation returns a new object.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

__all__ = [
    "HbarLaurent",
    "TruncatedSeries",
    "SeriesDomainError",
    "TruncationError",
    "VariableMismatchError",
    "exp_series",
    "log_series",
    "compose",
    "coeff",
    "format_rational",
    "parse_rational",
]


class SeriesDomainError(ValueError):
    """Raised when an operation is applied outside its domain (e.g. exp of a
    series with a nonzero constant term)."""


class VariableMismatchError(ValueError):
    """Raised when two series in different formal variables are combined."""


class TruncationError(IndexError):
    """Raised on access to a coefficient beyond the truncation order."""


def format_rational(q) -> str:
    """Render an exact rational as ``"p/q"`` (``"p"`` when integral)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def _is_exact_zero(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 0
    return c.is_exact_zero()


def _scalar(c) -> bool:
    return isinstance(c, (int, Fraction))


# ---------------------------------------------------------------------------
# Laurent polynomials in hbar
# ---------------------------------------------------------------------------


class HbarLaurent:
    """A truncated Laurent polynomial ``sum_e c_e hbar^e`` with exact rational
    coefficients.

    ``cap`` is the highest exponent that is known; everything above it has
    been discarded.  ``cap=None`` marks an exact value (a genuine Laurent
    polynomial with nothing dropped).

    Truncation is tracked honestly through multiplication: if ``a`` is known
    through ``hbar^ca`` and ``b`` has valuation ``vb``, then ``a*b`` is known
    through ``hbar^(ca+vb)``.  With negative valuations this is stricter than
    the naive ``min(ca, cb)``.
    """

    __slots__ = ("_val", "_coeffs", "_cap")

    def __init__(self, terms=None, cap: int | None = None):
        # terms: mapping exponent -> rational, or None for zero
        items = {}
        if terms:
            for e, c in dict(terms).items():
                c = Fraction(c)
                if c and (cap is None or e <= cap):
                    items[e] = c
        self._cap = cap
        if items:
            lo, hi = min(items), max(items)
            self._val = lo
            self._coeffs = tuple(items.get(e, Fraction(0)) for e in range(lo, hi + 1))
        else:
            self._val = 0
            self._coeffs = ()

    @classmethod
    def _raw(cls, val: int, coeffs: list, cap: int | None) -> "HbarLaurent":
        # coeffs already Fractions; strips zeros at both ends and applies cap
        if cap is not None and coeffs and val + len(coeffs) - 1 > cap:
            coeffs = coeffs[: max(0, cap - val + 1)]
        lo, hi = 0, len(coeffs)
        while lo < hi and not coeffs[lo]:
            lo += 1
        while hi > lo and not coeffs[hi - 1]:
            hi -= 1
        obj = cls.__new__(cls)
        obj._cap = cap
        if lo == hi:
            obj._val, obj._coeffs = 0, ()
        else:
            obj._val, obj._coeffs = val + lo, tuple(coeffs[lo:hi])
        return obj

    @classmethod
    def monomial(cls, c, e: int, cap: int | None = None) -> "HbarLaurent":
        return cls({e: c}, cap=cap)

    @classmethod
    def scalar(cls, c, cap: int | None = None) -> "HbarLaurent":
        return cls({0: c}, cap=cap)

    @classmethod
    def from_series(cls, s: "TruncatedSeries", shift: int = 0) -> "HbarLaurent":
        """Reinterpret a rational series in hbar as a Laurent polynomial,
        keeping its truncation order."""
        return cls({i + shift: c for i, c in enumerate(s.coeffs)}, cap=s.cap + shift)

    # -- accessors ---------------------------------------------------------

    @property
    def cap(self) -> int | None:
        return self._cap

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (0 for the zero element)."""
        return self._val

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_exact_zero(self) -> bool:
        return not self._coeffs and self._cap is None

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree(self) -> int | None:
        if not self._coeffs:
            return None
        return self._val + len(self._coeffs) - 1

    def terms(self) -> dict:
        return {self._val + i: c for i, c in enumerate(self._coeffs) if c}

    def __getitem__(self, e: int) -> Fraction:
        if self._cap is not None and e > self._cap:
            raise TruncationError(f"hbar^{e} is beyond the truncation order {self._cap}")
        i = e - self._val
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def _eff_val(self) -> float:
        # smallest exponent that could be nonzero in the untruncated value
        if self._coeffs:
            return self._val
        if self._cap is None:
            return float("inf")
        return self._cap + 1

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "HbarLaurent":
        if isinstance(other, HbarLaurent):
            return other
        if _scalar(other):
            return HbarLaurent.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        cap = _min_cap(self._cap, other._cap)
        if not other._coeffs:
            return HbarLaurent._raw(self._val, list(self._coeffs), cap)
        if not self._coeffs:
            return HbarLaurent._raw(other._val, list(other._coeffs), cap)
        lo = min(self._val, other._val)
        hi = max(self._val + len(self._coeffs), other._val + len(other._coeffs))
        out = [Fraction(0)] * (hi - lo)
        for i, c in enumerate(self._coeffs):
            out[self._val - lo + i] += c
        for i, c in enumerate(other._coeffs):
            out[other._val - lo + i] += c
        return HbarLaurent._raw(lo, out, cap)

    __radd__ = __add__

    def __neg__(self):
        return HbarLaurent._raw(self._val, [-c for c in self._coeffs], self._cap)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _scalar(other):
            if other == 0:
                return HbarLaurent()
            other = Fraction(other)
            return HbarLaurent._raw(self._val, [c * other for c in self._coeffs], self._cap)
        if not isinstance(other, HbarLaurent):
            return NotImplemented
        cap = _min_cap(_add_cap(self._cap, other._eff_val()), _add_cap(other._cap, self._eff_val()))
        if not self._coeffs or not other._coeffs:
            return HbarLaurent._raw(0, [], cap)
        a, b = self._coeffs, other._coeffs
        if len(a) == 1:
            out = [a[0] * c for c in b]
        elif len(b) == 1:
            out = [c * b[0] for c in a]
        else:
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
        return HbarLaurent._raw(self._val + other._val, out, cap)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _scalar(other):
            return NotImplemented
        return self * (1 / Fraction(other))

    def shift(self, k: int) -> "HbarLaurent":
        """Multiply by ``hbar^k``."""
        return HbarLaurent._raw(self._val + k, list(self._coeffs), None if self._cap is None else self._cap + k)

    def truncate(self, cap: int) -> "HbarLaurent":
        return HbarLaurent._raw(self._val, list(self._coeffs), _min_cap(self._cap, cap))

    def substitute_neg(self) -> "HbarLaurent":
        """hbar -> -hbar."""
        return HbarLaurent({e: c if e % 2 == 0 else -c for e, c in self.terms().items()}, cap=self._cap)

    # -- comparison and display -------------------------------------------

    def __eq__(self, other):
        """Equal when all coefficients agree up to the smaller of the two
        truncation orders."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        cap = _min_cap(self._cap, other._cap)
        a, b = self.terms(), other.terms()
        for e in set(a) | set(b):
            if cap is not None and e > cap:
                continue
            if a.get(e, 0) != b.get(e, 0):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        return f"HbarLaurent({self.terms()!r}, cap={self._cap!r})"

    def __str__(self):
        parts = [f"{format_rational(c)}*h^{e}" for e, c in sorted(self.terms().items())]
        body = " + ".join(parts) if parts else "0"
        if self._cap is not None:
            body += f" + O(h^{self._cap + 1})"
        return body


def _min_cap(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _add_cap(cap, val):
    if cap is None or val == float("inf"):
        return None
    return cap + val


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Power series ``sum_{d<=cap} c_d var^d`` over an exact coefficient ring.

    The coefficient list always has length ``cap + 1``.  Binary operations
    truncate to the smaller cap of the operands and never extend.
    """

    __slots__ = ("_coeffs", "_cap", "_var")

    def __init__(self, coeffs: Iterable = (), cap: int | None = None, var: str = "x"):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        if cap is None:
            cap = max(len(cs) - 1, 0)
        if cap < 0:
            raise ValueError("degree cap must be nonnegative")
        if len(cs) > cap + 1:
            cs = cs[: cap + 1]
        else:
            cs.extend(Fraction(0) for _ in range(cap + 1 - len(cs)))
        self._coeffs = tuple(cs)
        self._cap = cap
        self._var = var

    @classmethod
    def _raw(cls, coeffs: list, cap: int, var: str) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj._coeffs, obj._cap, obj._var = tuple(coeffs), cap, var
        return obj

    @classmethod
    def zero(cls, cap: int, var: str = "x") -> "TruncatedSeries":
        return cls((), cap, var)

    @classmethod
    def one(cls, cap: int, var: str = "x") -> "TruncatedSeries":
        return cls((1,), cap, var)

    @classmethod
    def monomial(cls, c, d: int, cap: int, var: str = "x") -> "TruncatedSeries":
        cs = [Fraction(0)] * (cap + 1)
        if d <= cap:
            cs[d] = Fraction(c) if isinstance(c, int) else c
        return cls._raw(cs, cap, var)

    @classmethod
    def from_function(cls, f: Callable[[int], object], cap: int, var: str = "x") -> "TruncatedSeries":
        return cls((f(d) for d in range(cap + 1)), cap, var)

    # -- accessors ---------------------------------------------------------

    @property
    def cap(self) -> int:
        return self._cap

    @property
    def var(self) -> str:
        return self._var

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __len__(self):
        return self._cap + 1

    def __iter__(self):
        return iter(self._coeffs)

    def __getitem__(self, d: int):
        return self.coeff(d)

    def coeff(self, d: int):
        if d < 0:
            raise TruncationError(f"negative degree {d}")
        if d > self._cap:
            raise TruncationError(f"{self._var}^{d} is beyond the truncation order {self._cap}")
        return self._coeffs[d]

    def valuation(self) -> int | None:
        """Index of the first coefficient that is not an exact zero."""
        for d, c in enumerate(self._coeffs):
            if not _is_exact_zero(c):
                return d
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def is_exact_zero(self) -> bool:
        return self.is_zero()

    def truncate(self, cap: int) -> "TruncatedSeries":
        if cap > self._cap:
            raise TruncationError(f"cannot extend a series truncated at {self._cap} to {cap}")
        return TruncatedSeries._raw(self._coeffs[: cap + 1], cap, self._var)

    def map(self, f: Callable) -> "TruncatedSeries":
        return TruncatedSeries._raw([f(c) for c in self._coeffs], self._cap, self._var)

    # -- ring operations ---------------------------------------------------

    def _check_var(self, other: "TruncatedSeries"):
        if other._var != self._var:
            raise VariableMismatchError(f"cannot combine series in {self._var!r} and {other._var!r}")

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_var(other)
            cap = min(self._cap, other._cap)
            return TruncatedSeries._raw(
                [self._coeffs[d] + other._coeffs[d] for d in range(cap + 1)], cap, self._var
            )
        if _scalar(other) or isinstance(other, HbarLaurent):
            cs = list(self._coeffs)
            cs[0] = cs[0] + other
            return TruncatedSeries._raw(cs, self._cap, self._var)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw([-c for c in self._coeffs], self._cap, self._var)

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries) or _scalar(other) or isinstance(other, HbarLaurent):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncatedSeries":
        """Multiply every coefficient by the ring element ``c``."""
        return TruncatedSeries._raw([x * c for x in self._coeffs], self._cap, self._var)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_var(other)
            return _cauchy(self, other)
        if _scalar(other) or isinstance(other, HbarLaurent):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if _scalar(other) or isinstance(other, HbarLaurent):
            return TruncatedSeries._raw([other * x for x in self._coeffs], self._cap, self._var)
        return NotImplemented

    def __truediv__(self, other):
        if _scalar(other):
            inv = 1 / Fraction(other)
            return self.scale(inv)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise SeriesDomainError("negative powers are not supported")
        result = TruncatedSeries.one(self._cap, self._var)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``var^k`` (k >= 0), dropping what falls past the cap."""
        cs = [Fraction(0)] * k + list(self._coeffs)
        return TruncatedSeries._raw(cs[: self._cap + 1], self._cap, self._var)

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative; the result is known one degree less far."""
        cs = [self._coeffs[d] * d for d in range(1, self._cap + 1)]
        return TruncatedSeries(cs, max(self._cap - 1, 0), self._var)

    def substitute_neg(self) -> "TruncatedSeries":
        """var -> -var."""
        return TruncatedSeries._raw(
            [c if d % 2 == 0 else -c for d, c in enumerate(self._coeffs)], self._cap, self._var
        )

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires an invertible rational constant term."""
        a0 = self._coeffs[0]
        if not _scalar(a0) or a0 == 0:
            raise SeriesDomainError("reciprocal needs a nonzero rational constant term")
        inv0 = 1 / Fraction(a0)
        out = [inv0]
        for n in range(1, self._cap + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc += self._coeffs[k] * out[n - k]
            out.append(-inv0 * acc)
        return TruncatedSeries._raw(out, self._cap, self._var)

    # -- comparison and display -------------------------------------------

    def __eq__(self, other):
        """Equal when coefficients agree through the smaller cap.  Scalars
        compare as constant series."""
        if _scalar(other):
            other = TruncatedSeries((other,), self._cap, self._var)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other._var != self._var:
            return False
        cap = min(self._cap, other._cap)
        return all(self._coeffs[d] == other._coeffs[d] for d in range(cap + 1))

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({list(self._coeffs)!r}, cap={self._cap}, var={self._var!r})"

    def __str__(self):
        parts = []
        for d, c in enumerate(self._coeffs):
            if c == 0:
                continue
            cs = format_rational(c) if _scalar(c) else f"({c})"
            parts.append(cs if d == 0 else f"{cs}*{self._var}^{d}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self._var}^{self._cap + 1})"


def _cauchy(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    cap = min(a._cap, b._cap)
    ai = [(i, c) for i, c in enumerate(a._coeffs[: cap + 1]) if not _is_exact_zero(c)]
    bj = [(j, c) for j, c in enumerate(b._coeffs[: cap + 1]) if not _is_exact_zero(c)]
    out: list = [None] * (cap + 1)
    for i, x in ai:
        for j, y in bj:
            d = i + j
            if d > cap:
                break
            p = x * y
            out[d] = p if out[d] is None else out[d] + p
    zero = Fraction(0)
    return TruncatedSeries._raw([zero if c is None else c for c in out], cap, a._var)


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------


def coeff(s: TruncatedSeries, d: int):
    """Coefficient extraction ``[var^d] s``; past the cap this is an error."""
    return s.coeff(d)


def exp_series(s: TruncatedSeries) -> TruncatedSeries:
    """``sum_j s^j / j!`` truncated to the cap of ``s``."""
    if not _is_exact_zero(s.coeffs[0]) and s.coeffs[0] != 0:
        raise SeriesDomainError("exp_series needs a zero constant term")
    result = TruncatedSeries.one(s.cap, s.var)
    term = result
    for j in range(1, s.cap + 1):
        term = (term * s) / j
        if term.valuation() is None:
            break
        result = result + term
    return result


def log_series(s: TruncatedSeries) -> TruncatedSeries:
    """``sum_j (-1)^(j+1) (s-1)^j / j`` truncated to the cap of ``s``."""
    if s.coeffs[0] != 1:
        raise SeriesDomainError("log_series needs constant term 1")
    u = s - 1
    result = TruncatedSeries.zero(s.cap, s.var)
    power = TruncatedSeries.one(s.cap, s.var)
    for j in range(1, s.cap + 1):
        power = power * u
        if power.valuation() is None:
            break
        term = power / j
        result = result + term if j % 2 else result - term
    return result


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Substitute ``inner`` for the variable of ``outer``.

    ``outer`` may have coefficients that embed into the coefficient ring of
    ``inner`` (rationals always do).  The result lives in ``inner``'s
    variable and is truncated to ``inner``'s cap, or less when ``outer`` is
    too short to determine it.
    """
    if inner.coeffs[0] != 0:
        raise SeriesDomainError("compose needs an inner series with zero constant term")
    v = inner.valuation()
    cap = inner.cap
    if v is not None:
        cap = min(cap, (outer.cap + 1) * v - 1)
    inner = inner.truncate(cap)
    result = TruncatedSeries((outer.coeffs[outer.cap],), cap, inner.var)
    for k in range(outer.cap - 1, -1, -1):
        result = result * inner + outer.coeffs[k]
    return result


def polynomial(coeffs: Sequence, cap: int, var: str = "x") -> TruncatedSeries:
    return TruncatedSeries(coeffs, cap, var)
