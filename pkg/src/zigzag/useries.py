"""Truncated formal power series over the umbral coefficient ring.

Two series types, sharing one set of exact algorithms:

* :class:`ESeries` — series in ``t`` whose coefficients are
  :class:`~zigzag.exact.EulerPoly`.  This is where every univariate
  generating function in the package lives, e.g. ``exp(E * arctan t)`` or
  ``((1+t)/(1-t))**((E**2+1)/4)``.

* :class:`QESeries` — series in ``t`` whose coefficients are polynomials
  in a marker variable ``q`` over EulerPoly (:class:`QPoly`).  ``q`` marks
  fixed points, so the ``t**n`` coefficient never needs ``q``-degree
  above ``n``; the constructor checks that.

Coefficients stay pre-umbral throughout.  :func:`umbral_coefficients` is
the single point where ``E**k`` collapses to the Euler number ``E_k``;
no arithmetic here applies it implicitly.

Division requires the divisor's constant term to be a nonzero plain
rational (never a genuine polynomial in E) — every formula the package
needs satisfies this, e.g. ``1 - E*t`` has constant term 1 — so the
coefficient ring never needs a fraction field.  ``exp``/``sinh``/
``cosh``/``arctan`` require a zero constant term; ``log``/``sqrt`` and
:func:`series_pow` require constant term exactly 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .exact import EulerPoly, Scalar

DEFAULT_ORDER = 32


class SeriesError(ValueError):
    """Series inversion/composition precondition violated."""


class QPoly:
    """Dense polynomial in the marker ``q`` with EulerPoly coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[EulerPoly | Scalar] = ()) -> None:
        cs = [c if isinstance(c, EulerPoly) else EulerPoly((c,)) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[EulerPoly, ...] = tuple(cs)

    @staticmethod
    def const(c: EulerPoly | Scalar) -> "QPoly":
        return QPoly((c,))

    @staticmethod
    def q_power(k: int, c: EulerPoly | Scalar = 1) -> "QPoly":
        """``c * q**k``."""
        return QPoly((0,) * k + (c if isinstance(c, EulerPoly) else EulerPoly((c,)),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> EulerPoly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return EulerPoly()

    @staticmethod
    def _coerce(other: object) -> "QPoly | None":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (EulerPoly, int, Fraction)):
            return QPoly((other,))
        return None

    def __add__(self, other: object) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "QPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return QPoly()
        out = [EulerPoly() for _ in range(len(a) + len(b) - 1)]
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            head = f"({c})"
            parts.append(head if k == 0 else f"{head}*q^{k}" if k > 1 else f"{head}*q")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({self})"


class _TruncatedSeries:
    """Shared exact-series kernel; subclasses fix the coefficient ring."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[object]) -> None:
        cs = [self._coerce_coeff(c) for c in coeffs]
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        if any(c is None for c in cs):
            raise TypeError("coefficient of wrong type for this series")
        self.coeffs = tuple(cs)
        self._check()

    def _check(self) -> None:  # subclass hook
        pass

    # -- ring hooks ------------------------------------------------------

    @classmethod
    def _coerce_coeff(cls, x: object):
        raise NotImplementedError

    @classmethod
    def _zero_coeff(cls):
        raise NotImplementedError

    @classmethod
    def _rational_const(cls, c) -> Fraction | None:
        """The coefficient as a plain rational, or None if it involves E/q."""
        raise NotImplementedError

    # -- basics -----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        raise IndexError(f"coefficient t^{i} beyond truncation order {self.order}")

    @classmethod
    def from_terms(
        cls, terms: Mapping[int, object], order: int = DEFAULT_ORDER
    ) -> "_TruncatedSeries":
        out = [cls._zero_coeff() for _ in range(order + 1)]
        for k, v in terms.items():
            if not 0 <= k <= order:
                raise ValueError(f"term t^{k} outside order {order}")
            out[k] = cls._coerce_coeff(v)
        return cls(out)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "_TruncatedSeries":
        return cls.from_terms({}, order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "_TruncatedSeries":
        return cls.from_terms({0: 1}, order)

    def truncate(self, order: int) -> "_TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return type(self)(self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"{type(self).__name__}([{shown}{tail}]; O(t^{self.order + 1}))"

    # -- linear ops ---------------------------------------------------------

    def _binary_prep(self, other: object):
        if type(other) is type(self):
            o = other
        else:
            c = self._coerce_coeff(other)
            if c is None:
                return None, None
            o = type(self).from_terms({0: c}, self.order)
        n = min(self.order, o.order)
        return self.coeffs[: n + 1], o.coeffs[: n + 1]

    def __add__(self, other: object):
        a, b = self._binary_prep(other)
        if a is None:
            return NotImplemented
        return type(self)([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-x for x in self.coeffs])

    def __sub__(self, other: object):
        a, b = self._binary_prep(other)
        if a is None:
            return NotImplemented
        return type(self)([x - y for x, y in zip(a, b)])

    def __rsub__(self, other: object):
        return (-self) + other

    def scale(self, c: object):
        """Multiply every coefficient by a ring scalar (no truncation)."""
        cc = self._coerce_coeff(c)
        if cc is None:
            raise TypeError("cannot scale by this type")
        return type(self)([x * cc for x in self.coeffs])

    # -- multiplicative ops ---------------------------------------------------

    def __mul__(self, other: object):
        if not isinstance(other, _TruncatedSeries):
            cc = self._coerce_coeff(other)
            if cc is None:
                return NotImplemented
            return self.scale(cc)
        a, b = self._binary_prep(other)
        if a is None:
            return NotImplemented
        n = len(a) - 1
        out = [self._zero_coeff() for _ in range(n + 1)]
        for i, ai in enumerate(a):
            for j in range(n + 1 - i):
                out[i + j] = out[i + j] + ai * b[j]
        return type(self)(out)

    def __rmul__(self, other: object):
        return self.__mul__(other)

    def __truediv__(self, other: object):
        if not isinstance(other, _TruncatedSeries):
            cc = self._coerce_coeff(other)
            if cc is None:
                return NotImplemented
            rc = self._rational_const(cc)
            if rc is None or rc == 0:
                raise SeriesError("can only divide by a nonzero rational scalar")
            return self.scale(Fraction(1, 1) / rc)
        a, b = self._binary_prep(other)
        if a is None:
            return NotImplemented
        rc = self._rational_const(b[0])
        if rc is None or rc == 0:
            raise SeriesError(
                "series division needs a divisor whose constant term is a "
                "nonzero plain rational"
            )
        inv0 = Fraction(1) / rc
        n = len(a) - 1
        out = []
        for k in range(n + 1):
            acc = a[k]
            for j in range(k):
                acc = acc - out[j] * b[k - j]
            out.append(acc * inv0)
        return type(self)(out)

    # -- transcendental kernels ------------------------------------------------

    def _require_zero_constant(self, what: str) -> None:
        if not self._is_zero_coeff(self.coeffs[0]):
            raise SeriesError(f"{what} needs a zero constant term")

    def _require_unit_constant(self, what: str) -> None:
        if self._rational_const(self.coeffs[0]) != 1:
            raise SeriesError(f"{what} needs constant term exactly 1")

    @classmethod
    def _is_zero_coeff(cls, c) -> bool:
        return c.is_zero()

    def exp(self):
        """exp of a series with zero constant term: k b_k = sum j a_j b_{k-j}."""
        self._require_zero_constant("exp")
        a = self.coeffs
        n = self.order
        out = [self._coerce_coeff(1)]
        for k in range(1, n + 1):
            acc = self._zero_coeff()
            for j in range(1, k + 1):
                acc = acc + (a[j] * j) * out[k - j]
            out.append(acc * Fraction(1, k))
        return type(self)(out)

    def log(self):
        self._require_unit_constant("log")
        a = self.coeffs
        n = self.order
        out = [self._zero_coeff()]
        for k in range(1, n + 1):
            acc = a[k] * k
            for j in range(1, k):
                acc = acc - (out[j] * j) * a[k - j]
            out.append(acc * Fraction(1, k))
        return type(self)(out)

    def sqrt(self):
        self._require_unit_constant("sqrt")
        return self.log().scale(Fraction(1, 2)).exp()

    def sinh(self):
        self._require_zero_constant("sinh")
        e = self.exp()
        return (e - (-self).exp()).scale(Fraction(1, 2))

    def cosh(self):
        self._require_zero_constant("cosh")
        e = self.exp()
        return (e + (-self).exp()).scale(Fraction(1, 2))

    def arctan(self):
        """arctan(a) via integrating a' / (1 + a^2)."""
        self._require_zero_constant("arctan")
        n = self.order
        if n == 0:
            return type(self)([self._zero_coeff()])
        deriv = type(self)([self.coeffs[k] * k for k in range(1, n + 1)])
        denom = (self * self).truncate(n - 1) + 1
        integrand = deriv / denom
        out = [self._zero_coeff()]
        for k in range(1, n + 1):
            out.append(integrand.coeffs[k - 1] * Fraction(1, k))
        return type(self)(out)

    def pow(self, exponent: object):
        """``a**exponent = exp(exponent * log a)``; constant term must be 1.

        The exponent may be any coefficient-ring scalar, e.g. an EulerPoly
        like ``(E**2 + 1)/4``.
        """
        self._require_unit_constant("pow")
        return self.log().scale(exponent).exp()

    def parity_part(self, which: str, variable: str = "t"):
        if variable != "t":
            raise ValueError("parity is tracked in the series variable t only")
        if which not in ("odd", "even"):
            raise ValueError("which must be 'odd' or 'even'")
        keep = 1 if which == "odd" else 0
        return type(self)(
            [c if k % 2 == keep else self._zero_coeff() for k, c in enumerate(self.coeffs)]
        )


class ESeries(_TruncatedSeries):
    """Truncated series in ``t`` over EulerPoly."""

    __slots__ = ()

    @classmethod
    def _coerce_coeff(cls, x: object) -> EulerPoly | None:
        if isinstance(x, EulerPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return EulerPoly((x,))
        return None

    @classmethod
    def _zero_coeff(cls) -> EulerPoly:
        return EulerPoly()

    @classmethod
    def _rational_const(cls, c: EulerPoly) -> Fraction | None:
        if c.degree <= 0:
            return c.as_fraction()
        return None


class QESeries(_TruncatedSeries):
    """Truncated series in ``t`` over q-polynomials over EulerPoly.

    The ``t**i`` coefficient never has q-degree above ``i`` (the marker
    counts fixed points, and a permutation of ``i`` letters has at most
    ``i`` of them); the constructor enforces this.
    """

    __slots__ = ()

    @classmethod
    def _coerce_coeff(cls, x: object) -> QPoly | None:
        if isinstance(x, QPoly):
            return x
        if isinstance(x, (EulerPoly, int, Fraction)):
            return QPoly((x,))
        return None

    @classmethod
    def _zero_coeff(cls) -> QPoly:
        return QPoly()

    @classmethod
    def _rational_const(cls, c: QPoly) -> Fraction | None:
        if c.degree <= 0:
            e = c.coefficient(0)
            if e.degree <= 0:
                return e.as_fraction()
        return None

    def _check(self) -> None:
        for i, c in enumerate(self.coeffs):
            if c.degree > i:
                raise ValueError(
                    f"t^{i} coefficient has q-degree {c.degree} > {i}"
                )


# -- functional wrappers -----------------------------------------------------


def series_arith(a: _TruncatedSeries, b: _TruncatedSeries, op: str) -> _TruncatedSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown series op {op!r}")


def series_fn(a: _TruncatedSeries, fn: str) -> _TruncatedSeries:
    try:
        method = {
            "exp": a.exp,
            "log": a.log,
            "sqrt": a.sqrt,
            "sinh": a.sinh,
            "cosh": a.cosh,
            "arctan": a.arctan,
        }[fn]
    except KeyError:
        raise ValueError(f"unknown series function {fn!r}") from None
    return method()


def series_pow(a: _TruncatedSeries, exponent: object) -> _TruncatedSeries:
    return a.pow(exponent)


def parity_part(a: _TruncatedSeries, which: str, variable: str = "t") -> _TruncatedSeries:
    return a.parity_part(which, variable)


def substitute_qt(a: ESeries) -> QESeries:
    """t -> q*t: the t^i coefficient picks up a factor q^i."""
    if not isinstance(a, ESeries):
        raise TypeError("substitute_qt expects an ESeries")
    return QESeries([QPoly.q_power(i, c) for i, c in enumerate(a.coeffs)])


def lift_to_q(a: ESeries) -> QESeries:
    """Reinterpret an ESeries as a QESeries with q-free coefficients."""
    return QESeries([QPoly.const(c) for c in a.coeffs])


def umbral_coefficients(a: _TruncatedSeries):
    """Apply the umbral step E^k -> E_k to every coefficient.

    For an :class:`ESeries` returns ``list[Fraction]``; for a
    :class:`QESeries` returns a list of dense q-coefficient tuples
    (``tuple[Fraction, ...]``, index = q-power).  This is the only place a
    series pipeline becomes numeric.
    """
    from .exact import umbral_eval

    if isinstance(a, ESeries):
        return [umbral_eval(c) for c in a.coeffs]
    if isinstance(a, QESeries):
        out = []
        for c in a.coeffs:
            out.append(tuple(umbral_eval(e) for e in c.coeffs))
        return out
    raise TypeError("umbral_coefficients expects an ESeries or QESeries")


def sec_plus_tan_integer_coefficients(n_max: int) -> list[int]:
    """``n! * [t^n] (1 + sin t)/cos t`` for n = 0..n_max.

    Uses only rational arithmetic (no Euler-number lookups), so it serves
    as an independent cross-check for the boustrophedon recurrence.
    """
    sin_t = ESeries.from_terms(
        {k: Fraction((-1) ** ((k - 1) // 2), factorial(k)) for k in range(1, n_max + 1, 2)},
        n_max,
    )
    cos_t = ESeries.from_terms(
        {k: Fraction((-1) ** (k // 2), factorial(k)) for k in range(0, n_max + 1, 2)},
        n_max,
    )
    quot = (sin_t + 1) / cos_t
    out = []
    for n in range(n_max + 1):
        v = quot.coefficient(n).as_fraction() * factorial(n)
        if v.denominator != 1:
            raise AssertionError("sec+tan coefficients must be integers")
        out.append(int(v))
    return out
