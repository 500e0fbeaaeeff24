"""Exact arithmetic for alternating-permutation counting.

Two conventions fix everything downstream:

* Every scalar is a :class:`fractions.Fraction`; nothing in this package
  touches a float except the convenience error field of the asymptotic
  sanity report.

* Umbral evaluation is a single explicit step.  A formula is manipulated as
  an ordinary polynomial in a commuting symbol ``E`` (see
  :class:`EulerPoly`), and only once fully expanded does
  :func:`umbral_eval` replace each power ``E**k`` by the Euler number
  ``E_k``.  For example ``(E**2 - 1)**2`` expands to ``E**4 - 2*E**2 + 1``
  and then evaluates to ``E_4 - 2*E_2 + 1 = 5 - 2 + 1 = 4``; evaluating the
  factors first would give ``0``.  No operation anywhere in the package
  applies the replacement implicitly.

The Euler numbers themselves count down-up (alternating) permutations and
are generated by ``sec t + tan t``.  They are produced here by the
boustrophedon triangle

    b(n, 0) = 0 for n >= 1,   b(0, 0) = 1,
    b(n, k) = b(n, k-1) + b(n-1, n-k),   E_n = b(n, n),

which needs only integer additions, and cross-checked against an
independent power-series division ``(1 + sin)/cos`` whenever the cached
range grows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

Rational = Fraction
Scalar = int | Fraction


class EulerPoly:
    """Dense polynomial in the umbral symbol ``E`` over ``Fraction``.

    ``coeffs[k]`` is the coefficient of ``E**k``.  The tuple never carries
    trailing zeros, so the zero polynomial has ``coeffs == ()`` and
    ``degree == -1``.  Instances are immutable and hashable; degree-0
    polynomials compare equal to the matching ``int``/``Fraction``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(c: Scalar) -> "EulerPoly":
        return EulerPoly((c,))

    @staticmethod
    def symbol() -> "EulerPoly":
        """The polynomial ``E`` itself."""
        return EulerPoly((0, 1))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def as_fraction(self) -> Fraction:
        """The value of a constant polynomial (degree <= 0)."""
        if len(self.coeffs) > 1:
            raise ValueError(f"not a constant: {self}")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> "EulerPoly | None":
        if isinstance(other, EulerPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return EulerPoly((other,))
        return None

    def __add__(self, other: object) -> "EulerPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return EulerPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "EulerPoly":
        return EulerPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "EulerPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "EulerPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "EulerPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return EulerPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return EulerPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "EulerPoly":
        """Division by a nonzero scalar (or constant polynomial)."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = o.as_fraction()
        if c == 0:
            raise ZeroDivisionError("division of EulerPoly by zero")
        return EulerPoly(tuple(x / c for x in self.coeffs))

    def __pow__(self, n: int) -> "EulerPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("EulerPoly exponent must be a nonnegative int")
        result = EulerPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: object) -> tuple["EulerPoly", "EulerPoly"]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division of EulerPoly by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, o.degree
        lead = o.coeffs[-1]
        quot = [Fraction(0)] * max(dn - dd + 1, 0)
        while len(rem) - 1 >= dd and rem:
            k = len(rem) - 1 - dd
            q = rem[-1] / lead
            quot[k] = q
            for j, c in enumerate(o.coeffs):
                rem[k + j] -= q * c
            while rem and rem[-1] == 0:
                rem.pop()
        return EulerPoly(quot), EulerPoly(rem)

    def exact_div(self, other: object) -> "EulerPoly":
        """Polynomial division that must leave no remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{self} is not divisible by {other}")
        return q

    def is_divisible_by(self, other: object) -> bool:
        return divmod(self, other)[1].is_zero()

    # -- structure -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(("EulerPoly", self.coeffs))

    def terms(self) -> Iterator[tuple[int, Fraction]]:
        """Yield (power, coefficient) for the nonzero terms, low to high."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield k, c

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "E" if k == 1 else f"E^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"EulerPoly({self})"


#: The umbral symbol, for building formulas: ``(E**2 - 1)**2`` etc.
E = EulerPoly.symbol()


# -- Euler numbers ------------------------------------------------------

_euler: list[int] = [1]
_euler_last_row: list[int] = [1]
_euler_checked = 0


def euler_numbers(n_max: int) -> list[int]:
    """``[E_0, ..., E_n]`` — numbers of down-up alternating permutations.

    >>> euler_numbers(9)
    [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]

    Computed by the boustrophedon triangle; every time the cached range
    grows the full prefix is re-derived from the ``(1 + sin)/cos`` series
    quotient and compared, so the two independent routes must agree before
    a value is ever returned.
    """
    if not isinstance(n_max, int) or n_max < 0:
        raise ValueError("n_max must be a nonnegative integer")
    global _euler_last_row, _euler_checked
    while len(_euler) <= n_max:
        n = len(_euler)
        prev = _euler_last_row
        row = [0]
        for k in range(1, n + 1):
            row.append(row[k - 1] + prev[n - k])
        _euler.append(row[n])
        _euler_last_row = row
    if n_max > _euler_checked:
        from . import useries  # deferred: useries imports this module

        alt = useries.sec_plus_tan_integer_coefficients(n_max)
        if alt != _euler[: n_max + 1]:
            raise AssertionError(
                "boustrophedon and series routes disagree on Euler numbers"
            )
        _euler_checked = n_max
    return list(_euler[: n_max + 1])


def euler_number(n: int) -> int:
    return euler_numbers(n)[n]


def umbral_eval(p: EulerPoly | Scalar) -> Fraction:
    """Evaluate a fully expanded polynomial: ``E**k`` |-> Euler number ``E_k``.

    This is the one and only umbral step.  It is linear — it is *not* a ring
    homomorphism, which is exactly why it must come last:

    >>> umbral_eval((E**2 - 1) ** 2)
    Fraction(4, 1)
    >>> umbral_eval(E**2 - 1) ** 2
    Fraction(0, 1)
    """
    if isinstance(p, (int, Fraction)):
        return Fraction(p)
    if not isinstance(p, EulerPoly):
        raise TypeError(f"cannot umbral-evaluate {type(p).__name__}")
    if p.is_zero():
        return Fraction(0)
    values = euler_numbers(p.degree)
    return sum((c * values[k] for k, c in p.terms()), Fraction(0))


def umbral_eval_int(p: EulerPoly | Scalar) -> int:
    """:func:`umbral_eval`, asserting the result is an integer."""
    v = umbral_eval(p)
    if v.denominator != 1:
        raise ValueError(f"expected an integer umbral value, got {v}")
    return int(v)


def derangement_numbers(n_max: int) -> list[int]:
    """``[D_0, ..., D_n]`` — permutations with no fixed point.

    >>> derangement_numbers(6)
    [1, 0, 1, 2, 9, 44, 265]
    """
    if not isinstance(n_max, int) or n_max < 0:
        raise ValueError("n_max must be a nonnegative integer")
    out = [1]
    for n in range(1, n_max + 1):
        out.append(n * out[-1] + (-1) ** n)
    return out
