"""Closed forms and generating functions for refined alternating counts.

Each public operation computes one family of counts -- by shape, cycle
type, fixed points, inverse-descent class, or multiset content -- and,
wherever the mathematics offers more than one route to the same number,
computes *all* of them.  Count-valued operations return a
:class:`CountReport` whose constructor refuses to exist unless every
route agreed, so route agreement is part of the value, not an optional
check.

Everything is exact.  Coefficients are `fractions.Fraction`, symbolic
polynomials are :class:`~zigzag.exact.EulerPoly`, and the umbral
collapse ``E**k -> E_k`` happens exactly once, as the last step of each
pipeline.  The polynomial that existed just before that collapse is
kept on the report (``pre_umbral``) for factor exploration and
debugging.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Mapping, Sequence

from sympy import divisors, mobius

from .exact import E, EulerPoly, derangement_numbers, euler_number, umbral_eval
from .perms import (
    DOUBLY_VARIANTS,
    Composition,
    Partition,
    SkewShape,
    as_composition,
    as_partition,
    hook_product,
    multiset_shape,
    partitions_of,
    tau_shape,
)
from .symfunc import (
    EVEN_ALT,
    EVEN_RALT,
    ODD,
    ODD_UNSIGNED,
    Pattern,
    SymP,
    e_p,
    gr_L,
    h_p,
    inner_product,
    pattern_for,
    skew_schur_in_p,
    substitute,
    z_of,
)
from .useries import ESeries, QESeries, QPoly, lift_to_q, substitute_qt, umbral_coefficients

__all__ = [
    "CountReport",
    "ConjectureRecord",
    "doubly_alternating",
    "alt_shape",
    "staircase",
    "square",
    "b_cycle_type",
    "b_ncycle_closed",
    "fm_series",
    "cycle_indicator_truncated",
    "involutions_series",
    "fixed_point_series",
    "conjecture_check",
    "asymptotic_coeffs",
    "asymptotic_sanity",
    "multiset_count",
    "eh_specialization_table",
    "umbral_poly_shape",
    "divisibility_probe",
]


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CountReport:
    """A count together with every route that was used to compute it.

    Invariants (enforced at construction):

    * ``value`` is a nonnegative integer (held as a `Fraction`);
    * every entry of ``crosschecks`` equals ``value``.

    ``pre_umbral`` is the polynomial in the Euler symbol whose umbral
    evaluation produced ``value`` via the primary route, when the
    primary route went through one.
    """

    n: int
    value: Fraction
    route: str
    crosschecks: tuple[tuple[str, Fraction], ...] = ()
    pre_umbral: EulerPoly | None = None

    def __post_init__(self) -> None:
        if self.value.denominator != 1 or self.value < 0:
            raise ValueError(f"count must be a nonnegative integer, got {self.value!s}")
        for route, val in self.crosschecks:
            if val != self.value:
                raise ValueError(
                    f"route disagreement at n={self.n}: "
                    f"{self.route} gives {self.value!s} but {route} gives {val!s}"
                )

    def __int__(self) -> int:
        return int(self.value)


def _report(
    n: int,
    routes: Sequence[tuple[str, Fraction | int]],
    pre_umbral: EulerPoly | None = None,
) -> CountReport:
    (name, val), *rest = routes
    return CountReport(
        n=n,
        value=Fraction(val),
        route=name,
        crosschecks=tuple((r, Fraction(v)) for r, v in rest),
        pre_umbral=pre_umbral,
    )


# ---------------------------------------------------------------------------
# shared series building blocks


def _series_from(terms: Mapping[int, object], order: int) -> ESeries:
    """Like ESeries.from_terms but silently truncates beyond ``order``."""
    return ESeries.from_terms({k: v for k, v in terms.items() if k <= order}, order)


@lru_cache(maxsize=None)
def _arctan_t(order: int) -> ESeries:
    return ESeries.from_terms(
        {k: Fraction((-1) ** ((k - 1) // 2), k) for k in range(1, order + 1, 2)}, order
    )


@lru_cache(maxsize=None)
def _exp_e_arctan(order: int) -> ESeries:
    """exp(E * arctan t): the one-cycle factor and the odd e/h series."""
    return _arctan_t(order).scale(E).exp()


@lru_cache(maxsize=None)
def _sqrt_one_plus_t2(order: int) -> ESeries:
    return _series_from({0: 1, 2: 1}, order).sqrt()


@lru_cache(maxsize=None)
def _ratio_log(order: int) -> ESeries:
    """log((1+t)/(1-t)) = 2*arctanh t."""
    num = _series_from({0: 1, 1: 1}, order)
    den = _series_from({0: 1, 1: -1}, order)
    return (num / den).log()


def _ratio_pow(exponent: EulerPoly | Fraction | int, order: int) -> ESeries:
    """((1+t)/(1-t)) ** exponent, exponent from the coefficient ring."""
    return _ratio_log(order).scale(exponent).exp()


@lru_cache(maxsize=None)
def _inverse_e() -> Fraction:
    # Partial sum of sum (-1)^j / j!; the tail beyond j=40 is far below
    # anything a regression threshold could see.
    return sum((Fraction((-1) ** j, factorial(j)) for j in range(41)), Fraction(0))


def _mu(d: int) -> int:
    return int(mobius(d))


def _odd_part(m: int) -> int:
    while m % 2 == 0:
        m //= 2
    return m


# ---------------------------------------------------------------------------
# shapes


@lru_cache(maxsize=None)
def _tau_schur(n: int, primed: bool) -> SymP:
    return skew_schur_in_p(tau_shape(n, primed))


def alt_shape(shape: SkewShape, reverse: bool = False) -> CountReport:
    """Number of standard tableaux of ``shape`` whose descent set is the
    (reverse-)alternating one.

    The count is the power-sum expansion of the skew Schur function,
    specialized at the alternating substitution pattern for the parity
    of ``|shape|``, umbral-evaluated last.
    """
    n = shape.size
    if n < 1:
        raise ValueError("shape must have at least one cell")
    poly = substitute(skew_schur_in_p(shape), pattern_for(n, reverse))
    return _report(n, [("schur-pattern-umbral", umbral_eval(poly))], pre_umbral=poly)


def staircase(m: int) -> CountReport:
    """Alternating tableaux of the staircase shape (m-1, m-2, ..., 1).

    The closed form is a fully factored polynomial in the Euler symbol
    divided by the hook product of the staircase; the tableau-pattern
    route cross-checks it whenever the shape is small enough to expand.
    """
    if m < 2:
        raise ValueError("staircase needs m >= 2")
    delta = tuple(range(m - 1, 0, -1))
    n = m * (m - 1) // 2
    k = m // 2
    poly = E**k
    for j in range(1, m - 1):
        expo = (k - (j + 1) // 2) if m % 2 == 0 else (k - j // 2)
        poly = poly * (E * E + j * j) ** expo
    hooks = hook_product(delta)
    pre = poly / hooks
    routes: list[tuple[str, Fraction | int]] = [("factored-product", umbral_eval(pre))]
    if n <= 15:
        routes.append(("schur-pattern-umbral", alt_shape(SkewShape(delta, ())).value))
    return _report(n, routes, pre_umbral=pre)


def _unsigned_to_signed(poly: EulerPoly, n: int) -> EulerPoly:
    """Convert between the all-plus substitution [E,0,E,0,...] and the
    alternating one [E,0,-E,0,...] for a polynomial supported on odd
    power sums: the monomial E^l flips by (-1)^((n-l)/2).
    """
    coeffs = []
    for ell in range(poly.degree + 1):
        c = poly.coefficient(ell)
        if c and (n - ell) % 2:
            raise ValueError("polynomial has a term of the wrong parity")
        coeffs.append(-c if c and ((n - ell) // 2) % 2 else c)
    return EulerPoly(coeffs)


def square(p: int) -> CountReport:
    """Alternating tableaux of the p x p square, odd p only.

    Two routes: the factored product over the square's hook product,
    and a Hankel-style determinant in the coefficients of
    ``((1+t)/(1-t))**(E/2)``, sign-normalized to the alternating
    pattern.  For ``p <= 3`` the generic tableau-pattern route joins in.
    """
    if p < 1 or p % 2 == 0:
        raise ValueError("square counts require odd p")
    n = p * p
    poly = E**p
    for j in range(1, p):
        poly = poly * (E * E + (2 * j) ** 2) ** (p - j)
    pre = poly / hook_product((p,) * p)
    routes: list[tuple[str, Fraction | int]] = [("factored-product", umbral_eval(pre))]

    order = 2 * p - 1
    s = _ratio_pow(E / 2, order)
    a = [s.coefficient(i) for i in range(order + 1)]
    det = EulerPoly.const(0)
    for sigma in permutations(range(p)):
        inversions = sum(
            1 for x in range(p) for y in range(x + 1, p) if sigma[x] > sigma[y]
        )
        term = EulerPoly.const((-1) ** inversions)
        for i in range(p):
            term = term * a[p - (i + 1) + (sigma[i] + 1)]
        det = det + term
    routes.append(("hankel-determinant", umbral_eval(_unsigned_to_signed(det, n))))

    if p <= 3:
        routes.append(
            ("schur-pattern-umbral", alt_shape(SkewShape((p,) * p, ())).value)
        )
    return _report(n, routes, pre_umbral=pre)


def umbral_poly_shape(shape: SkewShape, pat: Pattern) -> EulerPoly:
    """Pre-umbral polynomial of a shape under an explicit pattern."""
    return substitute(skew_schur_in_p(shape), pat)


def divisibility_probe(poly: EulerPoly, j_max: int = 8) -> dict[str, int]:
    """Multiplicity of each candidate factor E, E^2+1, E^2+4, ... in ``poly``.

    Only exact divisions are reported; the probe is a helper for
    exploring how far the staircase/square factorizations extend.
    """
    out: dict[str, int] = {}
    candidates: list[tuple[str, EulerPoly]] = [("E", E)]
    candidates += [(f"E^2+{j*j}", E * E + j * j) for j in range(1, j_max + 1)]
    for name, factor in candidates:
        count = 0
        rest = poly
        while not rest.is_zero() and rest.is_divisible_by(factor):
            rest = rest.exact_div(factor)
            count += 1
        if count:
            out[name] = count
    return out


# ---------------------------------------------------------------------------
# doubly alternating permutations (w and w^{-1} both constrained)


def _doubly_series(order: int, even: bool) -> ESeries:
    """The plain-rational generating function whose t^n coefficient is
    the doubly-alternating count: built from powers of arctanh t with
    squared Euler numbers as weights."""
    arctanh = _ratio_log(order).scale(Fraction(1, 2))
    total = ESeries.zero(order)
    power = ESeries.one(order) if even else arctanh
    start = 0 if even else 1
    for m in range(start, order + 1, 2):
        weight = Fraction(euler_number(m) ** 2, factorial(m))
        total = total + power.scale(weight)
        power = power * arctanh * arctanh
    if even:
        total = total / _series_from({0: 1, 2: -1}, order).sqrt()
    return total


def _doubly_partition_sum(n: int, mixed: bool) -> Fraction:
    if n % 2:
        return sum(
            (
                Fraction(euler_number(len(mu)) ** 2, z_of(mu))
                for mu in partitions_of(n)
                if all(part % 2 for part in mu)
            ),
            Fraction(0),
        )
    total = Fraction(0)
    for mu in partitions_of(n):
        odd = sum(1 for part in mu if part % 2)
        even = len(mu) - odd
        sign = -1 if (mixed and even % 2) else 1
        total += Fraction(sign * euler_number(odd) ** 2, z_of(mu))
    return total


def doubly_alternating(n: int, variant: str) -> CountReport:
    """Permutations w such that w and w^{-1} are each alternating or
    reverse alternating, per ``variant`` (e.g. ``"alt_ralt"``).

    Three routes: the Hall pairing of the two ribbon Schur functions,
    an explicit partition sum with squared Euler numbers, and
    coefficient extraction from the arctanh-power generating function.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if variant not in DOUBLY_VARIANTS:
        raise ValueError(f"variant must be one of {DOUBLY_VARIANTS}")
    first, second = variant.split("_")
    pairing = inner_product(_tau_schur(n, first == "ralt"), _tau_schur(n, second == "ralt"))

    mixed = first != second
    psum = _doubly_partition_sum(n, mixed)

    if n % 2:
        series_val = _doubly_series(n, even=False).coefficient(n).as_fraction()
    else:
        ser = _doubly_series(n, even=True)
        series_val = ser.coefficient(n).as_fraction()
        if mixed:
            series_val -= ser.coefficient(n - 2).as_fraction()
    return _report(
        n, [("ribbon-pairing", pairing), ("partition-sum", psum), ("series", series_val)]
    )


# ---------------------------------------------------------------------------
# cycle type


def b_cycle_type(rho: Sequence[int], reverse: bool = False) -> CountReport:
    """Alternating (or reverse alternating) permutations with cycle type
    ``rho``: the necklace symmetric function for ``rho`` under the
    alternating substitution pattern.
    """
    rho = as_partition(rho)
    if not rho:
        raise ValueError("cycle type must be nonempty")
    n = sum(rho)
    f = gr_L(rho)
    poly = substitute(f, pattern_for(n, reverse))
    routes: list[tuple[str, Fraction | int]] = [("necklace-pattern-umbral", umbral_eval(poly))]
    if n <= 14:
        routes.append(("ribbon-pairing", inner_product(f, _tau_schur(n, reverse))))
    return _report(n, routes, pre_umbral=poly)


def b_ncycle_closed(n: int, reverse: bool = False) -> CountReport:
    """Alternating n-cycles by the divisor-sum closed form.

    The case split: n = 2 is special (1 alternating, 0 reverse
    alternating); odd n uses a signed Moebius sum over all divisors;
    even n sums over divisors of the odd part only, degenerating to
    ``(E_n - 1)/n`` when n is a power of two.  For n != 2 the two
    reading directions agree.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 2:
        value = Fraction(0 if reverse else 1)
    elif n % 2:
        value = Fraction(
            sum(_mu(d) * (-1) ** ((d - 1) // 2) * euler_number(n // d) for d in divisors(n)),
            n,
        )
    else:
        h = _odd_part(n)
        if h == 1:
            value = Fraction(euler_number(n) - 1, n)
        else:
            value = Fraction(sum(_mu(d) * euler_number(n // d) for d in divisors(h)), n)
    return _report(
        n, [("divisor-sum", value), ("necklace-pattern-umbral", b_cycle_type((n,), reverse).value)]
    )


def _fm_exponent(m: int, block: str = "even") -> EulerPoly:
    """Exponent polynomial for the m-cycle factor, m >= 3.

    For even m the two parity blocks almost share a factor: the
    contributions of even-indexed power sums cancel by Moebius
    inversion whenever m has an odd divisor >= 3, but for m a power of
    two they amount to the constant -1, which is absent from the
    odd-degree block (where even-indexed power sums vanish outright).
    """
    if m % 2:
        total = EulerPoly.const(0)
        for d in divisors(m):
            total = total + _mu(d) * (-1) ** ((d - 1) // 2) * E ** (m // d)
        return total / m
    h = _odd_part(m)
    if h == 1:
        top = E**m if block == "odd" else E**m - 1
        return top / (2 * m)
    total = EulerPoly.const(0)
    for d in divisors(h):
        total = total + _mu(d) * E ** (m // d)
    return total / (2 * m)


def _cycle_factor(m: int, form: str, order: int) -> ESeries:
    """One factor of the cycle-structure generating product.

    ``form`` selects which parity block the factor belongs to:
    ``"odd"`` for odd total degree and ``"even_alt"``/``"even_ralt"``
    for even total degree.  Only the 1- and 2-cycle factors differ
    between the forms.
    """
    if form not in ("odd", "even_alt", "even_ralt"):
        raise ValueError(f"unknown form {form!r}")
    if m == 1:
        base = _exp_e_arctan(order)
        if form == "even_alt":
            return base / _sqrt_one_plus_t2(order)
        if form == "even_ralt":
            return base * _sqrt_one_plus_t2(order)
        return base
    if m == 2:
        if form == "odd":
            return _ratio_pow(E * E / 4, order)
        base = _ratio_pow((E * E + 1) / 4, order)
        if form == "even_ralt":
            return base / _series_from({0: 1, 1: 1}, order)
        return base
    if m % 2:
        return _arctan_t(order).scale(_fm_exponent(m)).exp()
    return _ratio_pow(_fm_exponent(m, "odd" if form == "odd" else "even"), order)


def fm_series(m: int, N: int, reverse: bool = False) -> list[int]:
    """Counts of (reverse-)alternating permutations whose cycle type is
    r copies of m, for r = 0..N, read off a single univariate series.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if N < 0:
        raise ValueError("N must be nonnegative")
    even_form = "even_ralt" if reverse else "even_alt"
    if m == 1:
        odd = _cycle_factor(1, "odd", N).parity_part("odd")
        even = _cycle_factor(1, even_form, N).parity_part("even")
        values = umbral_coefficients(odd + even)
    elif m == 2:
        values = umbral_coefficients(_cycle_factor(2, even_form, N))
    elif m % 2:
        # Same factor in every parity block, so one series covers all r.
        values = umbral_coefficients(_cycle_factor(m, "odd", N))
    else:
        # All multiples of an even m are even, so only the even-degree
        # block is ever read.
        values = umbral_coefficients(_cycle_factor(m, even_form, N))
    out = []
    for r, v in enumerate(values[: N + 1]):
        if v.denominator != 1 or v < 0:
            raise AssertionError(f"coefficient r={r} of the m={m} series is not a count: {v}")
        out.append(int(v))
    return out


def cycle_indicator_truncated(
    M: int, N: int, reverse: bool = False
) -> dict[Partition, int]:
    """Coefficients of the truncated multivariate cycle-structure product.

    Returns ``{lambda: count}`` for every partition with parts at most
    ``M`` and ``1 <= |lambda| <= N``.  Two parallel products are
    expanded (one per parity block) and each partition is read from the
    block matching the parity of its size.
    """
    if not 1 <= M <= 6:
        raise ValueError("M must be between 1 and 6")
    if not 0 <= N <= 12:
        raise ValueError("N must be between 0 and 12")

    def build(form: str) -> dict[tuple[int, ...], EulerPoly]:
        acc: dict[tuple[int, ...], EulerPoly] = {(0,) * M: EulerPoly.const(1)}
        for m in range(1, M + 1):
            factor = _cycle_factor(m, form, N // m)
            nxt: dict[tuple[int, ...], EulerPoly] = {}
            for vec, poly in acc.items():
                used = sum(i * r for i, r in enumerate(vec, start=1))
                for s in range((N - used) // m + 1):
                    c = factor.coefficient(s)
                    if c.is_zero():
                        continue
                    key = vec[: m - 1] + (s,) + vec[m:]
                    add = poly * c
                    nxt[key] = nxt[key] + add if key in nxt else add
            acc = nxt
        return acc

    odd_prod = build("odd")
    even_prod = build("even_ralt" if reverse else "even_alt")
    out: dict[Partition, int] = {}
    for n in range(1, N + 1):
        prod = odd_prod if n % 2 else even_prod
        for lam in partitions_of(n, max_part=M):
            vec = tuple(lam.count(i) for i in range(1, M + 1))
            poly = prod.get(vec, EulerPoly.const(0))
            v = umbral_eval(poly)
            if v.denominator != 1 or v < 0:
                raise AssertionError(f"coefficient of {lam} is not a count: {v}")
            out[lam] = int(v)
    return out


def involutions_series(N: int, reverse: bool = False) -> list[int]:
    """Counts of (reverse-)alternating involutions for n = 0..N.

    Substitutes t, t^2 for the 1- and 2-cycle marks in the parity-split
    factors and umbral-evaluates.  Both reading directions are computed
    and asserted equal before returning.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    order = N

    def factor_at_t2(form: str) -> ESeries:
        # the 2-cycle factor with its variable replaced by t^2
        raw = _cycle_factor(2, form, order // 2)
        return ESeries.from_terms(
            {2 * i: raw.coefficient(i) for i in range(order // 2 + 1)}, order
        )

    odd_part = (_cycle_factor(1, "odd", order) * factor_at_t2("odd")).parity_part("odd")
    evens = {
        form: (_cycle_factor(1, form, order) * factor_at_t2(form)).parity_part("even")
        for form in ("even_alt", "even_ralt")
    }
    if evens["even_alt"] != evens["even_ralt"]:
        raise AssertionError("the two reading directions disagree for involutions")
    series = odd_part + evens["even_ralt" if reverse else "even_alt"]
    out = []
    for n, v in enumerate(umbral_coefficients(series)):
        if v.denominator != 1 or v < 0:
            raise AssertionError(f"involution coefficient n={n} is not a count: {v}")
        out.append(int(v))
    return out


# ---------------------------------------------------------------------------
# fixed points


@lru_cache(maxsize=None)
def fixed_point_series(N: int, reverse: bool = False) -> tuple[tuple[int, ...], ...]:
    """Table of counts by fixed points: row n (0..N), column k = number
    of fixed points, for (reverse-)alternating permutations.

    A second variable q marks the 1-cycles: the 1-cycle factor is
    re-evaluated at qt, the unmarked factor divided back out, and the
    total count series ``1/(1 - E t)`` supplies every other cycle.  Odd
    sizes are read from the odd-parity block (where the two reading
    directions coincide); even sizes from the flag's even block.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    order = N
    at = _arctan_t(order)
    marked = (substitute_qt(at) - lift_to_q(at)).scale(E).exp()
    geom_terms: dict[int, object] = {0: 1}
    if order >= 1:
        geom_terms[1] = QPoly.const(-E)
    geom = QESeries.from_terms(geom_terms, order)
    core = marked / geom

    one_pt2 = _series_from({0: 1, 2: 1}, order)
    ratio = lift_to_q(one_pt2) / substitute_qt(one_pt2)  # (1+t^2)/(1+q^2 t^2)
    corr = ratio.sqrt() if not reverse else (QESeries.one(order) / ratio).sqrt()

    table = core.parity_part("odd") + (corr * core).parity_part("even")
    rows: list[tuple[int, ...]] = []
    for n, qrow in enumerate(umbral_coefficients(table)):
        padded = list(qrow) + [Fraction(0)] * (n + 1 - len(qrow))
        if any(v.denominator != 1 or v < 0 for v in padded):
            raise AssertionError(f"fixed-point row n={n} is not integral: {qrow}")
        rows.append(tuple(int(v) for v in padded))
    return tuple(rows)


@dataclass(frozen=True)
class ConjectureRecord:
    """One verified instance of the top-fixed-point identities."""

    n: int
    identity: str
    lhs: int
    rhs: int
    equal: bool


def conjecture_check(n_max: int) -> list[ConjectureRecord]:
    """Check, for each n up to ``n_max``, that the top nonzero
    fixed-point count sits at the predicted index and equals a
    derangement number: d_{ceil(n/2)}(n) = D_{floor(n/2)} for n >= 4
    and, reading the other direction, d*_{ceil((n+1)/2)}(n) =
    D_{floor((n-1)/2)} for n >= 5.  Numerical verification, not proof.
    """
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    rows = fixed_point_series(n_max, False)
    rows_r = fixed_point_series(n_max, True)
    der = derangement_numbers(n_max // 2 + 1)
    out: list[ConjectureRecord] = []
    for n in range(4, n_max + 1):
        k = (n + 1) // 2
        top = max((i for i, v in enumerate(rows[n]) if v), default=-1)
        out.append(ConjectureRecord(n, "alt-top-index", top, k, top == k))
        out.append(
            ConjectureRecord(n, "alt-top-value", rows[n][k], der[n // 2], rows[n][k] == der[n // 2])
        )
    for n in range(5, n_max + 1):
        k = (n + 2) // 2
        top = max((i for i, v in enumerate(rows_r[n]) if v), default=-1)
        out.append(ConjectureRecord(n, "ralt-top-index", top, k, top == k))
        out.append(
            ConjectureRecord(
                n, "ralt-top-value", rows_r[n][k], der[(n - 1) // 2], rows_r[n][k] == der[(n - 1) // 2]
            )
        )
    return out


def asymptotic_coeffs(kind: str, K: int) -> list[Fraction]:
    """Coefficients of the correction series for derangement-like
    alternating counts: d_0(n) ~ (1/e) * sum_k coeff_k E_{n-2k}.

    ``kind``: ``"a"`` for odd n, ``"b"`` for even n, ``"c"`` for even n
    read in reverse.  The base series is exp(1 - arctan(x)/x); the even
    kinds multiply or divide by sqrt(1+x^2).
    """
    if kind not in ("a", "b", "c"):
        raise ValueError("kind must be 'a', 'b', or 'c'")
    if K < 0:
        raise ValueError("K must be nonnegative")
    order = 2 * K
    u = ESeries.from_terms(
        {2 * k: Fraction((-1) ** (k + 1), 2 * k + 1) for k in range(1, K + 1)}, order
    )
    series = u.exp()
    if kind == "b":
        series = series * _sqrt_one_plus_t2(order)
    elif kind == "c":
        series = series / _sqrt_one_plus_t2(order)
    return [series.coefficient(2 * k).as_fraction() for k in range(K + 1)]


def asymptotic_sanity(
    n: int, K: int, reverse: bool = False
) -> tuple[int, Fraction, Fraction]:
    """Exact derangement-like count d_0(n) vs its K-term asymptotic
    truncation: returns (exact, approximation, relative error).

    The kind is chosen from the parity of n and the flag.  This is a
    numeric regression check -- the asymptotic statement itself is a
    limit and not desk-verifiable.
    """
    if n < 5:
        raise ValueError("n must be at least 5")
    if not 0 <= K <= 4:
        raise ValueError("K must be between 0 and 4")
    kind = "a" if n % 2 else ("c" if reverse else "b")
    coeffs = asymptotic_coeffs(kind, K)
    exact = fixed_point_series(n, reverse)[n][0]
    approx = _inverse_e() * sum(
        (coeffs[k] * euler_number(n - 2 * k) for k in range(min(K, n // 2) + 1)),
        Fraction(0),
    )
    return exact, approx, abs(exact - approx) / exact


# ---------------------------------------------------------------------------
# multisets


_EH_SOURCES = {
    # (which, pattern name) -> series builder key
    ("e", "ODD"): "plain",
    ("h", "ODD"): "plain",
    ("e", "EVEN_ALT"): "times_sqrt",
    ("h", "EVEN_ALT"): "over_sqrt",
    ("e", "EVEN_RALT"): "over_sqrt",
    ("h", "EVEN_RALT"): "times_sqrt",
}


@lru_cache(maxsize=None)
def _eh_series(source: str, order: int) -> ESeries:
    base = _exp_e_arctan(order)
    if source == "plain":
        return base
    if source == "times_sqrt":
        return base * _sqrt_one_plus_t2(order)
    if source == "over_sqrt":
        return base / _sqrt_one_plus_t2(order)
    raise ValueError(f"unknown series source {source!r}")


def _eh_poly(which: str, pattern: Pattern, i: int, order: int) -> EulerPoly:
    return _eh_series(_EH_SOURCES[(which, pattern.name)], order).coefficient(i)


def eh_specialization_table(i_max: int) -> dict[tuple[str, str], list[EulerPoly]]:
    """Elementary and complete symmetric functions under the three
    substitution patterns, for degrees 0..i_max, read off their
    generating series.  The cross-pattern equalities (e and h swap
    between the two even patterns, and coincide in the odd one) are
    asserted before returning.
    """
    if i_max < 1:
        raise ValueError("i_max must be at least 1")
    table = {
        (which, pat.name): [
            _eh_poly(which, pat, i, i_max) for i in range(i_max + 1)
        ]
        for which in ("e", "h")
        for pat in (ODD, EVEN_ALT, EVEN_RALT)
    }
    assert table[("e", "ODD")] == table[("h", "ODD")]
    assert table[("e", "EVEN_ALT")] == table[("h", "EVEN_RALT")]
    assert table[("e", "EVEN_RALT")] == table[("h", "EVEN_ALT")]
    return table


def multiset_count(
    alpha: Sequence[int], A: Iterable[int], reverse: bool = False
) -> CountReport:
    """Alternating words on the multiset with alpha_i copies of letter i,
    where ties between adjacent equal letters j read as a descent when
    j is in ``A`` and as an ascent otherwise.

    Three routes: a product of e/h specializations taken from their
    generating series; the skew-shape route through the disjoint union
    of rows (letters in A) and columns (letters outside); and the same
    product assembled in the power-sum basis.  For even sizes the shape
    route runs under the opposite reading direction -- the
    word-to-tableau bijection complements descent sets.
    """
    alpha = as_composition(alpha)
    k = len(alpha)
    A = frozenset(A)
    if not A <= set(range(1, k + 1)):
        raise ValueError(f"A must be a subset of 1..{k}")
    n = sum(alpha)
    pat = pattern_for(n, reverse)
    order = max(alpha)

    poly = EulerPoly.const(1)
    for i, part in enumerate(alpha, start=1):
        poly = poly * _eh_poly("e" if i in A else "h", pat, part, order)
    routes: list[tuple[str, Fraction | int]] = [("factor-series", umbral_eval(poly))]

    shape_flag = reverse if n % 2 else not reverse
    routes.append(("skew-shape", alt_shape(multiset_shape(alpha, A), shape_flag).value))

    f = SymP.one()
    for i, part in enumerate(alpha, start=1):
        f = f * (e_p(part) if i in A else h_p(part))
    routes.append(("power-sum-product", umbral_eval(substitute(f, pat))))

    return _report(n, routes, pre_umbral=poly)
