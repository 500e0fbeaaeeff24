"""Symmetric functions in the power-sum basis, and the substitution patterns.

A homogeneous symmetric function of degree n lives here as a map
``partition λ ⊢ n -> coefficient of p_λ`` (:class:`SymP`).  Everything the
package needs reduces to four classical ingredients:

* the Murnaghan–Nakayama rule, giving skew Schur functions as signed
  border-strip counts: ``s_{λ/μ} = Σ_ρ z_ρ^{-1} χ^{λ/μ}(ρ) p_ρ``;

* the Hall inner product, ``⟨p_λ, p_μ⟩ = δ_{λμ} z_λ``;

* the Gessel–Reutenauer functions ``L_λ``, whose pairing with a ribbon
  Schur function counts permutations with a given cycle type and descent
  composition;

* substitution *patterns*: periodic assignments ``p_j -> ±E or rational``.
  Substituting a pattern into a degree-n symmetric function produces a
  pre-umbral :class:`~zigzag.exact.EulerPoly`; pairing ⟨f, s_zigzag⟩
  becomes plain polynomial algebra this way, with the umbral step applied
  by the caller at the very end.

The three counting patterns:

    ODD       p_1, p_2, p_3, ... -> E,  0, -E,  0, E, ...   (n odd)
    EVEN_ALT  p_1, p_2, p_3, ... -> E, -1, -E,  1, E, ...   (n even, alternating)
    EVEN_RALT p_1, p_2, p_3, ... -> E,  1, -E, -1, E, ...   (n even, reverse)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from sympy import divisors, mobius

from .exact import E, EulerPoly, Scalar
from .perms import (
    Partition,
    SkewShape,
    as_partition,
    partitions_of,
    tau_shape,
)


def z_of(lam: Sequence[int]) -> int:
    """Centralizer order z_λ = Π i^{m_i} · m_i!."""
    lam = as_partition(lam) if lam else ()
    out = 1
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for i, m in mult.items():
        fact = 1
        for j in range(2, m + 1):
            fact *= j
        out *= i**m * fact
    return out


class SymP:
    """Homogeneous symmetric function as p-basis coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Partition, Fraction | int]) -> None:
        self.degree = degree
        clean: dict[Partition, Fraction] = {}
        for lam, c in terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            lam = tuple(lam)
            if sum(lam) != degree:
                raise ValueError(f"partition {lam} has wrong size for degree {degree}")
            clean[lam] = c
        self.terms = clean

    @staticmethod
    def p(lam: Sequence[int]) -> "SymP":
        """The power-sum monomial p_λ."""
        lam = as_partition(lam) if lam else ()
        return SymP(sum(lam), {lam: Fraction(1)})

    @staticmethod
    def one() -> "SymP":
        return SymP(0, {(): Fraction(1)})

    @staticmethod
    def zero(degree: int) -> "SymP":
        return SymP(degree, {})

    def coefficient(self, lam: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymP):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __add__(self, other: "SymP") -> "SymP":
        if not isinstance(other, SymP):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("cannot add symmetric functions of different degrees")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymP(self.degree, out)

    def __neg__(self) -> "SymP":
        return SymP(self.degree, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymP") -> "SymP":
        return self + (-other)

    def scale(self, c: Scalar) -> "SymP":
        c = Fraction(c)
        return SymP(self.degree, {lam: c * v for lam, v in self.terms.items()})

    def __mul__(self, other: "SymP | Scalar") -> "SymP":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SymP):
            return NotImplemented
        out: dict[Partition, Fraction] = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                key = tuple(sorted(lam + mu, reverse=True))
                out[key] = out.get(key, Fraction(0)) + a * b
        return SymP(self.degree + other.degree, out)

    __rmul__ = __mul__

    def stretch(self, s: int) -> "SymP":
        """Plethystic substitution p_j -> p_{j·s}."""
        if s < 1:
            raise ValueError("stretch factor must be >= 1")
        return SymP(
            self.degree * s,
            {tuple(x * s for x in lam): c for lam, c in self.terms.items()},
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"SymP(0; degree {self.degree})"
        bits = [f"{c}·p{list(lam)}" for lam, c in sorted(self.terms.items(), reverse=True)]
        return " + ".join(bits)


# -- classical families -------------------------------------------------------


@lru_cache(maxsize=None)
def h_p(n: int) -> SymP:
    """Complete homogeneous h_n = Σ_{λ⊢n} p_λ / z_λ."""
    return SymP(n, {lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)})


@lru_cache(maxsize=None)
def e_p(n: int) -> SymP:
    """Elementary e_n = Σ_{λ⊢n} ε_λ p_λ / z_λ with ε_λ = (−1)^{n−ℓ(λ)}."""
    return SymP(
        n,
        {
            lam: Fraction((-1) ** (n - len(lam)), z_of(lam))
            for lam in partitions_of(n)
        },
    )


def p1_power(n: int) -> SymP:
    return SymP.p((1,) * n)


# -- Murnaghan–Nakayama --------------------------------------------------------


def mn_character(shape: SkewShape, rho: Sequence[int]) -> int:
    """χ^{shape}(ρ): signed count of border-strip tableaux.

    A strip of size r spanning rows t..b of the current outer shape λ
    (inner μ stays fixed) occupies columns λ_{i+1}..λ_i in row i < b and
    s..λ_b in row b where s = λ_t + (b−t) + 1 − r; it is removable iff
    s ≥ max(λ_{b+1}, μ_b) + 1, s ≤ λ_b, and λ_{i+1} − 1 ≥ μ_i for
    t ≤ i < b.  Removal leaves λ'_i = λ_{i+1} − 1 on rows t..b−1 and
    λ'_b = s − 1, and contributes sign (−1)^{b−t}.
    """
    rho = as_partition(rho) if rho else ()
    if shape.size != sum(rho):
        raise ValueError(
            f"shape size {shape.size} does not match |ρ| = {sum(rho)}"
        )
    L = shape.n_rows
    mu = shape.inner
    memo: dict[tuple[tuple[int, ...], int], int] = {}

    def rec(lam: tuple[int, ...], idx: int) -> int:
        if idx == len(rho):
            return 1
        key = (lam, idx)
        cached = memo.get(key)
        if cached is not None:
            return cached
        r = rho[idx]
        total = 0
        for t0 in range(L):
            for b0 in range(t0, L):
                s = lam[t0] + (b0 - t0) + 1 - r
                below = lam[b0 + 1] if b0 + 1 < L else 0
                if s < max(below, mu[b0]) + 1 or s > lam[b0]:
                    continue
                if any(lam[i0 + 1] - 1 < mu[i0] for i0 in range(t0, b0)):
                    continue
                new = list(lam)
                for i0 in range(t0, b0):
                    new[i0] = lam[i0 + 1] - 1
                new[b0] = s - 1
                total += (-1) ** (b0 - t0) * rec(tuple(new), idx + 1)
        memo[key] = total
        return total

    return rec(shape.outer, 0)


def skew_schur_in_p(shape: SkewShape) -> SymP:
    """s_{shape} = Σ_{ρ⊢n} z_ρ^{-1} χ^{shape}(ρ) p_ρ."""
    n = shape.size
    if n < 1:
        raise ValueError("shape must have at least one cell")
    terms: dict[Partition, Fraction] = {}
    for rho in partitions_of(n):
        chi = mn_character(shape, rho)
        if chi:
            terms[rho] = Fraction(chi, z_of(rho))
    return SymP(n, terms)


def foulkes_character(n: int, mu: Sequence[int], primed: bool = False) -> int:
    """Closed-form character of the zigzag ribbon on the class of type μ.

    For n = 2k+1: zero when μ has an even part, else (−1)^{k+r} E_{2r+1}
    where μ has 2r+1 (odd) parts; conjugation acts trivially.  For
    n = 2k with 2r odd parts and e even parts: (−1)^{k+r} E_{2r},
    times an extra (−1)^e for the conjugate (primed) ribbon.
    """
    mu = as_partition(mu)
    if sum(mu) != n or n < 1:
        raise ValueError(f"μ = {mu} is not a partition of {n}")
    from .exact import euler_number

    n_odd_parts = sum(1 for x in mu if x % 2 == 1)
    n_even_parts = len(mu) - n_odd_parts
    if n % 2 == 1:
        if n_even_parts:
            return 0
        k = (n - 1) // 2
        r = (n_odd_parts - 1) // 2
        return (-1) ** (k + r) * euler_number(n_odd_parts)
    k = n // 2
    r = n_odd_parts // 2
    sign = (-1) ** (k + r + (n_even_parts if primed else 0))
    return sign * euler_number(n_odd_parts)


# -- Gessel–Reutenauer functions ------------------------------------------------


@lru_cache(maxsize=None)
def _L_one_cycle(m: int) -> SymP:
    """L_m = (1/m) Σ_{d|m} μ(d) p_d^{m/d} (necklace symmetric function)."""
    terms: dict[Partition, Fraction] = {}
    for d in divisors(m):
        mu_d = int(mobius(d))
        if mu_d == 0:
            continue
        lam = (d,) * (m // d)
        terms[lam] = terms.get(lam, Fraction(0)) + Fraction(mu_d, m)
    return SymP(m, terms)


@lru_cache(maxsize=None)
def _L_cycle_power(m: int, r: int) -> SymP:
    """L_{⟨m^r⟩} via r·L_{⟨m^r⟩} = Σ_{s=1}^{r} L_m(p_j -> p_{js}) · L_{⟨m^{r−s}⟩}."""
    if r == 0:
        return SymP.one()
    acc = SymP.zero(m * r)
    for s in range(1, r + 1):
        acc = acc + _L_one_cycle(m).stretch(s) * _L_cycle_power(m, r - s)
    return acc.scale(Fraction(1, r))


def gr_L(lam: Sequence[int]) -> SymP:
    """L_λ = Π over distinct part sizes m of L_{⟨m^{mult_m}⟩}."""
    lam = as_partition(lam)
    if not lam:
        raise ValueError("λ must be nonempty")
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    out = SymP.one()
    for m in sorted(mult):
        out = out * _L_cycle_power(m, mult[m])
    return out


# -- Hall pairing and patterns ---------------------------------------------------


def inner_product(f: SymP, g: SymP) -> Fraction:
    """Hall inner product Σ_λ z_λ f_λ g_λ."""
    if f.degree != g.degree:
        raise ValueError(
            f"inner product needs equal degrees, got {f.degree} and {g.degree}"
        )
    small, large = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    acc = Fraction(0)
    for lam, a in small.items():
        b = large.get(lam)
        if b is not None:
            acc += z_of(lam) * a * b
    return acc


@dataclass(frozen=True)
class Pattern:
    """Periodic assignment p_j -> value; value(j) cycles through `cycle`."""

    name: str
    cycle: tuple[EulerPoly, ...]

    def value(self, j: int) -> EulerPoly:
        if j < 1:
            raise ValueError("power-sum index must be >= 1")
        return self.cycle[(j - 1) % len(self.cycle)]

    @staticmethod
    def from_values(name: str, values: Iterable[EulerPoly | Scalar]) -> "Pattern":
        cyc = tuple(
            v if isinstance(v, EulerPoly) else EulerPoly((v,)) for v in values
        )
        if not cyc:
            raise ValueError("pattern needs at least one value")
        return Pattern(name, cyc)


_ZERO = EulerPoly()
_ONE = EulerPoly((1,))

ODD = Pattern("ODD", (E, _ZERO, -E, _ZERO))
EVEN_ALT = Pattern("EVEN_ALT", (E, -_ONE, -E, _ONE))
EVEN_RALT = Pattern("EVEN_RALT", (E, _ONE, -E, -_ONE))
ALL_E = Pattern("ALL_E", (E,))
#: unsigned odd pattern [E, 0, E, 0, ...]; intermediate for the Hankel route
ODD_UNSIGNED = Pattern("ODD_UNSIGNED", (E, _ZERO))


def pattern_for(n: int, reverse: bool = False) -> Pattern:
    """The main-theorem pattern extracting (reverse) alternating counts."""
    if n % 2 == 1:
        return ODD
    return EVEN_RALT if reverse else EVEN_ALT


def substitute(f: SymP, pat: Pattern) -> EulerPoly:
    """Ring-homomorphic image of f under p_j -> pat.value(j); pre-umbral."""
    acc = EulerPoly()
    for lam, c in f.terms.items():
        term = EulerPoly((c,))
        for part in lam:
            v = pat.value(part)
            if v.is_zero():
                term = _ZERO
                break
            term = term * v
        if not term.is_zero():
            acc = acc + term
    return acc


# -- Carlitz-style generating identity --------------------------------------------


def _evaluate_at(f: SymP, values: Sequence[Fraction]) -> Fraction:
    """Evaluate a p-basis expression at p_j = values[j-1]."""
    acc = Fraction(0)
    for lam, c in f.terms.items():
        prod = c
        for part in lam:
            prod *= values[part - 1]
        acc += prod
    return acc


def carlitz_identity_check(N: int, trials: int = 3, seed: int = 0) -> bool:
    """Random-specialization check of the h-series identity for zigzags.

    The conjugate zigzag ribbons satisfy

        Σ_{n≥0} s_{τ'_n} t^n · Σ_{n≥0} (−1)^n h_{2n} t^{2n}
            = 1 + Σ_{n≥0} (−1)^n h_{2n+1} t^{2n+1}

    (a polynomial identity in the p_j once truncated at t^N).  Each trial
    draws reproducible rational values for p_1..p_N and compares both
    sides coefficientwise through t^N; True iff every trial agrees.
    """
    if N < 1:
        raise ValueError("need N >= 1")
    rng = random.Random(seed)
    schur = [SymP.one()] + [
        skew_schur_in_p(tau_shape(n, primed=True)) for n in range(1, N + 1)
    ]
    hs = [SymP.one()] + [h_p(n) for n in range(1, N + 1)]
    for _ in range(trials):
        values = [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(N)
        ]
        lhs = [_evaluate_at(s, values) for s in schur]
        num = [Fraction(0)] * (N + 1)
        den = [Fraction(0)] * (N + 1)
        num[0] = Fraction(1)
        for n in range(0, N + 1):
            if n % 2 == 1:
                num[n] = (-1) ** (n // 2) * _evaluate_at(hs[n], values)
            else:
                den[n] = (-1) ** (n // 2) * _evaluate_at(hs[n], values)
        for k in range(N + 1):
            conv = sum(lhs[j] * den[k - j] for j in range(k + 1))
            if conv != num[k]:
                return False
    return True
