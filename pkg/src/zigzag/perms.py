"""Permutations, shapes, tableaux — and the brute-force oracles.

Conventions used throughout the package:

* A permutation is a tuple ``w = (a_1, ..., a_n)`` of the values ``1..n``;
  its descent set is ``D(w) = {i : a_i > a_{i+1}}`` and its descent
  composition ``co(w)`` lists the gaps between consecutive descents.

* ``w`` is *alternating* when ``D(w) = {1, 3, 5, ...}`` (down-up:
  ``a_1 > a_2 < a_3 > ...``) and *reverse alternating* when
  ``D(w) = {2, 4, 6, ...}``.

* Shapes are drawn in English notation: row 1 on top, rows indexed
  downward, and a skew shape ``outer/inner`` keeps the cells of ``outer``
  not in ``inner``.  Standard tableaux increase along rows and down
  columns; entry ``i`` is a tableau descent when ``i + 1`` sits in a
  strictly lower row.

Everything counted by a formula elsewhere in the package is counted here
as well, by exhaustive enumeration, behind explicit size bounds.  The
oracles are deliberately naive — their value is that they cannot share a
bug with the algebra they certify.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from sympy.utilities.iterables import multiset_permutations

Perm = tuple[int, ...]
Partition = tuple[int, ...]
Composition = tuple[int, ...]

#: Default ceilings for the exhaustive oracles.
ORACLE_SN_BOUND = 9  # full S_n sweeps
ORACLE_INVERSE_BOUND = 8  # sweeps that also look at w^{-1}
ORACLE_SYT_BOUND = 14  # cells, for tableau enumeration
ORACLE_INVOLUTION_BOUND = 12  # involution-only sweeps


class OracleLimitError(ValueError):
    """An exhaustive check was asked to exceed its configured bound."""


def _check_bound(value: int, default_bound: int, bound: int | None, what: str) -> None:
    limit = default_bound if bound is None else bound
    if value > limit:
        raise OracleLimitError(
            f"{what}={value} exceeds the oracle bound {limit}; "
            "pass a larger explicit bound only if you can afford the sweep"
        )


# -- validated index objects ---------------------------------------------


def as_perm(word: Sequence[int]) -> Perm:
    w = tuple(word)
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {word!r}")
    return w


def as_partition(parts: Sequence[int]) -> Partition:
    p = tuple(parts)
    if any(x < 1 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition (weakly decreasing, positive): {parts!r}")
    return p


def as_composition(parts: Sequence[int]) -> Composition:
    c = tuple(parts)
    if not c or any(x < 1 for x in c):
        raise ValueError(f"not a composition (positive parts): {parts!r}")
    return c


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order: (n), ..., (1^n)."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def compositions_of(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def conjugate_partition(p: Sequence[int]) -> Partition:
    p = tuple(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def hook_product(p: Sequence[int]) -> int:
    """Product of hook lengths of a straight shape."""
    lam = as_partition(p) if p else ()
    conj = conjugate_partition(lam)
    out = 1
    for i, row in enumerate(lam):
        for j in range(row):
            out *= row - j + conj[j] - i - 1
    return out


# -- descents -------------------------------------------------------------


def descent_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def descent_composition(w: Sequence[int]) -> Composition:
    n = len(w)
    if n == 0:
        raise ValueError("descent composition of the empty word is undefined")
    return descents_to_composition(descent_set(w), n)


def descents_to_composition(descents: Iterable[int], n: int) -> Composition:
    ds = sorted(descents)
    prev = 0
    parts = []
    for d in ds:
        parts.append(d - prev)
        prev = d
    parts.append(n - prev)
    return tuple(parts)


def composition_to_descents(alpha: Sequence[int]) -> frozenset[int]:
    total = 0
    out = []
    for part in alpha[:-1]:
        total += part
        out.append(total)
    return frozenset(out)


def alternating_descent_set(n: int, reverse: bool = False) -> frozenset[int]:
    start = 2 if reverse else 1
    return frozenset(range(start, n, 2))


def alternating_composition(n: int, reverse: bool = False) -> Composition:
    """co(w) shared by all (reverse) alternating permutations of n letters."""
    if n < 1:
        raise ValueError("need n >= 1")
    return descents_to_composition(alternating_descent_set(n, reverse), n)


def is_alternating(w: Sequence[int]) -> bool:
    return descent_set(w) == alternating_descent_set(len(w))


def is_reverse_alternating(w: Sequence[int]) -> bool:
    return descent_set(w) == alternating_descent_set(len(w), reverse=True)


# -- cycle structure -------------------------------------------------------


def inverse_perm(w: Sequence[int]) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[x - 1] = i
    return tuple(out)


def cycle_type(w: Sequence[int]) -> Partition:
    n = len(w)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = w[x - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def fixed_point_count(w: Sequence[int]) -> int:
    return sum(1 for i, x in enumerate(w, start=1) if i == x)


# -- shapes ----------------------------------------------------------------


@dataclass(frozen=True)
class SkewShape:
    """outer/inner in English notation; ``inner`` is padded to len(outer)."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self) -> None:
        outer = tuple(self.outer)
        inner = tuple(self.inner)
        if any(outer[i] < outer[i + 1] for i in range(len(outer) - 1)) or any(
            x < 0 for x in outer
        ):
            raise ValueError(f"outer must be weakly decreasing: {outer}")
        inner = inner + (0,) * (len(outer) - len(inner))
        if len(inner) > len(outer):
            raise ValueError("inner has more rows than outer")
        if any(inner[i] < inner[i + 1] for i in range(len(inner) - 1)) or any(
            x < 0 for x in inner
        ):
            raise ValueError(f"inner must be weakly decreasing: {self.inner}")
        if any(inner[i] > outer[i] for i in range(len(outer))):
            raise ValueError(f"inner exceeds outer: {inner} vs {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    def row_span(self, r: int) -> tuple[int, int]:
        """Half-open 0-indexed column range of row r."""
        return self.inner[r], self.outer[r]

    def cells(self) -> Iterator[tuple[int, int]]:
        for r in range(self.n_rows):
            lo, hi = self.row_span(r)
            for c in range(lo, hi):
                yield (r, c)

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate_partition(self.outer), conjugate_partition(self.inner))

    def __str__(self) -> str:
        width = self.outer[0] if self.outer else 0
        lines = []
        for r in range(self.n_rows):
            lo, hi = self.row_span(r)
            lines.append("." * lo + "#" * (hi - lo) + " " * (width - hi))
        return "\n".join(lines) if lines else "(empty)"


def ribbon_shape(alpha: Sequence[int]) -> SkewShape:
    """The connected border strip whose rows, bottom to top, have lengths α.

    Consecutive rows overlap in exactly one column; inner products of the
    resulting skew Schur functions match the descent-class counts they are
    meant to encode (that oracle equality is what pins the orientation —
    the 180°-rotated convention gives the same symmetric function).
    """
    a = as_composition(alpha)
    k = len(a)
    ends = []  # 1-indexed last column of row i (bottom to top)
    total = 0
    for i, part in enumerate(a):
        total += part
        ends.append(total - i)
    starts = [1] + ends[:-1]
    outer = tuple(ends[k - 1 - t] for t in range(k))
    inner = tuple(starts[k - 1 - t] - 1 for t in range(k))
    return SkewShape(outer, inner)


def tau_shape(n: int, primed: bool = False) -> SkewShape:
    """The zigzag ribbon whose standard tableaux encode alternating w ∈ S_n.

    Its row lengths (bottom to top) form the descent composition shared by
    all alternating permutations of n letters; ``primed`` conjugates,
    matching reverse alternating permutations.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    shape = ribbon_shape(alternating_composition(n))
    return shape.conjugate() if primed else shape


def multiset_shape(alpha: Sequence[int], A: Iterable[int]) -> SkewShape:
    """Disjoint (direct-sum) union of k rows/columns, sizes α_1..α_k.

    Component i (1-indexed, listed top to bottom) is a single row of
    length α_i when ``i ∈ A`` and a single column of height α_i otherwise.
    Components share no row and no column.
    """
    a = as_composition(alpha)
    k = len(a)
    aset = set(A)
    if not aset <= set(range(1, k + 1)):
        raise ValueError(f"A must be a subset of 1..{k}: {sorted(aset)!r}")
    rows: list[tuple[int, int]] = []  # (inner, outer), assembled bottom-up
    width = 0
    for i in range(k, 0, -1):
        size = a[i - 1]
        if i in aset:
            rows.insert(0, (width, width + size))
            width += size
        else:
            for _ in range(size):
                rows.insert(0, (width, width + 1))
            width += 1
    outer = tuple(hi for _, hi in rows)
    inner = tuple(lo for lo, _ in rows)
    return SkewShape(outer, inner)


# -- tableaux ---------------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """Standard filling of a skew shape; rows[r] lists row r's entries."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def entry_row(self) -> dict[int, int]:
        out = {}
        for r, row in enumerate(self.rows):
            for x in row:
                out[x] = r
        return out

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)


def tableau_descent_set(t: Tableau | Sequence[Sequence[int]]) -> frozenset[int]:
    rows = t.rows if isinstance(t, Tableau) else tuple(tuple(r) for r in t)
    where = {}
    n = 0
    for r, row in enumerate(rows):
        for x in row:
            where[x] = r
            n += 1
    return frozenset(i for i in range(1, n) if where[i + 1] > where[i])


def tableau_descent_composition(t: Tableau | Sequence[Sequence[int]]) -> Composition:
    rows = t.rows if isinstance(t, Tableau) else tuple(tuple(r) for r in t)
    n = sum(len(r) for r in rows)
    return descents_to_composition(tableau_descent_set(rows), n)


def rsk(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insertion RSK; returns (P, Q) as straight-shape tableaux."""
    word = as_perm(w)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for pos, x in enumerate(word, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([pos])
                break
            row = p_rows[r]
            # find leftmost entry strictly greater than x
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] <= x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == len(row):
                row.append(x)
                q_rows[r].append(pos)
                break
            row[lo], x = x, row[lo]
            r += 1
    shape = SkewShape(tuple(len(r) for r in p_rows))
    P = Tableau(shape, tuple(tuple(r) for r in p_rows))
    Q = Tableau(shape, tuple(tuple(r) for r in q_rows))
    return P, Q


def enumerate_syt(shape: SkewShape, bound: int | None = None) -> Iterator[Tableau]:
    """Every standard Young tableau of the (skew) shape, exactly once."""
    n = shape.size
    _check_bound(n, ORACLE_SYT_BOUND, bound, "shape size")
    spans = [shape.row_span(r) for r in range(shape.n_rows)]
    # fill[r] = number of cells already placed in row r (left to right)
    fill = [0] * shape.n_rows
    entries: list[list[int]] = [[] for _ in range(shape.n_rows)]

    def ready(r: int) -> bool:
        lo, hi = spans[r]
        c = lo + fill[r]
        if c >= hi:
            return False
        if r > 0:
            plo, phi = spans[r - 1]
            if plo <= c < phi and plo + fill[r - 1] <= c:
                return False  # cell above exists but is still empty
        return True

    def rec(k: int) -> Iterator[Tableau]:
        if k > n:
            yield Tableau(shape, tuple(tuple(row) for row in entries))
            return
        for r in range(shape.n_rows):
            if ready(r):
                entries[r].append(k)
                fill[r] += 1
                yield from rec(k + 1)
                fill[r] -= 1
                entries[r].pop()

    return rec(1)


def syt_count_hook(p: Sequence[int]) -> int:
    """Number of SYT of a straight shape, by the hook-length formula."""
    lam = as_partition(p) if p else ()
    n = sum(lam)
    num = 1
    for i in range(2, n + 1):
        num *= i
    h = hook_product(lam)
    assert num % h == 0
    return num // h


# -- multiset words ----------------------------------------------------------


def is_multiset_alternating(
    word: Sequence[int], A: Iterable[int], reverse: bool = False
) -> bool:
    """Down-up test for a word with repeated letters.

    Ties are broken by membership: two equal adjacent letters ``j`` compare
    as ``>`` when ``j ∈ A`` and as ``<`` otherwise.
    """
    aset = set(A)
    n = len(word)
    for i in range(1, n):
        x, y = word[i - 1], word[i]
        if x > y:
            greater = True
        elif x < y:
            greater = False
        else:
            greater = x in aset
        want_greater = (i % 2 == 1) != reverse
        if greater != want_greater:
            return False
    return True


# -- oracles -----------------------------------------------------------------


def _sweep(n: int, bound: int | None = None) -> Iterator[Perm]:
    _check_bound(n, ORACLE_SN_BOUND, bound, "n")
    return itertools.permutations(range(1, n + 1))


def _is_alt(w: Perm, reverse: bool) -> bool:
    return is_reverse_alternating(w) if reverse else is_alternating(w)


def oracle_alternating_count(n: int, reverse: bool = False, bound: int | None = None) -> int:
    return sum(1 for w in _sweep(n, bound) if _is_alt(w, reverse))


def oracle_alternating_by_cycle_type(
    n: int, reverse: bool = False, bound: int | None = None
) -> dict[Partition, int]:
    out: dict[Partition, int] = {rho: 0 for rho in partitions_of(n)}
    for w in _sweep(n, bound):
        if _is_alt(w, reverse):
            out[cycle_type(w)] += 1
    return out


def oracle_alternating_fixed_points(
    n: int, reverse: bool = False, bound: int | None = None
) -> dict[int, int]:
    out: dict[int, int] = {}
    for w in _sweep(n, bound):
        if _is_alt(w, reverse):
            k = fixed_point_count(w)
            out[k] = out.get(k, 0) + 1
    return out


def oracle_descent_pair_count(
    alpha: Sequence[int], beta: Sequence[int], bound: int | None = None
) -> int:
    """#{w : co(w) = α and co(w⁻¹) = β}."""
    a, b = as_composition(alpha), as_composition(beta)
    n = sum(a)
    if sum(b) != n:
        raise ValueError("compositions must have equal size")
    _check_bound(n, ORACLE_INVERSE_BOUND, bound, "n")
    count = 0
    for w in itertools.permutations(range(1, n + 1)):
        if descent_composition(w) == a and descent_composition(inverse_perm(w)) == b:
            count += 1
    return count


def oracle_cycle_descent_count(
    rho: Sequence[int], alpha: Sequence[int], bound: int | None = None
) -> int:
    """#{w : cycle type ρ and co(w) = α}."""
    r, a = as_partition(rho), as_composition(alpha)
    n = sum(r)
    if sum(a) != n:
        raise ValueError("partition and composition must have equal size")
    count = 0
    for w in _sweep(n, bound):
        if descent_composition(w) == a and cycle_type(w) == r:
            count += 1
    return count


DOUBLY_VARIANTS = ("alt_alt", "alt_ralt", "ralt_alt", "ralt_ralt")


def oracle_doubly_alternating(n: int, variant: str, bound: int | None = None) -> int:
    """Count w where w and w⁻¹ satisfy the named alternation flags."""
    if variant not in DOUBLY_VARIANTS:
        raise ValueError(f"variant must be one of {DOUBLY_VARIANTS}")
    _check_bound(n, ORACLE_INVERSE_BOUND, bound, "n")
    first_rev = variant.startswith("ralt")
    second_rev = variant.endswith("ralt")
    count = 0
    for w in itertools.permutations(range(1, n + 1)):
        if _is_alt(w, first_rev) and _is_alt(inverse_perm(w), second_rev):
            count += 1
    return count


def _involutions(n: int) -> Iterator[Perm]:
    """All w with w² = identity, built by matching the smallest free letter."""

    def rec(free: tuple[int, ...], pairs: list[tuple[int, int]]) -> Iterator[Perm]:
        if not free:
            w = list(range(1, n + 1))
            for i, j in pairs:
                w[i - 1], w[j - 1] = j, i
            yield tuple(w)
            return
        first, rest = free[0], free[1:]
        yield from rec(rest, pairs)  # first stays fixed
        for k, j in enumerate(rest):
            pairs.append((first, j))
            yield from rec(rest[:k] + rest[k + 1 :], pairs)
            pairs.pop()

    return rec(tuple(range(1, n + 1)), [])


def oracle_alternating_involutions(
    n: int, reverse: bool = False, bound: int | None = None
) -> int:
    _check_bound(n, ORACLE_INVOLUTION_BOUND, bound, "n")
    return sum(1 for w in _involutions(n) if _is_alt(w, reverse))


def oracle_syt_descent_count(
    shape: SkewShape, comp: Sequence[int], bound: int | None = None
) -> int:
    """#SYT of the shape whose tableau descent composition equals comp."""
    target = as_composition(comp)
    return sum(
        1 for t in enumerate_syt(shape, bound) if tableau_descent_composition(t) == target
    )


def oracle_multiset_alternating(
    alpha: Sequence[int],
    A: Iterable[int],
    reverse: bool = False,
    bound: int | None = None,
) -> int:
    """Count (A,B)-alternating arrangements of the multiset {1^α_1, ..., k^α_k}.

    B is the complement of A in 1..k; enumeration is in lexicographic order.
    """
    a = as_composition(alpha)
    n = sum(a)
    _check_bound(n, ORACLE_INVERSE_BOUND, bound, "multiset size")
    aset = set(A)
    if not aset <= set(range(1, len(a) + 1)):
        raise ValueError(f"A must be a subset of 1..{len(a)}")
    letters = [j for j, mult in enumerate(a, start=1) for _ in range(mult)]
    return sum(
        1
        for word in multiset_permutations(letters)
        if is_multiset_alternating(word, aset, reverse)
    )


def oracle_counts(n: int, query: str, bound: int | None = None, **params) -> int:
    """One-stop dispatcher over the exhaustive counts (used by the CLI)."""
    reverse = bool(params.pop("reverse", False))
    if query == "alternating":
        out = oracle_alternating_count(n, reverse, bound)
    elif query == "alternating_by_cycle_type":
        rho = as_partition(params.pop("rho"))
        out = oracle_alternating_by_cycle_type(n, reverse, bound).get(rho, 0)
    elif query == "alternating_fixed_points":
        k = int(params.pop("k"))
        out = oracle_alternating_fixed_points(n, reverse, bound).get(k, 0)
    elif query == "descent_pair":
        out = oracle_descent_pair_count(params.pop("alpha"), params.pop("beta"), bound)
    elif query == "doubly_alternating":
        out = oracle_doubly_alternating(n, params.pop("variant"), bound)
    elif query == "alternating_involutions":
        out = oracle_alternating_involutions(n, reverse, bound)
    elif query == "syt_descent":
        out = oracle_syt_descent_count(params.pop("shape"), params.pop("comp"), bound)
    elif query == "multiset_alternating":
        out = oracle_multiset_alternating(
            params.pop("alpha"), params.pop("A"), reverse, bound
        )
    else:
        raise ValueError(f"unknown oracle query {query!r}")
    if params:
        raise TypeError(f"unused oracle parameters: {sorted(params)}")
    return out
