"""Command-line surface: tables, counts, and verification suites.

Every subcommand prints one record per result line, either as JSON lines
(one object per line) or RFC-4180-style CSV with a fixed header.  Rationals
are serialized as ``p/q`` in lowest terms, integers without a denominator.
Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, Mapping, Sequence, TextIO

from . import exact, formulas, perms, symfunc
from .perms import OracleLimitError, SkewShape
from .useries import sec_plus_tan_integer_coefficients

__all__ = ["main"]


# ---------------------------------------------------------------------------
# record emission


def _fmt_value(value: object) -> str:
    """Serialize a result value: integers plain, rationals as p/q."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _fmt_flag(flag: bool) -> str:
    return "true" if flag else "false"


def _fmt_parts(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts)


class Emitter:
    """Writes output records in the selected format.

    The JSON flavor emits one compact object per line; the CSV flavor
    writes a single header row followed by one data row per record, with
    the parameter mapping flattened to ``key=value`` pairs joined by
    semicolons so the column set stays fixed for a given subcommand.
    """

    _FIELDS = ("command", "parameters", "index", "value", "route")

    def __init__(self, fmt: str, out: TextIO) -> None:
        self._fmt = fmt
        self._out = out
        self._csv_writer: object | None = None

    def emit(
        self,
        command: str,
        parameters: Mapping[str, str],
        index: int,
        value: object,
        route: str,
    ) -> None:
        rendered = _fmt_value(value)
        if self._fmt == "json":
            record = {
                "command": command,
                "parameters": dict(parameters),
                "index": index,
                "value": rendered,
                "route": route,
            }
            self._out.write(json.dumps(record, separators=(",", ":")) + "\n")
        else:
            if self._csv_writer is None:
                self._csv_writer = csv.writer(self._out, lineterminator="\r\n")
                self._csv_writer.writerow(self._FIELDS)
            flat = ";".join(f"{k}={v}" for k, v in parameters.items())
            self._csv_writer.writerow([command, flat, index, rendered, route])


# ---------------------------------------------------------------------------
# argument parsing helpers


def _positive_ints(text: str, what: str) -> tuple[int, ...]:
    parts: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            part = int(chunk)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"{what}: {chunk!r} is not an integer"
            ) from None
        if part <= 0:
            raise argparse.ArgumentTypeError(f"{what}: parts must be positive")
        parts.append(part)
    return tuple(parts)


def _partition_arg(text: str) -> tuple[int, ...]:
    parts = _positive_ints(text, "partition")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise argparse.ArgumentTypeError(
            "partition parts must be non-increasing (e.g. 3,2,2,1)"
        )
    return parts


def _composition_arg(text: str) -> tuple[int, ...]:
    parts = _positive_ints(text, "composition")
    if not parts:
        raise argparse.ArgumentTypeError("composition must have at least one part")
    return parts


def _subset_arg(text: str) -> tuple[int, ...]:
    return tuple(sorted(set(_positive_ints(text, "index set"))))


def _nonneg_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError("value must be >= 0")
    return value


# ---------------------------------------------------------------------------
# compute subcommands


def _crosscheck_params(report: formulas.CountReport) -> dict[str, str]:
    return {f"crosscheck-{name}": _fmt_value(val) for name, val in report.crosschecks}


def _cmd_euler(args: argparse.Namespace, emit: Emitter) -> int:
    values = exact.euler_numbers(args.max)
    for n, value in enumerate(values):
        emit.emit("euler", {"max": str(args.max)}, n, value, "boustrophedon")
    return 0


def _cmd_shape(args: argparse.Namespace, emit: Emitter) -> int:
    shape = SkewShape(args.lam, args.skew_inner)
    report = formulas.alt_shape(shape, args.reverse)
    params = {
        "lambda": _fmt_parts(args.lam),
        "skew-inner": _fmt_parts(args.skew_inner),
        "reverse": _fmt_flag(args.reverse),
    }
    params.update(_crosscheck_params(report))
    emit.emit("shape", params, report.n, report.value, report.route)
    return 0


def _cmd_staircase(args: argparse.Namespace, emit: Emitter) -> int:
    report = formulas.staircase(args.m)
    params = {"m": str(args.m)}
    params.update(_crosscheck_params(report))
    emit.emit("staircase", params, args.m, report.value, report.route)
    return 0


def _cmd_square(args: argparse.Namespace, emit: Emitter) -> int:
    report = formulas.square(args.p)
    params = {"p": str(args.p)}
    params.update(_crosscheck_params(report))
    emit.emit("square", params, args.p, report.value, report.route)
    return 0


def _cmd_cycle(args: argparse.Namespace, emit: Emitter) -> int:
    report = formulas.b_cycle_type(args.rho, args.reverse)
    params = {"rho": _fmt_parts(args.rho), "reverse": _fmt_flag(args.reverse)}
    params.update(_crosscheck_params(report))
    emit.emit("cycle", params, report.n, report.value, report.route)
    return 0


def _cmd_ncycle(args: argparse.Namespace, emit: Emitter) -> int:
    report = formulas.b_ncycle_closed(args.n, args.reverse)
    params = {"n": str(args.n), "reverse": _fmt_flag(args.reverse)}
    params.update(_crosscheck_params(report))
    emit.emit("ncycle", params, args.n, report.value, report.route)
    return 0


def _cmd_fm(args: argparse.Namespace, emit: Emitter) -> int:
    order = args.order if args.order is not None else 12
    values = formulas.fm_series(args.m, order, args.reverse)
    params = {
        "m": str(args.m),
        "order": str(order),
        "reverse": _fmt_flag(args.reverse),
    }
    for r, value in enumerate(values):
        emit.emit("fm", params, r, value, "factor-series")
    return 0


def _cmd_doubly(args: argparse.Namespace, emit: Emitter) -> int:
    report = formulas.doubly_alternating(args.n, args.variant)
    params = {"n": str(args.n), "variant": args.variant}
    params.update(_crosscheck_params(report))
    emit.emit("doubly", params, args.n, report.value, report.route)
    return 0


def _cmd_involutions(args: argparse.Namespace, emit: Emitter) -> int:
    values = formulas.involutions_series(args.max, args.reverse)
    params = {"max": str(args.max), "reverse": _fmt_flag(args.reverse)}
    for n, value in enumerate(values):
        emit.emit("involutions", params, n, value, "indicator-substitution")
    return 0


def _cmd_fixed(args: argparse.Namespace, emit: Emitter) -> int:
    rows = formulas.fixed_point_series(args.max, args.reverse)
    for n, row in enumerate(rows):
        for k, value in enumerate(row):
            params = {
                "max": str(args.max),
                "reverse": _fmt_flag(args.reverse),
                "k": str(k),
            }
            emit.emit("fixed", params, n, value, "q-series-umbral")
    return 0


def _cmd_asy(args: argparse.Namespace, emit: Emitter) -> int:
    coeffs = formulas.asymptotic_coeffs(args.kind, args.terms)
    params = {"kind": args.kind, "terms": str(args.terms)}
    for k, value in enumerate(coeffs):
        emit.emit("asy", params, k, value, "exact-series")
    return 0


def _cmd_multiset(args: argparse.Namespace, emit: Emitter) -> int:
    report = formulas.multiset_count(args.alpha, args.subset, args.reverse)
    params = {
        "alpha": _fmt_parts(args.alpha),
        "A": _fmt_parts(args.subset),
        "reverse": _fmt_flag(args.reverse),
    }
    params.update(_crosscheck_params(report))
    emit.emit("multiset", params, report.n, report.value, report.route)
    return 0


def _cmd_conjecture(args: argparse.Namespace, emit: Emitter) -> int:
    records = formulas.conjecture_check(args.max)
    failures = [rec for rec in records if not rec.equal]
    for rec in records:
        params = {
            "max": str(args.max),
            "rhs": _fmt_value(rec.rhs),
            "equal": _fmt_flag(rec.equal),
        }
        emit.emit("conjecture", params, rec.n, rec.lhs, rec.identity)
    if failures:
        first = failures[0]
        print(
            f"conjecture mismatch: {first.identity} at n={first.n}: "
            f"{first.lhs} != {first.rhs}",
            file=sys.stderr,
        )
        return 1
    return 0


# ---------------------------------------------------------------------------
# verification suites


class Mismatch(Exception):
    """First counterexample found by a verification check."""

    def __init__(self, check: str, detail: str) -> None:
        super().__init__(f"{check}: {detail}")
        self.check = check
        self.detail = detail


def _check_euler_oracle(bound: int, seed: int) -> int:
    cases = 0
    for n in range(1, min(bound, perms.ORACLE_SN_BOUND) + 1):
        for reverse in (False, True):
            expect = perms.oracle_alternating_count(n, reverse)
            got = exact.euler_number(n)
            if got != expect:
                raise Mismatch(
                    "euler-vs-oracle",
                    f"n={n} reverse={reverse}: formula {got} != oracle {expect}",
                )
            cases += 1
    return cases


def _check_shape_oracle(bound: int, seed: int) -> int:
    cases = 0
    for n in range(1, min(bound, 7) + 1):
        for lam in perms.partitions_of(n):
            shape = SkewShape(lam, ())
            for reverse in (False, True):
                comp = perms.alternating_composition(n, reverse)
                expect = perms.oracle_syt_descent_count(shape, comp)
                got = int(formulas.alt_shape(shape, reverse).value)
                if got != expect:
                    raise Mismatch(
                        "shape-vs-syt",
                        f"lambda={lam} reverse={reverse}: "
                        f"formula {got} != oracle {expect}",
                    )
                cases += 1
    return cases


def _check_cycle_oracle(bound: int, seed: int) -> int:
    cases = 0
    for n in range(1, min(bound, 7) + 1):
        for reverse in (False, True):
            table = perms.oracle_alternating_by_cycle_type(n, reverse)
            for rho in perms.partitions_of(n):
                expect = table.get(rho, 0)
                got = int(formulas.b_cycle_type(rho, reverse).value)
                if got != expect:
                    raise Mismatch(
                        "cycle-vs-oracle",
                        f"rho={rho} reverse={reverse}: "
                        f"formula {got} != oracle {expect}",
                    )
                cases += 1
    return cases


def _check_doubly_oracle(bound: int, seed: int) -> int:
    cases = 0
    for n in range(1, min(bound, 8) + 1):
        for variant in perms.DOUBLY_VARIANTS:
            expect = perms.oracle_doubly_alternating(n, variant)
            got = int(formulas.doubly_alternating(n, variant).value)
            if got != expect:
                raise Mismatch(
                    "doubly-vs-oracle",
                    f"n={n} variant={variant}: formula {got} != oracle {expect}",
                )
            cases += 1
    return cases


def _check_involutions_oracle(bound: int, seed: int) -> int:
    cases = 0
    top = min(bound, 10, perms.ORACLE_INVOLUTION_BOUND)
    for reverse in (False, True):
        series = formulas.involutions_series(top, reverse)
        for n in range(1, top + 1):
            expect = perms.oracle_alternating_involutions(n, reverse)
            if series[n] != expect:
                raise Mismatch(
                    "involutions-vs-oracle",
                    f"n={n} reverse={reverse}: "
                    f"series {series[n]} != oracle {expect}",
                )
            cases += 1
    return cases


def _check_fixed_oracle(bound: int, seed: int) -> int:
    cases = 0
    top = min(bound, 8)
    for reverse in (False, True):
        rows = formulas.fixed_point_series(top, reverse)
        for n in range(1, top + 1):
            expect = perms.oracle_alternating_fixed_points(n, reverse)
            for k in range(n + 1):
                if rows[n][k] != expect.get(k, 0):
                    raise Mismatch(
                        "fixed-vs-oracle",
                        f"n={n} k={k} reverse={reverse}: "
                        f"series {rows[n][k]} != oracle {expect.get(k, 0)}",
                    )
                cases += 1
    return cases


def _check_multiset_oracle(bound: int, seed: int) -> int:
    from itertools import combinations

    cases = 0
    for n in range(1, min(bound, 8) + 1):
        for alpha in perms.compositions_of(n):
            k = len(alpha)
            if k > 4:
                continue
            for size in range(k + 1):
                for subset in combinations(range(1, k + 1), size):
                    for reverse in (False, True):
                        expect = perms.oracle_multiset_alternating(
                            alpha, subset, reverse
                        )
                        got = int(
                            formulas.multiset_count(alpha, subset, reverse).value
                        )
                        if got != expect:
                            raise Mismatch(
                                "multiset-vs-oracle",
                                f"alpha={alpha} A={subset} reverse={reverse}: "
                                f"formula {got} != oracle {expect}",
                            )
                        cases += 1
    return cases


def _descent_pair_table(n: int) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    """One sweep of S_n tabulating (co(w), co(w^-1)) pairs."""
    table: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for w in permutations(range(1, n + 1)):
        alpha = perms.descent_composition(w)
        beta = perms.descent_composition(perms.inverse_perm(w))
        table[(alpha, beta)] = table.get((alpha, beta), 0) + 1
    return table


def _check_inner_oracle(bound: int, seed: int) -> int:
    cases = 0
    for n in range(1, min(bound, 6) + 1):
        table = _descent_pair_table(n)
        for alpha in perms.compositions_of(n):
            f = symfunc.skew_schur_in_p(perms.ribbon_shape(alpha))
            for beta in perms.compositions_of(n):
                g = symfunc.skew_schur_in_p(perms.ribbon_shape(beta))
                expect = table.get((alpha, beta), 0)
                got = symfunc.inner_product(f, g)
                if got != expect:
                    raise Mismatch(
                        "descent-pair-vs-oracle",
                        f"alpha={alpha} beta={beta}: "
                        f"inner product {got} != oracle {expect}",
                    )
                cases += 1
    return cases


def _check_doubly_routes(bound: int, seed: int) -> int:
    cases = 0
    for n in range(1, min(bound, 10) + 1):
        for variant in perms.DOUBLY_VARIANTS:
            formulas.doubly_alternating(n, variant)  # raises if routes disagree
            cases += 1
    return cases


def _check_staircase_routes(bound: int, seed: int) -> int:
    cases = 0
    for m in range(2, min(bound, 6) + 1):
        formulas.staircase(m)  # internal cross-check against alt_shape
        cases += 1
    return cases


def _check_square_routes(bound: int, seed: int) -> int:
    report = formulas.square(3)
    if report.value != 2:
        raise Mismatch("square-routes", f"square(3) = {report.value} != 2")
    cases = 1
    if bound >= 5:
        formulas.square(5)  # raises if product and determinant routes disagree
        cases += 1
    return cases


def _check_ncycle_routes(bound: int, seed: int) -> int:
    cases = 0
    for n in range(2, min(bound, 12) + 1):
        for reverse in (False, True):
            closed = formulas.b_ncycle_closed(n, reverse)
            direct = formulas.b_cycle_type((n,), reverse)
            if closed.value != direct.value:
                raise Mismatch(
                    "ncycle-vs-cycle",
                    f"n={n} reverse={reverse}: "
                    f"closed {closed.value} != direct {direct.value}",
                )
            cases += 1
    return cases


def _check_fm_routes(bound: int, seed: int) -> int:
    cases = 0
    top = min(bound, 10)
    for m in range(1, top + 1):
        for reverse in (False, True):
            series = formulas.fm_series(m, top // m, reverse)
            for r in range(1, len(series)):
                direct = int(formulas.b_cycle_type((m,) * r, reverse).value)
                if series[r] != direct:
                    raise Mismatch(
                        "fm-vs-cycle",
                        f"m={m} r={r} reverse={reverse}: "
                        f"series {series[r]} != direct {direct}",
                    )
                cases += 1
    return cases


def _check_indicator_routes(bound: int, seed: int) -> int:
    cases = 0
    top = min(bound, 10)
    for reverse in (False, True):
        coeffs = formulas.cycle_indicator_truncated(4, top, reverse)
        for lam, value in coeffs.items():
            direct = int(formulas.b_cycle_type(lam, reverse).value)
            if value != direct:
                raise Mismatch(
                    "indicator-vs-cycle",
                    f"lambda={lam} reverse={reverse}: "
                    f"indicator {value} != direct {direct}",
                )
            cases += 1
    return cases


def _check_boustrophedon(bound: int, seed: int) -> int:
    top = 30
    values = exact.euler_numbers(top)
    series = sec_plus_tan_integer_coefficients(top)
    for n in range(top + 1):
        if values[n] != series[n]:
            raise Mismatch(
                "boustrophedon-vs-sectan",
                f"n={n}: triangle {values[n]} != series {series[n]}",
            )
    return top + 1


def _check_umbral_identity(bound: int, seed: int) -> int:
    values = formulas.fm_series(1, 40)
    if values != [1, 1] + [0] * 39:
        first_bad = next(
            i for i, v in enumerate(values) if v != ([1, 1] + [0] * 39)[i]
        )
        raise Mismatch(
            "umbral-identity",
            f"coefficient {first_bad} is {values[first_bad]}",
        )
    return 41


def _check_f2_table(bound: int, seed: int) -> int:
    expect = [1, 1, 1, 2, 5, 17, 72, 367, 2179]
    values = formulas.fm_series(2, 8)
    if values != expect:
        raise Mismatch("f2-table", f"got {values}, want {expect}")
    return len(expect)


def _check_doubly_relations(bound: int, seed: int) -> int:
    cases = 0
    for n in range(1, 17, 2):
        lhs = formulas.doubly_alternating(n, "alt_ralt").value
        rhs = formulas.doubly_alternating(n, "alt_alt").value
        if lhs != rhs:
            raise Mismatch("doubly-odd-equality", f"n={n}: {lhs} != {rhs}")
        cases += 1
    even = {0: Fraction(1)}
    for n in range(2, 17, 2):
        even[n] = formulas.doubly_alternating(n, "alt_alt").value
    for n in range(2, 17, 2):
        lhs = formulas.doubly_alternating(n, "alt_ralt").value
        rhs = even[n] - even[n - 2]
        if lhs != rhs:
            raise Mismatch("doubly-even-difference", f"n={n}: {lhs} != {rhs}")
        cases += 1
    return cases


def _check_fixed_difference(bound: int, seed: int) -> int:
    cases = 0
    rows = formulas.fixed_point_series(16)
    for n in range(3, 17):
        if rows[n][0] != rows[n][1]:
            raise Mismatch(
                "derangement-equality",
                f"n={n}: d_0={rows[n][0]} != d_1={rows[n][1]}",
            )
        cases += 1
    if rows[2][0] != 1 or rows[2][1] != 0:
        raise Mismatch(
            "derangement-equality",
            f"n=2 boundary: expected d_0=1, d_1=0, got {rows[2][:2]}",
        )
    cases += 1
    rows = formulas.fixed_point_series(16, True)
    for n in range(2, 17):
        if rows[n][0] != rows[n][1]:
            raise Mismatch(
                "derangement-equality",
                f"n={n} reverse: d_0={rows[n][0]} != d_1={rows[n][1]}",
            )
        cases += 1
    return cases


def _check_conjecture(bound: int, seed: int) -> int:
    top = min(max(bound, 5), 12)
    records = formulas.conjecture_check(top)
    for rec in records:
        if not rec.equal:
            raise Mismatch(
                "conjecture",
                f"{rec.identity} at n={rec.n}: {rec.lhs} != {rec.rhs}",
            )
    return len(records)


def _check_foulkes(bound: int, seed: int) -> int:
    cases = 0
    for n in range(1, min(bound, 10) + 1):
        for primed in (False, True):
            shape = perms.tau_shape(n, primed)
            for mu in perms.partitions_of(n):
                closed = symfunc.foulkes_character(n, mu, primed)
                direct = symfunc.mn_character(shape, mu)
                if closed != direct:
                    raise Mismatch(
                        "foulkes-vs-mn",
                        f"n={n} mu={mu} primed={primed}: "
                        f"closed {closed} != border-strip {direct}",
                    )
                cases += 1
    return cases


def _check_gr_sum(bound: int, seed: int) -> int:
    cases = 0
    for n in range(1, min(bound, 8) + 1):
        acc: symfunc.SymP | None = None
        for lam in perms.partitions_of(n):
            term = symfunc.gr_L(lam)
            acc = term if acc is None else acc + term
        if acc != symfunc.p1_power(n):
            raise Mismatch("necklace-sum", f"n={n}: sum of L differs from p_1^{n}")
        cases += 1
    return cases


def _check_carlitz(bound: int, seed: int) -> int:
    if not symfunc.carlitz_identity_check(8, trials=3, seed=seed):
        raise Mismatch("carlitz", f"identity check failed at N=8 seed={seed}")
    return 3


_SUITES: dict[str, list[tuple[str, Callable[[int, int], int]]]] = {
    "oracle": [
        ("euler-vs-oracle", _check_euler_oracle),
        ("shape-vs-syt", _check_shape_oracle),
        ("cycle-vs-oracle", _check_cycle_oracle),
        ("doubly-vs-oracle", _check_doubly_oracle),
        ("involutions-vs-oracle", _check_involutions_oracle),
        ("fixed-vs-oracle", _check_fixed_oracle),
        ("multiset-vs-oracle", _check_multiset_oracle),
        ("descent-pair-vs-oracle", _check_inner_oracle),
    ],
    "routes": [
        ("doubly-routes", _check_doubly_routes),
        ("staircase-vs-shape", _check_staircase_routes),
        ("square-routes", _check_square_routes),
        ("ncycle-vs-cycle", _check_ncycle_routes),
        ("fm-vs-cycle", _check_fm_routes),
        ("indicator-vs-cycle", _check_indicator_routes),
    ],
    "identities": [
        ("boustrophedon-vs-sectan", _check_boustrophedon),
        ("umbral-identity", _check_umbral_identity),
        ("f2-table", _check_f2_table),
        ("doubly-relations", _check_doubly_relations),
        ("derangement-equality", _check_fixed_difference),
        ("conjecture", _check_conjecture),
        ("foulkes-vs-mn", _check_foulkes),
        ("necklace-sum", _check_gr_sum),
        ("carlitz", _check_carlitz),
    ],
}


def _cmd_verify(args: argparse.Namespace, emit: Emitter) -> int:
    suites = ["oracle", "routes", "identities"] if args.suite == "all" else [args.suite]
    params = {
        "suite": args.suite,
        "max-n": str(args.max_n),
        "seed": str(args.seed),
    }
    index = 0
    for suite in suites:
        for name, check in _SUITES[suite]:
            try:
                cases = check(args.max_n, args.seed)
            except OracleLimitError:
                raise
            except (Mismatch, ValueError) as exc:
                # A ValueError here is a route cross-check tripping inside
                # the library, which is a verification failure, not usage.
                prefix = "FAIL" if isinstance(exc, Mismatch) else f"FAIL {name}:"
                print(f"{prefix} {exc}", file=sys.stderr)
                return 1
            index += 1
            emit.emit("verify", params, index, cases, name)
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zigzag",
        description=(
            "Exact enumeration of alternating permutations refined by "
            "cycle type, shape, fixed points, and multiset content."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "csv"),
        default="json",
        help="output format (default: json lines)",
    )
    common.add_argument(
        "--order",
        type=_nonneg_arg,
        default=None,
        help="series truncation order for series-valued subcommands",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("euler", parents=[common], help="Euler numbers E_0..E_N")
    p.add_argument("--max", type=_nonneg_arg, required=True)
    p.set_defaults(handler=_cmd_euler)

    p = sub.add_parser(
        "shape", parents=[common], help="alternating SYT count for a (skew) shape"
    )
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--skew-inner", type=_partition_arg, default=())
    p.add_argument("--reverse", action="store_true")
    p.set_defaults(handler=_cmd_shape)

    p = sub.add_parser(
        "staircase", parents=[common], help="alternating SYT of staircase shape"
    )
    p.add_argument("--m", type=_nonneg_arg, required=True)
    p.set_defaults(handler=_cmd_staircase)

    p = sub.add_parser(
        "square", parents=[common], help="alternating SYT of a p x p square"
    )
    p.add_argument("--p", type=_nonneg_arg, required=True)
    p.set_defaults(handler=_cmd_square)

    p = sub.add_parser(
        "cycle", parents=[common], help="alternating permutations of a cycle type"
    )
    p.add_argument("--rho", type=_partition_arg, required=True)
    p.add_argument("--reverse", action="store_true")
    p.set_defaults(handler=_cmd_cycle)

    p = sub.add_parser(
        "ncycle", parents=[common], help="alternating n-cycles, closed form"
    )
    p.add_argument("--n", type=_nonneg_arg, required=True)
    p.add_argument("--reverse", action="store_true")
    p.set_defaults(handler=_cmd_ncycle)

    p = sub.add_parser(
        "fm",
        parents=[common],
        help="counts with all cycles of one length (series coefficients)",
    )
    p.add_argument("--m", type=_nonneg_arg, required=True)
    p.add_argument("--reverse", action="store_true")
    p.set_defaults(handler=_cmd_fm)

    p = sub.add_parser(
        "doubly",
        parents=[common],
        help="permutations alternating together with their inverse",
    )
    p.add_argument("--n", type=_nonneg_arg, required=True)
    p.add_argument(
        "--variant", choices=perms.DOUBLY_VARIANTS, default="alt_alt"
    )
    p.set_defaults(handler=_cmd_doubly)

    p = sub.add_parser(
        "involutions", parents=[common], help="alternating involutions c(0)..c(N)"
    )
    p.add_argument("--max", type=_nonneg_arg, required=True)
    p.add_argument("--reverse", action="store_true")
    p.set_defaults(handler=_cmd_involutions)

    p = sub.add_parser(
        "fixed",
        parents=[common],
        help="alternating permutations by number of fixed points",
    )
    p.add_argument("--max", type=_nonneg_arg, required=True)
    p.add_argument("--reverse", action="store_true")
    p.set_defaults(handler=_cmd_fixed)

    p = sub.add_parser(
        "asy",
        parents=[common],
        help="derangement-asymptotics coefficients as exact rationals",
    )
    p.add_argument("--kind", choices=("a", "b", "c"), required=True)
    p.add_argument("--terms", type=_nonneg_arg, required=True)
    p.set_defaults(handler=_cmd_asy)

    p = sub.add_parser(
        "multiset", parents=[common], help="alternating multiset permutations"
    )
    p.add_argument("--alpha", type=_composition_arg, required=True)
    p.add_argument("--A", dest="subset", type=_subset_arg, default=())
    p.add_argument("--reverse", action="store_true")
    p.set_defaults(handler=_cmd_multiset)

    p = sub.add_parser(
        "conjecture",
        parents=[common],
        help="top fixed-point counts against derangement numbers",
    )
    p.add_argument("--max", type=_nonneg_arg, required=True)
    p.set_defaults(handler=_cmd_conjecture)

    p = sub.add_parser(
        "verify", parents=[common], help="run verification suites"
    )
    p.add_argument(
        "--suite",
        choices=("all", "oracle", "routes", "identities"),
        default="all",
    )
    p.add_argument("--max-n", type=_nonneg_arg, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    emitter = Emitter(args.format, sys.stdout)
    try:
        return args.handler(args, emitter)
    except OracleLimitError as exc:
        print(f"error: {exc}; lower --max-n", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
