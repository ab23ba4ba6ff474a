"""Command-line front end: evaluate, compare, verify, catalog.

Exit codes: 0 success, 1 usage or domain error, 2 term budget exceeded,
3 unwritable output path, 4 identity verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import verify as verify_mod
from .errors import (
    AbscissaOutOfRange,
    BudgetExceeded,
    DegenerateAbscissa,
    PicubedError,
    PrecisionInsufficient,
    PrecisionOutOfRange,
    UnsupportedAbscissa,
)
from .numctx import fmt_sci, fmt_significant, mk_context
from .series import (
    CATALOG,
    DEFAULT_TERM_BUDGET,
    SeriesId,
    eval_pi3,
    euler_general,
)
from .verify import IdentityId, IdentityKind

_BUDGET_ENV = "PICUBED_TERM_BUDGET"

# Series evaluated by `compare` when no list is given: every catalog entry
# with a fixed abscissa that targets pi^3 itself.
_COMPARE_DEFAULT = [
    SeriesId.ALT_ODD_CUBES_CORRECTED,
    SeriesId.CENTRAL_BINOMIAL,
    SeriesId.PILEHROOD_APERY,
    SeriesId.SUN_HARMONIC,
    SeriesId.GOLDEN_FIFTH,
    SeriesId.GOLDEN_TENTH,
    SeriesId.QUARTER,
]

_CSV_HEADER = (
    "series_id,target,requested_digits,achieved_digits,terms_used,"
    "value_20,error_bound,uses_reference_pi"
)

_IDENTITY_CLASSES: dict[IdentityKind, str] = {
    IdentityKind.EQ1_AS_PRINTED: "alternating O(N^-3)",
    IdentityKind.EQ1_CORRECTED: "alternating O(N^-3)",
    IdentityKind.EQ2_CENTRAL_BINOMIAL: "geometric-ratio",
    IdentityKind.EQ4_SUN_HARMONIC: "geometric-ratio",
    IdentityKind.GUPTA_FAMILY: "alternating O(N^-3)",
    IdentityKind.PLOUFFE_PI: "exponential",
    IdentityKind.PLOUFFE_PI3: "exponential",
    IdentityKind.COEFF_FIFTH: "exact algebraic",
    IdentityKind.COEFF_TENTH: "exact algebraic",
}


@dataclass(frozen=True)
class ComparisonRow:
    series_id: str
    target: str
    requested_digits: int
    achieved_digits: int
    terms_used: int
    value_20: str
    error_bound: str
    uses_reference_pi: bool

    def csv(self) -> str:
        flag = "true" if self.uses_reference_pi else "false"
        return (
            f"{self.series_id},{self.target},{self.requested_digits},"
            f"{self.achieved_digits},{self.terms_used},{self.value_20},"
            f"{self.error_bound},{flag}"
        )


class _Parser(argparse.ArgumentParser):
    # Usage problems must exit 1, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="picubed", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one series to a digit target")
    group = p_eval.add_mutually_exclusive_group(required=True)
    group.add_argument("--series", help="catalog series name")
    group.add_argument("--x", help="abscissa p/q for the general generator")
    p_eval.add_argument("--digits", type=int, default=12)
    p_eval.add_argument("--precision-override", type=int, default=None,
                        help="working precision in decimal digits")
    p_eval.add_argument("--parallel", action="store_true")

    p_cmp = sub.add_parser("compare", help="convergence comparison table")
    p_cmp.add_argument("--digits", type=int, required=True)
    p_cmp.add_argument("--series", help="comma-separated series names")
    p_cmp.add_argument("--output", choices=["table", "csv"], default="table")
    p_cmp.add_argument("--out", help="write the report to this path")
    p_cmp.add_argument("--parallel", action="store_true")

    p_ver = sub.add_parser("verify", help="run identity checks")
    p_ver.add_argument("--identity", required=True,
                       help="identity name or 'all'")
    p_ver.add_argument("--digits", type=int, default=15)

    sub.add_parser("catalog", help="list every series and identity")
    return parser


def _term_budget() -> int:
    raw = os.environ.get(_BUDGET_ENV)
    if raw is None:
        return DEFAULT_TERM_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(_usage_error(f"{_BUDGET_ENV} must be an integer, got {raw!r}"))
    if value < 1:
        raise SystemExit(_usage_error(f"{_BUDGET_ENV} must be positive, got {value}"))
    return value


def _usage_error(message: str) -> int:
    sys.stderr.write(f"picubed: error: {message}\n")
    return 1


def _cmd_eval(args, budget: int) -> int:
    if args.digits < 1:
        return _usage_error("--digits must be >= 1")
    prec = args.precision_override
    ctx = mk_context(prec if prec is not None else args.digits + 10)
    if args.series is not None:
        try:
            sid = SeriesId(args.series)
        except ValueError:
            return _usage_error(f"unknown series {args.series!r}")
        if sid is SeriesId.EULER_BILATERAL:
            return _usage_error("euler-bilateral needs --x p/q")
        result = eval_pi3(sid, args.digits, ctx, term_budget=budget,
                          parallel=args.parallel)
        label = sid.value
    else:
        try:
            x = Fraction(args.x)
        except (ValueError, ZeroDivisionError):
            return _usage_error(f"cannot parse abscissa {args.x!r}")
        result = euler_general(x, args.digits, ctx, term_budget=budget,
                               parallel=args.parallel)
        label = f"euler-bilateral (x={x})"
    print(f"series: {label}")
    print(f"value: {fmt_significant(result.value, args.digits)}")
    print(f"terms_used: {result.terms_used}")
    print(f"error_bound: {fmt_sci(result.error_bound, 3)}")
    print(f"achieved_digits: {result.achieved_digits}")
    return 0


def _compare_rows(args, budget: int) -> list[ComparisonRow]:
    if args.series:
        ids = []
        for name in args.series.split(","):
            name = name.strip()
            try:
                sid = SeriesId(name)
            except ValueError:
                raise ValueError(f"unknown series {name!r}") from None
            if sid is SeriesId.EULER_BILATERAL:
                raise ValueError("euler-bilateral needs an abscissa; use eval --x")
            ids.append(sid)
    else:
        ids = list(_COMPARE_DEFAULT)
    ctx = mk_context(args.digits + 10)
    rows = []
    for sid in ids:
        sdef = CATALOG[sid]
        result = eval_pi3(sid, args.digits, ctx, term_budget=budget,
                          parallel=args.parallel)
        rows.append(
            ComparisonRow(
                series_id=sid.value,
                target=sdef.target,
                requested_digits=args.digits,
                achieved_digits=result.achieved_digits,
                terms_used=result.terms_used,
                value_20=fmt_significant(result.value, 20),
                error_bound=fmt_sci(result.error_bound, 3),
                uses_reference_pi=sdef.uses_reference_pi,
            )
        )
    rows.sort(key=lambda r: (r.terms_used, r.series_id))
    return rows


def _render_table(rows: list[ComparisonRow]) -> list[str]:
    headers = _CSV_HEADER.split(",")
    cells = [
        [
            r.series_id, r.target, str(r.requested_digits),
            str(r.achieved_digits), str(r.terms_used), r.value_20,
            r.error_bound, "true" if r.uses_reference_pi else "false",
        ]
        for r in rows
    ]
    widths = [max(len(h), *(len(c[i]) for c in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for c in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(c, widths)).rstrip())
    return lines


def _cmd_compare(args, budget: int) -> int:
    if args.digits < 1:
        return _usage_error("--digits must be >= 1")
    try:
        rows = _compare_rows(args, budget)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.output == "csv":
        lines = [_CSV_HEADER] + [r.csv() for r in rows]
    else:
        lines = _render_table(rows)
    text = "\n".join(lines) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"picubed: error: cannot write {args.out}: {exc}\n")
            return 3
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args, budget: int) -> int:
    if args.digits < 1:
        return _usage_error("--digits must be >= 1")
    if args.identity == "all":
        ids = verify_mod.default_identity_suite()
    else:
        try:
            ids = [IdentityId.parse(args.identity)]
        except ValueError as exc:
            return _usage_error(str(exc))
    ctx = mk_context(args.digits + 12)
    failures = 0
    for ident in ids:
        report = verify_mod.verify_identity(ident, args.digits, ctx,
                                            term_budget=budget)
        if report.passed:
            status = "PASS"
        elif ident.kind is IdentityKind.EQ1_AS_PRINTED:
            status = "expected-fail (paper typo)"
        else:
            status = "FAIL"
            failures += 1
        print(f"{ident.name:<22} {status:<28} "
              f"diff={fmt_sci(report.abs_diff, 3)} terms={report.terms_used}")
    return 4 if failures else 0


def _cmd_catalog() -> int:
    print(f"{'kind':<9} {'name':<26} {'equation':<26} {'class':<20} uses_reference_pi")
    for sid, sdef in CATALOG.items():
        flag = "true" if sdef.uses_reference_pi else "false"
        print(f"{'series':<9} {sid.value:<26} {sdef.equation:<26} "
              f"{sdef.convergence_class:<20} {flag}")
    for kind in IdentityKind:
        name = "gupta-k" if kind is IdentityKind.GUPTA_FAMILY else kind.value
        flag = "true" if verify_mod.identity_uses_reference_pi(kind) else "false"
        print(f"{'identity':<9} {name:<26} {verify_mod.identity_equation(kind):<26} "
              f"{_IDENTITY_CLASSES[kind]:<20} {flag}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        budget = _term_budget()
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "eval":
            return _cmd_eval(args, budget)
        if args.command == "compare":
            return _cmd_compare(args, budget)
        if args.command == "verify":
            return _cmd_verify(args, budget)
        return _cmd_catalog()
    except BudgetExceeded as exc:
        sys.stderr.write(f"picubed: error: {exc}\n")
        if exc.hint:
            sys.stderr.write(
                f"picubed: hint: try --series {exc.hint} (geometric convergence)\n"
            )
        return 2
    except (
        DegenerateAbscissa,
        AbscissaOutOfRange,
        UnsupportedAbscissa,
        PrecisionOutOfRange,
        PrecisionInsufficient,
    ) as exc:
        sys.stderr.write(f"picubed: error: {exc}\n")
        return 1
    except PicubedError as exc:  # pragma: no cover - defensive
        sys.stderr.write(f"picubed: error: {exc}\n")
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
