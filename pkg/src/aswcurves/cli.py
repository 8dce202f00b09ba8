"""Command-line front end for curve analysis, search, and verification.

Subcommands: `analyze` (full report for one curve), `twists`
(per-coefficient class table of a family), `construct` (certified
curves from the closed-form constructions), `period` (first
bound-attaining extension degree over F_p), `verify` (dual-route
consistency audit), `search` (exhaustive sweep for bound-attaining
curves), and `hd-check` (full-field character sums against the closed
form).

Structured reports are JSON; tables (twists, search, hd-check) render
as CSV with --format csv.  Exit codes are stable: 0 success, 1 domain
error, 2 parse error, 3 ambient field too small, 4 oracle mismatch,
5 cap or budget exceeded.  Runs degrade to formula-only output, with a
warning record, when a direct count would exceed the budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from math import isqrt
from pathlib import Path

from .curves import (
    CurveSpec,
    DEFAULT_BUDGET,
    brute_count,
    classify_twists,
    extremal_from_subspace,
    format_curve_spec,
    hermitian_twist,
    l_polynomial,
    palindromic_family,
    parse_curve_spec,
    period_parity,
    presentation_conditions,
)
from .errors import (
    AmbientTooSmall,
    BudgetExceeded,
    CapExceeded,
    Char2Error,
    NonRealCount,
    NoSolution,
    OracleMismatch,
    PairingConditionFailed,
    ParseError,
)
from .gf2field import MAX_DEGREE, Fp2Subspace, parse_field_spec
from .witt2 import GaussInt, hd_sum

__all__ = ["RunConfig", "curve_report", "main"]


@dataclass(frozen=True)
class RunConfig:
    """Shared run settings collected from the command line."""

    budget: int = DEFAULT_BUDGET
    threads: int = 1
    format: str = "json"
    output: str = "-"
    field_spec: str | None = None


@dataclass(frozen=True)
class _Output:
    """A JSON-ready payload with an optional CSV table rendering."""

    data: object
    table: tuple[tuple[str, ...], list[list[object]]] | None = None


# ---------------------------------------------------------------------------
# small parsing helpers

_HEX_ITEM = re.compile(r"^(?:0[xX])?[0-9a-fA-F]+$")
_PRIME_CURVE = re.compile(r"^\s*p\s*=\s*(\d+)\s*;\s*R\s*=\s*(.+?)\s*$")


def _hex_value(text: str, order: int) -> int:
    item = text.strip()
    if not _HEX_ITEM.match(item):
        raise ParseError(f"{item!r} is not a hex literal")
    value = int(item, 16)
    if value >= order:
        raise ParseError(f"{item} does not fit in the field")
    return value


def _hex_list(text: str, order: int) -> list[int]:
    return [_hex_value(part, order) for part in text.split(",")]


def _parse_extensions(text: str | None) -> list[int]:
    if text is None or not text.strip():
        return []
    degrees = []
    for part in text.split(","):
        try:
            m = int(part)
        except ValueError as exc:
            raise ParseError(f"extension degree {part!r} is not an integer") from exc
        if m < 1:
            raise ParseError(f"extension degree {m} must be >= 1")
        if m not in degrees:
            degrees.append(m)
    return degrees


def _parse_prime_curve(text: str) -> CurveSpec:
    """Parse 'p=<2^k>; R=<hex>,...' (or a q= form declared over F_p)."""
    m = _PRIME_CURVE.match(text)
    if m:
        p = int(m.group(1))
        if p < 2 or p & (p - 1):
            raise ParseError(f"base order {p} is not a power of 2")
        text = f"q=F{p}:p={p}; R={m.group(2)}"
    spec = parse_curve_spec(text)
    if spec.q_deg != spec.ctx.p_log:
        raise ParseError("the period needs coefficients declared over F_p itself")
    return spec


# ---------------------------------------------------------------------------
# report assembly

_CLASS_SHORT = {"maximal": "max", "minimal": "min", "neutral": "zero"}


def _weil_check(spec: CurveSpec, m: int, count: int) -> None:
    """Reject counts outside the Weil bound; they cannot be correct."""
    deviation = count - spec.q**m - 1
    bound = 4 * spec.genus**2 * spec.q**m
    if deviation * deviation > bound:
        raise OracleMismatch(
            f"count {count} over extension {m} of {format_curve_spec(spec)} "
            f"violates the Weil bound"
        )


def _count_label(spec: CurveSpec, count: int) -> str:
    """Class label of a curve from its point count over F_q."""
    deviation = count - spec.q - 1
    if deviation == 0:
        return "neutral"
    root = isqrt(spec.q)
    if root * root == spec.q and abs(deviation) == 2 * spec.genus * root:
        return "maximal" if deviation > 0 else "minimal"
    return "interior"


def _base_period(spec: CurveSpec, budget: int, warnings: list[str]) -> list[int] | None:
    """Period of the coefficient tuple over F_p, when it lives there."""
    ctx = spec.ctx
    if not all(ctx.in_subfield(c, ctx.p_log) for c in spec.coeffs):
        return None
    base = CurveSpec(ctx, ctx.p_log, spec.coeffs)
    try:
        pp = period_parity(base, budget=budget)
        return [pp.mu, pp.delta]
    except (CapExceeded, AmbientTooSmall) as exc:
        warnings.append(f"period search abandoned: {exc}")
        return None


def curve_report(spec: CurveSpec, extensions: list[int], cfg: RunConfig) -> dict:
    """Full analysis record for one curve: flags, eigenvalues, counts.

    Counts come from the eigenvalue route whenever a presentation
    witness exists and are confirmed by direct enumeration within the
    budget; without a witness they fall back to enumeration alone.
    Disagreement between the two routes raises OracleMismatch.
    """
    warnings: list[str] = []
    verdicts = None
    lp = None
    try:
        report = presentation_conditions(spec)
        verdicts = {
            "witnessed": report.witnessed,
            "extension_trace_vanishes": report.extension_trace_vanishes,
            "radical_trace_vanishes": report.radical_trace_vanishes,
            "lagrangian_in_subfield": report.lagrangian_in_subfield,
        }
        if report.witness is not None:
            fd, t = report.witness
            lp = l_polynomial(fd, t)
    except AmbientTooSmall as exc:
        warnings.append(f"presentation conditions unavailable: {exc}")

    counts: dict[str, int] = {}
    for m in extensions:
        size = spec.q**m
        formula = lp.point_count(m) if lp is not None else None
        counted = None
        if size <= cfg.budget:
            counted = brute_count(spec, m, budget=cfg.budget, threads=cfg.threads)
        elif formula is None:
            warnings.append(
                f"extension {m}: size {size} over budget and no eigenvalue route"
            )
            continue
        else:
            warnings.append(
                f"extension {m}: size {size} over budget; eigenvalue route only"
            )
        if formula is not None and counted is not None and formula != counted:
            raise OracleMismatch(
                f"eigenvalue count {formula} != direct count {counted} "
                f"over extension {m} of {format_curve_spec(spec)}"
            )
        value = formula if formula is not None else counted
        _weil_check(spec, m, value)
        counts[str(m)] = value

    twist_class = None
    if lp is not None:
        twist_class = _count_label(spec, lp.point_count(1))
    elif spec.q <= cfg.budget:
        twist_class = _count_label(
            spec, brute_count(spec, 1, budget=cfg.budget, threads=cfg.threads)
        )
    else:
        warnings.append("class unavailable: no eigenvalue route and field over budget")

    return {
        "curve": format_curve_spec(spec),
        "genus": spec.genus,
        "L_roots": lp.format_roots() if lp is not None else None,
        "counts": counts,
        "twist_class": twist_class,
        "verdicts": verdicts,
        "period_parity": _base_period(spec, cfg.budget, warnings),
        "warnings": warnings,
    }


# ---------------------------------------------------------------------------
# subcommands

def cmd_analyze(args: argparse.Namespace, cfg: RunConfig) -> _Output:
    spec = parse_curve_spec(args.curve)
    extensions = _parse_extensions(args.extensions)
    return _Output(curve_report(spec, extensions, cfg))


def cmd_twists(args: argparse.Namespace, cfg: RunConfig) -> _Output:
    head = parse_curve_spec(f"{args.head},0")  # the linear term is implied
    if not head.is_head:
        raise ParseError("the twist table needs a head curve (zero linear term)")
    warnings: list[str] = []
    counting = head.q <= cfg.budget
    if not counting:
        warnings.append(
            f"field size {head.q} over budget {cfg.budget}; "
            f"classes from the eigenvalue route only"
        )
    tc = classify_twists(head, budget=cfg.budget, counting=counting)
    root = isqrt(head.q)
    gap = 2 * head.genus * root
    deviations = {"max": gap, "min": -gap, "zero": 0}
    rows = []
    for a in range(head.q):
        short = _CLASS_SHORT[tc.twist_class(a)]
        rows.append([f"{a:x}", short, head.q + 1 + deviations[short]])
    data = {
        "head": format_curve_spec(head),
        "rows": [{"a": a, "class": c, "count": n} for a, c, n in rows],
        "counting_checked": tc.counting_checked,
        "warnings": warnings,
    }
    return _Output(data, (("a", "class", "count"), rows))


def cmd_construct(args: argparse.Namespace, cfg: RunConfig) -> _Output:
    ctx = parse_field_spec(args.field)
    if args.family == "recipe":
        if args.space is None:
            raise ParseError("--family recipe needs --space")
        space = Fp2Subspace.from_vectors(ctx, _hex_list(args.space, ctx.order))
        if args.t is not None:
            t = _hex_value(args.t, ctx.order)
            rec = extremal_from_subspace(space, t, ctx.n, budget=cfg.budget)
        else:
            rec = _first_recipe(space, ctx.n, cfg.budget)
        data = {
            "family": "recipe",
            "curve": format_curve_spec(rec.curve),
            "parameter": f"{rec.parameter:x}",
            "class": "maximal" if rec.is_maximal else "minimal",
            "L_roots": rec.lpoly.format_roots(),
            "counting_checked": rec.counting_checked,
        }
    elif args.family == "hermitian":
        if args.a is None:
            raise ParseError("--family hermitian needs --a")
        a = _hex_value(args.a, ctx.order)
        q_deg = args.q_deg if args.q_deg is not None else ctx.n
        rep = hermitian_twist(ctx, a, q_deg, budget=cfg.budget)
        if not rep.is_extremal:
            label = "interior"
        else:
            label = "maximal" if rep.is_maximal else "minimal"
        data = {
            "family": "hermitian",
            "curve": format_curve_spec(rep.curve),
            "relative_trace": f"{rep.relative_trace:x}",
            "class": label,
            "eigenvalues": [str(z) for z in rep.eigenvalues],
            "counting_checked": rep.counting_checked,
        }
    else:
        if args.poly is None:
            raise ParseError("--family palindromic needs --poly")
        f_coeffs = _hex_list(args.poly, 1 << ctx.p_log)
        counting = (1 << ctx.n) <= cfg.budget
        fam = palindromic_family(
            ctx, ctx.n, tuple(f_coeffs), budget=cfg.budget, counting=counting
        )
        tc = fam.classification
        data = {
            "family": "palindromic",
            "head": format_curve_spec(tc.head),
            "pivot": f"{fam.pivot:x}",
            "order": fam.order,
            "tower": fam.power,
            "maximal_twists": [f"{a:x}" for a in tc.maximal_twists],
            "minimal_twists": [f"{a:x}" for a in tc.minimal_twists],
            "counting_checked": tc.counting_checked,
        }
    return _Output(data)


def _first_recipe(space: Fp2Subspace, q_deg: int, budget: int):
    """The recipe at the least admissible parameter, in bit order."""
    for t in sorted(space.ctx.subfield_elements(q_deg)):
        try:
            return extremal_from_subspace(space, t, q_deg, budget=budget)
        except PairingConditionFailed:
            continue
    raise NoSolution("no parameter matches the quadratic character on the subspace")


def cmd_period(args: argparse.Namespace, cfg: RunConfig) -> _Output:
    spec = _parse_prime_curve(args.curve)
    pp = period_parity(spec, cap=args.cap, budget=cfg.budget)
    return _Output(
        {"curve": format_curve_spec(spec), "mu": pp.mu, "delta": pp.delta}
    )


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> _Output:
    spec = parse_curve_spec(args.curve)
    requested = _parse_extensions(args.extensions)
    if not requested:
        m, requested = 1, []
        while spec.q**m <= cfg.budget and m <= 4:
            requested.append(m)
            m += 1
    checks: dict[str, object] = {}
    warnings: list[str] = []

    lp = None
    try:
        report = presentation_conditions(spec)
        checks["flags"] = list(report.flags)
        checks["flags_agree"] = len(set(report.flags)) == 1
        if report.witness is not None:
            fd, t = report.witness
            lp = l_polynomial(fd, t)
            checks["witness_degree_matches_genus"] = lp.degree == 2 * spec.genus
    except AmbientTooSmall as exc:
        warnings.append(f"presentation conditions unavailable: {exc}")

    counts: dict[str, int] = {}
    compared = 0
    for m in requested:
        size = spec.q**m
        formula = lp.point_count(m) if lp is not None else None
        counted = None
        if size <= cfg.budget:
            counted = brute_count(spec, m, budget=cfg.budget, threads=cfg.threads)
        if formula is None and counted is None:
            warnings.append(f"extension {m}: no route within budget")
            continue
        if formula is not None and counted is not None:
            if formula != counted:
                raise OracleMismatch(
                    f"eigenvalue count {formula} != direct count {counted} "
                    f"over extension {m} of {format_curve_spec(spec)}"
                )
            compared += 1
        value = formula if formula is not None else counted
        _weil_check(spec, m, value)
        counts[str(m)] = value
    checks["routes_compared"] = compared
    checks["weil_bound_checked"] = len(counts)

    return _Output(
        {
            "curve": format_curve_spec(spec),
            "checks": checks,
            "counts": counts,
            "warnings": warnings,
            "ok": True,
        }
    )


def _rescalings(spec: CurveSpec) -> "list[tuple[int, ...]]":
    """Coefficient tuples of every substitution x -> a*x of the curve."""
    ctx = spec.ctx
    out = []
    for a in sorted(ctx.subfield_elements(spec.q_deg)):
        if a == 0:
            continue
        out.append(
            tuple(
                ctx.mul(c, ctx.pow(a, 1 + ctx.p**i))
                for i, c in enumerate(spec.coeffs)
            )
        )
    return out


def cmd_search(args: argparse.Namespace, cfg: RunConfig) -> _Output:
    ctx = parse_field_spec(args.field)
    q_deg = ctx.n
    q = 1 << q_deg
    if q > cfg.budget:
        raise BudgetExceeded(
            f"searching F_{q} needs direct counts of size {q} > budget {cfg.budget}"
        )
    root = isqrt(q)
    square = root * root == q
    results = []
    rows = []
    for e in range(1, args.e_max + 1):
        for packed in range(q**e):
            lower, rest = [], packed
            for _ in range(e):
                lower.append(rest % q)
                rest //= q
            for lead in range(1, q):
                coeffs = (*lower, lead)
                spec = CurveSpec(ctx, q_deg, coeffs)
                if min(_rescalings(spec)) != coeffs:
                    continue  # a smaller representative covers this class
                if not square:
                    continue  # the bound is unattainable over this field
                count = brute_count(spec, 1, budget=cfg.budget, threads=cfg.threads)
                deviation = count - q - 1
                if abs(deviation) != 2 * spec.genus * root:
                    continue
                label = "maximal" if deviation > 0 else "minimal"
                if args.predicate != "extremal" and args.predicate != label:
                    continue
                _formula_cross_check(spec, count)
                text = format_curve_spec(spec)
                results.append({"curve": text, "count": count, "class": label})
                rows.append([text, count, label])
    return _Output(results, (("curve", "count", "class"), rows))


def _formula_cross_check(spec: CurveSpec, count: int) -> None:
    """Replay a count through the eigenvalue route when it exists."""
    if 2 * spec.q_deg > MAX_DEGREE:
        return
    report = presentation_conditions(spec)
    if report.witness is None:
        raise OracleMismatch(
            f"{format_curve_spec(spec)} meets the bound without a presentation"
        )
    fd, t = report.witness
    formula = l_polynomial(fd, t).point_count(1)
    if formula != count:
        raise OracleMismatch(
            f"eigenvalue count {formula} != direct count {count} "
            f"for {format_curve_spec(spec)}"
        )


def cmd_hd_check(args: argparse.Namespace, cfg: RunConfig) -> _Output:
    records = []
    rows = []
    base = GaussInt(-1, -1)
    for s in range(1, args.cap + 1):
        if s > MAX_DEGREE:
            raise AmbientTooSmall(f"degree {s} exceeds the ambient cap {MAX_DEGREE}")
        if (1 << s) > cfg.budget:
            raise BudgetExceeded(
                f"summing over F_{{2^{s}}} exceeds the budget {cfg.budget}"
            )
        total = hd_sum(s)
        closed = base**s
        if total != closed:
            raise OracleMismatch(
                f"degree {s}: enumerated sum {total} != closed form {closed}"
            )
        records.append({"degree": s, "sum": str(total), "closed_form": str(closed)})
        rows.append([s, str(total), str(closed)])
    return _Output(
        {"max_degree": args.cap, "rows": records},
        (("degree", "sum", "closed_form"), rows),
    )


# ---------------------------------------------------------------------------
# wiring

def _emit(out: _Output, cfg: RunConfig) -> None:
    if cfg.format == "csv":
        if out.table is None:
            raise ParseError("this subcommand has no CSV rendering; use json")
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(out.table[0])
        writer.writerows(out.table[1])
        text = buffer.getvalue()
    else:
        text = json.dumps(out.data, indent=2) + "\n"
    if cfg.output == "-":
        sys.stdout.write(text)
    else:
        Path(cfg.output).write_text(text)


def _fail(exc: Char2Error, code: int) -> int:
    record = {"error": type(exc).__name__, "detail": str(exc)}
    sys.stdout.write(json.dumps(record, indent=2) + "\n")
    return code


def _add_common(
    parser: argparse.ArgumentParser, fmt: str = "json", cap: int | None = None
) -> None:
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="largest field size enumerated directly",
    )
    parser.add_argument("--threads", type=int, default=1, help="counting threads")
    parser.add_argument(
        "--format", choices=("json", "csv"), default=fmt, help="output rendering"
    )
    parser.add_argument("--output", default="-", help="output path, - for stdout")
    if cap is not None:
        parser.add_argument(
            "--cap", type=int, default=cap, help="largest degree searched"
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aswcurves",
        description="Analysis of y^p - y = x*R(x) over binary fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one curve")
    p.add_argument("curve", help="curve text, e.g. 'q=F4; R=1,0'")
    p.add_argument(
        "--extensions", default="1", help="comma list of degrees to count over"
    )
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("twists", help="class table of a head curve's family")
    p.add_argument(
        "head",
        help="head coefficients a_e..a_1, zero linear term implied, "
        "e.g. 'q=F4; R=1'",
    )
    _add_common(p, fmt="csv")
    p.set_defaults(func=cmd_twists)

    p = sub.add_parser("construct", help="certified curves from closed forms")
    p.add_argument(
        "--family", required=True, choices=("recipe", "hermitian", "palindromic")
    )
    p.add_argument("--field", required=True, help="field spec, e.g. F16 or F16:p=4")
    p.add_argument("--space", help="recipe: comma hex F_p-basis of the subspace")
    p.add_argument("--t", help="recipe: twist parameter (default: least admissible)")
    p.add_argument("--a", help="hermitian: linear coefficient")
    p.add_argument("--q-deg", type=int, dest="q_deg", help="hermitian: degree of F_q")
    p.add_argument("--poly", help="palindromic: comma hex coefficients of f")
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("period", help="first bound-attaining extension over F_p")
    p.add_argument("curve", help="curve text, e.g. 'p=2; R=1,0'")
    _add_common(p, cap=16)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("verify", help="dual-route consistency audit for a curve")
    p.add_argument("curve", help="curve text, e.g. 'q=F4; R=1,0'")
    p.add_argument(
        "--extensions", default="", help="degrees to audit (default: within budget)"
    )
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="sweep a field for bound-attaining curves")
    p.add_argument("--field", required=True, help="field spec, e.g. F4")
    p.add_argument("--e-max", type=int, default=1, dest="e_max")
    p.add_argument(
        "--predicate",
        required=True,
        choices=("maximal", "minimal", "extremal"),
    )
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("hd-check", help="character sums against the closed form")
    _add_common(p, cap=16)
    p.set_defaults(func=cmd_hd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = RunConfig(
        budget=args.budget,
        threads=args.threads,
        format=args.format,
        output=args.output,
        field_spec=getattr(args, "field", None),
    )
    try:
        out = args.func(args, cfg)
        _emit(out, cfg)
    except ParseError as exc:
        return _fail(exc, 2)
    except AmbientTooSmall as exc:
        return _fail(exc, 3)
    except (OracleMismatch, NonRealCount) as exc:
        return _fail(exc, 4)
    except (CapExceeded, BudgetExceeded) as exc:
        return _fail(exc, 5)
    except Char2Error as exc:
        return _fail(exc, 1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
