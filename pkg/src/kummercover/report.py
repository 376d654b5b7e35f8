"""Aggregated analysis of one configuration and its renderings (json/csv/md)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .ball_quotient import BallQuotientVerdict, CandidateFamily, CurveCensus, ball_quotient_verdict, curve_census
from .chern import (
    BmyScan,
    QuadraticInvariant,
    bmy_scan,
    c1sq_poly,
    c2_poly,
    chern_slope,
    format_decimal,
    gamma,
    gamma_note,
    hirzebruch_poly,
)
from .config import ConfigCombinatorics, FVector, ValidationReport, f_vector, to_document, validate
from .errors import GammaUndefinedError, ZeroDenominatorError
from .inequalities import InequalityReport, run_all

VERDICT_EXPONENTS = (2, 3, 5)
CENSUS_EXPONENTS = (2, 3)


@dataclass(frozen=True)
class TableRow:
    n: int
    c1sq: int
    c2: int
    slope: Fraction | None
    h: int
    h_scaled: int


@dataclass
class AnalysisReport:
    configuration: ConfigCombinatorics
    validation: ValidationReport
    f_vector: FVector | None = None
    c2: QuadraticInvariant | None = None
    c1sq: QuadraticInvariant | None = None
    hirzebruch: QuadraticInvariant | None = None
    rows: list[TableRow] = field(default_factory=list)
    gamma: Fraction | None = None
    gamma_note: str | None = None
    bmy: BmyScan | None = None
    inequalities: list[InequalityReport] = field(default_factory=list)
    verdicts: list[BallQuotientVerdict] = field(default_factory=list)
    censuses: list[CurveCensus] = field(default_factory=list)

    @property
    def undefined_quantities(self) -> bool:
        return self.validation.valid and (self.gamma is None or any(r.slope is None for r in self.rows))


def build_report(cfg: ConfigCombinatorics, n_range: tuple[int, int] = (2, 5)) -> AnalysisReport:
    report = AnalysisReport(cfg, validate(cfg))
    if not report.validation.valid:
        return report
    lo, hi = n_range
    report.f_vector = f_vector(cfg)
    report.c2, report.c1sq, report.hirzebruch = c2_poly(cfg), c1sq_poly(cfg), hirzebruch_poly(cfg)
    for n in range(lo, hi + 1):
        c1sq, c2 = report.c1sq.scaled(n), report.c2.scaled(n)
        try:
            slope = chern_slope(cfg, n)
        except ZeroDenominatorError:
            slope = None
        report.rows.append(TableRow(n, c1sq, c2, slope, report.hirzebruch(n), 3 * c2 - c1sq))
    try:
        report.gamma = gamma(cfg)
        report.gamma_note = gamma_note(cfg)
    except GammaUndefinedError as exc:
        report.gamma_note = str(exc)
    report.bmy = bmy_scan(cfg, max(hi, 2))
    report.inequalities = run_all(cfg)
    report.verdicts = [ball_quotient_verdict(cfg, n) for n in VERDICT_EXPONENTS]
    report.censuses = [curve_census(cfg, n) for n in CENSUS_EXPONENTS]
    return report


# -- json ---------------------------------------------------------------------


def rational(x: Fraction | int | None):
    if x is None:
        return None
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def _poly(q: QuadraticInvariant) -> dict:
    return {"a2": q.a2, "a1": q.a1, "a0": q.a0, "scale_exponent": q.scale_exponent}


def report_to_json(report: AnalysisReport) -> dict:
    out: dict = {
        "configuration": to_document(report.configuration),
        "validation": {
            "valid": report.validation.valid,
            "violations": [
                {"rule": v.rule, "message": v.message, "values": v.values} for v in report.validation.violations
            ],
        },
    }
    if not report.validation.valid:
        return out
    out["f_vector"] = {"f0": report.f_vector.f0, "f1": report.f_vector.f1}
    out["polynomials"] = {
        "c2": _poly(report.c2),
        "c1sq": _poly(report.c1sq),
        "hirzebruch": _poly(report.hirzebruch),
    }
    out["table"] = [
        {"n": r.n, "c1sq": r.c1sq, "c2": r.c2, "slope": rational(r.slope), "H": r.h, "H_scaled": r.h_scaled}
        for r in report.rows
    ]
    out["gamma"] = rational(report.gamma)
    out["gamma_note"] = report.gamma_note
    out["bmy_scan"] = {
        "values": [{"n": n, "H": h} for n, h in report.bmy.values],
        "argmin": report.bmy.argmin,
        "minimum": report.bmy.minimum,
        "flag": report.bmy.flag,
    }
    out["inequalities"] = [
        {
            "rule_id": i.rule_id,
            "applicable": i.applicable,
            "lhs": rational(i.lhs),
            "relation": i.relation,
            "rhs": rational(i.rhs),
            "holds": i.holds,
            "slack": rational(i.slack),
            "note": i.note,
        }
        for i in report.inequalities
    ]
    out["ball_quotient"] = [{"n": v.n, "verdict": v.verdict, "reasons": list(v.reasons)} for v in report.verdicts]
    out["curve_census"] = [
        {
            "n": c.n,
            "rational_curves": c.rational_curve_count,
            "elliptic_curves": c.elliptic_curve_count,
            "self_intersections": c.self_intersections,
            "miyaoka_sakai_bound": rational(c.miyaoka_sakai_bound),
        }
        for c in report.censuses
    ]
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- csv ----------------------------------------------------------------------


def _csv_text(sections: list[tuple[str, list[str], list[list]]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for i, (title, header, rows) in enumerate(sections):
        if i:
            buf.write("\n")
        buf.write(f"# {title}\n")
        writer.writerow(header)
        writer.writerows(rows)
    return buf.getvalue()


def _frac_cells(x: Fraction | None, precision: int) -> list:
    if x is None:
        return ["", "", ""]
    return [x.numerator, x.denominator, format_decimal(x, precision)]


def report_to_csv(report: AnalysisReport, precision: int = 4) -> str:
    cfg = report.configuration
    sections = [
        (
            "configuration",
            ["name", "degree", "curves", "points", "valid"],
            [[cfg.name, cfg.degree, cfg.curve_count,
              ";".join(f"{r}:{c}" for r, c in cfg.point_counts.items()), report.validation.valid]],
        ),
        (
            "violations",
            ["rule", "message"],
            [[v.rule, v.message] for v in report.validation.violations],
        ),
    ]
    if report.validation.valid:
        sections.append((
            "polynomials",
            ["invariant", "a2", "a1", "a0", "scale_exponent"],
            [[name, q.a2, q.a1, q.a0, q.scale_exponent]
             for name, q in (("c2", report.c2), ("c1sq", report.c1sq), ("hirzebruch", report.hirzebruch))],
        ))
        sections.append((
            "table",
            ["n", "c1sq", "c2", "slope_num", "slope_den", "slope", "H", "H_scaled"],
            [[r.n, r.c1sq, r.c2, *_frac_cells(r.slope, precision), r.h, r.h_scaled] for r in report.rows],
        ))
        sections.append((
            "gamma",
            ["gamma_num", "gamma_den", "gamma", "note"],
            [[*_frac_cells(report.gamma, precision), report.gamma_note or ""]],
        ))
        sections.append((
            "inequalities",
            ["rule_id", "applicable", "lhs_num", "lhs_den", "rhs_num", "rhs_den", "relation", "holds", "slack_num", "slack_den", "note"],
            [[i.rule_id, i.applicable, i.lhs.numerator, i.lhs.denominator, i.rhs.numerator, i.rhs.denominator,
              i.relation, i.holds, i.slack.numerator, i.slack.denominator, i.note] for i in report.inequalities],
        ))
        sections.append((
            "ball_quotient",
            ["n", "verdict", "reasons"],
            [[v.n, v.verdict, " | ".join(v.reasons)] for v in report.verdicts],
        ))
        sections.append((
            "curve_census",
            ["n", "rational_curves", "elliptic_curves", "miyaoka_sakai_bound"],
            [[c.n, c.rational_curve_count, c.elliptic_curve_count, str(c.miyaoka_sakai_bound)] for c in report.censuses],
        ))
    return _csv_text(sections)


# -- markdown -----------------------------------------------------------------


def _md_table(header: list[str], rows: list[list]) -> list[str]:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return lines


def _md_rational(x: Fraction | None, precision: int) -> str:
    if x is None:
        return "undefined"
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} ({format_decimal(x, precision)})"


def _quadratic_text(a2: int, a1: int, a0: int) -> str:
    text = f"{a2} n^2"
    for c, mono in ((a1, " n"), (a0, "")):
        text += f" {'-' if c < 0 else '+'} {abs(c)}{mono}"
    return text


def _md_poly(q: QuadraticInvariant) -> str:
    return f"n^{q.scale_exponent} * ({_quadratic_text(*q.coefficients)})"


def report_to_md(report: AnalysisReport, precision: int = 4) -> str:
    cfg = report.configuration
    pts = ", ".join(f"t_{r} = {c}" for r, c in cfg.point_counts.items()) or "no points"
    title = cfg.name or "configuration"
    lines = [f"# {title}", "", f"d = {cfg.degree}, tau = {cfg.curve_count}; {pts}", ""]
    if not report.validation.valid:
        lines.append("**Invalid configuration**")
        lines.append("")
        lines += [f"- `{v.rule}`: {v.message}" for v in report.validation.violations]
        return "\n".join(lines) + "\n"

    fv = report.f_vector
    lines += [f"f0 = {fv.f0}, f1 = {fv.f1}", "", "## Chern polynomials", ""]
    lines += [
        f"- c2(Y_n) = {_md_poly(report.c2)}",
        f"- c1^2(Y_n) = {_md_poly(report.c1sq)}",
        f"- H(n) = {_quadratic_text(*report.hirzebruch.coefficients)}",
        "",
        "## Chern numbers",
        "",
    ]
    lines += _md_table(
        ["n", "c1^2", "c2", "slope", "exact slope", "H(n)"],
        [
            [r.n, r.c1sq, r.c2,
             "undefined" if r.slope is None else format_decimal(r.slope, precision),
             "undefined" if r.slope is None else str(r.slope), r.h]
            for r in report.rows
        ],
    )
    lines += ["", f"gamma = {_md_rational(report.gamma, precision)}"]
    if report.gamma_note:
        lines.append(f"  ({report.gamma_note})")
    bmy = report.bmy
    minimum = "unbounded below" if bmy.minimum is None else f"{bmy.minimum} at n = {bmy.argmin}"
    lines += ["", f"min over n >= 2 of H(n): {minimum}"]
    if bmy.flag:
        lines.append(f"**{bmy.flag}**")
    lines += ["", "## Inequalities", ""]
    lines += _md_table(
        ["rule", "applicable", "lhs", "", "rhs", "holds", "slack", "note"],
        [
            [i.rule_id, "yes" if i.applicable else "no", _md_rational(i.lhs, precision), i.relation,
             _md_rational(i.rhs, precision), "yes" if i.holds else "no", _md_rational(i.slack, precision), i.note]
            for i in report.inequalities
        ],
    )
    lines += ["", "## Ball quotient", ""]
    for v in report.verdicts:
        lines.append(f"- n = {v.n}: **{v.verdict}**")
        lines += [f"  - {r}" for r in v.reasons]
    lines += ["", "## Fermat curves", ""]
    lines += _md_table(
        ["n", "rational", "elliptic", "Miyaoka-Sakai bound"],
        [[c.n, c.rational_curve_count, c.elliptic_curve_count, _md_rational(c.miyaoka_sakai_bound, precision)]
         for c in report.censuses],
    )
    return "\n".join(lines) + "\n"


# -- search -------------------------------------------------------------------


def _count(x):
    return x if isinstance(x, int) else str(x)


def search_to_json(rows: list[CandidateFamily]) -> dict:
    return {
        "rows": [
            {"d": r.d, "tau": r.tau, "t2": _count(r.t2), "t6": _count(r.t6), "h_at_2": r.h_at_2,
             "status": r.realizability_status.value}
            for r in rows
        ],
        "summary": {"rows": len(rows), "candidates": sum(r.is_candidate for r in rows)},
    }


def search_to_csv(rows: list[CandidateFamily]) -> str:
    return _csv_text([(
        "candidates",
        ["d", "tau", "t2", "t6", "h_at_2", "status"],
        [[r.d, r.tau, _count(r.t2), _count(r.t6), "" if r.h_at_2 is None else r.h_at_2,
          r.realizability_status.value] for r in rows],
    )])


def search_summary(rows: list[CandidateFamily]) -> str:
    return f"{sum(r.is_candidate for r in rows)} combinatorial candidate(s) among {len(rows)} row(s)"


def search_to_md(rows: list[CandidateFamily]) -> str:
    lines = _md_table(
        ["d", "tau", "t2", "t6", "H(2)", "status"],
        [[r.d, r.tau, _count(r.t2), _count(r.t6), "" if r.h_at_2 is None else r.h_at_2,
          r.realizability_status.value] for r in rows],
    )
    return "\n".join(lines + ["", search_summary(rows)]) + "\n"
