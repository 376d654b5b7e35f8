"""Hirzebruch-type inequalities on the multiplicity census.

Every check returns an :class:`InequalityReport` with both sides as exact
fractions.  ``slack`` is oriented so that the inequality holds exactly when
``slack >= 0``, whatever the direction of the displayed relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import ConfigCombinatorics, require_valid

__all__ = [
    "InequalityReport",
    "RULE_IDS",
    "check_hirzebruch_n3",
    "check_hirzebruch_n2",
    "check_gamma_consequence",
    "check_shnurnikov",
    "run_all",
]

RULE_IDS = ("hirzebruch_n3", "hirzebruch_n2", "gamma_consequence", "shnurnikov")

_D1_CAVEAT = "d = 1: subject to the d-configuration hypotheses"
_NOT_REALIZABLE = "fails: combinatorial type not realizable by a d-configuration"


@dataclass(frozen=True)
class InequalityReport:
    rule_id: str
    applicable: bool
    lhs: Fraction
    rhs: Fraction
    relation: str  # ">=" or "<="
    note: str = ""

    @property
    def slack(self) -> Fraction:
        return self.lhs - self.rhs if self.relation == ">=" else self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.slack >= 0

    def __str__(self):
        status = "holds" if self.holds else "FAILS"
        if not self.applicable:
            status = "n/a"
        return f"{self.rule_id}: {self.lhs} {self.relation} {self.rhs} [{status}] {self.note}".rstrip()


def _weighted(cfg: ConfigCombinatorics, weight, r_min: int) -> Fraction:
    return sum((Fraction(weight(r)) * c for r, c in cfg.point_counts.items() if r >= r_min), Fraction(0))


def _note(applicable: bool, holds: bool, *extra: str) -> str:
    parts = [e for e in extra if e]
    if applicable and not holds:
        parts.insert(0, _NOT_REALIZABLE)
    return "; ".join(parts)


def check_hirzebruch_n3(cfg: ConfigCombinatorics) -> InequalityReport:
    """(7/2 d^2 - 9/2 d) tau + t2 + 3/4 t3 >= sum_{r>=5} (r-4) t_r."""
    require_valid(cfg)
    d, tau = cfg.degree, cfg.curve_count
    lhs = Fraction(7 * d * d - 9 * d, 2) * tau + cfg.t(2) + Fraction(3, 4) * cfg.t(3)
    rhs = _weighted(cfg, lambda r: r - 4, 5)
    holds = lhs >= rhs
    return InequalityReport(
        "hirzebruch_n3", True, lhs, rhs, ">=", _note(True, holds, _D1_CAVEAT if d == 1 else "")
    )


def check_hirzebruch_n2(cfg: ConfigCombinatorics) -> InequalityReport:
    """(5d^2 - 6d) tau + t2 + 3/4 t3 >= sum_{r>=5} (2r-9) t_r."""
    require_valid(cfg)
    d, tau = cfg.degree, cfg.curve_count
    lhs = Fraction((5 * d * d - 6 * d) * tau + cfg.t(2)) + Fraction(3, 4) * cfg.t(3)
    rhs = _weighted(cfg, lambda r: 2 * r - 9, 5)
    holds = lhs >= rhs
    return InequalityReport(
        "hirzebruch_n2", True, lhs, rhs, ">=", _note(True, holds, _D1_CAVEAT if d == 1 else "")
    )


def check_gamma_consequence(cfg: ConfigCombinatorics) -> InequalityReport:
    """3 + sum_{r>=2} (r-4) t_r <= (5d^2 - 6d) tau, equivalent to gamma <= 8/3."""
    require_valid(cfg)
    d, tau = cfg.degree, cfg.curve_count
    lhs = 3 + _weighted(cfg, lambda r: r - 4, 2)
    rhs = Fraction((5 * d * d - 6 * d) * tau)
    applicable = d >= 2 or (cfg.t(tau - 1) <= 1 and tau >= 6)
    note = "" if applicable else "requires d >= 2, or d = 1 with t_{tau-1} <= 1 and tau >= 6"
    return InequalityReport(
        "gamma_consequence", applicable, lhs, rhs, "<=", _note(applicable, lhs <= rhs, note)
    )


def check_shnurnikov(cfg: ConfigCombinatorics) -> InequalityReport:
    """t2 + 3/2 t3 >= 8 + sum_{r>=4} (2r - 15/2) t_r, for real line arrangements."""
    require_valid(cfg)
    d, tau = cfg.degree, cfg.curve_count
    lhs = cfg.t(2) + Fraction(3, 2) * cfg.t(3)
    rhs = 8 + _weighted(cfg, lambda r: Fraction(4 * r - 15, 2), 4)
    applicable = d == 1 and tau >= 6 and all(cfg.t(tau - k) == 0 for k in range(4))
    if not applicable:
        note = "applies only to line arrangements with tau >= 6 and t_tau = ... = t_{tau-3} = 0"
    elif lhs >= rhs:
        note = "holds; necessary but not sufficient for realizability over the reals"
    else:
        note = "fails: cannot be realized over the real numbers"
    return InequalityReport("shnurnikov", applicable, lhs, rhs, ">=", note)


def run_all(cfg: ConfigCombinatorics) -> list[InequalityReport]:
    return [
        check_hirzebruch_n3(cfg),
        check_hirzebruch_n2(cfg),
        check_gamma_consequence(cfg),
        check_shnurnikov(cfg),
    ]
