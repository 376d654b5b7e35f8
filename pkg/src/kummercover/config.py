"""Combinatorial type of a d-configuration of plane curves.

A d-configuration is a family of ``tau >= 4`` smooth plane curves of common
degree ``d`` that meet pairwise transversally, with no point shared by all of
them.  Only the multiplicity census ``t_r`` (the number of points lying on
exactly ``r`` curves) is stored; which curves pass through which point is not.

Transversality plus Bezout gives the pairwise-intersection identity

    sum_r  C(r, 2) * t_r  ==  d^2 * C(tau, 2)

which is enforced by :func:`validate`.
"""

from __future__ import annotations

import json
import re
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any

from .errors import InvalidConfigurationError, ParseError

__all__ = [
    "ConfigCombinatorics",
    "FVector",
    "Violation",
    "ValidationReport",
    "validate",
    "require_valid",
    "f_vector",
    "pair_count",
    "parse_config",
    "to_document",
    "serialize",
]


@dataclass(frozen=True)
class ConfigCombinatorics:
    """The data ``(d, tau, {t_r})``.

    Construction never fails on out-of-range values; use :func:`validate`.
    Multiplicities with a zero count are dropped so that equal censuses
    compare equal regardless of how they were written down.
    """

    degree: int
    curve_count: int
    point_counts: Mapping[int, int] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        cleaned = {int(r): int(c) for r, c in sorted(dict(self.point_counts).items()) if c != 0}
        object.__setattr__(self, "point_counts", MappingProxyType(cleaned))

    def __hash__(self):
        return hash((self.degree, self.curve_count, tuple(self.point_counts.items()), self.name))

    def __repr__(self):
        pts = ", ".join(f"{r}: {c}" for r, c in self.point_counts.items())
        label = f"{self.name!r}, " if self.name else ""
        return f"ConfigCombinatorics({label}d={self.degree}, tau={self.curve_count}, t={{{pts}}})"

    @property
    def d(self) -> int:
        return self.degree

    @property
    def tau(self) -> int:
        return self.curve_count

    def t(self, r: int) -> int:
        """Number of points of multiplicity exactly ``r`` (0 if absent)."""
        return self.point_counts.get(r, 0)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(self.point_counts)

    def renamed(self, name: str) -> "ConfigCombinatorics":
        return ConfigCombinatorics(self.degree, self.curve_count, self.point_counts, name)


@dataclass(frozen=True)
class FVector:
    f0: int
    f1: int


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    values: dict[str, Any] = field(default_factory=dict, hash=False)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def pair_count(cfg: ConfigCombinatorics) -> int:
    """Left side of the pairwise identity, ``sum C(r,2) t_r``."""
    return sum(r * (r - 1) // 2 * c for r, c in cfg.point_counts.items())


def validate(cfg: ConfigCombinatorics) -> ValidationReport:
    """Check every definitional rule and return all violations found."""
    d, tau = cfg.degree, cfg.curve_count
    out = []
    if d < 1:
        out.append(Violation("degree", f"degree must be >= 1, got {d}", {"degree": d}))
    if tau < 4:
        out.append(Violation("curve_count", f"need at least 4 curves, got {tau}", {"curves": tau}))
    bad_keys = [r for r in cfg.point_counts if r < 2 or r > tau]
    if bad_keys:
        out.append(
            Violation(
                "multiplicity_range",
                f"multiplicities must lie in 2..{tau}, got {bad_keys}",
                {"multiplicities": bad_keys, "curves": tau},
            )
        )
    if cfg.t(tau) != 0 and tau >= 2:
        out.append(
            Violation(
                "no_common_point",
                f"t_{tau} = {cfg.t(tau)}: a point lies on all {tau} curves",
                {"multiplicity": tau, "count": cfg.t(tau)},
            )
        )
    negative = {r: c for r, c in cfg.point_counts.items() if c < 0}
    if negative:
        out.append(Violation("nonnegative_counts", f"negative point counts {negative}", {"counts": negative}))
    lhs = pair_count(cfg)
    rhs = d * d * tau * (tau - 1) // 2
    if lhs != rhs:
        out.append(
            Violation(
                "pairwise_identity",
                f"sum C(r,2) t_r = {lhs} but d^2 C(tau,2) = {rhs}",
                {"lhs": lhs, "rhs": rhs},
            )
        )
    return ValidationReport(tuple(out))


def require_valid(cfg: ConfigCombinatorics) -> ConfigCombinatorics:
    report = validate(cfg)
    if not report.valid:
        raise InvalidConfigurationError(report)
    return cfg


def f_vector(cfg: ConfigCombinatorics) -> FVector:
    require_valid(cfg)
    return FVector(
        f0=sum(cfg.point_counts.values()),
        f1=sum(r * c for r, c in cfg.point_counts.items()),
    )


# -- JSON interchange ---------------------------------------------------------

_FIELDS = {"name", "degree", "curves", "points"}
_INT_KEY = re.compile(r"^[+-]?\d+$")


class _Pairs(list):
    """Marker for object contents kept as ordered key/value pairs."""


def _as_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {json.dumps(value)}", where)
    return value


def _unique(pairs: _Pairs, where: str) -> dict:
    seen = {}
    for k, v in pairs:
        if k in seen:
            raise ParseError(f"duplicate key {k!r}", where)
        seen[k] = v
    return seen


def parse_config(text: str | bytes) -> ConfigCombinatorics:
    """Parse a configuration document.  The result is *not* validated."""
    try:
        raw = json.loads(text, object_pairs_hook=_Pairs)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"$ (line {exc.lineno}, column {exc.colno})") from None
    if not isinstance(raw, _Pairs):
        raise ParseError("top level must be an object")
    doc = _unique(raw, "$")
    unknown = sorted(set(doc) - _FIELDS)
    if unknown:
        raise ParseError(f"unknown field {unknown[0]!r}", f"$.{unknown[0]}")
    for required in ("degree", "curves", "points"):
        if required not in doc:
            raise ParseError(f"missing field {required!r}")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name must be a string", "$.name")
    degree = _as_int(doc["degree"], "$.degree")
    curves = _as_int(doc["curves"], "$.curves")
    if not isinstance(doc["points"], _Pairs):
        raise ParseError("points must be an object", "$.points")

    counts: dict[int, int] = {}
    for key, value in doc["points"]:
        where = f"$.points[{key!r}]"
        if not _INT_KEY.match(key):
            raise ParseError(f"multiplicity key {key!r} is not a decimal integer", where)
        r = int(key)
        if r in counts:
            raise ParseError(f"duplicate multiplicity {r}", where)
        counts[r] = _as_int(value, where)
    return ConfigCombinatorics(degree, curves, counts, name)


def to_document(cfg: ConfigCombinatorics) -> dict:
    doc: dict[str, Any] = {}
    if cfg.name:
        doc["name"] = cfg.name
    doc["degree"] = cfg.degree
    doc["curves"] = cfg.curve_count
    doc["points"] = {str(r): c for r, c in cfg.point_counts.items()}
    return doc


def serialize(cfg: ConfigCombinatorics, indent: int | None = None) -> str:
    return json.dumps(to_document(cfg), indent=indent)
