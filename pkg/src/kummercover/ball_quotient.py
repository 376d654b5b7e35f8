"""Ball-quotient exclusion analysis for Kummer covers.

On a ball quotient every component of the ramification divisor has zero
proportionality deviation ``prop(E) = 2E^2 - e(E)``.  Applied to the Fermat
curves over the essential singular points this leaves only three
``(n, r_p)`` pairs; applied to the strict transforms of the branch curves it
gives one linear equation per curve.  Summing those over all curves and
combining with the pairwise-intersection identity pins down the census
completely, which is what :func:`ball_quotient_verdict` checks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .chern import hirzebruch_poly, raw_hirzebruch_poly
from .config import ConfigCombinatorics, require_valid, validate
from .errors import DomainError

__all__ = [
    "AdmissiblePair",
    "FermatComponentData",
    "CensusEntry",
    "CurveCensus",
    "CandidateStatus",
    "CandidateFamily",
    "BallQuotientVerdict",
    "RATIONAL_CURVE_CONSTANT",
    "prop_exceptional",
    "admissible_pairs",
    "admissible_multiplicity",
    "fermat_genus",
    "fermat_component_data",
    "curve_census",
    "prop_branch_curve",
    "per_curve_equation",
    "per_curve_sum",
    "forced_counts",
    "candidate_counts",
    "candidate_reason",
    "search_candidates",
    "ball_quotient_verdict",
]

# Miyaoka-Sakai constant for a configuration consisting of one rational curve
RATIONAL_CURVE_CONSTANT = Fraction(9, 2)


@dataclass(frozen=True)
class AdmissiblePair:
    n: int
    r_p: int

    def __post_init__(self):
        if (self.n - 1) * (self.r_p - 2) != 4:
            raise DomainError(f"({self.n}, {self.r_p}) does not satisfy (n-1)(r_p-2) = 4")


def prop_exceptional(n: int, r_p: int) -> int:
    """prop of a Fermat curve over an ``r_p``-fold point: ``n^(r_p-2) ((r_p-2)(n-1) - 4)``."""
    return n ** (r_p - 2) * ((r_p - 2) * (n - 1) - 4)


def admissible_pairs(n_max: int, r_max: int) -> list[AdmissiblePair]:
    """All ``(n, r_p)`` with ``2 <= n <= n_max``, ``3 <= r_p <= r_max`` and zero prop."""
    pairs = []
    # (n-1)(r_p-2) = 4 forces n-1 to be a positive divisor of 4
    for a in (4, 2, 1):
        n, r_p = a + 1, 4 // a + 2
        if n <= n_max and r_p <= r_max:
            pairs.append(AdmissiblePair(n, r_p))
    return pairs


def admissible_multiplicity(n: int) -> int | None:
    """The unique ``r_p`` paired with ``n``, or ``None``."""
    if n >= 2 and 4 % (n - 1) == 0:
        return 4 // (n - 1) + 2
    return None


# -- Fermat curves over essential points --------------------------------------


def fermat_genus(n: int, r_p: int) -> int:
    if n < 2 or r_p < 3:
        raise DomainError(f"need n >= 2 and r_p >= 3, got ({n}, {r_p})")
    euler = n ** (r_p - 1) * (2 - r_p) + n ** (r_p - 2) * r_p
    return 1 - euler // 2


@dataclass(frozen=True)
class FermatComponentData:
    count: int
    self_intersection: int
    genus: int


def fermat_component_data(n: int, tau: int, r_p: int) -> FermatComponentData:
    """The ``n^(tau-r_p-1)`` disjoint curves lying over one ``r_p``-fold point."""
    if r_p >= tau:
        raise DomainError(f"r_p = {r_p} must be smaller than tau = {tau}")
    return FermatComponentData(
        count=n ** (tau - r_p - 1),
        self_intersection=-(n ** (r_p - 2)),
        genus=fermat_genus(n, r_p),
    )


@dataclass(frozen=True)
class CensusEntry:
    kind: str  # "rational" or "elliptic"
    multiplicity: int
    count: int
    self_intersection: int


@dataclass(frozen=True)
class CurveCensus:
    """Rational and elliptic Fermat curves on ``Y_n``.

    ``miyaoka_sakai_bound`` is the resulting lower bound for ``3c2 - c1^2``:
    9/2 per rational (-2)-curve plus ``-C^2`` per elliptic curve.
    """

    n: int
    entries: tuple[CensusEntry, ...]

    def _total(self, kind):
        return sum(e.count for e in self.entries if e.kind == kind)

    @property
    def rational_curve_count(self) -> int:
        return self._total("rational")

    @property
    def elliptic_curve_count(self) -> int:
        return self._total("elliptic")

    @property
    def self_intersections(self) -> dict[str, int]:
        return {e.kind: e.self_intersection for e in self.entries}

    @property
    def miyaoka_sakai_bound(self) -> Fraction:
        total = Fraction(0)
        for e in self.entries:
            weight = RATIONAL_CURVE_CONSTANT if e.kind == "rational" else -e.self_intersection
            total += weight * e.count
        return total


def curve_census(cfg: ConfigCombinatorics, n: int) -> CurveCensus:
    require_valid(cfg)
    if n < 2:
        raise DomainError(f"cover exponent must be >= 2, got {n}")
    entries = []
    for r, t in cfg.point_counts.items():
        if r < 3:
            continue
        data = fermat_component_data(n, cfg.curve_count, r)
        if data.genus == 0:
            kind = "rational"
        elif data.genus == 1:
            kind = "elliptic"
        else:
            continue
        entries.append(CensusEntry(kind, r, t * data.count, data.self_intersection))
    return CurveCensus(n, tuple(entries))


# -- strict transforms of the branch curves -----------------------------------


def prop_branch_curve(d: int, tau: int, n: int, r_j: int, delta_j: int) -> int:
    """Bracket of prop for the preimage of one branch curve.

    The full value carries an extra positive factor ``n^(tau-3)``.  ``r_j``
    counts all singular points on the curve, ``delta_j`` those of
    multiplicity at least 3.
    """
    if d < 1 or tau < 4 or n < 2 or not 0 <= delta_j <= r_j:
        raise DomainError(f"bad arguments d={d}, tau={tau}, n={n}, r_j={r_j}, delta_j={delta_j}")
    return 3 * d * d - 3 * d + (n - 1) * (r_j + d * d - 3 * d) - 2 * delta_j


def per_curve_equation(d: int, n: int) -> tuple[int, int, int]:
    """Zero-prop condition on one curve as ``A*x + B*y = C``.

    Here ``x`` is the number of double points and ``y`` the number of
    ``r_p``-fold points on the curve, for ``r_p`` paired with ``n``.
    """
    if admissible_multiplicity(n) is None:
        raise DomainError(f"n = {n} has no admissible multiplicity")
    return n - 1, n - 3, -(3 * d * d - 3 * d) - (n - 1) * (d * d - 3 * d)


def _has_nonnegative_solution(a: int, b: int, c: int) -> bool:
    # a > 0 always here
    if b < 0:
        return c % math.gcd(a, -b) == 0
    if b == 0:
        return c >= 0 and c % a == 0
    return c >= 0 and any((c - a * x) % b == 0 for x in range(c // a + 1))


def per_curve_sum(d: int, tau: int, r: int) -> Fraction:
    """Double plus ``r``-fold points on each curve under zero prop."""
    if r not in (3, 4, 6):
        raise DomainError(f"r = {r} is not an admissible multiplicity")
    num = 2 * d * d * (tau - 1) + 12 * d - 4 * d * d + (2 - r) * (3 * d * d - 3 * d)
    return Fraction(num, 6)


def forced_counts(d: int, tau: int, n: int) -> tuple[Fraction, Fraction]:
    """``(t_2, t_r)`` forced by zero prop on every curve, for ``r`` paired with ``n``.

    Summing the per-curve count over all curves gives ``2 t_2 + r t_r`` (each
    point is seen by as many curves as its multiplicity); the second equation
    is the pairwise-intersection identity.
    """
    r = admissible_multiplicity(n)
    if r is None:
        raise DomainError(f"n = {n} has no admissible multiplicity")
    f1 = tau * per_curve_sum(d, tau, r)
    pairs = Fraction(d * d * tau * (tau - 1), 2)
    # 2 t2 + r t_r = f1 ;  t2 + C(r,2) t_r = pairs
    t_r = (2 * pairs - f1) / (r * (r - 2))
    t2 = (f1 - r * t_r) / 2
    return t2, t_r


# -- the (d, tau) family with only double and six-fold points ----------------


class CandidateStatus(str, enum.Enum):
    CANDIDATE = "combinatorial-candidate"
    NONZERO_H = "excluded-nonzero-H"
    NEGATIVE = "excluded-negative-counts"
    NON_INTEGRAL = "excluded-non-integral"
    INVALID = "excluded-invalid-configuration"

    def __str__(self):
        return self.value


def _closed_form(d: int, tau: int) -> tuple[Fraction, Fraction]:
    t6 = Fraction(d * tau * (d * tau + 3 * d - 6), 36)
    t2 = Fraction(d * tau * (d * tau - 21 * d + 30), 12)
    return t2, t6


def candidate_reason(d: int, tau: int) -> str | None:
    """Why ``(d, tau)`` has no admissible census, or ``None`` if it has one."""
    if d < 1 or tau < 4:
        raise DomainError(f"need d >= 1 and tau >= 4, got ({d}, {tau})")
    t2, t6 = _closed_form(d, tau)
    if t2.denominator != 1 or t6.denominator != 1:
        return "non-integral"
    if t2 < 0 or t6 < 0:
        return "negative"
    if t6 and tau <= 6:
        return "full-incidence"
    return None


def candidate_counts(d: int, tau: int) -> tuple[int, int] | None:
    """``(t_2, t_6)`` of the census forced at ``n = 2``, when it makes sense."""
    if candidate_reason(d, tau) is not None:
        return None
    t2, t6 = _closed_form(d, tau)
    return int(t2), int(t6)


@dataclass(frozen=True)
class CandidateFamily:
    d: int
    tau: int
    t2: int | Fraction
    t6: int | Fraction
    h_at_2: int | None
    realizability_status: CandidateStatus

    @property
    def is_candidate(self) -> bool:
        return self.realizability_status is CandidateStatus.CANDIDATE

    def configuration(self) -> ConfigCombinatorics:
        return ConfigCombinatorics(self.d, self.tau, {2: self.t2, 6: self.t6}, f"C({self.d},{self.tau})")


def _row(d: int, tau: int) -> CandidateFamily:
    t2, t6 = _closed_form(d, tau)
    if t2.denominator != 1 or t6.denominator != 1:
        return CandidateFamily(d, tau, t2, t6, None, CandidateStatus.NON_INTEGRAL)
    t2, t6 = int(t2), int(t6)
    counts = {2: t2, 6: t6}
    h2 = raw_hirzebruch_poly(d, tau, counts)(2)
    if t2 < 0 or t6 < 0:
        status = CandidateStatus.NEGATIVE
    elif not validate(ConfigCombinatorics(d, tau, counts)).valid:
        status = CandidateStatus.INVALID
    elif h2 != 0:
        status = CandidateStatus.NONZERO_H
    else:
        status = CandidateStatus.CANDIDATE
    return CandidateFamily(d, tau, t2, t6, h2, status)


def search_candidates(
    d_range: tuple[int, int],
    tau_range: tuple[int, int],
    include_non_integral: bool = False,
) -> list[CandidateFamily]:
    """Scan inclusive ranges of ``(d, tau)`` for the two-multiplicity census.

    Rows are ordered by ``d`` then ``tau``.  Non-integral rows are skipped
    unless asked for.
    """
    d_lo, d_hi = d_range
    t_lo, t_hi = tau_range
    if d_lo > d_hi or t_lo > t_hi:
        raise DomainError("empty or inverted range")
    if d_lo < 1 or t_lo < 4:
        raise DomainError("need d >= 1 and tau >= 4")
    rows = []
    for d in range(d_lo, d_hi + 1):
        for tau in range(t_lo, t_hi + 1):
            row = _row(d, tau)
            if row.realizability_status is CandidateStatus.NON_INTEGRAL and not include_non_integral:
                continue
            rows.append(row)
    return rows


# -- verdict -------------------------------------------------------------------


@dataclass(frozen=True)
class BallQuotientVerdict:
    n: int
    verdict: str  # "excluded" or "candidate"
    reasons: tuple[str, ...]

    @property
    def excluded(self) -> bool:
        return self.verdict == "excluded"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def ball_quotient_verdict(cfg: ConfigCombinatorics, n: int) -> BallQuotientVerdict:
    """Decide whether ``Y_n`` survives every implemented necessary condition.

    A ``candidate`` verdict means only that; realizability of the census is
    never checked.
    """
    require_valid(cfg)
    if n < 2:
        raise DomainError(f"cover exponent must be >= 2, got {n}")
    d, tau = cfg.degree, cfg.curve_count
    reasons = []

    # Fermat curves over essential points
    for r in cfg.multiplicities:
        if r >= 3 and prop_exceptional(n, r) != 0:
            reasons.append(
                f"{r}-fold points present but (n-1)(r-2) = {(n - 1) * (r - 2)} != 4 "
                f"(prop = {prop_exceptional(n, r)})"
            )

    r_n = admissible_multiplicity(n)
    if r_n is not None:
        # zero prop on one branch curve
        a, b, c = per_curve_equation(d, n)
        if not _has_nonnegative_solution(a, b, c):
            reasons.append(
                f"per-curve condition {a} r_j2 + {b} r_j{r_n} = {c} has no nonnegative solution"
            )
        # summed over curves together with the pairwise identity
        t2, tr = forced_counts(d, tau, n)
        if t2 < 0 or tr < 0:
            bad = f"t_2 = {_fmt(t2)}" if t2 < 0 else f"t_{r_n} = {_fmt(tr)}"
            reasons.append(f"zero prop forces {bad} < 0")
        elif t2.denominator != 1 or tr.denominator != 1:
            reasons.append(f"zero prop forces non-integral counts t_2 = {_fmt(t2)}, t_{r_n} = {_fmt(tr)}")
        elif (cfg.t(2), cfg.t(r_n)) != (t2, tr):
            reasons.append(
                f"zero prop forces t_2 = {_fmt(t2)}, t_{r_n} = {_fmt(tr)} "
                f"but the configuration has t_2 = {cfg.t(2)}, t_{r_n} = {cfg.t(r_n)}"
            )
    else:
        # no essential point can have zero prop, so any that exist are already
        # reported; the branch curves must still balance on aggregate
        essential = sum(r * c for r, c in cfg.point_counts.items() if r >= 3)
        total = sum(r * c for r, c in cfg.point_counts.items())
        aggregate = tau * (3 * d * d - 3 * d + (n - 1) * (d * d - 3 * d)) + (n - 1) * total - 2 * essential
        if aggregate != 0:
            reasons.append(f"sum over curves of prop brackets = {aggregate} != 0")

    h = hirzebruch_poly(cfg)(n)
    if h != 0:
        reasons.append(f"H({n}) = {h} != 0")

    if reasons:
        return BallQuotientVerdict(n, "excluded", tuple(reasons))
    return BallQuotientVerdict(
        n, "candidate", ("all necessary conditions hold; geometric realizability remains open",)
    )
