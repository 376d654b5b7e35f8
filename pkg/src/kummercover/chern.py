"""Chern numbers of the desingularized Kummer cover ``Y_n``.

Both Chern numbers of ``Y_n`` have the form ``n^(tau-3) * q(n)`` with ``q`` an
integer quadratic whose coefficients depend only on ``(d, tau, f0, f1, t_2)``.
Everything here is exact: integers for the polynomials, :class:`Fraction` for
slopes and the characteristic number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .config import ConfigCombinatorics, f_vector, require_valid
from .errors import DomainError, GammaUndefinedError, ZeroDenominatorError

__all__ = [
    "QuadraticInvariant",
    "c2_poly",
    "c1sq_poly",
    "hirzebruch_poly",
    "raw_hirzebruch_poly",
    "chern_numbers_at",
    "chern_slope",
    "gamma",
    "gamma_note",
    "BmyScan",
    "bmy_scan",
    "format_decimal",
    "GAMMA_BOUND",
]

GAMMA_BOUND = Fraction(8, 3)


@dataclass(frozen=True)
class QuadraticInvariant:
    """``n^scale_exponent * (a2 n^2 + a1 n + a0)``."""

    a2: int
    a1: int
    a0: int
    scale_exponent: int

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a2, self.a1, self.a0)

    def __call__(self, n):
        """Unscaled value of the quadratic at ``n``."""
        return (self.a2 * n + self.a1) * n + self.a0

    def scaled(self, n: int) -> int:
        return n**self.scale_exponent * self(n)

    def shifted(self, h: int) -> tuple[int, int, int]:
        """Coefficients of ``x -> q(x + h)``."""
        a2, a1, a0 = self.coefficients
        return (a2, 2 * a2 * h + a1, a2 * h * h + a1 * h + a0)

    def __sub__(self, other: "QuadraticInvariant") -> "QuadraticInvariant":
        if self.scale_exponent != other.scale_exponent:
            raise ValueError("scale exponents differ")
        return QuadraticInvariant(
            self.a2 - other.a2, self.a1 - other.a1, self.a0 - other.a0, self.scale_exponent
        )

    def __rmul__(self, k: int) -> "QuadraticInvariant":
        return QuadraticInvariant(k * self.a2, k * self.a1, k * self.a0, self.scale_exponent)


def _linear_term(d: int, tau: int, f0: int, f1: int) -> int:
    # shared n^1 coefficient of c2 and H; c1^2 carries twice this
    return -(d * d - 3 * d) * tau - 2 * f1 + 2 * f0


def c2_poly(cfg: ConfigCombinatorics) -> QuadraticInvariant:
    """Euler number ``c2(Y_n) / n^(tau-3)`` as a quadratic in ``n``."""
    fv = f_vector(cfg)
    d, tau = cfg.degree, cfg.curve_count
    return QuadraticInvariant(
        3 + (d * d - 3 * d) * tau + fv.f1 - fv.f0,
        _linear_term(d, tau, fv.f0, fv.f1),
        fv.f1 - cfg.t(2),
        tau - 3,
    )


def c1sq_poly(cfg: ConfigCombinatorics) -> QuadraticInvariant:
    """``c1^2(Y_n) / n^(tau-3)`` as a quadratic in ``n``."""
    fv = f_vector(cfg)
    d, tau = cfg.degree, cfg.curve_count
    return QuadraticInvariant(
        9 + d * d * tau - 6 * d * tau + 3 * fv.f1 - 4 * fv.f0,
        2 * _linear_term(d, tau, fv.f0, fv.f1),
        3 * d * tau + (d * d - 3 * d) * tau + fv.f1 - fv.f0 + cfg.t(2),
        tau - 3,
    )


def hirzebruch_poly(cfg: ConfigCombinatorics) -> QuadraticInvariant:
    """``H(n) = (3 c2 - c1^2) / n^(tau-3)``, nonnegative for realizable types."""
    require_valid(cfg)
    return raw_hirzebruch_poly(cfg.degree, cfg.curve_count, cfg.point_counts)


def raw_hirzebruch_poly(d: int, tau: int, point_counts) -> QuadraticInvariant:
    """Same polynomial without validating the census (used by the search)."""
    f0 = sum(point_counts.values())
    f1 = sum(r * c for r, c in point_counts.items())
    return QuadraticInvariant(
        f0 + (2 * d * d - 3 * d) * tau,
        _linear_term(d, tau, f0, f1),
        2 * f1 + f0 - d * d * tau - 4 * point_counts.get(2, 0),
        tau - 3,
    )


def _check_exponent(n: int) -> None:
    if n < 2:
        raise DomainError(f"cover exponent must be >= 2, got {n}")


def chern_numbers_at(cfg: ConfigCombinatorics, n: int) -> tuple[int, int]:
    """Exact ``(c1^2, c2)`` of ``Y_n``."""
    _check_exponent(n)
    return c1sq_poly(cfg).scaled(n), c2_poly(cfg).scaled(n)


def chern_slope(cfg: ConfigCombinatorics, n: int) -> Fraction:
    _check_exponent(n)
    c1sq = c1sq_poly(cfg)(n)
    c2 = c2_poly(cfg)(n)
    if c2 == 0:
        raise ZeroDenominatorError(f"c2(Y_{n}) = 0, slope undefined")
    # the common n^(tau-3) factor cancels
    return Fraction(c1sq, c2)


def gamma(cfg: ConfigCombinatorics) -> Fraction:
    """Characteristic number: the ``n -> oo`` limit of the Chern slope."""
    num = c1sq_poly(cfg).a2
    den = c2_poly(cfg).a2
    if den <= 0:
        raise GammaUndefinedError(
            f"gamma undefined: denominator 3 + (d^2-3d)tau + f1 - f0 = {den} <= 0 "
            "(impossible for a d-configuration satisfying the characteristic-number hypotheses)"
        )
    return Fraction(num, den)


def gamma_note(cfg: ConfigCombinatorics) -> str | None:
    """Annotation when the 8/3 bound is not guaranteed to apply."""
    require_valid(cfg)
    tau = cfg.curve_count
    if cfg.degree == 1 and (cfg.t(tau - 1) != 0 or tau < 6):
        return "outside the hypotheses of the gamma <= 8/3 theorem (d = 1 needs t_{tau-1} = 0 and tau >= 6)"
    return None


@dataclass(frozen=True)
class BmyScan:
    """Unscaled ``H(n)`` for ``n = 2..n_max`` and the minimum over all ``n >= 2``.

    ``minimum`` is ``None`` when ``H`` is unbounded below on the integers
    (negative leading behaviour); ``argmin`` is then ``None`` as well.
    """

    values: tuple[tuple[int, int], ...]
    argmin: int | None
    minimum: int | None

    @property
    def violates_bmy(self) -> bool:
        return self.minimum is None or self.minimum < 0

    @property
    def flag(self) -> str | None:
        if self.violates_bmy:
            return "violates BMY consequence — combinatorics cannot be realized by a d-configuration"
        return None


def bmy_scan(cfg: ConfigCombinatorics, n_max: int) -> BmyScan:
    _check_exponent(n_max)
    h = hirzebruch_poly(cfg)
    values = tuple((n, h(n)) for n in range(2, n_max + 1))

    a2, a1, _ = h.coefficients
    if a2 < 0 or (a2 == 0 and a1 < 0):
        return BmyScan(values, None, None)
    probes = {2}
    if a2 > 0:
        # integer neighbours of the vertex -a1 / (2 a2)
        v = Fraction(-a1, 2 * a2)
        probes.update(k for k in (math.floor(v), math.ceil(v)) if k >= 2)
    argmin = min(sorted(probes), key=h)
    return BmyScan(values, argmin, h(argmin))


def format_decimal(x: Fraction | int, precision: int = 4) -> str:
    """Round an exact value to ``precision`` decimals for display.

    Trailing zeros are dropped, so 9/4 shows as ``2.25`` and 13/6 as ``2.1667``.
    """
    q = round(Fraction(x), precision)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q.numerator * 10**precision // q.denominator, 10**precision)
    if precision == 0 or frac == 0:
        return f"{sign}{whole}"
    digits = str(frac).rjust(precision, "0").rstrip("0")
    return f"{sign}{whole}.{digits}"
