"""Named combinatorial types.

Keys are written either bare (``hesse-conics``) or with call syntax for the
parametric families (``generic-conics(5)``, ``L(3)``, ``C(2,9)``).
"""

from __future__ import annotations

import re

from .ball_quotient import candidate_counts, candidate_reason
from .config import ConfigCombinatorics
from .errors import CatalogError

__all__ = ["CATALOG_KEYS", "catalog_lookup", "parse_catalog_key"]

CATALOG_KEYS = ("hesse-conics", "dual-hesse", "generic-conics", "L", "C")

_ARITY = {"hesse-conics": 0, "dual-hesse": 0, "generic-conics": 1, "L": 1, "C": 2}
_KEY = re.compile(r"^\s*([A-Za-z][\w-]*)\s*(?:\(\s*([^)]*)\))?\s*$")


def parse_catalog_key(text: str) -> tuple[str, tuple[int, ...]]:
    m = _KEY.match(text)
    if not m:
        raise CatalogError(f"malformed catalog key {text!r}")
    key, args = m.group(1), m.group(2)
    params: tuple[int, ...] = ()
    if args is not None and args.strip():
        try:
            params = tuple(int(a) for a in args.split(","))
        except ValueError:
            raise CatalogError(f"catalog parameters must be integers: {text!r}") from None
    return key, params


def catalog_lookup(key: str, *params: int) -> ConfigCombinatorics:
    """Return the census for ``key``.

    >>> catalog_lookup("L", 3).point_counts[6]
    39
    >>> catalog_lookup("C(2,9)").point_counts[2]
    9
    """
    if not params and "(" in key:
        key, params = parse_catalog_key(key)
    key = key.strip()
    if key not in _ARITY:
        raise CatalogError(f"unknown catalog key {key!r}; known: {', '.join(CATALOG_KEYS)}")
    if len(params) != _ARITY[key]:
        raise CatalogError(f"{key} takes {_ARITY[key]} parameter(s), got {len(params)}")

    if key == "hesse-conics":
        return ConfigCombinatorics(2, 12, {2: 12, 8: 9}, "hesse-conics")
    if key == "dual-hesse":
        return ConfigCombinatorics(1, 9, {3: 12}, "dual-hesse")
    if key == "generic-conics":
        (tau,) = params
        if tau < 4:
            raise CatalogError(f"generic-conics needs tau >= 4, got {tau}")
        return ConfigCombinatorics(2, tau, {2: 2 * (tau * tau - tau)}, f"generic-conics({tau})")
    if key == "L":
        (m,) = params
        if m < 3:
            raise CatalogError(f"L(m) is defined for m >= 3, got {m}")
        return ConfigCombinatorics(
            1, 12 * m + 3, {2: 12 * m * m + 15 * m + 3, 6: 4 * m * m + m}, f"L({m})"
        )
    d, tau = params
    if d < 1 or tau < 4:
        raise CatalogError(f"C(d,tau) needs d >= 1 and tau >= 4, got ({d}, {tau})")
    counts = candidate_counts(d, tau)
    if counts is None:
        raise CatalogError(f"C({d},{tau}) has {candidate_reason(d, tau)} double/six-fold counts")
    t2, t6 = counts
    return ConfigCombinatorics(d, tau, {2: t2, 6: t6}, f"C({d},{tau})")
