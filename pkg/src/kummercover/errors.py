"""Exception hierarchy shared by all modules."""


class KummerError(Exception):
    """Base class for every error raised by this package."""


class ParseError(KummerError):
    """A configuration document could not be parsed.

    ``location`` is a JSON-path-like pointer to the offending item.
    """

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


class InvalidConfigurationError(KummerError):
    """An operation requiring a valid configuration received an invalid one."""

    def __init__(self, report):
        rules = ", ".join(v.rule for v in report.violations)
        super().__init__(f"configuration is not combinatorially valid ({rules})")
        self.report = report


class CatalogError(KummerError):
    """Unknown catalog key or out-of-range parameters."""


class ZeroDenominatorError(KummerError, ZeroDivisionError):
    """A Chern slope was requested where c2 vanishes."""


class GammaUndefinedError(KummerError):
    """The characteristic number has a nonpositive denominator."""


class DomainError(KummerError, ValueError):
    """An argument lies outside the range where a formula is meaningful."""
