"""Exception hierarchy shared by every sgmdi module."""


class SgmdiError(Exception):
    """Base class for all errors raised deliberately by sgmdi."""


class UnsupportedLevel(SgmdiError, ValueError):
    """A rule was requested beyond what the family can provide."""


class Infeasible(SgmdiError, ValueError):
    """A level constraint admits no multi-index."""


class BudgetTooSmall(SgmdiError, ValueError):
    """The total level budget is smaller than the dimension."""


class NonFiniteIntegrand(SgmdiError, ArithmeticError):
    """An integrand evaluation overflowed or produced NaN."""


# Alias used by the expression layer.
NonFinite = NonFiniteIntegrand


class CapExceeded(SgmdiError):
    """A resource cap (points, samples, wall time) was hit.

    ``reason`` is one of ``"memory-cap"``, ``"sample-cap"``, ``"timeout"``.
    """

    def __init__(self, message, reason="memory-cap"):
        super().__init__(message)
        self.reason = reason


class UnknownFamily(SgmdiError, KeyError):
    """No named integrand family matches the request."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class Degenerate(SgmdiError, ValueError):
    """A power-law fit had no spread in its abscissae."""


class UnboundDimension(SgmdiError, ValueError):
    """The integrand text uses ``d`` but no dimension was supplied."""


class ExprSyntaxError(SgmdiError, SyntaxError):
    """Malformed integrand text. ``position`` is a 0-based column."""

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} (at column {position})")
        self.text = text
        self.position = position
