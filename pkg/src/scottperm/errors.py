"""Exception types shared by every module of the package.

Each exception names the precise contract violation rather than reusing a
generic ValueError, so callers (and the CLI exit-code mapping) can react to
the exact failure mode.
"""
from __future__ import annotations


class ScottPermError(Exception):
    """Base class for all errors raised by this package."""


class ZeroConstantTerm(ScottPermError):
    """Power-series inversion of a polynomial with p(0) = 0."""


class ZeroPolynomial(ScottPermError):
    """An operation received the zero polynomial where a nonzero one is required."""


class NonSquare(ScottPermError):
    """A determinant was requested for a non-square matrix."""


class BothZero(ScottPermError):
    """gcd of two zero polynomials is undefined."""


class DidNotConverge(ScottPermError):
    """The root finder exhausted its iteration budget without meeting the residual target."""


class SingularEntry(ScottPermError):
    """Some x_i - y_j is (numerically) zero, so an entry 1/(x_i - y_j) is undefined."""


class RepeatedXRoot(ScottPermError):
    """Two x-roots coincide, so a weight 1/(x_i - x_j)^2 is undefined."""


class SharedRoot(ScottPermError):
    """P and Q share a root, so the permanent of (1/(x_i - y_j)) is undefined."""


class ZeroDegree(ScottPermError):
    """A polynomial of degree >= 1 was required."""


class BadParams(ScottPermError):
    """A matrix builder or closed form received parameters outside its contract."""


class OutOfDomain(ScottPermError):
    """A catalog entry was evaluated at a parameter point violating its hypotheses."""


class ParseError(ScottPermError):
    """Polynomial text could not be parsed.

    Carries the character position and a description of what was expected.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroLeadingCoefficient(ScottPermError):
    """A binomial-resultant shortcut requires nonzero leading coefficients."""
