"""Exception hierarchy for ascart.

Every error the library raises deliberately derives from AscartError, so
callers (and the CLI) can distinguish invalid input from genuine bugs.
Mathematical *mismatches* (a verification that fails) are not exceptions;
they are reported in result objects and exit codes.
"""


class AscartError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(AscartError):
    """The requested field characteristic is not a prime number."""


class IrreducibleDenominatorFactor(AscartError):
    """A denominator does not split into linear factors over the field.

    Carries the degree of the offending cofactor; the caller must enlarge
    the coefficient field before retrying.
    """

    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(
            f"denominator has an irreducible factor of degree {degree} > 1; "
            "enlarge the coefficient field"
        )


class SingularTransform(AscartError):
    """The matrix of a fractional linear substitution has determinant zero."""


class PoleOrderDivisibleByP(AscartError):
    """A pole order is divisible by the characteristic p."""


class ZeroLeadingCoefficient(AscartError):
    """The top coefficient of a pole's principal part vanishes."""


class DuplicatePoleLocation(AscartError):
    """Two poles share the same location."""


class MissingInfinitePole(AscartError):
    """The first pole is not at infinity.

    Apply a fractional linear substitution (moebius_substitute) that moves
    one pole of f to infinity, then rebuild the curve.
    """


class ConstantTermOnFinitePole(AscartError):
    """A principal part at a finite pole carries a constant term."""


class ConditionNotSatisfied(AscartError):
    """An operation requires p = 1 (mod L) and the curve does not satisfy it."""


class NotInSpan(AscartError):
    """A differential produced a monomial outside the regular basis.

    This never happens on valid input; it signals an implementation bug.
    """


class NotInH(AscartError):
    """The given basis form does not belong to the pivot subset H."""


class DNotCoprime(AscartError):
    """The monomial exponent d is divisible by p."""


class InconsistentCounts(AscartError):
    """Point counts do not come from any curve (non-integral L-coefficients)."""


class NotShrinkable(AscartError):
    """A Newton polygon multiplicity is not divisible by p - 1."""


class FieldTooSmall(AscartError):
    """The coefficient field has too few elements for the requested draw."""


class ParseError(AscartError):
    """A curve-spec file is malformed."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
