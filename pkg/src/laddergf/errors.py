"""Exception types raised across the package.

Validation errors carry the first offending index (where one exists) so a
caller can point at the bad element of its input instead of guessing.
"""


class LadderError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(LadderError):
    """Malformed input data (ladders, bivectors, endpoints, instances)."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class NotWeaklyIncreasing(ValidationError):
    """Boundary values decrease somewhere."""


class ValueOutOfRange(ValidationError):
    """A boundary value falls outside [1, b+1]."""


class NotAnUpperLadder(ValidationError):
    """A 0/1 mask is not column-contiguous from the bottom or not monotone."""


class InvalidBivector(ValidationError):
    """Row/column index sequences are not strictly increasing positive ints."""


class EndpointOutsideLadder(ValidationError):
    """A start or end point violates a region membership condition."""


class ChainViolation(ValidationError):
    """Start or end points break the required ordering chains."""


class PointOutsideLadder(ValidationError):
    """A lattice point does not lie in the ladder region."""


class BoundaryNotFlatLeftOfFirstStart(ValidationError):
    """The boundary is required to be constant left of the first start point."""


class StarRequiresNonemptyFirstColumn(ValidationError):
    """Pinned-first-entry generating functions need alpha_1 <= eps_1."""


class PreconditionViolated(ValidationError):
    """A closed form or recursion was invoked outside its hypotheses."""


class CapExceeded(LadderError):
    """Brute-force array enumeration would exceed the requested size cap."""


class InstanceTooLarge(LadderError):
    """Brute-force path-family enumeration would exceed the safety guard."""


class MismatchFound(LadderError):
    """Cross-method verification found two results that differ."""


class OddExponentPresent(LadderError):
    """A polynomial expected to be even in q has an odd-exponent term.

    This is never a valid outcome of the determinant pipeline; seeing it
    means a bug or hand-built invalid input.
    """

    def __init__(self, exponent: int):
        super().__init__(f"nonzero coefficient at odd q-exponent {exponent}")
        self.exponent = exponent
