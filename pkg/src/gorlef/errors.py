"""Exception types shared across the package."""


class GorlefError(Exception):
    """Base class for all package-specific errors."""


class NonSquareError(GorlefError):
    """Determinant requested for a non-square matrix."""


class RingMismatchError(GorlefError):
    """Operands live in different polynomial rings (S vs R) or sizes."""


class DegreeOutOfRangeError(GorlefError):
    """A degree index falls outside the valid range for the operation."""


class ZeroGeneratorError(GorlefError):
    """The dual generator F is zero; no algebra is defined."""


class NotOSequenceError(GorlefError):
    """The given sequence violates a Macaulay growth bound."""


class NotSIError(GorlefError):
    """The given sequence is not an SI-sequence."""


class NoWitnessFoundError(GorlefError):
    """Randomized search exhausted its attempts without a witness.

    One-sided failure: absence of a witness is never proof that the
    property fails.  Carries diagnostics for reporting.
    """

    def __init__(self, message: str, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class RealizationMismatchError(GorlefError):
    """A constructed object fails its runtime verification."""


class DuplicateParameterError(GorlefError):
    """Generator parameters must be pairwise distinct."""


class NotPlaneConfigError(GorlefError):
    """The operation requires points in the projective plane."""


class ShapeMismatchError(GorlefError):
    """An h-vector or first-difference does not match the required shape."""


class PreconditionViolatedError(GorlefError):
    """A documented precondition of the operation does not hold."""


class BadSubsetSizeError(GorlefError):
    """An index subset has the wrong cardinality."""


class TheoremTensionError(GorlefError):
    """A verified theorem instance came back false.

    Either the instance is outside the theorem's hypotheses or there is
    an implementation bug; never swallowed silently.
    """

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class HessianRankMismatchError(GorlefError):
    """Hessian-determinant and multiplication-rank verdicts disagree.

    The two routes are provably equivalent, so a mismatch always
    indicates an internal bug and is raised loudly.
    """
