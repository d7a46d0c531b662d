"""Exception types raised by the library."""


class XqcorrError(ValueError):
    """Base class for all xqcorr errors."""


class NonHermitianInput(XqcorrError):
    """Matrix handed to a Hermitian eigensolver is not Hermitian."""


class InvalidState(XqcorrError):
    """Matrix violates the density-matrix invariants (Hermitian, unit trace, PSD)."""


class UnphysicalParams(XqcorrError):
    """X-state parameters lie outside the physical region."""


class NotAnXState(XqcorrError):
    """Density matrix has support off the diagonal/anti-diagonal pattern."""


class NotNormalized(XqcorrError):
    """Measurement parametrization does not lie on the unit sphere."""


class NegativeDiscriminant(XqcorrError):
    """A closed-form radicand is negative beyond floating-point tolerance."""


class OutOfRange(XqcorrError):
    """Scalar argument outside its admissible interval."""


class OrderingViolated(XqcorrError):
    """Correlation coefficients do not satisfy |c1| < |c2| < |c3|."""


class NegativeSpectrum(XqcorrError):
    """Spectrum that must be nonnegative has a significantly negative eigenvalue."""
