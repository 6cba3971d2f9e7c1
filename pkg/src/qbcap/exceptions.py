"""
Custom Exceptions for qbcap

Domain-specific exceptions raised by the linear algebra layer, the model,
the integrators and the relation catalog.
"""


class QBCapError(Exception):
    """Base exception for all qbcap errors."""

    pass


class LinearAlgebraError(QBCapError):
    """Raised when an operator does not have the required structure."""

    pass


class NonHermitianError(LinearAlgebraError):
    """Raised when a matrix expected to be Hermitian is not."""

    pass


class DimensionMismatchError(LinearAlgebraError):
    """Raised when operator dimensions are wrong or do not match."""

    pass


class InvalidDensityOperatorError(LinearAlgebraError):
    """Raised when a matrix is not a unit-trace positive semidefinite operator."""

    pass


class NotTracePreservingError(LinearAlgebraError):
    """Raised when a Kraus set does not satisfy the completeness relation."""

    pass


class NotPureError(QBCapError):
    """Raised when a pure-state formula is applied to a mixed state."""

    pass


class MajorizationError(QBCapError):
    """Raised when probability vectors cannot be compared by majorization."""

    pass


class LengthMismatchError(MajorizationError):
    """Raised when compared spectra have different lengths."""

    pass


class NotNormalizedError(MajorizationError):
    """Raised when a spectrum does not sum to one."""

    pass


class NotMajorizedError(MajorizationError):
    """Raised when a required majorization relation does not hold."""

    pass


class InvalidXStateError(QBCapError):
    """Raised when X-state populations or coherences violate positivity."""

    pass


class IntegrationError(QBCapError):
    """Raised when numerical time integration fails."""

    pass


class StepTooCoarseError(IntegrationError):
    """Raised when the integrator cannot reach its error target."""

    pass


class HermiticityDriftError(IntegrationError):
    """Raised when a symmetrization correction exceeds the configured limit."""

    pass


class NoiseError(QBCapError):
    """Raised for invalid dephasing-channel requests."""

    pass


class GammaOutOfRangeError(NoiseError):
    """Raised when the phase-flip probability is outside [0, 1]."""

    pass


class GammaAtHalfError(NoiseError):
    """Raised when an attenuation-inverting relation is evaluated at gamma = 1/2."""

    pass


class UnknownRelationError(QBCapError, KeyError):
    """Raised when a relation name is not in the catalog."""

    pass


class ConfigurationError(QBCapError, ValueError):
    """Raised when configuration is invalid."""

    pass


class ParameterError(ConfigurationError):
    """Raised when Hamiltonian parameters are invalid."""

    pass
