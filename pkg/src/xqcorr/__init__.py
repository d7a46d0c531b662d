"""Correlation measures of two-qubit X states, with matrix-path cross-checks."""

from .deficit import (DeficitMethod, DeficitResult, bell_diagonal_deficit, deficit_closed,
                      deficit_oracle, post_measurement_entropy, theta_monotonicity_check)
from .dynamics import (PhaseFlipChannel, SweepRecord, apply_channel_matrix,
                       apply_channel_params, deficit_under_channel_closed,
                       find_sudden_death, phase_flip_kraus, sweep)
from .entanglement import (ConcurrenceBreakdown, concurrence_closed, concurrence_general,
                           rho_rhotilde_spectrum_closed, spin_flip)
from .errors import (InvalidState, NegativeDiscriminant, NegativeSpectrum, NonHermitianInput,
                     NotAnXState, NotNormalized, OrderingViolated, OutOfRange,
                     UnphysicalParams, XqcorrError)
from .linalg import hermitian_eigenvalues, kron, shannon_entropy, validate_density_matrix, von_neumann_entropy
from .measurement import (BlochMeasurement, UnitaryParams, bloch_from_unitary, dephase,
                          measurement_from_bloch, post_measurement_spectrum,
                          unitary_from_bloch, unitary_matrix)
from .verify import VerifyCheck, VerifyReport, run_verification
from .xstate import (XSpectrum, XStateParams, entropy_closed, from_density_matrix,
                     is_physical, spectrum_closed, to_density_matrix, validate_physical)

__version__ = "0.1.0"

__all__ = [
    "BlochMeasurement",
    "ConcurrenceBreakdown",
    "DeficitMethod",
    "DeficitResult",
    "InvalidState",
    "NegativeDiscriminant",
    "NegativeSpectrum",
    "NonHermitianInput",
    "NotAnXState",
    "NotNormalized",
    "OrderingViolated",
    "OutOfRange",
    "PhaseFlipChannel",
    "SweepRecord",
    "UnitaryParams",
    "UnphysicalParams",
    "VerifyCheck",
    "VerifyReport",
    "XSpectrum",
    "XStateParams",
    "XqcorrError",
    "apply_channel_matrix",
    "apply_channel_params",
    "bell_diagonal_deficit",
    "bloch_from_unitary",
    "concurrence_closed",
    "concurrence_general",
    "deficit_closed",
    "deficit_oracle",
    "deficit_under_channel_closed",
    "dephase",
    "entropy_closed",
    "find_sudden_death",
    "from_density_matrix",
    "hermitian_eigenvalues",
    "is_physical",
    "kron",
    "measurement_from_bloch",
    "phase_flip_kraus",
    "post_measurement_entropy",
    "post_measurement_spectrum",
    "rho_rhotilde_spectrum_closed",
    "run_verification",
    "shannon_entropy",
    "spectrum_closed",
    "spin_flip",
    "sweep",
    "theta_monotonicity_check",
    "to_density_matrix",
    "unitary_from_bloch",
    "unitary_matrix",
    "validate_density_matrix",
    "validate_physical",
    "von_neumann_entropy",
]
