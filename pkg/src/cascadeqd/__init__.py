"""Cascade three-level quantum dot coupled to an acoustic phonon reservoir.

Simulation library and CLI for the driven ladder system |1> - |2> - |3> whose
upper transition sees the phonon bath as an inverted-oscillator reservoir:
steady states, transients, and the optical observables (populations,
two-photon coherence, squeezing variance, g2, radiation intensity), validated
against the closed-form results the model admits.
"""

from .model import (
    BasisKind,
    BasisTransform,
    DegenerateParametersError,
    DensityMatrix,
    DressedParameters,
    InvalidRegimeError,
    PhononMode,
    StateValidationError,
    SuperpositionCoeffs,
    SystemParams,
    basis_transform,
    bose_occupation,
    dressed_parameters,
    effective_coupling,
    effective_rabi,
    effective_rabi_pair,
    omega_w_is_zero,
    superposition_coeffs,
)
from .generator import (
    LindbladTerm,
    Superoperator,
    conjugated,
    full_generator,
    hamiltonian,
    phonon_liouvillian,
    radiative_liouvillian,
    rhs_eq22,
    rhs_reduced,
)
from .dynamics import (
    DegenerateSteadyStateError,
    IntegrationFailureError,
    IntegratorConfig,
    ReducedTrajectory,
    SteadyStateResult,
    TimeSeries,
    evolve,
    evolve_reduced,
    steady_state,
)
from .observables import (
    ObservableRecord,
    g2,
    intensity,
    observables_of,
    purity,
    series_observables,
    variance_normally_ordered,
)
from .oracles import (
    ClosedFormSteadyState,
    dark_state_rate_check,
    g2_closed_form,
    steady_closed_form,
    transient_closed_form,
    variance_closed_form,
)

__version__ = "0.1.0"
