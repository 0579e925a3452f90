"""Physical observables of a state: populations, coherence, squeezing, g2, intensity.

The squeezing figure of merit is the normally ordered variance of the emitted
quadrature E_phi,

    <:(dE_phi)^2:> / psi^2 = rho_22 + rho_33
                             - Re[(rho_32 + rho_21) e^{i phi}]
                             + Re[rho_31 e^{2 i phi}],

reported throughout in units of the geometrical factor psi^2 (set to 1).  A
negative value certifies squeezing of that quadrature.  The one-photon terms
vanish in steady state but are kept so the expression is valid on transients.

g2 is the single-time ratio rho_33 / (rho_33 + rho_22)^2; with no excited
population it is defined as 0 (flagged, not raised) so sweeps never abort.

Radiated intensity is big_gamma3*rho_33 + big_gamma2*rho_22.  When the two
radiative rates are equal (including the weak-emission limit where both are
zero and the dynamics carry no radiative damping), the assembled record
reports it in units of that common rate, i.e. rho_22 + rho_33.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    BasisKind,
    DensityMatrix,
    SystemParams,
    basis_transform,
    effective_rabi_pair,
)

__all__ = [
    "ObservableRecord",
    "observables_of",
    "variance_normally_ordered",
    "g2",
    "has_excited_population",
    "intensity",
    "purity",
    "series_observables",
]


@dataclass(frozen=True)
class ObservableRecord:
    """Every quantity the simulation reports for a single state."""

    populations_bare: tuple[float, float, float]  # rho_11, rho_22, rho_33
    populations_super: tuple[float, float, float]  # rho_ww, rho_uu, rho_22
    populations_brightdark: tuple[float, float]  # rho_bb, rho_dd (nan if undefined)
    coherence13: complex
    purity: float
    variance_phi: float
    g2: float
    intensity: float
    inversion_one: float  # rho_33 - rho_22
    inversion_two: float  # rho_33 - rho_11


def _to_bare(rho: DensityMatrix, params: SystemParams | None) -> np.ndarray:
    if rho.basis is BasisKind.BARE:
        return rho.entries
    if params is None:
        raise ValueError(
            f"state is in the {rho.basis.value} basis; params are needed to convert to bare"
        )
    return basis_transform(rho.basis, BasisKind.BARE, params).apply(rho).entries


def variance_normally_ordered(
    rho: DensityMatrix, phi: float, params: SystemParams | None = None
) -> float:
    """Normally ordered quadrature variance at phase phi, in units of psi^2."""
    m = _to_bare(rho, params)
    one_photon = (m[2, 1] + m[1, 0]) * np.exp(1j * phi)
    two_photon = m[2, 0] * np.exp(2j * phi)
    value = m[1, 1].real + m[2, 2].real - one_photon.real + two_photon.real
    return float(value)


def has_excited_population(rho: DensityMatrix, params: SystemParams | None = None) -> bool:
    m = _to_bare(rho, params)
    return m[1, 1].real + m[2, 2].real > 0.0


def g2(rho: DensityMatrix, params: SystemParams | None = None) -> float:
    """Second-order coherence rho_33 / (rho_33 + rho_22)^2; 0 if nothing is excited."""
    m = _to_bare(rho, params)
    excited = m[1, 1].real + m[2, 2].real
    if excited <= 0.0:
        return 0.0
    return float(m[2, 2].real / excited**2)


def intensity(
    rho: DensityMatrix,
    big_gamma2: float,
    big_gamma3: float,
    params: SystemParams | None = None,
) -> float:
    """Radiated intensity big_gamma3*rho_33 + big_gamma2*rho_22 (>= 0)."""
    m = _to_bare(rho, params)
    return float(big_gamma3 * m[2, 2].real + big_gamma2 * m[1, 1].real)


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2), basis independent; 1/3 for the maximally mixed state."""
    return rho.purity()


def observables_of(rho: DensityMatrix, params: SystemParams, phi: float) -> ObservableRecord:
    """Assemble the full record, converting to the bare basis internally."""
    bare = _to_bare(rho, params)
    pop1, pop2, pop3 = (float(bare[i, i].real) for i in range(3))

    superpos = basis_transform(BasisKind.BARE, BasisKind.SUPERPOSITION, params).apply(
        DensityMatrix(bare, BasisKind.BARE)
    )
    pop_w = superpos.population(1)
    pop_u = superpos.population(2)

    omega_w, omega_u = effective_rabi_pair(params)
    if omega_w == 0.0 and omega_u == 0.0:
        pops_bd = (math.nan, math.nan)  # bright/dark undefined without a drive
    else:
        bright_dark = basis_transform(BasisKind.BARE, BasisKind.BRIGHT_DARK, params).apply(
            DensityMatrix(bare, BasisKind.BARE)
        )
        pops_bd = (bright_dark.population(1), bright_dark.population(2))

    if params.big_gamma2 == params.big_gamma3:
        # common-rate case: report in units of big_gamma (Eq.-of-motion form
        # rho_22 + rho_33), which also covers the weak-emission limit
        intensity_value = pop2 + pop3
    else:
        intensity_value = intensity(DensityMatrix(bare, BasisKind.BARE), params.big_gamma2, params.big_gamma3)

    return ObservableRecord(
        populations_bare=(pop1, pop2, pop3),
        populations_super=(pop_w, pop_u, pop2),
        populations_brightdark=pops_bd,
        coherence13=complex(bare[0, 2]),
        purity=purity(rho),
        variance_phi=variance_normally_ordered(DensityMatrix(bare, BasisKind.BARE), phi),
        g2=g2(DensityMatrix(bare, BasisKind.BARE)),
        intensity=intensity_value,
        inversion_one=pop3 - pop2,
        inversion_two=pop3 - pop1,
    )


def series_observables(series, params: SystemParams, phi: float):
    """Per-sample observable records, order preserving: [(t, record), ...]."""
    return [(float(t), observables_of(state, params, phi)) for t, state in zip(series.times, series.states)]
