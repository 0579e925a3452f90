"""Closed-form references for the omega_w = 0, no-radiative-decay regime.

Every analytic expression the model admits is implemented here independently
of the numerical engine, for differential testing and for the CLI `check`
mode.  The steady-state family (valid when omega_w = 0 and
big_gamma2 = big_gamma3 = 0):

    rho_ww = (n+1)/(3n+1),   rho_uu = rho_22 = n/(3n+1)
    rho_33 = (n+beta^2)/(3n+1), rho_22 = n/(3n+1), rho_11 = (n+alpha^2)/(3n+1)
    rho_13 = -alpha*beta/(3n+1)
    Tr(rho^2) = (3n^2 + 2n + 1)/(3n+1)^2

with the variance (2n + beta*(beta - alpha*cos 2phi))/(3n+1) and
g2 = (3n+1)(n+beta^2)/(2n+beta^2)^2.

The transient forms are first order in gamma/omega_u (strong drive,
omega_u >> delta, n*gamma); they contain no detuning, so the detuning is
ignored here and comparisons against the full numerics are made at delta = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    BasisKind,
    DensityMatrix,
    InvalidRegimeError,
    SystemParams,
    basis_transform,
    effective_rabi_pair,
    omega_w_is_zero,
    superposition_coeffs,
)

__all__ = [
    "ClosedFormSteadyState",
    "steady_closed_form",
    "variance_closed_form",
    "g2_closed_form",
    "transient_closed_form",
    "dark_state_rate_check",
]


def _require_ow_zero_gamma_free(params: SystemParams, what: str):
    if params.big_gamma2 != 0.0 or params.big_gamma3 != 0.0:
        raise InvalidRegimeError(f"{what} requires big_gamma2 = big_gamma3 = 0")
    if not omega_w_is_zero(params):
        raise InvalidRegimeError(f"{what} requires omega_w = 0")


@dataclass(frozen=True)
class ClosedFormSteadyState:
    """Steady-state populations, coherence and purity in closed form."""

    pop_w: float
    pop_u: float
    pop_2: float
    pop_1: float
    pop_2b: float
    pop_3: float
    coherence13: float
    purity: float

    def superposition_state(self) -> DensityMatrix:
        """The state as a density matrix in the {2, w, u} order (diagonal)."""
        return DensityMatrix(
            np.diag([self.pop_2, self.pop_w, self.pop_u]).astype(complex),
            BasisKind.SUPERPOSITION,
        )

    def bare_state(self) -> DensityMatrix:
        """The state in the bare basis, carrying the two-photon coherence."""
        m = np.diag([self.pop_1, self.pop_2b, self.pop_3]).astype(complex)
        m[0, 2] = m[2, 0] = self.coherence13
        return DensityMatrix(m, BasisKind.BARE)


def steady_closed_form(params: SystemParams) -> ClosedFormSteadyState:
    """Steady state of the omega_w = 0, no-radiative-decay master equation."""
    _require_ow_zero_gamma_free(params, "the closed-form steady state")
    c = superposition_coeffs(params.gamma1, params.gamma3)
    n = params.nbar
    denom = 3.0 * n + 1.0
    return ClosedFormSteadyState(
        pop_w=(n + 1.0) / denom,
        pop_u=n / denom,
        pop_2=n / denom,
        pop_1=(n + c.alpha**2) / denom,
        pop_2b=n / denom,
        pop_3=(n + c.beta**2) / denom,
        coherence13=-c.alpha * c.beta / denom,
        purity=(3.0 * n**2 + 2.0 * n + 1.0) / denom**2,
    )


def variance_closed_form(params: SystemParams, phi: float) -> float:
    """Steady-state variance (2n + beta*(beta - alpha*cos 2phi))/(3n+1).

    Always positive for alpha < beta; its global minimum over the family at
    nbar = 0, phi = 0 is -(sqrt(2)-1)/2, reached at beta/alpha = sqrt(2)-1.
    """
    _require_ow_zero_gamma_free(params, "the closed-form variance")
    c = superposition_coeffs(params.gamma1, params.gamma3)
    n = params.nbar
    return (2.0 * n + c.beta * (c.beta - c.alpha * math.cos(2.0 * phi))) / (3.0 * n + 1.0)


def g2_closed_form(params: SystemParams) -> float:
    """Steady-state g2 = (3n+1)(n+beta^2)/(2n+beta^2)^2.

    Tends to 1/beta^2 at nbar = 0 and to 3/4 as nbar -> infinity.
    """
    _require_ow_zero_gamma_free(params, "the closed-form g2")
    c = superposition_coeffs(params.gamma1, params.gamma3)
    n = params.nbar
    b2 = c.beta**2
    return (3.0 * n + 1.0) * (n + b2) / (2.0 * n + b2) ** 2


def transient_closed_form(params: SystemParams, rho0_diag, t):
    """First-order strong-drive transients (rho_ww(t), rho_uu(t), rho_2u(t)).

    `rho0_diag` = (rho_22(0), rho_ww(0), rho_uu(0)) is a diagonal initial state
    in the superposition basis; `t` may be a scalar or an array.  Valid for
    omega_w = 0, no radiative decay and omega_u >> nbar*gamma; the printed
    forms carry no detuning dependence.
    """
    _require_ow_zero_gamma_free(params, "the transient closed form")
    _, omega_u = effective_rabi_pair(params)
    if omega_u <= 0.0:
        raise InvalidRegimeError("the transient closed form requires omega_u > 0")
    r22_0, rww_0, ruu_0 = (float(x) for x in rho0_diag)
    n, g = params.nbar, params.gamma
    t = np.asarray(t, dtype=float)

    slow = np.exp(-(3.0 * n + 1.0) * g * t)
    fast = np.exp(-(n + 1.0) * g * t)
    beat_sin = np.sin(2.0 * omega_u * t)
    beat_cos = np.cos(2.0 * omega_u * t)
    w_inf = (n + 1.0) / (3.0 * n + 1.0)
    u_inf = n / (3.0 * n + 1.0)

    rho_ww = (
        w_inf
        - (w_inf - rww_0) * slow
        + ((n + 1.0) * g / (2.0 * omega_u)) * (r22_0 - ruu_0) * fast * beat_sin
    )
    rho_uu = (
        u_inf
        + 0.5 * (w_inf - rww_0) * slow
        - 0.5 * (r22_0 - ruu_0) * fast * beat_cos
        - (n * g / (2.0 * omega_u)) * (rww_0 - 2.0 * ruu_0) * fast * beat_sin
    )
    rho_2u = 1j * (r22_0 - ruu_0) * fast * beat_sin - 1j * (g / omega_u) * (
        (n + 1.0) - (3.0 * n + 1.0) * rww_0
    ) * (slow - fast * beat_cos)
    return rho_ww, rho_uu, rho_2u


def dark_state_rate_check(params: SystemParams) -> float:
    """Steady population of the dark state |d> for the omega_w = omega_u drive.

    Computed from the numerical steady state expressed in the bright/dark
    basis; equals 1 at nbar = 0 (the system is optically pumped into the pure
    dark state).  The printed equation of motion for rho_dd carries a pumping
    term (n+1)*rho_22 with no explicit rate; the generator-derived dynamics
    used here carry (n+1)*gamma*rho_22.
    """
    if params.big_gamma2 != 0.0 or params.big_gamma3 != 0.0:
        raise InvalidRegimeError("the dark-state check requires big_gamma2 = big_gamma3 = 0")
    omega_w, omega_u = effective_rabi_pair(params)
    scale = max(abs(omega_w), abs(omega_u))
    if scale == 0.0 or abs(omega_w - omega_u) > 1e-9 * scale:
        raise InvalidRegimeError("the dark-state check requires omega_w = omega_u != 0")

    from .dynamics import steady_state
    from .generator import full_generator

    result = steady_state(full_generator(params, BasisKind.SUPERPOSITION))
    in_bd = basis_transform(BasisKind.SUPERPOSITION, BasisKind.BRIGHT_DARK, params).apply(
        result.state
    )
    return in_bd.population(2)
