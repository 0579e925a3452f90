"""Steady states by constrained linear solve; transients by adaptive RK4.

The steady state of a trace-preserving generator L is the unit-trace solution
of L vec(rho) = 0.  Since L always annihilates the trace functional, the row
of L corresponding to the (0, 0) matrix element is replaced by the trace
constraint and the resulting 9x9 system is solved directly.  Generators with
more than one stationary state raise `DegenerateSteadyStateError` carrying the
null-space dimension rather than silently picking one.

Time evolution uses classic fourth-order Runge-Kutta with step-doubling error
control on the 9-component vectorized state.  Sampled states are
re-symmetrized (rho <- (rho + rho^dag)/2) before storage but never projected
to positivity: an eigenvalue below the positivity tolerance indicates
integrator failure and aborts with diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .model import (
    BasisKind,
    DensityMatrix,
    StateValidationError,
    SystemParams,
    effective_rabi_pair,
)
from .generator import (
    Superoperator,
    rhs_reduced,
    unvectorize,
    vectorize,
    _require_reduced_regime,
)

__all__ = [
    "DegenerateSteadyStateError",
    "IntegrationFailureError",
    "IntegratorConfig",
    "SteadyStateResult",
    "TimeSeries",
    "ReducedTrajectory",
    "steady_state",
    "evolve",
    "evolve_reduced",
]

STEADY_RESIDUAL_TOL = 1e-9
FINAL_TRACE_TOL = 1e-9
# Singular values below this fraction of the largest count as null directions.
_NULLSPACE_RTOL = 1e-12


class DegenerateSteadyStateError(RuntimeError):
    """The generator has more than one stationary state."""

    def __init__(self, nullity: int):
        super().__init__(
            f"steady state is not unique: the generator has a {nullity}-dimensional null space"
        )
        self.nullity = nullity


class IntegrationFailureError(RuntimeError):
    """Adaptive integration could not continue; carries the last good time."""

    def __init__(self, message: str, last_good_time: float):
        super().__init__(f"{message} (last good time t = {last_good_time:.6g})")
        self.last_good_time = last_good_time


@dataclass(frozen=True)
class IntegratorConfig:
    """Step control for the adaptive RK4 integrator.

    `dt_initial = None` derives a first step from the generator norm; the
    `for_params` factory instead resolves both the decay and the beat
    timescales of a parameter set.
    """

    dt_initial: float | None = None
    rel_tol: float = 1e-8
    abs_tol: float = 1e-10
    max_steps: int = 2_000_000

    def __post_init__(self):
        if self.dt_initial is not None and self.dt_initial <= 0.0:
            raise ValueError("dt_initial must be > 0")
        if self.rel_tol <= 0.0 or self.abs_tol <= 0.0 or self.max_steps <= 0:
            raise ValueError("tolerances and max_steps must be positive")

    @classmethod
    def for_params(cls, params: SystemParams, **overrides) -> "IntegratorConfig":
        omega_w, omega_u = effective_rabi_pair(params)
        decay = params.big_gamma2 + params.big_gamma3 + (2.0 * params.nbar + 1.0) * params.gamma
        beat = 4.0 * max(abs(omega_w), abs(omega_u), abs(params.delta), 1.0)
        dt = 0.5 * min(1.0 / decay, 1.0 / beat)
        return cls(dt_initial=dt, **overrides)


@dataclass(frozen=True)
class SteadyStateResult:
    state: DensityMatrix
    residual: float


@dataclass(frozen=True)
class TimeSeries:
    """States sampled at strictly increasing times (units of 1/gamma0)."""

    times: np.ndarray
    states: tuple[DensityMatrix, ...]
    basis: BasisKind

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        if t.ndim != 1 or len(t) != len(self.states):
            raise ValueError("times and states must have matching length")
        if len(t) > 1 and np.any(np.diff(t) <= 0.0):
            raise ValueError("times must be strictly increasing")
        t = t.copy()
        t.flags.writeable = False
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "states", tuple(self.states))

    def populations(self, index: int) -> np.ndarray:
        return np.array([s.population(index) for s in self.states])

    def elements(self, i: int, j: int) -> np.ndarray:
        return np.array([s.entries[i, j] for s in self.states])


@dataclass(frozen=True)
class ReducedTrajectory:
    """Sampled solutions of the two decoupled blocks (omega_w = 0, no radiative decay)."""

    times: np.ndarray
    block4: np.ndarray  # columns rho_22, rho_ww, rho_uu, rho_2u
    block2: np.ndarray  # columns rho_2w, rho_wu


def steady_state(generator: Superoperator) -> SteadyStateResult:
    """Unique stationary density matrix of a trace-preserving generator.

    Raises `DegenerateSteadyStateError` when the null space has dimension
    above one, and `IntegrationFailureError` never; a residual above the
    tolerance (ill-conditioned solve) raises `RuntimeError`.
    """
    lmat = generator.entries
    svals = np.linalg.svd(lmat, compute_uv=False)
    nullity = int(np.sum(svals <= _NULLSPACE_RTOL * svals[0]))
    if nullity > 1:
        raise DegenerateSteadyStateError(nullity)

    constrained = lmat.copy()
    constrained[0, :] = np.zeros(9)
    constrained[0, [0, 4, 8]] = 1.0
    rhs = np.zeros(9, dtype=complex)
    rhs[0] = 1.0
    vec = np.linalg.solve(constrained, rhs)

    rho = unvectorize(vec)
    rho = 0.5 * (rho + rho.conj().T)
    residual = float(np.linalg.norm(lmat @ vectorize(rho)))
    if residual >= STEADY_RESIDUAL_TOL:
        raise RuntimeError(
            f"constrained steady-state solve left residual {residual:.3e} >= {STEADY_RESIDUAL_TOL}"
        )
    state = DensityMatrix(rho, generator.basis)
    return SteadyStateResult(state=state, residual=residual)


def _adaptive_rk4(
    deriv: Callable[[np.ndarray], np.ndarray],
    y0: np.ndarray,
    sample_times: np.ndarray,
    config: IntegratorConfig,
    dt_fallback: float,
    on_sample: Callable[[float, np.ndarray], None],
):
    """March y' = deriv(y) through `sample_times`, calling on_sample at each.

    Classic RK4 with step doubling: the halved-step solution is kept with
    local extrapolation, and the error estimate ||y_half - y_full|| / 15
    is compared against abs_tol + rel_tol * ||y||.
    """

    def rk4(y: np.ndarray, h: float) -> np.ndarray:
        k1 = deriv(y)
        k2 = deriv(y + 0.5 * h * k1)
        k3 = deriv(y + 0.5 * h * k2)
        k4 = deriv(y + h * k3)
        return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    y = y0.astype(complex)
    t = float(sample_times[0])
    on_sample(t, y)
    h = config.dt_initial if config.dt_initial is not None else dt_fallback
    steps = 0
    for target in sample_times[1:]:
        while t < target - 1e-14:
            h = min(h, target - t)
            full = rk4(y, h)
            half = rk4(rk4(y, 0.5 * h), 0.5 * h)
            diff = half - full
            err = float(np.linalg.norm(diff)) / 15.0
            scale = config.abs_tol + config.rel_tol * max(
                float(np.linalg.norm(y)), float(np.linalg.norm(half))
            )
            steps += 1
            if steps > config.max_steps:
                raise IntegrationFailureError("max_steps exceeded", last_good_time=t)
            if err <= scale:
                t += h
                y = half + diff / 15.0  # local extrapolation
                growth = 5.0 if err == 0.0 else min(5.0, 0.9 * (scale / err) ** 0.2)
                h = h * max(1.0, growth)
            else:
                h = h * max(0.2, 0.9 * (scale / err) ** 0.2)
                if h <= 1e-15:
                    raise IntegrationFailureError("step size underflow", last_good_time=t)
        t = float(target)
        on_sample(t, y)


def _sample_grid(t_max: float, sample_every: float) -> np.ndarray:
    if t_max <= 0.0:
        raise ValueError("t_max must be > 0")
    if sample_every <= 0.0:
        raise ValueError("sample_every must be > 0")
    count = int(math.floor(t_max / sample_every + 1e-9))
    return np.arange(count + 1) * sample_every


def evolve(
    generator: Superoperator,
    rho0: DensityMatrix,
    t_max: float,
    config: IntegratorConfig | None = None,
    sample_every: float | None = None,
) -> TimeSeries:
    """Integrate d rho/dt = L rho from rho0, sampling every `sample_every`.

    Every stored sample is re-symmetrized and validated (trace, Hermiticity,
    positivity); the final trace drift must stay below 1e-9.
    """
    if rho0.basis is not generator.basis:
        raise ValueError(
            f"initial state basis {rho0.basis.value} does not match generator basis {generator.basis.value}"
        )
    if config is None:
        config = IntegratorConfig()
    if sample_every is None:
        sample_every = t_max / 500.0
    grid = _sample_grid(t_max, sample_every)

    lmat = generator.entries
    scale = max(1.0, float(np.max(np.abs(lmat))))
    dt_fallback = 0.25 / scale

    times: list[float] = []
    states: list[DensityMatrix] = []

    def on_sample(t: float, y: np.ndarray):
        rho = unvectorize(y)
        rho = 0.5 * (rho + rho.conj().T)
        try:
            state = DensityMatrix(rho, generator.basis)
        except StateValidationError as exc:
            raise IntegrationFailureError(
                f"sample at t = {t:.6g} is not a valid state: {exc}", last_good_time=t
            ) from exc
        times.append(t)
        states.append(state)

    _adaptive_rk4(lambda y: lmat @ y, vectorize(rho0.entries), grid, config, dt_fallback, on_sample)

    drift = abs(np.trace(states[-1].entries) - 1.0)
    if drift >= FINAL_TRACE_TOL:
        raise IntegrationFailureError(
            f"final trace drift {drift:.3e} exceeds {FINAL_TRACE_TOL}",
            last_good_time=float(times[-1]),
        )
    return TimeSeries(np.array(times), tuple(states), generator.basis)


def evolve_reduced(
    params: SystemParams,
    init4: Sequence[complex],
    init2: Sequence[complex],
    t_max: float,
    config: IntegratorConfig | None = None,
    sample_every: float | None = None,
) -> ReducedTrajectory:
    """Integrate the decoupled 4- and 2-component blocks (omega_w = 0, no radiative decay)."""
    _require_reduced_regime(params)
    if config is None:
        config = IntegratorConfig.for_params(params)
    if sample_every is None:
        sample_every = t_max / 500.0
    grid = _sample_grid(t_max, sample_every)

    y0 = np.concatenate([np.asarray(init4, dtype=complex), np.asarray(init2, dtype=complex)])
    if y0.shape != (6,):
        raise ValueError("init4 must have 4 components and init2 must have 2")

    def deriv(y: np.ndarray) -> np.ndarray:
        d4, d2 = rhs_reduced(params, y[:4], y[4:])
        return np.concatenate([d4, d2])

    _, omega_u = effective_rabi_pair(params)
    dt_fallback = 0.25 / max(1.0, abs(omega_u), params.gamma * (2.0 * params.nbar + 1.0))

    times: list[float] = []
    samples: list[np.ndarray] = []

    def on_sample(t: float, y: np.ndarray):
        times.append(t)
        samples.append(y.copy())

    _adaptive_rk4(deriv, y0, grid, config, dt_fallback, on_sample)
    stacked = np.array(samples)
    return ReducedTrajectory(np.array(times), stacked[:, :4], stacked[:, 4:])
