"""Model parameters, basis constructions and density-matrix representation.

The physical system is a cascade (ladder) three-level emitter |1> - |2> - |3>
driven by a single laser on two-photon resonance and damped by a low-frequency
phonon reservoir.  After the polaron/rotating-wave reduction the model is fully
specified by eight real numbers (all rates and frequencies in units of a
reference rate gamma0 = 1):

    gamma1, gamma3   phonon-induced damping rates of the two transitions
    big_gamma2/3     radiative (spontaneous-emission) rates of |2> and |3>
    omega1, omega3   effective Rabi frequencies of the two laser couplings
    delta            one-photon detuning
    nbar             mean thermal occupation of the phonon modes

Four orthonormal bases of the three-dimensional state space are used
throughout; their index orders are canonical and never permuted implicitly:

    bare            {|1>, |2>, |3>}
    superposition   {|2>, |w>, |u>}   with |u> = alpha|3> + beta|1>,
                                           |w> = beta|3> - alpha|1>
    dressed         {|w>, |m>, |n>}   eigenbasis of the driven |2>-|u> pair
                                      (defined only when omega_w = 0)
    bright/dark     {|2>, |b>, |d>}   drive-adapted combinations of |w>, |u>

All types are immutable values and all operations are pure functions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "HERMITICITY_TOL",
    "TRACE_TOL",
    "POSITIVITY_TOL",
    "UNITARITY_TOL",
    "OMEGA_W_REL_TOL",
    "DegenerateParametersError",
    "InvalidRegimeError",
    "StateValidationError",
    "BasisKind",
    "SystemParams",
    "SuperpositionCoeffs",
    "PhononMode",
    "DensityMatrix",
    "BasisTransform",
    "DressedParameters",
    "superposition_coeffs",
    "effective_rabi",
    "effective_coupling",
    "bose_occupation",
    "effective_rabi_pair",
    "omega_w_is_zero",
    "basis_transform",
    "dressed_parameters",
]

# State-validity tolerances (shared by every module that produces states).
HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-10
POSITIVITY_TOL = 1e-9
UNITARITY_TOL = 1e-12
# |omega_w| below this (relative to the bare Rabi frequencies) counts as zero.
OMEGA_W_REL_TOL = 1e-9


class DegenerateParametersError(ValueError):
    """Parameters degenerate enough that a quantity is undefined."""


class InvalidRegimeError(ValueError):
    """Operation requested outside the parameter regime where it is defined."""


class StateValidationError(ValueError):
    """A matrix failed the density-matrix invariants."""


class BasisKind(enum.Enum):
    """The four supported bases, each with a fixed canonical index order."""

    BARE = "bare"
    SUPERPOSITION = "superposition"
    DRESSED = "dressed"
    BRIGHT_DARK = "bright_dark"

    @property
    def labels(self) -> tuple[str, str, str]:
        return _BASIS_LABELS[self]


_BASIS_LABELS = {
    BasisKind.BARE: ("1", "2", "3"),
    BasisKind.SUPERPOSITION: ("2", "w", "u"),
    BasisKind.DRESSED: ("w", "m", "n"),
    BasisKind.BRIGHT_DARK: ("2", "b", "d"),
}


@dataclass(frozen=True)
class SystemParams:
    """All model rates and drives, in units of the reference rate gamma0 = 1.

    The Rabi frequencies and the detuning are signed; the condition
    omega_w = omega_u with gamma1 > gamma3 requires omega1 < 0 (a pi phase
    on the lower drive).
    """

    gamma1: float
    gamma3: float
    big_gamma2: float = 0.0
    big_gamma3: float = 0.0
    omega1: float = 0.0
    omega3: float = 0.0
    delta: float = 0.0
    nbar: float = 0.0

    def __post_init__(self):
        for name in ("gamma1", "gamma3", "big_gamma2", "big_gamma3", "nbar"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0.0:
                raise ValueError(f"{name} must be finite and >= 0, got {value}")
        for name in ("omega1", "omega3", "delta"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.gamma1 + self.gamma3 <= 0.0:
            raise DegenerateParametersError(
                "gamma1 + gamma3 must be positive: the phonon coupling defines the model"
            )

    @property
    def gamma(self) -> float:
        """Total phonon rate gamma = gamma1 + gamma3."""
        return self.gamma1 + self.gamma3


@dataclass(frozen=True)
class SuperpositionCoeffs:
    """Amplitudes (alpha, beta) of the phonon-adapted superposition states."""

    alpha: float
    beta: float

    def __post_init__(self):
        norm = self.alpha**2 + self.beta**2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"alpha^2 + beta^2 = {norm}, expected 1")


@dataclass(frozen=True)
class PhononMode:
    """One phonon mode: dimensionless coupling g_p/omega_p and occupation."""

    coupling_over_freq: float
    occupation: float

    def __post_init__(self):
        if self.occupation < 0.0:
            raise ValueError("mode occupation must be >= 0")


class DressedParameters(NamedTuple):
    theta: float
    big_omega: float
    gamma_m: float
    gamma_n: float


def superposition_coeffs(gamma1: float, gamma3: float) -> SuperpositionCoeffs:
    """Amplitudes alpha = sqrt(g1/(g1+g3)), beta = sqrt(g3/(g1+g3))."""
    if gamma1 < 0.0 or gamma3 < 0.0:
        raise ValueError("damping rates must be >= 0")
    total = gamma1 + gamma3
    if total <= 0.0:
        raise DegenerateParametersError(
            "superposition states undefined when gamma1 = gamma3 = 0"
        )
    return SuperpositionCoeffs(math.sqrt(gamma1 / total), math.sqrt(gamma3 / total))


def effective_rabi(chi: float, modes: Iterable[PhononMode]) -> float:
    """Polaron-suppressed Rabi frequency chi * exp[-1/2 sum (g/w)^2 (2n+1)].

    The magnitude never exceeds |chi|; an empty mode list returns chi.
    """
    exponent = 0.0
    for mode in modes:
        exponent += mode.coupling_over_freq**2 * (2.0 * mode.occupation + 1.0)
    return chi * math.exp(-0.5 * exponent)


def effective_coupling(g: float, omega_eff: float, delta: float) -> float:
    """Effective phonon coupling g * omega_eff / delta (finite detuning only)."""
    if delta == 0.0:
        raise ZeroDivisionError(
            "the effective coupling requires a finite detuning (delta != 0)"
        )
    return g * omega_eff / delta


def bose_occupation(freq_over_temp: float) -> float:
    """Thermal occupation 1/(exp(x) - 1) for x = hbar*omega / (kB*T) > 0."""
    if freq_over_temp <= 0.0:
        raise ValueError("freq_over_temp must be > 0")
    return 1.0 / math.expm1(freq_over_temp)


def effective_rabi_pair(params: SystemParams) -> tuple[float, float]:
    """Combination Rabi frequencies (omega_w, omega_u) of the superposition basis.

    omega_w = beta*omega3 - alpha*omega1 drives |2>-|w>,
    omega_u = alpha*omega3 + beta*omega1 drives |2>-|u>; the pair is a rotation
    of (omega1, omega3), so omega_w^2 + omega_u^2 = omega1^2 + omega3^2.
    """
    c = superposition_coeffs(params.gamma1, params.gamma3)
    omega_w = c.beta * params.omega3 - c.alpha * params.omega1
    omega_u = c.alpha * params.omega3 + c.beta * params.omega1
    return omega_w, omega_u


def omega_w_is_zero(params: SystemParams) -> bool:
    """True when omega_w vanishes to within rounding of the bare drives."""
    omega_w, _ = effective_rabi_pair(params)
    tol = OMEGA_W_REL_TOL * max(abs(params.omega1), abs(params.omega3))
    return abs(omega_w) <= tol


def dressed_parameters(params: SystemParams) -> DressedParameters:
    """Mixing angle and decay rates of the dressed |m>, |n> doublet.

    cos^2(theta) = 1/2 - delta/(2*Omega) with Omega = sqrt(delta^2 + 4 omega_u^2);
    gamma_m = 2(nbar+1)*gamma*sin^2(theta), gamma_n = 2(nbar+1)*gamma*cos^2(theta),
    so gamma_m + gamma_n = 2(nbar+1)*gamma identically.
    """
    _, omega_u = effective_rabi_pair(params)
    big_omega = math.hypot(params.delta, 2.0 * omega_u)
    if big_omega == 0.0:
        raise DegenerateParametersError(
            "dressed states undefined at omega_u = delta = 0"
        )
    cos_sq = 0.5 - params.delta / (2.0 * big_omega)
    cos_sq = min(1.0, max(0.0, cos_sq))  # clamp against rounding
    theta = math.acos(math.sqrt(cos_sq))
    pump = 2.0 * (params.nbar + 1.0) * params.gamma
    return DressedParameters(theta, big_omega, pump * (1.0 - cos_sq), pump * cos_sq)


def _as_state_matrix(entries) -> np.ndarray:
    m = np.asarray(entries, dtype=complex)
    if m.shape != (3, 3):
        raise StateValidationError(f"expected a 3x3 matrix, got shape {m.shape}")
    return m


@dataclass(frozen=True)
class DensityMatrix:
    """A 3x3 Hermitian, unit-trace, positive-semidefinite state in a tagged basis."""

    entries: np.ndarray
    basis: BasisKind

    def __post_init__(self):
        m = _as_state_matrix(self.entries)
        herm = np.max(np.abs(m - m.conj().T))
        if herm > HERMITICITY_TOL:
            raise StateValidationError(f"not Hermitian: max |rho - rho^dag| = {herm:.3e}")
        trace = m.trace()
        if abs(trace - 1.0) > TRACE_TOL:
            raise StateValidationError(f"trace = {trace}, expected 1")
        min_eig = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T)).min())
        if min_eig < -POSITIVITY_TOL:
            raise StateValidationError(f"negative eigenvalue {min_eig:.3e}")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    @classmethod
    def pure(cls, state, basis: BasisKind) -> "DensityMatrix":
        """|psi><psi| from a basis index (0..2) or a 3-component amplitude vector."""
        if isinstance(state, (int, np.integer)):
            v = np.zeros(3, dtype=complex)
            v[int(state)] = 1.0
        else:
            v = np.asarray(state, dtype=complex)
            norm = np.linalg.norm(v)
            if norm == 0.0:
                raise ValueError("zero state vector")
            v = v / norm
        return cls(np.outer(v, v.conj()), basis)

    @classmethod
    def from_diagonal(cls, weights: Sequence[float], basis: BasisKind) -> "DensityMatrix":
        w = np.asarray(weights, dtype=float)
        if w.shape != (3,) or np.any(w < 0.0) or w.sum() <= 0.0:
            raise ValueError("need three non-negative weights with positive sum")
        return cls(np.diag(w / w.sum()).astype(complex), basis)

    @classmethod
    def maximally_mixed(cls, basis: BasisKind) -> "DensityMatrix":
        return cls(np.eye(3, dtype=complex) / 3.0, basis)

    def population(self, index: int) -> float:
        return float(self.entries[index, index].real)

    def purity(self) -> float:
        return float(np.trace(self.entries @ self.entries).real)


@dataclass(frozen=True)
class BasisTransform:
    """Unitary 3x3 map from coordinates in `from_basis` to coordinates in `to_basis`."""

    matrix: np.ndarray
    from_basis: BasisKind
    to_basis: BasisKind

    def __post_init__(self):
        u = np.asarray(self.matrix, dtype=complex)
        defect = np.max(np.abs(u @ u.conj().T - np.eye(3)))
        if defect > UNITARITY_TOL:
            raise ValueError(f"transform not unitary: defect {defect:.3e}")
        u = u.copy()
        u.flags.writeable = False
        object.__setattr__(self, "matrix", u)

    def apply(self, rho: DensityMatrix) -> DensityMatrix:
        if rho.basis is not self.from_basis:
            raise ValueError(
                f"state is in basis {rho.basis.value}, transform expects {self.from_basis.value}"
            )
        u = self.matrix
        out = u @ rho.entries @ u.conj().T
        return DensityMatrix(0.5 * (out + out.conj().T), self.to_basis)

    def inverse(self) -> "BasisTransform":
        return BasisTransform(self.matrix.conj().T, self.to_basis, self.from_basis)


def _basis_vectors(basis: BasisKind, params: SystemParams) -> np.ndarray:
    """Columns are the basis kets expressed in bare coordinates {|1>,|2>,|3>}."""
    if basis is BasisKind.BARE:
        return np.eye(3, dtype=complex)

    c = superposition_coeffs(params.gamma1, params.gamma3)
    ket2 = np.array([0.0, 1.0, 0.0], dtype=complex)
    ket_w = np.array([-c.alpha, 0.0, c.beta], dtype=complex)
    ket_u = np.array([c.beta, 0.0, c.alpha], dtype=complex)

    if basis is BasisKind.SUPERPOSITION:
        return np.column_stack([ket2, ket_w, ket_u])

    if basis is BasisKind.DRESSED:
        if not omega_w_is_zero(params):
            omega_w, _ = effective_rabi_pair(params)
            raise InvalidRegimeError(
                f"dressed states are defined only for omega_w = 0, got omega_w = {omega_w:.3e}"
            )
        dp = dressed_parameters(params)
        s, co = math.sin(dp.theta), math.cos(dp.theta)
        ket_m = s * ket2 + co * ket_u
        ket_n = co * ket2 - s * ket_u
        return np.column_stack([ket_w, ket_m, ket_n])

    if basis is BasisKind.BRIGHT_DARK:
        omega_w, omega_u = effective_rabi_pair(params)
        norm = math.hypot(omega_w, omega_u)
        if norm == 0.0:
            raise InvalidRegimeError(
                "bright/dark states undefined when omega_w = omega_u = 0"
            )
        ket_b = (omega_w * ket_w + omega_u * ket_u) / norm
        ket_d = (omega_u * ket_w - omega_w * ket_u) / norm
        return np.column_stack([ket2, ket_b, ket_d])

    raise ValueError(f"unknown basis {basis!r}")


def basis_transform(
    from_basis: BasisKind, to_basis: BasisKind, params: SystemParams
) -> BasisTransform:
    """Unitary mapping coordinates in `from_basis` to coordinates in `to_basis`.

    Transforms compose associatively and round-trip to the identity; the
    matrix element U[j, i] is the overlap <to_j | from_i>.
    """
    v_from = _basis_vectors(from_basis, params)
    v_to = _basis_vectors(to_basis, params)
    return BasisTransform(v_to.conj().T @ v_from, from_basis, to_basis)
