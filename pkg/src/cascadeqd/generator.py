"""Master-equation generators (Liouvillians) as 9x9 superoperators.

The master equation is

    d rho / dt = -i [H, rho] + L_phonon rho + L_rad2 rho + L_rad3 rho

assembled here in each supported basis.  Density matrices are vectorized
row-major, vec(rho)[3*i + j] = rho[i, j], and every dissipator uses the
convention D[L] rho = 2 L rho L^dag - L^dag L rho - rho L^dag L (no 1/2
prefactor), with the rates used exactly as they enter the model.

The phonon reservoir couples to the single collective transition |2> -> |w>
(damping at (nbar+1)*gamma, pumping at nbar*gamma), so its dissipator is
always of rank-one (single-channel) form; the bare-basis assembly below keeps
the four-term structure with explicit cross-damping gamma13 = sqrt(g1*g3),
which is algebraically the same channel.

`rhs_eq22` is an independent, hand-transcribed form of the full equations of
motion in the superposition basis, used for differential testing against the
superoperator.  Its rho_wu line contains a constant (trace-normalized) term,
so it is valid only for unit-trace input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    BasisKind,
    BasisTransform,
    DensityMatrix,
    InvalidRegimeError,
    SystemParams,
    dressed_parameters,
    effective_rabi_pair,
    omega_w_is_zero,
    superposition_coeffs,
)

__all__ = [
    "Superoperator",
    "LindbladTerm",
    "vectorize",
    "unvectorize",
    "transition",
    "hamiltonian",
    "phonon_liouvillian",
    "radiative_liouvillian",
    "full_generator",
    "conjugated",
    "rhs_eq22",
    "rhs_reduced",
]

_I3 = np.eye(3, dtype=complex)
_TRACE_ROW = np.zeros(9)
_TRACE_ROW[[0, 4, 8]] = 1.0
_STRUCTURE_TOL = 1e-12


def vectorize(rho: np.ndarray) -> np.ndarray:
    """Row-major vectorization, vec(rho)[3*i + j] = rho[i, j]."""
    return np.asarray(rho, dtype=complex).reshape(9)


def unvectorize(vec: np.ndarray) -> np.ndarray:
    return np.asarray(vec, dtype=complex).reshape(3, 3)


def transition(i: int, j: int) -> np.ndarray:
    """The operator |i><j| in the ambient basis index order."""
    m = np.zeros((3, 3), dtype=complex)
    m[i, j] = 1.0
    return m


@dataclass(frozen=True)
class LindbladTerm:
    """A jump operator with its non-negative rate, contributing rate * D[jump]."""

    jump: np.ndarray
    rate: float

    def __post_init__(self):
        if self.rate < 0.0:
            raise ValueError("Lindblad rate must be >= 0")
        j = np.asarray(self.jump, dtype=complex).copy()
        j.flags.writeable = False
        object.__setattr__(self, "jump", j)


@dataclass(frozen=True)
class Superoperator:
    """A 9x9 generator acting on row-major vectorized density matrices.

    Construction checks the two structural invariants: the map annihilates the
    trace and preserves Hermiticity.
    """

    entries: np.ndarray
    basis: BasisKind

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.shape != (9, 9):
            raise ValueError(f"expected a 9x9 superoperator, got {m.shape}")
        scale = max(1.0, float(np.max(np.abs(m))))
        trace_defect = float(np.max(np.abs(_TRACE_ROW @ m)))
        if trace_defect > _STRUCTURE_TOL * scale:
            raise ValueError(f"not trace-preserving: defect {trace_defect:.3e}")
        herm_defect = float(np.max(np.abs(_adjoint_image(m) - m)))
        if herm_defect > _STRUCTURE_TOL * scale:
            raise ValueError(f"not Hermiticity-preserving: defect {herm_defect:.3e}")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    def apply(self, rho) -> np.ndarray:
        """d rho / dt for a 3x3 matrix or DensityMatrix, as a 3x3 matrix."""
        if isinstance(rho, DensityMatrix):
            if rho.basis is not self.basis:
                raise ValueError(
                    f"state basis {rho.basis.value} does not match generator basis {self.basis.value}"
                )
            rho = rho.entries
        return unvectorize(self.entries @ vectorize(rho))


def _adjoint_image(m: np.ndarray) -> np.ndarray:
    """P conj(m) P with P the transpose permutation; equals m iff m preserves Hermiticity."""
    perm = np.arange(9).reshape(3, 3).T.reshape(9)
    return np.conj(m)[np.ix_(perm, perm)]


def _bracket(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Superoperator of [a rho, b] + [a, rho b] = 2 a rho b - {ba, rho}."""
    ba = b @ a
    return 2.0 * np.kron(a, b.T) - np.kron(ba, _I3) - np.kron(_I3, ba.T)


def _dissipator(jump: np.ndarray) -> np.ndarray:
    """Superoperator of D[L] rho = 2 L rho L^dag - L^dag L rho - rho L^dag L."""
    return _bracket(jump, jump.conj().T)


def _commutator(h: np.ndarray) -> np.ndarray:
    return -1j * (np.kron(h, _I3) - np.kron(_I3, h.T))


def _require_dressed_regime(params: SystemParams):
    if not omega_w_is_zero(params):
        omega_w, _ = effective_rabi_pair(params)
        raise InvalidRegimeError(
            f"the dressed basis requires omega_w = 0, got omega_w = {omega_w:.3e}"
        )


def hamiltonian(params: SystemParams, basis: BasisKind) -> np.ndarray:
    """The coherent part H in the requested basis (3x3 Hermitian).

    Bare: delta*A22 + omega1*(A21 + A12) + omega3*(A32 + A23).
    Superposition: delta*A22 + omega_w*(A2w + Aw2) + omega_u*(A2u + Au2).
    Dressed (omega_w = 0 only): diag(0, (delta+Omega)/2, (delta-Omega)/2).
    """
    if basis is BasisKind.BARE:
        return np.array(
            [
                [0.0, params.omega1, 0.0],
                [params.omega1, params.delta, params.omega3],
                [0.0, params.omega3, 0.0],
            ],
            dtype=complex,
        )
    if basis is BasisKind.SUPERPOSITION:
        omega_w, omega_u = effective_rabi_pair(params)
        return np.array(
            [
                [params.delta, omega_w, omega_u],
                [omega_w, 0.0, 0.0],
                [omega_u, 0.0, 0.0],
            ],
            dtype=complex,
        )
    if basis is BasisKind.DRESSED:
        _require_dressed_regime(params)
        dp = dressed_parameters(params)
        return np.diag(
            [0.0, 0.5 * (params.delta + dp.big_omega), 0.5 * (params.delta - dp.big_omega)]
        ).astype(complex)
    raise ValueError(f"no Hamiltonian construction for basis {basis.value}")


def phonon_jump_terms(params: SystemParams, basis: BasisKind) -> list[LindbladTerm]:
    """The single phonon channel as (decay, pump) jump operators in `basis`."""
    n = params.nbar
    g = params.gamma
    if basis is BasisKind.SUPERPOSITION:
        decay = transition(1, 0)  # A_w2 in the {2, w, u} order
    elif basis is BasisKind.BARE:
        c = superposition_coeffs(params.gamma1, params.gamma3)
        # A_w2 = beta*A_32 - alpha*A_12 in the {1, 2, 3} order
        decay = c.beta * transition(2, 1) - c.alpha * transition(0, 1)
    elif basis is BasisKind.DRESSED:
        _require_dressed_regime(params)
        dp = dressed_parameters(params)
        # A_w2 = sin(theta)*A_wm + cos(theta)*A_wn in the {w, m, n} order
        decay = math.sin(dp.theta) * transition(0, 1) + math.cos(dp.theta) * transition(0, 2)
    else:
        raise ValueError(f"no phonon dissipator for basis {basis.value}")
    return [
        LindbladTerm(decay, (n + 1.0) * g),
        LindbladTerm(decay.conj().T, n * g),
    ]


def phonon_liouvillian(params: SystemParams, basis: BasisKind) -> Superoperator:
    """Phonon-bath dissipator (no Hamiltonian part) in the requested basis.

    The bare-basis form keeps the printed four-term structure with the cross
    damping gamma13 = sqrt(gamma1*gamma3); the superposition form is the
    single-channel (nbar+1)*gamma*D[A_w2] + nbar*gamma*D[A_2w]; the dressed
    form (omega_w = 0 only) is the same channel written with the mixing angle,
    which carries decay rates gamma_m, gamma_n and pumping rates
    2*nbar*gamma*sin^2(theta), 2*nbar*gamma*cos^2(theta) plus their cross
    correlations.
    """
    n = params.nbar
    if basis is BasisKind.BARE:
        g1, g3 = params.gamma1, params.gamma3
        g13 = math.sqrt(g1 * g3)
        a12, a21 = transition(0, 1), transition(1, 0)
        a23, a32 = transition(1, 2), transition(2, 1)
        entries = (
            (n + 1.0) * g1 * _bracket(a12, a21)
            + (n + 1.0) * g3 * _bracket(a32, a23)
            + n * g1 * _bracket(a21, a12)
            + n * g3 * _bracket(a23, a32)
            - (n + 1.0) * g13 * (_bracket(a32, a21) + _bracket(a12, a23))
            - n * g13 * (_bracket(a21, a32) + _bracket(a23, a12))
        )
        return Superoperator(entries, basis)

    terms = phonon_jump_terms(params, basis)
    entries = sum(term.rate * _dissipator(np.asarray(term.jump)) for term in terms)
    return Superoperator(entries, basis)


def radiative_liouvillian(params: SystemParams, basis: BasisKind) -> Superoperator:
    """Spontaneous-emission dissipator for the |2> and |3> decays.

    Bare basis: big_gamma2*D[A_12] + big_gamma3*D[A_23].  Superposition basis:
    the cross-coupled Lambda-system form with the alpha*beta interference
    terms written out explicitly.
    """
    g2, g3 = params.big_gamma2, params.big_gamma3
    if basis is BasisKind.BARE:
        entries = g2 * _dissipator(transition(0, 1)) + g3 * _dissipator(transition(1, 2))
        return Superoperator(entries, basis)
    if basis is BasisKind.SUPERPOSITION:
        c = superposition_coeffs(params.gamma1, params.gamma3)
        a, b = c.alpha, c.beta
        a_w2, a_2w = transition(1, 0), transition(0, 1)
        a_u2, a_2u = transition(2, 0), transition(0, 2)
        entries = (
            a**2 * g2 * _bracket(a_w2, a_2w)
            + b**2 * g2 * _bracket(a_u2, a_2u)
            - a * b * g2 * (_bracket(a_w2, a_2u) + _bracket(a_u2, a_2w))
            + b**2 * g3 * _bracket(a_2w, a_w2)
            + a**2 * g3 * _bracket(a_2u, a_u2)
            + a * b * g3 * (_bracket(a_2w, a_u2) + _bracket(a_2u, a_w2))
        )
        return Superoperator(entries, basis)
    raise ValueError(f"no radiative dissipator for basis {basis.value}")


def full_generator(params: SystemParams, basis: BasisKind) -> Superoperator:
    """Commutator plus both dissipators; the full master-equation generator."""
    if basis is BasisKind.DRESSED and (params.big_gamma2 != 0.0 or params.big_gamma3 != 0.0):
        raise InvalidRegimeError(
            "the dressed-basis generator is available only for big_gamma2 = big_gamma3 = 0"
        )
    entries = _commutator(hamiltonian(params, basis)) + phonon_liouvillian(params, basis).entries
    if basis is not BasisKind.DRESSED:
        entries = entries + radiative_liouvillian(params, basis).entries
    return Superoperator(entries, basis)


def conjugated(superop: Superoperator, transform: BasisTransform) -> Superoperator:
    """The generator re-expressed in `transform.to_basis` coordinates."""
    if transform.from_basis is not superop.basis:
        raise ValueError(
            f"transform starts at {transform.from_basis.value}, generator lives in {superop.basis.value}"
        )
    u = transform.matrix
    s = np.kron(u, u.conj())
    return Superoperator(s @ superop.entries @ s.conj().T, transform.to_basis)


def rhs_eq22(params: SystemParams, rho) -> np.ndarray:
    """Hand-transcribed equations of motion in the superposition basis.

    Valid only on the unit-trace subspace: the rho_wu equation carries the
    constant term -alpha*beta*big_gamma3, which is
    -alpha*beta*big_gamma3*(rho_ww + rho_uu) written with the trace
    normalization applied.  Input may be a DensityMatrix (superposition basis)
    or a Hermitian unit-trace 3x3 array in the {2, w, u} order.
    """
    if isinstance(rho, DensityMatrix):
        if rho.basis is not BasisKind.SUPERPOSITION:
            raise ValueError("rhs_eq22 expects a state in the superposition basis")
        m = rho.entries
    else:
        m = np.asarray(rho, dtype=complex)
        if m.shape != (3, 3):
            raise ValueError("expected a 3x3 matrix")
    trace = m.trace()
    if abs(trace - 1.0) > 1e-10:
        raise ValueError(f"rhs_eq22 requires trace 1 (got {trace}); see the rho_wu line")

    c = superposition_coeffs(params.gamma1, params.gamma3)
    a, b = c.alpha, c.beta
    a2, b2 = a * a, b * b
    big2, big3 = params.big_gamma2, params.big_gamma3
    n, g = params.nbar, params.gamma
    omega_w, omega_u = effective_rabi_pair(params)
    delta = params.delta

    r22, rww, ruu = m[0, 0], m[1, 1], m[2, 2]
    r2w, r2u, rwu = m[0, 1], m[0, 2], m[1, 2]
    rw2, ru2, ruw = m[1, 0], m[2, 0], m[2, 1]

    d22 = (
        -2.0 * (big2 + (n + 1.0) * g) * r22
        + 2.0 * (b2 * big3 + n * g) * rww
        + 2.0 * a2 * big3 * ruu
        + 2.0 * a * b * big3 * (rwu + ruw)
        + 1j * omega_u * (r2u - ru2)
        + 1j * omega_w * (r2w - rw2)
    )
    dww = (
        -2.0 * (b2 * big3 + n * g) * rww
        + 2.0 * (a2 * big2 + (n + 1.0) * g) * r22
        - a * b * big3 * (rwu + ruw)
        - 1j * omega_w * (r2w - rw2)
    )
    duu = (
        -2.0 * a2 * big3 * ruu
        + 2.0 * b2 * big2 * r22
        - a * b * big3 * (rwu + ruw)
        - 1j * omega_u * (r2u - ru2)
    )
    d2w = (
        -(big2 + b2 * big3 + (2.0 * n + 1.0) * g + 1j * delta) * r2w
        - a * b * big3 * r2u
        - 1j * omega_u * ruw
        + 1j * omega_w * (r22 - rww)
    )
    d2u = (
        -(big2 + a2 * big3 + (n + 1.0) * g + 1j * delta) * r2u
        - a * b * big3 * r2w
        - 1j * omega_w * rwu
        + 1j * omega_u * (r22 - ruu)
    )
    dwu = (
        -a * b * big3
        - (big3 + n * g) * rwu
        - a * b * (2.0 * big2 - big3) * r22
        + 1j * omega_u * rw2
        - 1j * omega_w * r2u
    )

    return np.array(
        [
            [d22, d2w, d2u],
            [np.conj(d2w), dww, dwu],
            [np.conj(d2u), np.conj(dwu), duu],
        ]
    )


def _require_reduced_regime(params: SystemParams):
    if params.big_gamma2 != 0.0 or params.big_gamma3 != 0.0:
        raise InvalidRegimeError("the reduced equations require big_gamma2 = big_gamma3 = 0")
    if not omega_w_is_zero(params):
        raise InvalidRegimeError("the reduced equations require omega_w = 0")


def rhs_reduced(params: SystemParams, state4, coh2) -> tuple[np.ndarray, np.ndarray]:
    """Derivatives of the two decoupled blocks (omega_w = 0, no radiative decay).

    state4 = (rho_22, rho_ww, rho_uu, rho_2u) evolves autonomously; coh2 =
    (rho_2w, rho_wu) forms the second block.  The conjugate elements are
    rho_u2 = conj(rho_2u), rho_w2 = conj(rho_2w), rho_uw = conj(rho_wu).
    """
    _require_reduced_regime(params)
    _, omega_u = effective_rabi_pair(params)
    n, g, delta = params.nbar, params.gamma, params.delta

    r22, rww, ruu, r2u = (complex(x) for x in state4)
    pump = 1j * omega_u * (r2u - np.conj(r2u))
    d22 = -2.0 * (n + 1.0) * g * r22 + 2.0 * n * g * rww + pump
    dww = -2.0 * n * g * rww + 2.0 * (n + 1.0) * g * r22
    duu = -pump
    d2u = -((n + 1.0) * g + 1j * delta) * r2u + 1j * omega_u * (r22 - ruu)

    r2w, rwu = (complex(x) for x in coh2)
    d2w = -((2.0 * n + 1.0) * g + 1j * delta) * r2w - 1j * omega_u * np.conj(rwu)
    dwu = -n * g * rwu + 1j * omega_u * np.conj(r2w)

    return np.array([d22, dww, duu, d2u]), np.array([d2w, dwu])
