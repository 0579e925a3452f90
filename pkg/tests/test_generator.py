import math

import numpy as np
import pytest

from cascadeqd import (
    BasisKind,
    DensityMatrix,
    InvalidRegimeError,
    LindbladTerm,
    Superoperator,
    SystemParams,
    basis_transform,
    conjugated,
    full_generator,
    hamiltonian,
    phonon_liouvillian,
    radiative_liouvillian,
    rhs_eq22,
    rhs_reduced,
    steady_closed_form,
)
from cascadeqd.generator import transition, unvectorize, vectorize
from conftest import random_density, random_params

B = BasisKind


def ow_zero_params(**kwargs) -> SystemParams:
    defaults = dict(gamma1=1.0, gamma3=10.0, omega1=5.0 * math.sqrt(10.0), omega3=5.0, delta=5.0)
    defaults.update(kwargs)
    return SystemParams(**defaults)


class TestVectorization:
    def test_row_major_convention(self):
        m = np.arange(9, dtype=complex).reshape(3, 3)
        v = vectorize(m)
        for i in range(3):
            for j in range(3):
                assert v[3 * i + j] == m[i, j]
        assert np.array_equal(unvectorize(v), m)


class TestHamiltonian:
    def test_superposition_detuning_only(self):
        p = SystemParams(gamma1=1.0, gamma3=1.0, delta=1.0)
        h = hamiltonian(p, B.SUPERPOSITION)
        assert np.max(np.abs(h - np.diag([1.0, 0.0, 0.0]))) < 1e-15

    def test_dressed_eigenvalues(self):
        # omega_w = 0, omega_u = 2, delta = 3 -> Omega = 5 -> diag(0, 4, -1)
        p = SystemParams(gamma1=1.0, gamma3=1.0, omega1=math.sqrt(2.0), omega3=math.sqrt(2.0), delta=3.0)
        h = hamiltonian(p, B.DRESSED)
        assert np.max(np.abs(h - np.diag([0.0, 4.0, -1.0]))) < 1e-12

    def test_unitary_equivalence(self, rng):
        for _ in range(20):
            p = random_params(rng)
            u = basis_transform(B.BARE, B.SUPERPOSITION, p).matrix
            h_bare = hamiltonian(p, B.BARE)
            h_super = hamiltonian(p, B.SUPERPOSITION)
            assert np.max(np.abs(u @ h_bare @ u.conj().T - h_super)) < 1e-12

    def test_dressed_equivalence_when_omega_w_zero(self, rng):
        for _ in range(20):
            p = random_params(rng, ow_zero=True)
            u = basis_transform(B.SUPERPOSITION, B.DRESSED, p).matrix
            h_super = hamiltonian(p, B.SUPERPOSITION)
            assert np.max(np.abs(u @ h_super @ u.conj().T - hamiltonian(p, B.DRESSED))) < 1e-11

    def test_dressed_rejects_omega_w_nonzero(self):
        p = SystemParams(gamma1=1.0, gamma3=1.0, omega1=1.0, omega3=2.0)
        with pytest.raises(InvalidRegimeError):
            hamiltonian(p, B.DRESSED)


class TestPhononLiouvillian:
    def test_decay_of_state_two(self):
        # rho = |2><2|, nbar = 0: d rho = 2*gamma*(|w><w| - |2><2|)
        p = SystemParams(gamma1=0.4, gamma3=0.6)
        liouv = phonon_liouvillian(p, B.SUPERPOSITION)
        out = liouv.apply(DensityMatrix.pure(0, B.SUPERPOSITION))
        expected = 2.0 * p.gamma * np.diag([-1.0, 1.0, 0.0])
        assert np.max(np.abs(out - expected)) < 1e-14

    @pytest.mark.parametrize("nbar", [0.0, 0.7])
    def test_state_u_is_decoupled(self, nbar):
        p = SystemParams(gamma1=1.0, gamma3=2.0, nbar=nbar)
        liouv = phonon_liouvillian(p, B.SUPERPOSITION)
        out = liouv.apply(DensityMatrix.pure(2, B.SUPERPOSITION))
        assert np.max(np.abs(out)) < 1e-14

    def test_bare_form_matches_superposition_form(self, rng):
        # the four-term bare assembly with gamma13 cross damping is the same channel
        for _ in range(20):
            p = random_params(rng)
            u = basis_transform(B.BARE, B.SUPERPOSITION, p)
            lhs = conjugated(phonon_liouvillian(p, B.BARE), u).entries
            rhs = phonon_liouvillian(p, B.SUPERPOSITION).entries
            assert np.max(np.abs(lhs - rhs)) < 1e-10

    def test_dressed_form_matches_superposition_form(self, rng):
        # includes nbar > 0: pumping rates 2*nbar*gamma*sin^2, 2*nbar*gamma*cos^2
        for _ in range(20):
            p = random_params(rng, ow_zero=True)
            u = basis_transform(B.SUPERPOSITION, B.DRESSED, p)
            lhs = conjugated(phonon_liouvillian(p, B.SUPERPOSITION), u).entries
            rhs = phonon_liouvillian(p, B.DRESSED).entries
            assert np.max(np.abs(lhs - rhs)) < 1e-10

    def test_trace_and_hermiticity_preserved_on_states(self, rng):
        for _ in range(100):
            p = random_params(rng)
            basis = (B.BARE, B.SUPERPOSITION)[int(rng.integers(2))]
            out = phonon_liouvillian(p, basis).apply(random_density(rng, basis))
            assert abs(out.trace()) < 1e-12
            assert np.max(np.abs(out - out.conj().T)) < 1e-12

    def test_undriven_zero_temperature_dark_mixtures(self, rng):
        # nbar = 0, no drive: any mixture diagonal in {w, u} is stationary
        p = SystemParams(gamma1=1.0, gamma3=2.0)
        liouv = phonon_liouvillian(p, B.SUPERPOSITION)
        for weight in (0.0, 0.3, 1.0):
            rho = np.diag([0.0, weight, 1.0 - weight]).astype(complex)
            assert np.max(np.abs(liouv.apply(rho))) < 1e-14


class TestRadiativeLiouvillian:
    def test_vanishes_without_radiative_rates(self):
        p = SystemParams(gamma1=1.0, gamma3=1.0)
        for basis in (B.BARE, B.SUPERPOSITION):
            assert np.max(np.abs(radiative_liouvillian(p, basis).entries)) == 0.0

    def test_bare_decay_of_state_three(self):
        p = SystemParams(gamma1=1.0, gamma3=1.0, big_gamma3=0.7)
        out = radiative_liouvillian(p, B.BARE).apply(DensityMatrix.pure(2, B.BARE))
        expected = 2.0 * 0.7 * np.diag([0.0, 1.0, -1.0])
        assert np.max(np.abs(out - expected)) < 1e-14

    def test_bare_decay_of_state_two(self):
        p = SystemParams(gamma1=1.0, gamma3=1.0, big_gamma2=0.3)
        out = radiative_liouvillian(p, B.BARE).apply(DensityMatrix.pure(1, B.BARE))
        expected = 2.0 * 0.3 * np.diag([1.0, -1.0, 0.0])
        assert np.max(np.abs(out - expected)) < 1e-14

    def test_superposition_form_matches_bare_form(self, rng):
        for _ in range(20):
            p = random_params(rng)
            u = basis_transform(B.BARE, B.SUPERPOSITION, p)
            lhs = conjugated(radiative_liouvillian(p, B.BARE), u).entries
            rhs = radiative_liouvillian(p, B.SUPERPOSITION).entries
            assert np.max(np.abs(lhs - rhs)) < 1e-10


class TestFullGenerator:
    def test_commutator_part_leaves_diagonal_states_fixed(self):
        # with no drive the Hamiltonian is diagonal; the coherent part alone
        # does nothing to diagonal states
        p = SystemParams(gamma1=1.0, gamma3=1.0, delta=1.0)
        coherent = full_generator(p, B.SUPERPOSITION).entries - phonon_liouvillian(
            p, B.SUPERPOSITION
        ).entries
        for weights in ((1.0, 0.0, 0.0), (0.2, 0.5, 0.3)):
            rho = DensityMatrix.from_diagonal(weights, B.SUPERPOSITION)
            assert np.max(np.abs(unvectorize(coherent @ vectorize(rho.entries)))) < 1e-14

    @pytest.mark.parametrize("nbar", [0.0, 0.7])
    def test_annihilates_closed_form_steady_state(self, nbar):
        p = ow_zero_params(nbar=nbar)
        rho = steady_closed_form(p).superposition_state()
        out = full_generator(p, B.SUPERPOSITION).apply(rho)
        assert np.max(np.abs(out)) < 1e-10

    def test_basis_covariance_fuzz(self, rng):
        worst = 0.0
        for _ in range(100):
            p = random_params(rng)
            u = basis_transform(B.BARE, B.SUPERPOSITION, p)
            diff = conjugated(full_generator(p, B.BARE), u).entries - full_generator(
                p, B.SUPERPOSITION
            ).entries
            worst = max(worst, float(np.max(np.abs(diff))))
        assert worst < 1e-10

    def test_dressed_rejects_radiative_decay(self):
        p = ow_zero_params(big_gamma2=0.5, big_gamma3=0.5)
        with pytest.raises(InvalidRegimeError):
            full_generator(p, B.DRESSED)


class TestRhsEq22:
    def test_state_u_population_does_not_decay(self):
        p = SystemParams(gamma1=1.0, gamma3=2.0, omega1=1.0, omega3=1.5, nbar=0.4)
        out = rhs_eq22(p, DensityMatrix.pure(2, B.SUPERPOSITION))
        assert abs(out[2, 2]) < 1e-14

    def test_state_two_decay_rates(self):
        p = SystemParams(gamma1=0.7, gamma3=0.5)
        out = rhs_eq22(p, DensityMatrix.pure(0, B.SUPERPOSITION))
        assert out[0, 0] == pytest.approx(-2.0 * p.gamma, abs=1e-14)
        assert out[1, 1] == pytest.approx(2.0 * p.gamma, abs=1e-14)

    def test_differential_identity_against_superoperator(self, rng):
        worst = 0.0
        for _ in range(100):
            p = random_params(rng)
            rho = random_density(rng, B.SUPERPOSITION)
            diff = rhs_eq22(p, rho) - full_generator(p, B.SUPERPOSITION).apply(rho)
            worst = max(worst, float(np.max(np.abs(diff))))
        assert worst < 1e-12

    def test_requires_unit_trace(self, rng):
        p = random_params(rng)
        with pytest.raises(ValueError):
            rhs_eq22(p, 0.5 * np.eye(3, dtype=complex))


class TestRhsReduced:
    def test_initial_decay_from_state_two(self):
        p = SystemParams(gamma1=0.5, gamma3=0.5, omega1=0.5, omega3=0.5)
        d4, _ = rhs_reduced(p, (1.0, 0.0, 0.0, 0.0), (0.0, 0.0))
        assert d4[0] == pytest.approx(-2.0 * p.gamma, abs=1e-14)

    def test_coherence_wu_decay_without_drive(self):
        p = SystemParams(gamma1=1.0, gamma3=1.0, nbar=0.8)
        _, d2 = rhs_reduced(p, (0.0, 1.0, 0.0, 0.0), (0.0, 0.25))
        assert d2[1] == pytest.approx(-0.8 * p.gamma * 0.25, abs=1e-14)

    def test_blocks_match_full_generator(self, rng):
        for _ in range(100):
            p = random_params(rng, ow_zero=True, gamma_free=True)
            rho = random_density(rng, B.SUPERPOSITION)
            m = rho.entries
            d4, d2 = rhs_reduced(
                p, (m[0, 0], m[1, 1], m[2, 2], m[0, 2]), (m[0, 1], m[1, 2])
            )
            full = full_generator(p, B.SUPERPOSITION).apply(rho)
            expected4 = np.array([full[0, 0], full[1, 1], full[2, 2], full[0, 2]])
            expected2 = np.array([full[0, 1], full[1, 2]])
            assert np.max(np.abs(d4 - expected4)) < 1e-12
            assert np.max(np.abs(d2 - expected2)) < 1e-12

    def test_rejects_omega_w_nonzero(self):
        p = SystemParams(gamma1=1.0, gamma3=1.0, omega1=1.0, omega3=2.0)
        with pytest.raises(InvalidRegimeError):
            rhs_reduced(p, (1.0, 0.0, 0.0, 0.0), (0.0, 0.0))

    def test_rejects_radiative_decay(self):
        p = SystemParams(gamma1=1.0, gamma3=1.0, big_gamma2=0.1)
        with pytest.raises(InvalidRegimeError):
            rhs_reduced(p, (1.0, 0.0, 0.0, 0.0), (0.0, 0.0))


class TestSuperoperatorType:
    def test_rejects_trace_breaking_map(self):
        bad = np.kron(transition(0, 1), np.eye(3))  # left multiplication alone
        with pytest.raises(ValueError):
            Superoperator(bad, B.BARE)

    def test_lindblad_term_rejects_negative_rate(self):
        with pytest.raises(ValueError):
            LindbladTerm(transition(0, 1), -1.0)

    def test_apply_checks_basis(self, rng):
        p = random_params(rng)
        liouv = full_generator(p, B.SUPERPOSITION)
        with pytest.raises(ValueError):
            liouv.apply(DensityMatrix.maximally_mixed(B.BARE))
