import math

import numpy as np
import pytest

from cascadeqd import (
    BasisKind,
    DegenerateSteadyStateError,
    DensityMatrix,
    IntegrationFailureError,
    IntegratorConfig,
    Superoperator,
    SystemParams,
    evolve,
    evolve_reduced,
    full_generator,
    steady_closed_form,
    steady_state,
)
from conftest import random_density, random_params

B = BasisKind


def ow_zero_params(gamma1=1.0, gamma3=10.0, omega_u=5.0, nbar=0.0, delta=5.0) -> SystemParams:
    alpha = math.sqrt(gamma1 / (gamma1 + gamma3))
    beta = math.sqrt(gamma3 / (gamma1 + gamma3))
    return SystemParams(
        gamma1=gamma1,
        gamma3=gamma3,
        omega1=beta * omega_u,
        omega3=alpha * omega_u,
        delta=delta,
        nbar=nbar,
    )


class TestSteadyState:
    def test_zero_temperature_dark_state(self):
        p = ow_zero_params(nbar=0.0)
        result = steady_state(full_generator(p, B.SUPERPOSITION))
        assert result.state.population(1) == pytest.approx(1.0, abs=1e-12)
        assert result.residual < 1e-9

    @pytest.mark.parametrize("nbar", [0.25, 1.0, 2.0])
    def test_thermal_superposition_populations(self, nbar):
        p = ow_zero_params(nbar=nbar)
        result = steady_state(full_generator(p, B.SUPERPOSITION))
        denom = 3.0 * nbar + 1.0
        assert result.state.population(1) == pytest.approx((nbar + 1.0) / denom, abs=1e-12)
        assert result.state.population(2) == pytest.approx(nbar / denom, abs=1e-12)
        assert result.state.population(0) == pytest.approx(nbar / denom, abs=1e-12)

    @pytest.mark.parametrize("ratio", [0.1, 1.0, 10.0])
    def test_matches_closed_form_in_both_bases(self, ratio):
        for nbar in (0.0, 0.5, 1.5):
            p = ow_zero_params(gamma1=1.0, gamma3=ratio, nbar=nbar)
            closed = steady_closed_form(p)
            sup = steady_state(full_generator(p, B.SUPERPOSITION)).state
            assert np.max(np.abs(sup.entries - closed.superposition_state().entries)) < 1e-10
            bare = steady_state(full_generator(p, B.BARE)).state
            assert np.max(np.abs(bare.entries - closed.bare_state().entries)) < 1e-10

    @pytest.mark.parametrize("nbar", [0.0, 0.5])
    def test_undriven_system_is_degenerate(self, nbar):
        p = SystemParams(gamma1=1.0, gamma3=1.0, nbar=nbar)
        with pytest.raises(DegenerateSteadyStateError) as excinfo:
            steady_state(full_generator(p, B.SUPERPOSITION))
        assert excinfo.value.nullity >= 2

    def test_state_is_valid_density_matrix(self, rng):
        for _ in range(20):
            p = random_params(rng)
            result = steady_state(full_generator(p, B.SUPERPOSITION))
            assert abs(np.trace(result.state.entries) - 1.0) < 1e-10
            assert result.residual < 1e-9


class TestEvolve:
    def test_zero_generator_keeps_state_constant(self, rng):
        liouv = Superoperator(np.zeros((9, 9), dtype=complex), B.SUPERPOSITION)
        rho0 = random_density(rng, B.SUPERPOSITION)
        series = evolve(liouv, rho0, 2.0, sample_every=0.25)
        assert len(series.times) == 9
        for state in series.states:
            assert np.max(np.abs(state.entries - rho0.entries)) < 1e-12

    def test_dark_initial_state_stays_dark(self):
        p = ow_zero_params(nbar=0.0)
        liouv = full_generator(p, B.SUPERPOSITION)
        rho0 = DensityMatrix.pure(1, B.SUPERPOSITION)  # |w><w|
        series = evolve(liouv, rho0, 5.0, IntegratorConfig.for_params(p), sample_every=0.05)
        for state in series.states:
            assert np.max(np.abs(state.entries - rho0.entries)) < 1e-9

    def test_long_time_limit_matches_steady_state(self, rng):
        for _ in range(5):
            p = random_params(rng, nbar_max=1.0)
            liouv = full_generator(p, B.SUPERPOSITION)
            target = steady_state(liouv).state.entries
            rho0 = random_density(rng, B.SUPERPOSITION)
            series = evolve(liouv, rho0, 60.0, IntegratorConfig.for_params(p), sample_every=10.0)
            assert np.max(np.abs(series.states[-1].entries - target)) < 1e-7

    def test_steady_state_is_fixed_point(self, rng):
        p = random_params(rng, nbar_max=1.0)
        liouv = full_generator(p, B.SUPERPOSITION)
        rho = steady_state(liouv).state
        horizon = 10.0 / p.gamma
        series = evolve(liouv, rho, horizon, IntegratorConfig.for_params(p), sample_every=horizon / 10.0)
        for state in series.states:
            assert np.max(np.abs(state.entries - rho.entries)) < 1e-8

    def test_tolerance_halving_self_consistency(self):
        p = ow_zero_params(nbar=0.5)
        liouv = full_generator(p, B.SUPERPOSITION)
        rho0 = DensityMatrix.pure(0, B.SUPERPOSITION)
        loose = evolve(liouv, rho0, 5.0, IntegratorConfig.for_params(p), sample_every=0.05)
        tight = evolve(
            liouv,
            rho0,
            5.0,
            IntegratorConfig.for_params(p, rel_tol=0.5e-8, abs_tol=0.5e-10),
            sample_every=0.05,
        )
        worst = max(
            float(np.max(np.abs(a.entries - b.entries)))
            for a, b in zip(loose.states, tight.states)
        )
        assert worst < 1e-7  # both runs sit within the requested tolerance band

    def test_trajectory_states_stay_physical(self, rng):
        p = random_params(rng, nbar_max=1.0)
        liouv = full_generator(p, B.SUPERPOSITION)
        series = evolve(liouv, random_density(rng, B.SUPERPOSITION), 4.0, IntegratorConfig.for_params(p), sample_every=0.04)
        for state in series.states:
            assert abs(np.trace(state.entries) - 1.0) < 1e-9
            assert np.max(np.abs(state.entries - state.entries.conj().T)) == 0.0
            assert np.linalg.eigvalsh(state.entries).min() >= -1e-9

    def test_max_steps_exceeded_reports_last_good_time(self):
        p = ow_zero_params(nbar=0.5)
        liouv = full_generator(p, B.SUPERPOSITION)
        rho0 = DensityMatrix.pure(0, B.SUPERPOSITION)
        with pytest.raises(IntegrationFailureError) as excinfo:
            evolve(liouv, rho0, 5.0, IntegratorConfig(dt_initial=1e-4, max_steps=3), sample_every=1.0)
        assert 0.0 <= excinfo.value.last_good_time < 5.0

    def test_basis_mismatch_rejected(self, rng):
        p = random_params(rng)
        liouv = full_generator(p, B.SUPERPOSITION)
        with pytest.raises(ValueError):
            evolve(liouv, DensityMatrix.maximally_mixed(B.BARE), 1.0, sample_every=0.1)


class TestEvolveReduced:
    def test_dark_block_is_constant(self):
        p = ow_zero_params(gamma1=0.5, gamma3=0.5, nbar=0.0, delta=0.0)
        traj = evolve_reduced(p, (0.0, 1.0, 0.0, 0.0), (0.0, 0.0), 5.0, sample_every=0.1)
        assert np.max(np.abs(traj.block4 - np.array([0.0, 1.0, 0.0, 0.0]))) < 1e-10
        assert np.max(np.abs(traj.block2)) < 1e-12

    def test_coherence_wu_closed_form_without_drive(self):
        # omega_u = 0: rho_wu(t) = c * exp(-nbar*gamma*t)
        p = SystemParams(gamma1=0.5, gamma3=0.5, nbar=0.7)
        c0 = 0.3
        traj = evolve_reduced(p, (0.0, 1.0, 0.0, 0.0), (0.0, c0), 3.0, sample_every=0.05)
        expected = c0 * np.exp(-p.nbar * p.gamma * traj.times)
        assert np.max(np.abs(traj.block2[:, 1] - expected)) < 1e-8

    def test_blocks_match_embedded_full_evolution(self, rng):
        for _ in range(20):
            p = random_params(rng, ow_zero=True, gamma_free=True, nbar_max=1.0)
            rho0 = random_density(rng, B.SUPERPOSITION)
            m = rho0.entries
            config = IntegratorConfig.for_params(p, rel_tol=1e-10, abs_tol=1e-12)
            traj = evolve_reduced(
                p, (m[0, 0], m[1, 1], m[2, 2], m[0, 2]), (m[0, 1], m[1, 2]), 3.0, config, sample_every=0.25
            )
            series = evolve(full_generator(p, B.SUPERPOSITION), rho0, 3.0, config, sample_every=0.25)
            full4 = np.column_stack(
                [series.elements(0, 0), series.elements(1, 1), series.elements(2, 2), series.elements(0, 2)]
            )
            full2 = np.column_stack([series.elements(0, 1), series.elements(1, 2)])
            assert np.max(np.abs(traj.block4 - full4)) < 1e-8
            assert np.max(np.abs(traj.block2 - full2)) < 1e-8

    def test_rejects_invalid_regime(self):
        p = SystemParams(gamma1=1.0, gamma3=1.0, omega1=1.0, omega3=2.0)
        with pytest.raises(Exception):
            evolve_reduced(p, (1.0, 0.0, 0.0, 0.0), (0.0, 0.0), 1.0)


class TestQuantumBeats:
    def test_population_beat_frequency(self):
        # rho_22(t) - rho_22(inf) oscillates at 2*omega_u; the spectral peak
        # above the overdamped relaxation band must land within one bin
        p = ow_zero_params(gamma1=0.5, gamma3=0.5, omega_u=5.0, nbar=0.0, delta=0.0)
        liouv = full_generator(p, B.SUPERPOSITION)
        series = evolve(liouv, DensityMatrix.pure(0, B.SUPERPOSITION), 5.0, IntegratorConfig.for_params(p), sample_every=0.005)
        signal = series.populations(0) - p.nbar / (3.0 * p.nbar + 1.0)
        spectrum = np.abs(np.fft.rfft(signal))
        freqs = 2.0 * np.pi * np.fft.rfftfreq(len(signal), d=0.005)
        cutoff = 3.0 * (3.0 * p.nbar + 1.0) * p.gamma
        window = freqs > cutoff
        peak = freqs[window][np.argmax(spectrum[window])]
        bin_width = freqs[1] - freqs[0]
        assert abs(peak - 10.0) <= bin_width
