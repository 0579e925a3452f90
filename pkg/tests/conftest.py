import numpy as np
import pytest

from cascadeqd import BasisKind, DensityMatrix, SystemParams, superposition_coeffs


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_params(
    rng,
    *,
    gamma_free: bool = False,
    ow_zero: bool = False,
    nbar_max: float = 1.5,
    omega_u: float | None = None,
) -> SystemParams:
    """A generic valid parameter draw; `ow_zero` pins omega_w = 0 exactly."""
    gamma1 = rng.uniform(0.2, 2.0)
    gamma3 = rng.uniform(0.2, 2.0)
    nbar = rng.uniform(0.0, nbar_max)
    delta = rng.uniform(-3.0, 3.0)
    big = 0.0 if gamma_free else rng.uniform(0.0, 1.5)
    big2 = 0.0 if gamma_free else rng.uniform(0.0, 1.5)
    if ow_zero:
        c = superposition_coeffs(gamma1, gamma3)
        target = omega_u if omega_u is not None else rng.uniform(1.0, 5.0)
        omega3 = c.alpha * target
        omega1 = c.beta * target
    else:
        omega1 = rng.uniform(-4.0, 4.0)
        omega3 = rng.uniform(-4.0, 4.0)
    return SystemParams(
        gamma1=gamma1,
        gamma3=gamma3,
        big_gamma2=big,
        big_gamma3=big2,
        omega1=omega1,
        omega3=omega3,
        delta=delta,
        nbar=nbar,
    )


def random_density(rng, basis: BasisKind = BasisKind.SUPERPOSITION) -> DensityMatrix:
    """Random full-rank density matrix (Wishart normalized to unit trace)."""
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    m = a @ a.conj().T
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix(m / m.trace().real, basis)


def random_pure(rng, basis: BasisKind = BasisKind.SUPERPOSITION) -> DensityMatrix:
    v = rng.normal(size=3) + 1j * rng.normal(size=3)
    return DensityMatrix.pure(v, basis)
