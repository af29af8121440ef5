import numpy as np
import pytest

from jcpairs import JCParams


@pytest.fixture
def res_params():
    """Resonant site: omega0 = omega = 5, g = 1, so G = 2."""
    return JCParams(omega0=5.0, omega=5.0, g=1.0)


@pytest.fixture
def det_params():
    """Detuned site: Delta = 1, G = 1, splitting sqrt(2)."""
    return JCParams(omega0=5.0, omega=6.0, g=0.5)


def random_x_state(rng):
    """Random valid X-shaped density matrix (coherences inside the PSD bound)."""
    diag = rng.dirichlet(np.ones(4))
    z = rng.uniform(0.0, 0.98) * np.sqrt(diag[0] * diag[3]) * np.exp(2j * np.pi * rng.uniform())
    w = rng.uniform(0.0, 0.98) * np.sqrt(diag[1] * diag[2]) * np.exp(2j * np.pi * rng.uniform())
    rho = np.diag(diag).astype(complex)
    rho[0, 3], rho[3, 0] = z, np.conj(z)
    rho[1, 2], rho[2, 1] = w, np.conj(w)
    return rho


def off_x_defect(rho):
    """Largest entry outside the diagonal + anti-diagonal pattern."""
    mask = np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool))
    return float(np.max(np.abs(np.where(mask, 0.0, rho))))
