"""Dense complex linear algebra for small quantum systems.

Conventions used throughout the package: matrices are numpy complex arrays;
the lattice tensor factors are ordered (A, a, B, b) = (atom, cavity, atom,
cavity); every two-level basis lists the excited level first (atoms: e then
g; cavities reduced to qubits: one photon then vacuum).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SUBSYSTEMS = ("A", "a", "B", "b")
CAVITY_SUBSYSTEMS = frozenset(("a", "b"))
_AXIS = {label: i for i, label in enumerate(SUBSYSTEMS)}

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


def kron(a, b):
    """Kronecker product: C[(i1,i2),(j1,j2)] = A[i1,j1] * B[i2,j2]."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def hermiticity_defect(m):
    """max |M - M^dag|, elementwise."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted in decreasing order, with matching eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray | None = None


def eig_hermitian(m, *, herm_tol=1e-12, with_vectors=True):
    """Spectrum of a Hermitian matrix, eigenvalues in decreasing order.

    Rejects input whose Hermiticity defect exceeds ``herm_tol``, reporting the
    measured defect.
    """
    m = np.asarray(m, dtype=complex)
    defect = hermiticity_defect(m)
    if defect > herm_tol:
        raise ValueError(
            f"matrix is not Hermitian: asymmetry {defect:.3e} exceeds tolerance {herm_tol:.3e}"
        )
    if not with_vectors:
        w = np.linalg.eigvalsh(m)
        return Spectrum(values=w[::-1].copy())
    w, v = np.linalg.eigh(m)
    return Spectrum(values=w[::-1].copy(), vectors=v[:, ::-1].copy())


def sqrt_psd(m, tol=1e-12):
    """Hermitian PSD square root via eigendecomposition.

    Eigenvalues below ``-tol`` are rejected.  Eigenvalues within ``tol`` of
    zero are treated as exactly zero; this keeps square roots of nearly
    singular matrices from amplifying round-off (sqrt of an O(eps) eigenvalue
    would be O(1e-8)).
    """
    spectrum = eig_hermitian(m, herm_tol=max(tol, 1e-12))
    w = spectrum.values
    if w[-1] < -tol:
        raise ValueError(f"matrix is not PSD: eigenvalue {w[-1]:.3e} below -{tol:.3e}")
    w = np.where(w <= tol, 0.0, w)
    v = spectrum.vectors
    root = (v * np.sqrt(w)) @ v.conj().T
    return 0.5 * (root + root.conj().T)


def partial_trace(state, keep, *, leak_tol=1e-10):
    """Reduce a four-factor pure state to the 4x4 density matrix of two factors.

    ``state`` must expose ``dims`` (the four factor dimensions) and
    ``amplitudes`` (flat vector); ``keep`` is an ordered pair of labels from
    ("A", "a", "B", "b") and fixes the ordering of the output factors.

    Kept cavity factors are projected onto the zero/one photon subspace and
    reported in (one photon, vacuum) order, so every output basis lists the
    excited level first: (x1 x2) = (ee, eg, ge, gg)-like.  The projection is
    refused when the kept cavity holds more than ``leak_tol`` probability
    above one photon.
    """
    if len(keep) != 2 or keep[0] == keep[1]:
        raise ValueError(f"keep must name two distinct subsystems, got {tuple(keep)!r}")
    for label in keep:
        if label not in _AXIS:
            raise ValueError(f"unknown subsystem label {label!r}; expected one of {SUBSYSTEMS}")
    dims = tuple(state.dims)
    psi = np.asarray(state.amplitudes, dtype=complex).reshape(dims)
    keep_axes = tuple(_AXIS[label] for label in keep)
    traced_axes = tuple(ax for ax in range(4) if ax not in keep_axes)
    d0, d1 = dims[keep_axes[0]], dims[keep_axes[1]]
    mat = np.transpose(psi, keep_axes + traced_axes).reshape(d0 * d1, -1)
    rho = mat @ mat.conj().T
    rho4 = rho.reshape(d0, d1, d0, d1)

    populations = np.einsum("ijij->ij", rho4).real
    selectors = []
    for pos, label in enumerate(keep):
        d = (d0, d1)[pos]
        if label in CAVITY_SUBSYSTEMS:
            if d > 2:
                leak = populations[2:, :].sum() if pos == 0 else populations[:, 2:].sum()
                if leak > leak_tol:
                    raise ValueError(
                        f"cavity {label} holds probability {leak:.3e} above one photon "
                        f"(tolerance {leak_tol:.3e}); cannot reduce to a qubit"
                    )
            selectors.append([1, 0])
        else:
            selectors.append([0, 1])

    s0, s1 = selectors
    rho_pair = rho4[np.ix_(s0, s1, s0, s1)].reshape(4, 4)
    return 0.5 * (rho_pair + rho_pair.conj().T)
