"""Wootters concurrence for the six subsystem pairs of the lattice.

The general route computes the spin-flip spectrum through a Hermitized
product: the sqrt-eigenvalues of zeta = rho rho~ (rho~ the spin-flipped
matrix) equal the singular values of sqrt(rho) (sigma_y x sigma_y)
conj(sqrt(rho)), which keeps round-off out of the square roots.  A fast path
reads the concurrence of X-shaped matrices directly from their entries:
the corner coherence competes with the inner populations and vice versa,

    C = 2 max{0, |z| - sqrt(b c), |w| - sqrt(a d)}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import SIGMA_Y, hermiticity_defect, kron, partial_trace, sqrt_psd

PAIR_LABELS = ("AB", "ab", "Aa", "Bb", "Ab", "Ba")

_SIGMA_YY = kron(SIGMA_Y, SIGMA_Y)
_X_MASK = np.zeros((4, 4), dtype=bool)
_X_MASK[np.arange(4), np.arange(4)] = True
_X_MASK[np.arange(4), np.arange(4)[::-1]] = True


@dataclass(frozen=True)
class ConcurrenceResult:
    """Concurrence with its zeta spectrum and, on X states, the signed Q pair."""

    value: float
    zeta_eigenvalues: np.ndarray
    q_corner: float | None = None
    q_inner: float | None = None

    @property
    def q(self):
        """Signed Q of the dominant branch; None when the state is not X-form."""
        if self.q_corner is None:
            return None
        return max(self.q_corner, self.q_inner)


def _validate_density(rho, *, trace_tol=1e-8, herm_tol=1e-8, psd_tol=1e-8):
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    trace_err = abs(rho.trace() - 1.0)
    if trace_err > trace_tol:
        raise ValueError(f"invalid density matrix: trace deviates from 1 by {trace_err:.3e}")
    defect = hermiticity_defect(rho)
    if defect > herm_tol:
        raise ValueError(f"invalid density matrix: Hermiticity defect {defect:.3e}")
    lo = float(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min())
    if lo < -psd_tol:
        raise ValueError(f"invalid density matrix: not PSD, lowest eigenvalue {lo:.3e}")


def _x_defect(rho):
    off = np.abs(np.where(_X_MASK, 0.0, rho))
    pos = np.unravel_index(int(off.argmax()), off.shape)
    return float(off[pos]), (int(pos[0]), int(pos[1]))


def _x_qs(rho):
    diag = np.clip(rho.diagonal().real, 0.0, None)
    a, b, c, d = diag
    q_corner = abs(rho[0, 3]) - np.sqrt(b * c)
    q_inner = abs(rho[1, 2]) - np.sqrt(a * d)
    return float(q_corner), float(q_inner)


def wootters_concurrence(rho, *, validate=True, x_tol=1e-10):
    """Concurrence of a two-qubit density matrix (general mixed states).

    Returns the zeta eigenvalues sorted in decreasing order (negative
    round-off clamped) and C = max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) -
    sqrt(l4)}.  When the matrix is X-shaped to within ``x_tol``, the signed
    corner/inner Q diagnostics are attached.
    """
    rho = np.asarray(rho, dtype=complex)
    if validate:
        _validate_density(rho)
    rho = 0.5 * (rho + rho.conj().T)
    root = sqrt_psd(rho, tol=1e-12)
    flipped_root = _SIGMA_YY @ root.conj() @ _SIGMA_YY
    sigma = np.linalg.svd(root @ flipped_root, compute_uv=False)
    value = max(0.0, sigma[0] - sigma[1] - sigma[2] - sigma[3])
    q_corner = q_inner = None
    if _x_defect(rho)[0] <= x_tol:
        q_corner, q_inner = _x_qs(rho)
    return ConcurrenceResult(
        value=float(value),
        zeta_eigenvalues=np.clip(sigma**2, 0.0, None),
        q_corner=q_corner,
        q_inner=q_inner,
    )


def xstate_concurrence(rho, *, off_x_tol=1e-10, validate=True):
    """Concurrence of an X-shaped density matrix from its entries.

    With diagonal (a, b, c, d), corner coherence z = rho[0,3] and inner
    coherence w = rho[1,2]:  C = 2 max{0, |z| - sqrt(bc), |w| - sqrt(ad)}.
    Any off-X entry above ``off_x_tol`` is rejected, reporting its magnitude
    and position.
    """
    rho = np.asarray(rho, dtype=complex)
    if validate:
        _validate_density(rho)
    defect, pos = _x_defect(rho)
    if defect > off_x_tol:
        raise ValueError(
            f"entry {pos} has magnitude {defect:.3e}, above the X-pattern tolerance {off_x_tol:.3e}"
        )
    q_corner, q_inner = _x_qs(rho)
    diag = np.clip(rho.diagonal().real, 0.0, None)
    a, b, c, d = diag
    z, w = abs(rho[0, 3]), abs(rho[1, 2])
    lams = np.sort(
        np.array(
            [
                (z + np.sqrt(a * d)) ** 2,
                (z - np.sqrt(a * d)) ** 2,
                (w + np.sqrt(b * c)) ** 2,
                (w - np.sqrt(b * c)) ** 2,
            ]
        )
    )[::-1]
    return ConcurrenceResult(
        value=2.0 * max(0.0, q_corner, q_inner),
        zeta_eigenvalues=lams,
        q_corner=q_corner,
        q_inner=q_inner,
    )


def all_pairwise(state, *, leak_tol=1e-10, x_tol=1e-10):
    """Concurrence of every subsystem pair, keyed by PAIR_LABELS order."""
    results = {}
    for label in PAIR_LABELS:
        rho = partial_trace(state, (label[0], label[1]), leak_tol=leak_tol)
        results[label] = wootters_concurrence(rho, x_tol=x_tol)
    return results
