"""Zero-interval detection on concurrence curves and (alpha, t) region maps.

A concurrence curve can vanish three ways: over a finite window (sudden
death), at isolated roots (touch), or identically (degenerate, e.g. product
initial states).  When the signed Q behind the curve is available the
classifier uses its sign -- a touch has Q >= 0 throughout, sudden death means
Q dips genuinely negative -- because interval width alone cannot separate a
flat (quartic) touch from a short death window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .closedform import resonance_values
from .dynamics import HamiltonianPropagator, InitialFamily, evolve_analytic, prepare_initial
from .entanglement import wootters_concurrence
from .jcmodel import total_hamiltonian
from .linalg import partial_trace

SWEEP_ENGINES = ("closed", "analytic", "numeric")


@dataclass(frozen=True)
class ZeroInterval:
    """Maximal window on which a concurrence curve vanishes."""

    t_lo: float
    t_hi: float
    kind: str  # "sudden_death", "touch", or "degenerate"


@dataclass(frozen=True)
class EsdMap:
    """Boolean zero-region map over an (alpha, t) grid.

    ``boundary`` rows are (alpha, Gt_lo, Gt_hi) samples of the analytic
    death-window boundary; attached only for the phi family's atom-atom pair.
    """

    alpha_grid: np.ndarray
    t_grid: np.ndarray
    zero_mask: np.ndarray
    boundary: np.ndarray | None = None


@dataclass(frozen=True)
class SweepResult:
    esd_map: EsdMap
    concurrence: np.ndarray
    q: np.ndarray


def _refine_edge(curve, t_out, t_in, tol, iters=80):
    """Boundary of the region curve(t) <= tol between an outside and an inside point."""
    for _ in range(iters):
        mid = 0.5 * (t_out + t_in)
        if curve(mid) <= tol:
            t_in = mid
        else:
            t_out = mid
    return 0.5 * (t_out + t_in)


def _refine_sign_change(q_curve, t_pos, t_neg, iters=80):
    """Root of the signed Q between a positive and a negative sample."""
    for _ in range(iters):
        mid = 0.5 * (t_pos + t_neg)
        if q_curve(mid) > 0.0:
            t_pos = mid
        else:
            t_neg = mid
    return 0.5 * (t_pos + t_neg)


def zero_intervals(
    curve,
    t_min,
    t_max,
    *,
    tol=1e-12,
    min_width=None,
    samples=2049,
    q_curve=None,
    q_tol=1e-9,
):
    """Maximal sub-windows of [t_min, t_max] where curve(t) <= tol.

    Endpoints are polished by bisection; with ``q_curve`` supplied, sudden
    death is recognized by the signed Q dropping below ``-q_tol`` inside the
    window and its endpoints are polished on the Q sign change.  Without a Q
    sampler the classification falls back to interval width against
    ``min_width`` (default: 1e-6 of the window).

    Detection is sample-limited: an isolated touch whose C <= tol plateau is
    narrower than the grid spacing goes unseen unless a sample lands on it.
    """
    if not t_max > t_min:
        raise ValueError(f"need t_max > t_min, got [{t_min}, {t_max}]")
    if samples < 3:
        raise ValueError(f"need at least 3 samples, got {samples}")
    if min_width is None:
        min_width = 1e-6 * (t_max - t_min)
    ts = np.linspace(t_min, t_max, samples)
    cs = np.array([float(curve(t)) for t in ts])
    if not np.all(np.isfinite(cs)):
        bad = int(np.flatnonzero(~np.isfinite(cs))[0])
        raise ValueError(f"curve returned a non-finite value at t = {ts[bad]!r}")

    zero = cs <= tol
    if zero.all():
        return [ZeroInterval(t_lo=float(t_min), t_hi=float(t_max), kind="degenerate")]

    intervals = []
    i = 0
    while i < samples:
        if not zero[i]:
            i += 1
            continue
        j = i
        while j + 1 < samples and zero[j + 1]:
            j += 1

        t_lo = float(t_min) if i == 0 else _refine_edge(curve, ts[i - 1], ts[i], tol)
        t_hi = float(t_max) if j == samples - 1 else _refine_edge(curve, ts[j + 1], ts[j], tol)

        if q_curve is not None:
            run_qs = np.array([float(q_curve(t)) for t in ts[i : j + 1]])
            negatives = np.flatnonzero(run_qs < -q_tol)
            if negatives.size:
                kind = "sudden_death"
                if i > 0:
                    t_lo = _refine_sign_change(q_curve, ts[i - 1], ts[i + negatives[0]])
                if j < samples - 1:
                    t_hi = _refine_sign_change(q_curve, ts[j + 1], ts[i + negatives[-1]])
            else:
                kind = "touch"
        else:
            kind = "sudden_death" if (t_hi - t_lo) > min_width else "touch"

        intervals.append(ZeroInterval(t_lo=float(t_lo), t_hi=float(t_hi), kind=kind))
        i = j + 1
    return intervals


def esd_boundary_phi_AB(alpha):
    """Death-window endpoints (in Gt) of the phi family's atom-atom pair.

    The window exists for alpha < pi/4, where tan(alpha) = sin^2(Gt/2) is
    solvable: endpoints 2 arcsin(sqrt(tan alpha)) and its mirror about Gt =
    pi.  For alpha in [pi/4, pi/2) the curve only touches zero; outside
    (0, pi/2) the caller should map back by symmetry first.
    """
    if not 0.0 < alpha < 0.5 * math.pi:
        raise ValueError(f"alpha must lie in (0, pi/2), got {alpha!r}")
    if alpha >= 0.25 * math.pi:
        return None
    gt_lo = 2.0 * math.asin(math.sqrt(math.tan(alpha)))
    return gt_lo, 2.0 * math.pi - gt_lo


def _require_grid(name, grid):
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError(f"{name} must be a non-empty 1-D grid")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError(f"{name} must be strictly increasing")
    return grid


def sweep(kind, pair, alpha_grid, t_grid, params, engine="closed", *, zero_tol=1e-12):
    """Concurrence of one pair over an (alpha, t) grid by the selected engine.

    Engines: "closed" evaluates the resonance formulas (requires zero
    detuning), "analytic" the dressed-state propagator, "numeric" full matrix
    diagonalization.  The zero mask marks cells with C <= zero_tol; for
    (phi, AB) the analytic death-window boundary is attached.
    """
    alpha_grid = _require_grid("alpha_grid", alpha_grid)
    t_grid = _require_grid("t_grid", t_grid)
    if engine not in SWEEP_ENGINES:
        raise ValueError(f"engine must be one of {SWEEP_ENGINES}, got {engine!r}")
    if engine == "closed" and abs(params.detuning) > 1e-12:
        raise ValueError(
            f"closed-form engine needs resonance, got detuning {params.detuning!r}"
        )
    rabi = params.rabi(1)
    conc = np.empty((alpha_grid.size, t_grid.size))
    qval = np.empty_like(conc)

    if engine == "closed":
        for ia, alpha in enumerate(alpha_grid):
            for it, t in enumerate(t_grid):
                vals = resonance_values(kind, alpha, rabi, t)
                conc[ia, it] = vals.concurrence[pair]
                qval[ia, it] = vals.q_for(pair)
    else:
        keep = (pair[0], pair[1])
        propagator = None
        if engine == "numeric":
            propagator = HamiltonianPropagator(total_hamiltonian(params, params, n_max=1))
        for ia, alpha in enumerate(alpha_grid):
            family = InitialFamily(kind, alpha)
            psi0 = prepare_initial(family) if engine == "numeric" else None
            for it, t in enumerate(t_grid):
                if engine == "numeric":
                    state = propagator.evolve(psi0, t)
                else:
                    state = evolve_analytic(family, params, t)
                res = wootters_concurrence(partial_trace(state, keep))
                conc[ia, it] = res.value
                qval[ia, it] = res.q if res.q is not None else math.nan

    boundary = None
    if kind == "phi" and pair == "AB":
        rows = []
        for alpha in alpha_grid:
            if 0.0 < alpha < 0.25 * math.pi:
                lo, hi = esd_boundary_phi_AB(alpha)
                rows.append((alpha, lo, hi))
        if rows:
            boundary = np.array(rows)

    esd_map = EsdMap(
        alpha_grid=alpha_grid,
        t_grid=t_grid,
        zero_mask=conc <= zero_tol,
        boundary=boundary,
    )
    return SweepResult(esd_map=esd_map, concurrence=conc, q=qval)
