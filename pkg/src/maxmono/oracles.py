"""Brute-force oracles, independent of the closed-form machinery they validate.

The sup oracle evaluates the raw supremand over quasi-random points of the
graph itself (never touching Gram matrices or pseudo-inverses), so its
value is a guaranteed lower bound on the true one.  The maximality oracle
searches a lattice for a point that could monotonically extend the graph,
validating the dimension criterion.
"""

from __future__ import annotations

import numpy as np
from scipy.stats import qmc

from .arithmetic import PLUS_INF, ExtReal
from .errors import DimensionTooLargeError
from .monotone_ops import LinearRelation
from .relation_core import PairedPoint, member

_GLOBAL_RADII = (1.0, 10.0, 100.0)
_GROWTH_FACTOR = 5.0
_REFINE_ROUNDS = 14
_REFINE_SHRINK = 0.35


def _float_basis(op: LinearRelation) -> np.ndarray:
    return np.asarray([[float(v) for v in row] for row in op.graph.basis], dtype=float).reshape(
        op.graph.dim, 2 * op.n
    )


def _supremand(coeffs: np.ndarray, basis: np.ndarray, px: np.ndarray, ps: np.ndarray) -> np.ndarray:
    """pairing(p, w) - duality(w) for graph points w = coeffs @ basis."""
    pts = coeffs @ basis
    n = px.shape[0]
    y, ystar = pts[:, :n], pts[:, n:]
    return ystar @ px + y @ ps - np.einsum("ij,ij->i", y, ystar)


def oracle_fitz_sampled(op: LinearRelation, p: PairedPoint, budget: int, seed: int = 0) -> ExtReal:
    """Sampled Fitzpatrick value: QMC sweep over nested radii, then local refinement.

    Divergence (+inf) is flagged when the running max keeps growing across
    consecutive radii; otherwise the max is refined by shrinking boxes
    around the incumbent (safe: the supremand is concave on monotone
    graphs).  The result never exceeds the true value.
    """
    if budget < 1:
        raise ValueError("sampling budget must be at least 1")
    k = op.graph.dim
    if k == 0:
        return ExtReal.finite(0.0)
    basis = _float_basis(op)
    px = np.asarray([float(v) for v in p.x])
    ps = np.asarray([float(v) for v in p.xstar])

    sampler = qmc.Halton(d=k, scramble=True, seed=seed)
    best_val = 0.0  # the zero graph point is always available
    best_t = np.zeros(k)
    radius_maxima = []
    for radius in _GLOBAL_RADII:
        coeffs = radius * (2.0 * sampler.random(budget) - 1.0)
        vals = _supremand(coeffs, basis, px, ps)
        i = int(np.argmax(vals))
        if vals[i] > best_val:
            best_val = float(vals[i])
            best_t = coeffs[i]
        radius_maxima.append(best_val)

    m1, m10, m100 = radius_maxima
    if m10 > _GROWTH_FACTOR * max(m1, 1e-9) and m100 > _GROWTH_FACTOR * max(m10, 1e-9):
        return PLUS_INF

    half_width = max(1.0, float(np.linalg.norm(best_t)))
    for _ in range(_REFINE_ROUNDS):
        coeffs = best_t + half_width * (2.0 * sampler.random(budget) - 1.0)
        vals = _supremand(coeffs, basis, px, ps)
        i = int(np.argmax(vals))
        if vals[i] > best_val:
            best_val = float(vals[i])
            best_t = coeffs[i]
        half_width *= _REFINE_SHRINK
    return ExtReal.finite(best_val)


def oracle_maximality_search(op: LinearRelation, grid_radius: float = 2.0, grid_step: float = 1.0) -> bool:
    """Brute-force maximality for n <= 2: hunt for a monotone extension point.

    Returns False when some lattice point outside the graph is monotonically
    consistent with a dense sample of the graph; True when no such point is
    found.  The graph sample uses a finer step and a wider radius than the
    probe lattice so consistency failures between probe points are seen.
    """
    n = op.n
    if n > 2:
        raise DimensionTooLargeError(f"extension search is infeasible for n = {n}")
    basis = _float_basis(op)
    k = op.graph.dim

    sample_radius = 2.0 * grid_radius + 2.0
    sample_step = grid_step / 4.0
    axis = np.arange(-sample_radius, sample_radius + sample_step / 2, sample_step)
    if k == 0:
        sample_pts = np.zeros((1, 2 * n))
    else:
        mesh = np.meshgrid(*([axis] * k), indexing="ij")
        coeffs = np.stack([m.ravel() for m in mesh], axis=1)
        sample_pts = coeffs @ basis
    yx, ys = sample_pts[:, :n], sample_pts[:, n:]
    y_dual = np.einsum("ij,ij->i", yx, ys)

    probe_axis = np.arange(-grid_radius, grid_radius + grid_step / 2, grid_step)
    mesh = np.meshgrid(*([probe_axis] * (2 * n)), indexing="ij")
    probes = np.stack([m.ravel() for m in mesh], axis=1)

    tol = 1e-7
    for start in range(0, probes.shape[0], 256):
        batch = probes[start : start + 256]
        bx, bs = batch[:, :n], batch[:, n:]
        gaps = (
            np.einsum("ij,ij->i", bx, bs)[:, None]
            - bx @ ys.T
            - bs @ yx.T
            + y_dual[None, :]
        )
        consistent = gaps.min(axis=1) >= -tol
        for i in np.flatnonzero(consistent):
            candidate = PairedPoint(tuple(batch[i, :n]), tuple(batch[i, n:]))
            if not member(op.graph, candidate):
                return False
    return True
