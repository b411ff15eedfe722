"""
Checks of the norm axioms on sampled vectors and of the convexity of planar gauge boundaries.

Failures are returned as report content and are never raised.
"""

import logging
import numpy as np
from dataclasses import dataclass, field

from ..constants import TWO_PI

logger = logging.getLogger(__name__)

@dataclass
class AxiomCheck:
    """Outcome of one axiom check: worst violation seen and the vectors that produced it."""
    passed: bool
    worst: float
    witness: list = None

@dataclass
class NormValidationReport:
    passed: bool
    checks: dict = field(default_factory=dict)
    sample_count: int = 0

@dataclass
class GaugeConvexityReport:
    passed: bool
    worst_cross: float
    witness_angles: list = None

def _check(values, witnesses, tol):
    k = int(np.argmax(values))
    worst = float(max(values[k], 0.0))
    witness = None
    if worst > tol:
        witness = [np.asarray(w[k]).tolist() for w in witnesses]
    return AxiomCheck(worst <= tol, worst, witness)

def validate_norm(space, sample_count=10000, tol=1e-10, seed=0):
    """
    Sample the norm axioms of a space.

    Homogeneity and symmetry are measured relative to the expected value, the triangle inequality relative to
    :math:`\\|u\\| + \\|v\\|`. Planar spaces additionally get a brute-force scan of all pairs of 64 sphere points for
    the triangle inequality.

    Parameters
    ----------
    space : obj
        Space object
    sample_count : int, Optional, default: 10000
        Number of random samples per axiom
    tol : float, Optional, default: 1e-10
        Largest violation accepted
    seed : int, Optional, default: 0
        Seed of the random generator

    Returns
    -------
    report : NormValidationReport
        Pass/fail per axiom with worst violation and witness
    """

    if sample_count < 1 or tol <= 0:
        raise ValueError("sample_count must be positive and tol > 0")

    rng = np.random.default_rng(seed)
    n, dim = int(sample_count), space.dim
    checks = {}

    V = rng.standard_normal((n, dim)) * rng.uniform(0.1, 10.0, (n, 1))
    nv = space.norm_many(V)

    # Positive definiteness
    zero = space.norm(np.zeros(dim))
    bad = np.where(nv <= 0.0, 1.0, 0.0)
    checks["positive_definite"] = _check(bad, [V], 0.5)
    if zero != 0.0:
        checks["positive_definite"] = AxiomCheck(False, abs(zero), [np.zeros(dim).tolist()])

    # Homogeneity
    alpha = rng.uniform(-10.0, 10.0, n)
    nav = space.norm_many(alpha[:, None] * V)
    expected = np.abs(alpha) * nv
    checks["homogeneity"] = _check(np.abs(nav - expected) / np.maximum(expected, 1e-300),
                                   [alpha, V], tol)

    # Central symmetry
    nneg = space.norm_many(-V)
    checks["symmetric"] = _check(np.abs(nneg - nv) / nv, [V], tol)

    # Triangle inequality
    U = rng.standard_normal((n, dim))
    W = rng.standard_normal((n, dim)) * rng.uniform(0.1, 10.0, (n, 1))
    if dim == 2:
        angles = np.arange(64) * TWO_PI / 64
        grid = np.column_stack((np.cos(angles), np.sin(angles)))
        grid = grid / space.norm_many(grid)[:, None]
        i, j = np.meshgrid(np.arange(64), np.arange(64), indexing="ij")
        U = np.vstack((U, grid[i.ravel()]))
        W = np.vstack((W, grid[j.ravel()]))
    nu, nw, nuw = space.norm_many(U), space.norm_many(W), space.norm_many(U + W)
    checks["triangle"] = _check((nuw - nu - nw) / (nu + nw), [U, W], tol)

    passed = all(check.passed for check in checks.values())
    if not passed:
        failed = [name for name, check in checks.items() if not check.passed]
        logger.warning("Space '{}' fails the norm axioms: {}".format(space.name, ", ".join(failed)))
    else:
        logger.info("Space '{}' passes the norm axioms on {} samples".format(space.name, n))

    return NormValidationReport(passed, checks, n)

def validate_gauge_convexity(boundary, angular_step=np.pi / 1800):
    """
    Walk the closed polyline through boundary points sampled every ``angular_step`` radians and check that every
    pair of consecutive edges turns counterclockwise. Collinear edges (flat pieces) are accepted.

    Parameters
    ----------
    boundary : Gauge2DBoundary
        Boundary to check
    angular_step : float, Optional, default: 0.1 degree
        Sampling step in radians

    Returns
    -------
    report : GaugeConvexityReport
        Pass/fail, most negative cross product, and the offending angle triple on failure
    """

    if angular_step <= 0:
        raise ValueError("angular_step must be positive")

    n = max(int(np.ceil(TWO_PI / angular_step)), 8)
    angles = np.arange(n) * TWO_PI / n
    r = boundary.radius_many(angles)
    points = np.column_stack((r * np.cos(angles), r * np.sin(angles)))

    edges = np.roll(points, -1, axis=0) - points
    following = np.roll(edges, -1, axis=0)
    cross = edges[:, 0] * following[:, 1] - edges[:, 1] * following[:, 0]

    k = int(np.argmin(cross))
    worst = float(cross[k])
    if worst >= -1e-12:
        return GaugeConvexityReport(True, worst)

    triple = [float(angles[k]), float(angles[(k + 1) % n]), float(angles[(k + 2) % n])]
    logger.warning("Boundary turns clockwise at angles {}".format(triple))
    return GaugeConvexityReport(False, worst, triple)
