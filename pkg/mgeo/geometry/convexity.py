# -- coding: utf8 --

r"""

    Strict convexity probing, flat segments of the unit sphere and the modulus of convexity

    .. math::

        \delta(\epsilon) = \inf \left\{ 1 - \left\|\frac{x+y}{2}\right\| : \|x\| = \|y\| = 1, \|x - y\| \geq \epsilon \right\}

    A space is strictly convex when no segment lies on its unit sphere, equivalently when :math:`\|u + v\| < 2` for
    distinct unit vectors, equivalently when :math:`\delta(2) = 1`. All verdicts here are sampling verdicts.

"""

import logging
import numpy as np
from enum import Enum
from dataclasses import dataclass, field

from .. import constants as cst
from ..spaces import as_vector, sphere_points_2d
from ..exceptions import OrthogonalityPreconditionError
from ..orthogonality import classify
from ..orthogonality.minimize import golden_section, sublevel_edge

logger = logging.getLogger(__name__)

EPSILONS = (0.5, 1.0, 1.5, 2.0)

# Slack on the chord constraint, absorbs rounding at antipodal pairs
CHORD_SLACK = 1e-14

class ConvexityVerdict(str, Enum):
    NO_FLAT_FOUND = "NoFlatFound"
    FLAT_FOUND = "FlatFound"

@dataclass
class ConvexityReport:
    """
    Outcome of :func:`strict_convexity_probe`.

    Attributes
    ----------
    strictly_convex_verdict : ConvexityVerdict
        NoFlatFound is a sampling verdict, never a proof
    flat_witness : tuple
        Unit vectors (u, v) with :math:`\\|(u+v)/2\\| \\geq 1 - tol/2` and :math:`\\|u - v\\| \\geq sep`
    modulus_samples : list
        Pairs :math:`(\\epsilon, \\hat{\\delta}(\\epsilon))`
    samples_used : int
        Number of pairs evaluated
    best_midpoint_norm : float
        Largest midpoint norm over pairs separated by at least sep
    delta_two : float
        :math:`\\hat{\\delta}(2)`
    """

    strictly_convex_verdict: ConvexityVerdict
    flat_witness: tuple = None
    modulus_samples: list = field(default_factory=list)
    samples_used: int = 0
    best_midpoint_norm: float = 0.0
    delta_two: float = None
    tol: float = 1e-12
    sep: float = 1e-2

def _unit_rows(space, V):
    return V / space.norm_many(V)[:, None]

def _midpoints(space, U, V):
    return space.norm_many(0.5 * (U + V)), space.norm_many(U - V)

def extend_flat_segment(space, u, v, tol):
    """
    Extend a flat chord [u, v] along its line to the whole segment of the sphere containing it.

    Parameters
    ----------
    space : obj
        Space object
    u, v : numpy.ndarray
        Unit vectors whose midpoint is on the sphere within tol/2
    tol : float
        Flatness tolerance

    Returns
    -------
    u, v : numpy.ndarray
        Ends of the extended segment, rescaled onto the sphere
    """

    d = v - u
    level = 1.0 + 0.5 * tol

    def g(t):
        return space.norm(u + t * d)

    # Beyond |t| = 3/||d|| the point has norm at least 2
    outside = 3.0 / space.norm(d)
    t_hi, _ = sublevel_edge(g, 1.0, 1.0 + outside, level)
    t_lo, _ = sublevel_edge(g, 0.0, -outside, level)

    a, b = u + t_lo * d, u + t_hi * d
    return a / space.norm(a), b / space.norm(b)

def _sweep_2d(space, num_angles, tol, sep):
    """
    Evaluate chords between sphere points on an angular grid at doubling index offsets.

    Returns the widest flat pair, the pair of largest midpoint norm and the number of pairs used.
    """

    angles = np.arange(num_angles) * cst.TWO_PI / num_angles
    U = sphere_points_2d(space, angles)

    widest, best = None, None
    best_mid, widest_sep = -np.inf, -np.inf
    used = 0
    k = 1
    while k <= num_angles // 2:
        V = np.roll(U, -k, axis=0)
        mid, chord = _midpoints(space, U, V)
        used += num_angles
        ok = chord >= sep
        if np.any(ok):
            idx = np.where(ok)[0]
            j = idx[np.argmax(mid[idx])]
            if mid[j] > best_mid:
                best_mid, best = mid[j], (angles[j], k)
            flat = idx[mid[idx] >= 1.0 - 0.5 * tol]
            if flat.size > 0:
                j = flat[np.argmax(chord[flat])]
                if chord[j] > widest_sep:
                    widest_sep, widest = chord[j], (angles[j], k)
        k *= 2

    return widest, best, best_mid, used, angles[1] - angles[0]

def _refine_2d(space, start, offset, step, tol):
    """
    Golden-section refinement of the start angle of a chord of fixed angular offset.
    """

    def negative_mid(a):
        u = np.array([np.cos(a), np.sin(a)])
        v = np.array([np.cos(a + offset), np.sin(a + offset)])
        u, v = u / space.norm(u), v / space.norm(v)
        return -space.norm(0.5 * (u + v))

    gs = golden_section(negative_mid, start - step, start + step, xtol=1e-10)
    return gs.x, -gs.fun, gs.nfev

def _random_pairs(space, num_samples, rng, sep):
    """
    Random unit pairs, half of them local pairs u, normalize(u + rho*g) with rho log-uniform in [sep, 1].
    """

    n, dim = num_samples, space.dim
    U = _unit_rows(space, rng.standard_normal((n, dim)))
    V = rng.standard_normal((n, dim))
    half = n // 2
    rho = np.exp(rng.uniform(np.log(sep), 0.0, half))
    V[:half] = U[:half] + rho[:, None] * V[:half] / np.linalg.norm(V[:half], axis=1)[:, None]
    V = _unit_rows(space, V)
    return U, V

def strict_convexity_probe(space, num_samples=10000, tol=1e-12, sep=1e-2, seed=0, sweep_angles=cst.SWEEP_ANGLES,
                           epsilons=EPSILONS, modulus_samples=720):
    r"""
    Search for a segment on the unit sphere, i.e. unit vectors u, v with :math:`\|u + v\| \geq 2 - tol` and
    :math:`\|u - v\| \geq sep`.

    Planar spaces get a deterministic sweep over ``sweep_angles`` sphere points with offsets 1, 2, 4, ... grid steps
    and a golden-section refinement of the best pair. Every space then gets ``num_samples`` random pairs. A flat pair
    is extended along its line to the full segment.

    Parameters
    ----------
    space : obj
        Space object
    num_samples : int, Optional, default: 10000
        Number of random pairs
    tol : float, Optional, default: 1e-12
        Flatness tolerance on :math:`\|u + v\|`
    sep : float, Optional, default: 1e-2
        Minimal separation :math:`\|u - v\|` of a witness
    seed : int, Optional, default: 0
        Seed of the random generator
    sweep_angles : int, Optional, default: 10000
        Number of grid angles of the planar sweep
    epsilons : tuple, Optional, default: (0.5, 1.0, 1.5, 2.0)
        Values of epsilon for the modulus samples, 2 is always included
    modulus_samples : int, Optional, default: 720
        Number of sample points per modulus estimate

    Returns
    -------
    report : ConvexityReport
        Verdict, witness, modulus samples and diagnostics
    """

    if num_samples < 1 or tol <= 0 or sep <= 0:
        raise ValueError("strict_convexity_probe requires num_samples >= 1, tol > 0 and sep > 0")

    rng = np.random.default_rng(seed)
    witness, best_mid, used = None, -np.inf, 0

    if space.dim == 2:
        widest, best, best_mid, used, step = _sweep_2d(space, sweep_angles, tol, sep)
        if widest is not None:
            start, k = widest
            offset = k * step
        elif best is not None:
            start, k = best
            offset = k * step
            start, mid, nfev = _refine_2d(space, start, offset, step, tol)
            used += nfev
            best_mid = max(best_mid, mid)
            if mid < 1.0 - 0.5 * tol:
                start = None
        else:
            start = None
        if start is not None:
            u = np.array([np.cos(start), np.sin(start)])
            v = np.array([np.cos(start + offset), np.sin(start + offset)])
            witness = (u / space.norm(u), v / space.norm(v))

    if witness is None:
        U, V = _random_pairs(space, int(num_samples), rng, sep)
        mid, chord = _midpoints(space, U, V)
        used += int(num_samples)
        ok = np.where(chord >= sep)[0]
        if ok.size > 0:
            best_mid = max(best_mid, float(np.max(mid[ok])))
            flat = ok[mid[ok] >= 1.0 - 0.5 * tol]
            if flat.size > 0:
                j = flat[np.argmax(chord[flat])]
                witness = (U[j], V[j])

    modulus = [(float(eps), modulus_of_convexity(space, eps, num_samples=modulus_samples, seed=seed))
               for eps in sorted(set(epsilons) | {2.0})]
    delta_two = modulus[-1][1]

    if witness is not None:
        u, v = extend_flat_segment(space, witness[0], witness[1], tol)
        report = ConvexityReport(ConvexityVerdict.FLAT_FOUND, (u, v), modulus, used,
                                 float(space.norm(0.5 * (u + v))), delta_two, tol, sep)
        logger.info("Space '{}': flat segment from {} to {}".format(space.name, u, v))
    else:
        report = ConvexityReport(ConvexityVerdict.NO_FLAT_FOUND, None, modulus, used, float(best_mid), delta_two,
                                 tol, sep)
        logger.info("Space '{}': no flat segment found in {} pairs, best midpoint norm {:.15g}".format(
            space.name, used, best_mid))

    return report

def _section_points(space, X, W, t):
    P = np.cos(t)[:, None] * X + np.sin(t)[:, None] * W
    return P / space.norm_many(P)[:, None]

def modulus_of_convexity(space, epsilon, num_samples=720, seed=0, steps=64):
    r"""
    Sampled modulus of convexity :math:`\hat{\delta}(\epsilon)`.

    For each sampled unit x and direction w the partner y on the sphere of the plane span{x, w} with
    :math:`\|x - y\| = \epsilon` is found by bisection over the section angle, on both sides of x. In a normed plane
    the chord length and the midpoint norm are monotone along a half-turn from x to -x, so these partners realize the
    infimum over each section. Planar spaces use x on a uniform angle grid, other spaces random x and w.

    Parameters
    ----------
    space : obj
        Space object
    epsilon : float
        Chord length, :math:`0 < \epsilon \leq 2`
    num_samples : int, Optional, default: 720
        Number of sampled x
    seed : int, Optional, default: 0
        Seed of the random generator
    steps : int, Optional, default: 64
        Bisection steps

    Returns
    -------
    delta : float
        Estimate in [0, 1], an over-estimate of the true value
    """

    if not 0.0 < epsilon <= 2.0:
        raise ValueError("epsilon must lie in (0, 2], given {}".format(epsilon))
    n = int(num_samples)
    if n < 1:
        raise ValueError("num_samples must be positive")

    if space.dim == 2:
        angles = np.arange(n) * cst.TWO_PI / n
        X = sphere_points_2d(space, angles)
        W = np.column_stack((-X[:, 1], X[:, 0]))
    else:
        rng = np.random.default_rng(seed)
        X = _unit_rows(space, rng.standard_normal((n, space.dim)))
        W = rng.standard_normal((n, space.dim))
        W -= (np.sum(W * X, axis=1) / np.sum(X * X, axis=1))[:, None] * X

    X = np.vstack((X, X))
    W = np.vstack((W, -W))
    lo = np.zeros(len(X))
    hi = np.full(len(X), np.pi)
    target = epsilon - CHORD_SLACK
    for _ in range(steps):
        t = 0.5 * (lo + hi)
        Y = _section_points(space, X, W, t)
        inside = space.norm_many(X - Y) >= target
        hi = np.where(inside, t, hi)
        lo = np.where(inside, lo, t)

    Y = _section_points(space, X, W, hi)
    at_end = hi == np.pi
    Y[at_end] = -X[at_end]
    mid = space.norm_many(0.5 * (X + Y))
    delta = float(np.clip(1.0 - np.max(mid), 0.0, 1.0))
    logger.debug("modulus of convexity of '{}' at {}: {:.12g}".format(space.name, epsilon, delta))
    return delta

def strict_convexity_by_delta_two(space, num_samples=720, seed=0, tol=1e-6):
    """
    Strict convexity read from the modulus at the full diameter: the sphere holds no segment iff delta(2) = 1.

    Returns
    -------
    strictly_convex : bool
    delta_two : float
        Sampled :math:`\\hat{\\delta}(2)`
    """

    delta_two = modulus_of_convexity(space, 2.0, num_samples=num_samples, seed=seed)
    return bool(delta_two >= 1.0 - tol), delta_two

def flat_segment_orthogonality_construction(space, u, v, tol=cst.TOL):
    r"""
    Turn a segment [u, v] of the unit sphere into a pair that is B-orthogonal but not strongly so:
    :math:`x = (u+v)/2`, :math:`y = v - u`, and :math:`\|x + \lambda y\| = 1` for :math:`|\lambda| \leq 1/2`.

    Parameters
    ----------
    space : obj
        Space object
    u, v : array_like
        Unit vectors spanning a segment of the sphere
    tol : float, Optional, default: 1e-9
        Tolerance on the unit lengths and on the midpoint norm

    Returns
    -------
    x, y : numpy.ndarray
        Constructed pair
    verdict : OrthogonalityVerdict
        Classification of (x, y)
    """

    u = as_vector(u, space.dim)
    v = as_vector(v, space.dim)
    for name, w in [("u", u), ("v", v)]:
        if abs(space.norm(w) - 1.0) > tol:
            raise OrthogonalityPreconditionError("{} = {} is not a unit vector, norm {}".format(
                name, w, space.norm(w)))
    x = 0.5 * (u + v)
    y = v - u
    if space.norm(y) == 0.0:
        raise OrthogonalityPreconditionError("u and v coincide")
    if space.norm(x) < 1.0 - tol:
        raise OrthogonalityPreconditionError("Segment from {} to {} is not on the unit sphere, midpoint norm {}".format(
            u, v, space.norm(x)))

    return x, y, classify(space, x, y, tol=tol)
