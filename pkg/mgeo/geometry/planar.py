# -- coding: utf8 --

r"""

    Conjugate diameters and Radon curves of normed planes

    Two diameters of the unit sphere through x and y are conjugate when :math:`x \perp_B y` and :math:`y \perp_B x`,
    strongly conjugate when both relations are strong. Every normed plane has at least one pair of conjugate
    diameters. The unit sphere is a Radon curve when B-orthogonality is symmetric, i.e. when every diameter has a
    conjugate one.

    The searches pair the grid point x with the midpoint y of its companion arc and follow the back-residual h, the
    signed distance from zero to the minimizer set of :math:`\lambda \mapsto \|y + \lambda x\|`. Conjugate diameters
    are the zeros of h.

"""

import logging
import numpy as np
from enum import Enum
from dataclasses import dataclass, field
import scipy.optimize as spo

from .. import constants as cst
from ..spaces import as_vector, sphere_point_2d
from ..exceptions import ConjugateSearchError
from ..orthogonality import directional_min, residual, companion_arc_2d, is_birkhoff
from .convexity import strict_convexity_probe, ConvexityVerdict
from .basis import Basis, strongly_orthonormal_direct

logger = logging.getLogger(__name__)

class Strength(str, Enum):
    CONJUGATE = "Conjugate"
    STRONGLY_CONJUGATE = "StronglyConjugate"

@dataclass
class DiameterPair:
    """
    Pair of unit vectors with their orthogonality residuals.

    Attributes
    ----------
    theta_x, theta_y : float
        Angles of x and y
    x, y : numpy.ndarray
        Unit vectors
    residual_xy : float
        Distance from zero to the minimizer set of :math:`\\|x + \\lambda y\\|`
    residual_yx : float
        Same with the roles swapped
    strength : Strength
        Conjugate, StronglyConjugate, or None for a candidate that is neither
    smooth : bool
        The sphere is smooth at x
    """
    theta_x: float
    theta_y: float
    x: np.ndarray
    y: np.ndarray
    residual_xy: float
    residual_yx: float
    strength: Strength = None
    smooth: bool = True

def _back_residual(space, theta, arc=None):
    x = sphere_point_2d(space, theta)
    if arc is None:
        arc = companion_arc_2d(space, x)
    y = sphere_point_2d(space, arc.mid)
    return residual(directional_min(space, y, x)), arc

def diameter_pair(space, theta, tol=cst.ARG_TOL, arg_tol=cst.ARG_TOL):
    """
    Build the pair of the sphere point at angle theta and the midpoint of its companion arc.

    Parameters
    ----------
    space : obj
        Planar space object
    theta : float
        Angle of x
    tol : float, Optional, default: 1e-6
        Largest residual of a conjugate pair
    arg_tol : float, Optional, default: 1e-6
        Width below which a minimizer set is a point

    Returns
    -------
    pair : DiameterPair
        Residuals and strength
    """

    x = sphere_point_2d(space, theta)
    arc = companion_arc_2d(space, x)
    y = sphere_point_2d(space, arc.mid)
    if abs(np.sin(arc.mid - theta)) < 1e-6:
        raise ValueError("Companion of the point at angle {} is parallel to it".format(theta))

    xy = directional_min(space, x, y, arg_tol=arg_tol)
    yx = directional_min(space, y, x, arg_tol=arg_tol)
    pair = DiameterPair(float(theta), float(arc.mid), x, y, abs(residual(xy)), abs(residual(yx)), None, arc.smooth)
    if pair.residual_xy <= tol and pair.residual_yx <= tol:
        if xy.isolated and yx.isolated and min(xy.normalized_min, yx.normalized_min) >= 1.0 - cst.TOL:
            pair.strength = Strength.STRONGLY_CONJUGATE
        else:
            pair.strength = Strength.CONJUGATE
    return pair

def _angle_gap(a, b):
    """Distance of two diameter angles modulo pi."""
    return abs((a - b + 0.5 * np.pi) % np.pi - 0.5 * np.pi)

def merge_pairs(pairs, merge=cst.DIAMETER_MERGE):
    """
    Drop pairs that repeat an earlier one up to sign and order of the diameters.
    """

    kept = []
    for p in pairs:
        duplicate = False
        for q in kept:
            same = _angle_gap(p.theta_x, q.theta_x) <= merge and _angle_gap(p.theta_y, q.theta_y) <= merge
            swapped = _angle_gap(p.theta_x, q.theta_y) <= merge and _angle_gap(p.theta_y, q.theta_x) <= merge
            if same or swapped:
                duplicate = True
                break
        if not duplicate:
            kept.append(p)
    return kept

def _refine_zero(space, a, b):
    """
    Bisect the back-residual on [a, b] where it changes sign. Returns None when the bracket is lost.
    """

    def h(theta):
        return _back_residual(space, theta)[0]

    try:
        return spo.bisect(h, a, b, xtol=1e-12)
    except ValueError:
        logger.debug("Lost bracket of the back-residual on [{}, {}]".format(a, b))
        return None

######################################################################
#                                                                    #
#                        Conjugate diameters                         #
#                                                                    #
######################################################################

@dataclass
class ConjugateSearch:
    """
    Attributes
    ----------
    pairs : list
        De-duplicated DiameterPair objects, ordered by angle of x
    all_conjugate : bool
        Every grid point yielded a conjugate pair
    smooth : bool
        The sphere was smooth at every grid point
    grid_size : int
        Number of grid angles over [0, pi)
    """
    pairs: list = field(default_factory=list)
    all_conjugate: bool = False
    smooth: bool = True
    grid_size: int = 0

def find_conjugate_diameters(space, grid_size=cst.CONJUGATE_GRID, tol=cst.ARG_TOL, arg_tol=cst.ARG_TOL):
    """
    Find pairs of conjugate diameters of a planar space.

    The back-residual h is evaluated on a grid over [0, pi). Grid points with :math:`|h| \\leq tol` are kept as they
    are, sign changes of h between neighbors (including the wrap to pi, where h repeats) are refined by bisection.
    Refined pairs are kept only when both residuals are within tol.

    Parameters
    ----------
    space : obj
        Planar space object
    grid_size : int, Optional, default: 360
        Number of grid angles
    tol : float, Optional, default: 1e-6
        Largest residual of a conjugate pair
    arg_tol : float, Optional, default: 1e-6
        Width below which a minimizer set is a point

    Returns
    -------
    search : ConjugateSearch
        Pairs and flags
    """

    if space.dim != 2:
        raise ValueError("find_conjugate_diameters requires a planar space, dim={}".format(space.dim))
    n = int(grid_size)
    if n < 2:
        raise ValueError("grid_size must be at least 2")

    thetas = np.arange(n) * np.pi / n
    values, smooth = [], True
    for theta in thetas:
        h, arc = _back_residual(space, theta)
        values.append(h)
        smooth = smooth and arc.smooth

    candidates = [thetas[k] for k in range(n) if abs(values[k]) <= tol]
    all_conjugate = len(candidates) == n
    for k in range(n):
        a, b = thetas[k], thetas[k] + np.pi / n
        ha, hb = values[k], values[(k + 1) % n]
        if abs(ha) > tol and abs(hb) > tol and np.sign(ha) != np.sign(hb):
            theta = _refine_zero(space, a, b)
            if theta is not None:
                candidates.append(theta % np.pi)

    pairs = []
    for theta in sorted(candidates):
        pair = diameter_pair(space, theta, tol=tol, arg_tol=arg_tol)
        if pair.strength is not None:
            pairs.append(pair)
        else:
            logger.debug("Discarded candidate at {:.9g}, residuals {:.3g} {:.3g}".format(
                theta, pair.residual_xy, pair.residual_yx))
    pairs = merge_pairs(pairs)

    if not pairs:
        raise ConjugateSearchError("No conjugate diameters found in '{}' on a grid of {}; every normed plane has "
                                   "a pair, so the space or the search is defective".format(space.name, n))

    logger.info("Space '{}': {} pairs of conjugate diameters, {} strongly conjugate".format(
        space.name, len(pairs), sum(p.strength == Strength.STRONGLY_CONJUGATE for p in pairs)))
    return ConjugateSearch(pairs, all_conjugate, smooth, n)

@dataclass
class RadonResult:
    """
    Attributes
    ----------
    radon : bool
        Every grid point's back-residual is within tol
    max_residual : float
        Worst back-residual
    witness_theta : float
        Angle of worst asymmetry
    witness_pair : tuple
        The pair (x, y) at that angle
    caveat : bool
        The sphere is not smooth somewhere, so companions were chosen by the midpoint rule
    """
    radon: bool
    max_residual: float
    witness_theta: float
    witness_pair: tuple
    caveat: bool

def is_radon(space, grid_size=cst.CONJUGATE_GRID, tol=cst.ARG_TOL):
    """
    Test whether B-orthogonality is symmetric on a grid of sphere points.

    Parameters
    ----------
    space : obj
        Planar space object
    grid_size : int, Optional, default: 360
        Number of grid angles over [0, pi)
    tol : float, Optional, default: 1e-6
        Largest accepted back-residual

    Returns
    -------
    result : RadonResult
        Verdict, worst residual, witness and the non-smoothness caveat
    """

    if space.dim != 2:
        raise ValueError("is_radon requires a planar space, dim={}".format(space.dim))

    n = int(grid_size)
    worst, worst_theta, worst_arc, caveat = -1.0, 0.0, None, False
    for theta in np.arange(n) * np.pi / n:
        h, arc = _back_residual(space, theta)
        caveat = caveat or not arc.smooth
        if abs(h) > worst:
            worst, worst_theta, worst_arc = abs(h), theta, arc

    pair = (sphere_point_2d(space, worst_theta), sphere_point_2d(space, worst_arc.mid))
    result = RadonResult(worst <= tol, float(worst), float(worst_theta), pair, caveat)
    if caveat:
        logger.warning("Sphere of '{}' is not smooth, the Radon verdict rests on the midpoint companion rule".format(
            space.name))
    logger.info("Space '{}': Radon {}, worst back-residual {:.3g} at {:.6g}".format(
        space.name, result.radon, worst, worst_theta))
    return result

######################################################################
#                                                                    #
#                         Exhaustive scans                           #
#                                                                    #
######################################################################

@dataclass
class PairScan:
    """
    Attributes
    ----------
    resolution : float
        Grid step in degrees
    grid_size : int
        Number of grid angles over [0, pi)
    near_hits : int
        Unordered grid pairs each lying on the other's companion arc within half a step
    conjugate_pairs : list
        Refined pairs with both residuals within tol
    strong_pairs : list
        The strongly conjugate ones among them
    covered_fraction : float
        Share of grid angles within one step of a diameter of a strongly conjugate pair
    """
    resolution: float
    grid_size: int
    near_hits: int = 0
    conjugate_pairs: list = field(default_factory=list)
    strong_pairs: list = field(default_factory=list)
    covered_fraction: float = 0.0

def exhaustive_pair_scan(space, angular_resolution=0.25, tol=cst.ARG_TOL, arg_tol=cst.ARG_TOL):
    """
    Scan all pairs of grid diameters for mutual B-orthogonality.

    A pair of grid angles is a near-hit when each lies within half a step of the other's companion arc. The back-
    residual is evaluated at every grid angle: small values are candidates and sign changes between neighbors
    (including the wrap to pi, and jumps at corners of the sphere) are refined by bisection. A candidate is kept
    only when both residuals of its pair are within tol.

    Parameters
    ----------
    space : obj
        Planar space object
    angular_resolution : float, Optional, default: 0.25
        Grid step in degrees, at most 1
    tol : float, Optional, default: 1e-6
        Largest residual of a conjugate pair
    arg_tol : float, Optional, default: 1e-6
        Width below which a minimizer set is a point

    Returns
    -------
    scan : PairScan
        Counts, pairs and coverage
    """

    if space.dim != 2:
        raise ValueError("exhaustive_pair_scan requires a planar space, dim={}".format(space.dim))
    if not 0.0 < angular_resolution <= 1.0:
        raise ValueError("angular_resolution must lie in (0, 1] degrees, given {}".format(angular_resolution))

    n = int(round(180.0 / angular_resolution))
    step = np.pi / n
    thetas = np.arange(n) * step
    arcs = [companion_arc_2d(space, sphere_point_2d(space, theta)) for theta in thetas]
    lo = np.array([arc.lo for arc in arcs]) - thetas - 0.5 * step
    hi = np.array([arc.hi for arc in arcs]) - thetas + 0.5 * step

    offsets = (thetas[None, :] - thetas[:, None]) % np.pi
    on_arc = (offsets >= lo[:, None]) & (offsets <= hi[:, None])
    near = on_arc & on_arc.T
    np.fill_diagonal(near, False)
    scan = PairScan(float(angular_resolution), n, int(np.count_nonzero(np.triu(near))))

    values = [_back_residual(space, theta, arc)[0] for theta, arc in zip(thetas, arcs)]
    candidates = [thetas[k] for k in range(n) if abs(values[k]) <= tol]
    for k in range(n):
        ha, hb = values[k], values[(k + 1) % n]
        if abs(ha) > tol and abs(hb) > tol and np.sign(ha) != np.sign(hb):
            theta = _refine_zero(space, thetas[k], thetas[k] + step)
            if theta is not None:
                candidates.append(theta % np.pi)

    pairs = [diameter_pair(space, theta, tol=tol, arg_tol=arg_tol) for theta in sorted(candidates)]
    scan.conjugate_pairs = merge_pairs([p for p in pairs if p.strength is not None])
    scan.strong_pairs = [p for p in scan.conjugate_pairs if p.strength == Strength.STRONGLY_CONJUGATE]

    covered = np.zeros(n, dtype=bool)
    for p in scan.strong_pairs:
        for angle in (p.theta_x, p.theta_y):
            covered |= np.array([_angle_gap(t, angle) <= step * (1.0 + 1e-9) for t in thetas])
    scan.covered_fraction = float(np.mean(covered))

    logger.info("Space '{}' at {} degrees: {} near-hits, {} conjugate pairs, {} strongly conjugate".format(
        space.name, angular_resolution, scan.near_hits, len(scan.conjugate_pairs), len(scan.strong_pairs)))
    return scan

@dataclass
class GeneralizedConjugate:
    verdict: bool
    failing_pair: tuple = None

def generalized_conjugate_check(space, diameters, tol=cst.TOL):
    """
    Check that n diameters of an n-dimensional space are pairwise conjugate.

    Parameters
    ----------
    space : obj
        Space object
    diameters : array_like
        One nonzero vector per diameter, as many as the dimension
    tol : float, Optional, default: 1e-9
        Value tolerance of each B-orthogonality test

    Returns
    -------
    result : GeneralizedConjugate
        Verdict and the first ordered pair (i, j) with diameter i not B-orthogonal to diameter j
    """

    vectors = [as_vector(v, space.dim) for v in diameters]
    if len(vectors) != space.dim:
        raise ValueError("Need {} diameters in dimension {}, given {}".format(space.dim, space.dim, len(vectors)))
    vectors = [v / space.norm(v) for v in vectors]
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            if np.linalg.svd(np.vstack((vectors[i], vectors[j])), compute_uv=False).min() <= 1e-10:
                raise ValueError("Diameters {} and {} are parallel".format(i, j))

    for i in range(len(vectors)):
        for j in range(len(vectors)):
            if i != j and not is_birkhoff(space, vectors[i], vectors[j], tol=tol):
                logger.info("Diameter {} is not B-orthogonal to diameter {} in '{}'".format(i, j, space.name))
                return GeneralizedConjugate(False, (i, j))
    return GeneralizedConjugate(True)

@dataclass
class Crosscheck:
    """
    Agreement of strongly conjugate pairs with strongly orthonormal two-element bases.

    Attributes
    ----------
    agreements : int
        Pairs where both computations agree
    disagreements : list
        Angles (theta_x, theta_y) and both verdicts of disagreeing pairs
    skipped : bool
        The space has a flat segment, so the equivalence does not apply
    hypothesis_verified : bool
        No flat segment was found
    """
    agreements: int = 0
    disagreements: list = field(default_factory=list)
    skipped: bool = False
    hypothesis_verified: bool = False

def conjugate_basis_crosscheck(space, tol=cst.ARG_TOL, grid_size=cst.CONJUGATE_GRID, num_negative=3, convexity=None,
                               seed=0):
    """
    Compare strongly conjugate diameters with strongly orthonormal bases in a strictly convex plane.

    Each strongly conjugate pair found by :func:`find_conjugate_diameters` must be a strongly orthonormal basis, and
    ``num_negative`` pairs that are not conjugate must not be.

    Parameters
    ----------
    space : obj
        Planar space object
    tol : float, Optional, default: 1e-6
        Largest residual of a conjugate pair
    grid_size : int, Optional, default: 360
        Grid of the conjugate diameter search
    num_negative : int, Optional, default: 3
        Number of non-conjugate pairs checked
    convexity : ConvexityReport, Optional
        Precomputed convexity report
    seed : int, Optional, default: 0
        Seed of the convexity probe and of the definition check

    Returns
    -------
    result : Crosscheck
    """

    if convexity is None:
        convexity = strict_convexity_probe(space, seed=seed)
    if convexity.strictly_convex_verdict == ConvexityVerdict.FLAT_FOUND:
        logger.warning("Space '{}' is not strictly convex, cross-check skipped".format(space.name))
        return Crosscheck(skipped=True, hypothesis_verified=False)

    result = Crosscheck(hypothesis_verified=True)
    search = find_conjugate_diameters(space, grid_size=grid_size, tol=tol)

    checks = [(p.x, p.y, True) for p in search.pairs if p.strength == Strength.STRONGLY_CONJUGATE]
    for k in range(num_negative):
        theta = (k + 0.5) * np.pi / max(num_negative, 1)
        x = sphere_point_2d(space, theta)
        y = sphere_point_2d(space, theta + np.pi / 3.0)
        if not (is_birkhoff(space, x, y) and is_birkhoff(space, y, x)):
            checks.append((x, y, False))

    for x, y, strongly_conjugate in checks:
        direct = strongly_orthonormal_direct(space, Basis(space, [x, y], normalize=True), seed=seed).verdict
        if direct == strongly_conjugate:
            result.agreements += 1
        else:
            result.disagreements.append({"x": x.tolist(), "y": y.tolist(), "strongly_conjugate": strongly_conjugate,
                                         "direct": direct})
            logger.warning("Space '{}': pair {} {} is strongly conjugate {} but strongly orthonormal {}".format(
                space.name, x, y, strongly_conjugate, direct))

    return result
