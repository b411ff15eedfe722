# -- coding: utf8 --

r"""

    Strongly orthonormal Hamel bases

    For a basis :math:`\{e_1, \ldots, e_m\}` of unit vectors let :math:`\alpha_i(z)` be the i-th coefficient of z and
    :math:`S_i = \{\alpha_i(z) : \|z\| = 1\}`. The maximum of :math:`S_i` is the dual norm of the coordinate functional
    and is at least 1. A basis is strongly orthonormal when every :math:`e_i` is strongly B-orthogonal to the span of
    the others. The two agree in strictly convex spaces: the basis is strongly orthonormal iff
    :math:`\max S_i = 1` for every i. Only the direction "strongly orthonormal implies :math:`\max S_i = 1`" holds
    without strict convexity.

    Indices are zero based.

"""

import logging
import numpy as np
from dataclasses import dataclass, field

from .. import constants as cst
from ..spaces import as_vector, sphere_points_2d, sphere_point_2d
from ..orthogonality import directional_min, classify, Relation
from ..orthogonality.minimize import golden_section
from .convexity import strict_convexity_probe, ConvexityVerdict

logger = logging.getLogger(__name__)

class Basis:
    """
    Hamel basis of unit vectors of a finite-dimensional space.

    Parameters
    ----------
    space : obj
        Space object
    vectors : array_like
        One basis vector per row, as many as the dimension of the space
    normalize : bool, Optional, default: False
        Rescale the vectors to unit norm instead of rejecting non-unit vectors

    Attributes
    ----------
    vectors : numpy.ndarray
        Basis vectors as rows
    change_of_coordinates : numpy.ndarray
        Matrix mapping ambient coordinates to basis coefficients
    """

    def __init__(self, space, vectors, normalize=False):

        try:
            E = np.array(vectors, dtype=float)
        except (TypeError, ValueError):
            raise TypeError("Basis vectors must be lists of real numbers, given: {}".format(vectors))
        if E.ndim != 2 or E.shape != (space.dim, space.dim):
            raise ValueError("A basis of a space of dimension {} needs {} vectors of length {}, given shape {}".format(
                space.dim, space.dim, space.dim, E.shape))
        E = np.array([as_vector(e, space.dim) for e in E])

        norms = space.norm_many(E)
        if np.any(norms == 0.0):
            raise ValueError("Basis contains the zero vector")
        if normalize:
            E = E / norms[:, None]
            norms = space.norm_many(E)
        bad = np.where(np.abs(norms - 1.0) > cst.BASIS_UNIT_TOL)[0]
        if bad.size > 0:
            raise ValueError("Basis vectors {} are not unit vectors, norms {}".format(bad.tolist(), norms[bad]))

        smallest = np.linalg.svd(E, compute_uv=False).min()
        if smallest <= cst.BASIS_COND_TOL:
            raise ValueError("Basis vectors are linearly dependent, smallest singular value {}".format(smallest))

        self.space_name = space.name
        self.vectors = E
        self.change_of_coordinates = np.linalg.inv(E.T)

    @classmethod
    def from_standard(cls, space):
        """
        Standard basis of the space, rescaled to unit norm.
        """
        return cls(space, np.eye(space.dim), normalize=True)

    @property
    def m(self):
        return self.vectors.shape[0]

    def __len__(self):
        return self.m

    def __getitem__(self, i):
        return self.vectors[i]

    def coefficients(self, w):
        """
        Coefficients of w in the basis.
        """
        return self.change_of_coordinates @ np.asarray(w, dtype=float)

    def functional(self, i):
        """
        Row vector of the i-th coordinate functional.
        """
        self._check_index(i)
        return self.change_of_coordinates[i]

    def _check_index(self, i):
        if not isinstance(i, (int, np.integer)) or not 0 <= i < self.m:
            raise ValueError("Basis index must be an integer in [0, {}), given {}".format(self.m, i))

######################################################################
#                                                                    #
#                          Max coefficient                           #
#                                                                    #
######################################################################

@dataclass
class MaxCoefficient:
    """
    Attributes
    ----------
    index : int
        Basis index
    value : float
        :math:`\\max S_i`
    maximizer : numpy.ndarray
        Unit vector attaining it
    converged : bool
        False when the evaluation budget ran out first
    evaluations : int
        Number of norm evaluations
    """
    index: int
    value: float
    maximizer: np.ndarray
    converged: bool
    evaluations: int

def _ascend(space, phi, w, step_tol, budget):
    """
    Coordinate-wise ascent of :math:`\\phi \\cdot w / \\|w\\|` with a halving step.
    """

    dim = len(w)
    directions = np.vstack((np.eye(dim), -np.eye(dim)))
    w = w / np.linalg.norm(w)
    best = phi @ w / space.norm(w)
    evaluations = 1
    step = 0.5
    while step >= step_tol:
        improved = False
        for d in directions:
            if evaluations >= budget:
                return w, best, evaluations, False
            candidate = w + step * d
            n = space.norm(candidate)
            evaluations += 1
            if n == 0.0:
                continue
            value = phi @ candidate / n
            if value > best:
                w, best, improved = candidate / np.linalg.norm(candidate), value, True
        if not improved:
            step *= 0.5
    return w, best, evaluations, True

def _sweep_coefficient_2d(space, phi, num_angles):
    angles = np.arange(num_angles) * cst.TWO_PI / num_angles
    values = sphere_points_2d(space, angles) @ phi
    k = int(np.argmax(values))
    step = angles[1] - angles[0]

    gs = golden_section(lambda a: -(phi @ sphere_point_2d(space, a)), angles[k] - step, angles[k] + step,
                        xtol=cst.SEARCH_XTOL)
    if -gs.fun > values[k]:
        return sphere_point_2d(space, gs.x), -gs.fun, num_angles + gs.nfev
    return sphere_point_2d(space, angles[k]), values[k], num_angles + gs.nfev

def max_coefficient(space, basis, i, budget=cst.OPTIMIZER_BUDGET, seed=0, num_random=4, sweep_angles=3600):
    r"""
    Maximize the i-th basis coefficient over the unit sphere.

    The degree-0 homogeneous ratio :math:`\alpha_i(w)/\|w\|` is maximized over ambient directions by coordinate-wise
    ascent with a halving step, started from :math:`e_i`, the Euclidean direction of the functional, the other basis
    vectors with both signs and random directions. Planar spaces also get an angle sweep with golden-section
    refinement. The best point only changes on a strict increase, so the value never drops below
    :math:`1/\|e_i\| = 1`.

    Parameters
    ----------
    space : obj
        Space object
    basis : Basis
        Basis of unit vectors
    i : int
        Zero based basis index
    budget : int, Optional, default: 20000
        Largest number of norm evaluations of the ascent
    seed : int, Optional, default: 0
        Seed of the random starts
    num_random : int, Optional, default: 4
        Number of random starts
    sweep_angles : int, Optional, default: 3600
        Grid of the planar sweep

    Returns
    -------
    result : MaxCoefficient
        Maximum, unit maximizer and convergence flag
    """

    phi = basis.functional(i)
    rng = np.random.default_rng(seed)

    starts = [basis[i], phi]
    for j in range(basis.m):
        if j != i:
            starts.extend([basis[j], -basis[j]])
    starts.extend(rng.standard_normal((num_random, space.dim)))

    best_w, best = basis[i], phi @ basis[i] / space.norm(basis[i])
    evaluations, converged = 1, True
    for w0 in starts:
        if np.linalg.norm(w0) == 0.0:
            continue
        remaining = budget - evaluations
        if remaining <= 0:
            converged = False
            break
        w, value, used, ok = _ascend(space, phi, np.array(w0, dtype=float), 1e-12, remaining)
        evaluations += used
        converged = converged and ok
        if value > best:
            best_w, best = w, value

    if space.dim == 2:
        w, value, used = _sweep_coefficient_2d(space, phi, sweep_angles)
        evaluations += used
        if value > best:
            best_w, best = w, value

    maximizer = best_w / space.norm(best_w)
    if not converged:
        logger.warning("max_coefficient for index {} in '{}' ran out of its budget of {} evaluations".format(
            i, space.name, budget))
    logger.debug("max S_{} in '{}' = {:.15g} at {}".format(i, space.name, best, maximizer))

    return MaxCoefficient(i, float(phi @ maximizer), maximizer, converged, evaluations)

@dataclass
class Uniqueness:
    unique: bool
    witness: np.ndarray = None
    samples: int = 0

def uniqueness_probe(space, basis, i, max_si, maximizer, num_samples=2000, value_gap=1e-7, separation=5e-2,
                     seed=0):
    r"""
    Look for a second unit vector whose i-th coefficient comes within ``value_gap`` of :math:`\max S_i`.

    Candidates are first the normalized points :math:`z_0 \pm r d` for r = 1/2, 1/4, ... and d a coordinate or basis
    direction, then random perturbations of :math:`z_0`. In a strictly convex space the maximizer is unique.

    Parameters
    ----------
    space : obj
        Space object
    basis : Basis
        Basis of unit vectors
    i : int
        Zero based basis index
    max_si : float
        Maximum of the coefficient
    maximizer : array_like
        Unit vector attaining it
    num_samples : int, Optional, default: 2000
        Number of random candidates
    value_gap : float, Optional, default: 1e-7
        A candidate counts when its coefficient is at least ``max_si - value_gap``
    separation : float, Optional, default: 5e-2
        Smallest distance :math:`\|y - z_0\|` of a second maximizer
    seed : int, Optional, default: 0
        Seed of the random candidates

    Returns
    -------
    result : Uniqueness
        Flag and the second maximizer when one was found
    """

    phi = basis.functional(i)
    z0 = as_vector(maximizer, space.dim)
    rng = np.random.default_rng(seed)

    directions = np.vstack((np.eye(space.dim), basis.vectors))
    radii = []
    r = 0.5
    while r >= 0.5 * separation:
        radii.append(r)
        r *= 0.5
    structured = [z0 + sign * r * d for r in radii for d in directions for sign in (1.0, -1.0)]

    rho = np.exp(rng.uniform(np.log(0.5 * separation), np.log(2.0), num_samples))
    G = rng.standard_normal((num_samples, space.dim))
    perturbed = z0 + rho[:, None] * G / np.linalg.norm(G, axis=1)[:, None]

    Y = np.vstack((np.array(structured), perturbed))
    norms = space.norm_many(Y)
    keep = norms > 0.0
    Y = Y[keep] / norms[keep][:, None]
    hits = np.where((Y @ phi >= max_si - value_gap) & (space.norm_many(Y - z0) >= separation))[0]

    if hits.size > 0:
        witness = Y[hits[0]]
        logger.debug("Second maximizer of S_{} in '{}': {}".format(i, space.name, witness))
        return Uniqueness(False, witness, len(Y))
    return Uniqueness(True, None, len(Y))

######################################################################
#                                                                    #
#                      Strong orthonormality                         #
#                                                                    #
######################################################################

@dataclass
class DirectResult:
    """
    Outcome of :func:`strongly_orthonormal_direct`.

    Attributes
    ----------
    verdict : bool
        Basis is strongly orthonormal
    minima : list
        Per index, the minimum of :math:`\\|e_i + \\sum_{j \\neq i} \\lambda_j e_j\\|` over the box
    witness : dict
        Failing index, coefficients :math:`\\lambda` (zero at the index), value and relation
    """
    verdict: bool
    minima: list = field(default_factory=list)
    witness: dict = None

def _box_descent(space, basis, i, lam, sweeps=30):
    """
    Coordinate descent of :math:`\\|e_i + \\sum_j \\lambda_j e_j\\|` over :math:`\\lambda \\in [-2, 2]^m`, with
    :math:`\\lambda_i = 0` fixed and each line search done by :func:`directional_min`.
    """

    E = basis.vectors
    others = [j for j in range(basis.m) if j != i]
    point = E[i] + lam @ E
    value = space.norm(point)
    for _ in range(sweeps):
        previous = value
        for j in others:
            result = directional_min(space, point, E[j])
            new = float(np.clip(lam[j] + result.argmin, -2.0, 2.0))
            candidate = E[i] + lam @ E + (new - lam[j]) * E[j]
            candidate_value = space.norm(candidate)
            if candidate_value < value:
                lam[j], point, value = new, candidate, candidate_value
        if previous - value <= 1e-15:
            break
    return lam, value

def strongly_orthonormal_direct(space, basis, grid=4, tol=cst.TOL, arg_tol=cst.ARG_TOL, seed=0):
    r"""
    Check the definition: :math:`\|e_i\| < \|e_i + \sum_{j \neq i} \lambda_j e_j\|` whenever some
    :math:`\lambda_j \neq 0`.

    For each i the minimum over the box :math:`[-2, 2]^{m-1}` is found by coordinate descent from :math:`\lambda = 0`
    and ``grid`` random starts. A minimum below :math:`1 - tol` fails. Otherwise the minimizer at zero must be
    isolated along every basis direction and along ``grid`` random combinations of them.

    Parameters
    ----------
    space : obj
        Space object
    basis : Basis
        Basis of unit vectors
    grid : int, Optional, default: 4
        Number of random starts and of random isolation directions per index
    tol : float, Optional, default: 1e-9
        Value tolerance
    arg_tol : float, Optional, default: 1e-6
        Width below which a minimizer set is a point
    seed : int, Optional, default: 0
        Seed of the random starts

    Returns
    -------
    result : DirectResult
        Verdict, per-index minima and a failing witness
    """

    rng = np.random.default_rng(seed)
    m = basis.m
    E = basis.vectors
    result = DirectResult(True)

    for i in range(m):
        others = [j for j in range(m) if j != i]
        starts = [np.zeros(m)]
        for _ in range(grid):
            lam = np.zeros(m)
            lam[others] = rng.uniform(-2.0, 2.0, m - 1)
            starts.append(lam)

        best_lam, best = np.zeros(m), space.norm(E[i])
        for lam in starts:
            lam, value = _box_descent(space, basis, i, lam)
            if value < best:
                best_lam, best = lam, value
        result.minima.append(float(best))

        if best < 1.0 - tol:
            result.verdict = False
            result.witness = {"index": i, "lambdas": best_lam.tolist(), "value": float(best),
                              "relation": Relation.NOT_ORTHOGONAL.value}
            logger.info("Basis vector {} of '{}' is not B-orthogonal to the others, min {:.12g}".format(
                i, space.name, best))
            break

        directions = [np.eye(m)[j] for j in others]
        for _ in range(grid if m > 2 else 0):
            c = np.zeros(m)
            c[others] = rng.standard_normal(m - 1)
            directions.append(c)
        for c in directions:
            verdict = classify(space, E[i], c @ E, tol=tol, arg_tol=arg_tol)
            if verdict.relation != Relation.STRONGLY_BIRKHOFF:
                result.verdict = False
                result.witness = {"index": i, "lambdas": (verdict.witness * c).tolist(),
                                  "value": float(space.norm(E[i] + verdict.witness * (c @ E))),
                                  "relation": verdict.relation.value}
                logger.info("Basis vector {} of '{}' is not strongly orthogonal along {}".format(i, space.name, c))
                break
        if not result.verdict:
            break

    return result

@dataclass
class CriterionResult:
    verdict: bool
    coefficients: list = field(default_factory=list)
    hypothesis_verified: bool = False

def strongly_orthonormal_criterion(space, basis, budget=cst.OPTIMIZER_BUDGET, tol=1e-6, convexity=None, seed=0):
    """
    Check :math:`\\max S_i \\leq 1 + tol` for every index.

    The criterion is equivalent to strong orthonormality only in strictly convex spaces. The space is probed for
    flat segments unless a convexity report is supplied, and a warning is logged when it has one.

    Parameters
    ----------
    space : obj
        Space object
    basis : Basis
        Basis of unit vectors
    budget : int, Optional, default: 20000
        Evaluation budget per index
    tol : float, Optional, default: 1e-6
        Slack above 1
    convexity : ConvexityReport, Optional
        Result of :func:`~mgeo.geometry.convexity.strict_convexity_probe` for this space
    seed : int, Optional, default: 0
        Seed of the random starts

    Returns
    -------
    result : CriterionResult
        Verdict, per-index maxima and whether strict convexity was observed
    """

    if convexity is None:
        convexity = strict_convexity_probe(space, seed=seed)
    verified = convexity.strictly_convex_verdict == ConvexityVerdict.NO_FLAT_FOUND
    if not verified:
        logger.warning("Space '{}' has a flat segment, the max S_i criterion is only necessary here".format(
            space.name))

    coefficients = [max_coefficient(space, basis, i, budget=budget, seed=seed) for i in range(basis.m)]
    verdict = all(c.value <= 1.0 + tol for c in coefficients)
    return CriterionResult(verdict, coefficients, verified)

@dataclass
class BasisRecord:
    index: int
    max_si: float
    maximizer: np.ndarray
    unique: bool
    converged: bool
    second_maximizer: np.ndarray = None

@dataclass
class BasisReport:
    """
    Per-index maxima with both strong orthonormality verdicts.

    Attributes
    ----------
    records : list
        One BasisRecord per basis index
    verdict_direct : bool
        From the definition
    verdict_criterion : bool
        From the max S_i criterion
    agreement : bool
        Both verdicts agree
    hypothesis_verified : bool
        No flat segment was found, so the criterion is also sufficient
    direct_witness : dict
        Failing witness of the definition check
    """
    records: list
    verdict_direct: bool
    verdict_criterion: bool
    agreement: bool
    hypothesis_verified: bool
    direct_witness: dict = None
    vectors: np.ndarray = None
    space: str = None

def basis_report(space, basis, budget=cst.OPTIMIZER_BUDGET, tol=1e-6, direct_tol=cst.TOL, arg_tol=cst.ARG_TOL,
                 grid=4, num_samples=2000, seed=0, convexity=None):
    """
    Run the definition check, the max S_i criterion and the uniqueness probes for a basis.

    Parameters
    ----------
    space : obj
        Space object
    basis : Basis
        Basis of unit vectors
    budget : int, Optional, default: 20000
        Evaluation budget of each max S_i
    tol : float, Optional, default: 1e-6
        Slack of the criterion
    direct_tol : float, Optional, default: 1e-9
        Value tolerance of the definition check
    arg_tol : float, Optional, default: 1e-6
        Width below which a minimizer set is a point
    grid : int, Optional, default: 4
        Random starts and directions of the definition check
    num_samples : int, Optional, default: 2000
        Random candidates of each uniqueness probe
    seed : int, Optional, default: 0
        Seed of all random choices
    convexity : ConvexityReport, Optional
        Precomputed convexity report

    Returns
    -------
    report : BasisReport
    """

    direct = strongly_orthonormal_direct(space, basis, grid=grid, tol=direct_tol, arg_tol=arg_tol, seed=seed)
    criterion = strongly_orthonormal_criterion(space, basis, budget=budget, tol=tol, convexity=convexity, seed=seed)

    records = []
    for c in criterion.coefficients:
        u = uniqueness_probe(space, basis, c.index, c.value, c.maximizer, num_samples=num_samples, seed=seed)
        records.append(BasisRecord(c.index, c.value, c.maximizer, u.unique, c.converged, u.witness))

    report = BasisReport(records, direct.verdict, criterion.verdict, direct.verdict == criterion.verdict,
                         criterion.hypothesis_verified, direct.witness, basis.vectors, space.name)
    logger.info("Basis of '{}': direct {}, criterion {}, hypothesis verified {}".format(
        space.name, report.verdict_direct, report.verdict_criterion, report.hypothesis_verified))
    return report
