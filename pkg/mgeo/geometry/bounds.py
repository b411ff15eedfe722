# -- coding: utf8 --

r"""

    Lower bounds for B-orthogonal unit pairs :math:`x \perp_B y`

    .. math::

        \|t x + (1-t) y\| \geq \frac{1}{3} \quad \forall t \in [0,1], \qquad \|y + \lambda x\| \geq \frac{1}{2}
        \quad \forall \lambda

    Both floors are attained in :math:`\ell_\infty` at :math:`x = (1,1), y = (-1,0)`. In a strictly convex space the
    inequalities are strict, and in an inner-product space the minima are :math:`1/\sqrt{2}` and 1.

"""

import logging
import numpy as np
from dataclasses import dataclass, field

from .. import constants as cst
from ..spaces import as_vector, sphere_point_2d
from ..exceptions import OrthogonalityPreconditionError, NormAxiomError
from ..orthogonality import directional_min, companion_arc_2d
from ..orthogonality.minimize import golden_section

logger = logging.getLogger(__name__)

SEGMENT_FLOOR = 1.0 / 3.0
LINE_FLOOR = 0.5

@dataclass
class BoundsRecord:
    """
    Segment and line minima of one B-orthogonal unit pair.

    Attributes
    ----------
    x, y : numpy.ndarray
        Unit vectors with x B-orthogonal to y
    segment_t, segment_min : float
        Minimizer and minimum of :math:`t \\mapsto \\|tx + (1-t)y\\|` on [0, 1]
    line_lambda, line_min : float
        Minimizer and minimum of :math:`\\lambda \\mapsto \\|y + \\lambda x\\|`
    space : str
        Name of the space
    theta : float
        Angle of x for surveyed planar pairs
    kind : str
        Which companion of x was used, mid, lo or hi, or given for supplied pairs
    """

    x: np.ndarray
    y: np.ndarray
    segment_t: float
    segment_min: float
    line_lambda: float
    line_min: float
    space: str
    theta: float = None
    kind: str = "given"

@dataclass
class BoundsSurvey:
    """
    Records of a survey with global minima, margins over the floors and floor violations.
    """
    records: list = field(default_factory=list)
    segment_global_min: float = np.inf
    line_global_min: float = np.inf
    segment_margin: float = np.inf
    line_margin: float = np.inf
    violations: list = field(default_factory=list)

class _Precondition:
    """
    Checked unit lengths and B-orthogonality of a pair, with the slack they allow in the envelope inequalities.
    """

    def __init__(self, space, x, y, tol, unit_tol):
        self.x = as_vector(x, space.dim)
        self.y = as_vector(y, space.dim)
        nx, ny = space.norm(self.x), space.norm(self.y)
        for name, n in [("x", nx), ("y", ny)]:
            if abs(n - 1.0) > unit_tol:
                raise OrthogonalityPreconditionError("{} is not a unit vector, norm {}".format(name, n))

        result = directional_min(space, self.x, self.y, value_tol=tol)
        self.defect = max(0.0, 1.0 - result.normalized_min)
        if self.defect > tol:
            raise OrthogonalityPreconditionError(
                "x = {} is not B-orthogonal to y = {}: min ||x + l*y|| = {} at l = {}".format(
                    self.x, self.y, result.min_value, result.argmin))
        self.ex, self.ey = abs(nx - 1.0), abs(ny - 1.0)

    def segment_slack(self, t):
        return cst.ENVELOPE_TOL + t * (self.defect + self.ex) + (1.0 - t) * self.ey

    def line_slack(self, lam):
        return cst.ENVELOPE_TOL + abs(lam) * (self.defect + self.ex) + self.ey

def _segment_min(space, pre):
    x, y = pre.x, pre.y

    def f(t):
        value = space.norm(t * x + (1.0 - t) * y)
        if value < max(abs(2.0 * t - 1.0), t) - pre.segment_slack(t):
            raise NormAxiomError("||tx + (1-t)y|| = {} at t = {} is below max(|2t-1|, t)".format(value, t))
        return value

    gs = golden_section(f, 0.0, 1.0, xtol=cst.SEARCH_XTOL)
    best_t, best = gs.x, gs.fun
    for t in [0.0, 1.0]:
        value = f(t)
        if value < best:
            best_t, best = t, value
    return best_t, best

def _line_min(space, pre):

    def monitor(lam, value):
        if value < max(abs(lam), abs(1.0 - abs(lam))) - pre.line_slack(lam):
            raise NormAxiomError("||y + lx|| = {} at l = {} is below max(|l|, |1-|l||)".format(value, lam))

    result = directional_min(space, pre.y, pre.x, monitor=monitor)
    return result.argmin, result.min_value

def segment_min(space, x, y, tol=cst.PRECONDITION_TOL, unit_tol=cst.UNIT_TOL):
    r"""
    Minimize :math:`t \mapsto \|tx + (1-t)y\|` over [0, 1] for unit vectors with :math:`x \perp_B y`.

    Every probe is checked against :math:`\|tx + (1-t)y\| \geq \max(|2t-1|, t)`.

    Parameters
    ----------
    space : obj
        Space object
    x, y : array_like
        Unit vectors
    tol : float, Optional, default: 1e-7
        Tolerance of the B-orthogonality precondition
    unit_tol : float, Optional, default: 1e-9
        Tolerance on the unit lengths

    Returns
    -------
    t : float
        Minimizer in [0, 1]
    value : float
        Minimum
    """
    return _segment_min(space, _Precondition(space, x, y, tol, unit_tol))

def line_min(space, x, y, tol=cst.PRECONDITION_TOL, unit_tol=cst.UNIT_TOL):
    r"""
    Minimize :math:`\lambda \mapsto \|y + \lambda x\|` for unit vectors with :math:`x \perp_B y`.

    Every probe is checked against :math:`\|y + \lambda x\| \geq \max(|\lambda|, |1-|\lambda||)`.

    Parameters
    ----------
    space : obj
        Space object
    x, y : array_like
        Unit vectors
    tol : float, Optional, default: 1e-7
        Tolerance of the B-orthogonality precondition
    unit_tol : float, Optional, default: 1e-9
        Tolerance on the unit lengths

    Returns
    -------
    lam : float
        Minimizer
    value : float
        Minimum
    """
    return _line_min(space, _Precondition(space, x, y, tol, unit_tol))

def bounds_record(space, x, y, tol=cst.PRECONDITION_TOL, theta=None, kind="given"):
    """
    Compute both minima of a pair, checking the precondition once.
    """
    pre = _Precondition(space, x, y, tol, cst.UNIT_TOL)
    t, smin = _segment_min(space, pre)
    lam, lmin = _line_min(space, pre)
    return BoundsRecord(pre.x, pre.y, t, smin, lam, lmin, space.name, theta, kind)

def survey_pairs_2d(space, num_pairs=cst.SURVEY_GRID):
    """
    Generate B-orthogonal unit pairs of a planar space on a uniform angle grid.

    Each grid point x is paired with the midpoint of its companion arc and, where the arc is wider than
    ``SMOOTH_ARC_WIDTH``, with both arc ends.

    Returns
    -------
    pairs : list
        Tuples (x, y, theta, kind)
    """

    pairs = []
    for k in range(int(num_pairs)):
        theta = k * cst.TWO_PI / num_pairs
        x = sphere_point_2d(space, theta)
        arc = companion_arc_2d(space, x)
        pairs.append((x, sphere_point_2d(space, arc.mid), theta, "mid"))
        if not arc.smooth:
            pairs.append((x, sphere_point_2d(space, arc.lo), theta, "lo"))
            pairs.append((x, sphere_point_2d(space, arc.hi), theta, "hi"))
    return pairs

def bounds_survey(space, num_pairs=cst.SURVEY_GRID, tol=cst.TOL, pairs=None):
    """
    Compute segment and line minima over many B-orthogonal pairs and compare them with the floors 1/3 and 1/2.

    Parameters
    ----------
    space : obj
        Space object
    num_pairs : int, Optional, default: 720
        Number of grid angles for planar spaces
    tol : float, Optional, default: 1e-9
        Slack of the floor comparisons
    pairs : list, Optional
        Unit pairs (x, y) to survey instead of the planar grid, required when dim > 2

    Returns
    -------
    survey : BoundsSurvey
        Records ordered by angle index, global minima, margins and violations
    """

    if pairs is None:
        if space.dim != 2:
            raise ValueError("bounds_survey generates pairs only in the plane, supply pairs for dim={}".format(
                space.dim))
        pairs = survey_pairs_2d(space, num_pairs)
    else:
        pairs = [(p[0], p[1], None, "given") for p in pairs]

    survey = BoundsSurvey()
    for i, (x, y, theta, kind) in enumerate(pairs):
        record = bounds_record(space, x, y, theta=theta, kind=kind)
        survey.records.append(record)
        if record.segment_min < SEGMENT_FLOOR - tol:
            survey.violations.append({"index": i, "bound": "segment", "value": record.segment_min})
        if record.line_min < LINE_FLOOR - tol:
            survey.violations.append({"index": i, "bound": "line", "value": record.line_min})

    if survey.records:
        survey.segment_global_min = min(r.segment_min for r in survey.records)
        survey.line_global_min = min(r.line_min for r in survey.records)
        survey.segment_margin = survey.segment_global_min - SEGMENT_FLOOR
        survey.line_margin = survey.line_global_min - LINE_FLOOR

    if survey.violations:
        logger.warning("Space '{}': {} bound violations, the computation is faulty".format(
            space.name, len(survey.violations)))
    logger.info("Space '{}': {} pairs, segment minimum {:.12g}, line minimum {:.12g}".format(
        space.name, len(survey.records), survey.segment_global_min, survey.line_global_min))

    return survey
