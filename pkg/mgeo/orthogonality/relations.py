"""
Birkhoff-James and strong Birkhoff-James orthogonality of pairs of vectors.

    - :math:`x \\perp_B y` when :math:`\\|x\\| \\leq \\|x + \\lambda y\\|` for all real :math:`\\lambda`
    - :math:`x \\perp_{SB} y` when additionally the inequality is strict for every :math:`\\lambda \\neq 0`

Planar spaces also get the set of all B-orthogonal companions of a sphere point, an arc of the unit sphere.
"""

import logging
import numpy as np
from enum import Enum
from dataclasses import dataclass
import scipy.optimize as spo

from .. import constants as cst
from ..spaces import as_vector, sphere_point_2d
from ..exceptions import BracketError
from .minimize import directional_min

logger = logging.getLogger(__name__)

class Relation(str, Enum):
    NOT_ORTHOGONAL = "NotOrthogonal"
    BIRKHOFF_ONLY = "BirkhoffOnly"
    STRONGLY_BIRKHOFF = "StronglyBirkhoff"

@dataclass
class OrthogonalityVerdict:
    """
    Classification of a pair (x, y).

    Attributes
    ----------
    relation : Relation
        NotOrthogonal, BirkhoffOnly or StronglyBirkhoff
    min_result : MinimizationResult
        Minimization of :math:`\\|x + \\lambda y\\|`
    witness : float
        For NotOrthogonal a :math:`\\lambda` with :math:`\\|x + \\lambda y\\| < \\|x\\| - tol`, for BirkhoffOnly a
        :math:`\\lambda_0 \\neq 0` with :math:`\\|x + \\lambda_0 y\\| \\leq \\|x\\| + tol`, otherwise None
    tol : float
        Relative value tolerance
    """

    relation: Relation
    min_result: object
    witness: float = None
    tol: float = cst.TOL

######################################################################
#                                                                    #
#                           Pair relations                           #
#                                                                    #
######################################################################

def _birkhoff(result, tol):
    return result.normalized_min >= 1.0 - tol

def is_birkhoff(space, x, y, tol=cst.TOL):
    r"""
    Decide :math:`x \perp_B y`, i.e. :math:`\min_\lambda \|x + \lambda y\| \geq \|x\| - tol\,\|x\|`.

    Parameters
    ----------
    space : obj
        Space object
    x, y : array_like
        Nonzero vectors
    tol : float, Optional, default: 1e-9
        Value tolerance relative to :math:`\|x\|`

    Returns
    -------
    birkhoff : bool
    """
    return bool(_birkhoff(directional_min(space, x, y, value_tol=tol), tol))

def is_strongly_birkhoff(space, x, y, tol=cst.TOL, arg_tol=cst.ARG_TOL):
    r"""
    Decide :math:`x \perp_{SB} y`: B-orthogonal and the minimum of :math:`\|x + \lambda y\|` is isolated.

    Parameters
    ----------
    space : obj
        Space object
    x, y : array_like
        Nonzero vectors
    tol : float, Optional, default: 1e-9
        Value tolerance relative to :math:`\|x\|`
    arg_tol : float, Optional, default: 1e-6
        Width below which the minimizer set is a point

    Returns
    -------
    strongly_birkhoff : bool
    """
    result = directional_min(space, x, y, value_tol=tol, arg_tol=arg_tol)
    return bool(_birkhoff(result, tol) and result.isolated)

def birkhoff_only_witness(result):
    r"""
    Return a nonzero :math:`\lambda_0` inside the flat interval, the midpoint of the longer of its parts on either
    side of zero (the positive part on ties).
    """
    left = min(result.flat_interval[0], 0.0)
    right = max(result.flat_interval[1], 0.0)
    return 0.5 * right if right >= -left else 0.5 * left

def classify(space, x, y, tol=cst.TOL, arg_tol=cst.ARG_TOL):
    """
    Classify a pair as NotOrthogonal, BirkhoffOnly or StronglyBirkhoff.

    Parameters
    ----------
    space : obj
        Space object
    x, y : array_like
        Nonzero vectors of the space's dimension
    tol : float, Optional, default: 1e-9
        Value tolerance relative to the norm of x
    arg_tol : float, Optional, default: 1e-6
        Width below which the minimizer set is a point

    Returns
    -------
    verdict : OrthogonalityVerdict
        Relation, minimization result and witness
    """

    result = directional_min(space, x, y, value_tol=tol, arg_tol=arg_tol)

    if not _birkhoff(result, tol):
        verdict = OrthogonalityVerdict(Relation.NOT_ORTHOGONAL, result, result.argmin, tol)
    elif result.isolated:
        verdict = OrthogonalityVerdict(Relation.STRONGLY_BIRKHOFF, result, None, tol)
    else:
        verdict = OrthogonalityVerdict(Relation.BIRKHOFF_ONLY, result, birkhoff_only_witness(result), tol)

    logger.debug("classify in '{}': {} vs {} is {}".format(space.name, x, y, verdict.relation.value))
    return verdict

def residual(result):
    """
    Signed distance from zero to the core minimizer interval of a minimization result, zero when it contains zero.
    """
    lo, hi = result.core_interval
    if lo > 0.0:
        return lo
    elif hi < 0.0:
        return hi
    return 0.0

######################################################################
#                                                                    #
#                      Companions in the plane                       #
#                                                                    #
######################################################################

@dataclass
class CompanionArc:
    """
    Arc of unit vectors y at angles [lo, hi] with x B-orthogonal to y.

    Attributes
    ----------
    theta_x : float
        Angle of x
    lo, mid, hi : float
        Angles of the arc ends and of its midpoint, inside (theta_x, theta_x + pi)
    smooth : bool
        Arc is no wider than ``SMOOTH_ARC_WIDTH``, i.e. the supporting line at x is unique
    """

    theta_x: float
    lo: float
    mid: float
    hi: float
    smooth: bool

    @property
    def width(self):
        return self.hi - self.lo

def _quotient_root(quotient, theta_x):
    a = theta_x + 1e-9
    b = theta_x + np.pi - 1e-9
    try:
        return spo.bisect(quotient, a, b, xtol=1e-13)
    except ValueError:
        raise BracketError("Difference quotient does not change sign on ({:.6g}, {:.6g}), the space may be "
                           "malformed".format(a, b))

def companion_arc_2d(space, x, h=cst.COMPANION_STEP):
    r"""
    Find all unit vectors y of a planar space with :math:`x \perp_B y`, counterclockwise from x.

    With :math:`f_\phi(\lambda) = \|\hat{x} + \lambda y(\phi)\|`, the left quotient
    :math:`(f_\phi(0) - f_\phi(-h))/h` and the right quotient :math:`(f_\phi(h) - f_\phi(0))/h` both decrease from
    about 1 to about -1 as :math:`\phi` runs from :math:`\theta_x` to :math:`\theta_x + \pi`. The arc starts where the
    left quotient turns negative and ends where the right quotient does.

    Parameters
    ----------
    space : obj
        Planar space object
    x : array_like
        Nonzero vector
    h : float, Optional, default: 1e-6
        Step of the difference quotients

    Returns
    -------
    arc : CompanionArc
        Arc ends, midpoint and smoothness flag
    """

    if space.dim != 2:
        raise ValueError("companion_arc_2d requires a planar space, dim={}".format(space.dim))
    x = as_vector(x, 2)
    nx = space.norm(x)
    if nx == 0.0:
        raise ValueError("companion_arc_2d requires a nonzero vector")
    xh = x / nx
    theta_x = float(np.arctan2(x[1], x[0]))

    def left(phi):
        y = sphere_point_2d(space, phi)
        return (1.0 - space.norm(xh - h * y)) / h

    def right(phi):
        y = sphere_point_2d(space, phi)
        return (space.norm(xh + h * y) - 1.0) / h

    lo = _quotient_root(left, theta_x)
    hi = _quotient_root(right, theta_x)
    if lo > hi:
        lo = hi = 0.5 * (lo + hi)
    mid = 0.5 * (lo + hi)

    arc = CompanionArc(theta_x, lo, mid, hi, (hi - lo) <= cst.SMOOTH_ARC_WIDTH)
    logger.debug("Companion arc of {} in '{}': [{:.9g}, {:.9g}]".format(x, space.name, lo, hi))
    return arc

def orthogonal_companion_2d(space, x, h=cst.COMPANION_STEP):
    """
    Return the unit vector at the midpoint of the companion arc of x.

    Parameters
    ----------
    space : obj
        Planar space object
    x : array_like
        Nonzero vector
    h : float, Optional, default: 1e-6
        Step of the difference quotients

    Returns
    -------
    y : numpy.ndarray
        Unit vector with x B-orthogonal to y
    """
    arc = companion_arc_2d(space, x, h=h)
    return sphere_point_2d(space, arc.mid)
