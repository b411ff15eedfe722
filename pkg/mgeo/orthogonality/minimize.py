# -- coding: utf8 --

r"""
    Minimization of the convex function :math:`f(\lambda) = \|x + \lambda y\|`.

    A norm restricted to a line is convex, so golden-section shrinkage finds its global minimum without derivatives.
    The set of minimizers may be an interval (flat pieces of the sphere); it is measured by bisecting for the
    boundary of the sublevel set :math:`\{f \leq \min f + \tau\}` at three tolerances.

"""

import logging
import numpy as np
import scipy.optimize as spo
from dataclasses import dataclass

from .. import constants as cst
from ..spaces import as_vector
from ..exceptions import NormAxiomError

logger = logging.getLogger(__name__)

INVPHI = (np.sqrt(5.0) - 1.0) / 2.0

@dataclass
class GoldenSection:
    """Result of :func:`golden_section`."""
    x: float
    fun: float
    lo: float
    hi: float
    nfev: int

def golden_section(func, lo, hi, xtol=cst.SEARCH_XTOL):
    r"""
    Minimize a unimodal function on [lo, hi] by golden-section search.

    Parameters
    ----------
    func : function
        Function of one float
    lo, hi : float
        Bracket
    xtol : float, Optional, default: 1e-12
        Width of the final bracket

    Returns
    -------
    result : GoldenSection
        Best probe, its value, the final bracket and the number of evaluations
    """

    a, b = float(lo), float(hi)
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc, fd = func(c), func(d)
    nfev = 2
    best_x, best_f = (c, fc) if fc <= fd else (d, fd)

    while b - a > xtol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INVPHI * (b - a)
            fc = func(c)
            if fc < best_f:
                best_x, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + INVPHI * (b - a)
            fd = func(d)
            if fd < best_f:
                best_x, best_f = d, fd
        nfev += 1

    return GoldenSection(best_x, best_f, a, b, nfev)

def sublevel_edge(func, inside, outside, level, xtol=cst.SUBLEVEL_XTOL):
    """
    Boundary of the sublevel set {func <= level} between a point inside it and a point outside it.

    Returns
    -------
    edge : float
        Root of ``func(t) - level`` found by :func:`scipy.optimize.bisect`, or ``outside`` when that point is not
        outside the set
    nfev : int
        Evaluations used
    """

    def g(t):
        return func(t) - level

    if g(outside) <= 0.0:
        return outside, 1
    if g(inside) > 0.0:
        logger.warning("Sublevel bracket starts outside the set at t={}".format(inside))
        return inside, 2
    edge, info = spo.bisect(g, inside, outside, xtol=xtol, full_output=True, disp=False)
    return edge, info.function_calls + 2

def aitken_limit(far, mid, near, bound):
    r"""
    Limit of a monotone sequence from its last three terms by Aitken's :math:`\Delta^2` process.

    The edges of sublevel sets at geometrically shrinking tolerances approach the edge of the set of minimizers like
    :math:`e_0 + B q^n`, which the process extrapolates exactly. The limit never passes ``bound``, a known
    minimizer. Steps that do not shrink (ratio at least 1) mean the edges collapse onto ``bound``.

    Parameters
    ----------
    far, mid, near : float
        Edges at decreasing tolerances
    bound : float
        A minimizer

    Returns
    -------
    limit : float
    """

    d1, d2 = mid - far, near - mid
    if d1 * d2 <= 0.0:
        return near
    ratio = d2 / d1
    if ratio >= 1.0:
        return bound
    limit = near + d2 * ratio / (1.0 - ratio)
    if (limit - bound) * (near - bound) <= 0.0:
        return bound
    return limit

@dataclass
class MinimizationResult:
    r"""
    Outcome of minimizing :math:`\lambda \mapsto \|x + \lambda y\|`.

    Intervals and the minimizer are in units of :math:`\lambda`. The ``normalized_*`` fields refer to the
    unit vectors :math:`\hat{x} = x/\|x\|`, :math:`\hat{y} = y/\|y\|`, where :math:`\lambda = \mu \|x\|/\|y\|`.

    Attributes
    ----------
    argmin : float
        A minimizer
    min_value : float
        Minimum value
    flat_interval : tuple
        Sublevel interval at ``flat_tol``
    core_interval : tuple
        Sublevel interval at ``flat_tol*CORE_TOL_RATIO``
    limit_interval : tuple
        Extrapolation of the sublevel intervals to zero tolerance, the numerical set of minimizers
    isolated : bool
        The minimizer set is numerically a single point
    evaluations : int
        Number of norm evaluations
    norm_x : float
        :math:`\|x\|`
    scale : float
        :math:`\|x\|/\|y\|`
    value_tol, arg_tol, flat_tol : float
        Tolerances used
    """

    argmin: float
    min_value: float
    flat_interval: tuple
    core_interval: tuple
    limit_interval: tuple
    isolated: bool
    evaluations: int
    norm_x: float
    scale: float
    value_tol: float
    arg_tol: float
    flat_tol: float

    @property
    def normalized_min(self):
        return self.min_value / self.norm_x

    @property
    def flat_width(self):
        return self.flat_interval[1] - self.flat_interval[0]

    @property
    def core_width(self):
        return self.core_interval[1] - self.core_interval[0]

def directional_min(space, x, y, value_tol=cst.TOL, arg_tol=cst.ARG_TOL, flat_tol=cst.FLAT_TOL,
                    xtol=cst.SEARCH_XTOL, monitor=None):
    r"""
    Globally minimize :math:`f(\lambda) = \|x + \lambda y\|` and measure the set of minimizers.

    Outside :math:`|\lambda| \leq 2\|x\|/\|y\|` the triangle inequality gives :math:`f(\lambda) > \|x\| = f(0)`,
    so golden-section search runs on that bracket. :math:`\lambda = 0` is always probed. The final bracket is
    checked for convexity, then the sublevel sets at ``flat_tol*WIDE_TOL_RATIO``, ``flat_tol`` and
    ``flat_tol*CORE_TOL_RATIO`` (relative to :math:`\|x\|`) are found by bisection. Their edges are extrapolated to
    zero tolerance with :func:`aitken_limit`. The minimizer is isolated when the core interval is no wider than
    ``arg_tol`` (in units of :math:`\hat{x}, \hat{y}`) or the extrapolated interval is narrower than
    ``ISOLATION_RATIO`` times the core interval: sublevel sets around a single minimizer shrink like a power of the
    tolerance, whatever the power, while a segment of minimizers keeps its width.

    Parameters
    ----------
    space : obj
        Space object
    x, y : array_like
        Nonzero vectors of the space's dimension
    value_tol : float, Optional, default: 1e-9
        Recorded value tolerance used by the orthogonality decisions
    arg_tol : float, Optional, default: 1e-6
        Width below which the core interval is a point
    flat_tol : float, Optional, default: 1e-9
        Sublevel tolerance, relative to :math:`\|x\|`
    xtol : float, Optional, default: 1e-12
        Final golden-section bracket, in normalized units
    monitor : function, Optional
        Called as ``monitor(lambda, value)`` at every probe

    Returns
    -------
    result : MinimizationResult
        Minimizer, minimum and flat intervals
    """

    x = as_vector(x, space.dim)
    y = as_vector(y, space.dim)
    nx, ny = space.norm(x), space.norm(y)
    if nx == 0.0 or ny == 0.0:
        raise ValueError("directional_min requires nonzero vectors, given x={} and y={}".format(x, y))

    xh, yh = x / nx, y / ny
    scale = nx / ny
    count = [0]

    def f(mu):
        count[0] += 1
        value = space.norm(xh + mu * yh)
        if monitor is not None:
            monitor(mu * scale, value * nx)
        return value

    f0 = f(0.0)
    gs = golden_section(f, -2.0, 2.0, xtol=xtol)
    mu_star, m = (0.0, f0) if f0 <= gs.fun else (gs.x, gs.fun)

    fa, fb, fm = f(gs.lo), f(gs.hi), f(0.5 * (gs.lo + gs.hi))
    if fm > max(fa, fb) + cst.CONVEXITY_SLACK:
        raise NormAxiomError("Restriction of the norm of space '{}' to the line {} + t*{} is not convex".format(
            space.name, x, y))
    for mu, value in [(gs.lo, fa), (gs.hi, fb)]:
        if value < m:
            mu_star, m = mu, value

    # f(mu) >= |mu| - 1 > m + wide_tol for |mu| >= 3
    limit = 3.0
    wide_level = m + flat_tol * cst.WIDE_TOL_RATIO
    wide_lo, _ = sublevel_edge(f, mu_star, -limit, wide_level)
    wide_hi, _ = sublevel_edge(f, mu_star, limit, wide_level)
    outer_lo, _ = sublevel_edge(f, mu_star, wide_lo, m + flat_tol)
    outer_hi, _ = sublevel_edge(f, mu_star, wide_hi, m + flat_tol)
    core_level = m + flat_tol * cst.CORE_TOL_RATIO
    core_lo, _ = sublevel_edge(f, mu_star, outer_lo, core_level)
    core_hi, _ = sublevel_edge(f, mu_star, outer_hi, core_level)

    limit_lo = aitken_limit(wide_lo, outer_lo, core_lo, mu_star)
    limit_hi = aitken_limit(wide_hi, outer_hi, core_hi, mu_star)
    core_width, limit_width = core_hi - core_lo, limit_hi - limit_lo
    isolated = core_width <= arg_tol or limit_width <= cst.ISOLATION_RATIO * core_width

    result = MinimizationResult(argmin=mu_star * scale, min_value=m * nx,
                                flat_interval=(outer_lo * scale, outer_hi * scale),
                                core_interval=(core_lo * scale, core_hi * scale),
                                limit_interval=(limit_lo * scale, limit_hi * scale), isolated=bool(isolated),
                                evaluations=count[0], norm_x=nx, scale=scale, value_tol=value_tol, arg_tol=arg_tol,
                                flat_tol=flat_tol)
    logger.debug("directional_min: argmin {:.6g}, min {:.15g}, flat [{:.6g}, {:.6g}], {} evaluations".format(
        result.argmin, result.min_value, result.flat_interval[0], result.flat_interval[1], result.evaluations))
    return result
