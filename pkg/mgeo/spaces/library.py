"""
Boundaries of the named planar example spaces.
"""

import numpy as np

from .gauge2d import Gauge2DBoundary, ImplicitArc, CircularArc, SegmentArc, FlatLine

def stadium_boundary():
    r"""
    Unit sphere made of the flat lines :math:`y = \pm 1, -1 \leq x \leq 1` and the arcs of :math:`x^2 + y^2 = 2`
    with :math:`1 \leq |x| \leq \sqrt{2}`.
    """

    right_cap = CircularArc(np.sqrt(2.0), [-np.pi / 4, np.pi / 4])
    top = FlatLine(1.0, [1.0, -1.0])
    return Gauge2DBoundary([right_cap, top], symmetric=True)

def quartic_cubic_boundary():
    r"""
    Unit sphere built from :math:`x^4 + y^4 = 1` for :math:`0 \leq x \leq 1/3`, :math:`(-x)^3 + y^3 = 1` for
    :math:`-1/4 \leq x \leq 0`, the segment joining the far ends of their reflections, and the central reflection
    of all three.
    """

    quartic = ImplicitArc("superellipse", {"p": 4.0}, [1.0 / 3.0, 0.0])
    cubic = ImplicitArc("superellipse", {"p": 3.0, "sx": -1}, [0.0, -0.25])
    segment = SegmentArc([cubic.end, -quartic.start])
    return Gauge2DBoundary([quartic, cubic, segment], symmetric=True)

def star_boundary(inner=0.4):
    """
    Four-pointed star with tips on the axes and inner vertices at radius ``inner`` on the diagonals. Not convex.
    """

    angles = np.arange(5) * np.pi / 4
    radii = np.where(np.arange(5) % 2 == 0, 1.0, inner)
    points = np.column_stack((radii * np.cos(angles), radii * np.sin(angles)))
    points[2] = [0.0, 1.0]
    points[4] = [-1.0, 0.0]
    return Gauge2DBoundary([SegmentArc([points[k], points[k + 1]]) for k in range(4)], symmetric=True)

def circle_boundary():
    """
    Euclidean unit circle.
    """
    return Gauge2DBoundary([CircularArc(1.0, [0.0, np.pi])], symmetric=True)

BOUNDARIES = {
    "stadium": stadium_boundary,
    "quartic_cubic": quartic_cubic_boundary,
    "star": star_boundary,
    "circle": circle_boundary,
}
