# -- coding: utf8 --

r"""
    Planar norms given by the boundary of their unit ball.

    A boundary is an ordered chain of pieces (implicit arcs, circular arcs, segments and horizontal flat lines). The
    norm of :math:`v` is its Euclidean length divided by the boundary radius in the direction of :math:`v`.

"""

import logging
import numpy as np
import scipy.optimize as spo

from .interface import NormTemplate
from ..constants import TWO_PI, GAUGE_TABLE_SIZE, GAUGE_CHAIN_TOL, GAUGE_ANGLE_TOL
from ..exceptions import BoundaryError

logger = logging.getLogger(__name__)

def _wrap(angle):
    """Map angles into [0, 2 pi)."""
    return np.mod(angle, TWO_PI)

def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]

######################################################################
#                                                                    #
#                          Boundary Pieces                           #
#                                                                    #
######################################################################

class BoundaryPiece:
    """
    Base class of boundary pieces. A piece runs from ``start`` to ``end`` and covers the angular interval
    [``span_start``, ``span_start + extent``] as seen from the origin.
    """

    kind = None

    def _set_span(self):

        a0 = np.arctan2(self.start[1], self.start[0])
        a1 = np.arctan2(self.end[1], self.end[0])
        turn = np.mod(a1 - a0 + np.pi, TWO_PI) - np.pi
        if abs(turn) < GAUGE_ANGLE_TOL:
            raise BoundaryError("{} piece from {} to {} is not star-shaped about the origin".format(
                self.kind, self.start, self.end))
        self.orientation = 1 if turn > 0 else -1
        self.span_start = _wrap(a0 if turn > 0 else a1)
        self.extent = abs(turn)

    def contains(self, theta, tol=GAUGE_ANGLE_TOL):
        """
        Boolean (array) telling whether the ray at theta crosses this piece.
        """
        d = _wrap(np.asarray(theta, dtype=float) - self.span_start)
        return (d <= self.extent + tol) | (d >= TWO_PI - tol)

    def point(self, theta):
        """
        Boundary points along the rays at theta.
        """
        theta = np.asarray(theta, dtype=float)
        r = self.radius(theta)
        return np.stack((r * np.cos(theta), r * np.sin(theta)), axis=-1)


class ImplicitArc(BoundaryPiece):
    r"""
    Arc of the curve :math:`|x/a|^p + |y/b|^q = 1` inside one quadrant.

    Parameters
    ----------
    equation : str
        Equation tag, only ``superellipse`` is defined
    params : dict
        - p, q: float, exponents (q defaults to p)
        - a, b: float, Optional, default: 1, semi-axes
        - sx, sy: int, Optional, default: 1, quadrant signs, so that sx*x >= 0 and sy*y >= 0 on the arc
    x_range : list[float]
        x coordinates of the start and end of the arc
    """

    kind = "implicit"
    EQUATIONS = ["superellipse"]

    def __init__(self, equation, params, x_range):

        if equation not in self.EQUATIONS:
            raise BoundaryError("Unknown implicit equation '{}'. Supported: {}".format(equation,
                                                                                       ", ".join(self.EQUATIONS)))
        unknown = set(params) - set(["p", "q", "a", "b", "sx", "sy"])
        if unknown:
            raise BoundaryError("Unknown superellipse parameters: {}".format(", ".join(sorted(unknown))))
        if "p" not in params:
            raise BoundaryError("Superellipse requires the exponent p")

        self.equation = equation
        self.p = float(params["p"])
        self.q = float(params.get("q", self.p))
        self.a = float(params.get("a", 1.0))
        self.b = float(params.get("b", 1.0))
        self.sx = int(np.sign(params.get("sx", 1)))
        self.sy = int(np.sign(params.get("sy", 1)))
        if min(self.p, self.q, self.a, self.b) <= 0 or 0 in [self.sx, self.sy]:
            raise BoundaryError("Superellipse exponents and semi-axes must be positive and signs nonzero")

        self.x_range = [float(x) for x in x_range]
        if len(self.x_range) != 2:
            raise BoundaryError("x_range must hold the start and end x coordinates")
        for x in self.x_range:
            if self.sx * x < -GAUGE_CHAIN_TOL or abs(x) > self.a + GAUGE_CHAIN_TOL:
                raise BoundaryError("x = {} is outside the quadrant of the superellipse arc".format(x))

        self.start = self._point_at_x(self.x_range[0])
        self.end = self._point_at_x(self.x_range[1])
        self._set_span()

    def _point_at_x(self, x):
        u = min(abs(x) / self.a, 1.0)
        y = self.sy * self.b * (1.0 - u**self.p)**(1.0 / self.q)
        return np.array([x, y])

    def radius(self, theta):

        theta = np.asarray(theta, dtype=float)
        u = np.abs(np.cos(theta)) / self.a
        w = np.abs(np.sin(theta)) / self.b
        if self.p == self.q:
            return (u**self.p + w**self.p)**(-1.0 / self.p)

        out = np.empty(np.shape(theta))
        flat_u, flat_w, flat_out = np.ravel(u), np.ravel(w), out.reshape(-1)
        for k in range(flat_out.size):
            uk, wk = flat_u[k], flat_w[k]
            r_max = 1.0 / max(uk, wk)
            flat_out[k] = spo.brentq(lambda r: (r * uk)**self.p + (r * wk)**self.q - 1.0, 0.0, r_max, xtol=1e-15,
                                     rtol=4.5e-16)
        return out if np.ndim(theta) else float(out)

    def reflected(self):
        params = {"p": self.p, "q": self.q, "a": self.a, "b": self.b, "sx": -self.sx, "sy": -self.sy}
        return ImplicitArc(self.equation, params, [-x for x in self.x_range])

    def describe(self):
        return {"kind": self.kind, "equation": self.equation, "x_range": self.x_range,
                "params": {"p": self.p, "q": self.q, "a": self.a, "b": self.b, "sx": self.sx, "sy": self.sy}}


class CircularArc(BoundaryPiece):
    """
    Arc of the circle of the given radius centered at the origin, between two polar angles.
    """

    kind = "circular"

    def __init__(self, radius, angle_range):

        self.r = float(radius)
        self.angle_range = [float(a) for a in angle_range]
        if self.r <= 0 or len(self.angle_range) != 2:
            raise BoundaryError("Circular arc requires a positive radius and an angle range of two values")
        turn = self.angle_range[1] - self.angle_range[0]
        if abs(turn) < GAUGE_ANGLE_TOL or abs(turn) > TWO_PI + GAUGE_ANGLE_TOL:
            raise BoundaryError("Circular arc must turn by a nonzero angle of at most 2 pi")

        self.start = self.r * np.array([np.cos(self.angle_range[0]), np.sin(self.angle_range[0])])
        self.end = self.r * np.array([np.cos(self.angle_range[1]), np.sin(self.angle_range[1])])
        self.orientation = 1 if turn > 0 else -1
        self.span_start = _wrap(min(self.angle_range))
        self.extent = min(abs(turn), TWO_PI)

    def radius(self, theta):
        return np.full(np.shape(theta), self.r) if np.ndim(theta) else self.r

    def reflected(self):
        return CircularArc(self.r, [a + np.pi for a in self.angle_range])

    def describe(self):
        return {"kind": self.kind, "radius": self.r, "angle_range": self.angle_range}


class SegmentArc(BoundaryPiece):
    """
    Straight segment between two endpoints.
    """

    kind = "segment"

    def __init__(self, endpoints):

        pts = np.array(endpoints, dtype=float)
        if pts.shape != (2, 2) or not np.all(np.isfinite(pts)):
            raise BoundaryError("Segment requires two finite planar endpoints")
        self.start, self.end = pts[0], pts[1]
        self._direction = self.end - self.start
        self._offset = _cross(self.start, self._direction)
        self._set_span()

    def radius(self, theta):
        theta = np.asarray(theta, dtype=float)
        denom = np.cos(theta) * self._direction[1] - np.sin(theta) * self._direction[0]
        return self._offset / denom

    def reflected(self):
        return SegmentArc([-self.start, -self.end])

    def describe(self):
        return {"kind": self.kind, "endpoints": [self.start.tolist(), self.end.tolist()]}


class FlatLine(BoundaryPiece):
    """
    Horizontal segment y = level between two x coordinates.
    """

    kind = "flat"

    def __init__(self, level, x_range):

        self.level = float(level)
        self.x_range = [float(x) for x in x_range]
        if self.level == 0.0 or len(self.x_range) != 2:
            raise BoundaryError("Flat line requires a nonzero level and an x range of two values")
        self.start = np.array([self.x_range[0], self.level])
        self.end = np.array([self.x_range[1], self.level])
        self._set_span()

    def radius(self, theta):
        return self.level / np.sin(theta)

    def reflected(self):
        return FlatLine(-self.level, [-x for x in self.x_range])

    def describe(self):
        return {"kind": self.kind, "level": self.level, "x_range": self.x_range}


PIECE_FIELDS = {
    "implicit": (ImplicitArc, ["equation", "params", "x_range"]),
    "circular": (CircularArc, ["radius", "angle_range"]),
    "segment": (SegmentArc, ["endpoints"]),
    "flat": (FlatLine, ["level", "x_range"]),
}

def piece_from_dict(piece_dict):
    """
    Build a boundary piece from its JSON description. Unknown or missing fields are rejected.

    Parameters
    ----------
    piece_dict : dict
        Dictionary with "kind" and the fields of that kind:

        - implicit: equation, params, x_range
        - circular: radius, angle_range
        - segment: endpoints
        - flat: level, x_range

    Returns
    -------
    piece : BoundaryPiece
        Boundary piece
    """

    if not isinstance(piece_dict, dict) or "kind" not in piece_dict:
        raise BoundaryError("Each boundary piece must be a dictionary with a 'kind' field")
    kind = piece_dict["kind"]
    if kind not in PIECE_FIELDS:
        raise BoundaryError("Unknown piece kind '{}'. Supported: {}".format(kind, ", ".join(PIECE_FIELDS)))

    cls, fields = PIECE_FIELDS[kind]
    given = set(piece_dict) - set(["kind"])
    if given != set(fields):
        raise BoundaryError("Piece '{}' takes exactly the fields {}, given {}".format(kind, fields, sorted(given)))

    return cls(*[piece_dict[key] for key in fields])

######################################################################
#                                                                    #
#                              Boundary                              #
#                                                                    #
######################################################################

class Gauge2DBoundary:
    r"""
    Closed star-shaped boundary curve of a planar unit ball.

    Parameters
    ----------
    pieces : list
        Boundary pieces (objects or dictionaries) chained end to start
    symmetric : bool, Optional, default: True
        The listed pieces describe half the curve and the other half is their reflection through the origin

    Attributes
    ----------
    pieces : list
        Pieces as given
    full_pieces : list
        Pieces of the whole closed curve
    table : list
        Candidate piece indices for each of the angular bins
    """

    def __init__(self, pieces, symmetric=True):

        if not pieces:
            raise BoundaryError("A boundary needs at least one piece")
        self.pieces = [p if isinstance(p, BoundaryPiece) else piece_from_dict(p) for p in pieces]
        self.symmetric = bool(symmetric)
        if self.symmetric:
            self.full_pieces = self.pieces + [p.reflected() for p in self.pieces]
        else:
            self.full_pieces = list(self.pieces)

        self._check_closed()
        self._build_table()

        self._anchor = self.pieces[0].start
        self._orientation = self.pieces[0].orientation

    def _check_closed(self):

        n = len(self.full_pieces)
        for i, piece in enumerate(self.full_pieces):
            following = self.full_pieces[(i + 1) % n]
            gap = np.linalg.norm(piece.end - following.start)
            if gap > GAUGE_CHAIN_TOL:
                raise BoundaryError("Boundary is not closed: piece {} ends at {} but piece {} starts at {}".format(
                    i, piece.end, (i + 1) % n, following.start))

        orientations = set(p.orientation for p in self.full_pieces)
        if len(orientations) != 1:
            raise BoundaryError("Boundary pieces turn in both directions about the origin, so it is not star-shaped")

        total = sum(p.extent for p in self.full_pieces)
        if abs(total - TWO_PI) > 1e-9:
            raise BoundaryError("Boundary winds {:.12g} radians about the origin instead of 2 pi, so it is not star-shaped"
                                .format(total))

    def _build_table(self):

        width = TWO_PI / GAUGE_TABLE_SIZE
        centers = (np.arange(GAUGE_TABLE_SIZE) + 0.5) * width
        masks = [p.contains(centers, tol=0.5 * width + GAUGE_ANGLE_TOL) for p in self.full_pieces]
        self.table = [[k for k, mask in enumerate(masks) if mask[b]] for b in range(GAUGE_TABLE_SIZE)]
        self._bin_width = width

    def canonical(self, v):
        """
        Return v or -v so that exactly one of each antipodal pair is used in radius lookups.
        """

        if not self.symmetric:
            return v
        s = _cross(self._anchor, v) * self._orientation
        if s > 0 or (s == 0 and np.dot(self._anchor, v) > 0):
            return v
        return -v

    def radius_at(self, theta):
        """
        Boundary radius on the ray at angle theta.
        """

        theta = float(_wrap(theta))
        b = int(theta / self._bin_width) % GAUGE_TABLE_SIZE
        for k in self.table[b]:
            piece = self.full_pieces[k]
            if piece.contains(theta):
                return float(piece.radius(theta))
        raise BoundaryError("No boundary piece covers the angle {}".format(theta))

    def radius_many(self, thetas):
        """
        Boundary radii for an array of angles.
        """

        thetas = _wrap(np.asarray(thetas, dtype=float))
        r = np.full(thetas.shape, np.nan)
        for piece in self.full_pieces:
            todo = np.isnan(r)
            if not np.any(todo):
                break
            mask = todo & piece.contains(thetas)
            if np.any(mask):
                r[mask] = piece.radius(thetas[mask])
        if np.any(np.isnan(r)):
            raise BoundaryError("No boundary piece covers the angles {}".format(thetas[np.isnan(r)][:5]))
        return r

    def describe(self):
        return {"pieces": [p.describe() for p in self.pieces], "symmetric": self.symmetric}

######################################################################
#                                                                    #
#                             Gauge Norm                             #
#                                                                    #
######################################################################

class space_gauge2d(NormTemplate):

    r"""
    Planar space normed by the gauge of a star-shaped body. The body is not assumed convex; use
    :func:`~mgeo.spaces.validation.validate_gauge_convexity` before treating the boundary as a unit sphere.

    Parameters
    ----------
    kwargs : dict
        - boundary: Gauge2DBoundary, or
        - pieces: list, boundary pieces (dictionaries or objects), with
        - symmetric: bool, Optional, default: True
        - name: str, Optional, default: gauge2d

    Attributes
    ----------
    boundary : Gauge2DBoundary
        Unit sphere description
    dim : int
        Always 2
    """

    def __init__(self, kwargs):

        if "boundary" in kwargs:
            self.boundary = kwargs["boundary"]
        elif "pieces" in kwargs:
            self.boundary = Gauge2DBoundary(kwargs["pieces"], kwargs.get("symmetric", True))
        else:
            raise ValueError("A gauge2d space requires either a boundary or a list of pieces")

        self.dim = 2
        self.name = kwargs.get("name", "gauge2d")
        logger.debug("Gauge boundary with {} pieces, symmetric: {}".format(len(self.boundary.full_pieces),
                                                                          self.boundary.symmetric))

    def norm(self, v):

        if v[0] == 0.0 and v[1] == 0.0:
            return 0.0
        w = self.boundary.canonical(v)
        theta = np.arctan2(w[1], w[0])
        return float(np.hypot(w[0], w[1]) / self.boundary.radius_at(theta))

    def norm_many(self, V):

        V = np.array(V, dtype=float)
        out = np.zeros(len(V))
        nz = np.any(V != 0.0, axis=1)
        if not np.any(nz):
            return out
        W = V[nz]
        if self.boundary.symmetric:
            anchor, orientation = self.boundary._anchor, self.boundary._orientation
            s = (anchor[0] * W[:, 1] - anchor[1] * W[:, 0]) * orientation
            flip = (s < 0) | ((s == 0) & (W @ anchor <= 0))
            W[flip] = -W[flip]
        thetas = np.arctan2(W[:, 1], W[:, 0])
        out[nz] = np.hypot(W[:, 0], W[:, 1]) / self.boundary.radius_many(thetas)
        return out

    def describe(self):
        description = {"type": "gauge2d"}
        description.update(self.boundary.describe())
        return description
