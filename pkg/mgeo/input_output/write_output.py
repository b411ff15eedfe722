"""

Routines for writing .json, .jsonl and .svg output files from result objects and dictionaries.

"""

import re
import json
import logging
import dataclasses
from enum import Enum
import numpy as np

from .. import constants as cst
from ..spaces import sphere_points_2d, sphere_point_2d

logger = logging.getLogger(__name__)

######################################################################
#                                                                    #
#                                JSON                                #
#                                                                    #
######################################################################

def to_jsonable(obj):
    """
    Convert result objects (dataclasses, enums, numpy arrays and scalars) into plain JSON types.

    Non-finite floats become the strings "inf", "-inf" and "nan".
    """

    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(value) for value in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(value) for value in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        if np.isnan(value):
            return "nan"
        if np.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if obj is None or isinstance(obj, str):
        return obj
    return str(obj)

FLOAT_TAG = "\x00"
_TAGGED_FLOAT = re.compile(r'"\\u0000([^"]*)"')

def _format_float(value):
    text = "{:.17g}".format(value)
    if not any(c in text for c in ".e"):
        text += ".0"
    return text

def _tag_floats(obj):
    if isinstance(obj, dict):
        return {key: _tag_floats(value) for key, value in obj.items()}
    if isinstance(obj, list):
        return [_tag_floats(value) for value in obj]
    if isinstance(obj, float):
        return FLOAT_TAG + _format_float(obj)
    return obj

def dumps_json(data, indent=4):
    """
    JSON text of a result with sorted keys and finite floats at 17 significant digits.

    Parameters
    ----------
    data : obj
        Dictionary or result object
    indent : int, Optional, default: 4
        Indentation, None for a single line
    """

    text = json.dumps(_tag_floats(to_jsonable(data)), indent=indent, sort_keys=True)
    return _TAGGED_FLOAT.sub(r"\1", text)

def write_json(data, filename):
    """
    Write a result to a .json file.

    Parameters
    ----------
    data : obj
        Dictionary or result object
    filename : str
        Name of the output file
    """

    with open(filename, "w") as f:
        f.write(dumps_json(data))
        f.write("\n")
    logger.info("Wrote {}".format(filename))

def write_bounds_jsonl(survey, filename):
    """
    Write one JSON line per record of a bounds survey.

    Parameters
    ----------
    survey : BoundsSurvey
        Result of :func:`~mgeo.geometry.bounds.bounds_survey`
    filename : str
        Name of the output file
    """

    with open(filename, "w") as f:
        for record in survey.records:
            f.write(dumps_json(record, indent=None))
            f.write("\n")
    logger.info("Wrote {} bounds records to {}".format(len(survey.records), filename))

######################################################################
#                                                                    #
#                                SVG                                 #
#                                                                    #
######################################################################

def _point(v):
    return "{:.6f},{:.6f}".format(v[0], v[1])

def _line(a, b, css):
    return '    <line class="{}" x1="{:.6f}" y1="{:.6f}" x2="{:.6f}" y2="{:.6f}"/>'.format(css, a[0], a[1], b[0], b[1])

def sphere_svg(space, samples=cst.SVG_SAMPLES, conjugate=None, flat=None, companions=None):
    """
    Draw the unit sphere of a planar space as SVG text.

    Parameters
    ----------
    space : obj
        Planar space object
    samples : int, Optional, default: 2048
        Number of polyline vertices
    conjugate : list, Optional
        DiameterPair objects, drawn as the chords through x and y
    flat : tuple, Optional
        Unit vectors (u, v) of a flat segment
    companions : list, Optional
        Pairs (x, y), drawn as arrows from x in the direction of y

    Returns
    -------
    svg : str
        Document text
    """

    if space.dim != 2:
        raise ValueError("Only planar unit spheres can be drawn, dim={}".format(space.dim))

    angles = np.arange(samples) * cst.TWO_PI / samples
    points = sphere_points_2d(space, angles)
    view = cst.SVG_VIEW

    lines = ['<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:g} {:g} {:g} {:g}" width="600" height="600">'.format(
        -view, -view, 2 * view, 2 * view)]
    lines.append('  <title>Unit sphere of {}</title>'.format(space.name))
    lines.append('  <style>polyline {fill: none; stroke: black; stroke-width: 0.01} '
                 'line {stroke-width: 0.008} .axis {stroke: #bbbbbb} .conjugate {stroke: #1f77b4} '
                 '.flat {stroke: #d62728; stroke-width: 0.02} .companion {stroke: #2ca02c}</style>')
    lines.append('  <g transform="scale(1,-1)">')
    lines.append(_line((-view, 0.0), (view, 0.0), "axis"))
    lines.append(_line((0.0, -view), (0.0, view), "axis"))
    lines.append('    <polyline class="sphere" points="{} {}"/>'.format(" ".join(_point(p) for p in points),
                                                                        _point(points[0])))

    for pair in conjugate or []:
        lines.append(_line(-pair.x, pair.x, "conjugate"))
        lines.append(_line(-pair.y, pair.y, "conjugate"))
    if flat is not None:
        lines.append(_line(flat[0], flat[1], "flat"))
    for x, y in companions or []:
        lines.append(_line(x, x + 0.3 * y, "companion"))

    lines.append('  </g>')
    lines.append('</svg>')
    return "\n".join(lines) + "\n"

def companion_arrows(space, count=8):
    """
    Pairs (x, y) of sphere points at ``count`` equally spaced angles and their B-orthogonal companions.
    """

    from ..orthogonality import orthogonal_companion_2d

    pairs = []
    for k in range(count):
        x = sphere_point_2d(space, k * cst.TWO_PI / count)
        pairs.append((x, orthogonal_companion_2d(space, x)))
    return pairs

def write_svg(text, filename):
    """
    Write SVG text to a file.
    """
    with open(filename, "w") as f:
        f.write(text)
    logger.info("Wrote {}".format(filename))
