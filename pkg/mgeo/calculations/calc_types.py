"""
    This module contains a series of wrappers to handle the inputs and outputs of the geometric routines. The
    computations themselves live in :mod:`~mgeo.orthogonality` and :mod:`~mgeo.geometry`; the wrappers only read
    options, pick defaults and collect results.

    None of the functions in this module need to be called directly, as a function factory is included in our
    __init__.py file. Use ``calc(space, {"calculation_type": "check-orth", "x": [1, 1], "y": [-1, 0]})`` to get
    started.

"""

import logging
import numpy as np

from .. import constants as cst
from ..spaces import validate_norm, validate_gauge_convexity
from ..orthogonality import classify, is_strongly_birkhoff
from ..geometry import (Basis, basis_report, bounds_survey, find_conjugate_diameters, is_radon, exhaustive_pair_scan,
                        strict_convexity_probe, generalized_conjugate_check, conjugate_basis_crosscheck)
from ..input_output.read_input import parse_vector, parse_vectors, budget_from_env
from ..input_output.write_output import sphere_svg, companion_arrows
from ..exceptions import ConjugateSearchError

OVERLAYS = ["conjugate", "flat", "companion"]

def _vector(sys_dict, key):
    if key not in sys_dict or sys_dict[key] is None:
        raise ValueError("The vector '{}' is not specified".format(key))
    return parse_vector(sys_dict[key])

def _grid(sys_dict, default):
    grid = sys_dict.get("grid")
    if grid is None:
        return default
    if isinstance(grid, bool) or int(grid) != grid or grid < 1:
        raise ValueError("grid must be a positive integer, given {}".format(grid))
    return int(grid)

def _space_entry(space):
    return {"name": space.name, "dim": space.dim, "definition": space.describe()}

######################################################################
#                                                                    #
#                           Orthogonality                            #
#                                                                    #
######################################################################

def check_orth(space, sys_dict):
    r"""
    Classify the relation of x to y as NotOrthogonal, BirkhoffOnly or StronglyBirkhoff.

    Parameters
    ----------
    space : obj
        Space object
    sys_dict : dict
        - x, y: vectors, lists or comma separated strings
        - tol: float, Optional, default: 1e-9
        - arg_tol: float, Optional, default: 1e-6

    Returns
    -------
    output_dict : dict
        Space, vectors and the OrthogonalityVerdict
    """

    logger = logging.getLogger(__name__)

    x, y = _vector(sys_dict, "x"), _vector(sys_dict, "y")
    tol = sys_dict.get("tol", cst.TOL)
    arg_tol = sys_dict.get("arg_tol", cst.ARG_TOL)

    verdict = classify(space, x, y, tol=tol, arg_tol=arg_tol)
    logger.info("x = {} and y = {}: {}".format(x, y, verdict.relation.value))

    return {"space": _space_entry(space), "x": x, "y": y, "relation": verdict.relation, "verdict": verdict}

def strong_check(space, sys_dict):
    """
    Same input as :func:`check_orth`, with the answer of ``is_strongly_birkhoff`` on top of the verdict.
    """

    output_dict = check_orth(space, sys_dict)
    output_dict["strongly_birkhoff"] = is_strongly_birkhoff(space, output_dict["x"], output_dict["y"],
                                                            tol=sys_dict.get("tol", cst.TOL),
                                                            arg_tol=sys_dict.get("arg_tol", cst.ARG_TOL))
    return output_dict

######################################################################
#                                                                    #
#                               Bases                                #
#                                                                    #
######################################################################

def basis(space, sys_dict):
    r"""
    Decide whether a basis is strongly orthonormal, directly from the definition and by the max :math:`S_i`
    criterion.

    Parameters
    ----------
    space : obj
        Space object
    sys_dict : dict
        - vectors: basis vectors, a list of lists or a string such as ``1,0;0,1``, or
        - standard: bool, use the normalized standard basis, or
        - basis: vectors given in a space-definition file
        - normalize: bool, Optional, default: False, scale the vectors to unit length
        - budget: int, Optional, evaluation budget of each max :math:`S_i`, otherwise ``MGEO_BUDGET`` or 20000
        - tol: float, Optional, default: 1e-6, slack of the criterion
        - arg_tol: float, Optional, default: 1e-6
        - grid: int, Optional, default: 4, random starts and directions of the definition check
        - seed: int, Optional, default: 0

    Returns
    -------
    output_dict : dict
        Space and BasisReport
    """

    logger = logging.getLogger(__name__)

    normalize = bool(sys_dict.get("normalize", False))
    if sys_dict.get("vectors") is not None:
        vectors = parse_vectors(sys_dict["vectors"])
        logger.info("Using the given basis vectors")
    elif sys_dict.get("standard"):
        vectors = None
        logger.info("Using the standard basis")
    elif sys_dict.get("basis") is not None:
        vectors = parse_vectors(sys_dict["basis"])
        logger.info("Using the basis of the space definition")
    else:
        raise ValueError("Specify the basis with vectors, standard, or a basis entry in the space definition")

    if vectors is None:
        b = Basis.from_standard(space)
    else:
        b = Basis(space, vectors, normalize=normalize)

    budget = sys_dict.get("budget")
    if budget is None:
        budget = budget_from_env(cst.OPTIMIZER_BUDGET)

    report = basis_report(space, b, budget=budget, tol=sys_dict.get("tol", 1e-6),
                          arg_tol=sys_dict.get("arg_tol", cst.ARG_TOL), grid=_grid(sys_dict, 4),
                          seed=sys_dict.get("seed", 0))
    if not report.agreement and not report.hypothesis_verified:
        logger.warning("The verdicts disagree and the space has a flat segment, so the criterion is only necessary")

    return {"space": _space_entry(space), "report": report}

######################################################################
#                                                                    #
#                               Bounds                               #
#                                                                    #
######################################################################

def bounds(space, sys_dict):
    r"""
    Survey the segment and line minima of B-orthogonal unit pairs against the floors 1/3 and 1/2.

    Parameters
    ----------
    space : obj
        Space object
    sys_dict : dict
        - pairs: list, Optional, unit pairs [x, y] to survey, required when dim > 2
        - grid: int, Optional, default: 720, number of grid angles of a planar survey
        - tol: float, Optional, default: 1e-9, slack of the floor comparisons

    Returns
    -------
    output_dict : dict
        Space and BoundsSurvey
    """

    pairs = sys_dict.get("pairs")
    if pairs is not None:
        pairs = [parse_vectors(pair) for pair in pairs]
        if any(len(pair) != 2 for pair in pairs):
            raise ValueError("Each surveyed pair must hold exactly two vectors")

    survey = bounds_survey(space, num_pairs=_grid(sys_dict, cst.SURVEY_GRID), tol=sys_dict.get("tol", cst.TOL),
                           pairs=pairs)
    return {"space": _space_entry(space), "survey": survey}

######################################################################
#                                                                    #
#                         Planar geometry                            #
#                                                                    #
######################################################################

def conjugate(space, sys_dict):
    """
    Find pairs of conjugate diameters of a planar space.

    Parameters
    ----------
    space : obj
        Planar space object
    sys_dict : dict
        - grid: int, Optional, default: 360
        - tol: float, Optional, default: 1e-6, largest residual of a pair
        - arg_tol: float, Optional, default: 1e-6
        - diameters: list, Optional, n vectors checked for pairwise conjugacy in any dimension

    Returns
    -------
    output_dict : dict
        Space and ConjugateSearch, or GeneralizedConjugate when diameters are given
    """

    if sys_dict.get("diameters") is not None:
        check = generalized_conjugate_check(space, parse_vectors(sys_dict["diameters"]),
                                            tol=sys_dict.get("tol", cst.TOL))
        return {"space": _space_entry(space), "generalized": check}

    search = find_conjugate_diameters(space, grid_size=_grid(sys_dict, cst.CONJUGATE_GRID),
                                      tol=sys_dict.get("tol", cst.ARG_TOL), arg_tol=sys_dict.get("arg_tol", cst.ARG_TOL))
    return {"space": _space_entry(space), "search": search}

def radon(space, sys_dict):
    """
    Test whether the unit sphere of a planar space is a Radon curve.

    Parameters
    ----------
    space : obj
        Planar space object
    sys_dict : dict
        - grid: int, Optional, default: 360
        - tol: float, Optional, default: 1e-6, largest accepted back-residual
        - crosscheck: bool, Optional, default: False, also compare strongly conjugate pairs with strongly
          orthonormal bases

    Returns
    -------
    output_dict : dict
        Space and RadonResult
    """

    grid = _grid(sys_dict, cst.CONJUGATE_GRID)
    tol = sys_dict.get("tol", cst.ARG_TOL)
    output_dict = {"space": _space_entry(space), "radon": is_radon(space, grid_size=grid, tol=tol)}
    if sys_dict.get("crosscheck"):
        output_dict["crosscheck"] = conjugate_basis_crosscheck(space, tol=tol, grid_size=grid,
                                                               seed=sys_dict.get("seed", 0))
    return output_dict

def scan_pairs(space, sys_dict):
    """
    Scan all pairs of grid angles of a planar space for conjugate and strongly conjugate diameters.

    Parameters
    ----------
    space : obj
        Planar space object
    sys_dict : dict
        - resolution: float, Optional, default: 0.25, grid step in degrees, at most 1
        - tol: float, Optional, default: 1e-6
        - arg_tol: float, Optional, default: 1e-6

    Returns
    -------
    output_dict : dict
        Space and PairScan
    """

    scan = exhaustive_pair_scan(space, angular_resolution=sys_dict.get("resolution", 0.25),
                                tol=sys_dict.get("tol", cst.ARG_TOL), arg_tol=sys_dict.get("arg_tol", cst.ARG_TOL))
    return {"space": _space_entry(space), "scan": scan}

def sphere(space, sys_dict):
    """
    Draw the unit sphere of a planar space.

    Parameters
    ----------
    space : obj
        Planar space object
    sys_dict : dict
        - overlay: list, Optional, any of conjugate, flat, companion
        - seed: int, Optional, default: 0, seed of the flat-segment probe

    Returns
    -------
    output_dict : dict
        Space, overlays drawn and the SVG text under "svg"
    """

    logger = logging.getLogger(__name__)

    if space.dim != 2:
        raise ValueError("Only planar unit spheres can be drawn, dim={}".format(space.dim))

    overlays = sys_dict.get("overlay") or []
    if isinstance(overlays, str):
        overlays = [overlays]
    unknown = [o for o in overlays if o not in OVERLAYS]
    if unknown:
        raise ValueError("Unknown overlays: {}. Choose from: {}".format(", ".join(unknown), ", ".join(OVERLAYS)))

    kwargs = {}
    if "conjugate" in overlays:
        kwargs["conjugate"] = find_conjugate_diameters(space).pairs
    if "flat" in overlays:
        probe = strict_convexity_probe(space, seed=sys_dict.get("seed", 0))
        kwargs["flat"] = probe.flat_witness
        if probe.flat_witness is None:
            logger.info("No flat segment found in '{}', nothing to overlay".format(space.name))
    if "companion" in overlays:
        kwargs["companions"] = companion_arrows(space)

    return {"space": _space_entry(space), "overlay": list(overlays), "svg": sphere_svg(space, **kwargs)}

######################################################################
#                                                                    #
#                           Full report                              #
#                                                                    #
######################################################################

def report(space, sys_dict):
    """
    Run every check that applies to a space and collect the results in one document.

    The norm axioms are validated first. A space that fails them gets no further computation and ``valid`` is False.

    Parameters
    ----------
    space : obj
        Space object
    sys_dict : dict
        - grid: int, Optional, default: 720, pairs of the bounds survey; the conjugate search uses half of it
        - tol: float, Optional, default: 1e-9, slack of the bound floors
        - seed: int, Optional, default: 0

    Returns
    -------
    output_dict : dict
        Schema tag, validation, convexity, bounds summary and, for planes, conjugate diameters and Radon test
    """

    logger = logging.getLogger(__name__)

    seed = sys_dict.get("seed", 0)
    grid = _grid(sys_dict, cst.SURVEY_GRID)
    output_dict = {"schema": cst.REPORT_SCHEMA, "space": _space_entry(space)}

    validation = validate_norm(space, seed=seed)
    output_dict["validation"] = validation
    valid = validation.passed
    if hasattr(space, "boundary"):
        gauge = validate_gauge_convexity(space.boundary)
        output_dict["gauge_convexity"] = gauge
        valid = valid and gauge.passed
    output_dict["valid"] = valid
    if not valid:
        logger.error("Space '{}' is not a norm, no further checks".format(space.name))
        return output_dict

    output_dict["convexity"] = strict_convexity_probe(space, seed=seed)

    if space.dim == 2:
        survey = bounds_survey(space, num_pairs=grid, tol=sys_dict.get("tol", cst.TOL))
        output_dict["bounds"] = {"num_pairs": len(survey.records),
                                 "segment_global_min": survey.segment_global_min,
                                 "line_global_min": survey.line_global_min,
                                 "segment_margin": survey.segment_margin,
                                 "line_margin": survey.line_margin,
                                 "violations": survey.violations}
        conjugate_grid = max(grid // 2, 2)
        try:
            output_dict["conjugate"] = find_conjugate_diameters(space, grid_size=conjugate_grid)
        except ConjugateSearchError as error:
            logger.error(str(error))
            output_dict["conjugate"] = {"error": str(error)}
        output_dict["radon"] = is_radon(space, grid_size=conjugate_grid)
    else:
        logger.info("Bounds survey and planar checks skipped for dim={}".format(space.dim))
        output_dict["bounds"] = None

    return output_dict
