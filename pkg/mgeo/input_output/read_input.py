"""

Routines for parsing space definitions, vectors and .json calculation files into objects and dictionaries for
program use.

"""

import os
import json
import logging
import numpy as np

from ..spaces import space as space_factory, builtin_space, BUILTIN_NAMES

logger = logging.getLogger(__name__)

SPACE_FIELDS = {
    "lp": (["type", "p"], ["dim", "basis"]),
    "polyhedral": (["type", "functionals"], ["basis"]),
    "gauge2d": (["type", "pieces"], ["symmetric", "basis"]),
    "builtin": (["type", "name"], ["p", "dim", "basis"]),
}

######################################################################
#                                                                    #
#                          Space definitions                         #
#                                                                    #
######################################################################

def space_from_dict(space_dict, name=None):
    """
    Build a space from a space-definition dictionary.

    Accepted forms, with exactly these fields (plus an optional "basis" list of vectors):

        - {"type": "lp", "p": 2.5, "dim": 3}, where p may be "inf"
        - {"type": "polyhedral", "functionals": [[1, 0], [0, 1], [0.7, 0.7]]}
        - {"type": "gauge2d", "pieces": [...], "symmetric": true}
        - {"type": "builtin", "name": "stadium"}

    Parameters
    ----------
    space_dict : dict
        Space definition
    name : str, Optional
        Tag of the space in reports

    Returns
    -------
    space : obj
        Space object
    basis : list
        Basis vectors given in the definition, or None
    """

    if not isinstance(space_dict, dict):
        raise TypeError("A space definition must be a JSON object, given {}".format(type(space_dict).__name__))
    if "type" not in space_dict:
        raise ValueError("Space definition lacks the field 'type'")

    form = space_dict["type"]
    if form not in SPACE_FIELDS:
        raise ValueError("Unknown space type '{}'. Supported types: {}".format(form, ", ".join(SPACE_FIELDS)))
    required, optional = SPACE_FIELDS[form]
    missing = [key for key in required if key not in space_dict]
    extra = [key for key in space_dict if key not in required + optional]
    if missing:
        raise ValueError("Space of type '{}' lacks the fields: {}".format(form, ", ".join(missing)))
    if extra:
        raise ValueError("Space of type '{}' does not accept the fields: {}".format(form, ", ".join(extra)))

    kwargs = {key: value for key, value in space_dict.items() if key not in ["type", "basis"]}
    if form == "builtin":
        space = builtin_space(kwargs["name"], p=kwargs.get("p"), dim=kwargs.get("dim", 2))
    else:
        if name is not None:
            kwargs["name"] = name
        space = space_factory(form=form, **kwargs)

    return space, space_dict.get("basis")

def parse_space(text):
    """
    Build a space from a command-line string.

    Accepted strings:

        - l1, l2, linf, optionally with a dimension, e.g. ``linf:dim=3``
        - lp with the exponent and an optional dimension, e.g. ``lp:3,dim=3`` or ``lp:inf``
        - builtin names, bare or prefixed, e.g. ``stadium`` or ``builtin:quartic_cubic``
        - path to a .json space-definition file

    Parameters
    ----------
    text : str
        Space string

    Returns
    -------
    space : obj
        Space object
    basis : list
        Basis vectors given in a definition file, or None
    """

    if not isinstance(text, str) or not text.strip():
        raise ValueError("Empty space string")
    text = text.strip()

    if text.lower().endswith(".json") or os.path.isfile(text):
        return load_space_file(text)

    if text.startswith("builtin:"):
        text = text[len("builtin:"):]

    head, _, tail = text.partition(":")
    if head not in BUILTIN_NAMES:
        raise ValueError("Unknown space '{}'. Use one of {}, 'lp:<p>[,dim=<n>]' or a .json file".format(
            text, ", ".join(BUILTIN_NAMES)))

    p, dim = None, 2
    for token in [t.strip() for t in tail.split(",") if t.strip()]:
        if token.startswith("dim="):
            try:
                dim = int(token[4:])
            except ValueError:
                raise ValueError("Dimension must be an integer, given '{}'".format(token[4:]))
        elif head == "lp" and p is None:
            p = token if token.lower() in ["inf", "infinity"] else _to_float(token, "exponent p")
        else:
            raise ValueError("Unexpected token '{}' in space string '{}'".format(token, text))

    return builtin_space(head, p=p, dim=dim), None

def load_space_file(filename):
    """
    Read a .json space-definition file, see :func:`space_from_dict`.
    """

    if not os.path.isfile(filename):
        raise ValueError("Space definition file '{}' was not found".format(filename))
    with open(filename, "r") as f:
        try:
            space_dict = json.load(f)
        except json.JSONDecodeError as error:
            raise ValueError("Space definition file '{}' is not valid JSON: {}".format(filename, error))

    name = os.path.splitext(os.path.basename(filename))[0]
    logger.info("Read space definition from {}".format(filename))
    return space_from_dict(space_dict, name=name)

def make_space(space_spec, path="."):
    """
    Build a space from either a space string or a definition dictionary, as found in calculation files.
    """

    if isinstance(space_spec, dict):
        return space_from_dict(space_spec)
    if isinstance(space_spec, str) and space_spec.lower().endswith(".json") and not os.path.isabs(space_spec):
        space_spec = os.path.join(path, space_spec)
    return parse_space(space_spec)

######################################################################
#                                                                    #
#                               Vectors                              #
#                                                                    #
######################################################################

def _to_float(token, what):
    try:
        value = float(token)
    except ValueError:
        raise ValueError("Could not read {} from '{}'".format(what, token))
    if not np.isfinite(value):
        raise ValueError("The {} must be finite, given '{}'".format(what, token))
    return value

def parse_vector(text):
    """
    Read a vector written as comma separated coordinates, e.g. ``1,0``.
    """

    if isinstance(text, (list, tuple, np.ndarray)):
        return np.array(text, dtype=float)
    tokens = [t.strip() for t in str(text).split(",")]
    if not tokens or any(t == "" for t in tokens):
        raise ValueError("Could not read a vector from '{}'".format(text))
    return np.array([_to_float(t, "coordinate") for t in tokens])

def parse_vectors(text):
    """
    Read vectors separated by semicolons, e.g. ``1,0;0.7,0.7``.
    """

    if isinstance(text, (list, tuple, np.ndarray)):
        return [parse_vector(v) for v in text]
    vectors = [parse_vector(part) for part in str(text).split(";") if part.strip()]
    if not vectors:
        raise ValueError("Could not read vectors from '{}'".format(text))
    if len(set(len(v) for v in vectors)) != 1:
        raise ValueError("Vectors in '{}' have different lengths".format(text))
    return vectors

######################################################################
#                                                                    #
#                      Settings and input files                      #
#                                                                    #
######################################################################

def budget_from_env(default=None):
    """
    Read the optimizer evaluation budget from the environment variable ``MGEO_BUDGET``.
    """

    value = os.environ.get("MGEO_BUDGET")
    if value is None or value.strip() == "":
        return default
    try:
        budget = int(value)
    except ValueError:
        raise ValueError("MGEO_BUDGET must be a positive integer, given '{}'".format(value))
    if budget < 1:
        raise ValueError("MGEO_BUDGET must be a positive integer, given '{}'".format(value))
    logger.info("Evaluation budget {} from MGEO_BUDGET".format(budget))
    return budget

def extract_calc_data(input_fname, path="."):
    """
    Parse a .json calculation file into the space description and the calculation dictionary.

    The file holds a "space" entry (space string or definition object), a "calculation_type" naming one of
    :mod:`~mgeo.calculations.calc_types`, and the options of that calculation.

    Parameters
    ----------
    input_fname : str
        Name of the .json file
    path : str, Optional, default: "."
        Directory against which relative space files are resolved

    Returns
    -------
    space_spec : dict or str
        Space description for :func:`make_space`
    calc_dict : dict
        Instructions for :func:`~mgeo.calculations.calc`
    """

    with open(input_fname, "r") as input_file:
        try:
            input_dict = json.load(input_file)
        except json.JSONDecodeError as error:
            raise ValueError("Input file '{}' is not valid JSON: {}".format(input_fname, error))

    if "space" not in input_dict:
        raise ValueError("Input file '{}' does not define a 'space'".format(input_fname))
    if "calculation_type" not in input_dict:
        raise ValueError("Input file '{}' does not define a 'calculation_type'".format(input_fname))

    space_spec = input_dict["space"]
    if isinstance(space_spec, str) and space_spec.lower().endswith(".json") and not os.path.isabs(space_spec):
        space_spec = os.path.join(path, space_spec)

    calc_dict = {key: value for key, value in input_dict.items() if key != "space"}
    logger.info("The following calculation parameters have been provided: {}".format(", ".join(calc_dict.keys())))
    return space_spec, calc_dict
