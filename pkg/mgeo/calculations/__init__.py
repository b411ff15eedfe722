"""
Calculations

This package takes a space object and the options of a calculation. The calculation type is compared to the wrappers
available in :mod:`~mgeo.calculations.calc_types` and the matching one is executed. Every command of the command-line
interface is a calculation type.

"""

from inspect import getmembers, isfunction
import logging

from . import calc_types

logger = logging.getLogger(__name__)

def calculation_types():
    """
    Names of the supported calculation types, as written on the command line.
    """
    return [name.replace("_", "-") for name, obj in getmembers(calc_types, isfunction)
            if obj.__module__ == calc_types.__name__ and not name.startswith("_")]

def calc(space, calc_dict):
    """
    Use factory design pattern to search for a matching calculation type with those supported in this module.

    To add a new calculation type, add a function to calc_types.py in the calculations module. Hyphens in the type
    name are read as underscores, so ``check-orth`` runs :func:`~mgeo.calculations.calc_types.check_orth`.

    Parameters
    ----------
    space : obj
        Space object
    calc_dict : dict
        Must contain "calculation_type". Other keywords are passed to the function and depend on the calculation type.

    Returns
    -------
    output_dict : dict
        Given and calculated values
    """

    if "calculation_type" not in calc_dict:
        raise ValueError("No calculation type specified. Supported types: {}".format(", ".join(calculation_types())))
    calctype = str(calc_dict["calculation_type"])

    sys_dict = {key: value for key, value in calc_dict.items() if key != "calculation_type"}

    func = None
    if not calctype.startswith("_"):
        func = getattr(calc_types, calctype.replace("-", "_"), None)
    if func is None or not isfunction(func) or func.__module__ != calc_types.__name__:
        raise ImportError("The calculation type, '{}', was not found\nThe following calculation types are "
                          "supported: {}".format(calctype, ", ".join(calculation_types())))

    logger.info("Running calculation '{}' on space '{}'".format(calctype, space.name))
    output_dict = func(space, sys_dict)
    output_dict["calculation_type"] = calctype.replace("_", "-")
    return output_dict
