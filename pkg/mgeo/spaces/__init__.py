"""
Spaces

This package defines finite-dimensional real normed spaces. A space object is created with the factory :func:`space`,
which imports the module for the requested norm form and instantiates its class. Every form follows the
:class:`~mgeo.spaces.interface.NormTemplate` interface.

Supported forms:

    - lp : p-norms with :math:`1 \\leq p \\leq \\infty`
    - polyhedral : maximum of absolute values of a spanning list of linear functionals
    - gauge2d : planar norms given by a star-shaped boundary curve

"""

import os
import logging
from importlib import import_module
import numpy as np

logger = logging.getLogger(__name__)

class jit_stat:
    disable_jit = True

FORMS = ["lp", "polyhedral", "gauge2d"]
BUILTIN_NAMES = ["l1", "l2", "linf", "lp", "stadium", "quartic_cubic", "star", "circle"]

def norm_kernels():
    """
    Return the kernel module used for batched evaluation, honoring ``NUMBA_DISABLE_JIT`` and :class:`jit_stat`.
    """

    if 'NUMBA_DISABLE_JIT' in os.environ:
        disable_jit = os.environ['NUMBA_DISABLE_JIT'] not in ["0", ""]
    else:
        disable_jit = jit_stat.disable_jit

    if disable_jit:
        from . import nojit_exts as exts
    else:
        from . import jit_exts as exts
    return exts

def space(**kwargs):
    """
    Use factory design pattern to search for a matching norm form with those supported in this module.

    To add a new form, add a module named after it to this package containing a class named ``space_<form>``.

    Parameters
    ----------
    form : str
        Name of the norm form, one of lp, polyhedral, gauge2d
    jit : bool, Optional, default: False
        Use Numba kernels for batched evaluation
    kwargs
        Other keywords passed to the class, depends on the form

    Returns
    -------
    instance : obj
        An instance of the defined space class
    """

    if "form" not in kwargs:
        raise ValueError("No norm form specified. Supported forms: {}".format(", ".join(FORMS)))
    form = kwargs.pop("form")

    if "jit" in kwargs:
        jit_stat.disable_jit = not kwargs.pop("jit")

    try:
        module = import_module("." + form, package="mgeo.spaces")
        space_class = getattr(module, "space_" + form)
    except (ImportError, AttributeError):
        raise ImportError("The norm form, '{}', was not found\nThe following forms are supported: {}".format(
            form, ", ".join(FORMS)))

    instance = space_class(kwargs)
    logger.info("Created {} space '{}' of dimension {}".format(form, instance.name, instance.dim))

    return instance

def builtin_space(name, p=None, dim=2):
    r"""
    Return one of the named example spaces.

    Parameters
    ----------
    name : str
        One of l1, l2, linf, lp (requires p), stadium, quartic_cubic, star, circle. The last four are planar gauges.
    p : float, Optional
        Exponent for ``lp``
    dim : int, Optional, default: 2
        Dimension of the p-norm spaces

    Returns
    -------
    instance : obj
        Space object
    """

    if name == "l1":
        return space(form="lp", p=1.0, dim=dim)
    elif name == "l2":
        return space(form="lp", p=2.0, dim=dim)
    elif name == "linf":
        return space(form="lp", p=np.inf, dim=dim)
    elif name == "lp":
        if p is None:
            raise ValueError("Builtin space 'lp' requires the exponent p")
        return space(form="lp", p=p, dim=dim)

    from . import library
    if name not in library.BOUNDARIES:
        raise ValueError("Unknown builtin space '{}'. Choose from: {}".format(name, ", ".join(BUILTIN_NAMES)))
    if dim != 2:
        raise ValueError("Builtin space '{}' is planar, dim={} was requested".format(name, dim))
    return space(form="gauge2d", boundary=library.BOUNDARIES[name](), name=name)

def as_vector(v, dim=None):
    """
    Convert input to a one dimensional float array and check it.

    Parameters
    ----------
    v : array_like
        Coordinates
    dim : int, Optional
        Required length

    Returns
    -------
    vector : numpy.ndarray
        Finite coordinates of length dim
    """

    try:
        arr = np.array(v, dtype=float)
    except (TypeError, ValueError):
        raise TypeError("Vector coordinates must be real numbers, given: {}".format(v))

    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("A vector must be a nonempty one dimensional list of coordinates, given shape {}".format(
            arr.shape))
    if not np.all(np.isfinite(arr)):
        raise ValueError("Vector has non-finite coordinates: {}".format(arr))
    if dim is not None and arr.size != dim:
        raise ValueError("Dimension mismatch: vector of length {} in a space of dimension {}".format(arr.size, dim))

    return arr

def eval_norm(space, v):
    """
    Return the norm of v in the given space.
    """
    return float(space.norm(as_vector(v, space.dim)))

def sphere_point_2d(space, theta):
    """
    Return the unit-sphere point on the ray at angle theta of a planar space.
    """

    if space.dim != 2:
        raise ValueError("sphere_point_2d requires a planar space, dim={}".format(space.dim))
    u = np.array([np.cos(theta), np.sin(theta)])
    return u / space.norm(u)

def sphere_points_2d(space, thetas):
    """
    Return unit-sphere points for an array of angles, one per row.
    """

    if space.dim != 2:
        raise ValueError("sphere_points_2d requires a planar space, dim={}".format(space.dim))
    thetas = np.asarray(thetas, dtype=float)
    U = np.column_stack((np.cos(thetas), np.sin(thetas)))
    return U / space.norm_many(U)[:, None]

from .validation import validate_norm, validate_gauge_convexity
