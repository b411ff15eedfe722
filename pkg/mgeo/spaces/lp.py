# -- coding: utf8 --

r"""
    p-norm spaces :math:`(\mathbb{R}^n, \|\cdot\|_p)` with :math:`1 \leq p \leq \infty`.
"""

import logging
import numpy as np

from .interface import NormTemplate
from . import norm_kernels

logger = logging.getLogger(__name__)

class space_lp(NormTemplate):

    r"""
    Real coordinate space with the p-norm. The value :math:`p = \infty` is exact (maximum of absolute coordinates).

    Parameters
    ----------
    kwargs : dict
        - p: float or str, exponent, :math:`1 \leq p \leq \infty`; the strings "inf" and "infinity" are accepted
        - dim: int, Optional, default: 2, dimension of the space
        - name: str, Optional, tag used in reports

    Attributes
    ----------
    p : float
        Exponent
    dim : int
        Dimension
    name : str
        Tag such as ``l2`` or ``lp(3)``
    """

    def __init__(self, kwargs):

        if "p" not in kwargs:
            raise ValueError("A p-norm space requires the exponent p")
        p = kwargs["p"]
        if isinstance(p, str):
            if p.strip().lower() not in ["inf", "infinity"]:
                raise ValueError("Exponent p must be a number or 'inf', given '{}'".format(p))
            p = np.inf
        try:
            p = float(p)
        except (TypeError, ValueError):
            raise TypeError("Exponent p must be a real number, given {}".format(p))
        if np.isnan(p) or p < 1.0:
            raise ValueError("Exponent p must satisfy 1 <= p <= inf, given {}".format(p))

        dim = kwargs.get("dim", 2)
        if isinstance(dim, bool) or int(dim) != dim or dim < 1:
            raise ValueError("Dimension must be a positive integer, given {}".format(dim))

        self.p = p
        self.dim = int(dim)
        if "name" in kwargs:
            self.name = kwargs["name"]
        elif np.isinf(p):
            self.name = "linf"
        elif p in [1.0, 2.0]:
            self.name = "l{}".format(int(p))
        else:
            self.name = "lp({:g})".format(p)

        self._exts = norm_kernels()

    def norm(self, v):
        r"""
        Return :math:`\|v\|_p`.
        """
        return self._exts.lp_norm(np.ascontiguousarray(v, dtype=float), self.p)

    def norm_many(self, V):
        r"""
        Return :math:`\|v\|_p` for each row of V.
        """
        return self._exts.lp_norm_rows(np.ascontiguousarray(V, dtype=float), self.p)

    def describe(self):
        return {"type": "lp", "p": "inf" if np.isinf(self.p) else self.p, "dim": self.dim}

    def __str__(self):

        string = "Space: {}\n    p: {}\n    dim: {}".format(self.name, self.p, self.dim)
        return string
