# -- coding: utf8 --

r"""
    Polyhedral norms :math:`\|v\| = \max_k |f_k(v)|` given by a spanning list of linear functionals.
"""

import logging
import numpy as np

from .interface import NormTemplate
from . import norm_kernels

logger = logging.getLogger(__name__)

class space_polyhedral(NormTemplate):

    r"""
    Space whose unit ball is the polytope :math:`\{v : |f_k(v)| \leq 1 \ \forall k\}`.

    Parameters
    ----------
    kwargs : dict
        - functionals: list[list[float]], coefficient vectors of the functionals, all of the same length
        - name: str, Optional, tag used in reports

    Attributes
    ----------
    functionals : numpy.ndarray
        Matrix with one functional per row
    dim : int
        Dimension
    """

    def __init__(self, kwargs):

        if "functionals" not in kwargs:
            raise ValueError("A polyhedral space requires a list of functionals")
        try:
            F = np.array(kwargs["functionals"], dtype=float)
        except (TypeError, ValueError):
            raise ValueError("Functionals must be a list of equal-length coefficient lists")

        if F.ndim != 2 or F.shape[0] < 1 or F.shape[1] < 1:
            raise ValueError("Functionals must be a nonempty list of equal-length coefficient lists, given shape {}".format(
                F.shape))
        if not np.all(np.isfinite(F)):
            raise ValueError("Functional coefficients must be finite")
        if np.linalg.matrix_rank(F) < F.shape[1]:
            raise ValueError("Functionals do not span the dual space, so they define a seminorm and not a norm")

        self.functionals = np.ascontiguousarray(F)
        self.dim = F.shape[1]
        self.name = kwargs.get("name", "polyhedral({})".format(F.shape[0]))
        self._exts = norm_kernels()

    def norm(self, v):
        return self._exts.polyhedral_norm(np.ascontiguousarray(v, dtype=float), self.functionals)

    def norm_many(self, V):
        return self._exts.polyhedral_norm_rows(np.ascontiguousarray(V, dtype=float), self.functionals)

    def describe(self):
        return {"type": "polyhedral", "functionals": self.functionals.tolist()}
