
from abc import ABC, abstractmethod
import numpy as np

class NormTemplate(ABC):
    """
    Interface needed to define a finite-dimensional real normed space.

    Attributes
    ----------
    dim : int
        Dimension of the underlying real vector space
    name : str
        Short tag used in reports
    """

    dim = None
    name = None

    @abstractmethod
    def norm(self, v):
        """
        Norm of a single vector, given as a finite one dimensional numpy array of length dim.
        """
        pass

    def norm_many(self, V):
        """
        Norms of the rows of a two dimensional array.
        """
        V = np.asarray(V, dtype=float)
        return np.array([self.norm(v) for v in V], dtype=float)

    @abstractmethod
    def describe(self):
        """
        JSON-ready description of the space.
        """
        pass

    def __str__(self):
        return self.name
