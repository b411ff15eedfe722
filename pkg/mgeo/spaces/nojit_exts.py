r"""
Numpy kernels for batched norm evaluation. These mirror :mod:`~mgeo.spaces.jit_exts` and are used when Numba's JIT
compilation is disabled.
"""

import numpy as np

def lp_norm(v, p):
    r"""
    Return :math:`\|v\|_p` of a one dimensional array, scaled by the largest coordinate to avoid overflow.

    Parameters
    ----------
    v : numpy.ndarray
        Vector
    p : float
        Exponent, :math:`1 \leq p \leq \infty`

    Returns
    -------
    norm : float
        p-norm of v
    """

    a = np.abs(v)
    m = np.max(a)
    if m == 0.0 or np.isinf(p):
        return float(m)
    if p == 1.0:
        return float(np.sum(a))
    return float(m * np.sum((a / m)**p)**(1.0 / p))

def lp_norm_rows(V, p):
    r"""
    Return the p-norm of every row of a two dimensional array.
    """

    A = np.abs(V)
    m = np.max(A, axis=1)
    if np.isinf(p):
        return m
    if p == 1.0:
        return np.sum(A, axis=1)
    out = np.zeros(len(m))
    nz = m > 0.0
    out[nz] = m[nz] * np.sum((A[nz] / m[nz, None])**p, axis=1)**(1.0 / p)
    return out

def polyhedral_norm(v, F):
    r"""
    Return :math:`\max_k |f_k \cdot v|` for the functionals stored as rows of F.
    """
    return float(np.max(np.abs(F @ v)))

def polyhedral_norm_rows(V, F):
    r"""
    Return the polyhedral norm of every row of V.
    """
    return np.max(np.abs(V @ F.T), axis=1)
