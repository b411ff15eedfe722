r"""
Numba kernels for batched norm evaluation. Same call signatures as :mod:`~mgeo.spaces.nojit_exts`.
"""

import os
import numpy as np

if 'NUMBA_DISABLE_JIT' in os.environ:
    disable_jit = os.environ['NUMBA_DISABLE_JIT']
else:
    from . import jit_stat
    disable_jit = jit_stat.disable_jit

if disable_jit:
    os.environ['NUMBA_DISABLE_JIT'] = '1'

import numba

@numba.njit(numba.f8(numba.f8[:], numba.f8))
def lp_norm(v, p):
    r"""
    Return :math:`\|v\|_p` of a one dimensional array, scaled by the largest coordinate.
    """
    m = 0.0
    for j in range(v.shape[0]):
        a = abs(v[j])
        if a > m:
            m = a
    if m == 0.0 or np.isinf(p):
        return m
    s = 0.0
    if p == 1.0:
        for j in range(v.shape[0]):
            s += abs(v[j])
        return s
    for j in range(v.shape[0]):
        s += (abs(v[j]) / m)**p
    return m * s**(1.0 / p)

@numba.njit(numba.f8[:](numba.f8[:,:], numba.f8))
def lp_norm_rows(V, p):
    out = np.empty(V.shape[0])
    for i in range(V.shape[0]):
        out[i] = lp_norm(V[i], p)
    return out

@numba.njit(numba.f8(numba.f8[:], numba.f8[:,:]))
def polyhedral_norm(v, F):
    best = 0.0
    for k in range(F.shape[0]):
        s = 0.0
        for j in range(F.shape[1]):
            s += F[k, j] * v[j]
        if abs(s) > best:
            best = abs(s)
    return best

@numba.njit(numba.f8[:](numba.f8[:,:], numba.f8[:,:]))
def polyhedral_norm_rows(V, F):
    out = np.empty(V.shape[0])
    for i in range(V.shape[0]):
        out[i] = polyhedral_norm(V[i], F)
    return out
