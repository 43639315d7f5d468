"""Numpy implementation of the elimination kernels (no compiled code)."""

import numpy as np


def rref_modp(a, p):
    """Reduce ``a`` in place to reduced row echelon form mod ``p``.

    Entries must already lie in ``[0, p)``.  Returns the pivot columns.
    """
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r >= m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r])) % p
        pivots.append(c)
        r += 1
    return pivots
