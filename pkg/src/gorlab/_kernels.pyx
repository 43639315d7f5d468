# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels over prime fields."""

cdef long long _inv_mod(long long a, long long p):
    cdef long long t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


def rref_modp(long long[:, ::1] a, long long p):
    """Reduce ``a`` in place to reduced row echelon form mod ``p``.

    Entries must already lie in ``[0, p)``.  Returns the pivot columns.
    """
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k, piv, nnz
    cdef long long inv, f, tmp
    cdef long long[::1] cols
    pivots = []
    if m == 0 or n == 0:
        return pivots
    import numpy as np
    cols_arr = np.empty(n, dtype=np.int64)
    cols = cols_arr
    for c in range(n):
        if r >= m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[r, c], p)
        nnz = 0
        for j in range(c, n):
            if a[r, j] != 0:
                if inv != 1:
                    a[r, j] = a[r, j] * inv % p
                cols[nnz] = j
                nnz += 1
        for i in range(m):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            f = p - f
            for k in range(nnz):
                j = cols[k]
                a[i, j] = (a[i, j] + f * a[r, j]) % p
        pivots.append(c)
        r += 1
    return pivots
