# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; same contract as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t

cnp.import_array()

BACKEND = "cython"


def count_weights(base, rows, add_table, int64_t[::1] counts):
    """Add to ``counts[w]`` the number of vectors ``base + sum_i rows[i, x_i]``
    of weight ``w``, over all ``x`` in F^r.

    ``rows`` has shape (r, Q, n) with ``rows[i, a]`` the scaled row ``a*g_i``;
    ``add_table`` is the (Q, Q) addition table, or None for characteristic 2
    (addition is XOR of indices).
    """
    cdef const int32_t[::1] b = np.ascontiguousarray(base, dtype=np.int32)
    cdef const int32_t[:, :, ::1] R = np.ascontiguousarray(rows, dtype=np.int32).reshape(
        (rows.shape[0], rows.shape[1], b.shape[0]))
    cdef int r = R.shape[0]
    cdef int Q = R.shape[1]
    cdef int n = b.shape[0]
    cdef bint use_xor = add_table is None
    cdef const int32_t[:, ::1] A
    if use_xor:
        A = np.zeros((1, 1), dtype=np.int32)
    else:
        A = np.ascontiguousarray(add_table, dtype=np.int32)

    cdef int32_t[:, ::1] acc = np.zeros((r + 1, n), dtype=np.int32)
    cdef int32_t[::1] x = np.zeros(max(r, 1), dtype=np.int32)
    cdef int i, j, c, w
    cdef int32_t a
    with nogil:
        for c in range(n):
            acc[0, c] = b[c]
        for i in range(r):
            for c in range(n):
                acc[i + 1, c] = acc[i, c]
        while True:
            w = 0
            for c in range(n):
                if acc[r, c] != 0:
                    w += 1
            counts[w] += 1
            i = r - 1
            while i >= 0:
                x[i] += 1
                if x[i] < Q:
                    break
                x[i] = 0
                i -= 1
            if i < 0:
                break
            for j in range(i, r):
                a = x[j]
                if use_xor:
                    for c in range(n):
                        acc[j + 1, c] = acc[j, c] ^ R[j, a, c]
                else:
                    for c in range(n):
                        acc[j + 1, c] = A[acc[j, c], R[j, a, c]]
