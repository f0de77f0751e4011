"""Vectorized numpy fallback for the enumeration kernel.

Same contract as the compiled ``_kernels.count_weights``.
"""

from itertools import product

import numpy as np

BACKEND = "python"

# rows folded into one block of precomputed sums
_BLOCK = 1 << 16


def _adder(add_table):
    if add_table is None:
        return np.bitwise_xor
    table = np.asarray(add_table)
    return lambda a, b: table[a, b]


def count_weights(base, rows, add_table, counts):
    base = np.asarray(base, dtype=np.int64)
    rows = np.asarray(rows, dtype=np.int64)
    n = base.shape[0]
    r = rows.shape[0]
    add = _adder(add_table)
    if r == 0:
        counts[np.count_nonzero(base)] += 1
        return
    Q = rows.shape[1]
    rows = rows.reshape(r, Q, n)

    # inner block: every combination of the trailing rows, as one array
    t = 1
    block = rows[r - 1]
    while t < r and block.shape[0] * Q <= _BLOCK:
        t += 1
        scaled = rows[r - t]
        block = add(scaled[:, None, :], block[None, :, :]).reshape(-1, n)

    for prefix in product(range(Q), repeat=r - t):
        vec = base
        for i, a in enumerate(prefix):
            if a:
                vec = add(vec, rows[i, a])
        words = add(vec[None, :], block)
        w = np.count_nonzero(words, axis=1)
        counts[: n + 1] += np.bincount(w, minlength=n + 1)[: n + 1].astype(counts.dtype)
