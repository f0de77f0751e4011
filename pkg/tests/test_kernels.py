import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from codeweights import kernels
from codeweights.codes import extend_code, weight_distribution
from codeweights.families import rm1_code, simplex_code
from codeweights.gf import make_field

from conftest import random_code

BACKENDS = kernels.available_backends()


def test_compiled_kernel_built():
    # the package is expected to ship its extension; the fallback is for environments without a compiler
    assert "cython" in BACKENDS


def test_backend_selection(monkeypatch):
    monkeypatch.setenv("CODEWEIGHTS_PURE", "1")
    assert kernels.get_backend().BACKEND == "python"
    monkeypatch.delenv("CODEWEIGHTS_PURE")
    assert kernels.get_backend().BACKEND == BACKENDS[0]
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


def _direct(base, rows, F):
    """Reference: loop over every combination with scalar field additions."""
    from itertools import product
    r, Q, n = rows.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    for x in product(range(Q), repeat=r):
        v = list(base)
        for i, a in enumerate(x):
            v = [F.add(int(s), int(t)) for s, t in zip(v, rows[i, a])]
        counts[sum(1 for s in v if s)] += 1
    return counts


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_kernel_matches_direct_loop(backend, q):
    from codeweights.codes import scaled_rows
    rng = random.Random(q)
    code = random_code(rng, q, 6, 3)
    F = code.field
    S = scaled_rows(code)
    add_table = None if F.p == 2 else F.add_table()
    base = S[0, 1]
    counts = np.zeros(code.n + 1, dtype=np.int64)
    kernels.get_backend(backend).count_weights(base, S[1:], add_table, counts)
    assert (counts == _direct(base, S[1:], F)).all()


@pytest.mark.parametrize("backend", BACKENDS)
def test_kernel_empty_rows(backend):
    counts = np.zeros(4, dtype=np.int64)
    kernels.get_backend(backend).count_weights(np.array([1, 0, 1], np.int32),
                                               np.zeros((0, 2, 3), np.int32), None, counts)
    assert counts.tolist() == [0, 0, 1, 0]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7]), st.integers(1, 8), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_backends_agree(q, n, k, seed):
    if k > n:
        return
    code = random_code(random.Random(seed), q, n, k)
    results = {b: weight_distribution(code, backend=b) for b in BACKENDS}
    assert len(set(results.values())) == 1


def test_backends_agree_on_extensions():
    code = rm1_code(make_field(3), 2)
    for m in (1, 2, 3):
        ext = extend_code(code, m)
        assert len({weight_distribution(ext, backend=b) for b in BACKENDS}) == 1
