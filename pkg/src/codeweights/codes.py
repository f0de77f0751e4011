"""Linear codes and the exhaustive enumeration engines."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Sequence

import numpy as np

from . import kernels
from .errors import BudgetExceeded, RankDeficientError
from .gf import FieldSpec, extend_field
from .linalg import MatrixGF, SubspaceHandle, enumerate_subspaces, rref
from .qcombinatorics import gaussian_binomial

DEFAULT_BUDGET = 1 << 26
BUDGET_ENV = "CODEWEIGHTS_BUDGET"

# odd-characteristic fields above this size are enumerated without a kernel
KERNEL_ADD_TABLE_LIMIT = 2048


def default_budget() -> int:
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class FamilyId:
    kind: str  # "simplex" or "rm1"
    q: int
    s: int

    def __post_init__(self):
        if self.kind not in ("simplex", "rm1"):
            raise ValueError(f"unknown family {self.kind!r}")

    @property
    def n(self) -> int:
        if self.kind == "simplex":
            return (self.q ** self.s - 1) // (self.q - 1)
        return self.q ** (self.s - 1)

    @property
    def k(self) -> int:
        return self.s

    def __str__(self):
        if self.kind == "simplex":
            return f"S_{self.q}({self.s})"
        return f"RM_{self.q}(1,{self.s - 1})"


@dataclass(frozen=True)
class LinearCode:
    field: FieldSpec
    G: MatrixGF
    family: Optional[FamilyId] = None

    @property
    def n(self) -> int:
        return self.G.ncols

    @property
    def k(self) -> int:
        return self.G.nrows

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def nondegenerate(self) -> bool:
        return all(any(c) for c in self.G.columns())

    def __str__(self):
        name = f"{self.family} " if self.family else ""
        return f"{name}[{self.n},{self.k}] code over GF({self.q})"


class WeightVector:
    """Exact counts indexed by weight 0..n."""

    __slots__ = ("counts",)

    def __init__(self, counts: Sequence[int]):
        self.counts = tuple(int(c) for c in counts)

    def __getitem__(self, w):
        return self.counts[w]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __eq__(self, other):
        if isinstance(other, WeightVector):
            return self.counts == other.counts
        if isinstance(other, (list, tuple)):
            return self.counts == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.counts)

    def __add__(self, other):
        return WeightVector(a + b for a, b in zip(self.counts, other.counts))

    def total(self) -> int:
        return sum(self.counts)

    def nonzero(self) -> dict[int, int]:
        return {w: c for w, c in enumerate(self.counts) if c}

    def to_json(self) -> list[str]:
        return [str(c) for c in self.counts]

    def __repr__(self):
        return f"WeightVector({list(self.counts)})"


def code_from_matrix(field: FieldSpec, G, family: Optional[FamilyId] = None) -> LinearCode:
    """Wrap a full-rank generator matrix; rank-deficient input is rejected."""
    if not isinstance(G, MatrixGF):
        G = MatrixGF.from_rows(field, G)
    if G.field != field:
        raise ValueError("generator matrix is over a different field")
    r = rref(G)[1]
    if r != G.nrows:
        raise RankDeficientError(f"generator matrix has rank {r} < {G.nrows} rows")
    return LinearCode(field, G, family)


def support(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(word) if x)


def weight(word: Sequence[int]) -> int:
    return sum(1 for x in word if x)


@lru_cache(maxsize=None)
def tower(field: FieldSpec, m: int) -> FieldSpec:
    return extend_field(field, m)


def extend_code(code: LinearCode, m: int) -> LinearCode:
    """The extension code over the degree-m tower; G is reused verbatim."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    big = tower(code.field, m)
    return LinearCode(big, MatrixGF(big, code.G.entries, code.G.ncols), code.family)


def scaled_rows(code: LinearCode) -> np.ndarray:
    """Array ``S[i, a, j] = a * G[i][j]``."""
    F = code.field
    Q = F.order
    S = np.zeros((code.k, Q, code.n), dtype=np.int32)
    for i, row in enumerate(code.G.entries):
        for a in range(1, Q):
            S[i, a] = [F.mul(a, g) if g else 0 for g in row]
    return S


def iter_codewords(code: LinearCode) -> Iterator[tuple[int, ...]]:
    """Every codeword ``x G``, messages in lexicographic order."""
    F = code.field
    S = scaled_rows(code)
    zero = (0,) * code.n
    for x in product(range(F.order), repeat=code.k):
        c = zero
        for i, a in enumerate(x):
            if a:
                c = tuple(F.add(u, v) for u, v in zip(c, S[i, a].tolist()))
        yield c


def _count_task(args):
    base, rows, add_table, n, backend = args
    counts = np.zeros(n + 1, dtype=np.int64)
    kernels.get_backend(backend).count_weights(base, rows, add_table, counts)
    return counts


def _split(F: FieldSpec, base, rows):
    """Fix the first free coordinate, giving Q smaller tasks."""
    out = []
    for a in range(F.order):
        nb = np.array([F.add(int(u), int(v)) for u, v in zip(base, rows[0, a])], dtype=np.int32)
        out.append((nb, rows[1:]))
    return out


def weight_distribution(code: LinearCode, budget: Optional[int] = None, workers: int = 1,
                        backend: Optional[str] = None) -> WeightVector:
    """Number of codewords of each weight, by exhaustive enumeration.

    Only messages whose first nonzero coordinate is 1 are visited; each
    stands for its ``q - 1`` nonzero multiples, which share its weight.
    """
    F, n, k = code.field, code.n, code.k
    Q = F.order
    budget = default_budget() if budget is None else budget
    if Q ** k > budget:
        raise BudgetExceeded(Q ** k, budget)
    counts = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        counts[0] = 1
        return WeightVector(counts.tolist())
    if F.p != 2 and Q > KERNEL_ADD_TABLE_LIMIT:
        counts = [0] * (n + 1)
        for c in iter_codewords(code):
            counts[weight(c)] += 1
        return WeightVector(counts)

    S = scaled_rows(code)
    add_table = None if F.p == 2 else F.add_table()
    tasks = [(S[i, 1].copy(), S[i + 1:]) for i in range(k)]
    if workers > 1:
        while len(tasks) < 4 * workers and any(r.shape[0] for _, r in tasks):
            nxt = []
            for base, rows in tasks:
                nxt.extend(_split(F, base, rows) if rows.shape[0] else [(base, rows)])
            tasks = nxt
    bname = backend or kernels.BACKEND
    jobs = [(b, r, add_table, n, bname) for b, r in tasks]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_count_task, jobs))
    else:
        parts = [_count_task(j) for j in jobs]
    projective = np.sum(parts, axis=0)
    total = [int(c) * (Q - 1) for c in projective]
    total[0] += 1
    return WeightVector(total)


def subcode_basis(code: LinearCode, handle: SubspaceHandle) -> MatrixGF:
    if handle.k != code.k:
        raise ValueError(f"handle lives in GF(q)^{handle.k}, code has dimension {code.k}")
    if handle.r == 0:
        return MatrixGF.zeros(code.field, 0, code.n)
    return handle.basis @ code.G


def subcode_support(code: LinearCode, handle: SubspaceHandle) -> tuple[frozenset[int], int]:
    """Support and weight of the subcode spanned by ``handle.basis @ G``.

    A coordinate vanishes on the whole subcode iff it vanishes on every
    basis row, so the union of the basis-row supports suffices.
    """
    B = subcode_basis(code, handle)
    supp = frozenset(j for j in range(code.n) if any(r[j] for r in B.entries))
    return supp, len(supp)


def generalized_weight_distribution(code: LinearCode, r: int, budget: Optional[int] = None) -> WeightVector:
    """Number of r-dimensional subcodes of each weight."""
    if not 0 <= r <= code.k:
        raise ValueError(f"r must lie in [0, {code.k}], got {r}")
    budget = default_budget() if budget is None else budget
    need = gaussian_binomial(code.k, r, code.q)
    if need > budget:
        raise BudgetExceeded(need, budget, "subspaces")
    F = code.field
    cols = code.G.columns()
    # support of a message-space vector h: the columns g with <h, g> != 0
    masks: dict[tuple[int, ...], int] = {}

    def mask(h):
        m = masks.get(h)
        if m is None:
            m = 0
            for j, g in enumerate(cols):
                s = 0
                for a, b in zip(h, g):
                    if a and b:
                        s = F.add(s, F.mul(a, b))
                if s:
                    m |= 1 << j
            masks[h] = m
        return m

    counts = [0] * (code.n + 1)
    for handle in enumerate_subspaces(F, code.k, r):
        m = 0
        for h in handle.basis.entries:
            m |= mask(h)
        counts[m.bit_count()] += 1
    return WeightVector(counts)
