"""Dense linear algebra over a :class:`~codeweights.gf.FieldSpec`.

Matrices are immutable tuples of row tuples of element indices.  Subspaces
of GF(q)^k are represented canonically by the reduced row echelon form of a
basis, so two handles are equal exactly when they span the same space.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Optional, Sequence

from .gf import FieldSpec, parse_field


@dataclass(frozen=True)
class MatrixGF:
    field: FieldSpec
    entries: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence[int]], ncols: Optional[int] = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"ragged matrix: row of length {len(r)}, expected {ncols}")
            for x in r:
                if not 0 <= x < field.order:
                    raise ValueError(f"entry {x} is not an element of GF({field.order})")
        return cls(field, rows, ncols)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int):
        return cls(field, tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int):
        return cls(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, tuple(self.columns()), self.nrows)

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        if self.field != other.field:
            raise ValueError("matrices over different fields")
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        rows = tuple(tuple(dot(self.field, r, c) for c in cols) for r in self.entries)
        return MatrixGF(self.field, rows, other.ncols)

    def vecmul(self, x: Sequence[int]) -> tuple[int, ...]:
        """Row vector times matrix: ``x @ self``."""
        return tuple(dot(self.field, x, c) for c in self.columns())

    def stack(self, rows: Iterable[Sequence[int]]) -> "MatrixGF":
        return MatrixGF.from_rows(self.field, list(self.entries) + [tuple(r) for r in rows], self.ncols)

    def rank(self) -> int:
        return rref(self)[1]

    def to_text(self) -> str:
        head = f"q= {self.field.notation} {self.nrows} {self.ncols} {self.field.modulus_str()}"
        return "\n".join([head] + [" ".join(str(x) for x in r) for r in self.entries]) + "\n"


def dot(field: FieldSpec, a: Sequence[int], b: Sequence[int]) -> int:
    s = 0
    for x, y in zip(a, b):
        if x and y:
            s = field.add(s, field.mul(x, y))
    return s


def rref(A: MatrixGF) -> tuple[MatrixGF, int, tuple[int, ...]]:
    """Reduced row echelon form, rank and pivot columns of ``A``."""
    F = A.field
    rows = [list(r) for r in A.entries]
    pivots = []
    lead = 0
    for col in range(A.ncols):
        if lead == len(rows):
            break
        piv = next((i for i in range(lead, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        c = F.inv(rows[lead][col])
        if c != 1:
            rows[lead] = [F.mul(c, x) for x in rows[lead]]
        pr = rows[lead]
        for i in range(len(rows)):
            f = rows[i][col]
            if i != lead and f:
                nf = F.neg(f)
                rows[i] = [F.add(x, F.mul(nf, y)) if y else x for x, y in zip(rows[i], pr)]
        pivots.append(col)
        lead += 1
    return MatrixGF(F, tuple(tuple(r) for r in rows), A.ncols), lead, tuple(pivots)


def rank(A: MatrixGF) -> int:
    return rref(A)[1]


def nullspace(A: MatrixGF) -> MatrixGF:
    """RREF basis of ``{x : A x^T = 0}``."""
    F = A.field
    R, r, pivots = rref(A)
    free = [j for j in range(A.ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * A.ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R.entries[i][f])
        basis.append(v)
    N = MatrixGF(F, tuple(tuple(v) for v in basis), A.ncols)
    return rref(N)[0] if basis else N


def solve_left(A: MatrixGF, b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Some ``x`` with ``x @ A == b``, or None when ``b`` is outside the row space."""
    F = A.field
    # x A = b  <=>  A^T x^T = b^T; row-reduce the augmented matrix [A^T | b^T]
    aug = MatrixGF(F, tuple(tuple(c) + (bj,) for c, bj in zip(A.columns(), b)), A.nrows + 1)
    R, _, pivots = rref(aug)
    if A.nrows in pivots:
        return None
    x = [0] * A.nrows
    for i, pc in enumerate(pivots):
        x[pc] = R.entries[i][A.nrows]
    return tuple(x)


def in_span(basis: MatrixGF, v: Sequence[int]) -> bool:
    """Rank test: adding ``v`` to ``basis`` does not raise the rank."""
    r = rank(basis) if basis.nrows else 0
    return rank(basis.stack([v])) == r


@dataclass(frozen=True)
class SubspaceHandle:
    """An r-dimensional subspace of GF(q)^k given by its RREF basis."""

    basis: MatrixGF
    pivots: tuple[int, ...]

    @property
    def r(self) -> int:
        return self.basis.nrows

    @property
    def k(self) -> int:
        return self.basis.ncols

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @classmethod
    def from_basis(cls, basis: MatrixGF) -> "SubspaceHandle":
        R, r, pivots = rref(basis)
        return cls(MatrixGF(R.field, R.entries[:r], R.ncols), pivots)

    def contains(self, v: Sequence[int]) -> bool:
        return in_span(self.basis, v)


def _free_slots(k: int, pivots: Sequence[int]) -> list[tuple[int, int]]:
    pset = set(pivots)
    return [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, k) if j not in pset]


def subspaces_with_pivots(field: FieldSpec, k: int, pivots: Sequence[int]) -> Iterator[SubspaceHandle]:
    """All subspaces whose RREF has the given pivot columns."""
    pivots = tuple(pivots)
    slots = _free_slots(k, pivots)
    for vals in product(range(field.order), repeat=len(slots)):
        rows = [[0] * k for _ in pivots]
        for i, p in enumerate(pivots):
            rows[i][p] = 1
        for (i, j), v in zip(slots, vals):
            rows[i][j] = v
        yield SubspaceHandle(MatrixGF(field, tuple(tuple(r) for r in rows), k), pivots)


def enumerate_subspaces(field: FieldSpec, k: int, r: int) -> Iterator[SubspaceHandle]:
    """Every r-dimensional subspace of GF(q)^k exactly once, as canonical RREF.

    Ordered lexicographically by pivot set, then by the free entries.
    """
    if r < 0 or r > k:
        raise ValueError(f"subspace dimension {r} outside [0, {k}]")
    for pivots in combinations(range(k), r):
        yield from subspaces_with_pivots(field, k, pivots)


def read_matrix(text: str) -> MatrixGF:
    """Parse the matrix text format.

    First line ``q= <field> <rows> <cols> [modulus]``, then one row per line
    of space-separated element indices.  Blank lines and ``#`` comments are
    ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].replace("q=", "q= ", 1).split()
    if not head or head[0] != "q=" or len(head) not in (4, 5):
        raise ValueError(f"bad matrix header {lines[0]!r}")
    field = parse_field(head[1], head[4] if len(head) == 5 else None)
    nrows, ncols = int(head[2]), int(head[3])
    body = [[int(t) for t in ln.split()] for ln in lines[1:]]
    if len(body) != nrows:
        raise ValueError(f"header says {nrows} rows, found {len(body)}")
    return MatrixGF.from_rows(field, body, ncols)
