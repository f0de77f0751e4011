"""Projective systems and checks on the shape of subcode and word supports.

A coordinate lies outside the support of a subcode exactly when its column
point lies in the codimension-r subspace Pi attached to the subcode.  For
the Simplex code these complements are full projective subspaces; for the
first-order Reed-Muller code they are empty or full affine subspaces.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .codes import LinearCode, subcode_support, tower
from .errors import VerificationError
from .gf import FieldSpec, to_digits
from .linalg import (MatrixGF, SubspaceHandle, enumerate_subspaces, in_span,
                     nullspace, rank, rref, solve_left)


def canonical_point(F: FieldSpec, v: Sequence[int]) -> tuple[int, ...]:
    """Scale ``v`` so its first nonzero coordinate is 1."""
    lead = next((x for x in v if x), 0)
    if lead == 0:
        raise ValueError("the zero vector is not a projective point")
    if lead == 1:
        return tuple(v)
    c = F.inv(lead)
    return tuple(F.mul(c, x) for x in v)


@dataclass(frozen=True)
class ProjectiveSystem:
    field: FieldSpec
    k: int
    points: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.points)

    def multiplicities(self) -> Counter:
        return Counter(self.points)

    def indices_in(self, pi: MatrixGF) -> frozenset[int]:
        """Columns whose point lies in the span of ``pi``."""
        return frozenset(i for i, P in enumerate(self.points) if in_span(pi, P))


@lru_cache(maxsize=64)
def projective_system(code: LinearCode) -> ProjectiveSystem:
    cols = code.G.columns()
    for j, c in enumerate(cols):
        if not any(c):
            raise ValueError(f"column {j} is zero; the code is degenerate")
    points = tuple(canonical_point(code.field, c) for c in cols)
    if code.k and rank(MatrixGF(code.field, points, code.k)) != code.k:
        raise VerificationError("points lie in a hyperplane")
    return ProjectiveSystem(code.field, code.k, points)


def subcode_to_subspace(code: LinearCode, handle: SubspaceHandle) -> MatrixGF:
    """Basis of the codimension-r subspace Pi: the nullspace of the handle basis."""
    if handle.k != code.k:
        raise ValueError(f"handle lives in GF(q)^{handle.k}, code has dimension {code.k}")
    if handle.r == 0:
        return MatrixGF.identity(code.field, code.k)
    return nullspace(handle.basis)


def is_affine_subspace(F: FieldSpec, points: Sequence[Sequence[int]], dim: int) -> bool:
    """``points`` all have first coordinate 1, number q^dim, and their
    differences span a dim-dimensional space; together this forces them to be
    every point of one affine subspace of AG(s-1, q)."""
    points = list(points)
    if len(points) != F.order ** dim:
        return False
    if any(P[0] != 1 for P in points):
        return False
    base = points[0]
    diffs = [tuple(F.sub(a, b) for a, b in zip(P, base)) for P in points[1:]]
    if not diffs:
        return dim == 0
    return rank(MatrixGF(F, tuple(diffs), len(base))) == dim


@dataclass
class SupportReport:
    passed: bool
    r: int
    support: frozenset
    complement: tuple
    case: str = ""
    reason: str = ""
    witness: Optional[int] = None

    @property
    def weight(self) -> int:
        return len(self.support)

    def to_json(self) -> dict:
        return {"passed": self.passed, "r": self.r, "weight": self.weight,
                "complement": list(self.complement), "case": self.case,
                "reason": self.reason, "witness": self.witness}


def _complement_check(code, system, pi, supp):
    """Check that i lies outside supp(D) iff P_i in Pi.  Returns a witness or None."""
    inside = system.indices_in(pi)
    for i in range(code.n):
        if (i in inside) == (i in supp):
            return i
    return None


def _family_check(code, system, pi, r, complement):
    """Family-specific shape of a codimension-r complement: (ok, case, reason)."""
    fam = code.family
    F = code.field
    if fam is None:
        return True, "", ""
    q, s = fam.q, fam.s
    if fam.kind == "simplex":
        expect = (q ** (s - r) - 1) // (q - 1)
        if len(complement) != expect:
            return False, "projective", f"complement has {len(complement)} points, expected {expect}"
        return True, "projective", ""
    # RM1: H is X_1 = 0; Pi inside H means no points of the system in Pi
    in_h = all(v[0] == 0 for v in pi.entries)
    if not complement:
        if not in_h:
            return False, "full", "support is everything but Pi is not inside H"
        return True, "full", ""
    dim = s - 1 - r
    pts = [system.points[i] for i in complement]
    if in_h or not is_affine_subspace(F, pts, dim):
        return False, "affine", f"complement is not an affine subspace of dimension {dim}"
    return True, "affine", ""


def verify_support_complement(code: LinearCode, handle: SubspaceHandle) -> SupportReport:
    system = projective_system(code)
    supp, _ = subcode_support(code, handle)
    pi = subcode_to_subspace(code, handle)
    complement = tuple(i for i in range(code.n) if i not in supp)
    witness = _complement_check(code, system, pi, supp)
    if witness is not None:
        return SupportReport(False, handle.r, supp, complement, reason="P_i in Pi does not match i outside supp(D)",
                             witness=witness)
    ok, case, reason = _family_check(code, system, pi, handle.r, complement)
    return SupportReport(ok, handle.r, supp, complement, case, reason)


@dataclass
class SweepResult:
    r: int
    handles: int = 0
    failures: list = field(default_factory=list)
    cases: Counter = field(default_factory=Counter)
    complement_sizes: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return not self.failures


def sweep_supports(code: LinearCode, r: int) -> SweepResult:
    """Run :func:`verify_support_complement` on every r-dimensional subcode."""
    out = SweepResult(r)
    for handle in enumerate_subspaces(code.field, code.k, r):
        rep = verify_support_complement(code, handle)
        out.handles += 1
        out.cases[rep.case] += 1
        out.complement_sizes[len(rep.complement)] += 1
        if not rep.passed:
            out.failures.append((handle, rep))
    return out


def coordinate_rows(code: LinearCode, m: int, word: Sequence[int]) -> MatrixGF:
    """The m x n base-field matrix of tower coordinates of ``word``."""
    Q = code.field.order
    digits = [to_digits(x, Q, m) for x in word]
    rows = tuple(tuple(d[i] for d in digits) for i in range(m))
    return MatrixGF(code.field, rows, code.n)


@dataclass
class ExtensionReport:
    passed: bool
    weight: int
    rank: int
    complement: tuple
    design_checked: bool = False
    reason: str = ""

    def to_json(self) -> dict:
        return {"passed": self.passed, "weight": self.weight, "rank": self.rank,
                "complement": list(self.complement), "design_checked": self.design_checked,
                "reason": self.reason}


def design_weight(code: LinearCode, m: int) -> Optional[int]:
    """Weight whose supports have a full codimension-m subspace as complement."""
    fam = code.family
    if fam is None or m > fam.s:
        return None
    q, s = fam.q, fam.s
    if fam.kind == "simplex":
        return (q ** s - q ** (s - m)) // (q - 1)
    if m >= s:
        return None
    return q ** (s - 1) - q ** (s - 1 - m)


def verify_extension_word_support(code: LinearCode, m: int, word: Sequence[int]) -> ExtensionReport:
    """Expand a word of the extension code into base-field rows and check
    that its support is that of the subcode D they span; at the design weight
    additionally check the complement is a full codimension-m subspace."""
    big = tower(code.field, m)
    if len(word) != code.n or any(not 0 <= x < big.order for x in word):
        raise ValueError("word is not a vector over the extension field")
    M = coordinate_rows(code, m, word)
    msgs = []
    for row in M.entries:
        x = solve_left(code.G, row)
        if x is None:
            raise ValueError("word is not in the extension code")
        msgs.append(x)
    wsupp = frozenset(i for i, x in enumerate(word) if x)
    dsupp = frozenset(j for j in range(code.n) if any(r[j] for r in M.entries))
    R, rD, _ = rref(M)
    complement = tuple(i for i in range(code.n) if i not in wsupp)
    if wsupp != dsupp:
        return ExtensionReport(False, len(wsupp), rD, complement, reason="supp(c) != supp(D)")
    handle = SubspaceHandle.from_basis(MatrixGF(code.field, tuple(msgs), code.k))
    system = projective_system(code)
    pi = subcode_to_subspace(code, handle)
    witness = _complement_check(code, system, pi, dsupp)
    if witness is not None:
        return ExtensionReport(False, len(wsupp), rD, complement,
                               reason=f"point {witness} breaks the Pi / support correspondence")
    if design_weight(code, m) != len(wsupp):
        return ExtensionReport(True, len(wsupp), rD, complement)
    if handle.r != m:
        return ExtensionReport(False, len(wsupp), rD, complement, True,
                               reason=f"design-weight word spans a {handle.r}-dim subcode, expected {m}")
    ok, case, reason = _family_check(code, system, pi, m, complement)
    if ok and case == "full":
        ok, reason = False, "design-weight word has full support"
    return ExtensionReport(ok, len(wsupp), rD, complement, True, reason)
