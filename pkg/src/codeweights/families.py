"""Simplex and first-order Reed-Muller codes with their closed-form enumerators.

The formula functions are written out from the closed forms directly and
never call the enumeration engines, so they can serve as independent
oracles for them.
"""

from __future__ import annotations

from itertools import product

from .codes import FamilyId, LinearCode, WeightVector, code_from_matrix
from .enumerators import EWETable, GWETable
from .gf import FieldSpec, make_field, prime_power
from .linalg import MatrixGF
from .qcombinatorics import TPolynomial, gaussian_binomial, poly_mul


def field_for_q(q: int) -> FieldSpec:
    p, k = prime_power(q)
    return make_field(p, k)


def projective_points(field: FieldSpec, s: int) -> list[tuple[int, ...]]:
    """Canonical representatives (first nonzero coordinate 1) of PG(s-1, q),
    in lexicographic order of their index vectors."""
    return [v for v in product(range(field.order), repeat=s) if next((x for x in v if x), 0) == 1]


def simplex_code(field: FieldSpec, s: int) -> LinearCode:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    cols = projective_points(field, s)
    G = MatrixGF(field, tuple(zip(*cols)), len(cols))
    return code_from_matrix(field, G, FamilyId("simplex", field.order, s))


def rm1_code(field: FieldSpec, s: int) -> LinearCode:
    """All-one row on top of every vector of GF(q)^(s-1) as columns."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    cols = [(1, *v) for v in product(range(field.order), repeat=s - 1)]
    G = MatrixGF(field, tuple(zip(*cols)), len(cols))
    return code_from_matrix(field, G, FamilyId("rm1", field.order, s))


def family_code(kind: str, q: int, s: int) -> LinearCode:
    field = field_for_q(q)
    if kind == "simplex":
        return simplex_code(field, s)
    if kind == "rm1":
        return rm1_code(field, s)
    raise ValueError(f"unknown family {kind!r}")


def _table_rows(n, entries):
    rows = []
    for terms in entries:
        row = [0] * (n + 1)
        for w, c in terms:
            row[w] += c
        rows.append(WeightVector(row))
    return tuple(rows)


def simplex_gwe_formula(q: int, s: int) -> GWETable:
    n = (q ** s - 1) // (q - 1)
    entries = [[((q ** s - q ** (s - r)) // (q - 1), gaussian_binomial(s, r, q))] for r in range(s + 1)]
    return GWETable(n, s, q, _table_rows(n, entries))


def rm1_gwe_formula(q: int, s: int) -> GWETable:
    n = q ** (s - 1)
    entries = []
    for r in range(s + 1):
        if r == 0:
            entries.append([(0, 1)])
        elif r == s:
            entries.append([(n, 1)])
        else:
            entries.append([
                (n, gaussian_binomial(s - 1, r - 1, q)),
                (q ** (s - 1) - q ** (s - 1 - r), q ** r * gaussian_binomial(s - 1, r, q)),
            ])
    return GWETable(n, s, q, _table_rows(n, entries))


def _falling(r: int, q: int) -> TPolynomial:
    # expanded locally rather than shared with the conversion engine
    out = TPolynomial([1])
    for j in range(r):
        out = poly_mul(out, TPolynomial([-(q ** j), 1]))
    return out


def _ewe_from_terms(n, k, q, terms) -> EWETable:
    polys = [TPolynomial() for _ in range(n + 1)]
    for w, poly in terms:
        polys[w] = polys[w] + poly
    return EWETable(n, k, q, tuple(polys))


def simplex_ewe_formula(q: int, s: int) -> EWETable:
    """sum_{r=0}^{s} prod_{j<r}(T-q^j) [s r]_q X^{(q^{s-r}-1)/(q-1)} Y^{(q^s-q^{s-r})/(q-1)}."""
    n = (q ** s - 1) // (q - 1)
    terms = [((q ** s - q ** (s - r)) // (q - 1), _falling(r, q) * gaussian_binomial(s, r, q))
             for r in range(s + 1)]
    return _ewe_from_terms(n, s, q, terms)


def rm1_ewe_formula(q: int, s: int) -> EWETable:
    n = q ** (s - 1)
    terms = [(n, _falling(r, q) * gaussian_binomial(s - 1, r - 1, q)) for r in range(1, s + 1)]
    terms += [(q ** (s - 1) - q ** (s - 1 - r), _falling(r, q) * (q ** r * gaussian_binomial(s - 1, r, q)))
              for r in range(s)]
    return _ewe_from_terms(n, s, q, terms)


def gwe_formula(kind: str, q: int, s: int) -> GWETable:
    return {"simplex": simplex_gwe_formula, "rm1": rm1_gwe_formula}[kind](q, s)


def ewe_formula(kind: str, q: int, s: int) -> EWETable:
    return {"simplex": simplex_ewe_formula, "rm1": rm1_ewe_formula}[kind](q, s)
