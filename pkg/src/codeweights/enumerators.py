"""Generalized (GWE) and extended (EWE) weight enumerators and conversions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .codes import (LinearCode, WeightVector, default_budget, extend_code,
                    generalized_weight_distribution, weight_distribution)
from .errors import BudgetExceeded, InterpolationError
from .qcombinatorics import (TPolynomial, falling_product, format_factored,
                             gaussian_binomial, lagrange_interpolate, poly_add,
                             poly_eval, poly_scale)


@dataclass(frozen=True)
class GWETable:
    """``rows[r][w]`` = number of r-dimensional subcodes of weight w."""

    n: int
    k: int
    q: int
    rows: tuple[WeightVector, ...]

    def __post_init__(self):
        if len(self.rows) != self.k + 1:
            raise ValueError(f"expected {self.k + 1} rows, got {len(self.rows)}")
        for row in self.rows:
            if len(row) != self.n + 1:
                raise ValueError(f"row has length {len(row)}, expected {self.n + 1}")

    def check(self) -> None:
        """Raise ValueError unless the structural invariants hold."""
        if list(self.rows[0]) != [1] + [0] * self.n:
            raise ValueError("row r=0 must be the single zero subcode")
        for r, row in enumerate(self.rows):
            if r and row[0]:
                raise ValueError(f"row r={r} has a weight-0 subcode")
            if row.total() != gaussian_binomial(self.k, r, self.q):
                raise ValueError(f"row r={r} sums to {row.total()}, not [{self.k} {r}]_{self.q}")

    def to_json(self) -> dict:
        return {"kind": "gwe", "n": self.n, "k": self.k, "q": self.q,
                "A": [row.to_json() for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "GWETable":
        return cls(int(data["n"]), int(data["k"]), int(data["q"]),
                   tuple(WeightVector(int(c) for c in row) for row in data["A"]))

    def format(self) -> str:
        lines = []
        for r, row in enumerate(self.rows):
            terms = ", ".join(f"{w}: {c}" for w, c in row.nonzero().items())
            lines.append(f"r={r}: {{{terms}}}")
        return "\n".join(lines)


@dataclass(frozen=True)
class EWETable:
    """``polys[w]`` = A_w(T), the count of weight-w words over GF(T)."""

    n: int
    k: int
    q: int
    polys: tuple[TPolynomial, ...]

    def __post_init__(self):
        if len(self.polys) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} polynomials, got {len(self.polys)}")

    def __getitem__(self, w) -> TPolynomial:
        return self.polys[w]

    def check(self) -> None:
        if self.polys[0] != TPolynomial([1]):
            raise ValueError("A_0(T) must be 1")
        for w, a in enumerate(self.polys):
            if a.degree > self.k:
                raise ValueError(f"A_{w}(T) has degree {a.degree} > k = {self.k}")
            if w and poly_eval(a, 1):
                raise ValueError(f"A_{w}(T) does not vanish at T = 1")

    def to_json(self) -> dict:
        return {"kind": "ewe", "n": self.n, "k": self.k, "q": self.q,
                "A": [a.to_json() for a in self.polys]}

    @classmethod
    def from_json(cls, data: dict) -> "EWETable":
        return cls(int(data["n"]), int(data["k"]), int(data["q"]),
                   tuple(TPolynomial.from_json(a) for a in data["A"]))

    def format(self) -> str:
        return "\n".join(f"A_{w}(T) = {format_factored(a, self.q)}" for w, a in enumerate(self.polys))


def dumps(table) -> str:
    """Canonical JSON text; equal tables give identical bytes."""
    return json.dumps(table.to_json(), sort_keys=True, separators=(",", ":"))


def loads(text: str):
    data = json.loads(text)
    return GWETable.from_json(data) if data.get("kind") == "gwe" else EWETable.from_json(data)


def gwe_compute(code: LinearCode, budget: Optional[int] = None) -> GWETable:
    rows = tuple(generalized_weight_distribution(code, r, budget) for r in range(code.k + 1))
    return GWETable(code.n, code.k, code.q, rows)


def ewe_from_gwe(g: GWETable) -> EWETable:
    """A_w(T) = sum_r prod_{j<r}(T - q^j) A^(r)_w."""
    falling = [falling_product(r, g.q) for r in range(g.k + 1)]
    polys = []
    for w in range(g.n + 1):
        acc = TPolynomial()
        for r in range(g.k + 1):
            if g.rows[r][w]:
                acc = poly_add(acc, poly_scale(falling[r], g.rows[r][w]))
        polys.append(acc)
    return EWETable(g.n, g.k, g.q, tuple(polys))


def gwe_from_ewe(e: EWETable) -> GWETable:
    """Invert :func:`ewe_from_gwe` by triangular solve at T = q^0 .. q^k.

    At T = q^m only the terms r <= m survive, so each A^(r)_w follows from
    A_w(q^r) and the already known lower terms; every division is checked.
    """
    q, k = e.q, e.k
    rows = [[0] * (e.n + 1) for _ in range(k + 1)]
    for w, a in enumerate(e.polys):
        if a.degree > k:
            raise InterpolationError(f"A_{w}(T) has degree {a.degree} > k = {k}")
        for r in range(k + 1):
            t = q ** r
            rest = poly_eval(a, t)
            for i in range(r):
                rest -= rows[i][w] * _falling_at(i, q, t)
            d = _falling_at(r, q, t)
            val, rem = divmod(rest, d)
            if rem or val < 0:
                raise InterpolationError(
                    f"A^({r})_{w} = {rest}/{d} is not a nonnegative integer; "
                    "input is not the EWE of a code")
            rows[r][w] = val
    return GWETable(e.n, k, q, tuple(WeightVector(row) for row in rows))


def _falling_at(r: int, q: int, t: int) -> int:
    out = 1
    for j in range(r):
        out *= t - q ** j
    return out


def extension_distributions(code: LinearCode, ms, budget: Optional[int] = None,
                            workers: int = 1) -> dict[int, WeightVector]:
    """Weight distributions of the extension codes over GF(q^m) for each m."""
    budget = default_budget() if budget is None else budget
    out = {}
    for m in ms:
        if m == 0:
            # a "field with one element" has only the zero word
            out[0] = WeightVector([1] + [0] * code.n)
            continue
        need = code.q ** (m * code.k)
        if need > budget:
            raise BudgetExceeded(need, budget)
        out[m] = weight_distribution(extend_code(code, m), budget, workers)
    return out


def ewe_by_interpolation(code: LinearCode, budget: Optional[int] = None, workers: int = 1) -> EWETable:
    """Count words in C over GF(q^m), m = 0..k, and interpolate each A_w."""
    dists = extension_distributions(code, range(code.k + 1), budget, workers)
    polys = []
    for w in range(code.n + 1):
        nodes = [(code.q ** m, dists[m][w]) for m in range(code.k + 1)]
        polys.append(lagrange_interpolate(nodes))
    return EWETable(code.n, code.k, code.q, tuple(polys))


def ewe_eval(e: EWETable, m: int) -> WeightVector:
    """Predicted weight distribution of the extension code over GF(q^m)."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    t = e.q ** m
    return WeightVector(poly_eval(a, t) for a in e.polys)
