"""Exact q-analog counting and integer polynomials in T."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InterpolationError


def gaussian_binomial(s: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of GF(q)^s."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if r < 0 or r > s:
        return 0
    r = min(r, s - r)
    num = 1
    for i in range(r):
        # the running product is [s, i+1]_q, always an integer
        num = num * (q ** (s - i) - 1) // (q ** (i + 1) - 1)
    return num


class TPolynomial:
    """Integer polynomial in T, ascending coefficients, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> "TPolynomial":
        return cls([c])

    @classmethod
    def linear_root(cls, root: int) -> "TPolynomial":
        return cls([-root, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, TPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == TPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return poly_add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_add(self, poly_scale(_lift(other), -1))

    def __rsub__(self, other):
        return poly_add(_lift(other), poly_scale(self, -1))

    def __neg__(self):
        return poly_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __call__(self, t: int) -> int:
        return poly_eval(self, t)

    def __repr__(self):
        return f"TPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_expanded(self)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "TPolynomial":
        return cls(int(c) for c in data)


def _lift(x) -> TPolynomial:
    return x if isinstance(x, TPolynomial) else TPolynomial([x])


def poly_add(a: TPolynomial, b: TPolynomial) -> TPolynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    ac = a.coeffs + (0,) * (n - len(a.coeffs))
    bc = b.coeffs + (0,) * (n - len(b.coeffs))
    return TPolynomial(x + y for x, y in zip(ac, bc))


def poly_scale(a: TPolynomial, c: int) -> TPolynomial:
    return TPolynomial(c * x for x in a.coeffs)


def poly_mul(a: TPolynomial, b: TPolynomial) -> TPolynomial:
    if a.is_zero() or b.is_zero():
        return TPolynomial()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return TPolynomial(out)


def poly_eval(a: TPolynomial, t: int) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * t + c
    return acc


def poly_divmod_linear(a: TPolynomial, root: int) -> tuple[TPolynomial, int]:
    """Synthetic division by ``T - root``: quotient and remainder."""
    if a.is_zero():
        return TPolynomial(), 0
    out = []
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * root + c
        out.append(acc)
    rem = out.pop()
    return TPolynomial(reversed(out)), rem


def falling_product(r: int, q: int) -> TPolynomial:
    """prod_{j<r} (T - q^j)."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    out = TPolynomial([1])
    for j in range(r):
        out = poly_mul(out, TPolynomial.linear_root(q ** j))
    return out


def lagrange_interpolate(nodes: Sequence[tuple[int, int]]) -> TPolynomial:
    """Unique polynomial of degree < len(nodes) through ``nodes``.

    Exact rational arithmetic; raises InterpolationError unless every
    coefficient of the result is an integer.
    """
    ts = [int(t) for t, _ in nodes]
    if len(set(ts)) != len(ts):
        raise ValueError("interpolation nodes must be distinct")
    n = len(nodes)
    total = [Fraction(0)] * n
    for i, (ti, vi) in enumerate(nodes):
        if vi == 0:
            continue
        basis = [Fraction(1)]
        denom = 1
        for j, tj in enumerate(ts):
            if j == i:
                continue
            # basis *= (T - tj)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d + 1] += c
                nxt[d] -= c * tj
            basis = nxt
            denom *= ti - tj
        scale = Fraction(vi, denom)
        for d, c in enumerate(basis):
            total[d] += c * scale
    bad = [c for c in total if c.denominator != 1]
    if bad:
        raise InterpolationError(f"interpolated polynomial has non-integer coefficient {bad[0]}")
    return TPolynomial(int(c) for c in total)


def _term(c: int, d: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if d == 0:
        return f"{sign}{a}"
    coef = "" if a == 1 else str(a)
    var = "T" if d == 1 else f"T^{d}"
    return f"{sign}{coef}{var}"


def format_expanded(a: TPolynomial) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for d in range(a.degree, -1, -1):
        c = a.coeffs[d]
        if c:
            parts.append(_term(c, d, not parts))
    return "".join(parts)


def format_factored(a: TPolynomial, q: int) -> str:
    """Pull out factors ``T - q^j`` (j = 0, 1, ...) and print the rest.

    ``(T-1)(T-2)(T-4)``, ``7(T-1)``, ``(T-1)(T^3-7T^2+21T-21)``.
    """
    if a.is_zero() or a.degree == 0:
        return format_expanded(a)
    roots = []
    rest = a
    j = 0
    while rest.degree > 0:
        root = q ** j
        if rest.coeffs[0] == 0 or root > abs(rest.coeffs[0]):
            # an integer root divides the nonzero constant term
            break
        quo, rem = poly_divmod_linear(rest, root)
        if rem == 0:
            roots.append(root)
            rest = quo
        else:
            j += 1
    if not roots:
        return format_expanded(a)
    factors = "".join(f"(T-{r})" for r in roots)
    if rest.degree == 0:
        c = rest.coeffs[0]
        if c == 1:
            return factors
        if c == -1:
            return "-" + factors
        return f"{c}{factors}"
    return f"{factors}({format_expanded(rest)})"
