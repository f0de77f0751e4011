"""Finite fields GF(p^k) and tower extensions, elements encoded as integers.

An element is an integer index whose base-``c`` digits (``c`` the size of
the coefficient field, ascending degree) are the coefficients of its
polynomial representative.  For a flat field ``GF(p^k)`` the coefficient
field is ``GF(p)``; for a tower ``F[y]/(g(y))`` it is the base field ``F``.
Since base-field indices are themselves base-``p`` digit strings, every
index in every field is a plain base-``p`` digit string, so addition is
always digitwise mod ``p`` and the embedding of a base field into a tower
is the identity on indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import FieldError

LOG_TABLE_LIMIT = 1 << 16
ADD_TABLE_LIMIT = 256
MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**k``; raise FieldError if it is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    k = 0
    r = q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, k


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def to_digits(x: int, base: int, length: int) -> list[int]:
    ds = []
    for _ in range(length):
        x, d = divmod(x, base)
        ds.append(d)
    return ds


def from_digits(ds: Sequence[int], base: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * base + d
    return x


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k), or a degree-``degree`` extension of ``base``.

    ``modulus`` is the monic defining polynomial over the coefficient field
    (GF(p) when ``base`` is None), ascending coefficients given as indices.
    Construct through :func:`make_field` / :func:`extend_field`; the bare
    constructor trusts its arguments.
    """

    p: int
    degree: int
    modulus: tuple[int, ...]
    base: Optional["FieldSpec"] = None

    # -- shape -------------------------------------------------------------

    @property
    def coeff_order(self) -> int:
        return self.p if self.base is None else self.base.order

    @cached_property
    def order(self) -> int:
        return self.coeff_order ** self.degree

    @property
    def q(self) -> int:
        return self.order

    @property
    def k(self) -> int:
        """Degree over the prime field."""
        return self.degree * (1 if self.base is None else self.base.k)

    @property
    def is_tower(self) -> bool:
        return self.base is not None

    @property
    def is_prime_field(self) -> bool:
        return self.base is None and self.degree == 1

    @cached_property
    def coeff_field(self) -> "FieldSpec":
        if self.base is not None:
            return self.base
        return prime_field(self.p)

    @property
    def notation(self) -> str:
        if self.base is None:
            return f"{self.p}^{self.degree}"
        return f"{self.base.notation}:{self.degree}"

    def modulus_str(self) -> str:
        return ",".join(str(c) for c in self.modulus)

    def __repr__(self) -> str:
        return f"FieldSpec({self.notation}, modulus={self.modulus_str()})"

    def elements(self) -> range:
        return range(self.order)

    def element(self, index: int) -> "FieldElement":
        return FieldElement(self, index)

    def coefficients(self, x: int) -> list[int]:
        """Polynomial coefficients of ``x`` over the coefficient field."""
        return to_digits(x, self.coeff_order, self.degree)

    def _check(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise FieldError(f"{x} is not an element of GF({self.order})")

    # -- arithmetic on indices --------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.is_prime_field:
            return (a + b) % self.p
        table = self._add_table
        if table is not None:
            return table[a][b]
        return self._digit_add(a, b)

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * scale
            scale *= p
        return out

    @cached_property
    def _add_table(self):
        if self.order > ADD_TABLE_LIMIT:
            return None
        return [[self._digit_add(a, b) for b in range(self.order)] for a in range(self.order)]

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        out, scale = 0, 1
        while a:
            a, d = divmod(a, p)
            out += ((p - d) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.is_prime_field:
            return a * b % self.p
        tables = self._log_tables
        if tables is None:
            return self._poly_mulmod(a, b)
        exp, log = tables
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative inverse")
        if self.is_prime_field:
            return pow(a, -1, self.p)
        tables = self._log_tables
        if tables is None:
            return self.pow(a, self.order - 2)
        exp, log = tables
        return exp[(self.order - 1) - log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def _poly_mulmod(self, a: int, b: int) -> int:
        cf = self.coeff_field
        d = self.degree
        xa = self.coefficients(a)
        xb = self.coefficients(b)
        prod = [0] * (2 * d - 1)
        for i, u in enumerate(xa):
            if u == 0:
                continue
            for j, v in enumerate(xb):
                if v:
                    prod[i + j] = cf.add(prod[i + j], cf.mul(u, v))
        mod = self.modulus
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c == 0:
                continue
            for j in range(d):
                prod[i - d + j] = cf.sub(prod[i - d + j], cf.mul(c, mod[j]))
            prod[i] = 0
        return from_digits(prod[:d], self.coeff_order)

    @cached_property
    def primitive_element(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        factors = _prime_factors(n)
        for g in range(2, self.order):
            if all(self._slow_pow(g, n // f) != 1 for f in factors):
                return g
        raise FieldError(f"no primitive element found in {self!r}; modulus not irreducible?")

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._poly_mulmod(result, a)
            a = self._poly_mulmod(a, a)
            e >>= 1
        return result

    @cached_property
    def _log_tables(self):
        if self.is_prime_field or self.order > LOG_TABLE_LIMIT:
            return None
        n = self.order - 1
        g = self.primitive_element
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._poly_mulmod(x, g)
        if x != 1:
            raise FieldError(f"{g} is not primitive in {self!r}")
        exp[n:] = exp[:n]
        return exp, log

    # -- dense tables for vectorized consumers -----------------------------

    def digit_matrix(self) -> np.ndarray:
        """(q, k) array of base-p digits of every element."""
        idx = np.arange(self.order, dtype=np.int64)
        cols = []
        for _ in range(self.k):
            cols.append(idx % self.p)
            idx //= self.p
        return np.stack(cols, axis=1) if cols else np.zeros((self.order, 0), np.int64)

    def add_table(self) -> np.ndarray:
        """(q, q) addition table; computed once per field, treat as read-only."""
        return self._np_add_table

    @cached_property
    def _np_add_table(self) -> np.ndarray:
        d = self.digit_matrix()
        s = (d[:, None, :] + d[None, :, :]) % self.p
        w = self.p ** np.arange(self.k, dtype=np.int64)
        table = (s * w).sum(axis=2).astype(np.int32)
        table.flags.writeable = False
        return table

    def mul_table(self) -> np.ndarray:
        n = self.order
        t = np.zeros((n, n), dtype=np.int64)
        for a in range(1, n):
            for b in range(a, n):
                t[a, b] = t[b, a] = self.mul(a, b)
        return t


@dataclass(frozen=True, eq=False)
class FieldElement:
    """An element bound to its field, with operator overloads.

    Mixing elements of different fields raises FieldError.
    """

    field: FieldSpec
    index: int

    def __post_init__(self):
        self.field._check(self.index)

    def _same(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed-field operands: {self.field!r} and {other.field!r}")
            return other.index
        if isinstance(other, int):
            return self.field.element(other % self.field.order if self.field.is_prime_field else other).index
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.index, self._same(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.index, self._same(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, self._same(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.index, self._same(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.index))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self.index == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.index))

    def __bool__(self):
        return self.index != 0

    def __int__(self):
        return self.index

    def __repr__(self):
        return f"{self.index}@GF({self.field.order})"


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def neg(x: FieldElement) -> FieldElement:
    return -x


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def power(x: FieldElement, e: int) -> FieldElement:
    return x ** e


# -- polynomials over a field (coefficient lists, ascending, element indices) --


def _poly_rem(field: FieldSpec, a: list[int], b: Sequence[int]) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``b``."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        for j in range(db + 1):
            a[i - db + j] = field.sub(a[i - db + j], field.mul(c, b[j]))
    return a[:db]


def is_irreducible(field: FieldSpec, poly: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    d = len(poly) - 1
    if d < 1:
        return False
    if poly[-1] != 1:
        raise FieldError("irreducibility test expects a monic polynomial")
    if d == 1:
        return True
    q = field.order
    for e in range(1, d // 2 + 1):
        for low in product(range(q), repeat=e):
            if not any(_poly_rem(field, poly, (*low, 1))):
                return False
    return True


def _monic_candidates(field: FieldSpec, d: int) -> Iterator[tuple[int, ...]]:
    # ascending index order of the low coefficients == lex order from the top
    q = field.order
    for low in range(q ** d):
        yield (*to_digits(low, q, d), 1)


def find_irreducible(field: FieldSpec, d: int) -> tuple[int, ...]:
    """Smallest-index monic irreducible polynomial of degree ``d`` over ``field``.

    Polynomials are ordered by the integer whose base-q digits are their
    ascending coefficients, so the comparison runs from the top degree down.
    """
    if d < 1:
        raise FieldError(f"degree must be >= 1, got {d}")
    for cand in _monic_candidates(field, d):
        if is_irreducible(field, cand):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {d} over {field!r}")


_PRIME_FIELDS: dict[int, FieldSpec] = {}


def prime_field(p: int) -> FieldSpec:
    if p not in _PRIME_FIELDS:
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        _PRIME_FIELDS[p] = FieldSpec(p, 1, (0, 1))
    return _PRIME_FIELDS[p]


def _check_order(order: int) -> None:
    if order > MAX_ORDER:
        raise FieldError(f"fields larger than 2^20 are not supported (got {order})")


def make_field(p: int, k: int = 1) -> FieldSpec:
    """GF(p^k) with the smallest monic irreducible modulus of degree k."""
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    _check_order(p ** k)
    if k == 1:
        return prime_field(p)
    return FieldSpec(p, k, find_irreducible(prime_field(p), k))


def field_with_modulus(p: int, modulus: Sequence[int]) -> FieldSpec:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    modulus = tuple(int(c) for c in modulus)
    if any(not 0 <= c < p for c in modulus):
        raise FieldError(f"modulus coefficients must lie in [0, {p})")
    if not is_irreducible(prime_field(p), modulus):
        raise FieldError(f"modulus {modulus} is not irreducible over GF({p})")
    _check_order(p ** (len(modulus) - 1))
    return FieldSpec(p, len(modulus) - 1, modulus)


def extend_field(base: FieldSpec, m: int, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Degree-m tower over ``base``; base elements embed with unchanged index."""
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    _check_order(base.order ** m)
    if modulus is None:
        modulus = find_irreducible(base, m)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or not is_irreducible(base, modulus):
            raise FieldError(f"modulus {modulus} is not a monic irreducible of degree {m} over {base!r}")
    return FieldSpec(base.p, m, tuple(modulus), base)


def is_subfield(small: FieldSpec, big: FieldSpec) -> bool:
    f = big
    while f is not None:
        if f == small:
            return True
        f = f.base
    return False


def embed(small: FieldSpec, big: FieldSpec, x: int) -> int:
    """Image of ``x`` under the inclusion of ``small`` into the tower ``big``."""
    if not is_subfield(small, big):
        raise FieldError(f"{big!r} is not a tower over {small!r}")
    small._check(x)
    return x


_NOTATION = re.compile(r"^\s*(\d+)(?:\^(\d+))?((?::\d+)*)\s*$")


def parse_field(text: str, modulus: Optional[str] = None) -> FieldSpec:
    """Parse ``p^k``, a prime power ``q``, or a tower ``p^k:m[:m2...]``.

    ``modulus`` (comma-separated ascending coefficients) overrides the
    default modulus of the outermost extension.
    """
    m = _NOTATION.match(text)
    if not m:
        raise FieldError(f"cannot parse field notation {text!r}")
    a = int(m.group(1))
    if m.group(2) is not None:
        p, k = a, int(m.group(2))
    else:
        p, k = prime_power(a)
    tower = [int(t) for t in m.group(3).split(":") if t]
    coeffs = None
    if modulus:
        coeffs = [int(c) for c in modulus.split(",")]
    if not tower:
        if coeffs is None:
            return make_field(p, k)
        field = field_with_modulus(p, coeffs)
        if field.degree != k:
            raise FieldError(f"modulus degree {field.degree} does not match {text!r}")
        return field
    field = make_field(p, k)
    for i, deg in enumerate(tower):
        last = i == len(tower) - 1
        field = extend_field(field, deg, coeffs if last else None)
    return field
