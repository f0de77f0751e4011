import random

import pytest

from codeweights.codes import code_from_matrix, extend_code, weight_distribution
from codeweights.enumerators import (EWETable, GWETable, dumps, ewe_by_interpolation, ewe_eval,
                                     ewe_from_gwe, gwe_compute, gwe_from_ewe, loads)
from codeweights.errors import InterpolationError
from codeweights.families import rm1_code
from codeweights.gf import make_field
from codeweights.linalg import MatrixGF
from codeweights.qcombinatorics import TPolynomial, poly_mul

from conftest import random_code

T1 = TPolynomial([-1, 1])
T2 = TPolynomial([-2, 1])
T4 = TPolynomial([-4, 1])
Z = TPolynomial()

SIMPLEX23 = [TPolynomial([1]), Z, Z, Z, 7 * T1, Z, 7 * poly_mul(T1, T2), poly_mul(poly_mul(T1, T2), T4)]
RM13 = [TPolynomial([1]), Z, Z, Z, 14 * T1, Z, 28 * poly_mul(T1, T2), 8 * poly_mul(poly_mul(T1, T2), T4),
        poly_mul(T1, TPolynomial([-21, 21, -7, 1]))]


def rows_of(g):
    return [g.rows[r].nonzero() for r in range(g.k + 1)]


def test_gwe_compute_golden(s23, rm24):
    assert rows_of(gwe_compute(s23)) == [{0: 1}, {4: 7}, {6: 7}, {7: 1}]
    g = gwe_compute(rm24)
    assert g.rows[1].nonzero() == {4: 14, 8: 1}
    assert g.rows[4].nonzero() == {8: 1}


def test_zero_dimensional(gf2):
    zero = code_from_matrix(gf2, MatrixGF(gf2, (), 2))
    g = gwe_compute(zero)
    assert rows_of(g) == [{0: 1}]
    e = ewe_from_gwe(g)
    assert e.polys[0] == TPolynomial([1]) and all(p.is_zero() for p in e.polys[1:])
    assert ewe_by_interpolation(zero) == e
    assert gwe_from_ewe(e) == g


def test_ewe_from_gwe_golden(s23, rm24):
    assert list(ewe_from_gwe(gwe_compute(s23)).polys) == SIMPLEX23
    assert list(ewe_from_gwe(gwe_compute(rm24)).polys) == RM13


def test_gwe_from_ewe(s23, rm24):
    e = EWETable(7, 3, 2, tuple(SIMPLEX23))
    assert gwe_from_ewe(e) == gwe_compute(s23)
    g = gwe_from_ewe(EWETable(8, 4, 2, tuple(RM13)))
    assert g.rows[2][6] == 28
    assert rows_of(gwe_from_ewe(EWETable(0, 0, 2, (TPolynomial([1]),)))) == [{0: 1}]


def test_gwe_from_ewe_rejects_garbage():
    # negative subcode count
    bad = EWETable(1, 1, 2, (TPolynomial([1]), TPolynomial([1, -1])))
    with pytest.raises(InterpolationError):
        gwe_from_ewe(bad)
    # degree above k
    bad = EWETable(1, 1, 2, (TPolynomial([1]), TPolynomial([0, -1, 1])))
    with pytest.raises(InterpolationError):
        gwe_from_ewe(bad)


def test_interpolation_golden(s23, rm24, gf2):
    assert list(ewe_by_interpolation(s23).polys) == SIMPLEX23
    assert ewe_by_interpolation(rm24)[7] == 8 * poly_mul(poly_mul(T1, T2), T4)
    rep = code_from_matrix(gf2, [[1]])
    assert list(ewe_by_interpolation(rep).polys) == [TPolynomial([1]), T1]


def test_ewe_eval(s23, rm24):
    e = ewe_from_gwe(gwe_compute(s23))
    assert ewe_eval(e, 2) == [1, 0, 0, 0, 21, 0, 42, 0]
    assert ewe_eval(e, 0) == [1] + [0] * 7
    r = ewe_from_gwe(gwe_compute(rm24))
    v = ewe_eval(r, 3)
    assert v[7] == 1344 and v[8] == 1477 and v.total() == 8 ** 4
    assert weight_distribution(extend_code(rm24, 3)) == v


CORPUS = [random_code(random.Random(100 + i), q, n, k)
          for i, (q, n, k) in enumerate([(2, 7, 3), (3, 6, 2), (4, 5, 2), (2, 10, 4), (3, 8, 3)])]


@pytest.mark.parametrize("code", CORPUS, ids=str)
def test_routes_agree_and_invariants(code):
    g = gwe_compute(code)
    g.check()
    e = ewe_by_interpolation(code)
    e.check()
    assert ewe_from_gwe(g) == e
    assert gwe_from_ewe(e) == g
    for m in range(code.k + 2):
        if code.q ** (m * code.k) <= 1 << 20:
            assert ewe_eval(e, m).total() == code.q ** (m * code.k)
    assert e.polys[code.n].degree == code.k


def test_check_detects_broken_tables(s23):
    g = gwe_compute(s23)
    broken = GWETable(g.n, g.k, g.q, (g.rows[0], g.rows[1] + g.rows[1], g.rows[2], g.rows[3]))
    with pytest.raises(ValueError):
        broken.check()
    e = ewe_from_gwe(g)
    with pytest.raises(ValueError):
        EWETable(e.n, e.k, e.q, (TPolynomial([2]),) + e.polys[1:]).check()


def test_json_roundtrip_and_stability(rm24):
    g = gwe_compute(rm24)
    e = ewe_from_gwe(g)
    assert loads(dumps(g)) == g and loads(dumps(e)) == e
    assert dumps(e) == dumps(ewe_by_interpolation(rm24))
    data = e.to_json()
    assert data["n"] == 8 and data["k"] == 4 and data["q"] == 2
    assert data["A"][4] == ["-14", "14"]


def test_format(s23):
    text = ewe_from_gwe(gwe_compute(s23)).format()
    assert "A_7(T) = (T-1)(T-2)(T-4)" in text
    assert "A_4(T) = 7(T-1)" in text
