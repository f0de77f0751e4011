import pytest

from codeweights.codes import weight_distribution
from codeweights.enumerators import ewe_by_interpolation, ewe_from_gwe, gwe_compute
from codeweights.families import (field_for_q, projective_points, rm1_code, rm1_ewe_formula,
                                  rm1_gwe_formula, simplex_code, simplex_ewe_formula,
                                  simplex_gwe_formula)
from codeweights.gf import make_field
from codeweights.linalg import rank
from codeweights.qcombinatorics import TPolynomial

from test_enumerators import RM13, SIMPLEX23


def test_simplex_constructor():
    c = simplex_code(make_field(2), 3)
    assert (c.n, c.k) == (7, 3)
    c = simplex_code(make_field(3), 2)
    assert (c.n, c.k) == (4, 2)
    assert simplex_code(make_field(2), 1).G.entries == ((1,),)


def test_simplex_columns_canonical_and_distinct():
    F = make_field(2, 2)
    c = simplex_code(F, 3)
    cols = c.G.columns()
    assert len(set(cols)) == len(cols) == 21
    assert all(next(x for x in col if x) == 1 for col in cols)
    assert cols == sorted(cols)
    assert rank(c.G) == 3


def test_rm1_constructor():
    c = rm1_code(make_field(2), 4)
    assert (c.n, c.k) == (8, 4)
    assert c.G.entries[0] == (1,) * 8
    c = rm1_code(make_field(3), 2)
    assert (c.n, c.k) == (3, 2)
    assert rm1_code(make_field(2), 1).G.entries == ((1,),)


def test_projective_point_count():
    for q in (2, 3, 4, 5):
        for s in (1, 2, 3):
            assert len(projective_points(field_for_q(q), s)) == (q ** s - 1) // (q - 1)


def test_gwe_formula_examples():
    assert simplex_gwe_formula(2, 3).rows[0].nonzero() == {0: 1}
    assert simplex_gwe_formula(3, 3).rows[1].nonzero() == {9: 13}
    g = rm1_gwe_formula(2, 4)
    assert g.rows[2].nonzero() == {6: 28, 8: 7}  # 2^2 [3 2]_2 and [3 1]_2
    assert g.rows[4].nonzero() == {8: 1}
    assert rm1_gwe_formula(3, 2).rows[1].nonzero() == {2: 3, 3: 1}


def test_ewe_formula_examples():
    assert list(simplex_ewe_formula(2, 3).polys) == SIMPLEX23
    assert list(rm1_ewe_formula(2, 4).polys) == RM13
    assert list(simplex_ewe_formula(5, 1).polys) == [TPolynomial([1]), TPolynomial([-1, 1])]


GRID = [(q, s) for q in (2, 3, 4, 5) for s in (1, 2, 3)] + [(2, 4)]


@pytest.mark.parametrize("q,s", GRID)
def test_formulas_match_enumeration(q, s):
    F = field_for_q(q)
    for code, gf, ef in [(simplex_code(F, s), simplex_gwe_formula, simplex_ewe_formula),
                         (rm1_code(F, s), rm1_gwe_formula, rm1_ewe_formula)]:
        g = gf(q, s)
        assert g == gwe_compute(code)
        assert ef(q, s) == ewe_from_gwe(g)


@pytest.mark.parametrize("q,s", [(2, 2), (2, 3), (3, 2), (4, 2)])
def test_formulas_match_interpolation(q, s):
    F = field_for_q(q)
    assert simplex_ewe_formula(q, s) == ewe_by_interpolation(simplex_code(F, s))
    assert rm1_ewe_formula(q, s) == ewe_by_interpolation(rm1_code(F, s))


def test_shortened_rm_is_simplex_distribution():
    # keep the RM_2(1,3) words vanishing on coordinate 0 and drop that coordinate
    from codeweights.codes import iter_codewords
    rm = rm1_code(make_field(2), 4)
    counts = [0] * 8
    for c in iter_codewords(rm):
        if c[0] == 0:
            counts[sum(1 for x in c[1:] if x)] += 1
    assert counts == list(weight_distribution(simplex_code(make_field(2), 3)))
