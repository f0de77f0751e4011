import pytest

from codeweights.codes import code_from_matrix, extend_code, iter_codewords
from codeweights.families import field_for_q, projective_points, rm1_code, simplex_code
from codeweights.geometry import (coordinate_rows, is_affine_subspace, projective_system,
                                  subcode_to_subspace, sweep_supports, verify_extension_word_support,
                                  verify_support_complement)
from codeweights.gf import make_field
from codeweights.linalg import MatrixGF, SubspaceHandle, enumerate_subspaces
from codeweights.qcombinatorics import gaussian_binomial

from conftest import random_code


def test_projective_system_simplex(s23):
    ps = projective_system(s23)
    assert set(ps.points) == set(projective_points(s23.field, 3))
    assert all(c == 1 for c in ps.multiplicities().values())


def test_projective_system_rm(rm24):
    ps = projective_system(rm24)
    assert len(set(ps.points)) == 8
    assert all(P[0] == 1 for P in ps.points)


def test_projective_system_multiplicity_and_degenerate(gf3):
    c = code_from_matrix(gf3, [[1, 2, 0], [0, 0, 1]])
    ps = projective_system(c)
    assert ps.multiplicities()[(1, 0)] == 2
    d = code_from_matrix(gf3, [[1, 0, 0], [0, 0, 1]])
    with pytest.raises(ValueError):
        projective_system(d)


def test_subcode_to_subspace(s23):
    F = s23.field
    pi0 = subcode_to_subspace(s23, next(enumerate_subspaces(F, 3, 0)))
    assert pi0.nrows == 3
    pik = subcode_to_subspace(s23, next(enumerate_subspaces(F, 3, 3)))
    assert pik.nrows == 0
    for r in range(4):
        for h in enumerate_subspaces(F, 3, r):
            assert subcode_to_subspace(s23, h).nrows == 3 - r


def test_simplex_line_complement(s23):
    for h in enumerate_subspaces(s23.field, 3, 1):
        rep = verify_support_complement(s23, h)
        assert rep.passed and len(rep.complement) == 3


def test_rm_two_cases(rm24):
    F = rm24.field
    full = [h for h in enumerate_subspaces(F, 4, 1) if all(v[0] == 0 for v in subcode_to_subspace(rm24, h).entries)]
    assert len(full) == 1
    rep = verify_support_complement(rm24, full[0])
    assert rep.passed and rep.case == "full" and rep.support == frozenset(range(8))
    others = [verify_support_complement(rm24, h) for h in enumerate_subspaces(F, 4, 1) if h not in full]
    assert all(r.passed and r.case == "affine" and len(r.complement) == 4 for r in others)


def test_verification_catches_a_wrong_complement(s23):
    # a family check against the wrong family must fail
    from dataclasses import replace
    from codeweights.codes import FamilyId
    fake = replace(s23, family=FamilyId("simplex", 2, 4))
    h = next(enumerate_subspaces(s23.field, 3, 1))
    rep = verify_support_complement(fake, h)
    assert not rep.passed and rep.reason


@pytest.mark.parametrize("kind,q,s", [("simplex", 2, 3), ("simplex", 3, 2), ("rm1", 3, 2), ("rm1", 4, 2),
                                      ("simplex", 4, 2), ("rm1", 2, 3)])
def test_sweeps(kind, q, s):
    F = field_for_q(q)
    code = simplex_code(F, s) if kind == "simplex" else rm1_code(F, s)
    for r in range(s + 1):
        res = sweep_supports(code, r)
        assert res.passed and res.handles == gaussian_binomial(s, r, q)
        if kind == "simplex":
            assert dict(res.complement_sizes) == {(q ** (s - r) - 1) // (q - 1): res.handles}
        else:
            assert res.cases["full"] == gaussian_binomial(s - 1, r - 1, q)
            assert res.cases["affine"] == q ** r * gaussian_binomial(s - 1, r, q)


@pytest.mark.parametrize("seed", range(5))
def test_complement_correspondence_on_random_codes(seed):
    import random
    code = random_code(random.Random(seed), [2, 3, 4][seed % 3], 6, 3)
    for r in range(4):
        assert sweep_supports(code, r).passed


def test_is_affine_subspace():
    F = make_field(3)
    assert is_affine_subspace(F, [(1, 0, 0), (1, 1, 0), (1, 2, 0)], 1)
    assert not is_affine_subspace(F, [(1, 0, 0), (1, 1, 0), (1, 1, 1)], 1)
    assert not is_affine_subspace(F, [(0, 1, 0)], 0)
    assert is_affine_subspace(F, [(1, 2, 2)], 0)


def test_coordinate_rows(s23):
    rows = coordinate_rows(s23, 2, [0, 1, 2, 3, 0, 0, 0])
    assert rows.entries == ((0, 1, 0, 1, 0, 0, 0), (0, 0, 1, 1, 0, 0, 0))


def test_extension_words_simplex_gf4(s23):
    ext = extend_code(s23, 2)
    reps = [verify_extension_word_support(s23, 2, w) for w in iter_codewords(ext)]
    assert all(r.passed for r in reps)
    six = [r for r in reps if r.weight == 6]
    assert len(six) == 42 and all(r.design_checked and len(r.complement) == 1 for r in six)


def test_extension_words_rm_gf4(rm24):
    ext = extend_code(rm24, 2)
    six = [verify_extension_word_support(rm24, 2, w) for w in iter_codewords(ext) if sum(map(bool, w)) == 6]
    assert len(six) == 168 and all(r.passed and r.design_checked and len(r.complement) == 2 for r in six)


def test_extension_zero_word(rm24):
    rep = verify_extension_word_support(rm24, 2, [0] * 8)
    assert rep.passed and rep.rank == 0 and rep.complement == tuple(range(8))


@pytest.mark.parametrize("seed", range(3))
def test_extension_support_equals_subcode_support_random(seed):
    import random
    code = random_code(random.Random(seed), 2 + seed % 2, 5, 2)
    for m in (1, 2, 3):
        for w in iter_codewords(extend_code(code, m)):
            assert verify_extension_word_support(code, m, w).passed


def test_extension_rejects_foreign_word(s23):
    with pytest.raises(ValueError):
        verify_extension_word_support(s23, 2, [1, 0, 0, 0, 0, 0, 0])
