import pytest

from codeweights.gf import extend_field, make_field
from codeweights.families import rm1_code, simplex_code


@pytest.fixture(scope="session")
def gf2():
    return make_field(2)


@pytest.fixture(scope="session")
def gf3():
    return make_field(3)


@pytest.fixture(scope="session")
def s23(gf2):
    return simplex_code(gf2, 3)


@pytest.fixture(scope="session")
def rm24(gf2):
    return rm1_code(gf2, 4)


def small_fields(limit=64):
    """Every flat field and a spread of towers with at most ``limit`` elements."""
    out = []
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61):
        k = 1
        while p ** k <= limit:
            out.append(make_field(p, k))
            k += 1
    for base, m in [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2), (7, 2)]:
        out.append(extend_field(make_field(base), m))
    gf4, gf8 = make_field(2, 2), make_field(2, 3)
    out += [extend_field(gf4, 2), extend_field(gf4, 3), extend_field(gf8, 2),
            extend_field(extend_field(make_field(2), 2), 3)]
    return [f for f in out if f.order <= limit]


def random_code(rng, q, n, k):
    """Random nondegenerate [n, k] code over GF(q) (rejection sampling)."""
    from codeweights.codes import code_from_matrix
    from codeweights.families import field_for_q
    from codeweights.linalg import MatrixGF, rank

    F = field_for_q(q)
    while True:
        rows = tuple(tuple(rng.randrange(q) for _ in range(n)) for _ in range(k))
        G = MatrixGF(F, rows, n)
        if rank(G) == k and all(any(c) for c in G.columns()):
            return code_from_matrix(F, G)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
