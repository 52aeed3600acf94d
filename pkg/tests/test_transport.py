import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nichols_radford.cyclo import one, root
from nichols_radford.dmod import build_simple, r_of
from nichols_radford.transport import (
    F1,
    F2,
    F3,
    YDModule,
    beta,
    beta_factorial_form,
    braid_equation_holds,
    braiding_of,
    build_F_closed,
    build_L,
    build_W,
    check_corresp,
    dim_L,
    hosts,
    same_structure,
    transport_simple,
    twist,
    untwist,
    yd_report,
)


def _pairs(n, m):
    N = n * m
    return [(i, j) for i in range(N) for j in range(N)]


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2)])
def test_functorial_and_closed_routes_agree(n, m):
    for i, j in _pairs(n, m):
        M = build_simple(n, m, i, j)
        Y1 = F1(M)
        assert same_structure(Y1, F1(M, route="closed", check=False))
        Y2 = F2(Y1)
        assert same_structure(Y2, F2(Y1, route="closed", check=False))
        Y3 = F3(Y2)
        assert same_structure(Y3, build_F_closed(n, m, i, j, check=False))
        assert same_structure(untwist(Y3), Y2)


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3)])
def test_transport_yd_axioms_corresp_and_braid_equation(n, m):
    for i, j in _pairs(n, m):
        Y = transport_simple(n, m, i, j, check=False)
        assert all(ok for _, ok in yd_report(Y))
        assert check_corresp(n, m, i, j)
        assert braid_equation_holds(braiding_of(Y, check=False))


def test_wrong_cocycle_slots_break_the_axioms():
    n, m = 2, 2
    T = hosts(n, m)["T"]
    Y2 = F2(F1(build_simple(n, m, 3, 1)))
    wrong = twist(Y2, T, 1, -1)
    assert not all(ok for _, ok in yd_report(wrong))


def test_verifier_detects_corrupted_coaction():
    Y = build_F_closed(2, 2, 3, 1)
    co = [dict(c) for c in Y.coaction]
    key = next(iter(co[1]))
    co[1][key] = co[1][key] * 2
    assert not all(ok for _, ok in yd_report(YDModule(Y.host, Y.act, co)))


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2)])
def test_beta_two_forms(n, m):
    for i, j in _pairs(n, m):
        r = r_of(n, m, i, j)
        for k in range(n):
            for ell in range(k, r):
                assert beta(n, m, i, j, k, ell) == beta_factorial_form(n, m, i, j, k, ell)


def test_rank_one_braiding_is_minus_one():
    B = braiding_of(transport_simple(2, 2, 1, 2))
    assert B.dim == 1
    assert B.c[0, 0] == -one(4)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([2, 3]), st.data())
def test_W_diagonal_matrix(m, data):
    N = 2 * m
    i = data.draw(st.integers(0, N - 1))
    j = data.draw(st.integers(0, N - 1))
    B = braiding_of(build_W(2, m, -i, -j))
    assert B.is_diagonal()
    q = B.diagonal_matrix()
    xi = root(N, 1)
    assert q[0][0] == xi**m
    assert q[0][1] * q[1][0] == xi ** (-j - i * m)
    assert q[1][1] == xi ** (i * j)


def test_L_matches_transported_dimension():
    for i, j in _pairs(2, 2):
        a, b = -i % 4, -j % 4
        assert build_L(2, 2, a, b).dim == dim_L(2, 2, a, b) == r_of(2, 2, i, j)
