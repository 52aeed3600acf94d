import json
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nichols_radford.classify import (
    NC,
    TABLE,
    classify_pair,
    dual_pair,
    dual_symmetry_report,
    dynkin,
    heck_match,
    heck_matches,
    is_finite,
    presentation_for,
    rank1_finite,
    transported_braiding,
    braiding_data_of,
    verify_presentation,
    witness_reproduces,
    _pres_row4,
)
from nichols_radford.cyclo import one, root
from nichols_radford.nichols import diagonal_braiding, nichols_dims


def test_dynkin_examples():
    xi = root(4, 1)
    D = dynkin(2, 3, 1)
    assert D.edge == xi and D.q22 == xi**3 and D.connected
    assert not dynkin(2, 1, 2).connected
    for m in (2, 3, 4):
        for i in range(2 * m):
            for j in range(2 * m):
                assert dynkin(m, i, j).q11 == -one(2 * m)


def test_rank1_examples():
    assert rank1_finite(2, 1, 2) is True
    assert rank1_finite(2, 0, 0) is False
    assert rank1_finite(2, 2, 2) is False
    assert rank1_finite(2, 3, 1) is None


def test_rank1_general_n_against_rank_one_nichols_algebra():
    n, m = 3, 2
    N = n * m
    seen = 0
    for i in range(N):
        for j in range(N):
            D = dynkin(m, i, j, n)
            if D.connected:
                continue
            seen += 1
            q11 = nichols_dims(diagonal_braiding([[D.q11]]), max_deg=8)
            q22 = nichols_dims(diagonal_braiding([[D.q22]]), max_deg=8)
            # disconnected: the Nichols algebra is the tensor product of the two vertices
            assert rank1_finite(m, i, j, n) == (q11.truncated and q22.truncated)
    assert seen == N


def test_heck_match_examples():
    h = heck_match(2, 3, 1)
    assert h.row == (2, 1) and h.witness == (2, 1, 1, 1)
    h = heck_match(3, 2, 2)
    assert h.row[0] == 4 and h.witness[:3] == (3, 1, 1)
    assert heck_match(2, 1, 1) is None


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_rank1_and_table_exclusive_and_witnesses_reproduce(m):
    N = 2 * m
    for i in range(N):
        for j in range(N):
            r1 = rank1_finite(m, i, j)
            hs = heck_matches(m, i, j)
            if hs:
                assert r1 is None
            for h in hs:
                assert witness_reproduces(m, i, j, h)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 9, 10, 12])
def test_table_is_symmetric_under_reflection(m):
    assert all(ok for _, ok in dual_symmetry_report(m))


def test_shifted_pairing_is_not_a_symmetry():
    # (i,j) -> (-(i+1), -(j+m)) only reflects the diagram when the edge squares to 1
    bad = [p for p, ok in dual_symmetry_report(2, form="shifted") if not ok]
    assert set(bad) == {(i, j) for i in range(4) for j in (1, 3)}
    assert dual_pair(2, 3, 1) == (2, 1)


def test_reflection_formula_on_diagrams():
    for m in (2, 3, 5):
        for i in range(2 * m):
            for j in range(2 * m):
                D, E = dynkin(m, i, j), dynkin(m, *dual_pair(m, i, j))
                assert E.edge == D.edge.inverse()
                assert E.q22 == -D.q22 * D.edge


def test_is_finite_examples():
    f = is_finite(2, 3, 3)
    assert f.finite and "(2, 1)" in f.certificate and f.probe_truncated
    f = is_finite(3, 0, 1)
    assert not f.finite and f.probe_truncated is False
    assert sum(is_finite(2, i, j).finite for i in range(4) for j in range(4)) == 6


def test_presentation_2_2_at_m2():
    spec = presentation_for(2, 2, 1)
    assert spec.source == "row (2,2)"
    xi = root(4, 1)
    v0, v1 = NC.gen(4, 0), NC.gen(4, 1)
    rels = {name: p.terms for name, p in spec.relations}
    assert rels["v0^2"] == (v0 * v0).terms
    assert rels["v1^top"] == (v1**4).terms
    assert rels["skew-commute"] == (v0 * v1 - xi * v1 * v0).terms
    assert spec.expected_dim == 8


def test_presentation_invariants():
    for m in (2, 3, 4, 5, 6):
        for i in range(2 * m):
            for j in range(2 * m):
                spec = presentation_for(m, i, j)
                if spec is None:
                    continue
                assert sum(spec.expected_hilbert) == spec.expected_dim
                assert prod(b for _, b in spec.pbw_bounds) == spec.expected_dim
                for _, rel in spec.relations:
                    assert len(rel.degrees()) == 1


def test_presentation_examples():
    assert presentation_for(3, 2, 2).expected_dim == 36
    s = presentation_for(3, 2, 1)
    assert s.expected_dim == 18 and s.expected_hilbert == [1, 2, 4, 4, 4, 2, 1]
    assert presentation_for(4, 2, 1) is None  # table row (11,2): no presentation


def test_verify_presentation_row_2_1():
    rep = verify_presentation(presentation_for(2, 3, 1))
    assert rep.ok and rep.braiding_matches
    assert sum(rep.dims) == 8


def test_verify_presentation_row_6():
    rep = verify_presentation(presentation_for(3, 2, 1))
    assert rep.ok and rep.dims == [1, 2, 4, 4, 4, 2, 1, 0]


def test_verify_presentation_detects_wrong_relation():
    spec = presentation_for(3, 2, 1)
    v0, v1 = NC.gen(6, 0), NC.gen(6, 1)
    spec.relations.append(("bogus", v0 * v1 * v1))
    rep = verify_presentation(spec)
    assert not rep.ok and dict(rep.relations)["bogus"] is False


def test_b_even_p_exponent_candidates():
    for m, i, j in [(3, 2, 2), (3, 2, 4), (6, 2, 4)]:
        h = heck_match(m, i, j)
        actual = braiding_data_of(transported_braiding(m, i, j))
        assert _pres_row4(m, i, j, h, "plus").braiding == actual
        assert _pres_row4(m, i, j, h, "minus").braiding != actual


def test_pair_report_json():
    rep = classify_pair(2, 3, 1)
    data = json.loads(json.dumps(rep.to_json()))
    assert set(data) == {"i", "j", "dim_module", "diagram", "finite", "certificate", "nichols_dims", "presentation", "presentation_verified"}
    assert set(data["diagram"]) == {"q11", "edge", "q22"}


def test_table_rows_cover_every_label():
    labels = {lab for row in TABLE for lab in row.labels}
    L = {(2, 1), (2, 2), (4, 1), (4, 2), (6, 1), (6, 2), (7, 2), (7, 3), (7, 4), (7, 5), (9, 2), (9, 3), (11, 2), (11, 3),
         (12, 3), (12, 4), (13, 1), (13, 2), (14, 1), (14, 2), (14, 3), (14, 4), (15, 3), (15, 4)}
    assert labels == L


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([2, 3]), st.data())
def test_probe_agrees_on_random_pairs(m, data):
    i = data.draw(st.integers(0, 2 * m - 1))
    j = data.draw(st.integers(0, 2 * m - 1))
    f = is_finite(m, i, j)
    if f.probe_truncated is not None:
        assert f.probe_truncated == f.finite
