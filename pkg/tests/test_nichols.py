import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nichols_radford.cyclo import CycMatrix, one, root
from nichols_radford.nichols import (
    BraidWord,
    CapacityError,
    SkewDerivations,
    Symmetrizer,
    apply_braid_word,
    braid_table,
    build_tower,
    derivation_by_shuffle,
    diagonal_braiding,
    graded_dims_derivation,
    hilbert_expand,
    inversions,
    matsumoto,
    nichols_dims,
    perm_of_word,
    reduced_word_from_right,
    relation_member,
    skew_derivation,
    symmetrizer_block_ranks,
    symmetrizer_bruteforce,
    symmetrizer_rank,
    words,
)
from nichols_radford.transport import BraidedSpace, braiding_of, transport_simple


def rank_one(q):
    return BraidedSpace(1, CycMatrix(q.order, [[q]]))


def test_matsumoto_examples():
    assert tuple(matsumoto((0, 1)).letters) == ()
    assert len(matsumoto((1, 0)).letters) == 1
    assert len(matsumoto((2, 1, 0)).letters) == 3


def test_reduced_words():
    for k in range(1, 6):
        for p in itertools.permutations(range(k)):
            a, b = matsumoto(p), reduced_word_from_right(p)
            assert perm_of_word(a) == perm_of_word(b) == p
            assert len(a.letters) == len(b.letters) == inversions(p)


def test_braid_word_validation():
    with pytest.raises(ValueError):
        BraidWord(2, (2,))


def test_two_reduced_words_give_same_operator():
    B = braiding_of(transport_simple(2, 3, 2, 1))
    tab = braid_table(B)
    rng = random.Random(3)
    for _ in range(12):
        p = tuple(rng.sample(range(4), 4))
        for w in words(2, 4)[::3]:
            v = {w: one(6)}
            assert apply_braid_word(tab, matsumoto(p), v) == apply_braid_word(tab, reduced_word_from_right(p), v)


def test_rank_one_examples():
    assert [symmetrizer_rank(rank_one(-one(4)), k) for k in range(3)] == [1, 1, 0]
    assert [symmetrizer_rank(rank_one(one(4)), k) for k in range(6)] == [1] * 6
    assert nichols_dims(rank_one(-one(4))).dims == [1, 1, 0]
    g = graded_dims_derivation(rank_one(one(4)), 6)
    assert g.dims == [1] * 7 and not g.truncated


def test_transported_examples():
    B = braiding_of(transport_simple(2, 2, 2, 1))
    assert [symmetrizer_rank(B, k) for k in range(6)] == [1, 2, 2, 2, 1, 0]
    assert nichols_dims(braiding_of(transport_simple(2, 2, 1, 2))).dims == [1, 1, 0]
    assert nichols_dims(braiding_of(transport_simple(2, 2, 3, 1))).total == 8


def test_skew_derivation_examples():
    xi = root(12, 1)
    q = [[-one(12), xi], [xi**5, xi**4]]
    B = diagonal_braiding(q)
    for i in range(2):
        d = skew_derivation(B, i)
        assert d({(): one(12)}) == {}
        for j in range(2):
            assert d({(j,): one(12)}) == ({(): one(12)} if i == j else {})
            want = {(j,): 1 + q[j][j]} if i == j and not (1 + q[j][j]).is_zero() else {}
            assert d({(j, j): one(12)}) == want


@pytest.mark.parametrize("ij", [(i, j) for i in range(4) for j in range(4)])
def test_leibniz_matches_shuffle_form(ij):
    B = braiding_of(transport_simple(2, 2, *ij))
    D = SkewDerivations(B)
    for k in range(1, 5):
        for w in words(B.dim, k):
            for f in range(B.dim):
                assert D.apply(f, {w: one(4)}) == derivation_by_shuffle(B, f, {w: one(4)})


@pytest.mark.parametrize("ij", [(i, j) for i in range(4) for j in range(4)])
def test_factorized_symmetrizer_matches_bruteforce(ij):
    B = braiding_of(transport_simple(2, 2, *ij))
    for k in range(2, 5):
        assert symmetrizer_bruteforce(B, k) == Symmetrizer(B).matrix(words(B.dim, k))


G12 = st.integers(0, 11).map(lambda k: root(12, k))


@settings(max_examples=25, deadline=None)
@given(G12, G12, G12, G12)
def test_diagonal_blocks_and_tower(a, b, c, d):
    B = diagonal_braiding([[a, b], [c, d]])
    g = graded_dims_derivation(B, 5)
    for k in range(2, 6):
        blocks = symmetrizer_block_ranks(B, k)
        total = sum(blocks.values())
        assert total == symmetrizer_rank(B, k)
        if k < len(g.dims):
            assert total == g.dims[k]
    assert g.dims[0] == 1 and g.dims[1] == 2
    if 0 in g.dims:
        assert all(x == 0 for x in g.dims[g.dims.index(0) :])


def test_relation_member_examples():
    assert relation_member(rank_one(-one(4)), {(0, 0): one(4)})
    assert not relation_member(rank_one(one(4)), {(0, 0): one(4)})
    with pytest.raises(ValueError):
        relation_member(rank_one(-one(4)), {(0, 0): one(4), (0,): one(4)})


def test_tower_projection_consistent_with_symmetrizer():
    B = braiding_of(transport_simple(2, 3, 2, 1))
    T = build_tower(B, 4)
    Q = Symmetrizer(B)
    for k in range(2, 5):
        for w in words(2, k):
            zero_by_tower = all(c.is_zero() for c in T.project({w: one(6)}))
            assert zero_by_tower == (not Q.apply({w: one(6)}))


def test_capacity_error():
    B = braiding_of(transport_simple(2, 2, 0, 1))
    with pytest.raises(CapacityError):
        symmetrizer_bruteforce(B, 6, budget=32)
    with pytest.raises(CapacityError):
        nichols_dims(B, max_deg=12, budget=16)


def test_hilbert_expansions():
    assert hilbert_expand([(3, 1), (3, 1), (2, 2)]) == [1, 2, 4, 4, 4, 2, 1]
    assert sum(hilbert_expand([(4, 1), (3, 1), (3, 2), (2, 3)])) == 72
    assert hilbert_expand([(2, 1)]) == [1, 1]
