from __future__ import annotations

from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bblab.complex import (
    FaceNotFoundError,
    MalformedComplexError,
    VoidComplexError,
    euler_characteristic,
    f_from_h,
    f_vector,
    from_facets,
    g2_from_f,
    g_vector,
    h_vector,
    is_neighborly,
    is_pure,
    link,
    relabel,
    skeleton,
)
from bblab.constructions import corpus_complex, corpus_names


def brute_faces(facets):
    out = set()
    for F in facets:
        for k in range(len(F) + 1):
            out.update(frozenset(c) for c in combinations(F, k))
    return out


def test_from_facets_examples():
    K = from_facets([[1, 2], [2, 3], [1, 3]])
    assert K.n == 3 and K.dim == 1
    assert from_facets([[1, 2, 3], [1, 2]]).facets == ((1, 2, 3),)
    K = from_facets([[5, 9], [9, 11]])
    assert K.facets == ((1, 2), (2, 3))
    assert K.labels == (5, 9, 11)
    assert K.original((2, 3)) == (9, 11)


def test_empty_and_void():
    E = from_facets([[]])
    assert E.facets == ((),) and E.d == 0 and f_vector(E) == (1,)
    V = from_facets([])
    assert V.is_void
    with pytest.raises(VoidComplexError):
        f_vector(V)
    with pytest.raises(VoidComplexError):
        V.dim


def test_malformed():
    with pytest.raises(MalformedComplexError):
        from_facets([[], [1, 2]])
    with pytest.raises(MalformedComplexError):
        from_facets([[1, 1, 2]])
    with pytest.raises(MalformedComplexError):
        from_facets([[1, "a"]])


def test_f_h_examples(tetra, torus, rp2):
    assert f_vector(tetra) == (1, 4, 6, 4)
    assert f_vector(torus) == (1, 7, 21, 14)
    assert f_vector(rp2) == (1, 6, 15, 10)
    assert h_vector((1, 4, 6, 4), 3) == (1, 1, 1, 1)
    assert h_vector((1, 7, 21, 14), 3) == (1, 4, 10, -1)
    assert h_vector((1, 6, 15, 10), 3) == (1, 3, 6, 0)
    with pytest.raises(ValueError):
        h_vector((1, 4, 6), 3)


def test_g_vector():
    assert g_vector((1, 1, 1, 1)) == (1, 0)
    assert g_vector((1, 4, 10, -1)) == (1, 3)


def test_euler(tetra, torus, rp2):
    assert euler_characteristic(tetra) == 2
    assert euler_characteristic(torus) == 0
    assert euler_characteristic(rp2) == 1


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8))
def test_h_f_roundtrip(h):
    h = [1] + h[1:]
    assert h_vector(f_from_h(h)) == tuple(h)


@pytest.mark.parametrize("name", corpus_names())
def test_corpus_identities(name):
    K = corpus_complex(name)
    f = f_vector(K)
    h = h_vector(f)
    assert sum(h) == f[-1]
    assert f[0] == 1 and f[1] == K.n
    if K.d >= 4:
        assert g_vector(h)[2] == g2_from_f(f, K.d)
    if K.d >= 2:
        assert h[2] - h[1] == g2_from_f(f, K.d)


facet_lists = st.lists(st.sets(st.integers(1, 7), min_size=1, max_size=4), min_size=1, max_size=6)


@settings(max_examples=100, deadline=None)
@given(facet_lists, st.permutations(list(range(1, 8))))
def test_faces_and_relabel(facets, perm):
    K = from_facets(facets)
    faces = brute_faces(facets)
    f = f_vector(K)
    assert sum(f) == len(faces)
    for k in range(len(f)):
        assert f[k] == sum(1 for F in faces if len(F) == k)
    mapping = {v: perm[K.labels[v - 1] - 1] + 10 for v in K.vertices}
    assert f_vector(relabel(K, mapping)) == f


def test_link_examples(tetra, torus):
    L = link(tetra, (1,))
    assert L.labels == (2, 3, 4) and f_vector(L) == (1, 3, 3)
    assert link(tetra, ()) is tetra
    for v in torus.vertices:
        L = link(torus, (v,))
        assert f_vector(L) == (1, 6, 6)
        assert all(sum(1 for e in L.facets if u in e) == 2 for u in L.vertices)
    with pytest.raises(FaceNotFoundError):
        link(tetra, (1, 2, 3, 4))


@pytest.mark.parametrize("name", corpus_names())
def test_link_dimension(name):
    K = corpus_complex(name)
    for F in K.faces(0)[:3] + K.faces(1)[:3]:
        L = link(K, F)
        assert not L.is_void and L.d <= K.d - len(F)


def test_pure_skeleton_neighborly(torus, tetra):
    assert not is_pure(from_facets([[1, 2, 3], [3, 4]]))
    S = skeleton(tetra, 1)
    assert S.facets == tuple(combinations(range(1, 5), 2))
    assert is_neighborly(torus, 1) and not is_neighborly(torus, 2)
    assert len(torus.faces(1)) == comb(7, 2)
    assert is_neighborly(tetra, 2)
