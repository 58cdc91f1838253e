import pytest
from hypothesis import given, strategies as st

from hgaform.simplicial import (ConstantGroup, Product, SimplicialError, StandardSimplex,
                                boundary_of_simplex, torus, universal_bundle)


def simplicial_identities(X, x):
    n = X.dim(x)
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            if n >= 2:
                assert X.face(X.face(x, j), i) == X.face(X.face(x, i), j - 1)
    for i in range(n + 1):
        for j in range(i, n + 1):
            assert X.degeneracy(X.degeneracy(x, j), i) == X.degeneracy(X.degeneracy(x, i), j + 1)
    for j in range(n + 1):
        y = X.degeneracy(x, j)
        assert X.face(y, j) == x and X.face(y, j + 1) == x


def test_standard_simplex_counts():
    D = StandardSimplex(3)
    assert [len(list(D.nondegenerate(n))) for n in range(5)] == [4, 6, 4, 1, 0]


def test_product_counts():
    # nondegenerate simplices of Delta^1 x Delta^1: 4 vertices, 5 edges, 2 triangles
    P = Product(StandardSimplex(1), StandardSimplex(1))
    assert [len(list(P.nondegenerate(n))) for n in range(4)] == [4, 5, 2, 0]
    assert P.top_dim == 2


def test_identities_on_small_spaces():
    D = StandardSimplex(3)
    for n in range(4):
        for x in D.nondegenerate(n):
            simplicial_identities(D, x)
    E = universal_bundle(ConstantGroup(2)).total
    for n in range(4):
        for x in E.nondegenerate(n):
            simplicial_identities(E, x)


@given(st.lists(st.integers(0, 6), min_size=0, max_size=4))
def test_normal_form_round_trip(raw):
    D = StandardSimplex(2)
    y = D.top()
    for i in raw:
        y = D.s(y, i % (D.dim(y) + 1))
    nf = D.normal_form(y)
    assert list(nf.word) == sorted(set(nf.word), reverse=True)
    assert D.apply_word(nf.word, nf.base) == y
    assert not D.is_degenerate(nf.base)


def test_checked_face_rejects_bad_index():
    D = StandardSimplex(2)
    with pytest.raises(SimplicialError):
        D.d(D.top(), 3)


def test_boundary_of_simplex_has_no_top():
    B = boundary_of_simplex(2)
    assert len(list(B.nondegenerate(2))) == 0
    assert len(list(B.nondegenerate(1))) == 3


def test_bar_torus_faces():
    T = torus(2)
    g = ((1, 0), (0, 2))
    simplicial_identities(T, g)
