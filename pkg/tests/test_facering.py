from itertools import product

import pytest

from conftest import complex_
from hgaform.facering import (FaceRing, FaceRingAlgebra, PosetError, SimplicialPoset,
                              check_pullback_generators, check_vertex_preserving,
                              mayer_vietoris, pullback, stanley_reisner)
from hgaform.homlin import NotAFieldError
from hgaform.rings import ZZ, IntegersMod


def monomial_count(poset, degree):
    """Monomials in the vertices with support a face (degree counted with |t_v| = 2)."""
    if degree % 2:
        return 0
    faces = {frozenset(poset.vertex_labels(x)) for x in poset.rank}
    V = poset.vertices
    w = degree // 2
    n = 0
    for expo in product(range(w + 1), repeat=len(V)):
        if sum(expo) == w and frozenset(v for v, e in zip(V, expo) if e) in faces:
            n += 1
    return n


def test_square_hilbert_matches_monomial_count(square):
    R = FaceRing(square, 8)
    assert R.hilbert() == [1, 0, 4, 0, 8, 0, 12, 0, 16]
    assert R.hilbert() == [monomial_count(square, d) for d in range(9)]


def test_edge_is_polynomial():
    R = FaceRing(complex_([1, 2], [[1, 2]]), 8)
    assert R.hilbert() == [1, 0, 2, 0, 3, 0, 4, 0, 5]


def test_simplex_binomial():
    R = FaceRing(complex_([1, 2, 3], [[1, 2, 3]]), 6)
    assert R.hilbert() == [1, 0, 3, 0, 6, 0, 10]


def test_two_points(square):
    P = complex_([1, 2], [[1], [2]])
    R = FaceRing(P, 6)
    assert R.hilbert() == [1, 0, 2, 0, 2, 0, 2]
    assert R.multiply(R.t((1,)), R.t((2,))) == {}


def test_square_products_vanish(square):
    R = FaceRing(square, 4)
    assert R.multiply(R.t((1,)), R.t((3,))) == {}
    assert R.multiply(R.t((2,)), R.t((4,))) == {}
    assert R.multiply(R.t((1,)), R.t((2,))) != {}


def test_pillow_poset(pillow):
    rep = pillow.validate()
    assert rep["valid"] and rep["ghosts"] == []
    assert sorted(pillow.join("ab", "ac")) == ["T1", "T2"]
    assert pillow.meet("ab", "ac") == "a"
    assert not pillow.is_complex
    R = FaceRing(pillow, 8)
    # sum over elements of (s / (1 - s))^rank with s = t^2
    assert R.hilbert() == [1, 0, 3, 0, 6, 0, 11, 0, 18]


@pytest.mark.parametrize("fixture", ["square", "pillow"])
def test_relations_and_generation(fixture, request):
    R = FaceRing(request.getfixturevalue(fixture), 8)
    assert all(r["status"] for r in R.check_relations())
    assert all(r["status"] for r in R.check_generation())


def test_facets_12_23_valid():
    P = complex_([1, 2, 3], [[1, 2], [2, 3]])
    rep = P.validate()
    assert rep["valid"] and rep["ghosts"] == []


def test_ghost_vertex():
    P = complex_([1, 2, 3], [[1, 2]])
    assert P.validate()["ghosts"] == [3]


def test_small_interval_is_invalid():
    els = [{"id": "a", "rank": 1, "vertices": ["a"]}, {"id": "b", "rank": 1, "vertices": ["b"]},
           {"id": "x", "rank": 2, "covers": ["a"]}]
    P = SimplicialPoset.from_elements(["a", "b"], els)
    rep = P.validate()
    assert not rep["valid"]
    assert any(p["axiom"] == "boolean" and p["element"] == "x" for p in rep["problems"])
    with pytest.raises(PosetError):
        P.check()


def test_mayer_vietoris_three_covers(square):
    parts = (square.subposet([(1, 2), (2, 3)]), square.subposet([(3, 4), (1, 4)]))
    recs = mayer_vietoris(square, *parts, window=8)
    assert all(r["status"] for r in recs)
    assert [r["dims"] for r in recs if r["degree"] % 2 == 0][1:] == [[4, 3, 3, 2], [8, 5, 5, 2],
                                                                     [12, 7, 7, 2], [16, 9, 9, 2]]
    # the whole complex twice
    assert all(r["status"] for r in mayer_vietoris(square, square, square, window=6))
    # a disjoint union: intersection ring is k
    P = complex_([1, 2], [[1], [2]])
    recs = mayer_vietoris(P, P.subposet([(1,)]), P.subposet([(2,)]), window=6)
    assert all(r["status"] for r in recs)
    assert [r["dims"][3] for r in recs] == [1, 0, 0, 0, 0, 0, 0]


def test_not_a_cover(square):
    with pytest.raises(PosetError):
        mayer_vietoris(square, square.subposet([(1, 2)]), square.subposet([(3, 4)]), window=4)


def test_pullback_folds_pillow_onto_triangle(pillow):
    tri = complex_(list("abc"), [list("abc")])
    name = {x: "".join(tri.vertex_labels(x)) for x in tri.elements()}
    kappa = {}
    for x in pillow.elements():
        labs = "".join(sorted(pillow.vertex_labels(x)))
        kappa[x] = next(y for y in tri.elements() if name[y] == labs)
    assert check_vertex_preserving(kappa, pillow, tri)
    src, dst = FaceRing(pillow, 6), FaceRing(tri, 6)
    assert all(r["status"] for r in check_pullback_generators(kappa, src, dst))
    pb = pullback(kappa, src, dst)
    top = next(y for y in tri.elements() if tri.rank[y] == 3)
    assert src.equal(pb(dst.t(top)), src.add(src.t("T1"), src.t("T2")))


def test_stanley_reisner_agrees(square):
    A = stanley_reisner(square, 8)
    assert [len(A.basis(d)) for d in range(1, 9)] == FaceRing(square, 8).hilbert()[1:]


def test_face_ring_algebra_axioms(pillow):
    FaceRingAlgebra(FaceRing(pillow, 8)).check_axioms(8)


def test_field_required(square):
    with pytest.raises(NotAFieldError):
        FaceRing(square, 4, ZZ)
    assert FaceRing(square, 4, IntegersMod(3)).hilbert() == [1, 0, 4, 0, 8]


def test_vertex_action(pillow):
    R = FaceRing(pillow, 4)
    assert R.equal(R.vertex_action("a"), R.t("a"))
