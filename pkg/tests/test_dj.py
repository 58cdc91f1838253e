import pytest

from conftest import complex_
from hgaform.chains import boundary
from hgaform.dj import DJColimit, DJFormality, DJSubobject, compare_models, support
from hgaform.facering import PosetError, SimplicialPoset
from hgaform.surjections import interval_cut
from hgaform.torus import TorusFormality

VERTEX = complex_([1], [[1]], "vertex")
EDGE = complex_([1, 2], [[1, 2]], "edge")
TWO = complex_([1, 2], [[1], [2]], "two points")


def test_support():
    assert support((((1, 0), (0, 0)), ((0, 0),)), (1, 2)) == (1,)
    assert support((), (1, 2)) == ()


def test_colimit_faces_stay_inside():
    X = DJColimit(TWO)
    inc = X.include((1,))
    x = inc((((1,), (2,)), ((1,),), ()))[1]
    cx = ((1,), x)
    for i in range(X.dim(cx) + 1):
        assert X.contains(X.face(cx, i))


def test_subobject_needs_complex(pillow):
    with pytest.raises(ValueError):
        DJSubobject(pillow)


@pytest.mark.parametrize("P", [EDGE, TWO])
def test_models_agree(P):
    rep = compare_models(P, 2, 1)
    assert rep["status"] and rep["checked"] > 0


def test_vertex_reduces_to_torus():
    DJ = DJFormality(VERTEX)
    TF = TorusFormality((1,))
    for w in range(4):
        assert len(DJ.f((1,), (w,))) == len(TF.f((w,)))


def test_two_points_cup1_vanishes():
    DJ = DJFormality(TWO)
    for v in ((1,), (2,)):
        for w in range(1, 4):
            c = DJ.f(v, (w,))
            assert not boundary(c)
            assert not interval_cut((1, 2, 1), c)


def test_edge_compatibility():
    certs = DJFormality(EDGE).compatibility(6)
    assert certs and all(c.status for c in certs)


def test_pillow_certificates(pillow):
    certs = DJFormality(pillow).certificates(4, 2, 2)
    assert certs and all(c.status for c in certs)


def test_invalid_poset_rejected():
    els = [{"id": "a", "rank": 1, "vertices": ["a"]}, {"id": "x", "rank": 2, "covers": ["a"]}]
    with pytest.raises(PosetError):
        DJFormality(SimplicialPoset.from_elements(["a"], els))
