import random

import pytest

from hgaform.cochains import (Cochain, coboundary, cocycles_basis, cup, cup1, cup2,
                              gerstenhaber_bracket, hga_operation, random_cochain)
from hgaform.simplicial import Product, StandardSimplex, boundary_of_simplex
from hgaform.rings import IntegersMod

D3 = StandardSimplex(3)
P12 = Product(StandardSimplex(1), StandardSimplex(2))


def _rand(X, seed):
    rng = random.Random(seed)
    return [random_cochain(X, rng.randint(0, X.top_dim), rng) for _ in range(3)]


def test_coboundary_squares_to_zero():
    for d in range(3):
        g = random_cochain(D3, d, 1)
        assert coboundary(coboundary(g)).is_zero()


@pytest.mark.parametrize("X", [D3, P12])
def test_cup_associative_and_leibniz(X):
    for seed in range(30):
        a, b, c = _rand(X, seed)
        assert cup(cup(a, b), c) == cup(a, cup(b, c))
        lhs = coboundary(cup(a, b))
        rhs = cup(coboundary(a), b) + cup(a, coboundary(b)).scale((-1) ** a.degree)
        assert lhs == rhs


def test_cup_on_vertices_is_pointwise():
    a = Cochain(D3, 0, {(i,): i + 1 for i in range(4)})
    b = Cochain(D3, 0, {(i,): 2 for i in range(4)})
    assert cup(a, b) == Cochain(D3, 0, {(i,): 2 * (i + 1) for i in range(4)})


def test_cup1_homotopy_on_cocycles():
    # for cocycles: d(a cup1 b) = a cup b - (-1)^{|a||b|} b cup a
    X = P12
    for a in cocycles_basis(X, 1):
        for b in cocycles_basis(X, 1):
            assert coboundary(cup1(a, b)) == cup(a, b) + cup(b, a)


def test_cup2_and_cup1_degrees():
    a, b = random_cochain(D3, 2, 3), random_cochain(D3, 2, 4)
    assert cup1(a, b).degree == 3 and cup2(a, b).degree == 2


def test_e1_is_minus_cup1():
    a, b = random_cochain(D3, 1, 5), random_cochain(D3, 2, 6)
    assert hga_operation(a, [b]) == -cup1(a, b)


def test_sq0_is_identity_mod_2():
    # a cup_{n} a = a for a degree-n cocycle mod 2 (on the top simplex of the 2-sphere)
    S2 = boundary_of_simplex(3)
    F2 = IntegersMod(2)
    for a in cocycles_basis(S2, 2):
        a = Cochain(S2, 2, a.values, ring=F2)
        assert cup2(a, a) == a


def test_bracket_is_graded_antisymmetric():
    a, b = random_cochain(D3, 2, 7), random_cochain(D3, 1, 8)
    s = (a.degree - 1) * (b.degree - 1)
    assert gerstenhaber_bracket(a, b) == gerstenhaber_bracket(b, a).scale(-((-1) ** s))


def test_cocycles_basis_are_cocycles():
    for d in range(3):
        for z in cocycles_basis(P12, d):
            assert coboundary(z).is_zero()
