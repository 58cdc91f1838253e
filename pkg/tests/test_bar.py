import random

import pytest

from hgaform.bar import (UNIT, AlgebraError, BarSpace, CochainAlgebra, HochschildSpace,
                         bar_counit, bar_diagonal, bar_differential, bar_homology_ranks,
                         bar_product, bar_word, exterior_algebra, hochschild_chain,
                         hochschild_differential, hochschild_homology_ranks, hochschild_product,
                         polynomial_algebra, tensor_product_bar, truncated_polynomial)
from hgaform.chains import Chain
from hgaform.rings import QQ, ZZ
from hgaform.simplicial import Product, StandardSimplex


@pytest.fixture(scope="module")
def square_cochains():
    return CochainAlgebra(Product(StandardSimplex(1), StandardSimplex(1)), ring=ZZ)


def _labels(A, top):
    return [a for n in range(top + 1) for a in A.basis(n)]


def test_algebras_satisfy_axioms(square_cochains):
    polynomial_algebra(2, 6).check_axioms(6)
    exterior_algebra(3).check_axioms(3)
    truncated_polynomial(3).check_axioms(4)
    square_cochains.check_axioms(2)


def test_bar_differential_squares_to_zero(square_cochains):
    A = square_cochains
    labels = _labels(A, 2)
    rng = random.Random(0)
    for _ in range(100):
        w = tuple(rng.choice(labels) for _ in range(rng.randint(1, 3)))
        assert not bar_differential(bar_differential(bar_word(A, *w)))


def test_two_letter_product_formula(square_cochains):
    """[a][b] = [a|b] + (-1)^{(|a|-1)(|b|-1)} [b|a] + (-1)^{|a|} [E1(a; b)], computed by hand."""
    A = square_cochains
    labels = _labels(A, 2)
    for a in labels:
        for b in labels:
            da, db = A.degree(a), A.degree(b)
            expect = bar_word(A, a, b) + bar_word(A, b, a, coeff=(-1) ** ((da - 1) * (db - 1)))
            for lab, v in A.E({a: 1}, [{b: 1}]).items():
                if lab != UNIT:
                    expect = expect + bar_word(A, lab, coeff=(-1) ** da * v)
            assert bar_product(bar_word(A, a), bar_word(A, b)) == expect


def test_bar_product_is_dg_bialgebra(square_cochains):
    A = square_cochains
    B = BarSpace(A)
    labels = _labels(A, 2)
    rng = random.Random(1)
    for _ in range(40):
        words = [tuple(rng.choice(labels) for _ in range(rng.randint(1, 2))) for _ in range(3)]
        x, y, z = (bar_word(A, *w) for w in words)
        assert bar_product(bar_product(x, y), z) == bar_product(x, bar_product(y, z))
        lhs = bar_differential(bar_product(x, y))
        rhs = bar_product(bar_differential(x), y) + bar_product(x, bar_differential(y)).scale((-1) ** B.dim(words[0]))
        assert lhs == rhs
        assert bar_diagonal(bar_product(x, y)) == tensor_product_bar(bar_diagonal(x), bar_diagonal(y))


def test_unit_and_counit(square_cochains):
    A = square_cochains
    one = bar_word(A)
    a = A.basis(1)[0]
    x = bar_word(A, a)
    assert bar_product(one, x) == x and bar_product(x, one) == x
    assert bar_counit(one) == 1 and bar_counit(x) == 0


def test_trivial_hga_gives_shuffle_product():
    A = polynomial_algebra(2, 4)
    t1, t2 = A.generator(0), A.generator(1)
    p = bar_product(bar_word(A, t1), bar_word(A, t2))
    # letters of bar degree 1 anticommute
    assert p == bar_word(A, t1, t2) - bar_word(A, t2, t1)


def test_tor_of_polynomial_one_variable():
    assert bar_homology_ranks(polynomial_algebra(1, 8), 8) == {(0, 0): 1, (1, 2): 1}


def test_tor_of_exterior_is_divided_powers():
    ranks = bar_homology_ranks(exterior_algebra(1), 5)
    assert ranks == {(k, k): 1 for k in range(6)}


def test_tor_of_truncated():
    # k[t]/t^2 with |t| = 2: Tor is divided powers on a class in bidegree (1, 2)
    assert bar_homology_ranks(truncated_polynomial(2), 8) == {(k, 2 * k): 1 for k in range(5)}


def test_hochschild_polynomial_one_variable():
    ranks = hochschild_homology_ranks(polynomial_algebra(1, 8), 8)
    expect = {(0, 0): 1}
    for j in range(1, 5):
        expect[(0, 2 * j)] = 1
        expect[(1, 2 * j)] = 1
    assert ranks == expect


def test_hochschild_d_squared_and_leibniz():
    A = polynomial_algebra(2, 12)
    labels = _labels(A, 2)
    letters = [a for a in labels if a != UNIT]
    rng = random.Random(2)
    for _ in range(60):
        x = hochschild_chain(A, rng.choice(labels), *[rng.choice(letters) for _ in range(rng.randint(0, 2))])
        y = hochschild_chain(A, rng.choice(labels), *[rng.choice(letters) for _ in range(rng.randint(0, 2))])
        assert not hochschild_differential(hochschild_differential(x))
        dx = x.space.dim(next(iter(x.terms)))
        lhs = hochschild_differential(hochschild_product(x, y))
        rhs = hochschild_product(hochschild_differential(x), y) + \
            hochschild_product(x, hochschild_differential(y)).scale((-1) ** dx)
        assert lhs == rhs


def test_shuffle_of_two_hh1_classes():
    A = polynomial_algebra(2, 4)
    t1, t2 = A.generator(0), A.generator(1)
    x, y = hochschild_chain(A, UNIT, t1), hochschild_chain(A, UNIT, t2)
    assert not hochschild_differential(x) and not hochschild_differential(y)
    p = hochschild_product(x, y)
    assert p == hochschild_chain(A, UNIT, t1, t2) - hochschild_chain(A, UNIT, t2, t1)
    assert not hochschild_differential(p)
    assert hochschild_product(y, x) == p.scale(-1)


def test_hochschild_needs_commutative(square_cochains):
    with pytest.raises(AlgebraError):
        a = square_cochains.basis(1)[0]
        hochschild_product(hochschild_chain(square_cochains, a), hochschild_chain(square_cochains, a))
