from hgaform.chains import (Chain, TensorSpace, aw_diagonal, boundary, shuffle_map,
                            shuffles)
from hgaform.simplicial import Product, StandardSimplex


def _all(X, top):
    return [x for n in range(top + 1) for x in X.nondegenerate(n)]


def test_boundary_squares_to_zero():
    D = StandardSimplex(4)
    for x in _all(D, 4):
        assert not boundary(boundary(Chain.simplex(D, x)))


def test_boundary_of_edge():
    D = StandardSimplex(1)
    c = boundary(Chain.simplex(D, (0, 1)))
    assert c.coefficient((1,)) == 1 and c.coefficient((0,)) == -1


def test_aw_is_chain_map_and_coassociative_counts():
    D = StandardSimplex(3)
    for x in _all(D, 3):
        c = Chain.simplex(D, x)
        lhs = boundary(aw_diagonal(c))
        rhs = aw_diagonal(boundary(c)) if D.dim(x) else Chain.zero(lhs.space)
        assert lhs == rhs
        assert len(aw_diagonal(c)) == D.dim(x) + 1


def test_shuffle_counts_and_chain_map():
    assert len(list(shuffles(2, 3))) == 10
    X, Y = StandardSimplex(2), StandardSimplex(1)
    P = Product(X, Y)
    for x in _all(X, 2):
        for y in _all(Y, 1):
            a, b = Chain.simplex(X, x), Chain.simplex(Y, y)
            sh = shuffle_map(a, b)
            assert sh.space == P
            # d(a x b) = da x b + (-1)^|a| a x db
            rhs = None
            if X.dim(x):
                rhs = shuffle_map(boundary(a), b)
            if Y.dim(y):
                t = shuffle_map(a, boundary(b)).scale((-1) ** X.dim(x))
                rhs = t if rhs is None else rhs + t
            assert boundary(sh) == (rhs if rhs is not None else Chain.zero(P))


def test_aw_after_shuffle_is_identity():
    X, Y = StandardSimplex(2), StandardSimplex(2)
    P = Product(X, Y)
    for x in _all(X, 2):
        for y in _all(Y, 2):
            sh = shuffle_map(Chain.simplex(X, x), Chain.simplex(Y, y))
            d = aw_diagonal(sh)
            proj = {}
            for (l, r), v in d.terms.items():
                if P.dim(l) == X.dim(x):
                    a, b = l[0], r[1]
                    if not X.is_degenerate(a) and not Y.is_degenerate(b):
                        proj[(a, b)] = proj.get((a, b), 0) + v
            proj = {k: v for k, v in proj.items() if v}
            assert proj == {(x, y): 1}


def test_tensor_space_degree():
    D = StandardSimplex(2)
    T = TensorSpace(D, D)
    assert T.dim(((0, 1), (0, 1, 2))) == 3
