from itertools import product

import pytest

from hgaform.chains import Accumulator, Chain, TensorSpace, pushforward, shuffle_map, shuffle_terms
from hgaform.simplicial import Product, StandardSimplex
from hgaform.surjections import aw_tilde
from hgaform.verify import (aw_s_suite, aw_shuffle_instance, bar_hga_suite, dj_formality_suite,
                            hga_identities_suite, one_biased, operad_suite, differential_identities,
                            run_suite, standard_complexes)


def _ok(certs):
    return certs and all(c.status for c in certs)


def test_differential_identities():
    assert _ok(differential_identities())


def test_operad_small():
    assert _ok(operad_suite(kl=4, dim=4, composition_size=4))


def test_one_biased_convention():
    us = one_biased(1, 1)
    assert sorted(u.values for u in us) == [(1,), (1, 2), (1, 2, 1), (2, 1)]


def _square_all_simplices(a, b, c, us):
    """The AW-shuffle square on every simplex triple, without the naturality reduction."""
    X, Y, Z = StandardSimplex(a), StandardSimplex(b), StandardSimplex(c)
    XY, YZ = Product(X, Y), Product(Y, Z)
    XY_Z = Product(XY, Z)
    bad = 0
    simp = lambda S: [s for n in range(S.n + 1) for s in S.nondegenerate(n)]
    for x, y, z in product(simp(X), simp(Y), simp(Z)):
        cx = Chain.simplex(X, x)
        cyz = shuffle_map(Chain.simplex(Y, y), Chain.simplex(Z, z))
        sh = pushforward(shuffle_map(cx, cyz), lambda t: ((t[0], t[1][0]), t[1][1]), XY_Z)
        for u in us:
            lhs = aw_tilde(u, sh)
            acc = Accumulator(TensorSpace(XY, *([Z] * (u.arity - 1))))
            for key, v in aw_tilde(u, cyz).terms.items():
                for k1, s1 in shuffle_terms(X, Y, x, key[0]):
                    acc.add((k1,) + key[1:], (-1) ** (u.degree * X.dim(x)) * v * s1)
            bad += lhs != acc.chain()
    return bad


@pytest.mark.parametrize("dims", [(1, 1, 1), (0, 2, 1), (2, 1, 0)])
def test_aw_shuffle_reduction_agrees_with_brute_force(dims):
    us = one_biased(2, 2)
    assert _square_all_simplices(*dims, us) == 0
    assert _ok(aw_shuffle_instance(*dims, us))


def test_aw_s_small():
    assert _ok(aw_s_suite(2, 3, 3))
    assert _ok(aw_s_suite(3, 2, 3))


def test_hga_identities_small():
    assert _ok(hga_identities_suite(samples=50, seed=4))
    assert _ok(bar_hga_suite(samples=10, seed=4))


def test_dj_small():
    cx = {k: v for k, v in standard_complexes().items() if k in ("vertex", "two points")}
    assert _ok(dj_formality_suite(4, 2, 2, complexes=cx))


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_failure_carries_witness():
    from hgaform.torus import certify
    D = StandardSimplex(1)
    c = certify("x = 0", {}, Chain.simplex(D, (0, 1), 2))
    rec = c.record()
    assert rec["status"] == "fail" and rec["witness"] == [["(0, 1)", "2"]]
