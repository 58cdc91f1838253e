import pytest
from hypothesis import given, settings, strategies as st

from hgaform.chains import Chain, boundary
from hgaform.simplicial import StandardSimplex
from hgaform.surjections import (SurjectionError, as_sum, compose, cut_template, differential,
                                 differential_sum, interval_cut, interval_cut_sum,
                                 nondegenerate_surjections, surjection)
from hgaform.verify import operad_composition, operad_equivariance, surjections_upto


def test_counts_of_nondegenerate_surjections():
    # u: {1..n} -> {1..2} with no adjacent repeats: 1212.. or 2121..
    assert len(list(nondegenerate_surjections(4, 2))) == 2
    assert len(list(nondegenerate_surjections(3, 3))) == 6


def test_rejects_degenerate():
    with pytest.raises(SurjectionError):
        surjection(1, 1, 2)


def test_classification():
    u = surjection(1, 2, 1, 3)
    c = u.classify()
    assert c["final"] == [2, 3, 4] and c["inner"] == [1]
    assert u.strongly_one_biased and u.one_biased and u.biased
    assert not surjection(1, 2, 1, 2).biased


def test_low_arity_differentials():
    assert differential((1, 2, 1)) == as_sum((2, 1)) - as_sum((1, 2))
    assert differential((1, 2, 1, 2)) == as_sum((2, 1, 2)) + as_sum((1, 2, 1))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_differential_squares_to_zero(n):
    for l in range(1, n + 1):
        for u in nondegenerate_surjections(n, l):
            d = differential(u)
            assert not d or not differential_sum(d)


def test_cup_is_aw():
    D = StandardSimplex(2)
    c = Chain.simplex(D, D.top())
    out = interval_cut((1, 2), c)
    assert {k for k in out.terms} == {((0,), (0, 1, 2)), ((0, 1), (1, 2)), ((0, 1, 2), (2,))}


def test_identity_cut():
    D = StandardSimplex(3)
    c = Chain.simplex(D, D.top())
    assert list(interval_cut((1,), c).terms.items()) == [(((0, 1, 2, 3),), 1)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(surjections_upto(5)), st.integers(0, 5))
def test_chain_map_random(u, p):
    D = StandardSimplex(p)
    c = Chain.simplex(D, D.top())
    lhs = boundary(interval_cut(u, c)) - interval_cut(u, boundary(c)).scale((-1) ** u.degree)
    du = differential(u)
    if du:
        lhs = lhs - interval_cut_sum(du, c)
    assert not lhs


def test_cut_template_counts():
    # (1,2) on a p-simplex has p + 1 cuts
    assert len(cut_template((1, 2), 4)) == 5


def test_composition_law_small():
    assert all(c.status for c in operad_composition(max_size=4, dim=3))


def test_equivariance_small():
    assert all(c.status for c in operad_equivariance(kl=4, dim=3))


def test_compose_arity():
    s = compose(surjection(1, 2), 1, surjection(1, 2, 1))
    for u in as_sum(s).terms:
        assert u.arity == 3
