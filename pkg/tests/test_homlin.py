from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hgaform.homlin import (FgComplex, NotAFieldError, WindowError, determinant, homology,
                            matmul, nullspace, rank, smith_diagonal, smith_normal_form)
from hgaform.rings import QQ, ZZ, IntegersMod

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_snf_factorisation(m):
    S, U, V = smith_normal_form(m)
    assert matmul(matmul(U, m), V) == S
    diag = [S[i][i] for i in range(min(len(S), len(S[0]))) if S[i][i]]
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1


def test_smith_known():
    assert smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


def test_torsion_in_homology():
    C = FgComplex({0: 1, 1: 1}, {1: [[2]]})
    assert homology(C, [0, 1], ZZ) == {0: (0, [2]), 1: (0, [])}
    assert homology(C, [0, 1], QQ) == {0: 0, 1: 0}
    assert homology(C, [0, 1], IntegersMod(2)) == {0: 1, 1: 1}


def test_rank_and_nullspace():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank(m, QQ) == 2
    ns = nullspace(m, 3, QQ)
    assert len(ns) == 1
    v = ns[0]
    assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in m)


def test_field_required():
    with pytest.raises(NotAFieldError):
        nullspace([[2]], 1, IntegersMod(4))


def test_window_edge_refused():
    C = FgComplex({0: 1, 1: 1, 2: 1}, {}, window=(0, 2))
    with pytest.raises(WindowError):
        homology(C, [2], QQ)
