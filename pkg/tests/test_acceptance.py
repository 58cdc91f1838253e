"""One test per acceptance criterion; each prints a PASS/FAIL line (also collected at the end)."""

import time

import pytest

from conftest import ACCEPTANCE, complex_
from hgaform.facering import FaceRing, mayer_vietoris
from hgaform.loops import (face_ring_algebra, hh_free_loops, hochschild_oracle, resolution_tor,
                           tor_loops, totals)
from hgaform.rings import QQ
from hgaform.verify import (aw_s_suite, aw_shuffle_suite, bar_hga_suite, bt_formality_suite,
                            dj_formality_suite, hga_identities_suite, operad_suite, standard_complexes)

pytestmark = pytest.mark.slow


def report(n, title, ok, detail):
    line = "criterion %d %s: %s (%s)" % (n, title, "PASS" if ok else "FAIL", detail)
    ACCEPTANCE[n] = line
    print(line)
    return ok


def summary(certs, started):
    bad = [c for c in certs if not c.status]
    first = "" if not bad else ", first failure %s %s" % (bad[0].identity, bad[0].instance)
    return bad, "%d checks, %d failed, %.0f s%s" % (len(certs), len(bad), time.time() - started, first)


def test_criterion_1_operad():
    t = time.time()
    certs = operad_suite(kl=5, dim=5, equivariance=True, composition_size=0)
    bad, text = summary(certs, t)
    assert report(1, "operad morphism", not bad, text)


def test_criterion_2_cup_i():
    t = time.time()
    certs = hga_identities_suite(samples=1000, seed=0)
    bad, text = summary(certs, t)
    per_space = {}
    for c in certs:
        key = (c.instance["space"], c.identity)
        per_space[key] = per_space.get(key, 0) + 1
    enough = all(v >= 1000 for v in per_space.values()) and len(per_space) == 6
    assert report(2, "cup-i calculus", not bad and enough, text)


def test_criterion_3_aw_shuffle():
    t = time.time()
    certs = aw_shuffle_suite(dims=6, kmax=3, lmax=3)
    bad, text = summary(certs, t)
    assert report(3, "AW-shuffle square", not bad, text)


def test_criterion_4_aw_s():
    t = time.time()
    certs = aw_s_suite(modulus=2, degree=4, kl=4)
    bad, text = summary(certs, t)
    kinds = {c.identity for c in certs}
    both = {"AW_u S (final case)", "AW_u S (inner case)", "Delta S = (S (x) 1) Delta + e_0 (x) S"} <= kinds
    assert report(4, "AW and the contraction", not bad and both, text)


def test_criterion_5_torus_formality():
    t = time.time()
    certs = bt_formality_suite(rank=2, deg=6, max_degree=3, max_arity=3)
    bad, text = summary(certs, t)
    kinds = {c.identity for c in certs}
    need = {"dF = Fd", "Delta F = (F (x) F) Delta", "AW_u f = 0", "naturality"}
    assert report(5, "torus formality", not bad and need <= kinds, text)


def test_criterion_6_face_rings(square, pillow):
    t = time.time()
    problems = []
    R = FaceRing(square, 8)
    if R.hilbert()[:7:2] != [1, 4, 8, 12]:
        problems.append("square dims %s" % R.hilbert())
    two = complex_([1, 2], [[1], [2]])
    for P in (square, pillow, two):
        if not all(r["status"] for r in FaceRing(P, 8).check_relations()):
            problems.append("relations fail on %s" % P.name)
    covers = [(square, square.subposet([(1, 2), (2, 3)]), square.subposet([(3, 4), (1, 4)])),
              (square, square, square),
              (two, two.subposet([(1,)]), two.subposet([(2,)]))]
    records = 0
    for P, a, b in covers:
        for r in mayer_vietoris(P, a, b, window=8):
            records += 1
            if not (r["status"] and r["hilbert_additive"]):
                problems.append("MV degree %d on %s" % (r["degree"], P.name))
    text = "%d MV degree records, %s, %.1f s" % (records, "; ".join(problems) or "no problems", time.time() - t)
    assert report(6, "face rings", not problems, text)


def test_criterion_7_loop_spaces():
    t = time.time()
    problems = []
    vertex = complex_([1], [[1]], "vertex")
    two = complex_([1, 2], [[1], [2]], "two points")
    window = 8
    # oracle first, then the bar path
    oracle_two = resolution_tor(face_ring_algebra(two, window, QQ), window, QQ)
    bar_two = tor_loops(two, window, QQ)
    if bar_two != oracle_two or [totals(bar_two).get(k, 0) for k in range(4)] != [1, 2, 2, 2]:
        problems.append("two points %s" % totals(bar_two))
    oracle_v = resolution_tor(face_ring_algebra(vertex, window, QQ), window, QQ)
    bar_v = tor_loops(vertex, window, QQ)
    if bar_v != oracle_v:
        problems.append("one vertex: bar %s differs from oracle %s" % (bar_v, oracle_v))
    diagonal = {(k, 2 * k): 1 for k in range(window // 2 + 1)}
    if bar_v != diagonal:
        problems.append("one vertex: expected the (k,2k) diagonal %s, bar and oracle both give %s"
                        % (sorted(diagonal), sorted(bar_v)))
    hh = hh_free_loops(vertex, window, QQ)
    hh_oracle = hochschild_oracle(face_ring_algebra(vertex, window, QQ), window, 3, QQ)
    if hh != {k: v for k, v in hh_oracle.items() if k[0] <= 3} or any(k >= 2 for k, _ in hh):
        problems.append("HH vertex %s vs oracle %s" % (hh, hh_oracle))
    text = "%s, %.1f s" % ("; ".join(problems) or "no problems", time.time() - t)
    assert report(7, "loop spaces", not problems, text)


def test_criterion_8_dj_formality():
    t = time.time()
    certs = dj_formality_suite(deg=6, max_degree=3, max_arity=3, complexes=standard_complexes())
    bad, text = summary(certs, t)
    names = {c.instance["complex"] for c in certs}
    assert report(8, "DJ formality", not bad and len(names) == 4, text)
