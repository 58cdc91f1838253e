"""Verification suites: each returns a list of :class:`~hgaform.torus.Certificate`.

The suites exercise the identities of the surjection operad and its
interval cut action, the shuffle compatibility of the projected cuts, the
interaction of cuts with the contraction of a universal bundle, the
formality maps of tori and DJ spaces, and the cup-i calculus on cochains.
"""

import random
from itertools import permutations

from .chains import (Accumulator, Chain, TensorSpace, aw_diagonal, boundary,
                     pushforward, shuffle_map, shuffle_terms)
from .simplicial import ConstantGroup, Product, StandardSimplex, universal_bundle
from .surjections import (apply_on_factor, as_sum, aw_tilde, basepoint_tensor,
                          compose, contract_chain, contract_first,
                          differential, interval_cut, interval_cut_sum,
                          nondegenerate_surjections, permute_outputs,
                          permute_sum)
from .torus import Certificate, certify

SUITES = ("operad", "aw-shuffle", "aw-s", "bt-formality", "dj-formality", "hga-identities")

# hard limits for the command line
LIMITS = {"kl": 6, "dim": 6, "dims": 7, "k": 3, "l": 3, "rank": 2, "deg": 8, "samples": 20000}


def _simplices(p):
    D = StandardSimplex(p)
    return D, [x for n in range(p + 1) for x in D.nondegenerate(n)]


def surjections_upto(max_size):
    """Nondegenerate u: {1..k+l} -> {1..l} with k + l <= max_size."""
    return [u for n in range(1, max_size + 1) for l in range(1, n + 1)
            for u in nondegenerate_surjections(n, l)]


# --- operad ----------------------------------------------------------------------------

def differential_identities():
    return [
        Certificate("d(1,2,1) = (2,1) - (1,2)", {},
                    differential((1, 2, 1)) == as_sum((2, 1)) - as_sum((1, 2))),
        Certificate("d(1,2,1,2) = (2,1,2) + (1,2,1)", {},
                    differential((1, 2, 1, 2)) == as_sum((2, 1, 2)) + as_sum((1, 2, 1))),
    ]


def operad_chain_map(kl=5, dim=5):
    """d AW_u - (-1)^{deg u} AW_u d = AW_{du} on every simplex of Delta^dim."""
    D, xs = _simplices(dim)
    out = []
    for u in surjections_upto(kl):
        du = differential(u)
        for x in xs:
            c = Chain._raw(D, {x: 1}, _ZZ())
            lhs = boundary(interval_cut(u, c)) - interval_cut(u, boundary(c)).scale((-1) ** u.degree)
            if du:
                rhs = interval_cut_sum(du, c)
                diff = lhs - rhs
            else:
                diff = lhs
            out.append(certify("d AW_u - (-1)^k AW_u d = AW_du", {"u": list(u.values), "simplex": list(x)}, diff))
    return out


def operad_equivariance(kl=5, dim=5):
    """AW_{pi u} = pi . AW_u for every permutation of the values (checked on the top simplices)."""
    out = []
    for u in surjections_upto(kl):
        for p in range(dim + 1):
            D = StandardSimplex(p)
            c = Chain.simplex(D, D.top())
            base = interval_cut(u, c)
            for perm in permutations(range(1, u.arity + 1)):
                pi = dict(zip(range(1, u.arity + 1), perm))
                lhs = interval_cut(u.permute(pi), c)
                out.append(certify("AW_(pi u) = pi AW_u", {"u": list(u.values), "perm": list(perm), "p": p},
                                   lhs - permute_outputs(pi, base)))
    return out


def operad_composition(max_size=6, dim=5):
    """AW_{u o_s v} = (1 (x) .. AW_v at slot s .. (x) 1) AW_u, for len u + len v <= max_size."""
    out = []
    us = surjections_upto(max_size - 1)
    for u in us:
        for v in us:
            if len(u.values) + len(v.values) > max_size:
                continue
            for s in range(1, u.arity + 1):
                comp = compose(u, s, v)
                for p in range(dim + 1):
                    D = StandardSimplex(p)
                    c = Chain.simplex(D, D.top())
                    lhs = apply_on_factor(lambda ch: interval_cut(v, ch), interval_cut(u, c), s - 1, v.degree)
                    diff = lhs - interval_cut_sum(comp, c) if comp else lhs
                    out.append(certify("AW_(u o_s v) = AW_v o_s AW_u",
                                       {"u": list(u.values), "s": s, "v": list(v.values), "p": p}, diff))
    return out


def operad_suite(kl=5, dim=5, equivariance=True, composition_size=5):
    out = differential_identities() + operad_chain_map(kl, dim)
    if equivariance:
        out += operad_equivariance(kl, dim)
    if composition_size:
        out += operad_composition(composition_size, dim)
    return out


# --- AW and shuffles --------------------------------------------------------------------

def one_biased(kmax, lmax):
    """Nondegenerate 1-biased u: {1..k+l+1} -> {1..l+1} with k <= kmax, l <= lmax."""
    out = []
    for l in range(0, lmax + 1):
        for k in range(0, kmax + 1):
            out.extend(u for u in nondegenerate_surjections(k + l + 1, l + 1) if u.one_biased)
    return out


def _full_support(P):
    """Nondegenerate simplices of a product of simplices hitting every vertex of every factor."""
    out = []
    for n in range(sum(f.n for f in P.factors) + 1):
        for x in P.nondegenerate(n):
            if all(len(set(c)) == f.n + 1 for c, f in zip(x, P.factors)):
                out.append(x)
    return out


def aw_shuffle_instance(a, b, c, us):
    """The AW-shuffle square on x = top of Delta^a and full-support (y, z) in Delta^b x Delta^c.

    Every other simplex pair is the image of one of these under face
    inclusions, and both composites are natural, so this covers the full
    check for the triple.
    """
    X, Y, Z = StandardSimplex(a), StandardSimplex(b), StandardSimplex(c)
    YZ, XY = Product(Y, Z), Product(X, Y)
    XY_Z = Product(XY, Z)
    x = X.top()
    out = []
    for yz in _full_support(YZ):
        cx, cyz = Chain.simplex(X, x), Chain.simplex(YZ, yz)
        sh = pushforward(shuffle_map(cx, cyz), lambda t: ((t[0], t[1][0]), t[1][1]), XY_Z)
        for u in us:
            lhs = aw_tilde(u, sh)
            inner = aw_tilde(u, cyz)
            sign = -1 if (u.degree * a) % 2 else 1
            acc = Accumulator(TensorSpace(XY, *([Z] * (u.arity - 1))), cx.ring)
            for key, v in inner.terms.items():
                for k1, s1 in shuffle_terms(X, Y, x, key[0]):
                    acc.add((k1,) + key[1:], sign * v * s1)
            out.append(certify("AW~_u nabla = (nabla (x) 1) (1 (x) AW~_u)",
                               {"u": list(u.values), "dims": [a, b, c], "yz": [list(yz[0]), list(yz[1])]},
                               lhs - acc.chain()))
    return out


def aw_shuffle_suite(dims=6, kmax=3, lmax=3):
    us = one_biased(kmax, lmax)
    out = []
    for s in range(dims + 1):
        for a in range(s + 1):
            for b in range(s - a + 1):
                out += aw_shuffle_instance(a, b, s - a - b, us)
    return out


# --- AW and the contraction S ------------------------------------------------------------

def _eg_simplices(bundle, top):
    return [x for n in range(top + 1) for x in bundle.total.nondegenerate(n)]


def aw_s_suite(modulus=2, degree=4, kl=4):
    """Both cases of the AW_u S identity, Delta S = (S (x) 1) Delta + e_0 (x) S, and the S relations."""
    bundle = universal_bundle(ConstantGroup(modulus))
    E = bundle.total
    xs = _eg_simplices(bundle, degree)
    out = []
    for x in xs:
        p = E.dim(x)
        Sx = bundle.S(x)
        rel = E.face(Sx, 0) == x
        if p == 0:
            rel = rel and E.face(Sx, 1) == bundle.e0
        else:
            rel = rel and all(E.face(Sx, k) == bundle.S(E.face(x, k - 1)) for k in range(1, p + 2))
        out.append(Certificate("faces of S", {"x": repr(x)}, rel))
        c = Chain._raw(E, {x: 1}, _ZZ())
        Sc = contract_chain(bundle, c)
        out.append(certify("SS = 0", {"x": repr(x)}, contract_chain(bundle, Sc)))
        homotopy = boundary(Sc) + contract_chain(bundle, boundary(c)) - c
        if p == 0:
            homotopy = homotopy + Chain._raw(E, {bundle.e0: 1}, _ZZ())
        out.append(certify("dS + Sd = 1 - e_0 eps", {"x": repr(x)}, homotopy))
        lhs = aw_diagonal(Sc)
        rhs = contract_first(bundle, aw_diagonal(c)) + basepoint_tensor(bundle, Sc)
        out.append(certify("Delta S = (S (x) 1) Delta + e_0 (x) S", {"x": repr(x)}, lhs - rhs))
    out.append(certify("S e_0 = 0", {}, contract_chain(bundle, Chain._raw(E, {bundle.e0: 1}, _ZZ()))))
    for n in range(1, kl + 2):
        for l in range(1, n + 1):
            for u in nondegenerate_surjections(n, l):
                if u.values[0] != 1:
                    continue
                for x in xs:
                    out.append(_aw_s_instance(bundle, u, x))
    return out


def _aw_s_instance(bundle, u, x):
    E = bundle.total
    c = Chain._raw(E, {x: 1}, _ZZ())
    Sc = contract_chain(bundle, c)
    lhs = interval_cut(u, Sc)
    first = contract_first(bundle, interval_cut(u, c)).scale((-1) ** u.degree)
    if len(u.values) == 1:
        rhs = first
        case = "identity"
    else:
        up = u.truncate()
        if u.is_final(0):
            rhs = first + basepoint_tensor(bundle, interval_cut(up, Sc))
            case = "final"
        else:
            rhs = first + contract_first(bundle, interval_cut(up, Sc))
            case = "inner"
    return certify("AW_u S (%s case)" % case, {"u": list(u.values), "x": repr(x)}, lhs - rhs)


# --- cup-i calculus -------------------------------------------------------------------------

def hga_identities_suite(samples=1000, seed=0):
    """cup-1, cup-2 and Hirsch identities on random cochains over Delta^3 and Delta^1 x Delta^2."""
    from .cochains import coboundary, cup, cup1, cup2, random_cochain
    rng = random.Random(seed)
    spaces = [StandardSimplex(3), Product(StandardSimplex(1), StandardSimplex(2))]
    out = []
    for X in spaces:
        top = X.top_dim
        for t in range(samples):
            db, dg, da = rng.randint(0, top), rng.randint(0, top), rng.randint(0, top)
            b = random_cochain(X, db, rng)
            g = random_cochain(X, dg, rng)
            a = random_cochain(X, da, rng)
            inst = {"space": X.name, "sample": t, "degrees": [da, db, dg]}
            # cup-1
            lhs = _lin([(1, _d(cup1(b, g))), (1, cup1(coboundary(b), g)), ((-1) ** db, cup1(b, coboundary(g)))])
            rhs = _lin([(1, cup(b, g)), (-((-1) ** (db * dg)), cup(g, b))])
            out.append(certify("cup-1", inst, _diff(lhs, rhs)))
            # cup-2
            lhs = _lin([(1, _d(cup2(b, g))), (-1, cup2(coboundary(b), g)), (-((-1) ** db), cup2(b, coboundary(g)))])
            rhs = _lin([(1, cup1(b, g)), ((-1) ** (db * dg), cup1(g, b))])
            out.append(certify("cup-2", inst, _diff(lhs, rhs)))
            # Hirsch
            lhs = _lin([(1, cup1(cup(a, b), g))])
            rhs = _lin([((-1) ** da, cup(a, cup1(b, g))), ((-1) ** (db * dg), cup(cup1(a, g), b))])
            out.append(certify("Hirsch", inst, _diff(lhs, rhs)))
    return out


def _d(gamma):
    from .cochains import coboundary
    return coboundary(gamma)


def _lin(terms):
    """Sum of (coeff, cochain) pairs; cochains of mismatched degree must be zero."""
    vals = {}
    degree = None
    for c, g in terms:
        t = g._tabulated()
        if not t.values:
            continue
        degree = t.degree if degree is None else degree
        if t.degree != degree:
            raise ValueError("adding cochains of degrees %d and %d" % (degree, t.degree))
        for x, v in t.values.items():
            vals[x] = vals.get(x, 0) + c * v
    return {x: v for x, v in vals.items() if v}


def _diff(a, b):
    keys = set(a) | set(b)
    return {k: a.get(k, 0) - b.get(k, 0) for k in keys if a.get(k, 0) != b.get(k, 0)}


def bar_hga_suite(samples=100, seed=0):
    """The bar product on B C*(X) is associative, a chain map and compatible with the diagonal."""
    from .bar import (BarSpace, CochainAlgebra, bar_diagonal, bar_differential,
                      bar_product, bar_word, tensor_product_bar)
    rng = random.Random(seed)
    out = []
    for X in (StandardSimplex(3), Product(StandardSimplex(1), StandardSimplex(1))):
        A = CochainAlgebra(X, ring=_ZZ())
        B = BarSpace(A)
        labels = [a for n in range(X.top_dim + 1) for a in A.basis(n)]

        def rw():
            return tuple(rng.choice(labels) for _ in range(rng.randint(1, 2)))

        for t in range(samples):
            a, b, c = rw(), rw(), rw()
            x, y, z = bar_word(A, *a), bar_word(A, *b), bar_word(A, *c)
            inst = {"space": X.name, "words": [repr(a), repr(b), repr(c)]}
            out.append(certify("d^2 = 0 on BA", inst, bar_differential(bar_differential(x))))
            lhs = bar_differential(bar_product(x, y))
            rhs = bar_product(bar_differential(x), y) + bar_product(x, bar_differential(y)).scale((-1) ** B.dim(a))
            out.append(certify("bar product is a chain map", inst, lhs - rhs))
            out.append(certify("bar product is associative", inst,
                               bar_product(bar_product(x, y), z) - bar_product(x, bar_product(y, z))))
            out.append(certify("bar product respects the diagonal", inst,
                               bar_diagonal(bar_product(x, y)) - tensor_product_bar(bar_diagonal(x), bar_diagonal(y))))
    return out


# --- formality suites -------------------------------------------------------------------------

def bt_formality_suite(rank=2, deg=6, max_degree=3, max_arity=3):
    from .torus import TorusFormality, check_naturality, koszul_homology_ranks
    out = []
    for n in range(1, rank + 1):
        TF = TorusFormality(n)
        h = koszul_homology_ranks(n, deg)
        out.append(Certificate("H(K) = k", {"n": n}, h == {d: int(d == 0) for d in range(deg + 1)}))
        out += TF.check_phi_cycles(deg)
        out += TF.check_chain_map(deg)
        out += TF.check_coalgebra(deg)
        out += TF.check_equivariance(deg)
        out += TF.check_f_coalgebra(deg // 2)
        out += TF.homology_surrogate(deg // 2)
        out += TF.vanishing_suite(max_degree, max_arity, deg // 2)
        from .torus import koszul_basis
        for u in _strongly_one_biased(max_degree, max_arity):
            for key in koszul_basis(n, deg):
                out.append(TF.verify_vanishing_hat(u, key))
    if rank >= 2:
        T1, T2 = TorusFormality(1), TorusFormality(2)
        out += check_naturality(T1, T2, {0: 1}, deg // 2)
        out += check_naturality(T2, T1, {1: 0}, deg // 2)
    return out


def _strongly_one_biased(max_degree, max_arity):
    out = []
    for l in range(1, max_arity + 1):
        for k in range(1, max_degree + 1):
            out.extend(u for u in nondegenerate_surjections(k + l, l) if u.strongly_one_biased)
    return out


def standard_complexes():
    from .facering import SimplicialPoset
    return {
        "vertex": SimplicialPoset.from_complex([1], [[1]], name="vertex"),
        "edge": SimplicialPoset.from_complex([1, 2], [[1, 2]], name="edge"),
        "two points": SimplicialPoset.from_complex([1, 2], [[1], [2]], name="two points"),
        "square boundary": SimplicialPoset.from_complex([1, 2, 3, 4], [[1, 2], [2, 3], [3, 4], [4, 1]],
                                                        name="square boundary"),
    }


def dj_formality_suite(deg=6, max_degree=3, max_arity=3, complexes=None):
    from .dj import DJFormality
    out = []
    for name, P in (complexes or standard_complexes()).items():
        for c in DJFormality(P).certificates(deg, max_degree, max_arity):
            c.instance = dict(c.instance, complex=name)
            out.append(c)
    return out


def _ZZ():
    from .rings import ZZ
    return ZZ


def run_suite(name, **bounds):
    if name == "operad":
        return operad_suite(bounds.get("kl", 5), bounds.get("dim", 5),
                            composition_size=bounds.get("composition", 5))
    if name == "aw-shuffle":
        return aw_shuffle_suite(bounds.get("dims", 6), bounds.get("k", 3), bounds.get("l", 3))
    if name == "aw-s":
        return aw_s_suite(bounds.get("modulus", 2), bounds.get("deg", 4), bounds.get("kl", 4))
    if name == "bt-formality":
        return bt_formality_suite(bounds.get("rank", 2), bounds.get("deg", 6), bounds.get("k", 3), bounds.get("l", 3))
    if name == "dj-formality":
        return dj_formality_suite(bounds.get("deg", 6), bounds.get("k", 3), bounds.get("l", 3))
    if name == "hga-identities":
        return hga_identities_suite(bounds.get("samples", 1000), bounds.get("seed", 0)) + \
            bar_hga_suite(bounds.get("bar_samples", 50), bounds.get("seed", 0))
    raise ValueError("unknown suite %r" % name)
