"""Davis-Januszkiewicz simplicial sets and the assembled formality certificates.

Two models of DJ for a simplicial poset Sigma on vertex set V, both inside
the language of BT = W-bar(B(Z^V)):

* :class:`DJColimit` is the colimit of the subproducts (BS^1)^sigma.  A
  simplex is a pair ``(tau, x)`` where x is a simplex of BT whose support
  (the coordinates with a nonzero letter) is exactly the vertex set of tau.
* :class:`DJSubobject` (simplicial complexes only) is the sub-simplicial set
  of BT of simplices whose support is a face.
"""

from .chains import Chain, pushforward
from .simplicial import BaseSpace, SimplicialSet, torus
from .surjections import interval_cut
from .torus import (Certificate, TorusFormality, certify, divided_basis,
                    strongly_biased_surjections)


def support(x, labels):
    """Coordinates carrying a nonzero letter somewhere in a simplex of BT."""
    used = set()
    for g in x:
        for letter in g:
            for i, a in enumerate(letter):
                if a:
                    used.add(i)
    return tuple(labels[i] for i in sorted(used))


class _DJBase(SimplicialSet):
    def __init__(self, poset):
        self.poset = poset.check()
        self.labels = poset.vertices
        self.T = torus(self.labels)
        self.BT = BaseSpace(self.T)
        self.finite = False

    def dim(self, x):
        return self.BT.dim(self._bt(x))

    def degeneracy_positions(self, x):
        return self.BT.degeneracy_positions(self._bt(x))

    def degenerate_at(self, x, i):
        bt = self._bt(x)
        return self.BT.degeneracy(self.BT.face(bt, i), i) == bt

    def is_degenerate(self, x):
        return self.BT.is_degenerate(self._bt(x))


class DJColimit(_DJBase):
    """DJ as the colimit over Sigma of (BS^1)^sigma x {*}^(V - sigma)."""

    def __init__(self, poset):
        _DJBase.__init__(self, poset)
        self.name = "DJ(%s)" % poset.name

    def _key(self):
        return ("DJc", id(self.poset))

    @staticmethod
    def _bt(x):
        return x[1]

    def _rebase(self, tau, y):
        sigma = self.poset.element_with_labels(tau, support(y, self.labels))
        return (sigma, y)

    def face(self, x, i):
        return self._rebase(x[0], self.BT.face(x[1], i))

    def degeneracy(self, x, i):
        return (x[0], self.BT.degeneracy(x[1], i))

    def _act(self, x, nu, n):
        return self._rebase(x[0], self.BT._act(x[1], nu, n))

    def basepoint(self):
        return (self.poset.bottom, ())

    def include(self, sigma):
        """The simplicial map BT_sigma -> DJ for the torus on the vertices of sigma."""
        labs = self.poset.vertex_labels(sigma)
        pos = [self.labels.index(v) for v in labs]
        n = len(self.labels)

        def letter(a):
            out = [0] * n
            for j, c in zip(pos, a):
                out[j] = c
            return tuple(out)

        def fn(x):
            y = tuple(tuple(letter(a) for a in g) for g in x)
            return self._rebase(sigma, y)

        return fn

    def contains(self, x):
        tau, y = x
        return tau in self.poset.rank and set(support(y, self.labels)) == set(self.poset.vertex_labels(tau))


class DJSubobject(_DJBase):
    """For a simplicial complex: the simplices of BT supported on a face."""

    def __init__(self, poset):
        if not poset.is_complex:
            raise ValueError("the subobject model needs a simplicial complex")
        _DJBase.__init__(self, poset)
        self.faces = {frozenset(poset.vertex_labels(x)) for x in poset.rank}
        self.name = "DJsub(%s)" % poset.name

    def _key(self):
        return ("DJs", id(self.poset))

    @staticmethod
    def _bt(x):
        return x

    def face(self, x, i):
        return self.BT.face(x, i)

    def degeneracy(self, x, i):
        return self.BT.degeneracy(x, i)

    def _act(self, x, nu, n):
        return self.BT._act(x, nu, n)

    def basepoint(self):
        return ()

    def contains(self, x):
        return frozenset(support(x, self.labels)) in self.faces


def bounded_simplices(labels, n, bound):
    """All n-simplices of BT = W-bar(B(Z^V)) with letters in [-bound, bound]^V."""
    from itertools import product
    r = len(labels)
    letters = list(product(range(-bound, bound + 1), repeat=r))
    levels = []
    for j in range(n - 1, -1, -1):
        levels.append(list(product(letters, repeat=j)))
    return product(*levels)


def compare_models(poset, max_dim=3, bound=1):
    """Simplexwise agreement of the subobject and colimit models on bounded simplices.

    Checks that x -> (minimal face, x) is a bijection onto the colimit
    simplices in the range and commutes with all faces and degeneracies.
    """
    sub, col = DJSubobject(poset), DJColimit(poset)
    checked = 0
    for n in range(0, max_dim + 1):
        for x in bounded_simplices(poset.vertices, n, bound):
            if not sub.contains(x):
                continue
            tau = poset.element_with_labels(_top_containing(poset, x), support(x, poset.vertices))
            cx = (tau, x)
            if not col.contains(cx):
                return {"status": False, "witness": repr(x)}
            for i in range(n + 1):
                if n and col.face(cx, i)[1] != sub.face(x, i):
                    return {"status": False, "witness": repr((x, "face", i))}
                if col.degeneracy(cx, i)[1] != sub.degeneracy(x, i):
                    return {"status": False, "witness": repr((x, "degeneracy", i))}
            checked += 1
    return {"status": True, "checked": checked}


def _top_containing(poset, x):
    s = set(support(x, poset.vertices))
    for t in poset.maximal():
        if s <= set(poset.vertex_labels(t)):
            return t
    raise ValueError("simplex %r is not supported on a face" % (x,))


class DJFormality:
    """The per-sigma formality maps f_sigma: S_sigma -> C(BT_sigma) -> C(DJ)."""

    def __init__(self, poset, ring=None):
        from .rings import ZZ
        self.poset = poset.check()
        self.ring = ring or ZZ
        self.space = DJColimit(poset)
        self.tori = {}
        self.maps = {}
        for s in poset.elements():
            labs = poset.vertex_labels(s)
            self.tori[s] = TorusFormality(labs, ring=self.ring) if labs else None
            self.maps[s] = self.space.include(s)
        self._cache = {}

    def f(self, sigma, alpha):
        """f_sigma(y_alpha) pushed into DJ."""
        key = (sigma, tuple(alpha))
        if key not in self._cache:
            TF = self.tori[sigma]
            if TF is None:
                c = Chain._raw(self.space, {self.space.basepoint(): 1}, self.ring)
            else:
                c = pushforward(TF.f(alpha), self.maps[sigma], self.space)
            self._cache[key] = c
        return self._cache[key]

    def compatibility(self, top_degree):
        """f_sigma o (inclusion on S) = f_tau for tau < sigma, on all y_alpha of degree <= top."""
        P = self.poset
        out = []
        for s in P.elements():
            labs_s = P.vertex_labels(s)
            for t in P.below(s):
                if t == s:
                    continue
                labs_t = P.vertex_labels(t)
                for w in range(top_degree // 2 + 1):
                    for alpha in divided_basis(len(labs_t), w):
                        big = [0] * len(labs_s)
                        for v, a in zip(labs_t, alpha):
                            big[labs_s.index(v)] = a
                        diff = self.f(s, big) - self.f(t, alpha)
                        out.append(certify("f_sigma compatible", {"sigma": str(s), "tau": str(t),
                                                                  "alpha": list(alpha)}, diff))
        return out

    def vanishing(self, top_degree, max_degree=3, max_arity=3):
        """AW_u f_sigma(y_alpha) = 0 in C(DJ) for strongly biased u."""
        P = self.poset
        us = strongly_biased_surjections(max_degree, max_arity)
        out = []
        for s in P.elements():
            n = len(P.vertex_labels(s))
            if n == 0:
                continue
            for w in range(1, top_degree // 2 + 1):
                for alpha in divided_basis(n, w):
                    # only the top sigma supporting alpha gives new chains
                    if 0 in alpha:
                        continue
                    c = self.f(s, alpha)
                    for u in us:
                        out.append(certify("AW_u f_sigma = 0", {"sigma": str(s), "u": list(u.values),
                                                               "alpha": list(alpha)}, interval_cut(u, c)))
        return out

    def cycles(self, top_degree):
        from .chains import boundary
        out = []
        P = self.poset
        for s in P.elements():
            n = len(P.vertex_labels(s))
            for w in range(top_degree // 2 + 1):
                for alpha in divided_basis(n, w):
                    out.append(certify("d f_sigma = 0", {"sigma": str(s), "alpha": list(alpha)},
                                       boundary(self.f(s, alpha))))
        return out

    def certificates(self, top_degree=6, max_degree=3, max_arity=3):
        return self.compatibility(top_degree) + self.cycles(top_degree) + self.vanishing(top_degree, max_degree, max_arity)


def pullback_cochain(formality, gamma, top_degree):
    """ᵗf_Sigma gamma as the compatible tuple (sigma -> {alpha: gamma(f_sigma(y_alpha))})."""
    out = {}
    for s in formality.poset.elements():
        n = len(formality.poset.vertex_labels(s))
        vals = {}
        for alpha in divided_basis(n, gamma.degree // 2) if gamma.degree % 2 == 0 and gamma.degree <= top_degree else []:
            v = gamma.evaluate(formality.f(s, alpha))
            if v:
                vals[alpha] = v
        out[s] = vals
    return out
