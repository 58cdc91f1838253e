"""Simplicial posets and their face rings as limits of polynomial rings.

A face ring element is a compatible tuple: one polynomial per maximal
element sigma in the vertex variables of sigma, such that any two agree
after restricting to each common lower bound.  Every vertex variable has
degree 2.  Polynomials are dicts ``monomial -> coeff`` where a monomial is
a sorted tuple of ``(vertex, exponent)`` pairs.
"""

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .bar import UNIT, PresentedDGA
from .homlin import WindowError, nullspace, rank
from .rings import QQ


class PosetError(ValueError):
    """Raised with a list of structured diagnostics."""

    def __init__(self, problems):
        self.problems = problems
        ValueError.__init__(self, "; ".join(p["message"] for p in problems))


class SimplicialPoset:
    """A finite poset with least element whose lower intervals are Boolean.

    ``covers[x]`` lists the elements covered by x, ``labels[x]`` the vertex
    labels of x (given for atoms, derived otherwise) and ``vertices`` the
    vertex set V, which may contain ghost vertices.
    """

    def __init__(self, vertices, ranks, covers, labels=None, bottom=None, name="Sigma"):
        self.vertices = tuple(vertices)
        self.rank = dict(ranks)
        self.covers = {x: tuple(c) for x, c in covers.items()}
        self.name = name
        if bottom is None:
            bottoms = [x for x, r in self.rank.items() if r == 0]
            if len(bottoms) != 1:
                raise PosetError([{"axiom": "bottom", "message": "need exactly one element of rank 0, got %d" % len(bottoms)}])
            bottom = bottoms[0]
        self.bottom = bottom
        self._below = {}
        for x in self.rank:
            self.below(x)
        given = labels or {}
        self.labels = {}
        for x in self.rank:
            if self.rank[x] == 1:
                lab = given.get(x)
                if lab is None or len(lab) != 1:
                    raise PosetError([{"axiom": "folding", "element": str(x),
                                       "message": "atom %r needs exactly one vertex" % (x,)}])
                self.labels[x] = tuple(lab)
        for x in self.rank:
            if self.rank[x] != 1:
                vs = set()
                for a in self.atoms_below(x):
                    vs |= set(self.labels[a])
                self.labels[x] = tuple(v for v in self.vertices if v in vs)
                if x in given and set(given[x]) != vs:
                    raise PosetError([{"axiom": "folding", "element": str(x),
                                       "message": "vertices of %r disagree with its atoms" % (x,)}])
        self._order = {v: i for i, v in enumerate(self.vertices)}

    # construction ----------------------------------------------------------------------

    @classmethod
    def from_complex(cls, vertices, facets, name="Sigma"):
        """The face poset of the simplicial complex generated by ``facets``."""
        vertices = tuple(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        faces = {()}
        for f in facets:
            for v in f:
                if v not in pos:
                    raise PosetError([{"axiom": "vertices", "message": "facet vertex %r not in the vertex list" % (v,)}])
            f = tuple(sorted(set(f), key=pos.get))
            for r in range(len(f) + 1):
                faces.update(combinations(f, r))
        ranks = {s: len(s) for s in faces}
        covers = {s: [tuple(v for v in s if v != w) for w in s] for s in faces}
        labels = {s: s for s in faces}
        P = cls(vertices, ranks, covers, labels, bottom=(), name=name)
        P.is_complex = True
        return P

    @classmethod
    def from_elements(cls, vertices, elements, name="Sigma"):
        """From Hasse data ``[{id, rank, covers, vertices}]``; a bottom is added if missing."""
        ranks, covers, labels = {}, {}, {}
        for e in elements:
            x = e["id"]
            if x in ranks:
                raise PosetError([{"axiom": "ids", "message": "duplicate element id %r" % (x,)}])
            ranks[x] = int(e["rank"])
            covers[x] = list(e.get("covers", []))
            if "vertices" in e:
                labels[x] = tuple(e["vertices"])
        bottoms = [x for x, r in ranks.items() if r == 0]
        if not bottoms:
            bottom = "0"
            while bottom in ranks:
                bottom += "'"
            ranks[bottom] = 0
            covers[bottom] = []
            for x, r in ranks.items():
                if r == 1:
                    covers[x] = [bottom]
        for x, cs in covers.items():
            for c in cs:
                if c not in ranks:
                    raise PosetError([{"axiom": "covers", "element": str(x),
                                       "message": "%r covers unknown element %r" % (x, c)}])
        P = cls(vertices, ranks, covers, labels, name=name)
        P.is_complex = False
        return P

    is_complex = False

    # order -------------------------------------------------------------------------------

    def elements(self):
        return sorted(self.rank, key=lambda x: (self.rank[x], str(x)))

    def below(self, x):
        """All y <= x."""
        if x not in self._below:
            out = {x}
            for c in self.covers.get(x, ()):
                out |= self.below(c)
            self._below[x] = frozenset(out)
        return self._below[x]

    def leq(self, a, b):
        return a in self.below(b)

    def atoms_below(self, x):
        return sorted((a for a in self.below(x) if self.rank[a] == 1), key=str)

    def maximal(self):
        elems = set(self.rank)
        nonmax = set()
        for x in elems:
            nonmax |= self.below(x) - {x}
        return [x for x in self.elements() if x not in nonmax]

    def vertex_labels(self, x):
        return self.labels[x] if self.rank[x] else ()

    def ghosts(self):
        used = {self.labels[a][0] for a in self.rank if self.rank[a] == 1}
        return [v for v in self.vertices if v not in used]

    def upper_bounds(self, a, b):
        return [x for x in self.rank if a in self.below(x) and b in self.below(x)]

    def join(self, a, b):
        """sigma v tau: the minimal common upper bounds."""
        ups = self.upper_bounds(a, b)
        return sorted((x for x in ups if not any(y != x and self.leq(y, x) for y in ups)),
                      key=lambda x: (self.rank[x], str(x)))

    def meet(self, a, b):
        """sigma ^ tau when a common upper bound exists (then it is unique)."""
        joins = self.join(a, b)
        if not joins:
            return None
        lows = self.below(a) & self.below(b)
        tops = [x for x in lows if not any(y != x and self.leq(x, y) for y in lows)]
        if len(tops) != 1:
            raise PosetError([{"axiom": "meet", "message": "%r and %r have %d maximal common lower bounds" % (a, b, len(tops))}])
        return tops[0]

    def element_with_labels(self, top, labels):
        """The unique element below ``top`` with the given vertex set."""
        want = set(labels)
        for x in self.below(top):
            if set(self.vertex_labels(x)) == want:
                return x
        return None

    def validate(self):
        """Structured report: Boolean intervals and an injective folding on each interval."""
        problems = []
        for x in self.elements():
            r = self.rank[x]
            lower = self.below(x)
            atoms = self.atoms_below(x)
            if len(atoms) != r or len(lower) != 2 ** r:
                problems.append({"axiom": "boolean", "element": str(x),
                                 "message": "interval below %r has %d elements and %d atoms, rank %d" % (x, len(lower), len(atoms), r)})
                continue
            seen = {}
            ok = True
            for y in lower:
                key = frozenset(a for a in self.below(y) if self.rank[a] == 1)
                if key in seen or len(key) != self.rank[y]:
                    ok = False
                seen[key] = y
            if not ok:
                problems.append({"axiom": "boolean", "element": str(x),
                                 "message": "interval below %r is not a Boolean lattice" % (x,)})
                continue
            for y in lower:
                for c in self.covers.get(y, ()):
                    if self.rank[c] != self.rank[y] - 1:
                        ok = False
            if not ok:
                problems.append({"axiom": "rank", "element": str(x), "message": "covers below %r skip a rank" % (x,)})
            labs = [self.labels[a][0] for a in atoms]
            if len(set(labs)) != len(labs):
                problems.append({"axiom": "folding", "element": str(x),
                                 "message": "atoms below %r share a vertex" % (x,)})
            for v in labs:
                if v not in self.vertices:
                    problems.append({"axiom": "folding", "element": str(x),
                                     "message": "vertex %r of %r is not in V" % (v, x)})
        return {"valid": not problems, "problems": problems, "ghosts": self.ghosts(),
                "elements": len(self.rank), "maximal": [str(m) for m in self.maximal()]}

    def check(self):
        rep = self.validate()
        if not rep["valid"]:
            raise PosetError(rep["problems"])
        return self

    def subposet(self, tops, name=None):
        """The lower closure of ``tops`` (keeps the vertex set)."""
        keep = set()
        for t in tops:
            keep |= self.below(t)
        keep.add(self.bottom)
        P = SimplicialPoset(self.vertices, {x: self.rank[x] for x in keep},
                            {x: [c for c in self.covers.get(x, ()) if c in keep] for x in keep},
                            {x: self.labels[x] for x in keep if self.rank[x] == 1},
                            bottom=self.bottom, name=name or "%s|sub" % self.name)
        P.is_complex = self.is_complex
        return P

    def intersection(self, other):
        keep = set(self.rank) & set(other.rank)
        return self.subposet(keep, name="%s^%s" % (self.name, other.name))

    def __repr__(self):
        return "SimplicialPoset(%s, %d elements)" % (self.name, len(self.rank))


# --- polynomials ---------------------------------------------------------------------------

def _mono_mul(m1, m2):
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda t: str(t[0])))


def poly_mul(p, q, ring=QQ):
    out = {}
    for m1, a in p.items():
        for m2, b in q.items():
            m = _mono_mul(m1, m2)
            out[m] = out.get(m, 0) + a * b
    return {m: ring.normalize(c) for m, c in out.items() if ring.normalize(c) != 0}


def poly_restrict(p, keep):
    """Set the variables outside ``keep`` to zero."""
    keep = set(keep)
    return {m: c for m, c in p.items() if all(v in keep for v, _ in m)}


def monomials(variables, weight):
    """Monomials of total exponent ``weight`` in the given variables."""
    out = []
    for combo in combinations_with_replacement(list(variables), weight):
        d = {}
        for v in combo:
            d[v] = d.get(v, 0) + 1
        out.append(tuple(sorted(d.items(), key=lambda t: str(t[0]))))
    return out


# --- face rings ------------------------------------------------------------------------------

class FaceRing:
    """k[Sigma] as the limit of k[sigma] over sigma in Sigma, truncated at ``window``."""

    def __init__(self, poset, window=8, ring=QQ):
        if not ring.is_field:
            from .homlin import NotAFieldError
            raise NotAFieldError("face ring computations need a field, got %s" % ring.name)
        self.poset = poset.check()
        self.window = window
        self.ring = ring
        self.tops = poset.maximal()
        self._coords = {}
        self._basis = {}
        self._pairs = self._constraint_pairs()

    def _constraint_pairs(self):
        out = []
        P = self.poset
        for s, t in combinations(self.tops, 2):
            lows = P.below(s) & P.below(t)
            maxl = [x for x in lows if not any(y != x and P.leq(x, y) for y in lows)]
            for x in maxl:
                out.append((s, t, P.vertex_labels(x)))
        return out

    def check_degree(self, degree):
        if degree > self.window:
            raise WindowError("face ring window is %d, asked for degree %d" % (self.window, degree))

    def coordinates(self, degree):
        """Ambient coordinates in one degree: (top, monomial) pairs."""
        if degree not in self._coords:
            out = []
            if degree % 2 == 0:
                for s in self.tops:
                    for m in monomials(self.poset.vertex_labels(s), degree // 2):
                        out.append((s, m))
            self._coords[degree] = out
        return self._coords[degree]

    def to_vector(self, element, degree):
        coords = self.coordinates(degree)
        return [element.get(s, {}).get(m, 0) for s, m in coords]

    def from_vector(self, vec, degree):
        out = {}
        for (s, m), c in zip(self.coordinates(degree), vec):
            if c:
                out.setdefault(s, {})[m] = c
        return out

    def constraints(self, degree):
        """Rows expressing agreement of components on common lower bounds."""
        coords = self.coordinates(degree)
        index = {c: i for i, c in enumerate(coords)}
        rows = []
        for s, t, labs in self._pairs:
            for m in monomials(labs, degree // 2) if degree % 2 == 0 else []:
                row = {}
                if (s, m) in index:
                    row[index[(s, m)]] = 1
                if (t, m) in index:
                    row[index[(t, m)]] = row.get(index[(t, m)], 0) - 1
                if row:
                    rows.append(row)
        return rows

    def basis(self, degree):
        """A basis of the limit in one degree, as elements (dicts top -> poly)."""
        self.check_degree(degree)
        if degree not in self._basis:
            n = len(self.coordinates(degree))
            rows = self.constraints(degree)
            vecs = nullspace(rows, n, self.ring) if n else []
            self._basis[degree] = [self.from_vector(v, degree) for v in vecs]
        return self._basis[degree]

    def dim(self, degree):
        return len(self.basis(degree))

    def hilbert(self, top=None):
        top = self.window if top is None else top
        return [self.dim(d) for d in range(top + 1)]

    def is_element(self, element, degree):
        vec = self.to_vector(element, degree)
        for row in self.constraints(degree):
            if self.ring.normalize(sum(vec[j] * c for j, c in row.items())) != 0:
                return False
        return True

    def one(self):
        return {s: {(): 1} for s in self.tops}

    def multiply(self, x, y):
        out = {}
        for s in self.tops:
            p = poly_mul(x.get(s, {}), y.get(s, {}), self.ring)
            if p:
                out[s] = p
        return out

    def add(self, x, y, c=1):
        out = {s: dict(p) for s, p in x.items()}
        for s, p in y.items():
            q = out.setdefault(s, {})
            for m, v in p.items():
                q[m] = self.ring.normalize(q.get(m, 0) + c * v)
                if q[m] == 0:
                    del q[m]
        return {s: p for s, p in out.items() if p}

    def equal(self, x, y):
        return not self.add(x, y, -1)

    def t(self, sigma):
        """t_sigma: the square-free monomial of sigma on tops above it, zero elsewhere."""
        P = self.poset
        mono = tuple(sorted(((v, 1) for v in P.vertex_labels(sigma)), key=lambda t: str(t[0])))
        return {s: {mono: 1} for s in self.tops if P.leq(sigma, s)}

    def element_degree(self, x):
        for p in x.values():
            for m in p:
                return 2 * sum(e for _, e in m)
        return None

    def coordinates_in_basis(self, element, degree):
        """Coefficients of an element in :meth:`basis` (read off at free columns)."""
        vec = self.to_vector(element, degree)
        n = len(vec)
        if not self.basis(degree):
            return []
        rows = self.constraints(degree)
        from .homlin import row_reduce
        pivots = {c for c, _ in row_reduce(rows, n, self.ring)}
        free = [j for j in range(n) if j not in pivots]
        return [vec[j] for j in free]

    # certificates --------------------------------------------------------------------------

    def check_relations(self):
        """t_0 = 1 and t_s t_t = t_{s^t} sum_{r in s v t} t_r for all pairs in the window."""
        P = self.poset
        out = [{"identity": "t_bottom = 1", "status": self.equal(self.t(P.bottom), self.one())}]
        elems = [x for x in P.elements() if x != P.bottom]
        for a, b in combinations_with_replacement(elems, 2):
            if 2 * (P.rank[a] + P.rank[b]) > self.window:
                continue
            lhs = self.multiply(self.t(a), self.t(b))
            joins = P.join(a, b)
            rhs = {}
            if joins:
                m = self.t(P.meet(a, b))
                s = {}
                for r in joins:
                    s = self.add(s, self.t(r))
                rhs = self.multiply(m, s)
            out.append({"identity": "t_s t_t = t_(s^t) sum t_(svt)", "instance": [str(a), str(b)],
                        "status": self.equal(lhs, rhs)})
        for x in elems:
            if 2 * P.rank[x] <= self.window:
                out.append({"identity": "t_s in limit", "instance": [str(x)],
                            "status": self.is_element(self.t(x), 2 * P.rank[x])})
        return out

    def generated_dims(self, degree):
        """Dimension of the span of products of generators t_s in one degree."""
        P = self.poset
        gens = [x for x in P.elements() if x != P.bottom]
        if degree == 0:
            return 1
        if degree % 2:
            return 0
        prods = []

        def rec(start, deg, acc):
            if deg == degree:
                prods.append(acc)
                return
            for i in range(start, len(gens)):
                g = gens[i]
                d = 2 * P.rank[g]
                if deg + d <= degree:
                    rec(i, deg + d, self.multiply(acc, self.t(g)))

        rec(0, 0, self.one())
        vecs = [self.to_vector(p, degree) for p in prods if p]
        return rank(vecs, self.ring) if vecs else 0

    def check_generation(self, top=None):
        top = self.window if top is None else top
        return [{"identity": "generated by t_s", "degree": d,
                 "status": self.generated_dims(d) == self.dim(d)} for d in range(0, top + 1, 2)]

    def vertex_action(self, v):
        """The image of t_v under k[V] -> k[Sigma]: the sum of the atoms over v."""
        P = self.poset
        out = {}
        for a in P.elements():
            if P.rank[a] == 1 and P.labels[a][0] == v:
                out = self.add(out, self.t(a))
        return out


def restriction(big, small):
    """k[Sigma] -> k[Sigma'] for a subposet (componentwise restriction)."""
    def apply(x):
        out = {}
        for s in small.tops:
            top = next(t for t in big.tops if big.poset.leq(s, t))
            p = poly_restrict(x.get(top, {}), small.poset.vertex_labels(s))
            if p:
                out[s] = p
        return out
    return apply


def pullback(kappa, source, target):
    """kappa^*: k[target] -> k[source] for a vertex-preserving map kappa between the posets.

    ``source`` and ``target`` are face rings; ``kappa`` maps elements of the
    source poset to elements of the target poset.
    """
    def apply(x):
        out = {}
        for s in source.tops:
            image = kappa[s]
            top = next(t for t in target.tops if target.poset.leq(image, t))
            p = poly_restrict(x.get(top, {}), target.poset.vertex_labels(image))
            if p:
                out[s] = p
        return out
    return apply


def check_vertex_preserving(kappa, source, target):
    P, Q = source, target
    for x in P.rank:
        y = kappa[x]
        if Q.rank[y] != P.rank[x] or set(Q.vertex_labels(y)) != set(P.vertex_labels(x)):
            return False
        for c in P.covers.get(x, ()):
            if not Q.leq(kappa[c], y):
                return False
    return True


def check_pullback_generators(kappa, source_ring, target_ring):
    """kappa^*(t_s') = sum_{kappa(s) = s'} t_s."""
    out = []
    pb = pullback(kappa, source_ring, target_ring)
    for s2 in target_ring.poset.elements():
        lhs = pb(target_ring.t(s2))
        rhs = {}
        for s in source_ring.poset.elements():
            if kappa[s] == s2:
                rhs = source_ring.add(rhs, source_ring.t(s))
        out.append({"identity": "kappa* t", "instance": str(s2), "status": source_ring.equal(lhs, rhs)})
    return out


def mayer_vietoris(poset, part1, part2, window=8, ring=QQ):
    """Exactness of 0 -> k[S] -> k[S1] + k[S2] -> k[S1 ^ S2] -> 0 degreewise, by ranks."""
    if set(part1.rank) | set(part2.rank) != set(poset.rank):
        raise PosetError([{"axiom": "cover", "message": "the two subposets do not cover Sigma"}])
    R = FaceRing(poset, window, ring)
    R1 = FaceRing(part1, window, ring)
    R2 = FaceRing(part2, window, ring)
    R12 = FaceRing(part1.intersection(part2), window, ring)
    r1, r2 = restriction(R, R1), restriction(R, R2)
    q1, q2 = restriction(R1, R12), restriction(R2, R12)
    out = []
    for d in range(0, window + 1):
        B, B1, B2, B12 = R.basis(d), R1.basis(d), R2.basis(d), R12.basis(d)
        first = [R1.to_vector(r1(x), d) + R2.to_vector(r2(x), d) for x in B]
        second = [R12.to_vector(q1(y), d) for y in B1] + [[-c for c in R12.to_vector(q2(z), d)] for z in B2]
        # composites through the basis of the middle term
        comp_zero = all(not R12.add(q1(r1(x)), q2(r2(x)), -1) for x in B)
        rk1 = rank(first, ring) if first and first[0] else 0
        rk2 = rank(second, ring) if second and second[0] else 0
        mid = len(B1) + len(B2)
        rec = {"degree": d, "dims": [len(B), len(B1), len(B2), len(B12)],
               "injective": rk1 == len(B), "surjective": rk2 == len(B12),
               "middle": rk1 + rk2 == mid and comp_zero,
               "hilbert_additive": len(B) + len(B12) == len(B1) + len(B2)}
        rec["status"] = rec["injective"] and rec["surjective"] and rec["middle"] and rec["hilbert_additive"]
        out.append(rec)
    return out


# --- as an augmented algebra ----------------------------------------------------------------

class FaceRingAlgebra(PresentedDGA):
    """k[Sigma] with the basis of :meth:`FaceRing.basis`, as a commutative dga with d = 0."""

    commutative = True

    def __init__(self, face_ring):
        self.F = face_ring
        self.window = face_ring.window
        self.ring = face_ring.ring
        self.name = "k[%s]" % face_ring.poset.name
        self._cache = {}

    def degree(self, a):
        return a[0]

    def basis(self, n):
        self.check_window(n)
        if n == 0:
            return []
        return [(n, i) for i in range(self.F.dim(n))]

    def element(self, a):
        if a == UNIT:
            return self.F.one()
        return self.F.basis(a[0])[a[1]]

    def _mul(self, a, b):
        key = (a, b)
        if key not in self._cache:
            d = a[0] + b[0]
            prod = self.F.multiply(self.element(a), self.element(b))
            coords = self.F.coordinates_in_basis(prod, d) if prod else []
            self._cache[key] = {(d, i): c for i, c in enumerate(coords) if c}
        return self._cache[key]


def stanley_reisner(poset, window, ring=QQ):
    """For a simplicial complex: k[V]/(non-faces) as a monomial algebra (an independent model)."""
    from .bar import MonomialAlgebra
    if not poset.is_complex:
        raise PosetError([{"axiom": "complex", "message": "the monomial model needs a simplicial complex"}])
    V = poset.vertices
    faces = {frozenset(poset.vertex_labels(x)) for x in poset.rank}

    def allowed(expo):
        return frozenset(v for v, e in zip(V, expo) if e) in faces

    return MonomialAlgebra([2] * len(V), window, allowed=allowed, ring=ring, name="SR(%s)" % poset.name)
