"""Loop-space cohomology of DJ spaces through face rings.

``tor_loops`` computes Tor over k[Sigma] as the homology of the bar
construction, ``hh_free_loops`` the Hochschild homology.  Both come with an
oracle that shares no code with the bar path: a minimal free resolution
built degree by degree, and the unnormalized Hochschild complex.
"""

from itertools import product

from .bar import (UNIT, BarSpace, bar_differential, bar_homology_ranks,
                  bar_product, bar_word, hochschild_homology_ranks)
from .facering import FaceRing, FaceRingAlgebra
from .homlin import FgComplex, _field_ops, homology, nullspace, rank, row_reduce


def face_ring_algebra(poset, window, ring):
    return FaceRingAlgebra(FaceRing(poset, window, ring))


def tor_loops(poset, window, ring):
    """dim Tor_{k,m} over k[Sigma] for internal degrees m <= window, keyed (k, m)."""
    _field_ops(ring)
    return bar_homology_ranks(face_ring_algebra(poset, window, ring), window, ring)


def hh_free_loops(poset, window, ring):
    """dim HH_{k,m}(k[Sigma]) for internal degrees m <= window, keyed (k, m)."""
    _field_ops(ring)
    return hochschild_homology_ranks(face_ring_algebra(poset, window, ring), window, ring)


def totals(ranks, by="homological"):
    """Sum ranks by homological degree k (or by total degree m - k)."""
    out = {}
    for (k, m), r in ranks.items():
        key = k if by == "homological" else m - k
        out[key] = out.get(key, 0) + r
    return dict(sorted(out.items()))


# --- minimal resolution oracle --------------------------------------------------------

class _Graded:
    """Graded pieces of an algebra as coordinate spaces: basis labels per degree incl. the unit."""

    def __init__(self, A, window):
        self.A = A
        self.window = window
        self.labels = {0: [UNIT]}
        for d in range(1, window + 1):
            self.labels[d] = A.basis(d)
        self.index = {d: {a: i for i, a in enumerate(v)} for d, v in self.labels.items()}

    def mul_vec(self, a, vec, d):
        """a * (element of degree d given by coordinates) as coordinates in degree d + |a|."""
        da = 0 if a == UNIT else self.A.degree(a)
        out = [0] * len(self.labels[d + da])
        for b, c in zip(self.labels[d], vec):
            if not c:
                continue
            for lab, v in self.A.mul({a: 1}, {b: 1}).items():
                out[self.index[d + da][lab]] += c * v
        return out


def _free_coords(R, gens, d):
    """Coordinates of degree d in the free module on generators of degrees ``gens``."""
    out = []
    for g, dg in enumerate(gens):
        if 0 <= d - dg <= R.window:
            for a in R.labels[d - dg]:
                out.append((g, a))
    return out


def resolution_tor(A, window, ring):
    """dim Tor_{k,m}(k, k) from a minimal free resolution computed up to degree ``window``.

    The kernel of each map is taken degreewise by exact elimination; minimal
    generators are the complement of (A_+ . kernel) in each degree.
    """
    norm, _ = _field_ops(ring)
    R = _Graded(A, window)
    out = {(0, 0): 1}
    # module M_0 = A_+ inside F_0 = A, given as spanning vectors per degree
    gens = [0]
    kernel = {d: [_unit_vec(len(R.labels[d]), i) for i in range(len(R.labels[d]))] for d in range(1, window + 1)}
    k = 0
    while True:
        k += 1
        new_gens, images = [], []
        for d in range(1, window + 1):
            coords = _free_coords(R, gens, d)
            index = {c: i for i, c in enumerate(coords)}
            decomposables = []
            for d2 in range(1, d):
                for v in kernel.get(d2, []):
                    for a in R.labels[d - d2]:
                        decomposables.append(_act_free(R, gens, a, v, d2, index))
            span = [dict((j, x) for j, x in enumerate(v) if norm(x)) for v in decomposables]
            base_rank = len(row_reduce(span, len(coords), ring)) if span else 0
            for v in kernel.get(d, []):
                trial = span + [dict((j, x) for j, x in enumerate(v) if norm(x))]
                r = len(row_reduce(trial, len(coords), ring))
                if r > base_rank:
                    span = trial
                    base_rank = r
                    new_gens.append(d)
                    images.append((d, v))
        for d in new_gens:
            out[(k, d)] = out.get((k, d), 0) + 1
        if not new_gens:
            break
        # kernel of F_k -> F_{k-1}, generators mapping to the chosen vectors
        kernel_next = {}
        for d in range(1, window + 1):
            src = _free_coords(R, new_gens, d)
            tgt = _free_coords(R, gens, d)
            tindex = {c: i for i, c in enumerate(tgt)}
            cols = []
            for g, a in src:
                dg, v = images[g]
                cols.append(_act_free(R, gens, a, v, dg, tindex))
            if not src:
                continue
            rows = [dict((j, cols[j][i]) for j in range(len(src)) if norm(cols[j][i])) for i in range(len(tgt))]
            kernel_next[d] = nullspace(rows, len(src), ring)
        gens, kernel = new_gens, kernel_next
    return out


def _unit_vec(n, i):
    v = [0] * n
    v[i] = 1
    return v


def _act_free(R, gens, a, vec, d, index):
    """a . v for v of degree d in the free module on ``gens``; coordinates in ``index``."""
    out = [0] * len(index)
    da = 0 if a == UNIT else R.A.degree(a)
    coords = _free_coords(R, gens, d)
    for (g, b), c in zip(coords, vec):
        if not c:
            continue
        for lab, v in R.A.mul({a: 1}, {b: 1}).items():
            out[index[(g, lab)]] += c * v
    return out


# --- unnormalized Hochschild oracle -------------------------------------------------------

def hochschild_oracle(A, window, max_length, ring):
    """dim HH_{n,m} for n <= max_length from the unnormalized complex A^{(x)(n+1)}.

    Only for evenly graded commutative algebras, where the classical
    alternating-sum formula has no Koszul signs.
    """
    labels = {0: [UNIT]}
    for d in range(1, window + 1):
        labels[d] = A.basis(d)
        if any(d % 2 for _ in labels[d]):
            raise ValueError("the oracle needs an evenly graded algebra")
    all_labels = [(a, d) for d, v in labels.items() for a in v]
    out = {}
    for m in range(0, window + 1):
        chains = {}
        for n in range(0, max_length + 2):
            chains[n] = [tuple(a for a, _ in combo) for combo in product(all_labels, repeat=n + 1)
                         if sum(d for _, d in combo) == m]
        index = {n: {c: i for i, c in enumerate(v)} for n, v in chains.items()}
        bds = {}
        for n in range(1, max_length + 2):
            rows = [dict() for _ in chains[n - 1]]
            for j, c in enumerate(chains[n]):
                for i in range(n):
                    for lab, v in A.mul({c[i]: 1}, {c[i + 1]: 1}).items():
                        key = c[:i] + (lab,) + c[i + 2:]
                        r = index[n - 1][key]
                        rows[r][j] = rows[r].get(j, 0) + (-1) ** i * v
                for lab, v in A.mul({c[n]: 1}, {c[0]: 1}).items():
                    key = (lab,) + c[1:n]
                    r = index[n - 1][key]
                    rows[r][j] = rows[r].get(j, 0) + (-1) ** n * v
            bds[n] = rows
        C = FgComplex({n: len(v) for n, v in chains.items()}, bds)
        for n, r in homology(C, list(range(0, max_length + 1)), ring).items():
            if r:
                out[(n, m)] = r
    return out


# --- products on Tor ------------------------------------------------------------------------

def tor_product_check(A, w1, w2):
    """The bar product of two cycles is a cycle (the product on Tor is well defined on them)."""
    x, y = bar_word(A, *w1), bar_word(A, *w2)
    if bar_differential(x).terms or bar_differential(y).terms:
        raise ValueError("inputs must be cycles")
    p = bar_product(x, y)
    return p, not bar_differential(p).terms
