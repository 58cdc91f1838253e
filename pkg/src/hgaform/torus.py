"""Chain-level formality of the classifying space of a simplicial torus.

For the torus T = B(Z^V) we build the exterior bialgebra Lambda = H(T),
the divided-power coalgebra S = H(BT), the Koszul complex K = Lambda (x) S,
the algebra map phi: Lambda -> C(T) picked by loop representatives, and the
Lambda-equivariant map F: K -> C(ET) given recursively by

    F(1) = e_0,   F(y) = S F(dy) for |y| > 0,   F(a y) = phi(a) . F(y).

Its projection f = pi_* F: S -> C(BT) is the formality map.  Every
property is exposed as a checker returning a :class:`Certificate`.

Labels: an exterior monomial is a sorted tuple of circle indices
(0-based), a basis element y_alpha of S is the exponent tuple alpha, and
a basis element of K is the pair (a, alpha).
"""

from dataclasses import dataclass, field
from itertools import combinations

from .chains import (Accumulator, Chain, TensorSpace, aw_diagonal, boundary,
                     group_action, pontryagin_product, pushforward,
                     pushforward_tensor)
from .rings import ZZ
from .simplicial import torus, universal_bundle
from .surjections import (as_surjection, aw_hat, interval_cut,
                          nondegenerate_surjections)


@dataclass
class Certificate:
    """One checked identity instance; ``witness`` holds a nonzero difference on failure."""

    identity: str
    instance: dict
    status: bool
    witness: object = None

    def record(self):
        out = {"identity": self.identity, "instance": self.instance,
               "status": "pass" if self.status else "fail"}
        if not self.status:
            out["witness"] = _witness(self.witness)
        return out


def _witness(w):
    """A failing difference as sorted [key, coefficient] pairs."""
    terms = w.terms if isinstance(w, Chain) else w if isinstance(w, dict) else None
    if terms is None:
        return repr(w)
    return sorted([repr(k), str(v)] for k, v in terms.items())


def certify(identity, instance, difference):
    """Certificate for ``difference == 0`` (a chain or a dict)."""
    terms = difference.terms if isinstance(difference, Chain) else difference
    return Certificate(identity, instance, not terms, None if not terms else difference)


# --- Lambda, S and K ---------------------------------------------------------------

def exterior_product(a, b):
    """x_a x_b in Lambda as (sign, monomial) or None when it vanishes."""
    if set(a) & set(b):
        return None
    inversions = sum(1 for i in a for j in b if i > j)
    return (-1 if inversions % 2 else 1), tuple(sorted(a + b))


def exterior_coproduct(a):
    """Delta x_a = sum sign x_a' (x) x_a'' with primitive generators."""
    out = []
    for r in range(len(a) + 1):
        for left in combinations(a, r):
            right = tuple(i for i in a if i not in left)
            inversions = sum(1 for i in left for j in right if i > j)
            out.append(((left, right), -1 if inversions % 2 else 1))
    return out


def exterior_basis(n, degree=None):
    degs = range(n + 1) if degree is None else [degree]
    return [m for d in degs for m in combinations(range(n), d)]


def divided_basis(n, weight):
    """All alpha in N^n with |alpha| = weight (y_alpha has degree 2 |alpha|)."""
    if n == 0:
        return [()] if weight == 0 else []
    out = []
    for first in range(weight, -1, -1):
        for rest in divided_basis(n - 1, weight - first):
            out.append((first,) + rest)
    return out


def divided_coproduct(alpha):
    """Delta y_alpha = sum_{beta + gamma = alpha} y_beta (x) y_gamma."""
    out = [((),)]
    for a in alpha:
        out = [p + (b,) for p in out for b in range(a + 1)]
    return [((tuple(p[1:]), tuple(a - b for a, b in zip(alpha, p[1:]))), 1) for p in out]


def koszul_degree(key):
    a, alpha = key
    return len(a) + 2 * sum(alpha)


def koszul_differential(key):
    """d(a y_alpha) = sum_i x_i a y_{alpha|i} as a list of (key, sign)."""
    a, alpha = key
    out = []
    for i, e in enumerate(alpha):
        if not e:
            continue
        prod = exterior_product((i,), a)
        if prod is None:
            continue
        sign, m = prod
        lowered = alpha[:i] + (e - 1,) + alpha[i + 1:]
        out.append(((m, lowered), sign))
    return out


def koszul_coproduct(key):
    """Delta_K on Lambda (x) S; S is evenly graded so only Lambda's signs appear."""
    a, alpha = key
    out = []
    for (a1, a2), s in exterior_coproduct(a):
        for (b1, b2), t in divided_coproduct(alpha):
            out.append((((a1, b1), (a2, b2)), s * t))
    return out


def koszul_basis(n, top_degree):
    out = []
    for d in range(top_degree + 1):
        for r in range(min(n, d) + 1):
            if (d - r) % 2:
                continue
            for a in combinations(range(n), r):
                for alpha in divided_basis(n, (d - r) // 2):
                    out.append((a, alpha))
    return out


class KoszulSpace:
    """Graded basis of K for use in :class:`~hgaform.chains.Chain`."""

    finite = False

    def __init__(self, n):
        self.n = n
        self.name = "K%d" % n

    def dim(self, key):
        return koszul_degree(key)

    def is_degenerate(self, key):
        return False

    def boundary_terms(self, key):
        return koszul_differential(key)

    def __eq__(self, other):
        return isinstance(other, KoszulSpace) and other.n == self.n

    def __hash__(self):
        return hash(("K", self.n))


def koszul_homology_ranks(n, top_degree, ring=None):
    """Ranks of H(K) up to ``top_degree`` (should be 1 in degree 0, else 0)."""
    from .homlin import FgComplex, homology
    from .rings import QQ
    ring = ring or QQ
    by_deg = {}
    for key in koszul_basis(n, top_degree + 1):
        by_deg.setdefault(koszul_degree(key), []).append(key)
    index = {d: {k: i for i, k in enumerate(v)} for d, v in by_deg.items()}
    bds = {}
    for d, keys in by_deg.items():
        if d == 0:
            continue
        rows = [dict() for _ in by_deg.get(d - 1, [])]
        for j, key in enumerate(keys):
            for k2, s in koszul_differential(key):
                rows[index[d - 1][k2]][j] = rows[index[d - 1][k2]].get(j, 0) + s
        bds[d] = rows
    C = FgComplex({d: len(v) for d, v in by_deg.items()}, bds)
    return homology(C, list(range(top_degree + 1)), ring)


# --- the formality map ------------------------------------------------------------

def default_representatives(n):
    """c_i = the 1-simplex [e_i] of the i-th circle factor."""
    return [{((tuple(int(j == i) for j in range(n)),)): 1} for i in range(n)]


class TorusFormality:
    """F, phi and f for the torus with circle factors ``labels``.

    ``reps`` optionally overrides the loop representatives: a list of dicts
    mapping 1-simplices of T to coefficients, one per circle.
    """

    def __init__(self, labels, reps=None, ring=ZZ):
        if isinstance(labels, int):
            labels = tuple(range(1, labels + 1))
        self.labels = tuple(labels)
        self.n = len(self.labels)
        self.ring = ring
        self.T = torus(self.labels)
        self.bundle = universal_bundle(self.T)
        self.ET = self.bundle.total
        self.BT = self.bundle.base
        reps = reps if reps is not None else default_representatives(self.n)
        if len(reps) != self.n:
            raise ValueError("need one representative per circle, got %d for %d" % (len(reps), self.n))
        self.reps = [Chain(self.T, dict(r), ring) for r in reps]
        for i, c in enumerate(self.reps):
            self._check_loop(i, c)
        self._phi = {}
        self._F = {}
        self._f = {}

    def _check_loop(self, i, c):
        T = self.T
        for x in c.terms:
            if T.dim(x) != 1 or T.face(x, 0) != T.identity(0) or T.face(x, 1) != T.identity(0):
                raise ValueError("representative %d is not a combination of loops at 1" % i)

    # phi ----------------------------------------------------------------------------

    def phi(self, a):
        """phi(x_{i_1} ... x_{i_r}) = c_{i_1} ... c_{i_r} (Pontryagin product)."""
        a = tuple(a)
        if a not in self._phi:
            if not a:
                out = Chain._raw(self.T, {self.T.identity(0): 1}, self.ring)
            else:
                out = pontryagin_product(self.reps[a[0]], self.phi(a[1:]))
            self._phi[a] = out
        return self._phi[a]

    def phi_chain(self, terms):
        """phi on a combination ``{monomial: coeff}``."""
        acc = Accumulator(self.T, self.ring)
        for a, c in terms.items():
            acc.add_chain(self.phi(a), c)
        return acc.chain()

    # F ------------------------------------------------------------------------------

    def act(self, chain_on_T, chain_on_ET):
        return group_action(chain_on_T, chain_on_ET, self.bundle.act, self.ET)

    def F(self, key):
        """F(a y_alpha) as a chain on ET (memoized)."""
        a, alpha = key
        key = (tuple(a), tuple(alpha))
        if key in self._F:
            return self._F[key]
        a, alpha = key
        if a:
            out = self.act(self.phi(a), self.F(((), alpha)))
        elif not any(alpha):
            out = Chain._raw(self.ET, {self.bundle.e0: 1}, self.ring)
        else:
            acc = Accumulator(self.ET, self.ring)
            for k2, s in koszul_differential(key):
                acc.add_chain(self.F(k2), s)
            out = pushforward(acc.chain(), self.bundle.S, self.ET)
        self._F[key] = out
        return out

    def F_chain(self, c):
        """F on a chain of K (a Chain on KoszulSpace)."""
        acc = Accumulator(self.ET, self.ring)
        for key, v in c.terms.items():
            acc.add_chain(self.F(key), v)
        return acc.chain()

    def f(self, alpha):
        """f(y_alpha) = pi_* F(y_alpha), a cycle on BT."""
        alpha = tuple(alpha)
        if alpha not in self._f:
            self._f[alpha] = pushforward(self.F(((), alpha)), self.bundle.project, self.BT)
        return self._f[alpha]

    def f_pair(self, gamma, alpha):
        """(ᵗf gamma)(y_alpha) = gamma(f(y_alpha))."""
        return gamma.evaluate(self.f(alpha))

    def key_chain(self, key):
        return Chain._raw(KoszulSpace(self.n), {key: 1}, self.ring)

    # checks ---------------------------------------------------------------------------

    def check_phi_cycles(self, top_degree):
        out = []
        for a in exterior_basis(self.n):
            if len(a) <= top_degree:
                out.append(certify("d phi = 0", {"a": list(a)}, boundary(self.phi(a))))
        return out

    def check_chain_map(self, top_degree):
        """dF = F d on every basis element of K up to ``top_degree``."""
        out = []
        for key in koszul_basis(self.n, top_degree):
            lhs = boundary(self.F(key))
            rhs = self.F_chain(Chain(KoszulSpace(self.n), dict(_collect(koszul_differential(key))), self.ring))
            out.append(certify("dF = Fd", _key_instance(key), lhs - rhs))
        return out

    def check_coalgebra(self, top_degree):
        """Delta F = (F (x) F) Delta_K on every basis element up to ``top_degree``."""
        out = []
        space = TensorSpace(self.ET, self.ET)
        for key in koszul_basis(self.n, top_degree):
            lhs = aw_diagonal(self.F(key))
            acc = Accumulator(space, self.ring)
            for (k1, k2), s in koszul_coproduct(key):
                F1, F2 = self.F(k1), self.F(k2)
                for x, u in F1.terms.items():
                    for y, v in F2.terms.items():
                        acc.add((x, y), s * u * v)
            out.append(certify("Delta F = (F (x) F) Delta", _key_instance(key), lhs - acc.chain()))
        return out

    def check_equivariance(self, top_degree):
        """F(a . k) = phi(a) . F(k), computing the right side through the action twice."""
        out = []
        for key in koszul_basis(self.n, top_degree):
            b, alpha = key
            for a in exterior_basis(self.n):
                if len(a) + koszul_degree(key) > top_degree:
                    continue
                prod = exterior_product(a, b)
                lhs = Chain.zero(self.ET, self.ring) if prod is None else self.F((prod[1], alpha)).scale(prod[0])
                rhs = self.act(self.phi(a), self.F(key))
                inst = dict(_key_instance(key), by=list(a))
                out.append(certify("F(a k) = phi(a) F(k)", inst, lhs - rhs))
        return out

    def check_f_coalgebra(self, top_weight):
        """Delta f(y) = (f (x) f) Delta y on BT."""
        out = []
        space = TensorSpace(self.BT, self.BT)
        for w in range(top_weight + 1):
            for alpha in divided_basis(self.n, w):
                lhs = aw_diagonal(self.f(alpha))
                acc = Accumulator(space, self.ring)
                for (b, g), s in divided_coproduct(alpha):
                    for x, u in self.f(b).terms.items():
                        for y, v in self.f(g).terms.items():
                            acc.add((x, y), s * u * v)
                out.append(certify("Delta f = (f (x) f) Delta", {"alpha": list(alpha)}, lhs - acc.chain()))
                out.append(certify("d f = 0", {"alpha": list(alpha)}, boundary(self.f(alpha))))
        return out

    def verify_vanishing(self, u, alpha):
        """AW_u f(y_alpha) = 0 for a strongly biased u."""
        u = as_surjection(u)
        if not u.strongly_biased:
            raise ValueError("%r is not strongly biased" % (u,))
        return certify("AW_u f = 0", {"u": list(u.values), "alpha": list(alpha)},
                       interval_cut(u, self.f(alpha)))

    def verify_vanishing_hat(self, u, key):
        """(1 (x) pi_*^l) AW_u F(a y) = 0 for a strongly 1-biased u."""
        u = as_surjection(u)
        if not u.strongly_one_biased:
            raise ValueError("%r is not strongly 1-biased" % (u,))
        return certify("AW-hat_u F = 0", dict(_key_instance(key), u=list(u.values)),
                       aw_hat(u, self.F(key), self.bundle))

    def vanishing_suite(self, max_degree, max_arity, top_weight):
        """AW_u f(y_alpha) for all strongly biased u with deg u <= max_degree, arity <= max_arity."""
        out = []
        us = strongly_biased_surjections(max_degree, max_arity)
        for w in range(1, top_weight + 1):
            for alpha in divided_basis(self.n, w):
                for u in us:
                    out.append(self.verify_vanishing(u, alpha))
        return out

    def homology_surrogate(self, top_weight):
        """f(1) is the basepoint and each f(y_alpha) pairs nontrivially with its own support."""
        out = [Certificate("f(1) = basepoint", {},
                           self.f((0,) * self.n).terms == {self.BT.basepoint(): 1})]
        for w in range(1, top_weight + 1):
            for alpha in divided_basis(self.n, w):
                c = self.f(alpha)
                pairing = sum(v * v for v in c.terms.values())
                out.append(Certificate("f(y) nonzero cycle", {"alpha": list(alpha)},
                                       bool(c.terms) and pairing != 0 and not boundary(c).terms))
        return out


def strongly_biased_surjections(max_degree, max_arity):
    out = []
    for l in range(1, max_arity + 1):
        for k in range(1, max_degree + 1):
            out.extend(u for u in nondegenerate_surjections(k + l, l) if u.strongly_biased)
    return out


def _collect(terms):
    out = {}
    for k, s in terms:
        out[k] = out.get(k, 0) + s
    return out


def _key_instance(key):
    a, alpha = key
    return {"a": list(a), "alpha": list(alpha)}


# --- naturality -----------------------------------------------------------------------

def _letter_map(src, dst, mapping):
    """A lattice homomorphism Z^src -> Z^dst sending coordinate i to mapping[i] (or dropping it)."""
    def fn(letter):
        out = [0] * dst.n
        for i, a in enumerate(letter):
            j = mapping.get(i)
            if j is not None:
                out[j] += a
        return tuple(out)
    return fn


def base_map(src, dst, mapping):
    """The map BT_src -> BT_dst induced by a coordinate map of tori."""
    fn = _letter_map(src, dst, mapping)
    return lambda x: tuple(tuple(fn(a) for a in g) for g in x)


def divided_map(alpha, n_dst, mapping):
    """The induced map on S: y_alpha -> y_beta, or None if it vanishes."""
    beta = [0] * n_dst
    for i, a in enumerate(alpha):
        j = mapping.get(i)
        if j is None:
            if a:
                return None
            continue
        beta[j] += a
    return tuple(beta)


def check_naturality(src, dst, mapping, top_weight):
    """f_dst o S(m) = C(m) o f_src for a coordinatewise map of tori.

    ``mapping`` sends circle indices of ``src`` to circle indices of ``dst``
    (an injection for inclusions); indices absent from it are collapsed.
    """
    out = []
    m = base_map(src, dst, mapping)
    for w in range(top_weight + 1):
        for alpha in divided_basis(src.n, w):
            lhs = pushforward(src.f(alpha), m, dst.BT)
            beta = divided_map(alpha, dst.n, mapping)
            rhs = dst.f(beta) if beta is not None else Chain.zero(dst.BT, dst.ring)
            out.append(certify("naturality", {"alpha": list(alpha), "map": {str(k): v for k, v in mapping.items()}},
                               lhs - rhs))
    return out


# --- cup_2 probe -------------------------------------------------------------------------

def linear_cocycle(formality, i):
    """The 2-cocycle on BT reading off the i-th coordinate of the top letter.

    A 2-simplex of BT is ``(g_1, g_0)`` with g_1 = (a,) in T_1; the cochain
    takes a_i.  It represents the dual of y_i.
    """
    from .cochains import Cochain

    def rule(x):
        return x[0][0][i]

    return Cochain(formality.BT, 2, rule=rule, ring=formality.ring)


def cup2_probe(formality, top_weight=2):
    """Pair cup_2 of the linear cocycles with f(y_alpha); a report, not a claim."""
    from .cochains import cup2
    rows = []
    for i in range(formality.n):
        for j in range(formality.n):
            g = cup2(linear_cocycle(formality, i), linear_cocycle(formality, j))
            for alpha in divided_basis(formality.n, 1):
                rows.append({"i": i, "j": j, "alpha": list(alpha),
                             "value": int(formality.f_pair(g, alpha)) if g.degree == 2 else 0})
    return rows
