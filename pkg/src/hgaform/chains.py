"""Normalized chains, tensor products with Koszul signs, and the shuffle map.

A :class:`Chain` is a finite linear combination of nondegenerate simplices
of one space (or of tuples of simplices, for a :class:`TensorSpace`).
Degenerate simplices are dropped on construction, zero coefficients are
pruned after every operation, so two chains are equal iff their term
dictionaries are equal.
"""

from itertools import combinations

from .rings import ZZ
from .simplicial import SimplicialSet, Product, slow_surjections


class TensorSpace:
    """The graded basis of C(X_1) (x) ... (x) C(X_l); keys are tuples."""

    finite = False

    def __init__(self, *factors):
        self.factors = factors
        self.name = " (x) ".join(getattr(f, "name", "?") for f in factors)

    def dim(self, key):
        return sum(f.dim(k) for f, k in zip(self.factors, key))

    def degrees(self, key):
        return [f.dim(k) for f, k in zip(self.factors, key)]

    def is_degenerate(self, key):
        return any(f.is_degenerate(k) for f, k in zip(self.factors, key))

    def __eq__(self, other):
        return isinstance(other, TensorSpace) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return self.name


class Suspension:
    """s^shift C: the same basis with degrees raised by ``shift``."""

    def __init__(self, space, shift):
        self.space = space
        self.shift = shift
        self.name = "s^%d %s" % (shift, space.name)

    def dim(self, key):
        return self.space.dim(key) + self.shift

    def is_degenerate(self, key):
        return self.space.is_degenerate(key)

    def __eq__(self, other):
        return isinstance(other, Suspension) and (self.space, self.shift) == (other.space, other.shift)

    def __hash__(self):
        return hash((self.space, self.shift))


class GradedBasis:
    """A graded free module given only by a degree function on labels."""

    def __init__(self, degree, name="M"):
        self._degree = degree
        self.name = name

    def dim(self, key):
        return self._degree(key)

    def is_degenerate(self, key):
        return False


class Chain:
    __slots__ = ("space", "terms", "ring")

    def __init__(self, space, terms=None, ring=ZZ, check=True):
        self.space = space
        self.ring = ring
        out = {}
        if terms:
            norm = ring.normalize
            isdeg = space.is_degenerate
            for k, c in terms.items():
                c = norm(c)
                if c == 0 or (check and isdeg(k)):
                    continue
                out[k] = c
        self.terms = out

    @classmethod
    def _raw(cls, space, terms, ring):
        ch = cls.__new__(cls)
        ch.space = space
        ch.terms = terms
        ch.ring = ring
        return ch

    @classmethod
    def simplex(cls, space, x, coeff=1, ring=ZZ):
        return cls(space, {x: coeff}, ring)

    @classmethod
    def zero(cls, space, ring=ZZ):
        return cls._raw(space, {}, ring)

    # arithmetic -------------------------------------------------------------

    def _combine(self, other, sign):
        if self.space != other.space and other.terms and self.terms:
            raise ValueError("chains on different spaces: %r vs %r" % (self.space, other.space))
        out = dict(self.terms)
        norm = self.ring.normalize
        for k, c in other.terms.items():
            v = norm(out.get(k, 0) + sign * c)
            if v == 0:
                out.pop(k, None)
            else:
                out[k] = v
        space = self.space if self.terms or not other.terms else other.space
        return Chain._raw(space, out, self.ring)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        norm = self.ring.normalize
        out = {}
        for k, v in self.terms.items():
            w = norm(v * c)
            if w != 0:
                out[k] = w
        return Chain._raw(self.space, out, self.ring)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Chain) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items(), key=lambda kc: repr(kc[0])):
            parts.append("%+d*%r" % (c, k) if isinstance(c, int) else "%s*%r" % (c, k))
        return " ".join(parts)

    def coefficient(self, key):
        return self.terms.get(key, 0)

    def degrees(self):
        return {self.space.dim(k) for k in self.terms}

    def degree(self):
        """The common degree of a homogeneous chain (None for 0)."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise ValueError("chain is not homogeneous: degrees %s" % sorted(ds))
        return ds.pop()

    def map_terms(self, fn, space):
        """Linear extension of ``fn: key -> iterable of (key, coeff)``."""
        acc = Accumulator(space, self.ring)
        for k, c in self.terms.items():
            for k2, c2 in fn(k):
                acc.add(k2, c * c2)
        return acc.chain()


class Accumulator:
    """Mutable sum used inside operators; emits a pruned :class:`Chain`."""

    __slots__ = ("space", "ring", "terms", "check")

    def __init__(self, space, ring=ZZ, check=False):
        self.space = space
        self.ring = ring
        self.terms = {}
        self.check = check

    def add(self, key, c):
        if c:
            t = self.terms
            t[key] = t.get(key, 0) + c

    def add_chain(self, ch, c=1):
        t = self.terms
        for k, v in ch.terms.items():
            t[k] = t.get(k, 0) + c * v

    def chain(self):
        norm = self.ring.normalize
        isdeg = self.space.is_degenerate if self.check else None
        out = {}
        for k, c in self.terms.items():
            c = norm(c)
            if c != 0 and not (isdeg and isdeg(k)):
                out[k] = c
        return Chain._raw(self.space, out, self.ring)


def chain_of(space, simplices, ring=ZZ):
    """Sum of the given simplices (or dict simplex -> coefficient)."""
    if isinstance(simplices, dict):
        return Chain(space, simplices, ring)
    acc = {}
    for x in simplices:
        acc[x] = acc.get(x, 0) + 1
    return Chain(space, acc, ring)


# --- differential ------------------------------------------------------------

def boundary_terms(space, key):
    """Boundary of one basis element of any supported graded space."""
    if isinstance(space, TensorSpace):
        out = []
        sign = 1
        for pos, (f, k) in enumerate(zip(space.factors, key)):
            for k2, c in boundary_terms(f, k):
                out.append((key[:pos] + (k2,) + key[pos + 1:], sign * c))
            if f.dim(k) % 2:
                sign = -sign
        return out
    if isinstance(space, Suspension):
        sign = -1 if space.shift % 2 else 1
        return [(k2, sign * c) for k2, c in boundary_terms(space.space, key)]
    if isinstance(space, SimplicialSet):
        n = space.dim(key)
        if n == 0:
            return []
        face = space.face
        isdeg = space.is_degenerate
        out = []
        for i in range(n + 1):
            y = face(key, i)
            if not isdeg(y):
                out.append((y, -1 if i % 2 else 1))
        return out
    if hasattr(space, "boundary_terms"):
        return space.boundary_terms(key)
    raise TypeError("no differential on %r" % (space,))


def boundary(c):
    """The differential of a chain; lowers degree by one and squares to zero."""
    acc = Accumulator(c.space, c.ring)
    for k, v in c.terms.items():
        for k2, s in boundary_terms(c.space, k):
            acc.add(k2, s * v)
    return acc.chain()


# --- tensor products ---------------------------------------------------------

def tensor(*chains):
    """a_1 (x) ... (x) a_l as a chain on the tensor space (no signs arise)."""
    space = TensorSpace(*[c.space for c in chains])
    ring = chains[0].ring
    terms = {(): 1}
    for c in chains:
        terms = {k + (k2,): v * w for k, v in terms.items() for k2, w in c.terms.items()}
    norm = ring.normalize
    terms = {k: norm(v) for k, v in terms.items()}
    return Chain._raw(space, {k: v for k, v in terms.items() if v != 0}, ring)


def transposition(c):
    """T_{B,C}: b (x) c -> (-1)^{|b||c|} c (x) b on a two-fold tensor chain."""
    return permute_factors(c, (1, 0))


def permute_factors(c, perm):
    """Move tensor factor t to slot perm[t] with the Koszul sign."""
    space = c.space
    l = len(space.factors)
    inv = [0] * l
    for t, p in enumerate(perm):
        inv[p] = t
    new_space = TensorSpace(*[space.factors[inv[s]] for s in range(l)])
    acc = Accumulator(new_space, c.ring)
    for key, v in c.terms.items():
        degs = space.degrees(key)
        sign = 0
        for a in range(l):
            for b in range(a + 1, l):
                if perm[a] > perm[b]:
                    sign += degs[a] * degs[b]
        acc.add(tuple(key[inv[s]] for s in range(l)), -v if sign % 2 else v)
    return acc.chain()


def koszul_sign(degrees, perm):
    """Sign of moving graded elements of the given degrees to slots perm[i]."""
    e = 0
    n = len(degrees)
    for a in range(n):
        for b in range(a + 1, n):
            if perm[a] > perm[b]:
                e += degrees[a] * degrees[b]
    return -1 if e % 2 else 1


class GradedMap:
    """A homogeneous linear map given on basis elements.

    ``rule(key)`` returns a :class:`Chain` (or an iterable of
    ``(key, coeff)`` pairs) in ``target``.
    """

    def __init__(self, degree, rule, source, target, name="f"):
        self.degree = degree
        self.rule = rule
        self.source = source
        self.target = target
        self.name = name

    def on_key(self, key):
        r = self.rule(key)
        if isinstance(r, Chain):
            return r.terms.items()
        return r

    def __call__(self, c):
        acc = Accumulator(self.target, c.ring)
        for k, v in c.terms.items():
            for k2, w in self.on_key(k):
                acc.add(k2, v * w)
        return acc.chain()

    def then(self, other):
        """The composite other o self."""
        def rule(k):
            acc = Accumulator(self.target)
            for k2, w in self.on_key(k):
                acc.add(k2, w)
            return other(acc.chain())
        return GradedMap(self.degree + other.degree, rule, self.source, other.target,
                         "%s.%s" % (other.name, self.name))


def identity_map(space):
    return GradedMap(0, lambda k: [(k, 1)], space, space, "1")


def koszul_tensor(*maps):
    """f_1 (x) ... (x) f_l acting with (f(x)g)(a(x)b) = (-1)^{|g||a|} f(a)(x)g(b)."""
    source = TensorSpace(*[m.source for m in maps])
    target = TensorSpace(*[m.target for m in maps])

    def rule(key):
        partial = [((), 1)]
        passed = 0
        for m, k, f in zip(maps, key, source.factors):
            sign = -1 if (m.degree * passed) % 2 else 1
            images = list(m.on_key(k))
            partial = [(acc + (k2,), c * w * sign) for acc, c in partial for k2, w in images]
            passed += f.dim(k)
        return partial

    return GradedMap(sum(m.degree for m in maps), rule, source, target,
                     " (x) ".join(m.name for m in maps))


def suspend(c, times=1):
    """s^times applied to a chain (degree +times, basis unchanged)."""
    sp = c.space
    if isinstance(sp, Suspension):
        base, shift = sp.space, sp.shift + times
    else:
        base, shift = sp, times
    space = base if shift == 0 else Suspension(base, shift)
    return Chain._raw(space, dict(c.terms), c.ring)


def desuspend(c, times=1):
    return suspend(c, -times)


def suspension_map(space, times=1):
    target = Suspension(space, times) if not isinstance(space, Suspension) else Suspension(space.space, space.shift + times)
    return GradedMap(times, lambda k: [(k, 1)], space, target, "s" if times == 1 else "s^%d" % times)


# --- Alexander-Whitney and Eilenberg-Zilber ----------------------------------

def aw_diagonal(c):
    """Delta(x) = sum_i x(0..i) (x) x(i..p)."""
    X = c.space
    acc = Accumulator(TensorSpace(X, X), c.ring)
    isdeg = X.is_degenerate
    for x, v in c.terms.items():
        p = X.dim(x)
        for i in range(p + 1):
            a = X.act_unchecked(x, tuple(range(i + 1)))
            if isdeg(a):
                continue
            b = X.act_unchecked(x, tuple(range(i, p + 1)))
            if isdeg(b):
                continue
            acc.add((a, b), v)
    return acc.chain()


_SHUFFLES = {}


def shuffles(p, q):
    """All (p, q)-shuffles as (lambda, mu, sign)."""
    key = (p, q)
    if key not in _SHUFFLES:
        out = []
        n = p + q
        for ups in combinations(range(1, n + 1), p):
            upset = set(ups)
            lam, mu = [0], [0]
            for t in range(1, n + 1):
                lam.append(lam[-1] + (t in upset))
                mu.append(mu[-1] + (t not in upset))
            inversions = sum(a - 1 - i for i, a in enumerate(ups))
            out.append((tuple(lam), tuple(mu), -1 if inversions % 2 else 1))
        _SHUFFLES[key] = out
    return _SHUFFLES[key]


def shuffle_terms(X, Y, x, y):
    p, q = X.dim(x), Y.dim(y)
    ax, ay = X.act_unchecked, Y.act_unchecked
    return [((ax(x, lam), ay(y, mu)), sign) for lam, mu, sign in shuffles(p, q)]


def shuffle_map(a, b, space=None):
    """The Eilenberg-Zilber shuffle map C(X) (x) C(Y) -> C(X x Y).

    Takes the two chains separately; ``space`` may pass a prebuilt product.
    Nondegenerate inputs give nondegenerate outputs, so no filtering is done.
    """
    X, Y = a.space, b.space
    P = space or Product(X, Y)
    acc = Accumulator(P, a.ring)
    for x, u in a.terms.items():
        for y, v in b.terms.items():
            uv = u * v
            for k, s in shuffle_terms(X, Y, x, y):
                acc.add(k, s * uv)
    return acc.chain()


def shuffle_tensor(c, space=None):
    """The shuffle map applied to a two-fold tensor chain."""
    X, Y = c.space.factors
    P = space or Product(X, Y)
    acc = Accumulator(P, c.ring)
    for (x, y), v in c.terms.items():
        for k, s in shuffle_terms(X, Y, x, y):
            acc.add(k, s * v)
    return acc.chain()


def pushforward(c, fn, target):
    """Image of a chain under a simplicial map (degenerate images vanish)."""
    acc = Accumulator(target, c.ring, check=True)
    for x, v in c.terms.items():
        acc.add(fn(x), v)
    return acc.chain()


def pushforward_tensor(c, fns, target):
    """(f_1)_* (x) ... (x) (f_l)_* on a tensor chain; fns entries may be None."""
    acc = Accumulator(target, c.ring, check=True)
    for key, v in c.terms.items():
        acc.add(tuple(k if f is None else f(k) for f, k in zip(fns, key)), v)
    return acc.chain()


def swap_factors(P):
    """tau: X x Y -> Y x X."""
    return lambda x: (x[1], x[0])


def group_action(a, c, act, target=None):
    """a . c = act_* nabla(a (x) c) for a simplicial action ``act(g, x)``."""
    G, X = a.space, c.space
    target = target or X
    acc = Accumulator(target, a.ring, check=True)
    for g, u in a.terms.items():
        for x, v in c.terms.items():
            uv = u * v
            for (g2, x2), s in shuffle_terms(G, X, g, x):
                acc.add(act(g2, x2), s * uv)
    return acc.chain()


def pontryagin_product(a, b):
    """mu_* nabla(a (x) b) on the chains of a simplicial group."""
    G = a.space
    return group_action(a, b, G.mul, G)


def augmentation(c):
    """epsilon: sum of coefficients of 0-simplices."""
    return sum(v for k, v in c.terms.items() if c.space.dim(k) == 0)


def unit_chain(G, ring=ZZ):
    return Chain._raw(G, {G.identity(0): 1}, ring)
