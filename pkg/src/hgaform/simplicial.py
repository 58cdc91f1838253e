"""Symbolic simplicial sets.

A simplex is a plain hashable Python value whose meaning is fixed by the
space it belongs to: a weakly increasing vertex tuple for standard
simplices, a tuple of letters for the bar construction of an abelian
group, a tuple of group elements for the universal bundle, and so on.
Spaces are stateless rule tables; all operators return simplices in the
space's own representation and :meth:`SimplicialSet.normalize` produces
the Eilenberg-Zilber normal form on demand.
"""

from dataclasses import dataclass
from itertools import combinations, product as iproduct


class SimplicialError(ValueError):
    """Raised for face/degeneracy indices or operators that do not fit."""


@dataclass(frozen=True)
class NormalForm:
    """``s_{word[0]} ... s_{word[-1]} base`` with ``word`` strictly decreasing."""

    word: tuple
    base: object

    @property
    def is_degenerate(self):
        return bool(self.word)


# --- monotone maps ---------------------------------------------------------

@dataclass(frozen=True)
class MonotoneMap:
    """A weakly increasing map {0..m} -> {0..n}, stored by its values."""

    values: tuple
    target: int

    def __post_init__(self):
        v = self.values
        if not v:
            raise SimplicialError("empty monotone map")
        if any(a > b for a, b in zip(v, v[1:])):
            raise SimplicialError("%r is not weakly increasing" % (v,))
        if v[0] < 0 or v[-1] > self.target:
            raise SimplicialError("%r does not land in [0, %d]" % (v, self.target))

    @property
    def source(self):
        return len(self.values) - 1

    @property
    def kind(self):
        return classify_monotone(self.values)

    def __call__(self, i):
        return self.values[i]

    def then(self, other):
        """The composite ``other o self`` (apply self first)."""
        return MonotoneMap(tuple(other.values[i] for i in self.values), other.target)


def classify_monotone(values):
    """'strict', 'slow' (steps of 0 or 1), or 'general'."""
    steps = [b - a for a, b in zip(values, values[1:])]
    if all(s >= 1 for s in steps):
        return "strict"
    if all(s in (0, 1) for s in steps):
        return "slow"
    return "general"


def _as_values(nu):
    return nu.values if isinstance(nu, MonotoneMap) else tuple(nu)


# --- the generic simplicial set --------------------------------------------

class SimplicialSet:
    """Base class: subclasses provide ``dim``, ``face`` and ``degeneracy``.

    Everything else (degeneracy tests, the action of monotone maps,
    normal forms) has a generic implementation in terms of those three,
    which concrete spaces override when a closed form is cheaper.
    """

    name = "X"
    finite = False

    def dim(self, x):
        raise NotImplementedError

    def face(self, x, i):
        raise NotImplementedError

    def degeneracy(self, x, i):
        raise NotImplementedError

    def basepoint(self):
        raise SimplicialError("%s has no basepoint" % self.name)

    def nondegenerate(self, n):
        """Iterate over the nondegenerate n-simplices (finite spaces only)."""
        raise SimplicialError("%s does not enumerate its simplices" % self.name)

    def contains(self, x):
        return True

    # checked wrappers -------------------------------------------------------

    def d(self, x, i):
        n = self.dim(x)
        if n == 0 or not 0 <= i <= n:
            raise SimplicialError("face index %d invalid in dimension %d" % (i, n))
        return self.face(x, i)

    def s(self, x, i):
        n = self.dim(x)
        if not 0 <= i <= n:
            raise SimplicialError("degeneracy index %d invalid in dimension %d" % (i, n))
        return self.degeneracy(x, i)

    # derived operations -----------------------------------------------------

    def degeneracy_positions(self, x):
        """All i with x in the image of s_i."""
        n = self.dim(x)
        out = []
        for i in range(n):
            if self.degeneracy(self.face(x, i), i) == x:
                out.append(i)
        return out

    def degenerate_at(self, x, i):
        """Whether x = s_i d_i x."""
        return self.degeneracy(self.face(x, i), i) == x

    def is_degenerate(self, x):
        n = self.dim(x)
        for i in range(n):
            if self.degeneracy(self.face(x, i), i) == x:
                return True
        return False

    def normal_form(self, x):
        word = []
        while True:
            pos = self.degeneracy_positions(x)
            if not pos:
                return NormalForm(tuple(word), x)
            i = pos[-1]
            word.append(i)
            x = self.face(x, i)

    def apply_word(self, word, x):
        """Apply ``s_{word[0]} ... s_{word[-1]}`` (rightmost first)."""
        for i in reversed(tuple(word)):
            x = self.s(x, i)
        return x

    def normalize(self, word, base):
        """Normal form of ``s_word(base)``; the input word need not be sorted."""
        return self.normal_form(self.apply_word(word, base))

    def act(self, x, nu):
        """The simplicial operator x -> x(nu) for a monotone map nu into [0, dim x]."""
        nu = _as_values(nu)
        n = self.dim(x)
        if not nu or nu[0] < 0 or nu[-1] > n or any(a > b for a, b in zip(nu, nu[1:])):
            raise SimplicialError("%r is not a monotone map into [0, %d]" % (nu, n))
        return self._act(x, nu, n)

    def _act(self, x, nu, n):
        image = set(nu)
        y = x
        for j in range(n, -1, -1):
            if j not in image:
                y = self.face(y, j)
        for t in range(len(nu) - 1):
            if nu[t] == nu[t + 1]:
                y = self.degeneracy(y, t)
        return y

    def act_unchecked(self, x, nu):
        return self._act(x, nu, self.dim(x))

    def _key(self):
        return id(self)

    def __eq__(self, other):
        return isinstance(other, SimplicialSet) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.name


# --- ordered simplicial complexes and standard simplices --------------------

class OrderedComplex(SimplicialSet):
    """The simplicial set of an ordered simplicial complex.

    Simplices are weakly increasing vertex tuples whose underlying vertex
    set is a face.  ``facets`` are iterables of integer vertices.
    """

    finite = True

    def __init__(self, facets, name=None):
        faces = set()
        for f in facets:
            f = tuple(sorted(set(f)))
            for r in range(1, len(f) + 1):
                faces.update(combinations(f, r))
        self.faces = frozenset(faces)
        self.vertices = tuple(sorted({v for f in faces for v in f}))
        self.name = name or "K%s" % (sorted(max(self.faces, key=len)),)
        self._by_dim = {}
        for f in self.faces:
            self._by_dim.setdefault(len(f) - 1, []).append(f)
        for v in self._by_dim.values():
            v.sort()

    def _key(self):
        return ("K", self.faces)

    def contains(self, x):
        return tuple(sorted(set(x))) in self.faces and list(x) == sorted(x)

    def dim(self, x):
        return len(x) - 1

    def face(self, x, i):
        return x[:i] + x[i + 1:]

    def degeneracy(self, x, i):
        return x[:i + 1] + x[i:]

    def degeneracy_positions(self, x):
        return [i for i in range(len(x) - 1) if x[i] == x[i + 1]]

    def degenerate_at(self, x, i):
        return x[i] == x[i + 1]

    def is_degenerate(self, x):
        return any(a == b for a, b in zip(x, x[1:]))

    def _act(self, x, nu, n):
        return tuple(x[j] for j in nu)

    def nondegenerate(self, n):
        return iter(self._by_dim.get(n, ()))

    def basepoint(self):
        return (self.vertices[0],)

    @property
    def top_dim(self):
        return max(self._by_dim)


class StandardSimplex(OrderedComplex):
    def __init__(self, n):
        self.n = n
        OrderedComplex.__init__(self, [range(n + 1)], name="Delta^%d" % n)

    def top(self):
        return tuple(range(self.n + 1))


def boundary_of_simplex(n):
    """The ordered complex dDelta^n (an (n-1)-sphere)."""
    return OrderedComplex(combinations(range(n + 1), n), name="dDelta^%d" % n)


# --- products --------------------------------------------------------------

def slow_surjections(n, d):
    """Slowly increasing surjections [0, n] -> [0, d], as value tuples."""
    for ups in combinations(range(1, n + 1), d):
        vals = [0]
        ups = set(ups)
        for t in range(1, n + 1):
            vals.append(vals[-1] + (t in ups))
        yield tuple(vals)


class Product(SimplicialSet):
    """Cartesian product; a simplex is the tuple of its components."""

    def __init__(self, *factors):
        if len(factors) < 2:
            raise SimplicialError("a product needs at least two factors")
        self.factors = factors
        self.finite = all(f.finite for f in factors)
        self.name = " x ".join(f.name for f in factors)

    def _key(self):
        return ("P", self.factors)

    def contains(self, x):
        n = self.factors[0].dim(x[0])
        return all(f.contains(c) and f.dim(c) == n for f, c in zip(self.factors, x))

    def dim(self, x):
        return self.factors[0].dim(x[0])

    def face(self, x, i):
        return tuple(f.face(c, i) for f, c in zip(self.factors, x))

    def degeneracy(self, x, i):
        return tuple(f.degeneracy(c, i) for f, c in zip(self.factors, x))

    def degeneracy_positions(self, x):
        common = None
        for f, c in zip(self.factors, x):
            pos = set(f.degeneracy_positions(c))
            common = pos if common is None else common & pos
            if not common:
                return []
        return sorted(common)

    def degenerate_at(self, x, i):
        return all(f.degenerate_at(c, i) for f, c in zip(self.factors, x))

    def is_degenerate(self, x):
        factors = self.factors
        for i in range(self.dim(x)):
            if all(f.degenerate_at(c, i) for f, c in zip(factors, x)):
                return True
        return False

    def _act(self, x, nu, n):
        return tuple(f._act(c, nu, n) for f, c in zip(self.factors, x))

    def basepoint(self):
        return tuple(f.basepoint() for f in self.factors)

    def nondegenerate(self, n):
        if not self.finite:
            return SimplicialSet.nondegenerate(self, n)
        cache = self.__dict__.setdefault("_nd_cache", {})
        if n not in cache:
            cache[n] = self._nondegenerate(n)
        return iter(cache[n])

    def _nondegenerate(self, n):
        choices = []
        for f in self.factors:
            opts = []
            for d in range(n + 1):
                for c in f.nondegenerate(d):
                    for lam in slow_surjections(n, d):
                        rep = frozenset(t for t in range(n) if lam[t] == lam[t + 1])
                        opts.append((f._act(c, lam, d), rep))
            choices.append(opts)
        out = []
        for combo in iproduct(*choices):
            rep = combo[0][1]
            for _, r in combo[1:]:
                rep = rep & r
            if not rep:
                out.append(tuple(c for c, _ in combo))
        out.sort()
        return out

    @property
    def top_dim(self):
        return sum(f.top_dim for f in self.factors)

    def projection(self, k):
        return lambda x: x[k]


# --- simplicial groups -----------------------------------------------------

class SimplicialGroup(SimplicialSet):
    """A simplicial group; levelwise operations take simplices of equal dimension."""

    commutative = False

    def mul(self, g, h):
        raise NotImplementedError

    def inv(self, g):
        raise NotImplementedError

    def identity(self, n):
        raise NotImplementedError

    def basepoint(self):
        return self.identity(0)


class ConstantGroup(SimplicialGroup):
    """The constant simplicial group on Z/m; an n-simplex is ``(n, g)``."""

    finite = True
    commutative = True

    def __init__(self, modulus):
        self.modulus = modulus
        self.name = "Z/%d" % modulus

    def _key(self):
        return ("C", self.modulus)

    def dim(self, x):
        return x[0]

    def face(self, x, i):
        return (x[0] - 1, x[1])

    def degeneracy(self, x, i):
        return (x[0] + 1, x[1])

    def degeneracy_positions(self, x):
        return list(range(x[0]))

    def degenerate_at(self, x, i):
        return True

    def is_degenerate(self, x):
        return x[0] > 0

    def _act(self, x, nu, n):
        return (len(nu) - 1, x[1])

    def nondegenerate(self, n):
        if n == 0:
            return iter([(0, g) for g in range(self.modulus)])
        return iter(())

    def mul(self, g, h):
        return (g[0], (g[1] + h[1]) % self.modulus)

    def inv(self, g):
        return (g[0], (-g[1]) % self.modulus)

    def identity(self, n):
        return (n, 0)


class Integers:
    """The discrete group Z; letters are Python ints."""

    name = "Z"
    zero = 0
    rank = 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a


class Lattice:
    """The discrete group Z^V; letters are integer tuples indexed by ``labels``."""

    def __init__(self, labels):
        self.labels = tuple(labels)
        self.rank = len(self.labels)
        self.zero = (0,) * self.rank
        self.name = "Z^%d" % self.rank

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def unit(self, label):
        v = [0] * self.rank
        v[self.labels.index(label)] = 1
        return tuple(v)


class BarGroup(SimplicialGroup):
    """The simplicial bar construction (nerve) of a discrete abelian group.

    An n-simplex is a tuple of n letters ``[a_1|...|a_n]``.  Faces drop the
    outer letters or add adjacent ones, ``s_i`` inserts a zero letter at
    index i.  The group structure is letterwise addition.  The space is
    reduced: its only 0-simplex is ``()``.
    """

    commutative = True

    def __init__(self, letters):
        self.letters = letters
        self.name = "B%s" % letters.name
        self._zero = letters.zero

    def _key(self):
        return ("B", getattr(self.letters, "labels", None), self.letters.name)

    def dim(self, x):
        return len(x)

    def face(self, x, i):
        n = len(x)
        if i == 0:
            return x[1:]
        if i == n:
            return x[:-1]
        return x[:i - 1] + (self.letters.add(x[i - 1], x[i]),) + x[i + 1:]

    def degeneracy(self, x, i):
        return x[:i] + (self._zero,) + x[i:]

    def degeneracy_positions(self, x):
        z = self._zero
        return [i for i, a in enumerate(x) if a == z]

    def degenerate_at(self, x, i):
        return x[i] == self._zero

    def is_degenerate(self, x):
        return self._zero in x

    def _act(self, x, nu, n):
        add = self.letters.add
        partial = [self._zero]
        for a in x:
            partial.append(add(partial[-1], a))
        neg = self.letters.neg
        return tuple(add(partial[nu[j]], neg(partial[nu[j - 1]])) for j in range(1, len(nu)))

    def mul(self, g, h):
        add = self.letters.add
        return tuple(add(a, b) for a, b in zip(g, h))

    def inv(self, g):
        return tuple(self.letters.neg(a) for a in g)

    def identity(self, n):
        return (self._zero,) * n

    def basepoint(self):
        return ()

    def map_letters(self, fn, target):
        """Induced simplicial map for a group homomorphism on letters."""
        return lambda x: tuple(fn(a) for a in x)


def bar_circle():
    """B Z, the simplicial circle group."""
    return BarGroup(Integers())


def torus(vertices):
    """The simplicial torus B(Z^V) with one circle factor per vertex label."""
    if isinstance(vertices, int):
        vertices = tuple(range(1, vertices + 1))
    return BarGroup(Lattice(vertices))


# --- universal bundles -----------------------------------------------------

class TotalSpace(SimplicialSet):
    """EG = W(G): an n-simplex is the tuple ``(g_n, ..., g_0)``, g_j in G_j."""

    def __init__(self, group):
        self.group = group
        self.name = "E%s" % group.name
        self.finite = False

    def _key(self):
        return ("E", self.group)

    def dim(self, x):
        return len(x) - 1

    def face(self, x, i):
        G = self.group
        n = len(x) - 1
        if i == n:
            return tuple(G.face(x[j], n - j) for j in range(n))
        head = tuple(G.face(x[j], i - j) for j in range(i))
        return head + (G.mul(G.face(x[i], 0), x[i + 1]),) + x[i + 2:]

    def degeneracy(self, x, i):
        G = self.group
        n = len(x) - 1
        head = tuple(G.degeneracy(x[j], i - j) for j in range(i + 1))
        return head + (G.identity(n - i),) + x[i + 1:]

    def basepoint(self):
        return (self.group.identity(0),)

    def contract(self, x):
        """The extra degeneracy S: prepend the identity of the next level."""
        return (self.group.identity(len(x)),) + x

    def translate(self, g, x):
        """Left action of g in G_n on an n-simplex of EG."""
        return (self.group.mul(g, x[0]),) + x[1:]

    def nondegenerate(self, n):
        G = self.group
        if not G.finite:
            return SimplicialSet.nondegenerate(self, n)
        levels = [_all_group_elements(G, j) for j in range(n, -1, -1)]
        return (x for x in iproduct(*levels) if not self.is_degenerate(x))


class BaseSpace(SimplicialSet):
    """BG = W-bar(G): an n-simplex is ``(g_{n-1}, ..., g_0)``; reduced."""

    def __init__(self, group):
        self.group = group
        self.name = "B%s" % group.name
        self.finite = False

    def _key(self):
        return ("W", self.group)

    def dim(self, x):
        return len(x)

    def face(self, x, i):
        G = self.group
        n = len(x)
        if i == 0:
            return x[1:]
        if i == n:
            return tuple(G.face(x[j], n - 1 - j) for j in range(n - 1))
        head = tuple(G.face(x[j], i - 1 - j) for j in range(i - 1))
        return head + (G.mul(G.face(x[i - 1], 0), x[i]),) + x[i + 1:]

    def degeneracy(self, x, i):
        G = self.group
        n = len(x)
        head = tuple(G.degeneracy(x[j], i - 1 - j) for j in range(i))
        return head + (G.identity(n - i),) + x[i:]

    def basepoint(self):
        return ()

    def nondegenerate(self, n):
        G = self.group
        if not G.finite:
            return SimplicialSet.nondegenerate(self, n)
        if n == 0:
            return iter([()])
        levels = [_all_group_elements(G, j) for j in range(n - 1, -1, -1)]
        return (x for x in iproduct(*levels) if not self.is_degenerate(x))


def _all_group_elements(G, n):
    if isinstance(G, ConstantGroup):
        return [(n, g) for g in range(G.modulus)]
    raise SimplicialError("cannot enumerate %s" % G.name)


class UniversalBundle:
    """pi: EG -> BG together with the basepoint e_0, S and the G-action."""

    def __init__(self, group):
        self.group = group
        self.total = TotalSpace(group)
        self.base = BaseSpace(group)
        self.e0 = self.total.basepoint()

    def project(self, x):
        return x[1:]

    def S(self, x):
        return self.total.contract(x)

    def act(self, g, x):
        return self.total.translate(g, x)


def universal_bundle(group):
    return UniversalBundle(group)
