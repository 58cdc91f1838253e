"""Bar constructions of augmented dgas, hga products, Hochschild chains.

Algebras are cohomologically graded and presented by a basis of the
augmentation ideal together with structure-constant rules.  An element of
A is a dict ``label -> coeff`` where the unit has the reserved label
:data:`UNIT`.  Bar words are tuples of augmentation-ideal labels; a bar
element is a :class:`~hgaform.chains.Chain` on a :class:`BarSpace`.

Everything is truncated: an algebra only knows its basis up to some
internal degree and multiplying past it raises :class:`WindowError`
instead of silently returning zero.
"""

from itertools import combinations, product as iproduct

from .chains import Accumulator, Chain, TensorSpace
from .homlin import FgComplex, WindowError, homology
from .rings import QQ

UNIT = "1"


class AlgebraError(ValueError):
    pass


def _add_into(acc, vec, c=1):
    for k, v in vec.items():
        acc[k] = acc.get(k, 0) + c * v


def _prune(vec, ring):
    out = {}
    for k, v in vec.items():
        v = ring.normalize(v)
        if v != 0:
            out[k] = v
    return out


class PresentedDGA:
    """An augmented dga given by rules on a basis of the augmentation ideal.

    Subclasses implement ``degree``, ``basis`` (labels of the augmentation
    ideal in one degree), ``_mul`` on two ideal labels and optionally
    ``_d`` and ``hga_op``.  ``window`` is the largest internal degree whose
    basis is known.
    """

    commutative = False
    window = None
    ring = QQ
    name = "A"

    def degree(self, label):
        raise NotImplementedError

    def basis(self, n):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _d(self, a):
        return {}

    def hga_op(self, a, bs):
        """E_k(a; b_1..b_k) for k = len(bs) >= 1; trivial by default."""
        return {}

    @property
    def trivial_hga(self):
        return True

    def check_window(self, n):
        if self.window is not None and n > self.window:
            raise WindowError("%s is only known up to degree %d, asked for %d" % (self.name, self.window, n))

    # element arithmetic --------------------------------------------------------

    def mul(self, x, y):
        """Product of two elements (dicts)."""
        out = {}
        for a, u in x.items():
            for b, v in y.items():
                if a == UNIT:
                    _add_into(out, {b: 1}, u * v)
                elif b == UNIT:
                    _add_into(out, {a: 1}, u * v)
                else:
                    self.check_window(self.degree(a) + self.degree(b))
                    _add_into(out, self._mul(a, b), u * v)
        return _prune(out, self.ring)

    def d(self, x):
        out = {}
        for a, u in x.items():
            if a != UNIT:
                _add_into(out, self._d(a), u)
        return _prune(out, self.ring)

    def E(self, x, ys):
        """Multilinear extension of :meth:`hga_op`; vanishes if an input is the unit."""
        out = {}
        for combo in iproduct(*[list(y.items()) for y in ys]):
            labels = [b for b, _ in combo]
            coeff = 1
            for _, v in combo:
                coeff *= v
            for a, u in x.items():
                if a == UNIT or UNIT in labels:
                    continue
                _add_into(out, self.hga_op(a, tuple(labels)), u * coeff)
        return _prune(out, self.ring)

    def augmentation(self, x):
        return x.get(UNIT, 0)

    def element_degree(self, x):
        degs = {0 if a == UNIT else self.degree(a) for a in x}
        if len(degs) > 1:
            raise AlgebraError("inhomogeneous element %r" % (x,))
        return degs.pop() if degs else None

    def all_labels(self, top):
        out = [UNIT]
        for n in range(0, top + 1):
            out.extend(self.basis(n))
        return out

    # self-checks ---------------------------------------------------------------

    def check_axioms(self, top):
        """d^2 = 0, Leibniz, associativity, (graded) commutativity if claimed."""
        labels = [a for n in range(top + 1) for a in self.basis(n)]
        deg = self.degree
        for a in labels:
            if self.d(self.d({a: 1})):
                raise AlgebraError("d^2 != 0 on %r" % (a,))
        for a, b in iproduct(labels, repeat=2):
            if deg(a) + deg(b) > top:
                continue
            ab = self.mul({a: 1}, {b: 1})
            lhs = self.d(ab)
            rhs = dict(self.mul(self.d({a: 1}), {b: 1}))
            _add_into(rhs, self.mul({a: 1}, self.d({b: 1})), (-1) ** deg(a))
            if lhs != _prune(rhs, self.ring):
                raise AlgebraError("Leibniz fails on %r, %r" % (a, b))
            if self.commutative:
                ba = self.mul({b: 1}, {a: 1})
                if ab != _prune({k: (-1) ** (deg(a) * deg(b)) * v for k, v in ba.items()}, self.ring):
                    raise AlgebraError("not graded commutative on %r, %r" % (a, b))
        for a, b, c in iproduct(labels, repeat=3):
            if deg(a) + deg(b) + deg(c) > top:
                continue
            x, y, z = {a: 1}, {b: 1}, {c: 1}
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)):
                raise AlgebraError("not associative on %r, %r, %r" % (a, b, c))
        return True


class TableAlgebra(PresentedDGA):
    """A dga given by explicit tables: ``basis_by_degree``, ``products`` and ``differentials``.

    Missing products are zero.  Useful for small hand-made examples.
    """

    def __init__(self, basis_by_degree, products=None, differentials=None, window=None,
                 commutative=False, ring=QQ, name="A"):
        self._basis = {n: list(v) for n, v in basis_by_degree.items()}
        self._deg = {a: n for n, v in self._basis.items() for a in v}
        self._products = products or {}
        self._diffs = differentials or {}
        self.window = window if window is not None else max(self._basis, default=0)
        self.commutative = commutative
        self.ring = ring
        self.name = name

    def degree(self, a):
        return self._deg[a]

    def basis(self, n):
        return list(self._basis.get(n, []))

    def _mul(self, a, b):
        return dict(self._products.get((a, b), {}))

    def _d(self, a):
        return dict(self._diffs.get(a, {}))


class MonomialAlgebra(PresentedDGA):
    """k[x_1..x_n] modulo a monomial ideal, with generator degrees (d = 0).

    Odd generators anticommute and square to zero.  Labels are exponent
    tuples.  ``allowed(expo)`` decides whether a monomial survives the
    ideal (e.g. its support is a face of a simplicial complex).  With
    ``exact`` the algebra is known to vanish above ``window``, so no degree
    is out of range.
    """

    def __init__(self, degrees, window, allowed=None, ring=QQ, name="k[x]", exact=False):
        self.degrees = tuple(degrees)
        self.window = None if exact else window
        self.allowed = allowed or (lambda e: True)
        self.ring = ring
        self.name = name
        self.commutative = True
        self._basis = {}
        n = len(self.degrees)
        for expo in _exponents(self.degrees, window):
            if any(e > 1 and d % 2 for e, d in zip(expo, self.degrees)):
                continue
            if sum(expo) == 0 or not self.allowed(expo):
                continue
            self._basis.setdefault(self._deg_of(expo), []).append(expo)
        for v in self._basis.values():
            v.sort()
        self.rank = n

    def _deg_of(self, expo):
        return sum(e * d for e, d in zip(expo, self.degrees))

    def degree(self, a):
        return self._deg_of(a)

    def basis(self, n):
        self.check_window(n)
        return list(self._basis.get(n, []))

    def generator(self, i):
        e = [0] * len(self.degrees)
        e[i] = 1
        return tuple(e)

    def _mul(self, a, b):
        c = tuple(x + y for x, y in zip(a, b))
        if any(e > 1 and d % 2 for e, d in zip(c, self.degrees)):
            return {}
        if not self.allowed(c):
            return {}
        # sign from moving odd generators of b past odd generators of a
        sign = 0
        for j, (eb, db) in enumerate(zip(b, self.degrees)):
            if eb and db % 2:
                sign += sum(ea for i, (ea, da) in enumerate(zip(a, self.degrees)) if i > j and da % 2)
        return {c: -1 if sign % 2 else 1}


def _exponents(degrees, top):
    n = len(degrees)

    def rec(i, budget):
        if i == n:
            yield ()
            return
        d = degrees[i]
        e = 0
        while e * d <= budget:
            for rest in rec(i + 1, budget - e * d):
                yield (e,) + rest
            if d == 0:
                break
            e += 1

    return rec(0, top)


def polynomial_algebra(n_vars, window, degree=2, ring=QQ):
    return MonomialAlgebra([degree] * n_vars, window, ring=ring, name="k[%d vars]" % n_vars)


def exterior_algebra(n_vars, ring=QQ):
    return MonomialAlgebra([1] * n_vars, n_vars, ring=ring, name="Lambda[%d]" % n_vars, exact=True)


def truncated_polynomial(height, degree=2, ring=QQ):
    """k[t]/t^height with |t| = degree."""
    return MonomialAlgebra([degree], degree * (height - 1), allowed=lambda e: e[0] < height,
                           ring=ring, name="k[t]/t^%d" % height, exact=True)


class CochainAlgebra(PresentedDGA):
    """C*(X) of a finite simplicial set with its interval-cut hga structure.

    The augmentation is evaluation at ``basepoint`` (a vertex).  Basis of
    the augmentation ideal: the dual basis elements of all nondegenerate
    simplices except the basepoint.  ``swapped`` selects the operations
    of the opposite convention.
    """

    def __init__(self, X, top=None, basepoint=None, ring=QQ, swapped=False):
        from . import cochains as cc
        self._cc = cc
        self.X = X
        # a finite simplicial set has no cochains above its dimension
        self.window = top
        self.top = X.top_dim if top is None else top
        self.base = basepoint or X.basepoint()
        self.ring = ring
        self.swapped = swapped
        self.name = "C*(%s)" % X.name
        self._basis = {n: [x for x in X.nondegenerate(n) if x != self.base]
                       for n in range(self.top + 1)}
        self._cache = {}

    @property
    def trivial_hga(self):
        return False

    def degree(self, a):
        return self.X.dim(a)

    def basis(self, n):
        self.check_window(n)
        return list(self._basis.get(n, []))

    def to_cochain(self, x, degree=None):
        cc = self._cc
        if degree is None:
            degree = self.element_degree(x) or 0
        vals = {}
        for a, c in x.items():
            if a == UNIT:
                for v in self.X.nondegenerate(0):
                    vals[v] = vals.get(v, 0) + c
            else:
                vals[a] = vals.get(a, 0) + c
        return cc.Cochain(self.X, degree, vals, ring=self.ring)

    def from_cochain(self, gamma):
        out = {}
        if gamma.degree == 0:
            b = gamma(self.base)
            if b:
                out[UNIT] = b
            for v in self.X.nondegenerate(0):
                if v != self.base:
                    out[v] = gamma(v) - b
        else:
            for x in self.X.nondegenerate(gamma.degree):
                out[x] = gamma(x)
        return _prune(out, self.ring)

    def _mul(self, a, b):
        key = ("m", a, b)
        if key not in self._cache:
            cc = self._cc
            self._cache[key] = self.from_cochain(cc.cup(self.to_cochain({a: 1}), self.to_cochain({b: 1})))
        return self._cache[key]

    def _d(self, a):
        key = ("d", a)
        if key not in self._cache:
            cc = self._cc
            g = cc.coboundary(self.to_cochain({a: 1}))
            self._cache[key] = self.from_cochain(g) if g.degree <= self.top else {}
        return self._cache[key]

    def hga_op(self, a, bs):
        key = ("E", a, bs)
        if key not in self._cache:
            cc = self._cc
            alpha = self.to_cochain({a: 1})
            betas = [self.to_cochain({b: 1}) for b in bs]
            if self.swapped:
                g = cc.hga_operation_swapped(betas, alpha)
            else:
                g = cc.hga_operation(alpha, betas)
            self._cache[key] = self.from_cochain(g) if 0 <= g.degree <= self.top else {}
        return self._cache[key]


# --- bar construction ---------------------------------------------------------------

class BarSpace:
    """The graded basis of BA: words of augmentation-ideal labels."""

    finite = False

    def __init__(self, algebra):
        self.algebra = algebra
        self.name = "B%s" % algebra.name

    def dim(self, word):
        deg = self.algebra.degree
        return sum(deg(a) - 1 for a in word)

    def internal(self, word):
        deg = self.algebra.degree
        return sum(deg(a) for a in word)

    def is_degenerate(self, word):
        return False

    def boundary_terms(self, word):
        return bar_differential_terms(self.algebra, word)

    def __eq__(self, other):
        return isinstance(other, BarSpace) and other.algebra is self.algebra

    def __hash__(self):
        return hash(("bar", id(self.algebra)))

    def __repr__(self):
        return self.name


def bar_word(A, *letters, coeff=1):
    return Chain._raw(BarSpace(A), {tuple(letters): coeff}, A.ring)


def _splice(word, i, j, vec):
    """Replace word[i:j] by each label of vec (skipping the unit)."""
    out = []
    for lab, c in vec.items():
        if lab == UNIT:
            continue
        out.append((word[:i] + (lab,) + word[j:], c))
    return out


def _prefix_signs(A, word):
    """eps_i = sum_{j<=i} (deg a_j - 1), for i = 0..k."""
    eps = [0]
    for a in word:
        eps.append(eps[-1] + A.degree(a) - 1)
    return eps


def bar_differential_terms(A, word):
    eps = _prefix_signs(A, word)
    out = []
    for i, a in enumerate(word):
        s = 1 if eps[i] % 2 else -1
        for w, c in _splice(word, i, i + 1, A.d({a: 1})):
            out.append((w, s * c))
    for i in range(len(word) - 1):
        s = -1 if eps[i + 1] % 2 else 1
        for w, c in _splice(word, i, i + 2, A.mul({word[i]: 1}, {word[i + 1]: 1})):
            out.append((w, s * c))
    return out


def bar_differential(c):
    """d on BA (degree +1 in the cohomological grading)."""
    A = c.space.algebra
    acc = Accumulator(c.space, c.ring)
    for w, v in c.terms.items():
        for w2, s in bar_differential_terms(A, w):
            acc.add(w2, s * v)
    return acc.chain()


def bar_diagonal(c):
    """Delta[a_1|...|a_k] = sum_i [a_1|...|a_i] (x) [a_{i+1}|...|a_k]."""
    space = TensorSpace(c.space, c.space)
    acc = Accumulator(space, c.ring)
    for w, v in c.terms.items():
        for i in range(len(w) + 1):
            acc.add((w[:i], w[i:]), v)
    return acc.chain()


def bar_counit(c):
    return c.terms.get((), 0)


def _twisting_value(A, left, right):
    """The component E_{kl}(left (x) right) as an element of the ideal."""
    if len(left) == 1 and not right:
        return {left[0]: 1}
    if not left and len(right) == 1:
        return {right[0]: 1}
    if len(left) == 1 and right and not A.trivial_hga:
        a = left[0]
        k = len(right)
        eps = A.degree(a) * k + sum(A.degree(b) * (k - 1 - j) for j, b in enumerate(right))
        val = A.E({a: 1}, [{b: 1} for b in right])
        if eps % 2:
            val = {x: -c for x, c in val.items()}
        return {x: c for x, c in val.items() if x != UNIT}
    return {}


def _compositions(k, l):
    """Decompositions of (k, l) into r >= 1 nonempty pieces (pairs of lengths)."""
    if k == 0 and l == 0:
        yield ()
        return
    for a in range(k + 1):
        for b in range(l + 1):
            if a == 0 and b == 0:
                continue
            for rest in _compositions(k - a, l - b):
                yield ((a, b),) + rest


def bar_product_words(A, w, v):
    """The product of two bar words as a dict word -> coeff."""
    space = BarSpace(A)
    dim = space.dim
    out = {}
    for pieces in _compositions(len(w), len(v)):
        # only pieces (1,0), (0,1), (1,l) can have nonzero twisting value
        if any(not (a == 1 or (a == 0 and b == 1)) for a, b in pieces):
            continue
        if A.trivial_hga and any(a == 1 and b > 0 for a, b in pieces):
            continue
        ws, vs = [], []
        i = j = 0
        for a, b in pieces:
            ws.append(w[i:i + a])
            vs.append(v[j:j + b])
            i += a
            j += b
        # Koszul sign of w_1..w_r v_1..v_r -> (w_1 v_1)...(w_r v_r)
        e = 0
        for t in range(len(pieces)):
            for t2 in range(t + 1, len(pieces)):
                e += dim(vs[t]) * dim(ws[t2])
        partial = {(): -1 if e % 2 else 1}
        for wt, vt in zip(ws, vs):
            val = _twisting_value(A, wt, vt)
            if not val:
                partial = {}
                break
            partial = {p + (x,): c * cv for p, c in partial.items() for x, cv in val.items()}
        _add_into(out, partial)
    return _prune(out, A.ring)


def bar_product(c1, c2):
    """The hga product on BA, extended bilinearly."""
    A = c1.space.algebra
    acc = Accumulator(c1.space, c1.ring)
    for w, u in c1.terms.items():
        for v, x in c2.terms.items():
            for word, c in bar_product_words(A, w, v).items():
                acc.add(word, u * x * c)
    return acc.chain()


def tensor_product_bar(c1, c2):
    """The product on BA (x) BA of the tensor-product algebra: (a(x)b)(c(x)d) = (-1)^{|b||c|} ac (x) bd."""
    space = c1.space
    B = space.factors[0]
    acc = Accumulator(space, c1.ring)
    for (a, b), u in c1.terms.items():
        for (cc, dd), v in c2.terms.items():
            sign = -1 if (B.dim(b) * B.dim(cc)) % 2 else 1
            left = bar_product_words(B.algebra, a, cc)
            right = bar_product_words(B.algebra, b, dd)
            for x, p in left.items():
                for y, q in right.items():
                    acc.add((x, y), sign * u * v * p * q)
    return acc.chain()


# --- twisting cochains ----------------------------------------------------------------

def twisting_from_coalgebra_map(f):
    """The twisting cochain C -> A attached to a coalgebra map f: C -> BA.

    ``f`` maps a basis key of C to a bar chain; the twisting cochain is the
    projection to word length one followed by s, as a dict-valued rule.
    """
    def t(key):
        out = {}
        for w, c in f(key).terms.items():
            if len(w) == 1:
                out[w[0]] = out.get(w[0], 0) + c
        return out
    return t


def coalgebra_map_from_twisting(t, reduced_diagonal, A):
    """The coalgebra map C -> BA attached to a twisting cochain.

    ``reduced_diagonal(key, r)`` lists the terms ``((k_1, .., k_r), coeff)``
    of the r-fold reduced iterated diagonal, ``r = 0`` meaning the counit.
    The map is sum_r (s^-1 t)^{(x) r} of it; s^-1 t has degree 0, so no
    Koszul signs appear.
    """
    space = BarSpace(A)

    def f(key):
        acc = Accumulator(space, A.ring)
        r = 0
        while True:
            terms = reduced_diagonal(key, r)
            if terms is None:
                break
            for keys, c in terms:
                partial = {(): c}
                for k in keys:
                    val = t(k)
                    partial = {p + (x,): pc * v for p, pc in partial.items()
                               for x, v in val.items() if x != UNIT}
                for word, v in partial.items():
                    acc.add(word, v)
            r += 1
        return acc.chain()

    return f


def bar_reduced_diagonal(word, r):
    """Reduced r-fold diagonal of a bar word; None once r exceeds the length."""
    if r == 0:
        return [((), 1)] if not word else []
    if r > len(word):
        return None
    out = []
    for cuts in combinations(range(1, len(word)), r - 1):
        pts = (0,) + cuts + (len(word),)
        out.append((tuple(word[pts[i]:pts[i + 1]] for i in range(r)), 1))
    return out


# --- bar homology ---------------------------------------------------------------------

def _words(A, length, internal):
    """All bar words of a given length and internal degree."""
    if length == 0:
        if internal == 0:
            yield ()
        return
    for n in range(1, internal + 1):
        for a in A.basis(n):
            for rest in _words(A, length - 1, internal - n):
                yield (a,) + rest


def bar_complex_internal(A, internal):
    """For an algebra with d = 0 and connected A, the complex of words of fixed internal degree.

    Returns an :class:`FgComplex` graded by word length (homological degree)
    whose differential lowers the length by one.
    """
    A.check_window(internal)
    words = {k: list(_words(A, k, internal)) for k in range(0, internal + 1)}
    words = {k: v for k, v in words.items() if v}
    index = {k: {w: i for i, w in enumerate(v)} for k, v in words.items()}
    boundaries = {}
    for k, ws in words.items():
        if k == 0:
            continue
        rows = [dict() for _ in words.get(k - 1, [])]
        for j, w in enumerate(ws):
            for w2, c in bar_differential_terms(A, w):
                if len(w2) != k - 1:
                    raise AlgebraError("bar_complex_internal needs d = 0 on %s" % A.name)
                i = index[k - 1][w2]
                rows[i][j] = rows[i].get(j, 0) + c
        boundaries[k] = rows
    sizes = {k: len(v) for k, v in words.items()}
    return FgComplex(sizes, boundaries), words


def bar_homology_ranks(A, top_internal, ring=None):
    """dim Tor^A_{k, m}(k, k) for internal degrees m <= top_internal."""
    ring = ring or A.ring
    out = {}
    for m in range(0, top_internal + 1):
        C, _ = bar_complex_internal(A, m)
        for k, r in homology(C, sorted(C.sizes), ring).items():
            if r:
                out[(k, m)] = r
    return out


# --- Hochschild chains ------------------------------------------------------------------

class HochschildSpace:
    """Basis of A (x) BA: pairs (a0, word); total degree |a0| + deg(word)."""

    finite = False

    def __init__(self, algebra):
        self.algebra = algebra
        self.bar = BarSpace(algebra)
        self.name = "HC(%s)" % algebra.name

    def dim(self, key):
        a0, word = key
        return (0 if a0 == UNIT else self.algebra.degree(a0)) + self.bar.dim(word)

    def is_degenerate(self, key):
        return False

    def boundary_terms(self, key):
        return hochschild_differential_terms(self.algebra, key)

    def __eq__(self, other):
        return isinstance(other, HochschildSpace) and other.algebra is self.algebra

    def __hash__(self):
        return hash(("hh", id(self.algebra)))


def _require_commutative(A):
    if not A.commutative:
        raise AlgebraError("the Hochschild product is only provided for commutative algebras")


def _deg0(A, a):
    return 0 if a == UNIT else A.degree(a)


def hochschild_differential_terms(A, key):
    """d(a0[a1|...|an]) on the normalized Hochschild complex.

    The internal differential and inner products follow the bar
    differential with a0 in front; the first letter multiplies into a0 from
    the right and the last letter is carried around to the front with its
    Koszul sign.
    """
    a0, word = key
    n = len(word)
    d0 = _deg0(A, a0)
    eps = _prefix_signs(A, word)
    out = []
    for lab, c in A.d({a0: 1}).items():
        out.append(((lab, word), c))
    for i, a in enumerate(word):
        s = -1 if (d0 + eps[i]) % 2 == 0 else 1
        for w, c in _splice(word, i, i + 1, A.d({a: 1})):
            out.append(((a0, w), s * c))
    if n:
        s = 1 if d0 % 2 == 0 else -1
        for lab, c in A.mul({a0: 1}, {word[0]: 1}).items():
            out.append(((lab, word[1:]), s * c))
    for i in range(n - 1):
        s = -1 if (d0 + eps[i + 1]) % 2 else 1
        for w, c in _splice(word, i, i + 2, A.mul({word[i]: 1}, {word[i + 1]: 1})):
            out.append(((a0, w), s * c))
    if n:
        last = word[-1]
        dl = A.degree(last)
        rest = eps[n - 1]
        e = (dl + 1) * (d0 + rest) + 1
        s = -1 if e % 2 else 1
        for lab, c in A.mul({last: 1}, {a0: 1}).items():
            out.append(((lab, word[:-1]), s * c))
    return out


def hochschild_differential(c):
    A = c.space.algebra
    acc = Accumulator(c.space, c.ring)
    for key, v in c.terms.items():
        for k2, s in hochschild_differential_terms(A, key):
            acc.add(k2, s * v)
    return acc.chain()


def hochschild_chain(A, a0, *letters, coeff=1):
    return Chain._raw(HochschildSpace(A), {(a0, tuple(letters)): coeff}, A.ring)


def shuffle_words(A, w, v):
    """The shuffle product of bar words with Koszul signs in the bar degrees."""
    space = BarSpace(A)
    dims_w = [A.degree(a) - 1 for a in w]
    dims_v = [A.degree(b) - 1 for b in v]
    n, m = len(w), len(v)
    out = {}
    for pos in combinations(range(n + m), n):
        pos_set = set(pos)
        word = []
        iw = iv = 0
        e = 0
        for t in range(n + m):
            if t in pos_set:
                word.append(w[iw])
                # w[iw] moves past the v-letters already placed
                e += dims_w[iw] * sum(dims_v[:iv])
                iw += 1
            else:
                word.append(v[iv])
                iv += 1
        key = tuple(word)
        out[key] = out.get(key, 0) + (-1 if e % 2 else 1)
    return _prune(out, A.ring)


def hochschild_product(c1, c2):
    """(a (x) w)(b (x) v) = (-1)^{|w||b|} ab (x) (w sh v) for commutative A."""
    A = c1.space.algebra
    _require_commutative(A)
    bar = c1.space.bar
    acc = Accumulator(c1.space, c1.ring)
    for (a, w), u in c1.terms.items():
        for (b, v), x in c2.terms.items():
            sign = -1 if (bar.dim(w) * _deg0(A, b)) % 2 else 1
            prod = A.mul({a: 1}, {b: 1})
            sh = shuffle_words(A, w, v)
            for lab, p in prod.items():
                for word, q in sh.items():
                    acc.add((lab, word), sign * u * x * p * q)
    return acc.chain()


def _hochschild_keys(A, length, internal):
    out = []
    for n0 in range(0, internal + 1):
        heads = [UNIT] if n0 == 0 else A.basis(n0)
        for a0 in heads:
            for w in _words(A, length, internal - n0):
                out.append((a0, w))
    return out


def hochschild_complex_internal(A, internal):
    """Hochschild chains of fixed internal degree, graded by word length (d = 0 on A)."""
    _require_commutative(A)
    A.check_window(internal)
    keys = {k: _hochschild_keys(A, k, internal) for k in range(0, internal + 1)}
    keys = {k: v for k, v in keys.items() if v}
    index = {k: {w: i for i, w in enumerate(v)} for k, v in keys.items()}
    boundaries = {}
    for k, ks in keys.items():
        if k == 0:
            continue
        rows = [dict() for _ in keys.get(k - 1, [])]
        for j, key in enumerate(ks):
            for k2, c in hochschild_differential_terms(A, key):
                if len(k2[1]) != k - 1:
                    raise AlgebraError("hochschild_complex_internal needs d = 0")
                i = index[k - 1][k2]
                rows[i][j] = rows[i].get(j, 0) + c
        boundaries[k] = rows
    return FgComplex({k: len(v) for k, v in keys.items()}, boundaries), keys


def hochschild_homology_ranks(A, top_internal, ring=None):
    """dim HH_{k, m}(A) for internal degrees m <= top_internal (word length k)."""
    ring = ring or A.ring
    out = {}
    for m in range(0, top_internal + 1):
        C, _ = hochschild_complex_internal(A, m)
        for k, r in homology(C, sorted(C.sizes), ring).items():
            if r:
                out[(k, m)] = r
    return out
