"""Cochains, transposes of chain operations, and the cup-i calculus.

A :class:`Cochain` of degree n is a functional on n-chains.  It is either
a finite table (a combination of dual basis elements) or a rule that can
be evaluated on any nondegenerate simplex; on finite spaces rules are
tabulated so that cochains compare by value.

Conventions: a tensor of cochains evaluates as
``(b_1 (x) ... (x) b_l)(a_1 (x) ... (x) a_l) = (-1)^{sum_{i<j} |b_j||a_i|} prod b_i(a_i)``,
the transpose of an operation f is ``gamma -> (-1)^{|f||gamma|} gamma o f``,
and the coboundary is ``(d gamma)(c) = -(-1)^{|gamma|} gamma(dc)``.
"""

import random

from .chains import Chain, TensorSpace, boundary
from .rings import ZZ
from .surjections import as_surjection, interval_cut


class Cochain:
    __slots__ = ("space", "degree", "values", "rule", "ring")

    def __init__(self, space, degree, values=None, rule=None, ring=ZZ):
        self.space = space
        self.degree = degree
        self.ring = ring
        self.rule = rule
        out = {}
        for x, c in (values or {}).items():
            c = ring.normalize(c)
            if c != 0 and space.dim(x) == degree and not space.is_degenerate(x):
                out[x] = c
        self.values = out

    @classmethod
    def from_rule(cls, space, degree, rule, ring=ZZ):
        """Tabulate on finite spaces, keep the rule otherwise."""
        if space.finite:
            return cls(space, degree, {x: rule(x) for x in space.nondegenerate(degree)}, ring=ring)
        return cls(space, degree, rule=rule, ring=ring)

    @classmethod
    def dual(cls, space, x, ring=ZZ):
        """The dual basis element of a nondegenerate simplex."""
        return cls(space, space.dim(x), {x: 1}, ring=ring)

    @classmethod
    def zero(cls, space, degree, ring=ZZ):
        return cls(space, degree, ring=ring)

    def __call__(self, x):
        if self.rule is not None:
            return self.ring.normalize(self.rule(x))
        return self.values.get(x, 0)

    def evaluate(self, c):
        """gamma(c) for a chain c on the same space."""
        total = 0
        dim = self.space.dim
        for x, v in c.terms.items():
            if dim(x) == self.degree:
                total += v * self(x)
        return self.ring.normalize(total)

    def _tabulated(self):
        if self.rule is None:
            return self
        if not self.space.finite:
            raise ValueError("cannot tabulate a rule cochain on an infinite space")
        return Cochain.from_rule(self.space, self.degree, self.rule, self.ring)

    def _combine(self, other, sign):
        if self.degree != other.degree:
            if not self.values and self.rule is None:
                return other.scale(sign)
            if not other.values and other.rule is None:
                return self
            raise ValueError("adding cochains of degrees %d and %d" % (self.degree, other.degree))
        if self.rule is None and other.rule is None:
            out = dict(self.values)
            for x, c in other.values.items():
                out[x] = out.get(x, 0) + sign * c
            return Cochain(self.space, self.degree, out, ring=self.ring)
        a, b = self, other
        return Cochain.from_rule(self.space, self.degree, lambda x: a(x) + sign * b(x), self.ring)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        if self.rule is None:
            return Cochain(self.space, self.degree, {x: c * v for x, v in self.values.items()}, ring=self.ring)
        r = self.rule
        return Cochain(self.space, self.degree, rule=lambda x: c * r(x), ring=self.ring)

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self):
        return not self._tabulated().values

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Cochain):
            return NotImplemented
        a, b = self._tabulated(), other._tabulated()
        if not a.values and not b.values:
            return True
        return a.degree == b.degree and a.values == b.values

    def __hash__(self):
        t = self._tabulated()
        return hash((t.degree, frozenset(t.values.items())))

    def __repr__(self):
        t = self._tabulated() if self.space.finite else self
        if t.rule is not None:
            return "<cochain of degree %d given by a rule>" % self.degree
        return "Cochain[%d](%s)" % (self.degree, ", ".join(
            "%s: %s" % (x, v) for x, v in sorted(t.values.items())))


def coboundary(gamma):
    """(d gamma)(c) = -(-1)^{|gamma|} gamma(dc)."""
    X = gamma.space
    sign = 1 if gamma.degree % 2 else -1

    def rule(x):
        return sign * gamma.evaluate(boundary(Chain._raw(X, {x: 1}, gamma.ring)))

    return Cochain.from_rule(X, gamma.degree + 1, rule, gamma.ring)


def evaluate_tensor(betas, c):
    """(b_1 (x) ... (x) b_l)(c) for a chain on an l-fold tensor space."""
    degs = [b.degree for b in betas]
    total = 0
    for key, v in c.terms.items():
        if any(f.dim(k) != d for f, k, d in zip(c.space.factors, key, degs)):
            continue
        e = 0
        before = 0
        for d in degs:
            e += d * before
            before += d
        prod = v
        for b, k in zip(betas, key):
            prod *= b(k)
            if prod == 0:
                break
        total += -prod if e % 2 else prod
    return betas[0].ring.normalize(total)


def transpose_operation(op, op_degree, betas, space=None):
    """The transpose of a chain operation C(X) -> C(X)^{(x) l} applied to b_1 (x) ... (x) b_l.

    ``op`` maps a chain on X to a chain on the tensor power.  The result is
    the cochain ``(-1)^{|op| |b|} (b_1 (x) ... (x) b_l) o op`` of degree
    ``sum |b_i| - op_degree``.
    """
    X = space or betas[0].space
    total = sum(b.degree for b in betas)
    degree = total - op_degree
    sign = -1 if (op_degree * total) % 2 else 1
    ring = betas[0].ring
    if degree < 0:
        return Cochain.zero(X, 0, ring)

    def rule(x):
        return sign * evaluate_tensor(betas, op(Chain._raw(X, {x: 1}, ring)))

    return Cochain.from_rule(X, degree, rule, ring)


def transpose_cut(u, betas):
    """ᵗAW_u (b_1 (x) ... (x) b_l)."""
    u = as_surjection(u)
    if len(betas) != u.arity:
        raise ValueError("%r needs %d arguments, got %d" % (u, u.arity, len(betas)))
    return transpose_operation(lambda c: interval_cut(u, c), u.degree, betas)


def cup(beta, gamma):
    return transpose_cut((1, 2), [beta, gamma])


def cup1(beta, gamma):
    return -transpose_cut((1, 2, 1), [beta, gamma])


def cup2(beta, gamma):
    return -transpose_cut((1, 2, 1, 2), [beta, gamma])


def e_surjection(k):
    """(1,2,1,3,1,...,1,k+1,1)."""
    vals = [1]
    for j in range(2, k + 2):
        vals += [j, 1]
    return tuple(vals)


def e_tilde_surjection(k):
    """(k+1,1,k+1,2,...,k+1,k,k+1)."""
    vals = [k + 1]
    for j in range(1, k + 1):
        vals += [j, k + 1]
    return tuple(vals)


def hga_operation(alpha, betas):
    """E_k(alpha; b_1, ..., b_k) = ᵗAW_{(1,2,1,...,1,k+1,1)}(alpha (x) b_1 (x) ... (x) b_k)."""
    return transpose_cut(e_surjection(len(betas)), [alpha] + list(betas))


def hga_operation_swapped(betas, alpha):
    """The operations for the swapped convention: (-1)^k ᵗAW_{(k+1,1,k+1,...,k,k+1)}."""
    k = len(betas)
    out = transpose_cut(e_tilde_surjection(k), list(betas) + [alpha])
    return -out if k % 2 else out


def gerstenhaber_bracket(a, b):
    """(-1)^{|a|-1} (a cup1 b + (-1)^{|a||b|} b cup1 a)."""
    s = cup1(a, b)
    t = cup1(b, a)
    inner = s + t if (a.degree * b.degree) % 2 == 0 else s - t
    return inner if (a.degree - 1) % 2 == 0 else -inner


def random_cochain(space, degree, rng, lo=-3, hi=3, ring=ZZ):
    """A cochain with uniformly random integer values on a finite space."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    return Cochain(space, degree, {x: rng.randint(lo, hi) for x in space.nondegenerate(degree)}, ring=ring)


def cocycles_basis(space, degree):
    """A list of integral cocycles spanning the cocycles over Q (finite spaces)."""
    from .homlin import nullspace_integer
    cols = list(space.nondegenerate(degree))
    rows = list(space.nondegenerate(degree + 1))
    index = {x: i for i, x in enumerate(cols)}
    matrix = []
    for y in rows:
        row = [0] * len(cols)
        for x, s in _faces(space, y):
            if x in index:
                row[index[x]] += s
        matrix.append(row)
    return [Cochain(space, degree, dict(zip(cols, vec))) for vec in nullspace_integer(matrix, len(cols))]


def _faces(space, y):
    n = space.dim(y)
    if n == 0:
        return []
    return [(space.face(y, i), -1 if i % 2 else 1) for i in range(n + 1)]
