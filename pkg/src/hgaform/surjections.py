"""The surjection operad and its action on chains by interval cuts.

A surjection is stored as the tuple of its values ``(u(1), ..., u(k+l))``
onto ``{1..l}``.  :func:`interval_cut` evaluates ``AW_u`` on a chain; the
sign of every cut is the product of a permutation sign and a position
sign, and cut patterns are cached per ``(u, p)`` so that evaluation on a
simplex is only a sequence of ``act`` calls.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .chains import Accumulator, Chain, TensorSpace, permute_factors, pushforward, pushforward_tensor
from .simplicial import Product


class SurjectionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Surjection:
    values: tuple

    def __post_init__(self):
        v = tuple(self.values)
        object.__setattr__(self, "values", v)
        if not v:
            raise SurjectionError("empty surjection")
        l = max(v)
        if set(v) != set(range(1, l + 1)):
            raise SurjectionError("%r is not onto {1..%d}" % (v, l))

    @classmethod
    def of(cls, *values):
        if len(values) == 1 and not isinstance(values[0], int):
            values = tuple(values[0])
        return cls(tuple(values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __repr__(self):
        return "(%s)" % ",".join(map(str, self.values))

    @property
    def arity(self):
        """The number l of tensor factors produced by AW_u."""
        return max(self.values)

    @property
    def degree(self):
        return len(self.values) - self.arity

    @property
    def is_nondegenerate(self):
        v = self.values
        return all(a != b for a, b in zip(v, v[1:]))

    def final_positions(self):
        """0-based positions i such that u(i) does not occur again later."""
        seen = set()
        out = []
        for i in range(len(self.values) - 1, -1, -1):
            if self.values[i] not in seen:
                out.append(i)
                seen.add(self.values[i])
        return sorted(out)

    def is_final(self, i):
        return self.values[i] not in self.values[i + 1:]

    def repeated_values(self):
        v = self.values
        return sorted({a for a in v if v.count(a) > 1})

    @property
    def biased(self):
        return len(self.repeated_values()) <= 1

    @property
    def strongly_biased(self):
        return len(self.repeated_values()) == 1

    @property
    def one_biased(self):
        return self.repeated_values() in ([], [1])

    @property
    def strongly_one_biased(self):
        return self.repeated_values() == [1]

    def classify(self):
        return {
            "final": [i + 1 for i in self.final_positions()],
            "inner": [i + 1 for i in range(len(self)) if not self.is_final(i)],
            "biased": self.biased,
            "strongly_biased": self.strongly_biased,
            "one_biased": self.one_biased,
            "strongly_one_biased": self.strongly_one_biased,
        }

    def truncate(self):
        """u': drop the first value, closing the gap if it does not recur."""
        if len(self.values) < 2:
            raise SurjectionError("cannot truncate %r" % (self,))
        first, rest = self.values[0], self.values[1:]
        if first not in rest:
            rest = tuple(a - 1 if a > first else a for a in rest)
        return Surjection(rest)

    def permute(self, perm):
        """pi . u with (pi . u)(i) = pi(u(i)); ``perm`` maps value -> value (1-based)."""
        perm = _perm_dict(perm, self.arity)
        return Surjection(tuple(perm[a] for a in self.values))


def _perm_dict(perm, l):
    if isinstance(perm, dict):
        d = dict(perm)
    else:
        d = {i + 1: p for i, p in enumerate(perm)}
    if sorted(d) != list(range(1, l + 1)) or sorted(d.values()) != list(range(1, l + 1)):
        raise SurjectionError("%r is not a permutation of {1..%d}" % (perm, l))
    return d


def surjection(*values):
    u = Surjection.of(*values)
    if not u.is_nondegenerate:
        raise SurjectionError("%r is degenerate" % (u,))
    return u


def nondegenerate_surjections(n, l):
    """All nondegenerate surjections {1..n} -> {1..l}, in lexicographic order."""
    out = []

    def grow(prefix):
        if len(prefix) == n:
            if len(set(prefix)) == l:
                out.append(Surjection(tuple(prefix)))
            return
        missing = l - len(set(prefix))
        if n - len(prefix) < missing:
            return
        for a in range(1, l + 1):
            if not prefix or prefix[-1] != a:
                grow(prefix + [a])

    if 1 <= l <= n:
        grow([])
    return out


def all_surjections(max_size):
    """Every nondegenerate surjection with k + l <= max_size."""
    return [u for n in range(1, max_size + 1) for l in range(1, n + 1)
            for u in nondegenerate_surjections(n, l)]


# --- formal sums and the operad structure -----------------------------------

class SurjectionSum:
    """A finite Z-linear combination of nondegenerate surjections."""

    def __init__(self, terms=None):
        out = {}
        for u, c in (terms or {}).items():
            if not isinstance(u, Surjection):
                u = Surjection.of(u)
            if c and u.is_nondegenerate:
                out[u] = out.get(u, 0) + c
        self.terms = {u: c for u, c in out.items() if c}

    def __add__(self, other):
        t = dict(self.terms)
        for u, c in other.terms.items():
            t[u] = t.get(u, 0) + c
        return SurjectionSum(t)

    def __neg__(self):
        return SurjectionSum({u: -c for u, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, SurjectionSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " ".join("%+d*%r" % (c, u) for u, c in self)


def as_sum(u):
    if isinstance(u, SurjectionSum):
        return u
    if not isinstance(u, Surjection):
        u = Surjection.of(u)
    return SurjectionSum({u: 1})


def as_surjection(u):
    return u if isinstance(u, Surjection) else Surjection.of(u)


def differential(u):
    """The operad differential of a surjection.

    Each position whose value also occurs elsewhere may be deleted.  An
    inner position i contributes (-1)^{# inner positions before i}; a final
    position contributes minus the sign its previous occurrence would get.
    Degenerate results are dropped.
    """
    u = as_surjection(u)
    v = u.values
    n = len(v)
    inner_before = []
    count = 0
    for i in range(n):
        inner_before.append(count)
        if not u.is_final(i):
            count += 1
    terms = {}
    for i in range(n):
        a = v[i]
        if v.count(a) < 2:
            continue
        if not u.is_final(i):
            sign = -1 if inner_before[i] % 2 else 1
        else:
            prev = max(j for j in range(i) if v[j] == a)
            sign = 1 if inner_before[prev] % 2 else -1
        w = v[:i] + v[i + 1:]
        if all(x != y for x, y in zip(w, w[1:])):
            key = Surjection(w)
            terms[key] = terms.get(key, 0) + sign
    return SurjectionSum(terms)


def differential_sum(s):
    out = SurjectionSum()
    for u, c in as_sum(s).terms.items():
        out = out + SurjectionSum({w: c * e for w, e in differential(u).terms.items()})
    return out


def compose(u, position, v):
    """The operadic composite u o_position v as a :class:`SurjectionSum`.

    If the value ``position`` occurs m times in u, the sequence of v is cut
    into m consecutive pieces overlapping in one entry and the pieces are
    substituted for those occurrences in order.  Values of v are raised by
    position - 1 and larger values of u by arity(v) - 1.

    The sign of a term w is read off from one cut of a simplex, the one in
    which every interval of w has length one: it is the sign of that cut
    for w, divided by the product of the signs of the induced cuts for u
    and v and of the Koszul sign of moving AW_v past the earlier outputs.
    """
    u, v = as_surjection(u), as_surjection(v)
    s = position
    if not 1 <= s <= u.arity:
        raise SurjectionError("position %d out of range for arity %d" % (s, u.arity))
    m = u.values.count(s)
    terms = {}
    for cut in _cuts(len(v) - 1, m):
        pieces = [range(cut[j], cut[j + 1] + 1) for j in range(m)]
        w, origin = _substitute(u, s, v, pieces)
        if any(a == b for a, b in zip(w, w[1:])):
            continue
        key = Surjection(w)
        terms[key] = terms.get(key, 0) + _compose_sign(u, s, v, w, origin)
    return SurjectionSum(terms)


def _substitute(u, s, v, pieces):
    """The sequence w and, per position of w, its origin ('u', i) or ('v', t)."""
    shift = v.arity - 1
    w, origin = [], []
    blocks = iter(pieces)
    for i, a in enumerate(u.values):
        if a == s:
            for t in next(blocks):
                w.append(v.values[t] + s - 1)
                origin.append(("v", i, t))
        else:
            w.append(a if a < s else a + shift)
            origin.append(("u", i, None))
    return tuple(w), origin


def _compose_sign(u, s, v, w, origin):
    fine = tuple(range(len(w) + 1))
    sign = cut_sign(w, fine)
    # the coarse cut of u: position i of u covers a block of unit intervals
    coarse = [0]
    for j in range(len(w)):
        if j + 1 == len(w) or origin[j + 1][1] != origin[j][1]:
            coarse.append(j + 1)
    coarse = tuple(coarse)
    sign *= cut_sign(u.values, coarse)
    outs = cut_outputs(u.values, coarse)
    passed = sum(len(nu) - 1 for nu in outs[:s - 1])
    if (v.degree * passed) % 2:
        sign = -sign
    local = {x: i for i, x in enumerate(outs[s - 1])}
    ends = {}
    for j, (kind, _, t) in enumerate(origin):
        if kind == "v":
            ends[t] = local[j + 1]
    q = (0,) + tuple(ends[t] for t in range(len(v)))
    return sign * cut_sign(v.values, q)


def permute_sum(perm, s):
    return SurjectionSum({u.permute(perm): c for u, c in as_sum(s).terms.items()})


# --- interval cuts ------------------------------------------------------------

def _cuts(p, n):
    """All 0 = p_0 <= p_1 <= ... <= p_n = p, as tuples (p_0, ..., p_n)."""
    if n == 0:
        return [(0,)] if p == 0 else []
    out = []
    for inner in combinations(range(p + n - 1), n - 1):
        pts = [0]
        for t, c in enumerate(inner):
            pts.append(c - t)
        pts.append(p)
        out.append(tuple(pts))
    return out


def cut_sign(values, pts):
    """perm(nu) * pos(nu) for the cut ``pts = (p_0, ..., p_n)`` of u."""
    n = len(values)
    lengths = []
    pos = 0
    for i in range(n):
        ln = pts[i + 1] - pts[i]
        if values[i] in values[i + 1:]:
            ln += 1
            pos += pts[i + 1]
        lengths.append(ln)
    perm = 0
    for i in range(n):
        if lengths[i] % 2:
            for j in range(i + 1, n):
                if values[i] > values[j] and lengths[j] % 2:
                    perm += 1
    return -1 if (perm + pos) % 2 else 1


def cut_outputs(values, pts):
    """The vertex sequences nu_1, ..., nu_l of a cut."""
    nus = [[] for _ in range(max(values))]
    for i, a in enumerate(values):
        nus[a - 1].extend(range(pts[i], pts[i + 1] + 1))
    return tuple(tuple(x) for x in nus)


def _overlaps(values, pts):
    last = {}
    for i, a in enumerate(values):
        j = last.get(a)
        if j is not None and pts[j + 1] >= pts[i]:
            return True
        last[a] = i
    return False


@lru_cache(maxsize=None)
def cut_template(values, p):
    """The nonvanishing cuts of u on a p-simplex.

    Returns a list of ``(sign, nus)`` where ``nus[s-1]`` is the strictly
    increasing vertex sequence of output s.  Cuts in which two intervals
    of the same value share an endpoint are skipped, since they only
    produce degenerate simplices.
    """
    return [(cut_sign(values, pts), cut_outputs(values, pts))
            for pts in _cuts(p, len(values)) if not _overlaps(values, pts)]


def interval_cut(u, c):
    """AW_u(c) as a chain on the l-fold tensor power of c's space."""
    u = as_surjection(u)
    X = c.space
    space = TensorSpace(*([X] * u.arity))
    acc = Accumulator(space, c.ring)
    act = X.act_unchecked
    isdeg = X.is_degenerate
    for x, coeff in c.terms.items():
        for sign, nus in cut_template(u.values, X.dim(x)):
            key = []
            for nu in nus:
                y = act(x, nu)
                if isdeg(y):
                    break
                key.append(y)
            else:
                acc.add(tuple(key), sign * coeff)
    return acc.chain()


def interval_cut_sum(s, c):
    """AW of a formal sum of surjections."""
    out = None
    for u, coeff in as_sum(s).terms.items():
        term = interval_cut(u, c).scale(coeff)
        out = term if out is None else out + term
    if out is None:
        raise SurjectionError("AW of the zero sum has no well-defined arity")
    return out


def apply_on_factor(op, c, slot, degree):
    """(1 (x) ... (x) op (x) ... (x) 1) on a tensor chain, with Koszul sign.

    ``op`` maps a chain on one factor to a tensor chain (or plain chain);
    its output factors are spliced in at ``slot``.
    """
    space = c.space
    acc = None
    factors = space.factors
    pieces = {}
    for key, v in c.terms.items():
        passed = sum(f.dim(k) for f, k in zip(factors[:slot], key[:slot]))
        sign = -1 if (degree * passed) % 2 else 1
        img = op(Chain._raw(factors[slot], {key[slot]: 1}, c.ring))
        if isinstance(img.space, TensorSpace):
            mid_spaces, items = img.space.factors, img.terms.items()
        else:
            mid_spaces, items = (img.space,), [((k,), w) for k, w in img.terms.items()]
        new_space = TensorSpace(*(factors[:slot] + tuple(mid_spaces) + factors[slot + 1:]))
        if acc is None:
            acc = Accumulator(new_space, c.ring)
        for k2, w in items:
            acc.add(key[:slot] + k2 + key[slot + 1:], sign * v * w)
    if acc is None:
        return Chain.zero(space, c.ring)
    return acc.chain()


def permute_outputs(perm, c):
    """pi . c: tensor factor s goes to slot pi(s), Koszul signs included."""
    l = len(c.space.factors)
    d = _perm_dict(perm, l)
    return permute_factors(c, tuple(d[s + 1] - 1 for s in range(l)))


def cycle_tau(s, l):
    """tau_s = (1 -> s, 2 -> 1, ..., s -> s-1) as a value map on {1..l}."""
    d = {i: i for i in range(1, l + 1)}
    if s > 1:
        d[1] = s
        for i in range(2, s + 1):
            d[i] = i - 1
    return d


# --- cuts on products and on universal bundles ---------------------------------

def _require_one_biased(u):
    if not u.one_biased:
        raise SurjectionError("%r is not 1-biased" % (u,))


def aw_tilde(u, c):
    """((pi_X)_* (x) (pi_Y)_*^l) AW_u on a chain of X x Y, for 1-biased u.

    A term survives the projections iff every projected face is
    nondegenerate, so the faces are taken directly on the components.
    """
    u = as_surjection(u)
    _require_one_biased(u)
    X, Y = c.space.factors
    target = TensorSpace(X, *([Y] * (u.arity - 1)))
    acc = Accumulator(target, c.ring)
    ax, ay = X.act_unchecked, Y.act_unchecked
    dx, dy = X.is_degenerate, Y.is_degenerate
    for (x, y), coeff in c.terms.items():
        for sign, nus in cut_template(u.values, X.dim(x)):
            first = ax(x, nus[0])
            if dx(first):
                continue
            key = [first]
            for nu in nus[1:]:
                z = ay(y, nu)
                if dy(z):
                    break
                key.append(z)
            else:
                acc.add(tuple(key), sign * coeff)
    return acc.chain()


def graph_chain(bundle, c):
    """C(EG) -> C(EG x BG), x -> (x, pi x)."""
    P = Product(bundle.total, bundle.base)
    return pushforward(c, lambda x: (x, bundle.project(x)), P)


def aw_hat(u, c, bundle):
    """(1 (x) pi_*^l) AW_u on a chain of EG, for 1-biased u."""
    u = as_surjection(u)
    _require_one_biased(u)
    image = interval_cut(u, c)
    target = TensorSpace(bundle.total, *([bundle.base] * (u.arity - 1)))
    fns = [None] + [bundle.project] * (u.arity - 1)
    return pushforward_tensor(image, fns, target)


def contract_chain(bundle, c):
    """The degree +1 operator S on C(EG); degenerate images vanish."""
    return pushforward(c, bundle.S, bundle.total)


def contract_first(bundle, c):
    """(S (x) 1 (x) ... (x) 1) on a tensor chain whose first factor is C(EG)."""
    acc = Accumulator(c.space, c.ring, check=True)
    for key, v in c.terms.items():
        acc.add((bundle.S(key[0]),) + key[1:], v)
    return acc.chain()


def basepoint_tensor(bundle, c):
    """e_0 (x) c."""
    space = TensorSpace(bundle.total, *_factors(c.space))
    acc = Accumulator(space, c.ring)
    for key, v in c.terms.items():
        acc.add((bundle.e0,) + (key if isinstance(c.space, TensorSpace) else (key,)), v)
    return acc.chain()


def _factors(space):
    return space.factors if isinstance(space, TensorSpace) else (space,)
