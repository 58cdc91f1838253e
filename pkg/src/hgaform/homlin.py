"""Exact homological linear algebra.

Smith normal form over the integers, ranks and kernels over the
rationals or a prime field, homology of degreewise finite complexes and
Hilbert functions of finitely presented graded pieces.  Matrices are lists
of rows of Python ints (or Fractions); everything is exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .rings import QQ, ZZ, IntegersMod


class NotAFieldError(ValueError):
    pass


class WindowError(ValueError):
    pass


# --- Smith normal form ---------------------------------------------------------

def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a or not b:
        cols = len(b[0]) if b else 0
        return [[0] * cols for _ in a]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def smith_normal_form(matrix):
    """Return (D, U, V) with U * M * V = D, U and V unimodular.

    D is diagonal with nonnegative entries d_1 | d_2 | ... .
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    A = [list(map(int, row)) for row in matrix]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    if A[t][j]:
                        done = False
            if done:
                # enforce divisibility against the rest of the block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if A[i][j] % p), None)
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # move the smallest entry of row/column t to the pivot
            best = (t, t)
            for i in range(t, m):
                if A[i][t] and abs(A[i][t]) < abs(A[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, n):
                if A[t][j] and abs(A[t][j]) < abs(A[best[0]][best[1]]):
                    best = (t, j)
            swap_rows(t, best[0])
            swap_cols(t, best[1])
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return A, U, V


def smith_diagonal(matrix):
    """The nonzero invariant factors of M (no transforms kept)."""
    D, _, _ = smith_normal_form(matrix)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def determinant(matrix):
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


# --- elimination over a field ----------------------------------------------------

def _field_ops(ring):
    if ring is ZZ or ring == ZZ:
        raise NotAFieldError("ZZ is not a field; use smith_normal_form")
    if not ring.is_field:
        raise NotAFieldError("%s is not a field" % ring.name)
    if isinstance(ring, IntegersMod):
        p = ring.modulus
        return (lambda a: a % p), (lambda a: pow(a, -1, p))
    return Fraction, (lambda a: 1 / Fraction(a))


def row_reduce(rows, ncols, ring=QQ):
    """Reduced row echelon form of sparse rows ``{col: value}``.

    Returns the list of pivot rows as ``(pivot_col, row_dict)``.
    """
    norm, inv = _field_ops(ring)
    pivots = {}
    for r in rows:
        row = {c: norm(v) for c, v in r.items() if norm(v) != 0}
        while row:
            c = min(row)
            if c in pivots:
                prow = pivots[c]
                f = row[c]
                for cc, vv in prow.items():
                    nv = norm(row.get(cc, 0) - f * vv)
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
            else:
                f = inv(row[c])
                row = {cc: norm(vv * f) for cc, vv in row.items()}
                pivots[c] = row
                break
    # back substitution for a reduced form
    for c in sorted(pivots, reverse=True):
        prow = pivots[c]
        for c2, other in pivots.items():
            if c2 != c and c in other:
                f = other[c]
                for cc, vv in prow.items():
                    nv = norm(other.get(cc, 0) - f * vv)
                    if nv:
                        other[cc] = nv
                    else:
                        other.pop(cc, None)
    return sorted(pivots.items())


def _as_sparse(matrix):
    if matrix and isinstance(matrix[0], dict):
        return matrix
    return [{j: v for j, v in enumerate(row) if v} for row in matrix]


def rank(matrix, ring=QQ, ncols=None):
    """Rank over a field; ``matrix`` may be dense or a list of sparse row dicts."""
    rows = _as_sparse(matrix)
    if ring is ZZ or ring == ZZ:
        ring = QQ
    return len(row_reduce(rows, ncols, ring))


def nullspace(matrix, ncols, ring=QQ):
    """A basis of {v : M v = 0} as dense vectors over the field."""
    piv = row_reduce(_as_sparse(matrix), ncols, ring)
    pivot_cols = {c for c, _ in piv}
    norm, _ = _field_ops(ring)
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = [norm(0)] * ncols
        v[free] = norm(1)
        for c, row in piv:
            v[c] = norm(-row.get(free, 0))
        basis.append(v)
    return basis


def nullspace_integer(matrix, ncols):
    """Integer vectors spanning the rational kernel (denominators cleared)."""
    out = []
    for v in nullspace(matrix, ncols, QQ):
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        w = [int(x * den) for x in v]
        g = 0
        for x in w:
            g = gcd(g, x)
        out.append([x // g for x in w] if g > 1 else w)
    return out


# --- complexes ---------------------------------------------------------------

@dataclass
class FgComplex:
    """A chain complex of finite free modules.

    ``sizes[n]`` is the rank in degree n and ``boundaries[n]`` the matrix of
    d: C_n -> C_{n-1} (``sizes[n-1]`` rows, ``sizes[n]`` columns), dense or as
    sparse row dicts.  Degrees outside ``sizes`` are zero.
    """

    sizes: dict
    boundaries: dict = field(default_factory=dict)
    window: tuple = None

    def size(self, n):
        return self.sizes.get(n, 0)

    def boundary(self, n):
        """Dense matrix of d_n (possibly with zero rows/columns)."""
        rows, cols = self.size(n - 1), self.size(n)
        b = self.boundaries.get(n)
        if b is None:
            return [[0] * cols for _ in range(rows)]
        if b and isinstance(b[0], dict):
            return [[r.get(j, 0) for j in range(cols)] for r in b]
        return b

    def check(self):
        for n in self.sizes:
            a, b = self.boundary(n), self.boundary(n + 1)
            if a and b and any(any(row) for row in matmul(a, b)):
                raise ValueError("d o d != 0 in degree %d" % (n + 1))
        return True


def homology(C, degrees=None, ring=ZZ):
    """Homology in the given degrees.

    Over ZZ returns ``{n: (free_rank, [torsion coefficients])}``; over a field
    returns ``{n: betti}``.  Degrees at the edge of the complex's window are
    refused since one of the adjacent boundaries would be unknown.
    """
    if degrees is None:
        degrees = sorted(C.sizes)
    out = {}
    for n in degrees:
        if C.window is not None and not (C.window[0] < n < C.window[1]) and not (
                n == C.window[0] and C.window[0] <= 0):
            raise WindowError("degree %d is at the edge of the window %r" % (n, C.window))
        if ring is ZZ or ring == ZZ:
            dn = smith_diagonal(C.boundary(n)) if C.size(n) and C.size(n - 1) else []
            dn1 = smith_diagonal(C.boundary(n + 1)) if C.size(n + 1) and C.size(n) else []
            free = C.size(n) - len(dn) - len(dn1)
            out[n] = (free, [d for d in dn1 if d > 1])
        else:
            rn = rank(C.boundary(n), ring) if C.size(n) and C.size(n - 1) else 0
            rn1 = rank(C.boundary(n + 1), ring) if C.size(n + 1) and C.size(n) else 0
            out[n] = C.size(n) - rn - rn1
    return out


def hilbert_function(unknowns, constraints, ring=QQ):
    """dim of {v : M_d v = 0} per degree d.

    ``unknowns[d]`` is the number of free coefficients in degree d and
    ``constraints[d]`` a (sparse or dense) matrix of linear conditions.
    """
    if not ring.is_field:
        raise NotAFieldError("Hilbert functions need field coefficients, got %s" % ring.name)
    out = {}
    for d in sorted(unknowns):
        m = constraints.get(d) or []
        out[d] = unknowns[d] - (rank(m, ring, unknowns[d]) if m else 0)
    return out
