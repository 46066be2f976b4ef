"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`.  Matrices are plain
lists of rows; subspaces are kept in reduced row-echelon form so that two
subspaces are equal exactly when their stored bases are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

Vector = tuple
Mat = list


class LinalgError(ValueError):
    pass


class DimensionMismatch(LinalgError):
    pass


class NonRationalSpectrum(LinalgError):
    pass


class NotDiagonalizable(LinalgError):
    pass


class NonCommuting(LinalgError):
    pass


ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def format_rational(x) -> str:
    return str(frac(x))


def parse_rational(s) -> Fraction:
    return Fraction(s)


def vec(values: Iterable) -> tuple:
    return tuple(frac(v) for v in values)


def zero_vector(n: int) -> tuple:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> tuple:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def mat(rows: Iterable[Iterable]) -> Mat:
    return [[frac(x) for x in r] for r in rows]


def zeros(r: int, c: int) -> Mat:
    return [[ZERO] * c for _ in range(r)]


def identity(n: int) -> Mat:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def shape(m: Mat) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Mat) -> Mat:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Mat, b: Mat) -> Mat:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * col[k] for k, x in nz), ZERO) for col in bt])
    return out


def matvec(m: Mat, v: Sequence) -> tuple:
    if m and len(m[0]) != len(v):
        raise DimensionMismatch(f"matrix has {len(m[0])} columns, vector {len(v)}")
    nz = [(k, x) for k, x in enumerate(v) if x]
    return tuple(sum((row[k] * x for k, x in nz), ZERO) for row in m)


def mat_add(a: Mat, b: Mat, scale=1) -> Mat:
    s = frac(scale)
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def vec_add(a: Sequence, b: Sequence, scale=1) -> tuple:
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)}")
    s = frac(scale)
    return tuple(x + s * y for x, y in zip(a, b))


def vec_scale(a: Sequence, s) -> tuple:
    s = frac(s)
    return tuple(s * x for x in a)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b) if x and y), ZERO)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


# --- sparse incremental echelon form ------------------------------------------


def _sparse(v: Sequence) -> dict:
    return {i: frac(x) for i, x in enumerate(v) if x}


class Echelon:
    """Incrementally maintained reduced row-echelon basis of sparse rows.

    Rows are dicts ``column -> Fraction``.  Every stored row has pivot entry 1
    and is zero in every other pivot column, so reducing a new row needs one
    pass over the pivots present in it.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        for c in [c for c in row if c in self.rows]:
            coef = row.get(c)
            if not coef:
                continue
            for k, x in self.rows[c].items():
                y = row.get(k, ZERO) - coef * x
                if y:
                    row[k] = y
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {k: x * inv for k, x in r.items()}
        for other in self.rows.values():
            coef = other.get(p)
            if coef:
                for k, x in r.items():
                    y = other.get(k, ZERO) - coef * x
                    if y:
                        other[k] = y
                    else:
                        other.pop(k, None)
        self.rows[p] = r
        return True

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def dense_rows(self) -> list[tuple]:
        out = []
        for p in self.pivots():
            v = [ZERO] * self.ncols
            for k, x in self.rows[p].items():
                v[k] = x
            out.append(tuple(v))
        return out


def rref(m: Mat, ncols: int | None = None) -> tuple[list[tuple], list[int]]:
    if ncols is None:
        ncols = len(m[0]) if m else 0
    ech = Echelon(ncols)
    for row in m:
        if len(row) != ncols:
            raise DimensionMismatch("ragged matrix")
        ech.add(_sparse(row))
    return ech.dense_rows(), ech.pivots()


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def _nullspace_from_echelon(ech: Echelon, ncols: int) -> list[tuple]:
    pivots = set(ech.rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for p, row in ech.rows.items():
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(tuple(v))
    return basis


def nullspace(m: Mat, ncols: int | None = None) -> "Subspace":
    """The exact kernel ``{v : m v = 0}`` as a canonical subspace."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    ech = Echelon(ncols)
    for row in m:
        if len(row) != ncols:
            raise DimensionMismatch("ragged matrix")
        ech.add(_sparse(row))
    return Subspace.span(_nullspace_from_echelon(ech, ncols), ncols)


def sparse_nullspace(rows: Iterable[dict], ncols: int) -> "Subspace":
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return Subspace.span(_nullspace_from_echelon(ech, ncols), ncols)


def solve(m: Mat, rhs: Sequence) -> tuple | None:
    """A particular solution of ``m x = rhs`` or ``None`` if inconsistent."""
    nrows, ncols = len(m), (len(m[0]) if m else 0)
    if len(rhs) != nrows:
        raise DimensionMismatch(f"rhs has length {len(rhs)}, matrix has {nrows} rows")
    ech = Echelon(ncols + 1)
    for row, b in zip(m, rhs):
        ech.add(_sparse(list(row) + [b]))
    if ncols in ech.rows:
        return None
    x = [ZERO] * ncols
    for p, row in ech.rows.items():
        x[p] = row.get(ncols, ZERO)
    return tuple(x)


def inverse(m: Mat) -> Mat:
    n = len(m)
    ech = Echelon(2 * n)
    for i, row in enumerate(m):
        r = _sparse(row)
        r[n + i] = ONE
        ech.add(r)
    if ech.pivots()[:n] != list(range(n)) or len(ech) != n:
        raise LinalgError("matrix is singular")
    return [[ech.rows[i].get(n + j, ZERO) for j in range(n)] for i in range(n)]


def determinant(m: Mat) -> Fraction:
    n = len(m)
    a = [list(r) for r in m]
    det = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        piv = a[c][c]
        det *= piv
        for r in range(c + 1, n):
            f = a[r][c] / piv
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


# --- subspaces -----------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n stored by its reduced row-echelon basis."""

    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
            ech.add(_sparse(v))
        return cls(ambient_dim, tuple(ech.dense_rows()))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in sorted(set(indices))))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(v) if x) for v in self.basis]

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")

    def coordinates(self, v: Sequence) -> tuple | None:
        """Coordinates of ``v`` in the echelon basis, or ``None`` if ``v`` is outside."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        c = tuple(frac(v[p]) for p in self.pivots)
        rebuilt = [ZERO] * self.ambient_dim
        for x, b in zip(c, self.basis):
            if x:
                for i, y in enumerate(b):
                    if y:
                        rebuilt[i] += x * y
        if tuple(rebuilt) != tuple(frac(x) for x in v):
            return None
        return c

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def __add__(self, other: "Subspace") -> "Subspace":
        return self.sum(other)

    def annihilator(self) -> "Subspace":
        """Orthogonal complement for the standard dot product."""
        return nullspace([list(b) for b in self.basis], self.ambient_dim) if self.basis else Subspace.full(self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return (self.annihilator() + other.annihilator()).annihilator()

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersect(other)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def membership(s: Subspace, v: Sequence) -> bool:
    return s.contains(v)


class Coordinates:
    """Coordinates with respect to an arbitrary (not echelonized) basis."""

    def __init__(self, basis: Sequence[Sequence], ambient_dim: int):
        self.basis = [vec(b) for b in basis]
        self.ambient_dim = ambient_dim
        self._sparse = [_sparse(b) for b in self.basis]
        self.space = Subspace.span(self.basis, ambient_dim)
        if self.space.dim != len(self.basis):
            raise LinalgError("basis vectors are linearly dependent")
        piv = self.space.pivots
        n = len(self.basis)
        # basis_i[piv_j] = M[i][j]; coordinates c solve M^T c = v[piv]
        mt = [[self.basis[i][piv[j]] for i in range(n)] for j in range(n)]
        inv = inverse(mt) if n else []
        self._inv_cols = {piv[j]: {i: inv[i][j] for i in range(n) if inv[i][j]} for j in range(n)}

    def of(self, v: Sequence, check: bool = True) -> tuple:
        c = [ZERO] * len(self.basis)
        for p, col in self._inv_cols.items():
            x = v[p]
            if x:
                for i, y in col.items():
                    c[i] += y * x
        if check:
            rebuilt = self._combine_sparse(c)
            target = {i: frac(x) for i, x in enumerate(v) if x}
            if rebuilt != target:
                raise LinalgError("vector is not in the span of the basis")
        return tuple(c)

    def _combine_sparse(self, coords: Sequence) -> dict:
        out: dict = {}
        for x, b in zip(coords, self._sparse):
            if x:
                for i, y in b.items():
                    out[i] = out.get(i, ZERO) + x * y
        return {i: y for i, y in out.items() if y}

    def combine(self, coords: Sequence) -> tuple:
        out = [ZERO] * self.ambient_dim
        for i, y in self._combine_sparse(coords).items():
            out[i] = y
        return tuple(out)


# --- spectra -------------------------------------------------------------------


def charpoly(m: Mat) -> list[Fraction]:
    """Characteristic polynomial det(tI - m), coefficients from degree 0 upward.

    Reduces to upper Hessenberg form by similarity, then runs the standard
    three-term recurrence on the leading principal minors.
    """
    n = len(m)
    a = [list(map(frac, r)) for r in m]
    for c in range(n - 2):
        p = next((r for r in range(c + 1, n) if a[r][c]), None)
        if p is None:
            continue
        if p != c + 1:
            a[c + 1], a[p] = a[p], a[c + 1]
            for row in a:
                row[c + 1], row[p] = row[p], row[c + 1]
        piv = a[c + 1][c]
        for r in range(c + 2, n):
            f = a[r][c] / piv
            if f:
                for k in range(n):
                    a[r][k] -= f * a[c + 1][k]
                for row in a:
                    row[c + 1] += f * row[r]
    # p_k(t) = det(tI - H_k)
    polys = [[ONE]]
    for k in range(1, n + 1):
        hk = a[k - 1][k - 1]
        prev = polys[k - 1]
        cur = [ZERO] + prev  # t * p_{k-1}
        for i, x in enumerate(prev):
            cur[i] -= hk * x
        prod = ONE
        for i in range(1, k):
            prod *= a[k - i][k - i - 1]
            if not prod:
                break
            coef = prod * a[k - i - 1][k - 1]
            if coef:
                for j, x in enumerate(polys[k - i - 1]):
                    cur[j] -= coef * x
        polys.append(cur)
    return polys[n]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _horner(coeffs: list, x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list, x: Fraction) -> list:
    # divide by (t - x); coefficients low to high
    n = len(coeffs) - 1
    out = [ZERO] * n
    acc = ZERO
    for i in range(n, 0, -1):
        acc = acc * x + coeffs[i]
        out[i - 1] = acc
    return out


def rational_roots(coeffs: Sequence) -> dict[Fraction, int]:
    """Rational roots with multiplicities; raises if anything irrational is left."""
    c = [frac(x) for x in coeffs]
    while c and not c[-1]:
        c.pop()
    roots: dict[Fraction, int] = {}
    while len(c) > 1 and not c[0]:
        c = c[1:]
        roots[ZERO] = roots.get(ZERO, 0) + 1
    if len(c) > 1:
        den = 1
        for x in c:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in c]
        cands = set()
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                cands.add(Fraction(p, q))
                cands.add(Fraction(-p, q))
        for r in sorted(cands):
            while len(c) > 1 and not _horner(c, r):
                c = _deflate(c, r)
                roots[r] = roots.get(r, 0) + 1
    if len(c) > 1:
        raise NonRationalSpectrum(f"characteristic polynomial has a non-rational factor of degree {len(c) - 1}")
    return roots


def _eigen_decompose(block: Mat) -> list[tuple[Fraction, list[tuple]]]:
    n = len(block)
    if n == 1:
        return [(block[0][0], [(ONE,)])]
    out = []
    total = 0
    for r in sorted(rational_roots(charpoly(block))):
        shifted = [[x - (r if i == j else ZERO) for j, x in enumerate(row)] for i, row in enumerate(block)]
        ns = nullspace(shifted, n)
        total += ns.dim
        out.append((r, list(ns.basis)))
    if total != n:
        raise NotDiagonalizable(f"eigenspaces span {total} of {n} dimensions")
    return out


def _restrict(op: Mat, basis: list[tuple]) -> Mat:
    """Matrix of ``op`` on the invariant span of ``basis`` (columns = images)."""
    coords = Coordinates(basis, len(basis[0]))
    cols = []
    for b in basis:
        img = matvec(op, b)
        try:
            cols.append(coords.of(img))
        except LinalgError:
            raise NonCommuting("subspace is not invariant under a later operator") from None
    return transpose(cols)


def _components(ops: Sequence[Mat], n: int) -> list[list[int]]:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for op in ops:
        for i, row in enumerate(op):
            for j, x in enumerate(row):
                if x and i != j:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def simultaneous_weight_spaces(ops: Sequence[Mat], dim: int | None = None) -> list[tuple[tuple, Subspace]]:
    """Joint eigenspaces of pairwise commuting, rationally diagonalizable operators.

    Returns ``(weight, space)`` pairs sorted by weight, where ``weight[i]`` is the
    eigenvalue of ``ops[i]``.  The coordinate space is first split into the
    connected components of the joint sparsity graph (each is invariant under
    every operator), then each block is diagonalized operator by operator.
    """
    if dim is None:
        if not ops:
            raise DimensionMismatch("dimension required for an empty family")
        dim = len(ops[0])
    for op in ops:
        if shape(op) != (dim, dim):
            raise DimensionMismatch(f"operator of shape {shape(op)} on Q^{dim}")
    if dim == 0:
        return []
    if not ops:
        return [((), Subspace.full(dim))]
    collected: dict[tuple, list[tuple]] = {}
    for comp in _components(ops, dim):
        blocks = [[[op[i][j] for j in comp] for i in comp] for op in ops]
        for a in range(len(blocks)):
            for b in range(a + 1, len(blocks)):
                if matmul(blocks[a], blocks[b]) != matmul(blocks[b], blocks[a]):
                    raise NonCommuting(f"operators {a} and {b} do not commute")
        # list of (partial weight, basis of block coordinates)
        pieces = [((), [unit_vector(len(comp), i) for i in range(len(comp))])]
        for blk in blocks:
            refined = []
            for w, basis in pieces:
                sub = _restrict(blk, basis)
                for ev, vecs in _eigen_decompose(sub):
                    new_basis = [tuple(sum((c * b[i] for c, b in zip(v, basis) if c), ZERO) for i in range(len(comp))) for v in vecs]
                    refined.append((w + (ev,), new_basis))
            pieces = refined
        for w, basis in pieces:
            for b in basis:
                full = [ZERO] * dim
                for i, x in zip(comp, b):
                    full[i] = x
                collected.setdefault(w, []).append(tuple(full))
    return [(w, Subspace.span(vs, dim)) for w, vs in sorted(collected.items())]
