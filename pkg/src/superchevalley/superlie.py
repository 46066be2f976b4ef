"""Finite-dimensional Lie superalgebras given by structure constants.

A :class:`LieSuperalgebra` is a parity-labelled basis (even elements first),
a sparse bracket table and the Gram matrix of an even supersymmetric form.
Matrix superalgebras additionally remember a realization so that elements
can be converted to and from block matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import (
    ONE,
    ZERO,
    Coordinates,
    DimensionMismatch,
    LinalgError,
    Subspace,
    determinant,
    frac,
    mat,
    nullspace,
    rank,
    sparse_nullspace,
    unit_vector,
)


class SuperLieError(ValueError):
    pass


class BadForm(SuperLieError):
    pass


EVEN, ODD = 0, 1


@dataclass(frozen=True)
class Realization:
    """Block sizes (m|n) and the flattened matrices of the basis elements."""

    m: int
    n: int
    matrices: tuple
    coords: Coordinates = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return self.m + self.n

    def parity_of_entry(self, i: int, j: int) -> int:
        return int(i >= self.m) ^ int(j >= self.m)


@dataclass(frozen=True, eq=False)
class LieSuperalgebra:
    labels: tuple
    parities: tuple
    brackets: dict  # (i, j) -> {k: Fraction}, both orders stored
    form: tuple  # Gram matrix rows
    realization: Realization | None = None

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise SuperLieError("basis labels must be distinct")
        if list(self.parities) != sorted(self.parities):
            raise SuperLieError("even basis elements must precede odd ones")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def even_dim(self) -> int:
        return sum(1 for p in self.parities if p == EVEN)

    @property
    def odd_dim(self) -> int:
        return self.dim - self.even_dim

    def parity(self, i: int) -> int:
        return self.parities[i]

    def element_parity(self, x) -> int | None:
        """Parity of a homogeneous vector, ``None`` if zero or inhomogeneous."""
        ps = {self.parities[i] for i, c in enumerate(x) if c}
        return ps.pop() if len(ps) == 1 else None

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.dim, i)

    def _check(self, x):
        if len(x) != self.dim:
            raise DimensionMismatch(f"vector of length {len(x)} in an algebra of dimension {self.dim}")

    def bracket_sparse(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                row = self.brackets.get((i, j))
                if row:
                    ab = a * b
                    for k, c in row.items():
                        out[k] = out.get(k, ZERO) + ab * c
        return {k: v for k, v in out.items() if v}

    def bracket(self, x, y) -> tuple:
        self._check(x)
        self._check(y)
        xs = {i: frac(c) for i, c in enumerate(x) if c}
        ys = {i: frac(c) for i, c in enumerate(y) if c}
        out = [ZERO] * self.dim
        for k, v in self.bracket_sparse(xs, ys).items():
            out[k] = v
        return tuple(out)

    def ad_matrix(self, x) -> list:
        """Matrix of ad(x); column j is [x, e_j]."""
        self._check(x)
        xs = {i: frac(c) for i, c in enumerate(x) if c}
        m = [[ZERO] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, v in self.bracket_sparse(xs, {j: ONE}).items():
                m[k][j] = v
        return m

    def form_value(self, x, y) -> Fraction:
        self._check(x)
        self._check(y)
        total = ZERO
        for i, a in enumerate(x):
            if a:
                row = self.form[i]
                for j, b in enumerate(y):
                    if b and row[j]:
                        total += a * b * row[j]
        return total

    # -- realization helpers --

    def to_matrix(self, x) -> list:
        r = self.realization
        if r is None:
            raise SuperLieError("algebra has no matrix realization")
        flat = r.coords.combine(x)
        s = r.size
        return [list(flat[i * s:(i + 1) * s]) for i in range(s)]

    def from_matrix(self, m) -> tuple:
        r = self.realization
        if r is None:
            raise SuperLieError("algebra has no matrix realization")
        flat = [frac(v) for row in m for v in row]
        try:
            return r.coords.of(flat)
        except LinalgError:
            raise SuperLieError("matrix is not in the algebra") from None

    # -- serialization --

    def to_json(self) -> dict:
        triples = []
        for (i, j), row in sorted(self.brackets.items()):
            for k, c in sorted(row.items()):
                triples.append([i, j, k, str(c)])
        return {
            "dim": self.dim,
            "even_dim": self.even_dim,
            "labels": list(self.labels),
            "brackets": triples,
            "form": [str(v) for row in self.form for v in row],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LieSuperalgebra":
        n = data["dim"]
        ev = data["even_dim"]
        brackets: dict = {}
        for i, j, k, c in data["brackets"]:
            brackets.setdefault((i, j), {})[k] = Fraction(c)
        flat = [Fraction(v) for v in data["form"]]
        form = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        parities = tuple([EVEN] * ev + [ODD] * (n - ev))
        return cls(tuple(data["labels"]), parities, brackets, form)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _make(labels, parities, brackets, form, realization=None) -> LieSuperalgebra:
    clean = {}
    for key, row in brackets.items():
        row = {k: frac(v) for k, v in row.items() if v}
        if row:
            clean[key] = row
    return LieSuperalgebra(tuple(labels), tuple(parities), clean, tuple(tuple(frac(v) for v in r) for r in form), realization)


# --- gl(p|q) ------------------------------------------------------------------


def _gl_index_order(p: int, q: int) -> list[tuple[int, int]]:
    size = p + q
    par = lambda i, j: int(i >= p) ^ int(j >= p)
    pairs = [(i, j) for i in range(size) for j in range(size)]
    return [ij for ij in pairs if par(*ij) == 0] + [ij for ij in pairs if par(*ij) == 1]


def build_gl(p: int, q: int) -> LieSuperalgebra:
    """gl(p|q) on elementary matrices with the supertrace form."""
    if p < 0 or q < 0 or p + q < 1:
        raise SuperLieError("gl(p|q) needs p, q >= 0 and p + q >= 1")
    size = p + q
    order = _gl_index_order(p, q)
    index = {ij: n for n, ij in enumerate(order)}
    rowpar = lambda i: int(i >= p)
    par = lambda i, j: rowpar(i) ^ rowpar(j)
    parities = [par(*ij) for ij in order]
    labels = [f"E{i + 1},{j + 1}" for i, j in order]
    brackets: dict = {}
    for (i, j), a in index.items():
        for (k, l), b in index.items():
            row: dict = {}
            if j == k:
                row[index[(i, l)]] = row.get(index[(i, l)], ZERO) + ONE
            if l == i:
                sign = -1 if par(i, j) * par(k, l) else 1
                key = index[(k, j)]
                row[key] = row.get(key, ZERO) - sign
            row = {c: v for c, v in row.items() if v}
            if row:
                brackets[(a, b)] = row
    dim = size * size
    form = [[ZERO] * dim for _ in range(dim)]
    # str(E_ij E_ji) = (-1)^{parity of row i}
    for (i, j), a in index.items():
        b = index[(j, i)]
        form[a][b] = -ONE if rowpar(i) else ONE
    mats = []
    for i, j in order:
        v = [ZERO] * dim
        v[i * size + j] = ONE
        mats.append(tuple(v))
    real = Realization(p, q, tuple(mats), Coordinates(mats, dim))
    return _make(labels, parities, brackets, form, real)


# --- matrix subalgebras ---------------------------------------------------------


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n) if a[i][k] and b[k][j]), ZERO) for j in range(n)] for i in range(n)]


def supercommutator(x, y, m: int, px: int, py: int):
    xy = _matmul(x, y)
    yx = _matmul(y, x)
    s = -1 if px and py else 1
    return [[a - s * b for a, b in zip(r1, r2)] for r1, r2 in zip(xy, yx)]


def supertrace(x, m: int) -> Fraction:
    return sum((x[i][i] for i in range(m)), ZERO) - sum((x[i][i] for i in range(m, len(x))), ZERO)


def _sparse_rows(flat, size) -> dict:
    rows: dict = {}
    for idx, v in enumerate(flat):
        if v:
            rows.setdefault(idx // size, {})[idx % size] = v
    return rows


def _sparse_product(a: dict, b: dict) -> dict:
    """Product of sparse matrices stored as {row: {col: value}}, flattened keys."""
    out: dict = {}
    for r, row in a.items():
        for k, x in row.items():
            brow = b.get(k)
            if brow:
                for c, y in brow.items():
                    out[(r, c)] = out.get((r, c), ZERO) + x * y
    return out


def matrix_subalgebra(m: int, n: int, even_basis, odd_basis, labels=None) -> LieSuperalgebra:
    """Lie superalgebra spanned by homogeneous (m|n) block matrices, with str form.

    The span must be closed under the supercommutator; this is verified.
    """
    size = m + n
    mats = [tuple(frac(v) for v in b) for b in list(even_basis) + list(odd_basis)]
    parities = [EVEN] * len(even_basis) + [ODD] * len(odd_basis)
    dim = len(mats)
    coords = Coordinates(mats, size * size) if mats else None
    sp = [_sparse_rows(b, size) for b in mats]
    brackets: dict = {}
    form = [[ZERO] * dim for _ in range(dim)]
    for a in range(dim):
        for b in range(dim):
            xy = _sparse_product(sp[a], sp[b])
            yx = _sparse_product(sp[b], sp[a])
            sgn = -1 if parities[a] and parities[b] else 1
            flat = [ZERO] * (size * size)
            for (r, c), v in xy.items():
                flat[r * size + c] += v
            for (r, c), v in yx.items():
                flat[r * size + c] -= sgn * v
            form[a][b] = sum((v for (r, c), v in xy.items() if r == c and r < m), ZERO) - sum(
                (v for (r, c), v in xy.items() if r == c and r >= m), ZERO
            )
            if any(flat):
                try:
                    co = coords.of(flat)
                except LinalgError:
                    raise SuperLieError("span of matrices is not closed under the bracket") from None
                brackets[(a, b)] = {k: v for k, v in enumerate(co) if v}
    if labels is None:
        labels = []
        for b in mats:
            piv = next(i for i, v in enumerate(b) if v)
            labels.append(f"X{piv // size + 1},{piv % size + 1}")
    real = Realization(m, n, tuple(mats), coords) if mats else None
    return _make(labels, parities, brackets, form, real)


def standard_symmetric(m: int) -> list:
    """Antidiagonal ones; for m = 2 this is the form I of the C(q+1) example."""
    return [[ONE if i + j == m - 1 else ZERO for j in range(m)] for i in range(m)]


def standard_symplectic(two_n: int) -> list:
    """The form [[0, 1_n], [-1_n, 0]]."""
    if two_n % 2:
        raise BadForm("symplectic form needs even size")
    n = two_n // 2
    j = [[ZERO] * two_n for _ in range(two_n)]
    for i in range(n):
        j[i][n + i] = ONE
        j[n + i][i] = -ONE
    return j


def build_osp(m: int, two_n: int, sym_form=None, symp_form=None) -> LieSuperalgebra:
    """The orthosymplectic subalgebra of gl(m|2n) preserving ``sym_form ⊕ symp_form``.

    A homogeneous X belongs to it when X^st M + (-1)^|X| M X = 0, where the
    supertranspose of [[A, B], [C, D]] is [[A^t, C^t], [-B^t, D^t]].  For odd
    X this reads C^t Ω = S B, the sign used by the explicit C(q+1) matrices.
    """
    if m < 0 or two_n < 0 or two_n % 2:
        raise BadForm("osp(m|2n) needs m >= 0 and an even symplectic size")
    s = mat(sym_form) if sym_form is not None else standard_symmetric(m)
    w = mat(symp_form) if symp_form is not None else standard_symplectic(two_n)
    if len(s) != m or any(len(r) != m for r in s) or len(w) != two_n or any(len(r) != two_n for r in w):
        raise BadForm("form sizes do not match the block sizes")
    if any(s[i][j] != s[j][i] for i in range(m) for j in range(m)):
        raise BadForm("orthogonal form must be symmetric")
    if any(w[i][j] != -w[j][i] for i in range(two_n) for j in range(two_n)):
        raise BadForm("symplectic form must be antisymmetric")
    if (m and determinant(s) == 0) or (two_n and determinant(w) == 0):
        raise BadForm("forms must be non-degenerate")
    size = m + two_n
    big = [[ZERO] * size for _ in range(size)]
    for i in range(m):
        for j in range(m):
            big[i][j] = s[i][j]
    for i in range(two_n):
        for j in range(two_n):
            big[m + i][m + j] = w[i][j]
    var = lambda i, j: i * size + j
    rowpar = lambda i: int(i >= m)

    def conditions(parity):
        # entries of X^st M + (-1)^parity M X, as sparse rows in the entries of X
        rows = []
        for a in range(size):
            for c in range(size):
                row: dict = {}
                # (X^st M)_{ac} = sum_b X^st_{ab} M_{bc};  X^st_{ab} = sgn * X_{ba}
                for b in range(size):
                    if big[b][c] and rowpar(a) ^ rowpar(b) == parity:
                        sgn = -1 if (parity and rowpar(a) == 1 and rowpar(b) == 0) else 1
                        k = var(b, a)
                        row[k] = row.get(k, ZERO) + sgn * big[b][c]
                # (-1)^parity (M X)_{ac}
                for b in range(size):
                    if big[a][b] and rowpar(b) ^ rowpar(c) == parity:
                        k = var(b, c)
                        row[k] = row.get(k, ZERO) + (-1 if parity else 1) * big[a][b]
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
        # X vanishes on the opposite-parity blocks
        for a in range(size):
            for c in range(size):
                if rowpar(a) ^ rowpar(c) != parity:
                    rows.append({var(a, c): ONE})
        return rows

    even = sparse_nullspace(conditions(0), size * size).basis
    odd = sparse_nullspace(conditions(1), size * size).basis
    return matrix_subalgebra(m, two_n, even, odd)


# --- checks ---------------------------------------------------------------------


def _sign(a: int, b: int) -> int:
    return -1 if a and b else 1


def check_parity(alg: LieSuperalgebra) -> bool:
    for (i, j), row in alg.brackets.items():
        for k in row:
            if alg.parities[k] != alg.parities[i] ^ alg.parities[j]:
                return False
    return True


def check_antisymmetry(alg: LieSuperalgebra) -> bool:
    for (i, j), row in alg.brackets.items():
        other = alg.brackets.get((j, i), {})
        s = _sign(alg.parities[i], alg.parities[j])
        keys = set(row) | set(other)
        if any(row.get(k, ZERO) != -s * other.get(k, ZERO) for k in keys):
            return False
    for (j, i), other in alg.brackets.items():
        if (i, j) not in alg.brackets:
            return False
    return True


def check_jacobi(alg: LieSuperalgebra) -> bool:
    """Super Jacobi [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]] on all basis triples."""
    if not (check_parity(alg) and check_antisymmetry(alg)):
        return False
    n = alg.dim
    p = alg.parities
    for x in range(n):
        for y in range(n):
            xy = alg.brackets.get((x, y), {})
            for z in range(n):
                lhs = alg.bracket_sparse({x: ONE}, alg.brackets.get((y, z), {}))
                r1 = alg.bracket_sparse(xy, {z: ONE})
                r2 = alg.bracket_sparse({y: ONE}, alg.brackets.get((x, z), {}))
                s = _sign(p[x], p[y])
                keys = set(lhs) | set(r1) | set(r2)
                if any(lhs.get(k, ZERO) != r1.get(k, ZERO) + s * r2.get(k, ZERO) for k in keys):
                    return False
    return True


def check_form(alg: LieSuperalgebra) -> bool:
    """Form is even, supersymmetric, invariant and non-degenerate."""
    n = alg.dim
    p = alg.parities
    f = alg.form
    for i in range(n):
        for j in range(n):
            if f[i][j] and p[i] != p[j]:
                return False
            if f[i][j] != _sign(p[i], p[j]) * f[j][i]:
                return False
    for x in range(n):
        for y in range(n):
            xy = alg.brackets.get((x, y), {})
            for z in range(n):
                yz = alg.brackets.get((y, z), {})
                lhs = sum((c * f[k][z] for k, c in xy.items()), ZERO)
                rhs = sum((c * f[x][k] for k, c in yz.items()), ZERO)
                if lhs != rhs:
                    return False
    return n == 0 or rank([list(r) for r in f]) == n


# --- constructions ----------------------------------------------------------------


def direct_sum(a: LieSuperalgebra, b: LieSuperalgebra) -> LieSuperalgebra:
    """Block-diagonal sum, reordered so that all even elements come first."""
    if b.dim == 0:
        return a
    if a.dim == 0:
        return b
    ea, eb = a.even_dim, b.even_dim
    amap = [i if i < ea else i + eb for i in range(a.dim)]
    bmap = [ea + i if i < eb else a.dim + i for i in range(b.dim)]
    n = a.dim + b.dim
    labels = [None] * n
    parities = [None] * n
    for src, mp, tag in ((a, amap, "1"), (b, bmap, "2")):
        for i in range(src.dim):
            labels[mp[i]] = f"{src.labels[i]}.{tag}"
            parities[mp[i]] = src.parities[i]
    brackets: dict = {}
    form = [[ZERO] * n for _ in range(n)]
    for src, mp in ((a, amap), (b, bmap)):
        for (i, j), row in src.brackets.items():
            brackets[(mp[i], mp[j])] = {mp[k]: c for k, c in row.items()}
        for i in range(src.dim):
            for j in range(src.dim):
                form[mp[i]][mp[j]] = src.form[i][j]
    return _make(labels, parities, brackets, form)


def direct_sum_maps(a: LieSuperalgebra, b: LieSuperalgebra) -> tuple[list[int], list[int]]:
    """Index maps of the two summands into :func:`direct_sum` (a, b)."""
    ea, eb = a.even_dim, b.even_dim
    return ([i if i < ea else i + eb for i in range(a.dim)], [ea + i if i < eb else a.dim + i for i in range(b.dim)])


def centralizer(alg: LieSuperalgebra, sub: Subspace, inside: Subspace | None = None) -> Subspace:
    """Elements of ``inside`` commuting with every basis vector of ``sub``."""
    if inside is None:
        inside = Subspace.full(alg.dim)
    if sub.ambient_dim != alg.dim or inside.ambient_dim != alg.dim:
        raise DimensionMismatch("subspaces must live in the algebra")
    if not sub.basis or not inside.basis:
        return inside
    cols = []
    for v in inside.basis:
        vs = {i: c for i, c in enumerate(v) if c}
        col = []
        for s in sub.basis:
            ss = {i: c for i, c in enumerate(s) if c}
            br = alg.bracket_sparse(vs, ss)
            col.extend(br.get(k, ZERO) for k in range(alg.dim))
        cols.append(col)
    m = [list(r) for r in zip(*cols)]
    ns = nullspace(m, len(inside.basis))
    vecs = []
    for c in ns.basis:
        w = [ZERO] * alg.dim
        for x, v in zip(c, inside.basis):
            if x:
                for i, y in enumerate(v):
                    if y:
                        w[i] += x * y
        vecs.append(w)
    return Subspace.span(vecs, alg.dim)


def even_part(alg: LieSuperalgebra) -> Subspace:
    return Subspace.coordinate(alg.dim, range(alg.even_dim))


def odd_part(alg: LieSuperalgebra) -> Subspace:
    return Subspace.coordinate(alg.dim, range(alg.even_dim, alg.dim))


def diagonal_torus(alg: LieSuperalgebra) -> Subspace:
    """Span of the diagonal matrices of a matrix realization."""
    r = alg.realization
    if r is None:
        raise SuperLieError("algebra has no matrix realization")
    s = r.size
    vecs = []
    for i in range(s):
        m = [[ZERO] * s for _ in range(s)]
        m[i][i] = ONE
        flat = [v for row in m for v in row]
        vecs.append(flat)
    # intersect the diagonal with the algebra
    diag = Subspace.span(vecs, s * s)
    inside = Subspace.span(r.matrices, s * s) & diag
    return Subspace.span([r.coords.of(v) for v in inside.basis], alg.dim)


def corrupted(alg: LieSuperalgebra, key=None, k=None) -> LieSuperalgebra:
    """A copy with one structure constant negated (negative control for checks)."""
    brackets = {kk: dict(v) for kk, v in alg.brackets.items()}
    if key is None:
        key = sorted(brackets)[0]
    row = brackets[key]
    if k is None:
        k = sorted(row)[0]
    row[k] = -row[k]
    return LieSuperalgebra(alg.labels, alg.parities, brackets, alg.form, alg.realization)
