"""Symmetric superpairs, even Cartan subspaces and the concrete families.

A pair is a Lie superalgebra with an even involutive automorphism θ that
preserves the invariant form.  The ±1 eigenspaces give the split g = k ⊕ p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .linalg import (
    ONE,
    ZERO,
    LinalgError,
    Subspace,
    frac,
    matvec,
    nullspace,
    simultaneous_weight_spaces,
)
from .superlie import (
    LieSuperalgebra,
    SuperLieError,
    build_gl,
    build_osp,
    centralizer,
    diagonal_torus,
    direct_sum,
    direct_sum_maps,
)


class PairError(ValueError):
    pass


class NotInvolution(PairError):
    pass


class NotAutomorphism(PairError):
    pass


class FormNotPreserved(PairError):
    pass


class OddSymplecticSize(PairError):
    pass


@dataclass(frozen=True, eq=False)
class SymmetricSuperpair:
    alg: LieSuperalgebra
    theta: tuple  # matrix rows in the algebra basis
    k: Subspace
    p: Subspace
    k0: Subspace
    k1: Subspace
    p0: Subspace
    p1: Subspace
    cartan: Subspace
    cartan_basis: tuple  # preferred basis of the Cartan subspace (not echelonized)
    family: str = "custom"
    params: dict = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return self.cartan.dim

    def apply_theta(self, x) -> tuple:
        return matvec(self.theta, x)

    def to_json(self) -> dict:
        out = self.alg.to_json()
        out["theta"] = [[str(v) for v in row] for row in self.theta]
        out["cartan"] = [[str(v) for v in b] for b in self.cartan_basis]
        out["family"] = self.family
        out["params"] = dict(sorted(self.params.items()))
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SymmetricSuperpair":
        alg = LieSuperalgebra.from_json(data)
        theta = [[frac(v) for v in row] for row in data["theta"]]
        basis = [[frac(v) for v in b] for b in data["cartan"]]
        return build_pair(alg, theta, basis, family=data.get("family", "custom"), params=data.get("params", {}))


def _sparse_theta(theta) -> list[dict]:
    """Columns of θ as sparse dicts (θ e_j = column j)."""
    n = len(theta)
    return [{i: theta[i][j] for i in range(n) if theta[i][j]} for j in range(n)]


def build_pair(alg: LieSuperalgebra, theta, cartan, family: str = "custom", params: dict | None = None) -> SymmetricSuperpair:
    """Validate θ and split the algebra into its ±1 eigenspaces.

    ``cartan`` is a Subspace or a list of vectors; it is stored as given and
    checked separately by :func:`validate_cartan`.
    """
    n = alg.dim
    theta = tuple(tuple(frac(v) for v in row) for row in theta)
    if len(theta) != n or any(len(r) != n for r in theta):
        raise NotInvolution("θ has the wrong size")
    cols = _sparse_theta(theta)
    for j, col in enumerate(cols):
        if any(alg.parities[i] != alg.parities[j] for i in col):
            raise NotAutomorphism("θ does not preserve parity")
    # θ² = id
    for j, col in enumerate(cols):
        sq: dict = {}
        for i, c in col.items():
            for k, d in cols[i].items():
                sq[k] = sq.get(k, ZERO) + c * d
        sq = {k: v for k, v in sq.items() if v}
        if sq != {j: ONE}:
            raise NotInvolution("θ² is not the identity")
    # θ[x, y] = [θx, θy]
    for i in range(n):
        for j in range(n):
            br = alg.brackets.get((i, j), {})
            lhs: dict = {}
            for k, c in br.items():
                for l, d in cols[k].items():
                    lhs[l] = lhs.get(l, ZERO) + c * d
            lhs = {k: v for k, v in lhs.items() if v}
            if lhs != alg.bracket_sparse(cols[i], cols[j]):
                raise NotAutomorphism("θ is not a bracket homomorphism")
    # b(θx, θy) = b(x, y), accumulated over the non-zero entries of b
    f = alg.form
    rows_of: dict = {}
    for j, col in enumerate(cols):
        for i, c in col.items():
            rows_of.setdefault(i, []).append((j, c))
    moved: dict = {}
    for k in range(n):
        for l, v in enumerate(f[k]):
            if v:
                for i, a in rows_of.get(k, ()):
                    for j, b in rows_of.get(l, ()):
                        moved[(i, j)] = moved.get((i, j), ZERO) + a * b * v
    target = {(i, j): v for i in range(n) for j, v in enumerate(f[i]) if v}
    if {k: v for k, v in moved.items() if v} != target:
        raise FormNotPreserved("θ does not preserve the invariant form")
    ev_n = alg.even_dim
    blocks = {}
    for sign in (1, -1):
        for lo, hi in ((0, ev_n), (ev_n, n)):
            m = [[theta[i][j] - (sign if i == j else 0) for j in range(lo, hi)] for i in range(lo, hi)]
            sub = nullspace(m, hi - lo).basis if hi > lo else ()
            blocks[(sign, lo)] = [tuple([ZERO] * lo) + tuple(v) + tuple([ZERO] * (n - hi)) for v in sub]
    k0 = Subspace.span(blocks[(1, 0)], n)
    k1 = Subspace.span(blocks[(1, ev_n)], n)
    p0 = Subspace.span(blocks[(-1, 0)], n)
    p1 = Subspace.span(blocks[(-1, ev_n)], n)
    if isinstance(cartan, Subspace):
        basis = tuple(cartan.basis)
    else:
        basis = tuple(tuple(frac(v) for v in b) for b in cartan)
    cart = Subspace.span(basis, n)
    return SymmetricSuperpair(
        alg=alg,
        theta=theta,
        k=k0 + k1,
        p=p0 + p1,
        k0=k0,
        k1=k1,
        p0=p0,
        p1=p1,
        cartan=cart,
        cartan_basis=basis,
        family=family,
        params=dict(params or {}),
    )


# --- even-type validation ---------------------------------------------------------


@dataclass(frozen=True)
class EvenTypeReport:
    a_in_p0: bool
    abelian: bool
    self_centralizing: bool
    semisimple: bool
    odd_centralizer_zero: bool

    @property
    def is_even_type(self) -> bool:
        return all(self.checks.values())

    @property
    def checks(self) -> dict:
        return {
            "a_in_p0": self.a_in_p0,
            "abelian": self.abelian,
            "self_centralizing": self.self_centralizing,
            "semisimple": self.semisimple,
            "odd_centralizer_zero": self.odd_centralizer_zero,
        }

    def to_json(self) -> dict:
        return {"is_even_type": self.is_even_type, "checks": self.checks}


def validate_cartan(pair: SymmetricSuperpair) -> EvenTypeReport:
    alg = pair.alg
    a = pair.cartan
    a_in_p0 = a.is_subspace_of(pair.p0)
    abelian = all(not any(alg.bracket(x, y)) for x in a.basis for y in a.basis)
    self_cent = centralizer(alg, a, pair.p0) == a
    semisimple = True
    try:
        ops = [alg.ad_matrix(h) for h in a.basis]
        spaces = simultaneous_weight_spaces(ops, alg.dim)
        semisimple = sum(s.dim for _, s in spaces) == alg.dim
    except LinalgError:
        semisimple = False
    odd_zero = centralizer(alg, a, pair.p1).dim == 0
    return EvenTypeReport(a_in_p0, abelian, self_cent, semisimple, odd_zero)


# --- constructors --------------------------------------------------------------------


def _conjugation_theta(alg: LieSuperalgebra, signs) -> list:
    """θ(x) = g x g for g = diag(signs), written in the algebra basis."""
    n = alg.dim
    real = alg.realization
    size = len(signs)
    theta = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        flat = [v * signs[idx // size] * signs[idx % size] if v else ZERO for idx, v in enumerate(real.matrices[j])]
        col = real.coords.of(flat)
        for i, v in enumerate(col):
            theta[i][j] = v
    return theta


def _block_cartan(alg, size, pairs) -> list:
    """Cartan basis elements E_ij + E_ji-type matrices given by entry lists."""
    basis = []
    for entries in pairs:
        m = [[ZERO] * size for _ in range(size)]
        for (r, c), v in entries.items():
            m[r][c] = frac(v)
        basis.append(alg.from_matrix(m))
    return basis


def build_group_type(k: LieSuperalgebra, cartan_of_k0, family: str = "group", params: dict | None = None) -> SymmetricSuperpair:
    """The pair (k ⊕ k, flip) with Cartan subspace {(h, -h)}."""
    g = direct_sum(k, k)
    m1, m2 = direct_sum_maps(k, k)
    n = g.dim
    theta = [[ZERO] * n for _ in range(n)]
    for i in range(k.dim):
        theta[m2[i]][m1[i]] = ONE
        theta[m1[i]][m2[i]] = ONE
    basis = cartan_of_k0.basis if isinstance(cartan_of_k0, Subspace) else cartan_of_k0
    cart = []
    for h in basis:
        v = [ZERO] * n
        for i, c in enumerate(h):
            if c:
                v[m1[i]] = frac(c)
                v[m2[i]] = -frac(c)
        cart.append(v)
    return build_pair(g, theta, cart, family=family, params=params)


@lru_cache(maxsize=None)
def build_group_gl(p: int, q: int) -> SymmetricSuperpair:
    k = build_gl(p, q)
    return build_group_type(k, diagonal_torus(k), family="group-gl", params={"p": p, "q": q})


@lru_cache(maxsize=None)
def build_group_osp(m: int, n2: int) -> SymmetricSuperpair:
    k = build_osp(m, n2)
    return build_group_type(k, diagonal_torus(k), family="group-osp", params={"m": m, "n": n2})


@lru_cache(maxsize=None)
def build_gl_block(p: int, q: int, r: int, s: int) -> SymmetricSuperpair:
    """gl(p+q|r+s) with θ = conjugation by diag(1_p, -1_q, 1_r, -1_s).

    The Cartan subspace consists of the matrices [[0, A], [A^t, 0]] and
    [[0, B], [B^t, 0]] with A = (D, 0) and B = (D', 0) for diagonal D, D'.
    The symmetric blocks keep the spectrum of ad(a) rational.
    """
    if min(p, q, r, s) < 0 or p + q + r + s < 1:
        raise PairError("need p, q, r, s >= 0 and p + q + r + s >= 1")
    alg = build_gl(p + q, r + s)
    signs = [1] * p + [-1] * q + [1] * r + [-1] * s
    theta = _conjugation_theta(alg, signs)
    size = p + q + r + s
    entries = []
    for j in range(min(p, q)):
        entries.append({(j, p + j): 1, (p + j, j): 1})
    off = p + q
    for j in range(min(r, s)):
        entries.append({(off + j, off + r + j): 1, (off + r + j, off + j): 1})
    cart = _block_cartan(alg, size, entries)
    return build_pair(alg, theta, cart, family="gl-block", params={"p": p, "q": q, "r": r, "s": s})


def _symplectic_pairs(k: int) -> list:
    """Block-diagonal symplectic form built from 2x2 blocks [[0, 1], [-1, 0]]."""
    j = [[ZERO] * k for _ in range(k)]
    for i in range(0, k, 2):
        j[i][i + 1] = ONE
        j[i + 1][i] = -ONE
    return j


@lru_cache(maxsize=None)
def build_osp_block(p: int, q: int, r: int, s: int) -> SymmetricSuperpair:
    """The gl-block involution restricted to osp(p+q|r+s), r and s even.

    The orthogonal form is 1_p ⊕ (-1_q) and the symplectic one J_r ⊕ J_s with
    J built from 2x2 blocks, so that the Cartan blocks [[0, A], [A^t, 0]] and
    [[0, B], [J_s B^t J_r, 0]] have rational eigenvalues.
    """
    if r % 2 or s % 2:
        raise OddSymplecticSize("r and s must be even")
    if min(p, q, r, s) < 0 or p + q + r + s < 1:
        raise PairError("need p, q, r, s >= 0 and p + q + r + s >= 1")
    m, n2 = p + q, r + s
    sym = [[ZERO] * m for _ in range(m)]
    for i in range(m):
        sym[i][i] = ONE if i < p else -ONE
    symp = [[ZERO] * n2 for _ in range(n2)]
    jr, js = _symplectic_pairs(r), _symplectic_pairs(s)
    for i in range(r):
        for j in range(r):
            symp[i][j] = jr[i][j]
    for i in range(s):
        for j in range(s):
            symp[r + i][r + j] = js[i][j]
    alg = build_osp(m, n2, sym, symp)
    signs = [1] * p + [-1] * q + [1] * r + [-1] * s
    theta = _conjugation_theta(alg, signs)
    size = m + n2
    entries = []
    for j in range(min(p, q)):
        entries.append({(j, p + j): 1, (p + j, j): 1})
    for l in range(min(r, s) // 2):
        a, b = m + 2 * l, m + r + 2 * l
        # B = diag(1, -1) on a 2x2 block; then J_s B^t J_r = diag(1, -1) too
        entries.append({(a, b): 1, (a + 1, b + 1): -1, (b, a): 1, (b + 1, a + 1): -1})
    cart = _block_cartan(alg, size, entries)
    return build_pair(alg, theta, cart, family="osp-block", params={"p": p, "q": q, "r": r, "s": s})


@lru_cache(maxsize=None)
def build_c_special(q: int) -> SymmetricSuperpair:
    """osp(2|2q) with θ(x) = g x g, g = antidiag(1, 1) ⊕ 1_{2q}.

    The Cartan subspace is p0 itself, spanned by h = diag(1, -1, 0, ..., 0),
    so the restricted root λ takes the value 1 on h.
    """
    if q < 1:
        raise PairError("q must be at least 1")
    alg = build_osp(2, 2 * q)
    n = alg.dim
    size = 2 + 2 * q
    g = [[ZERO] * size for _ in range(size)]
    g[0][1] = g[1][0] = ONE
    for i in range(2, size):
        g[i][i] = ONE
    theta = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        mtx = alg.to_matrix(alg.basis_vector(j))
        gm = [[sum((g[r][t] * mtx[t][c] for t in range(size) if g[r][t]), ZERO) for c in range(size)] for r in range(size)]
        gmg = [[sum((gm[r][t] * g[t][c] for t in range(size) if g[t][c]), ZERO) for c in range(size)] for r in range(size)]
        col = alg.from_matrix(gmg)
        for i, v in enumerate(col):
            theta[i][j] = v
    h = [[ZERO] * size for _ in range(size)]
    h[0][0], h[1][1] = ONE, -ONE
    return build_pair(alg, theta, [alg.from_matrix(h)], family="c-special", params={"q": q})


FAMILIES = ("group-gl", "group-osp", "gl-block", "osp-block", "c-special")

FAMILY_PARAMS = {
    "group-gl": ("p", "q"),
    "group-osp": ("m", "n"),
    "gl-block": ("p", "q", "r", "s"),
    "osp-block": ("p", "q", "r", "s"),
    "c-special": ("q",),
}


def build_family(family: str, params: dict) -> SymmetricSuperpair:
    """Dispatch to a named constructor; ``params`` maps names to integers."""
    if family not in FAMILY_PARAMS:
        raise PairError(f"unknown family {family!r}")
    names = FAMILY_PARAMS[family]
    if set(params) != set(names):
        raise PairError(f"family {family} takes parameters {', '.join(names)}")
    vals = [int(params[k]) for k in names]
    try:
        if family == "group-gl":
            return build_group_gl(*vals)
        if family == "group-osp":
            return build_group_osp(*vals)
        if family == "gl-block":
            return build_gl_block(*vals)
        if family == "osp-block":
            return build_osp_block(*vals)
        return build_c_special(*vals)
    except SuperLieError as e:
        raise PairError(str(e)) from None


def form_orthogonality(pair: SymmetricSuperpair) -> bool:
    """k ⊥ p under b, and both restrictions are non-degenerate."""
    alg = pair.alg
    for x in pair.k.basis:
        for y in pair.p.basis:
            if alg.form_value(x, y):
                return False
    for sub in (pair.k, pair.p):
        gram = [[alg.form_value(x, y) for y in sub.basis] for x in sub.basis]
        if sub.dim and nullspace(gram, sub.dim).dim:
            return False
    return True


def check_theta_form(pair: SymmetricSuperpair) -> bool:
    """b^θ(x, y) = b(x, θy) is even, supersymmetric and non-degenerate."""
    alg = pair.alg
    n = alg.dim
    cols = _sparse_theta(pair.theta)
    gram = [[sum((c * alg.form[i][k] for k, c in cols[j].items()), ZERO) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            pi, pj = alg.parities[i], alg.parities[j]
            if gram[i][j] and pi != pj:
                return False
            sgn = -1 if pi and pj else 1
            if gram[i][j] != sgn * gram[j][i]:
                return False
    return n == 0 or nullspace(gram, n).dim == 0
