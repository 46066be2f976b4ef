"""Restricted and unrestricted root data.

Weights are rational vectors: entry i is the value of the weight on the i-th
vector of the chosen basis of the abelian subalgebra (for restricted roots,
the pair's preferred Cartan basis).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .linalg import ONE, ZERO, Subspace, frac, rank, simultaneous_weight_spaces, solve
from .superlie import EVEN, ODD, LieSuperalgebra
from .sympair import SymmetricSuperpair, validate_cartan


class RootError(ValueError):
    pass


class NotEvenType(RootError):
    pass


class IsotropicEvenRoot(RootError):
    pass


class ClosureBoundExceeded(RootError):
    pass


class DegenerateForm(RootError):
    pass


class RootNotFound(RootError):
    pass


def is_lex_positive(w) -> bool:
    for x in w:
        if x:
            return x > 0
    return False


def evaluate(weight, h) -> Fraction:
    return sum((frac(a) * frac(b) for a, b in zip(weight, h)), ZERO)


@dataclass(frozen=True)
class Root:
    weight: tuple
    parity: int
    multiplicity: int
    space: Subspace
    coroot: tuple | None = None  # coordinates of A_λ in the Cartan basis
    coroot_vector: tuple | None = None  # A_λ in the algebra basis
    norm: Fraction | None = None  # λ(A_λ)
    positive: bool = False
    in_sigma_bar: bool = False

    @property
    def anisotropic(self) -> bool:
        return bool(self.norm)

    def __call__(self, h) -> Fraction:
        return evaluate(self.weight, h)

    def to_json(self) -> dict:
        out = {
            "weight": [str(x) for x in self.weight],
            "parity": "odd" if self.parity else "even",
            "multiplicity": self.multiplicity,
        }
        if self.coroot is not None:
            out["coroot"] = [str(x) for x in self.coroot]
            out["norm"] = str(self.norm)
            out["anisotropic"] = self.anisotropic
        out["positive"] = self.positive
        out["in_sigma_bar"] = self.in_sigma_bar
        return out


@dataclass(frozen=True, eq=False)
class RootDatum:
    cartan_dim: int
    roots: tuple
    centralizer: Subspace  # z_g(a)
    gram: tuple | None = None  # b on the Cartan basis
    pair: SymmetricSuperpair | None = field(default=None, repr=False)

    def find(self, weight, parity: int) -> Root:
        w = tuple(frac(x) for x in weight)
        for r in self.roots:
            if r.weight == w and r.parity == parity:
                return r
        raise RootNotFound(f"no root with weight {w} and parity {parity}")

    def weights(self, parity: int | None = None) -> set:
        return {r.weight for r in self.roots if parity is None or r.parity == parity}

    @property
    def even(self) -> list:
        return [r for r in self.roots if r.parity == EVEN]

    @property
    def odd(self) -> list:
        return [r for r in self.roots if r.parity == ODD]

    @property
    def positive(self) -> list:
        return [r for r in self.roots if r.positive]

    @property
    def sigma_bar_1_plus(self) -> list:
        return [r for r in self.roots if r.in_sigma_bar]

    def to_json(self) -> dict:
        return {"cartan_dim": self.cartan_dim, "roots": [r.to_json() for r in self.roots]}


def _split_by_parity(alg: LieSuperalgebra, space: Subspace) -> dict:
    out = {EVEN: [], ODD: []}
    for v in space.basis:
        piv = next(i for i, x in enumerate(v) if x)
        out[alg.parities[piv]].append(v)
    return out


def _weight_decomposition(alg: LieSuperalgebra, basis) -> list:
    ops = [alg.ad_matrix(h) for h in basis]
    return simultaneous_weight_spaces(ops, alg.dim)


def restricted_roots(pair: SymmetricSuperpair) -> RootDatum:
    """Restricted roots of the pair relative to its Cartan subspace."""
    report = validate_cartan(pair)
    if not report.is_even_type:
        failed = [k for k, v in report.checks.items() if not v]
        raise NotEvenType(f"Cartan subspace fails: {', '.join(failed)}")
    alg = pair.alg
    basis = [tuple(frac(x) for x in b) for b in pair.cartan_basis]
    r = len(basis)
    gram = tuple(tuple(alg.form_value(a, b) for b in basis) for a in basis)
    zero = tuple([ZERO] * r)
    roots = []
    cent = Subspace.zero(alg.dim)
    for w, space in _weight_decomposition(alg, basis):
        if w == zero:
            cent = space
            continue
        for parity, vecs in _split_by_parity(alg, space).items():
            if not vecs:
                continue
            a = solve([list(row) for row in gram], list(w))
            if a is None:
                raise DegenerateForm("form is degenerate on the Cartan subspace")
            vec = tuple(sum((c * b[i] for c, b in zip(a, basis) if c), ZERO) for i in range(alg.dim))
            roots.append(
                Root(
                    weight=w,
                    parity=parity,
                    multiplicity=len(vecs),
                    space=Subspace.span(vecs, alg.dim),
                    coroot=tuple(a),
                    coroot_vector=vec,
                    norm=evaluate(w, a),
                )
            )
    rd = RootDatum(r, tuple(roots), cent, gram, pair)
    return choose_positive(rd)


def unrestricted_roots(alg: LieSuperalgebra, b_subalg) -> RootDatum:
    """Roots of an abelian, diagonalizable subalgebra given by a basis or Subspace."""
    basis = list(b_subalg.basis) if isinstance(b_subalg, Subspace) else [tuple(frac(x) for x in b) for b in b_subalg]
    zero = tuple([ZERO] * len(basis))
    roots = []
    cent = Subspace.zero(alg.dim)
    for w, space in _weight_decomposition(alg, basis):
        if w == zero:
            cent = space
            continue
        for parity, vecs in _split_by_parity(alg, space).items():
            if vecs:
                roots.append(Root(weight=w, parity=parity, multiplicity=len(vecs), space=Subspace.span(vecs, alg.dim)))
    return choose_positive(RootDatum(len(basis), tuple(roots), cent))


def choose_positive(rd: RootDatum) -> RootDatum:
    """Lexicographically positive roots; mark Σ̄₁⁺ (λ odd, λ and 2λ not even roots)."""
    even_weights = rd.weights(EVEN)
    out = []
    for r in rd.roots:
        pos = is_lex_positive(r.weight)
        bar = (
            pos
            and r.parity == ODD
            and r.weight not in even_weights
            and tuple(2 * x for x in r.weight) not in even_weights
        )
        out.append(replace(r, positive=pos, in_sigma_bar=bar))
    return RootDatum(rd.cartan_dim, tuple(out), rd.centralizer, rd.gram, rd.pair)


# --- Weyl group ----------------------------------------------------------------------


@dataclass(frozen=True)
class WeylGroup:
    elements: tuple  # matrices acting on Cartan coordinates (h ↦ M h)
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)


def reflection(root: Root) -> tuple:
    """Matrix of s_λ: h ↦ h - 2 λ(h)/λ(A_λ) · A_λ in Cartan coordinates."""
    if not root.norm:
        raise IsotropicEvenRoot(f"even root {root.weight} is isotropic")
    r = len(root.weight)
    return tuple(
        tuple((ONE if i == j else ZERO) - 2 * root.coroot[i] * root.weight[j] / root.norm for j in range(r))
        for i in range(r)
    )


def _mul(a, b):
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n)), ZERO) for j in range(n)) for i in range(n))


def weyl_group(rd: RootDatum, bound: int = 10**6) -> WeylGroup:
    """Group generated by the reflections in the even restricted roots."""
    r = rd.cartan_dim
    ident = tuple(tuple(ONE if i == j else ZERO for j in range(r)) for i in range(r))
    gens = []
    for root in rd.even:
        if root.positive:
            s = reflection(root)
            if s not in gens:
                gens.append(s)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _mul(s, g)
                if h not in seen:
                    seen.add(h)
                    if len(seen) > bound:
                        raise ClosureBoundExceeded(f"Weyl group exceeds {bound} elements")
                    nxt.append(h)
        frontier = nxt
    return WeylGroup(tuple(sorted(seen)), tuple(gens))


# --- regular elements ---------------------------------------------------------------


def is_regular_point(rd: RootDatum, h, odd_only: bool = False) -> bool:
    return all(evaluate(r.weight, h) for r in rd.roots if not odd_only or r.parity == ODD)


def super_regular(rd: RootDatum) -> tuple:
    """First h = (1, t, t², ...) with λ(h) ≠ 0 for every restricted root."""
    t = 1
    while True:
        h = tuple(Fraction(t) ** i for i in range(rd.cartan_dim))
        if is_regular_point(rd, h):
            return h
        t += 1


def super_regular_points(rd: RootDatum, count: int = 3) -> list:
    """``count`` distinct points h_t = (t, t², ..., t^r), t = 1, 2, ..., off all root hyperplanes."""
    pts = []
    t = 1
    while len(pts) < count:
        h = tuple(Fraction(t) ** (i + 1) for i in range(rd.cartan_dim))
        if is_regular_point(rd, h):
            pts.append(h)
        t += 1
    return pts


def pi1(rd: RootDatum, h) -> Fraction:
    """Product of λ(h) over the odd restricted roots."""
    out = ONE
    for r in rd.odd:
        out *= evaluate(r.weight, h) ** r.multiplicity
    return out


def cartan_vector(rd: RootDatum, h) -> tuple:
    """Algebra vector of the Cartan element with coordinates ``h``."""
    basis = rd.pair.cartan_basis
    n = rd.pair.alg.dim
    return tuple(sum((frac(c) * b[i] for c, b in zip(h, basis) if c), ZERO) for i in range(n))


# --- symplectic bases -----------------------------------------------------------------


@dataclass(frozen=True)
class SymplecticRootBasis:
    weight: tuple
    y: tuple
    yt: tuple
    z: tuple
    zt: tuple

    @property
    def rank(self) -> int:
        return len(self.z)


def symplectic_basis(pair: SymmetricSuperpair, rd: RootDatum, root: Root) -> SymplecticRootBasis:
    """Darboux basis of g^λ_1 for c(x, x') = b(x, θx'), split into k and p parts.

    With c(x_i, x̃_j) = 2δ_ij and y = (x + θx)/2, z = (x - θx)/2 one gets
    b(y_i, ỹ_j) = b(z̃_j, z_i) = δ_ij and the other pairings zero.
    """
    if root.parity != ODD or not root.positive:
        raise RootError("symplectic bases are defined for positive odd roots")
    alg = pair.alg
    c = lambda x, y: alg.form_value(x, pair.apply_theta(y))
    pool = [tuple(v) for v in root.space.basis]
    xs, xts = [], []
    while pool:
        e = pool.pop(0)
        partner = next((i for i, f in enumerate(pool) if c(e, f)), None)
        if partner is None:
            raise DegenerateForm(f"b^θ is degenerate on the root space of {root.weight}")
        f = pool.pop(partner)
        xt = tuple(2 * v / c(e, f) for v in f)
        cx = c(e, xt)  # = 2
        new = []
        for v in pool:
            a = c(v, xt) / cx
            b = c(e, v) / cx
            new.append(tuple(vi - a * ei - b * ti for vi, ei, ti in zip(v, e, xt)))
        pool = [v for v in new if any(v)]
        xs.append(e)
        xts.append(xt)
    half = lambda v, s: tuple((a + s * b) / 2 for a, b in zip(v, pair.apply_theta(v)))
    return SymplecticRootBasis(
        weight=root.weight,
        y=tuple(half(x, 1) for x in xs),
        yt=tuple(half(x, 1) for x in xts),
        z=tuple(half(x, -1) for x in xs),
        zt=tuple(half(x, -1) for x in xts),
    )


def check_symplectic_basis(pair: SymmetricSuperpair, rd: RootDatum, sb: SymplecticRootBasis) -> dict:
    """The pairing, membership and bracket conditions of a symplectic root basis."""
    alg = pair.alg
    b = alg.form_value
    n = sb.rank
    d = lambda i, j: ONE if i == j else ZERO
    res = {}
    res["b(y,yt)=delta"] = all(b(sb.y[i], sb.yt[j]) == d(i, j) for i in range(n) for j in range(n))
    res["b(zt,z)=delta"] = all(b(sb.zt[j], sb.z[i]) == d(i, j) for i in range(n) for j in range(n))
    res["b(y,y)=0"] = all(not b(sb.y[i], sb.y[j]) for i in range(n) for j in range(n))
    res["b(yt,yt)=0"] = all(not b(sb.yt[i], sb.yt[j]) for i in range(n) for j in range(n))
    res["b(z,z)=0"] = all(not b(sb.z[i], sb.z[j]) for i in range(n) for j in range(n))
    res["b(zt,zt)=0"] = all(not b(sb.zt[i], sb.zt[j]) for i in range(n) for j in range(n))
    root = rd.find(sb.weight, ODD)
    res["y,yt in k1"] = all(pair.k1.contains(v) for v in sb.y + sb.yt)
    res["z,zt in p1"] = all(pair.p1.contains(v) for v in sb.z + sb.zt)
    plus = lambda u, v: tuple(a + c for a, c in zip(u, v))
    res["y+z in g^lambda"] = all(root.space.contains(plus(sb.y[i], sb.z[i])) for i in range(n))
    res["yt+zt in g^lambda"] = all(root.space.contains(plus(sb.yt[i], sb.zt[i])) for i in range(n))
    brs = {"[h,y]=l(h)z": (sb.y, sb.z), "[h,yt]=l(h)zt": (sb.yt, sb.zt), "[h,z]=l(h)y": (sb.z, sb.y), "[h,zt]=l(h)yt": (sb.zt, sb.yt)}
    for name, (src, dst) in brs.items():
        ok = True
        for k, h in enumerate(pair.cartan_basis):
            lam = root.weight[k]
            for u, v in zip(src, dst):
                if alg.bracket(h, u) != tuple(lam * x for x in v):
                    ok = False
        res[name] = ok
    return res


# --- unrestricted checks ----------------------------------------------------------------


def root_pairing_nondegenerate(alg: LieSuperalgebra, rd: RootDatum) -> bool:
    """b pairs g_j^α with g_j^{-α} non-degenerately for every root α."""
    for r in rd.roots:
        neg = tuple(-x for x in r.weight)
        try:
            other = rd.find(neg, r.parity)
        except RootNotFound:
            return False
        if other.multiplicity != r.multiplicity:
            return False
        gram = [[alg.form_value(u, v) for v in other.space.basis] for u in r.space.basis]
        if rank(gram) != r.multiplicity:
            return False
    return True


def anisotropic_one_dimensional(alg: LieSuperalgebra, rd: RootDatum) -> bool:
    """Root spaces of roots α with b(α, α) ≠ 0 are one-dimensional.

    Requires the form to be non-degenerate on the abelian subalgebra, as for
    a Cartan subalgebra; the dual form is computed from the Gram matrix.
    """
    if rd.gram is None:
        raise RootError("root datum carries no Gram matrix")
    for r in rd.roots:
        a = solve([list(row) for row in rd.gram], list(r.weight))
        if evaluate(r.weight, a) and r.multiplicity != 1:
            return False
    return True


def with_gram(alg: LieSuperalgebra, rd: RootDatum, basis) -> RootDatum:
    gram = tuple(tuple(alg.form_value(a, b) for b in basis) for a in basis)
    return RootDatum(rd.cartan_dim, rd.roots, rd.centralizer, gram, rd.pair)


def fibre_check(pair: SymmetricSuperpair, t_basis) -> bool:
    """For every restricted λ and parity j, |Σ_j(λ) \\ {λ}| is even.

    Unrestricted roots are taken for b = a ⊕ t with t spanned by ``t_basis``
    (a θ-stable Cartan subalgebra); the restriction of α to a is its first
    ``rank`` coordinates, and α "equals λ" when it vanishes on t.
    """
    r = pair.rank
    basis = list(pair.cartan_basis) + [tuple(frac(x) for x in t) for t in t_basis]
    urd = unrestricted_roots(pair.alg, basis)
    fibres: dict = {}
    for root in urd.roots:
        lam = root.weight[:r]
        if not any(lam):
            continue
        if not any(root.weight[r:]):
            continue
        fibres.setdefault((lam, root.parity), 0)
        fibres[(lam, root.parity)] += root.multiplicity
    return all(v % 2 == 0 for v in fibres.values())
