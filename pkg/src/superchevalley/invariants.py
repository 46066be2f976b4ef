"""Invariant polynomials on p, their restrictions to a, and the radial-domain
description of the restriction image.

The brute-force side computes S^d(p*)^k as the common kernel of ad*(x) over a
basis of k.  The predicted side intersects the Weyl-group invariants with the
conditions coming from the radial operators of the odd roots in Σ̄₁⁺.  Only
the operators γ(z_I z̃_I) are used: every other monomial of S(p1^λ) has zero
radial part or a multiple of these.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .linalg import ONE, Subspace, nullspace, sparse_nullspace
from .roots import NotEvenType, RootDatum, WeylGroup, restricted_roots, weyl_group
from .radial import coeff_a
from .superpoly import (
    SuperPolynomial,
    ad_star,
    adapted_basis,
    coefficient_vector,
    derivative,
    divide_linear,
    even_exponents,
    from_vector,
    monomials,
    restrict_to_a,
    substitute,
)
from .sympair import SymmetricSuperpair, build_c_special, validate_cartan


@dataclass(frozen=True)
class InvariantBasis:
    degree: int
    basis: tuple  # SuperPolynomial over p*, echelonized on the monomial basis

    @property
    def dim(self) -> int:
        return len(self.basis)


def _k_basis(pair: SymmetricSuperpair) -> list:
    return list(pair.k0.basis) + list(pair.k1.basis)


def invariants_degree(pair: SymmetricSuperpair, d: int) -> InvariantBasis:
    """S^{d,tot}(p*)^k as the nullspace of the stacked maps ad*(x)."""
    ab = adapted_basis(pair)
    mons = monomials(ab.n_even, ab.n_odd, d)
    rows: dict = {}
    for xi, x in enumerate(_k_basis(pair)):
        for col, m in enumerate(mons):
            img = ad_star(ab, x, SuperPolynomial(ab.n_even, ab.n_odd, {m: ONE}, "p*"))
            for key, c in img.terms.items():
                rows.setdefault((xi, key), {})[col] = c
    ns = sparse_nullspace(rows.values(), len(mons))
    basis = tuple(from_vector(v, mons, ab.n_even, ab.n_odd, "p*") for v in ns.basis)
    return InvariantBasis(d, basis)


def cartan_monomials(rank: int, d: int) -> tuple:
    return even_exponents(rank, d)


def poly_coordinates(p: SuperPolynomial, rank: int, d: int) -> tuple:
    return coefficient_vector(p, [(e, ()) for e in cartan_monomials(rank, d)])


def coordinates_poly(v, rank: int, d: int) -> SuperPolynomial:
    return from_vector(v, [(e, ()) for e in cartan_monomials(rank, d)], rank, 0, "a*")


def restriction_image_degree(pair: SymmetricSuperpair, d: int, invariants: InvariantBasis | None = None) -> Subspace:
    """Restrictions to a of the degree-d invariants, in the monomial basis of S^d(a*)."""
    ab = adapted_basis(pair)
    inv = invariants if invariants is not None else invariants_degree(pair, d)
    r = ab.rank
    vecs = [poly_coordinates(restrict_to_a(ab, p), r, d) for p in inv.basis]
    return Subspace.span(vecs, len(cartan_monomials(r, d)))


def weyl_invariants(rd: RootDatum, W: WeylGroup, d: int) -> Subspace:
    """Fixed space of the generating reflections on S^d(a*)."""
    r = rd.cartan_dim
    mons = cartan_monomials(r, d)
    n = len(mons)
    rows = []
    for s in W.generators:
        for col, e in enumerate(mons):
            p = SuperPolynomial(r, 0, {(e, ()): ONE}, "a*")
            img = substitute(p, s)
            v = list(poly_coordinates(img, r, d))
            v[col] -= ONE
            rows.append(v)
    if not rows:
        return Subspace.full(n)
    # rows hold the columns of (ρ(s) - 1); transpose into equations
    eqs = [[rows[g * n + c][i] for c in range(n)] for g in range(len(W.generators)) for i in range(n)]
    return nullspace(eqs, n)


def _kernel_of(maps: list, n: int) -> Subspace:
    """Common kernel of linear maps given as lists of image dicts per basis vector."""
    rows: dict = {}
    for mi, images in enumerate(maps):
        for col, img in enumerate(images):
            for key, c in img.items():
                rows.setdefault((mi, key), {})[col] = c
    return sparse_nullspace(rows.values(), n)


def _divisibility_images(p: SuperPolynomial, weight, direction, j: int) -> dict:
    """Remainders of ∂^j p under j successive divisions by λ, keyed by stage."""
    q = p
    for _ in range(j):
        q = derivative(q, direction)
    out = {}
    for stage in range(j):
        q, rem = divide_linear(q, weight)
        for key, c in rem.terms.items():
            out[(stage, key)] = c
    return out


def _kernel_basis(weight) -> list:
    """Columns spanning ker λ ⊂ a, as a matrix with one row per Cartan coordinate."""
    r = len(weight)
    ns = nullspace([list(weight)], r).basis
    return [[v[i] for v in ns] for i in range(r)]


def _restricted_odd_derivative_images(p: SuperPolynomial, root, k: int, kmat) -> dict:
    q = p
    for _ in range(k):
        q = derivative(q, root.coroot)
    return {key: c for key, c in substitute(q, kmat).terms.items()}


def radial_conditions(rd: RootDatum, d: int) -> list:
    """One linear map per condition on S^d(a*), as lists of image dicts."""
    r = rd.cartan_dim
    mons = cartan_monomials(r, d)
    polys = [SuperPolynomial(r, 0, {(e, ()): ONE}, "a*") for e in mons]
    maps = []
    for root in rd.sigma_bar_1_plus:
        m = root.multiplicity
        if not root.norm:
            for j in range(1, m // 2 + 1):
                maps.append([_divisibility_images(p, root.weight, root.coroot, j) for p in polys])
        else:
            kmat = _kernel_basis(root.weight)
            for k in range(1, m, 2):
                maps.append([_restricted_odd_derivative_images(p, root, k, kmat) for p in polys])
    return maps


def theoremB_subspace(rd: RootDatum, W: WeylGroup, d: int) -> Subspace:
    """W-invariants of degree d lying in the domain of every radial operator of Σ̄₁⁺."""
    n = len(cartan_monomials(rd.cartan_dim, d))
    inv = weyl_invariants(rd, W, d)
    maps = radial_conditions(rd, d)
    if not maps:
        return inv
    return inv & _kernel_of(maps, n)


@dataclass(frozen=True)
class DegreeReport:
    d: int
    dim_invariants: int
    dim_restriction_image: int
    dim_theoremB_subspace: int
    subspaces_equal: bool
    injective: bool

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "dim_inv": self.dim_invariants,
            "dim_image": self.dim_restriction_image,
            "dim_theoremB": self.dim_theoremB_subspace,
            "equal": self.subspaces_equal,
            "injective": self.injective,
        }


@dataclass(frozen=True)
class VerificationReport:
    pair: str
    max_degree: int
    degrees: tuple
    note: str = field(
        default="radial conditions use only the operators γ(z_I z̃_I); other odd monomials reduce to them or to zero",
        compare=False,
    )

    @property
    def ok(self) -> bool:
        return all(r.subspaces_equal and r.injective for r in self.degrees)

    def to_json(self) -> dict:
        return {
            "pair": self.pair,
            "max_degree": self.max_degree,
            "degrees": [r.to_json() for r in self.degrees],
            "ok": self.ok,
        }


def pair_tag(pair: SymmetricSuperpair) -> str:
    params = ",".join(f"{k}={v}" for k, v in pair.params.items())
    return f"{pair.family}({params})"


def verify_degree(pair: SymmetricSuperpair, rd: RootDatum, W: WeylGroup, d: int) -> DegreeReport:
    inv = invariants_degree(pair, d)
    image = restriction_image_degree(pair, d, inv)
    predicted = theoremB_subspace(rd, W, d)
    return DegreeReport(
        d=d,
        dim_invariants=inv.dim,
        dim_restriction_image=image.dim,
        dim_theoremB_subspace=predicted.dim,
        subspaces_equal=image == predicted,
        injective=image.dim == inv.dim,
    )


def verify_chevalley(pair: SymmetricSuperpair, max_degree: int = 6) -> VerificationReport:
    """Compare the restriction image with the predicted subspace in each degree."""
    report = validate_cartan(pair)
    if not report.is_even_type:
        raise NotEvenType(f"pair {pair_tag(pair)} is not of even type")
    rd = restricted_roots(pair)
    W = weyl_group(rd)
    degrees = tuple(verify_degree(pair, rd, W, d) for d in range(max_degree + 1))
    return VerificationReport(pair_tag(pair), max_degree, degrees)


# --- explicit generators for C(q+1) ------------------------------------------------------


def c_special_p(q: int, N: int) -> SuperPolynomial:
    """p_N = λ^N + Σ_k (-1)^{k(k+3)/2} 2^{-k} a(N,k) λ^{N-2k} Σ_{|I|=k} ζ_I ζ̃_I."""
    pair = build_c_special(q)
    ab = adapted_basis(pair)
    blk = ab.blocks[0]
    lam = ab.root_form(blk.root.weight)
    zeta = [ab.generator(ab.n_even + blk.z(i)) for i in range(blk.rank)]
    zetat = [ab.generator(ab.n_even + blk.zt(i)) for i in range(blk.rank)]
    out = lam**N
    for k in range(1, min(N, q) + 1):
        if N - 2 * k < 0:
            continue
        s = ab.zero()
        for I in combinations(range(blk.rank), k):
            t = ab.one()
            for i in I:
                t = t * zeta[i]
            for i in I:
                t = t * zetat[i]
            s = s + t
        sign = -1 if (k * (k + 3) // 2) % 2 else 1
        c = sign * coeff_a(N, k) / 2**k
        out = out + (lam ** (N - 2 * k) * s).scale(c)
    return out


def c_special_generators(q: int) -> tuple:
    """(p_2, p_{2q+1}) for the pair C(q+1)."""
    if q < 1:
        raise ValueError("q must be at least 1")
    return c_special_p(q, 2), c_special_p(q, 2 * q + 1)


def generator_checks(q: int) -> dict:
    pair = build_c_special(q)
    ab = adapted_basis(pair)
    p2, pn = c_special_generators(q)
    lam = ab.root_form(ab.blocks[0].root.weight)
    annihilated = all(not ad_star(ab, x, p) for x in _k_basis(pair) for p in (p2, pn))
    relation = p2 ** (2 * q + 1) == pn**2
    restrictions = restrict_to_a(ab, p2) == restrict_to_a(ab, lam**2) and restrict_to_a(ab, pn) == restrict_to_a(
        ab, lam ** (2 * q + 1)
    )
    return {"invariant": annihilated, "relation": relation, "restrictions": restrictions}


def check_generator_properties(q: int) -> bool:
    return all(generator_checks(q).values())
