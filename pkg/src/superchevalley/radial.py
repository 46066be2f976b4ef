"""Radial parts: the twisted k-action u_z, the projection γ_z onto S(p0), and
the closed-form operators on odd root spaces with their coefficient tables.

γ_z(d) is found by reducing d modulo the span of u_z(x)w, x ∈ [z, p1],
w ∈ S^{≤n-1}(p).  Columns of the echelon basis are ordered so that every
monomial containing an odd generator comes before every odd-free one; the
reduced form of d is then its component in S(p0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from .linalg import ONE, ZERO, Echelon, Subspace, frac
from .roots import ODD, Root, RootDatum, evaluate, pi1
from .superpoly import (
    AdaptedBasis,
    SuperPolynomial,
    ad_action,
    derivative,
    divide_linear,
    even_exponents,
    linear_form,
    monomials,
)


class RadialError(ValueError):
    pass


class NotOddlyRegular(RadialError):
    pass


class IndexOutOfRange(RadialError):
    pass


class RootNotInSigmaBar(RadialError):
    pass


# --- the twisted action ------------------------------------------------------------


def _p0_vector(ab: AdaptedBasis, z) -> tuple:
    return ab.vector(tuple(frac(x) for x in z) + (ZERO,) * ab.n_odd)


def u_z(ab: AdaptedBasis, x, d: SuperPolynomial, z) -> SuperPolynomial:
    """u_z(x)d = [x, z]d + ad(x)(d); z is given in adapted p0 coordinates."""
    ab.in_k(x)
    xz = ab.pair.alg.bracket(x, _p0_vector(ab, z))
    return ab.element(xz) * d + ad_action(ab, x, d)


def _odd_image(ab: AdaptedBasis, z) -> list:
    """A basis of [z, p1] ⊂ k1; raises if ad z is not injective on p1."""
    zv = _p0_vector(ab, z)
    alg = ab.pair.alg
    out = [alg.bracket(zv, f) for f in ab.odd]
    if Subspace.span(out, alg.dim).dim != len(out):
        raise NotOddlyRegular("ad z is not injective on p1")
    return out


def is_oddly_regular(ab: AdaptedBasis, z) -> bool:
    try:
        _odd_image(ab, z)
    except NotOddlyRegular:
        return False
    return True


def _col(m) -> tuple:
    """Column key: odd-containing monomials sort before odd-free ones."""
    e, o = m
    return (0 if o else 1, sum(e) + len(o), e, o)


class RadialProjector:
    """The kernel of γ_z, built degree by degree."""

    def __init__(self, ab: AdaptedBasis, z):
        self.ab = ab
        self.z = tuple(frac(x) for x in z)
        self.xs = _odd_image(ab, self.z)
        self.ech = Echelon(0)
        self.degree = 0

    def _extend(self, n: int):
        ab = self.ab
        while self.degree < n:
            k = self.degree  # add u_z(x)w for deg w = k
            for m in monomials(ab.n_even, ab.n_odd, k):
                w = SuperPolynomial(ab.n_even, ab.n_odd, {m: ONE}, "p")
                for x in self.xs:
                    v = u_z(ab, x, w, self.z)
                    self.ech.add({_col(key): c for key, c in v.terms.items()})
            self.degree += 1
            expected = sum(
                1 for d in range(1, self.degree + 1) for m in monomials(ab.n_even, ab.n_odd, d) if m[1]
            )
            piv = self.ech.pivots()
            if len(piv) != expected or any(p[0] != 0 for p in piv):
                raise NotOddlyRegular("kernel of γ_z does not complement S(p0)")

    def kernel_rows(self, n: int) -> list:
        self._extend(n)
        return [dict(r) for r in self.ech.rows.values()]

    def __call__(self, d: SuperPolynomial) -> SuperPolynomial:
        if d.space != "p":
            raise RadialError("γ_z acts on S(p)")
        self._extend(max(d.max_degree(), 0))
        row = self.ech.reduce({_col(k): c for k, c in d.terms.items()})
        terms = {}
        for (flag, _, e, o), c in row.items():
            if flag == 0:
                raise RadialError("reduction left an odd monomial")
            terms[(e, o)] = c
        return SuperPolynomial(d.n_even, d.n_odd, terms, "p")


def projector(ab: AdaptedBasis, z) -> RadialProjector:
    key = ("proj", tuple(frac(x) for x in z))
    if key not in ab._cache:
        ab._cache[key] = RadialProjector(ab, z)
    return ab._cache[key]


def gamma_z(ab: AdaptedBasis, d: SuperPolynomial, z) -> SuperPolynomial:
    """γ_z(d) ∈ S(p0) for z ∈ p0 in adapted coordinates."""
    return projector(ab, z)(d)


def gamma_h(ab: AdaptedBasis, d: SuperPolynomial, h) -> SuperPolynomial:
    """γ_h(d) for a Cartan element with coordinates h."""
    return gamma_z(ab, d, ab.cartan_point(h))


def _sign(perm) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def supersymmetrize_and_Gamma(ab: AdaptedBasis, q: list, p: SuperPolynomial, z) -> SuperPolynomial:
    """Γ_z(q ⊗ p) = u_z(β([z, q]))p for a word q of odd vectors and p ∈ S(p0)."""
    zv = _p0_vector(ab, z)
    _odd_image(ab, z)
    alg = ab.pair.alg
    ws = [alg.bracket(zv, v) for v in q]
    k = len(ws)
    out = ab.zero("p")
    for perm in permutations(range(k)):
        cur = p
        for i in reversed(perm):
            cur = u_z(ab, ws[i], cur, z)
        out = out + cur.scale(_sign(perm))
    return out.scale(Fraction(1, factorial(k)))


def gamma_kernel_via_Gamma(ab: AdaptedBasis, z, n: int) -> Echelon:
    """Echelon basis of Γ_z(Λ⁺(p1) ⊗ S(p0)) truncated at total degree n."""
    ech = Echelon(0)
    for k in range(1, min(n, ab.n_odd) + 1):
        for idx in combinations(range(ab.n_odd), k):
            q = [ab.odd[i] for i in idx]
            for dp in range(n - k + 1):
                for e in even_exponents(ab.n_even, dp):
                    p = SuperPolynomial(ab.n_even, ab.n_odd, {(e, ()): ONE}, "p")
                    v = supersymmetrize_and_Gamma(ab, q, p, z)
                    ech.add({_col(key): c for key, c in v.terms.items()})
    return ech


# --- coefficients ----------------------------------------------------------------------


def falling(m: int, j: int) -> int:
    """(m)_j = m(m-1)...(m-j+1)."""
    out = 1
    for i in range(j):
        out *= m - i
    return out


def coeff_b(s: int, l: int) -> Fraction:
    if not 0 <= s < l:
        raise IndexOutOfRange(f"b({s},{l}) needs 0 <= s < l")
    return Fraction(factorial(l - 1 + s), 2**s * factorial(l - 1 - s) * factorial(s))


@lru_cache(maxsize=None)
def coeff_b_recursive(s: int, l: int) -> Fraction:
    """b(s, l) from b(0,1) = 1 and the recursion in l."""
    if not 0 <= s < l:
        raise IndexOutOfRange(f"b({s},{l}) needs 0 <= s < l")
    if l == 1:
        return ONE
    lp = l - 1
    total = sum((factorial(lp - j) * coeff_b_recursive(j, lp) for j in range(min(s, lp - 1) + 1)), ZERO)
    return total / factorial(lp - s)


@lru_cache(maxsize=None)
def coeff_a(j: int, k: int) -> Fraction:
    if j < 1 or k < 1:
        raise IndexOutOfRange(f"a({j},{k}) needs j, k >= 1")
    return sum(((-1) ** i * falling(j, k - i) * coeff_b(i, k) for i in range(max(k - j, 0), k)), ZERO)


def bessel_theta(n: int) -> list:
    """Coefficients [b(0,n+1), ..., b(n,n+1)] of θ_n(z), highest power first."""
    if n < 0:
        raise IndexOutOfRange("Bessel polynomials are indexed by n >= 0")
    return [coeff_b(j, n + 1) for j in range(n + 1)]


@dataclass(frozen=True)
class CoeffTable:
    """b(s, l) and a(j, k) for l, k up to ``size``."""

    size: int

    def b(self) -> dict:
        return {(s, l): coeff_b(s, l) for l in range(1, self.size + 1) for s in range(l)}

    def a(self) -> dict:
        return {(j, k): coeff_a(j, k) for k in range(1, self.size + 1) for j in range(1, 2 * k + 1)}

    def to_json(self) -> dict:
        return {
            "b": [{"s": s, "l": l, "value": str(v)} for (s, l), v in self.b().items()],
            "a": [{"j": j, "k": k, "value": str(v)} for (j, k), v in self.a().items()],
        }


# --- radial operators -------------------------------------------------------------------


@dataclass(frozen=True)
class RadialOperator:
    """Σ coeff · λ^lambda_pow ∂(A_λ)^d_pow, acting on polynomials on a."""

    root: Root
    terms: tuple  # ((lambda_pow, d_pow, coeff), ...)

    @classmethod
    def make(cls, root: Root, terms) -> "RadialOperator":
        acc: dict = {}
        for lp, dp, c in terms:
            acc[(lp, dp)] = acc.get((lp, dp), ZERO) + frac(c)
        return cls(root, tuple((lp, dp, c) for (lp, dp), c in sorted(acc.items()) if c))

    def at(self, h) -> SuperPolynomial:
        """The element Σ coeff λ(h)^lambda_pow A_λ^d_pow of S(a), in Cartan coordinates."""
        t = evaluate(self.root.weight, h)
        if not t:
            raise NotOddlyRegular("λ(h) = 0")
        a = linear_form(self.root.coroot)
        out = SuperPolynomial.zero(len(self.root.weight), 0, "a*")
        for lp, dp, c in self.terms:
            out = out + (a**dp).scale(c * t**lp)
        return SuperPolynomial(out.n_even, 0, out.terms, "a")

    def to_json(self) -> dict:
        return {
            "root": [str(x) for x in self.root.weight],
            "terms": [{"lambda_pow": lp, "d_pow": dp, "coeff": str(c)} for lp, dp, c in self.terms],
        }


def _check_sigma_bar(rd: RootDatum, root) -> Root:
    if not isinstance(root, Root):
        root = rd.find(root, ODD)
    if not root.in_sigma_bar:
        raise RootNotInSigmaBar(f"{root.weight} is not in the positive odd roots with 2λ not a root")
    return root


def radial_closed_form(rd: RootDatum, root, k: int) -> RadialOperator:
    """D_k = γ_·(z_I z̃_I) for |I| = k."""
    root = _check_sigma_bar(rd, root)
    if not 1 <= k <= root.multiplicity // 2:
        raise IndexOutOfRange(f"k must lie in 1..{root.multiplicity // 2}")
    c = root.norm
    sign = -1 if (k * (k + 1) // 2) % 2 else 1
    terms = [(-(k + j), k - j, sign * coeff_b(j, k) * (-c) ** j) for j in range(k)]
    return RadialOperator.make(root, terms)


def radial_rank1_formula(root: Root, I, J, m: int, h) -> SuperPolynomial:
    """γ_h(z_I z̃_J A_λ^m) as a polynomial on a*, by the rank-one recursion."""
    t = evaluate(root.weight, h)
    if not t:
        raise NotOddlyRegular("λ(h) = 0")
    c = root.norm
    coeffs = _rank1(tuple(I), tuple(J), m, t, c)
    a = linear_form(root.coroot)
    out = SuperPolynomial.zero(len(root.weight), 0, "a*")
    for power, v in coeffs.items():
        out = out + (a**power).scale(v)
    return SuperPolynomial(out.n_even, 0, out.terms, "a")


def _rank1(I: tuple, J: tuple, m: int, t: Fraction, c: Fraction) -> dict:
    if I != J:
        return {}
    if not I:
        return {m: ONE}
    k = len(I)
    out: dict = {}
    for j in range(m + 1):
        f = (-1) ** (j + k) * c**j / t ** (j + 1) * falling(m, j)
        if not f:
            continue
        for power, v in _rank1(I[1:], I[1:], m + 1 - j, t, c).items():
            out[power] = out.get(power, ZERO) + f * v
    return {p: v for p, v in out.items() if v}


def odd_monomial(ab: AdaptedBasis, weight, I, J, m: int = 0) -> SuperPolynomial:
    """z_I z̃_J A_λ^m in S(p) for the block of the given odd root."""
    blk = ab.block_of(weight)
    out = ab.one("p")
    for i in I:
        out = out * ab.basis_element(ab.n_even + blk.z(i))
    for j in J:
        out = out * ab.basis_element(ab.n_even + blk.zt(j))
    a = ab.element(blk.root.coroot_vector)
    return out * a**m


def as_cartan_poly(ab: AdaptedBasis, d: SuperPolynomial) -> SuperPolynomial:
    """Read an element of S(a) ⊂ S(p) in Cartan coordinates."""
    r = ab.rank
    terms = {}
    for (e, o), c in d.terms.items():
        if o or any(e[r:]):
            raise RadialError("element is not in S(a)")
        terms[(e[:r], ())] = c
    return SuperPolynomial(r, 0, terms, "a")


# --- operators on C[a] -------------------------------------------------------------------


@dataclass(frozen=True)
class LaurentRemainder:
    """numerator / λ^power with the numerator not divisible by λ."""

    numerator: SuperPolynomial
    power: int
    root: tuple

    def to_json(self) -> dict:
        return {"numerator": self.numerator.to_json(), "lambda_pow": -self.power, "root": [str(x) for x in self.root]}


def apply_radial(D: RadialOperator, p: SuperPolynomial) -> tuple:
    """Dp in C[ker λ][λ, λ^-1]; returns (result, in_domain)."""
    w = D.root.weight
    lam = linear_form(w)
    lam = SuperPolynomial(lam.n_even, 0, lam.terms, p.space)
    shift = max([-lp for lp, _, _ in D.terms] + [0])
    num = SuperPolynomial.zero(p.n_even, 0, p.space)
    for lp, dp, c in D.terms:
        q = p
        for _ in range(dp):
            q = derivative(q, D.root.coroot)
        num = num + (lam ** (lp + shift) * q).scale(c)
    power = shift
    while power and num:
        quo, rem = divide_linear(num, w)
        if rem:
            return LaurentRemainder(num, power, w), False
        num = quo
        power -= 1
    return num, True


def in_domain(D: RadialOperator, p: SuperPolynomial) -> bool:
    return apply_radial(D, p)[1]


__all__ = [
    "RadialError",
    "NotOddlyRegular",
    "IndexOutOfRange",
    "RootNotInSigmaBar",
    "u_z",
    "is_oddly_regular",
    "RadialProjector",
    "projector",
    "gamma_z",
    "gamma_h",
    "supersymmetrize_and_Gamma",
    "gamma_kernel_via_Gamma",
    "falling",
    "coeff_b",
    "coeff_b_recursive",
    "coeff_a",
    "bessel_theta",
    "CoeffTable",
    "RadialOperator",
    "radial_closed_form",
    "radial_rank1_formula",
    "odd_monomial",
    "as_cartan_poly",
    "LaurentRemainder",
    "apply_radial",
    "in_domain",
    "pi1",
]
