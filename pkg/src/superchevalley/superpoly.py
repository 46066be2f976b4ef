"""The supersymmetric algebra S(V) = S(V_0) ⊗ Λ(V_1) and its pairing with S(V*).

Monomials are pairs ``(even_exponents, odd_indices)`` with strictly
increasing odd indices.  The product carries the Koszul sign of sorting the
concatenated odd indices.  The same class stores elements of S(p), S(p*)
and polynomials on the Cartan subspace; ``space`` tells them apart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .linalg import ONE, ZERO, Coordinates, LinalgError, Subspace, frac, inverse
from .roots import ODD, RootDatum, restricted_roots, symplectic_basis
from .sympair import SymmetricSuperpair


class SuperPolyError(ValueError):
    pass


class SpaceMismatch(SuperPolyError):
    pass


class NotInK(SuperPolyError):
    pass


def _merge_sign(a: tuple, b: tuple) -> int:
    """Sign of sorting a + b, or 0 if they share an index."""
    inv = 0
    sb = set(b)
    for x in a:
        if x in sb:
            return 0
    for x in a:
        inv += sum(1 for y in b if y < x)
    return -1 if inv % 2 else 1


@dataclass(frozen=True, eq=False)
class SuperPolynomial:
    n_even: int
    n_odd: int
    terms: dict = field(default_factory=dict)  # (even_exps, odd_tuple) -> Fraction
    space: str = "p*"

    def __post_init__(self):
        if any(not v for v in self.terms.values()):
            object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v})

    # -- constructors --

    @classmethod
    def zero(cls, n_even: int, n_odd: int, space: str = "p*") -> "SuperPolynomial":
        return cls(n_even, n_odd, {}, space)

    @classmethod
    def one(cls, n_even: int, n_odd: int, space: str = "p*") -> "SuperPolynomial":
        return cls.constant(1, n_even, n_odd, space)

    @classmethod
    def constant(cls, c, n_even: int, n_odd: int, space: str = "p*") -> "SuperPolynomial":
        c = frac(c)
        return cls(n_even, n_odd, {((0,) * n_even, ()): c} if c else {}, space)

    @classmethod
    def even_var(cls, i: int, n_even: int, n_odd: int, space: str = "p*") -> "SuperPolynomial":
        e = [0] * n_even
        e[i] = 1
        return cls(n_even, n_odd, {(tuple(e), ()): ONE}, space)

    @classmethod
    def odd_var(cls, i: int, n_even: int, n_odd: int, space: str = "p*") -> "SuperPolynomial":
        return cls(n_even, n_odd, {((0,) * n_even, (i,)): ONE}, space)

    @classmethod
    def linear(cls, coeffs, n_even: int, n_odd: int, space: str = "p*") -> "SuperPolynomial":
        """Degree-one element with coefficients over (even generators, odd generators)."""
        terms = {}
        for i, c in enumerate(coeffs):
            c = frac(c)
            if not c:
                continue
            if i < n_even:
                e = [0] * n_even
                e[i] = 1
                terms[(tuple(e), ())] = c
            else:
                terms[((0,) * n_even, (i - n_even,))] = c
        return cls(n_even, n_odd, terms, space)

    @classmethod
    def monomial(cls, exps, odd, n_even: int, n_odd: int, coeff=1, space: str = "p*") -> "SuperPolynomial":
        """Product x^exps · f_{odd[0]} f_{odd[1]} ... in the given (possibly unsorted) order."""
        odd = tuple(odd)
        srt = tuple(sorted(odd))
        if len(set(odd)) != len(odd):
            return cls.zero(n_even, n_odd, space)
        inv = sum(1 for i in range(len(odd)) for j in range(i + 1, len(odd)) if odd[i] > odd[j])
        c = frac(coeff) * (-1 if inv % 2 else 1)
        return cls(n_even, n_odd, {(tuple(exps), srt): c} if c else {}, space)

    def _like(self, terms: dict) -> "SuperPolynomial":
        return SuperPolynomial(self.n_even, self.n_odd, terms, self.space)

    def _check(self, other: "SuperPolynomial"):
        if (self.n_even, self.n_odd, self.space) != (other.n_even, other.n_odd, other.space):
            raise SpaceMismatch(f"cannot combine elements of {self.space} and {other.space}")

    # -- arithmetic --

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        self._check(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, ZERO) + v
        return self._like(t)

    def __neg__(self) -> "SuperPolynomial":
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def scale(self, c) -> "SuperPolynomial":
        c = frac(c)
        return self._like({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SuperPolynomial):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = scale

    def __pow__(self, n: int) -> "SuperPolynomial":
        out = SuperPolynomial.one(self.n_even, self.n_odd, self.space)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return (self.n_even, self.n_odd, self.space, self.terms) == (other.n_even, other.n_odd, other.space, other.terms)

    def __hash__(self):
        return hash((self.n_even, self.n_odd, self.space, frozenset(self.terms.items())))

    # -- inspection --

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set:
        return {sum(e) + len(o) for e, o in self.terms}

    def max_degree(self) -> int:
        return max(self.degrees(), default=-1)

    def parity_part(self, parity: int) -> "SuperPolynomial":
        return self._like({k: v for k, v in self.terms.items() if len(k[1]) % 2 == parity})

    def homogeneous_parts(self) -> dict:
        return {p: self.parity_part(p) for p in (0, 1) if self.parity_part(p)}

    def is_purely_even(self) -> bool:
        """Every term contains an even number of odd generators."""
        return all(len(o) % 2 == 0 for _, o in self.terms)

    def has_odd(self) -> bool:
        return any(o for _, o in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(((0,) * self.n_even, ()), ZERO)

    def evaluate_even(self, z) -> Fraction:
        """Value of the odd-free part at the even point ``z``."""
        total = ZERO
        for (e, o), c in self.terms.items():
            if o:
                continue
            v = c
            for x, k in zip(z, e):
                if k:
                    v *= frac(x) ** k
            total += v
        return total

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0][0]) + len(kv[0][1]), kv[0][0], kv[0][1]))

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "terms": [{"even": list(e), "odd": list(o), "coeff": str(c)} for (e, o), c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict, n_even: int, n_odd: int) -> "SuperPolynomial":
        terms = {(tuple(t["even"]), tuple(t["odd"])): Fraction(t["coeff"]) for t in data["terms"]}
        return cls(n_even, n_odd, {k: v for k, v in terms.items() if v}, data.get("space", "p*"))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (e, o), c in self.sorted_terms():
            factors = [f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k]
            factors += [f"f{i}" for i in o]
            parts.append(f"{c}*{'*'.join(factors)}" if factors else str(c))
        return " + ".join(parts)


def multiply(a: SuperPolynomial, b: SuperPolynomial) -> SuperPolynomial:
    a._check(b)
    out: dict = {}
    for (ea, oa), ca in a.terms.items():
        for (eb, ob), cb in b.terms.items():
            s = _merge_sign(oa, ob)
            if not s:
                continue
            key = (tuple(x + y for x, y in zip(ea, eb)), tuple(sorted(oa + ob)))
            out[key] = out.get(key, ZERO) + s * ca * cb
    return a._like(out)


# --- monomial bases ---------------------------------------------------------------


@lru_cache(maxsize=None)
def even_exponents(n: int, d: int) -> tuple:
    """All exponent vectors of length n and total degree d, lexicographically descending."""
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    for k in range(d, -1, -1):
        for rest in even_exponents(n - 1, d - k):
            out.append((k,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomials(n_even: int, n_odd: int, d: int) -> tuple:
    """Basis monomials of S^{d,tot}: even exponents first, then odd index sets."""
    out = []
    for k in range(0, min(d, n_odd) + 1):
        for odd in combinations(range(n_odd), k):
            for e in even_exponents(n_even, d - k):
                out.append((e, odd))
    return tuple(sorted(out))


def monomials_upto(n_even: int, n_odd: int, d: int) -> tuple:
    return tuple(m for k in range(d + 1) for m in monomials(n_even, n_odd, k))


# --- derivations -----------------------------------------------------------------


def apply_derivation(p: SuperPolynomial, images: list, parity: int) -> SuperPolynomial:
    """Extend generator images to a (left) superderivation of the given parity.

    ``images[i]`` is the image of even generator i for i < n_even and of odd
    generator i - n_even otherwise.
    """
    ne, no = p.n_even, p.n_odd
    out = SuperPolynomial.zero(ne, no, p.space)
    acc: dict = {}

    def add(poly: SuperPolynomial, coeff):
        for k, v in poly.terms.items():
            acc[k] = acc.get(k, ZERO) + coeff * v

    for (e, o), c in p.terms.items():
        for i, k in enumerate(e):
            if k and images[i]:
                e2 = list(e)
                e2[i] -= 1
                rest = SuperPolynomial(ne, no, {(tuple(e2), o): ONE}, p.space)
                add(multiply(images[i], rest), c * k)
        for t, idx in enumerate(o):
            img = images[ne + idx]
            if not img:
                continue
            sign = -1 if parity and t % 2 else 1
            left = SuperPolynomial(ne, no, {(e, o[:t]): ONE}, p.space)
            right = SuperPolynomial(ne, no, {((0,) * ne, o[t + 1:]): ONE}, p.space)
            add(multiply(multiply(left, img), right), sign * c)
    return out._like(acc)


# --- restriction to the Cartan subspace ---------------------------------------------


def poly_on_a(terms: dict, rank: int) -> SuperPolynomial:
    return SuperPolynomial(rank, 0, {k: v for k, v in terms.items() if v}, "a*")


def linear_form(weight) -> SuperPolynomial:
    """The linear form with the given coefficients, as a polynomial on the Cartan subspace."""
    r = len(weight)
    return SuperPolynomial.linear(weight, r, 0, "a*")


def derivative(p: SuperPolynomial, direction) -> SuperPolynomial:
    """Directional derivative of an odd-free polynomial along ``direction``."""
    acc: dict = {}
    for (e, o), c in p.terms.items():
        if o:
            raise SuperPolyError("directional derivatives need odd-free polynomials")
        for i, k in enumerate(e):
            a = frac(direction[i])
            if k and a:
                e2 = list(e)
                e2[i] -= 1
                key = (tuple(e2), ())
                acc[key] = acc.get(key, ZERO) + c * k * a
    return p._like(acc)


def substitute(p: SuperPolynomial, m, space: str | None = None) -> SuperPolynomial:
    """Pull back an odd-free polynomial along x = M y (M has len(x) rows)."""
    ncols = len(m[0]) if m else 0
    sp = space or p.space
    images = [SuperPolynomial.linear(row, ncols, 0, sp) for row in m]
    out = SuperPolynomial.zero(ncols, 0, sp)
    cache: dict = {}
    for (e, o), c in p.terms.items():
        if o:
            raise SuperPolyError("substitution needs odd-free polynomials")
        term = SuperPolynomial.constant(c, ncols, 0, sp)
        for i, k in enumerate(e):
            if k:
                key = (i, k)
                if key not in cache:
                    cache[key] = images[i] ** k
                term = term * cache[key]
        out = out + term
    return out


def divide_linear(p: SuperPolynomial, weight) -> tuple:
    """Divide an odd-free polynomial by the linear form ``weight``.

    Returns ``(quotient, remainder)`` where the remainder contains no power of
    the first variable on which the form is non-zero.
    """
    lead = next(i for i, w in enumerate(weight) if w)
    lw = frac(weight[lead])
    rem = dict(p.terms)
    quo: dict = {}
    while True:
        cands = [k for k, v in rem.items() if v and k[0][lead] > 0]
        if not cands:
            break
        e, o = max(cands, key=lambda k: (k[0][lead], k[0]))
        c = rem[(e, o)]
        e2 = list(e)
        e2[lead] -= 1
        qk = (tuple(e2), o)
        qc = c / lw
        quo[qk] = quo.get(qk, ZERO) + qc
        for i, w in enumerate(weight):
            w = frac(w)
            if w:
                e3 = list(e2)
                e3[i] += 1
                key = (tuple(e3), o)
                rem[key] = rem.get(key, ZERO) - qc * w
                if not rem[key]:
                    del rem[key]
    return p._like(quo), p._like(rem)


def coefficient_vector(p: SuperPolynomial, basis) -> tuple:
    """Coefficients of ``p`` on a list of monomial keys; fails if p leaves their span."""
    idx = {m: i for i, m in enumerate(basis)}
    v = [ZERO] * len(basis)
    for k, c in p.terms.items():
        if k not in idx:
            raise SuperPolyError(f"monomial {k} is outside the given basis")
        v[idx[k]] = c
    return tuple(v)


def from_vector(vec, basis, n_even: int, n_odd: int, space: str) -> SuperPolynomial:
    return SuperPolynomial(n_even, n_odd, {m: frac(c) for m, c in zip(basis, vec) if c}, space)


# --- the adapted basis of p ------------------------------------------------------------


@dataclass(frozen=True)
class OddBlock:
    """Position of one positive odd root's symplectic basis inside the odd generators."""

    root: object
    basis: object  # SymplecticRootBasis
    offset: int

    @property
    def rank(self) -> int:
        return self.basis.rank

    def z(self, i: int) -> int:
        return self.offset + i

    def zt(self, i: int) -> int:
        return self.offset + self.rank + i


@dataclass(eq=False)
class AdaptedBasis:
    """A basis of p adapted to the Cartan subspace, with the dual generators of p*.

    Even basis: the Cartan basis, then the p0-projections of the positive even
    root spaces.  Odd basis: for each positive odd root, z_1..z_n, z̃_1..z̃_n of
    its symplectic basis.  Even generators of p* are the dual coordinate
    functionals; odd generator number i is b(·, f_i) for the odd basis vector f_i.
    """

    pair: SymmetricSuperpair
    rd: RootDatum
    even: list
    odd: list
    blocks: list
    _coords: Coordinates = field(repr=False)
    gram_odd: list = field(repr=False)
    _gram_odd_inv: list = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def n_even(self) -> int:
        return len(self.even)

    @property
    def n_odd(self) -> int:
        return len(self.odd)

    @property
    def rank(self) -> int:
        return self.rd.cartan_dim

    @property
    def vectors(self) -> list:
        return self.even + self.odd

    def block_of(self, weight) -> OddBlock:
        w = tuple(frac(x) for x in weight)
        for b in self.blocks:
            if b.root.weight == w:
                return b
        raise SuperPolyError(f"no odd block for weight {w}")

    def coords(self, v) -> tuple:
        """Coordinates of an element of p in the adapted basis."""
        try:
            return self._coords.of(v)
        except LinalgError:
            raise SuperPolyError("vector is not in p") from None

    def vector(self, coords) -> tuple:
        return self._coords.combine(coords)

    def p0_coords(self, v) -> tuple:
        c = self.coords(v)
        if any(c[self.n_even:]):
            raise SuperPolyError("vector is not in p0")
        return c[: self.n_even]

    def cartan_point(self, h) -> tuple:
        """Adapted p0 coordinates of the Cartan element with coordinates h."""
        return tuple(frac(x) for x in h) + (ZERO,) * (self.n_even - self.rank)

    # generators

    def zero(self, space: str = "p*") -> SuperPolynomial:
        return SuperPolynomial.zero(self.n_even, self.n_odd, space)

    def one(self, space: str = "p*") -> SuperPolynomial:
        return SuperPolynomial.one(self.n_even, self.n_odd, space)

    def element(self, v) -> SuperPolynomial:
        """Degree-one element of S(p) given by a vector of p."""
        return SuperPolynomial.linear(self.coords(v), self.n_even, self.n_odd, "p")

    def basis_element(self, i: int) -> SuperPolynomial:
        if i < self.n_even:
            return SuperPolynomial.even_var(i, self.n_even, self.n_odd, "p")
        return SuperPolynomial.odd_var(i - self.n_even, self.n_even, self.n_odd, "p")

    def generator(self, i: int) -> SuperPolynomial:
        if i < self.n_even:
            return SuperPolynomial.even_var(i, self.n_even, self.n_odd, "p*")
        return SuperPolynomial.odd_var(i - self.n_even, self.n_even, self.n_odd, "p*")

    def root_form(self, weight) -> SuperPolynomial:
        """λ as an element of a* ⊂ p* (a combination of the first generators)."""
        c = list(weight) + [ZERO] * (self.n_even - self.rank + self.n_odd)
        return SuperPolynomial.linear(c, self.n_even, self.n_odd, "p*")

    def functional(self, values) -> SuperPolynomial:
        """The element of p* taking the given values on the adapted basis."""
        ne = self.n_even
        ev = [frac(x) for x in values[:ne]]
        ov = [frac(x) for x in values[ne:]]
        # <f_a, sum_b c_b eta_b> = sum_b G[a][b] c_b
        oc = [sum((self._gram_odd_inv[a][b] * ov[b] for b in range(self.n_odd) if ov[b]), ZERO) for a in range(self.n_odd)]
        return SuperPolynomial.linear(ev + oc, ne, self.n_odd, "p*")

    def pairing_value(self, a: int, b: int) -> Fraction:
        """<basis_a, generator_b>."""
        ne = self.n_even
        if a < ne or b < ne:
            return ONE if a == b else ZERO
        return self.gram_odd[a - ne][b - ne]

    def in_k(self, x) -> int:
        """Parity of a homogeneous element of k; raises NotInK otherwise."""
        if not self.pair.k.contains(x):
            raise NotInK("element is not in k")
        par = self.pair.alg.element_parity(x)
        if par is None:
            if not any(x):
                return 0
            raise NotInK("element of k must be homogeneous")
        return par


def _complement_p0(pair: SymmetricSuperpair, rd: RootDatum) -> list:
    out = []
    for r in rd.even:
        if r.positive:
            for v in r.space.basis:
                w = pair.apply_theta(v)
                out.append(tuple((a - b) / 2 for a, b in zip(v, w)))
    return out


_ADAPTED: dict = {}


def adapted_basis(pair: SymmetricSuperpair, rd: RootDatum | None = None) -> AdaptedBasis:
    key = id(pair)
    if key in _ADAPTED and _ADAPTED[key][0] is pair:
        return _ADAPTED[key][1]
    if rd is None:
        rd = restricted_roots(pair)
    alg = pair.alg
    even = [tuple(frac(x) for x in b) for b in pair.cartan_basis] + _complement_p0(pair, rd)
    if Subspace.span(even, alg.dim) != pair.p0 or len(even) != pair.p0.dim:
        raise SuperPolyError("Cartan subspace and even root spaces do not span p0")
    odd = []
    blocks = []
    for r in rd.odd:
        if not r.positive:
            continue
        sb = symplectic_basis(pair, rd, r)
        blocks.append(OddBlock(r, sb, len(odd)))
        odd.extend(sb.z)
        odd.extend(sb.zt)
    if Subspace.span(odd, alg.dim) != pair.p1 or len(odd) != pair.p1.dim:
        raise SuperPolyError("odd root spaces do not span p1")
    coords = Coordinates(even + odd, alg.dim)
    gram = [[alg.form_value(a, b) for b in odd] for a in odd]
    ginv = inverse(gram) if odd else []
    ab = AdaptedBasis(pair, rd, even, odd, blocks, coords, gram, ginv)
    _ADAPTED[key] = (pair, ab)
    return ab


# --- actions ------------------------------------------------------------------------------


def _ad_images(ab: AdaptedBasis, x) -> list:
    key = ("ad", tuple(x))
    if key not in ab._cache:
        alg = ab.pair.alg
        ab._cache[key] = [
            SuperPolynomial.linear(ab.coords(alg.bracket(x, v)), ab.n_even, ab.n_odd, "p") for v in ab.vectors
        ]
    return ab._cache[key]


def ad_action(ab: AdaptedBasis, x, d: SuperPolynomial) -> SuperPolynomial:
    """ad(x) extended to S(p) as a superderivation, for homogeneous x in k."""
    par = ab.in_k(x)
    return apply_derivation(d, _ad_images(ab, x), par)


def _ad_star_images(ab: AdaptedBasis, x) -> list:
    key = ("ad*", tuple(x))
    if key not in ab._cache:
        alg = ab.pair.alg
        n = ab.n_even + ab.n_odd
        # C[a] = coordinates of [f_a, x]
        c = [ab.coords(alg.bracket(v, x)) for v in ab.vectors]
        images = []
        for b in range(n):
            vals = [sum((c[a][e] * ab.pairing_value(e, b) for e in range(n) if c[a][e]), ZERO) for a in range(n)]
            images.append(ab.functional(vals))
        ab._cache[key] = images
    return ab._cache[key]


def ad_star(ab: AdaptedBasis, x, p: SuperPolynomial) -> SuperPolynomial:
    """Dual action: <y, ad*(x)η> = <[y, x], η>, extended as a superderivation."""
    par = ab.in_k(x)
    return apply_derivation(p, _ad_star_images(ab, x), par)


def _contraction_images(ab: AdaptedBasis, a: int) -> list:
    n = ab.n_even + ab.n_odd
    return [SuperPolynomial.constant(ab.pairing_value(a, b), ab.n_even, ab.n_odd, "p*") for b in range(n)]


def contract(ab: AdaptedBasis, d: SuperPolynomial, p: SuperPolynomial) -> SuperPolynomial:
    """∂(d)p, where ∂ is the algebra map with <q, ∂(d)π> = <qd, π>."""
    out = ab.zero("p*")
    for (e, o), c in d.terms.items():
        cur = p
        for idx in reversed(o):
            cur = apply_derivation(cur, _contraction_images(ab, ab.n_even + idx), ODD)
            if not cur:
                break
        for i, k in enumerate(e):
            for _ in range(k):
                if not cur:
                    break
                cur = apply_derivation(cur, _contraction_images(ab, i), 0)
        out = out + cur.scale(c)
    return out


def pair(ab: AdaptedBasis, d: SuperPolynomial, p: SuperPolynomial) -> Fraction:
    """The extended pairing <d, p> of S(p) with S(p*)."""
    return contract(ab, d, p).constant_term()


def realize(ab: AdaptedBasis, p: SuperPolynomial, d: SuperPolynomial, z) -> Fraction:
    """P(d; z) = (-1)^{|d||p|} <e^z, ∂(d)p> for z in p0 (adapted coordinates)."""
    total = ZERO
    for pp, ppoly in p.homogeneous_parts().items():
        for dp, dpoly in d.homogeneous_parts().items():
            v = contract(ab, dpoly, ppoly).evaluate_even(z)
            total += -v if pp and dp else v
    return total


def restrict_to_p0(p: SuperPolynomial) -> SuperPolynomial:
    return p._like({k: v for k, v in p.terms.items() if not k[1]})


def restrict_to_a(ab: AdaptedBasis, p: SuperPolynomial) -> SuperPolynomial:
    """Drop odd terms and terms involving the complement of a in p0."""
    r = ab.rank
    terms = {}
    for (e, o), c in p.terms.items():
        if o or any(e[r:]):
            continue
        terms[(e[:r], ())] = c
    return poly_on_a(terms, r)


def embed_a(ab: AdaptedBasis, q: SuperPolynomial, space: str = "p*") -> SuperPolynomial:
    """A polynomial on a as an element of S(p0*) ⊂ S(p*) (or of S(a) ⊂ S(p))."""
    pad = (0,) * (ab.n_even - ab.rank)
    return SuperPolynomial(ab.n_even, ab.n_odd, {(e + pad, ()): c for (e, o), c in q.terms.items()}, space)
