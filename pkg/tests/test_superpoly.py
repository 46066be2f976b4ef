from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superchevalley.roots import evaluate
from superchevalley.superpoly import (
    SpaceMismatch,
    SuperPolyError,
    SuperPolynomial,
    ad_action,
    ad_star,
    contract,
    derivative,
    divide_linear,
    embed_a,
    linear_form,
    monomials,
    multiply,
    pair,
    realize,
    restrict_to_a,
    substitute,
)

F = Fraction
NE, NO = 2, 3


def x(i):
    return SuperPolynomial.even_var(i, NE, NO)


def xi(i):
    return SuperPolynomial.odd_var(i, NE, NO)


@st.composite
def polys(draw, max_terms=4, max_deg=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_deg)) for _ in range(NE))
        o = tuple(sorted(draw(st.sets(st.integers(0, NO - 1), max_size=NO))))
        terms[(e, o)] = F(draw(st.integers(-3, 3)), draw(st.integers(1, 3)))
    return SuperPolynomial(NE, NO, terms)


@st.composite
def homogeneous(draw):
    p = draw(polys())
    return p.parity_part(draw(st.integers(0, 1)))


def parity_of(p):
    return next(iter(p.homogeneous_parts()), 0)


# --- multiplication --------------------------------------------------------------------


def test_odd_generators_anticommute():
    assert xi(0) * xi(1) == -(xi(1) * xi(0))
    assert not xi(2) * xi(2)
    assert x(0) * xi(1) == xi(1) * x(0)


def test_powers():
    assert (x(0) + x(1)) ** 2 == x(0) ** 2 + (x(0) * x(1)).scale(2) + x(1) ** 2
    assert (xi(0) * xi(1) + x(0)) ** 2 == x(0) ** 2 + (x(0) * xi(0) * xi(1)).scale(2)


def test_space_mismatch():
    with pytest.raises(SpaceMismatch):
        x(0) * SuperPolynomial.even_var(0, NE, NO, "p")


@given(polys(), polys(), polys())
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(homogeneous(), homogeneous())
def test_supercommutative(a, b):
    sign = -1 if parity_of(a) and parity_of(b) else 1
    assert a * b == (b * a).scale(sign)


@given(polys())
def test_json_round_trip(p):
    assert SuperPolynomial.from_json(p.to_json(), NE, NO) == p


def test_monomial_counts():
    # dim S^{d,tot} with 2 even and 3 odd generators, d = 3: 4 + 3*3 + 3*2 + 1
    assert len(monomials(2, 3, 3)) == 20
    assert len(monomials(1, 2, 0)) == 1


# --- operations on the Cartan subspace ---------------------------------------------------


a_polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)).map(lambda e: (e, ())),
    st.integers(-4, 4).map(F),
    max_size=5,
).map(lambda t: SuperPolynomial(2, 0, t, "a*"))
weights = st.tuples(st.integers(-2, 2), st.integers(-2, 2)).filter(any)


@given(a_polys, weights)
def test_divide_linear(p, w):
    q, r = divide_linear(p, w)
    assert q * linear_form(w) + r == p
    lead = next(i for i, c in enumerate(w) if c)
    assert all(e[lead] == 0 for e, _ in r.terms)


@given(a_polys, a_polys, weights)
def test_derivative_is_a_derivation(p, q, w):
    assert derivative(p * q, w) == derivative(p, w) * q + p * derivative(q, w)


@given(a_polys, st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
def test_substitute_is_pullback(p, row0, row1):
    m = [list(row0), list(row1)]
    sub = substitute(p, m)
    for y in [(1, 2), (F(1, 2), -3)]:
        xv = [sum(F(r[j]) * y[j] for j in range(2)) for r in m]
        assert sub.evaluate_even(y) == p.evaluate_even(xv)


def test_substitute_rejects_odd():
    with pytest.raises(SuperPolyError):
        substitute(xi(0), [[1]])


# --- pairing and actions on the pair C(2) ---------------------------------------------------


def odd_gens(ab):
    blk = ab.blocks[0]
    ne = ab.n_even
    return blk, ab.generator(ne + blk.z(0)), ab.generator(ne + blk.zt(0))


def test_pairing_examples(c2_ab):
    ab = c2_ab
    blk, zeta, zetat = odd_gens(ab)
    ne = ab.n_even
    z, zt = ab.basis_element(ne + blk.z(0)), ab.basis_element(ne + blk.zt(0))
    assert pair(ab, zt, zeta) == 1
    assert pair(ab, z, zetat) == -1
    assert pair(ab, z, zeta) == 0
    e, eta = ab.basis_element(0), ab.generator(0)
    assert pair(ab, e, eta) == 1
    assert pair(ab, e * e, eta * eta) == 2
    assert pair(ab, e, eta * eta) == 0


def test_ad_star_on_odd_generators(c2_ab):
    ab = c2_ab
    blk, zeta, zetat = odd_gens(ab)
    lam = ab.root_form(blk.root.weight)
    assert ad_star(ab, blk.basis.yt[0], zeta) == lam
    assert ad_star(ab, blk.basis.y[0], zetat) == -lam


def test_ad_star_rejects_p(c2_ab):
    with pytest.raises(SuperPolyError):
        ad_star(c2_ab, c2_ab.even[0], c2_ab.one())


def _k_elements(ab):
    return list(ab.pair.k0.basis) + list(ab.pair.k1.basis)


@pytest.mark.parametrize("deg", [1, 2, 3])
def test_ad_adjointness(c2_ab, deg):
    """<ad(x)d, p> + (-1)^{|x||d|} <d, ad*(x)p> = 0."""
    ab = c2_ab
    mons = monomials(ab.n_even, ab.n_odd, deg)
    for xk in _k_elements(ab):
        px = ab.in_k(xk)
        for md in mons:
            d = SuperPolynomial(ab.n_even, ab.n_odd, {md: 1}, "p")
            sign = -1 if px and len(md[1]) % 2 else 1
            for mp in mons:
                p = SuperPolynomial(ab.n_even, ab.n_odd, {mp: 1}, "p*")
                assert pair(ab, ad_action(ab, xk, d), p) + sign * pair(ab, d, ad_star(ab, xk, p)) == 0


def test_contraction_lowers_degree(c2_ab):
    ab = c2_ab
    blk, zeta, zetat = odd_gens(ab)
    p = zeta * zetat * ab.generator(0)
    d = ab.basis_element(ab.n_even + blk.zt(0))
    assert contract(ab, d, p).degrees() == {2}


# --- realization and restriction ------------------------------------------------------------


def test_realize_examples(c2_ab):
    ab = c2_ab
    blk, zeta, zetat = odd_gens(ab)
    lam = ab.root_form(blk.root.weight)
    z = ab.cartan_point((3,))
    one = ab.one("p")
    assert realize(ab, lam**2, one, z) == 9
    assert realize(ab, lam**2, ab.basis_element(0), z) == 6
    # the odd part never contributes at an even point unless it is contracted away
    ne = ab.n_even
    d = ab.basis_element(ne + blk.z(0)) * ab.basis_element(ne + blk.zt(0))
    assert realize(ab, zeta * zetat, one, z) == 0
    assert realize(ab, zeta * zetat, d, z) != 0


@settings(max_examples=20)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2), st.tuples(st.integers(1, 4), st.integers(-4, -1)), st.integers(0, 4))
def test_realize_is_directional_derivative(gl11_ab, coeffs, h, k):
    """For p on a and x in a, P(x; h) is the derivative of p along x at h."""
    ab = gl11_ab
    q = linear_form(coeffs) ** k
    xdir = (1, 2)
    d = SuperPolynomial.linear(list(xdir) + [0] * (ab.n_even - 2 + ab.n_odd), ab.n_even, ab.n_odd, "p")
    got = realize(ab, embed_a(ab, q), d, ab.cartan_point(h))
    assert got == derivative(q, xdir).evaluate_even(h)


@given(a_polys, a_polys)
def test_restriction_is_a_homomorphism(gl11_ab, p, q):
    ab = gl11_ab
    P, Q = embed_a(ab, p), embed_a(ab, q)
    odd = ab.generator(ab.n_even) * ab.generator(ab.n_even + 1)
    assert restrict_to_a(ab, P * Q + odd) == p * q
    assert restrict_to_a(ab, P + Q) == p + q


def test_root_form_restricts_to_weight(gl11_ab):
    ab = gl11_ab
    for blk in ab.blocks:
        w = blk.root.weight
        assert restrict_to_a(ab, ab.root_form(w)) == linear_form(w)
        assert evaluate(w, blk.root.coroot) == blk.root.norm


def test_grading_and_parity(c2_ab):
    ab = c2_ab
    blk, zeta, zetat = odd_gens(ab)
    p = ab.generator(0) ** 2 + zeta * zetat + zeta
    assert p.degrees() == {1, 2}
    assert set(p.homogeneous_parts()) == {0, 1}
    assert not p.is_purely_even() and (p - zeta).is_purely_even()
    assert multiply(zeta, zeta).is_zero()
