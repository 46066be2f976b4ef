from fractions import Fraction as F

import pytest

from superchevalley.invariants import (
    c_special_generators,
    c_special_p,
    cartan_monomials,
    check_generator_properties,
    coordinates_poly,
    generator_checks,
    invariants_degree,
    poly_coordinates,
    restriction_image_degree,
    theoremB_subspace,
    verify_chevalley,
    weyl_invariants,
)
from superchevalley.linalg import Subspace
from superchevalley.radial import coeff_a
from superchevalley.roots import NotEvenType, restricted_roots, weyl_group
from superchevalley.superpoly import ad_star, adapted_basis, linear_form, restrict_to_a
from superchevalley.sympair import build_gl_block


def span_of(polys, rank, d):
    return Subspace.span([poly_coordinates(p, rank, d) for p in polys], len(cartan_monomials(rank, d)))


def test_degree_zero(c2):
    inv = invariants_degree(c2, 0)
    assert inv.dim == 1 and inv.basis[0].constant_term() != 0


def test_c2_low_degrees(c2):
    ab = adapted_basis(c2)
    assert invariants_degree(c2, 1).dim == 0
    inv2 = invariants_degree(c2, 2)
    assert inv2.dim == 1
    p2 = c_special_p(1, 2)
    lead = inv2.basis[0]
    # the single invariant is a multiple of the super-Laplacian
    c = next(iter(p2.terms.values())) / lead.terms[next(iter(p2.terms))]
    assert lead.scale(c) == p2
    blk = ab.blocks[0]
    lam = ab.root_form(blk.root.weight)
    zeta = ab.generator(ab.n_even + blk.z(0))
    zetat = ab.generator(ab.n_even + blk.zt(0))
    assert p2 == lam**2 + zeta * zetat


def test_c2_degree_three(c2):
    ab = adapted_basis(c2)
    blk = ab.blocks[0]
    lam = ab.root_form(blk.root.weight)
    zeta = ab.generator(ab.n_even + blk.z(0))
    zetat = ab.generator(ab.n_even + blk.zt(0))
    p3 = lam**3 + (lam * zeta * zetat).scale(F(3, 2))
    assert c_special_p(1, 3) == p3
    assert restriction_image_degree(c2, 3) == span_of([linear_form(blk.root.weight) ** 3], 1, 3)
    assert all(not ad_star(ab, y, p3) for y in blk.basis.y)


def test_gl11_images(gl11):
    lam = linear_form((1, -1))
    eps, delta = linear_form((1, 0)), linear_form((0, 1))
    assert restriction_image_degree(gl11, 1) == span_of([lam], 2, 1)
    assert restriction_image_degree(gl11, 2) == span_of([eps * eps - eps * delta, eps * delta - delta * delta], 2, 2)


def test_predicted_examples(c2, gl11, osp12):
    rd = restricted_roots(c2)
    W = weyl_group(rd)
    assert [theoremB_subspace(rd, W, d).dim for d in range(7)] == [1, 0, 1, 1, 1, 1, 1]
    rd = restricted_roots(gl11)
    assert theoremB_subspace(rd, weyl_group(rd), 1) == span_of([linear_form((1, -1))], 2, 1)
    rd = restricted_roots(osp12)
    W = weyl_group(rd)
    for d in range(7):
        want = span_of([linear_form((1,)) ** d], 1, d) if d % 2 == 0 else Subspace.span([], 1)
        assert theoremB_subspace(rd, W, d) == weyl_invariants(rd, W, d) == want


def test_invariants_are_purely_even_and_annihilated(shipped):
    name, pair = shipped
    ab = adapted_basis(pair)
    ks = list(pair.k0.basis) + list(pair.k1.basis)
    for d in range(4):
        for p in invariants_degree(pair, d).basis:
            assert p.is_purely_even(), name
            assert all(not ad_star(ab, x, p) for x in ks), name


def test_image_inside_weyl_invariants(shipped):
    name, pair = shipped
    rd = restricted_roots(pair)
    W = weyl_group(rd)
    for d in range(4):
        img = restriction_image_degree(pair, d)
        assert img.is_subspace_of(weyl_invariants(rd, W, d)), (name, d)


@pytest.mark.parametrize("d,e", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_image_closed_under_products(shipped, d, e):
    name, pair = shipped
    ab = adapted_basis(pair)
    r = ab.rank
    P, Q = invariants_degree(pair, d), invariants_degree(pair, e)
    target = restriction_image_degree(pair, d + e)
    for p in P.basis:
        for q in Q.basis:
            prod = restrict_to_a(ab, p) * restrict_to_a(ab, q)
            assert target.contains(poly_coordinates(prod, r, d + e)), (name, d, e)


def test_coordinates_round_trip():
    p = linear_form((1, -2)) ** 3
    assert coordinates_poly(poly_coordinates(p, 2, 3), 2, 3) == p


def test_verify_report(c2):
    rep = verify_chevalley(c2, 4)
    assert rep.ok
    js = rep.to_json()
    assert set(js) == {"pair", "max_degree", "degrees", "ok"}
    assert [row["dim_image"] for row in js["degrees"]] == [1, 0, 1, 1, 1]
    assert all(row["equal"] and row["injective"] for row in js["degrees"])


def test_verify_block_pair():
    assert verify_chevalley(build_gl_block(1, 1, 1, 1), 3).ok


def test_verify_rejects_non_even_type():
    with pytest.raises(NotEvenType):
        verify_chevalley(build_gl_block(2, 1, 1, 2), 2)


def test_c_special_dimension_pattern(c3):
    dims = [restriction_image_degree(c3, d).dim for d in range(7)]
    assert dims == [1 if d == 0 or d % 2 == 0 or d >= 5 else 0 for d in range(7)]


def test_generators():
    for q in (1, 2):
        assert generator_checks(q) == {"invariant": True, "relation": True, "restrictions": True}
        assert check_generator_properties(q)
    p2, p5 = c_special_generators(2)
    assert p5.max_degree() == 5
    # the λ^3 ζζ̃ coefficient uses a(5,1), the λ ζζ̃ζζ̃ coefficient a(5,2)
    assert coeff_a(5, 1) and coeff_a(5, 2)
    with pytest.raises(ValueError):
        c_special_generators(0)
