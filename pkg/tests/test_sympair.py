from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superchevalley.linalg import identity
from superchevalley.roots import restricted_roots
from superchevalley.superlie import build_gl, check_jacobi
from superchevalley.sympair import (
    FormNotPreserved,
    NotAutomorphism,
    NotInvolution,
    OddSymplecticSize,
    PairError,
    SymmetricSuperpair,
    build_family,
    build_gl_block,
    build_group_gl,
    build_osp_block,
    build_pair,
    check_theta_form,
    form_orthogonality,
    validate_cartan,
)

F = Fraction


def test_c2_split(c2):
    assert c2.alg.dim == 8
    assert (c2.k0.dim, c2.p0.dim, c2.p1.dim, c2.k1.dim) == (3, 1, 2, 2)
    assert c2.cartan == c2.p0
    assert validate_cartan(c2).is_even_type


def test_c3_multiplicity(c3):
    rd = restricted_roots(c3)
    assert [r.multiplicity for r in rd.odd] == [4, 4]


def test_identity_theta_gives_zero_p():
    g = build_gl(1, 1)
    pair = build_pair(g, identity(g.dim), [])
    assert pair.p.dim == 0 and pair.k.dim == g.dim


def test_flip_on_group_type(gl11):
    alg = gl11.alg
    assert alg.dim == 8 and gl11.rank == 2
    for x in gl11.k.basis:
        assert gl11.apply_theta(x) == x
    for x in gl11.p.basis:
        assert gl11.apply_theta(x) == tuple(-c for c in x)


def test_group_osp(osp12):
    assert osp12.alg.dim == 10 and osp12.rank == 1
    assert validate_cartan(osp12).is_even_type


def test_purely_even_group_type():
    pair = build_group_gl(2, 0)
    rd = restricted_roots(pair)
    assert not rd.odd and rd.even


def test_theta_errors():
    g = build_gl(1, 1)
    n = g.dim
    not_inv = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    with pytest.raises(NotInvolution):
        build_pair(g, not_inv, [])
    # swap E11 and E22: an involution of the vector space but not an automorphism
    i11, i22 = g.labels.index("E1,1"), g.labels.index("E2,2")
    swap = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    swap[i11][i11] = swap[i22][i22] = 0
    swap[i11][i22] = swap[i22][i11] = 1
    with pytest.raises((NotAutomorphism, FormNotPreserved)):
        build_pair(g, swap, [])


def test_osp_block_needs_even_symplectic_sizes():
    with pytest.raises(OddSymplecticSize):
        build_osp_block(1, 1, 1, 2)


@pytest.mark.parametrize("params,even", [((1, 1, 1, 1), True), ((2, 1, 1, 2), False), ((2, 1, 0, 0), True)])
def test_gl_block_verdicts(params, even):
    assert validate_cartan(build_gl_block(*params)).is_even_type == even


def test_gl_block_failure_is_odd_centralizer():
    checks = validate_cartan(build_gl_block(2, 1, 1, 2)).checks
    assert not checks["odd_centralizer_zero"]
    assert all(v for k, v in checks.items() if k != "odd_centralizer_zero")


@pytest.mark.parametrize("params,even", [((1, 1, 2, 2), True), ((2, 1, 2, 4), False), ((1, 1, 0, 0), True)])
def test_osp_block_verdicts(params, even):
    assert validate_cartan(build_osp_block(*params)).is_even_type == even


def test_shipped_pairs_are_orthogonal(shipped):
    name, pair = shipped
    assert form_orthogonality(pair), name
    assert check_theta_form(pair), name
    assert check_jacobi(pair.alg), name


def test_json_round_trip(c2):
    again = SymmetricSuperpair.from_json(c2.to_json())
    assert again.to_json() == c2.to_json()
    assert again.p1 == c2.p1


def test_build_family_validation():
    with pytest.raises(PairError):
        build_family("gl-block", {"p": 1})
    with pytest.raises(PairError):
        build_family("nope", {})
    assert build_family("c-special", {"q": 1}).alg.dim == 8


def _expected_gl_block_odd_weights(p, q, r, s):
    a, b = min(p, q), min(r, s)
    n = a + b
    e = lambda i: tuple(F(1) if k == i else F(0) for k in range(n))
    out = Counter()
    for j in range(a):
        for l in range(b):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    out[tuple(s1 * x + s2 * y for x, y in zip(e(j), e(a + l)))] += 2
        if r != s:
            for s1 in (1, -1):
                out[tuple(s1 * x for x in e(j))] += 2 * abs(r - s)
    for l in range(b):
        if p != q:
            for s1 in (1, -1):
                out[tuple(s1 * x for x in e(a + l))] += 2 * abs(p - q)
    return dict(out)


block = st.integers(0, 2)


@settings(max_examples=12)
@given(block, block, block, block)
def test_gl_block_odd_weights(p, q, r, s):
    if p + q + r + s == 0 or (p - q) * (r - s) < 0:
        return
    pair = build_gl_block(p, q, r, s)
    rd = restricted_roots(pair)
    assert {r_.weight: r_.multiplicity for r_ in rd.odd} == _expected_gl_block_odd_weights(p, q, r, s)
