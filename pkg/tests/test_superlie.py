from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superchevalley.linalg import Subspace
from superchevalley.superlie import (
    BadForm,
    LieSuperalgebra,
    build_gl,
    build_osp,
    centralizer,
    check_antisymmetry,
    check_form,
    check_jacobi,
    check_parity,
    corrupted,
    direct_sum,
    standard_symplectic,
    supertrace,
)


@pytest.fixture(scope="module")
def gl11():
    return build_gl(1, 1)


def vec(alg, **coeffs):
    v = [0] * alg.dim
    for label, c in coeffs.items():
        v[alg.labels.index(label.replace("_", ","))] = c
    return tuple(Fraction(x) for x in v)


def test_gl11_basic(gl11):
    assert (gl11.dim, gl11.even_dim, gl11.odd_dim) == (4, 2, 2)
    e12, e21 = vec(gl11, E1_2=1), vec(gl11, E2_1=1)
    assert gl11.bracket(e12, e21) == vec(gl11, E1_1=1, E2_2=1)
    e11 = vec(gl11, E1_1=1)
    assert not any(gl11.bracket(e11, e11))
    assert gl11.form_value(e11, e11) == 1
    assert gl11.form_value(vec(gl11, E2_2=1), vec(gl11, E2_2=1)) == -1


def test_cartan_acts_by_weights(gl11):
    h = vec(gl11, E1_1=2, E2_2=5)
    x = vec(gl11, E1_2=1)
    assert gl11.bracket(h, x) == tuple(Fraction(2 - 5) * c for c in x)


def test_gl_purely_even():
    g = build_gl(2, 0)
    assert g.odd_dim == 0 and g.dim == 4
    assert check_jacobi(g) and check_form(g)


@pytest.mark.parametrize("m,n2,even,odd", [(2, 2, 4, 4), (1, 2, 3, 2), (2, 4, 11, 8)])
def test_osp_dimensions(m, n2, even, odd):
    g = build_osp(m, n2)
    assert (g.even_dim, g.odd_dim) == (even, odd)


@pytest.mark.parametrize("alg", [build_gl(1, 1), build_gl(2, 1), build_osp(2, 2), build_osp(1, 2), build_osp(3, 2)], ids=["gl11", "gl21", "osp22", "osp12", "osp32"])
def test_axioms(alg):
    assert check_parity(alg)
    assert check_antisymmetry(alg)
    assert check_jacobi(alg)
    assert check_form(alg)


def test_osp_closed_under_bracket():
    g = build_osp(2, 4)
    span = Subspace.full(g.dim)
    for i in range(g.dim):
        for j in range(g.dim):
            assert g.bracket(g.basis_vector(i), g.basis_vector(j)) in span


def test_bad_forms():
    with pytest.raises(BadForm):
        build_osp(2, 2, sym_form=[[1, 1], [0, 1]])
    with pytest.raises(BadForm):
        build_osp(1, 2, symp_form=[[1, 0], [0, 1]])
    with pytest.raises(BadForm):
        build_osp(2, 2, sym_form=[[1, 0], [0, 0]])


def test_corrupted_table_fails():
    assert not (check_jacobi(corrupted(build_gl(2, 1))) and check_form(corrupted(build_gl(2, 1))))


def test_direct_sum(gl11):
    s = direct_sum(gl11, gl11)
    assert s.dim == 8 and check_jacobi(s) and check_form(s)
    n = gl11.dim
    # even-first reordering: locate the copies by label suffix
    first = [s.labels.index(l + ".1") for l in gl11.labels]
    second = [s.labels.index(l + ".2") for l in gl11.labels]
    for i in range(n):
        for j in range(n):
            x = [0] * 8
            y = [0] * 8
            x[first[i]], x[second[i]] = 1, -1
            y[first[j]], y[second[j]] = 1, -1
            assert s.form_value(x, y) == 2 * gl11.form_value(gl11.basis_vector(i), gl11.basis_vector(j))


def test_direct_sum_with_zero(gl11):
    zero = LieSuperalgebra((), (), {}, ())
    s = direct_sum(gl11, zero)
    assert s.dim == gl11.dim and check_jacobi(s)


def test_centralizer(gl11):
    centre = centralizer(gl11, Subspace.full(4))
    assert centre == Subspace.span([vec(gl11, E1_1=1, E2_2=1)], 4)
    assert centralizer(gl11, Subspace.zero(4)) == Subspace.full(4)


def test_json_round_trip(gl11):
    g = build_osp(1, 2)
    h = LieSuperalgebra.from_json(g.to_json())
    assert h.to_json() == g.to_json()


def test_supertrace_form_matches_matrices():
    g = build_gl(2, 1)
    for i in range(g.dim):
        for j in range(g.dim):
            x, y = g.basis_vector(i), g.basis_vector(j)
            mx, my = g.to_matrix(x), g.to_matrix(y)
            prod = [[sum(mx[a][k] * my[k][b] for k in range(3)) for b in range(3)] for a in range(3)]
            assert g.form_value(x, y) == supertrace(prod, 2)


coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@given(st.lists(coeff, min_size=9, max_size=9), st.lists(coeff, min_size=9, max_size=9), st.lists(coeff, min_size=9, max_size=9))
def test_form_invariance_random_elements(a, b, c):
    g = build_gl(2, 1)
    x, y, z = tuple(a), tuple(b), tuple(c)
    # even parts only to avoid sign bookkeeping on mixed elements
    ev = lambda v: tuple(v[i] if g.parity(i) == 0 else 0 for i in range(g.dim))
    x, y, z = ev(x), ev(y), ev(z)
    assert g.form_value(g.bracket(x, y), z) == g.form_value(x, g.bracket(y, z))


def test_symplectic_default():
    assert standard_symplectic(2) == [[0, 1], [-1, 0]]
