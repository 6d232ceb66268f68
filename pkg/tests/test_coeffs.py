from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from jacobi_ido.characters import to_sympy
from jacobi_ido.coeffs import (
    K,
    GaussianRational,
    ParamPoly,
    ParamScalar,
    PoleError,
    parse_gaussian,
    parse_scalar,
    poly_gcd,
    scalar,
)
from jacobi_ido.linalg import determinant, inverse_matrix, nullspace, rank

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)


def as_complex_pair(z):
    return (z.re, z.im)


@given(gaussians, gaussians)
def test_gaussian_mul_matches_pair_formula(a, b):
    p = a * b
    assert as_complex_pair(p) == (a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)


@given(gaussians)
def test_gaussian_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == GaussianRational(1)


@given(gaussians)
def test_gaussian_render_roundtrip(a):
    assert parse_gaussian(str(a)) == a


def test_gaussian_rendering():
    assert str(GaussianRational(Fraction(1, 2), Fraction(-3, 4))) == "1/2 - (3/4)i"
    assert str(GaussianRational(0, 1)) == "i"


small_polys = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)), min_size=1, max_size=4
).map(lambda ts: sum((ParamPoly.var("k", a) * ParamPoly.var("c", b) * ParamPoly.const(n) for a, b, n in ts),
                     ParamPoly()))


@given(small_polys, small_polys, small_polys)
def test_gcd_agrees_with_sympy(a, b, g):
    x, y = a * g, b * g
    ours = to_sympy(poly_gcd(x, y))
    theirs = sympy.gcd(to_sympy(x), to_sympy(y))
    if theirs == 0:
        assert ours == 0
    else:
        assert sympy.simplify(ours / theirs).is_constant()


@given(small_polys, small_polys)
def test_scalar_field_arithmetic(a, b):
    if b.is_zero():
        return
    s = ParamScalar(a, b)
    assert s * ParamScalar(b) == ParamScalar(a)
    assert (s + 1) - 1 == s


def test_fraction_reduction():
    s = (K * K - 1) / (K - 1)
    assert s == K + 1
    assert s.is_polynomial()


def test_subs_and_pole():
    s = scalar(1) / K
    assert s.subs({"k": 2}) == scalar(Fraction(1, 2))
    with pytest.raises(PoleError):
        s.subs({"k": 0})


def test_parse_scalar():
    assert parse_scalar("(k + 1)/(k - 2)") == (K + 1) / (K - 2)
    assert parse_scalar("-(1/2)i") == scalar(GaussianRational(0, Fraction(-1, 2)))


int_mats = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n))


@given(int_mats)
def test_rank_and_det_match_sympy(rows):
    n = len(rows)
    M = sympy.Matrix(rows)
    srows = [[scalar(x) for x in r] for r in rows]
    assert rank(srows, n) == M.rank()
    grows = [[GaussianRational(x) for x in r] for r in rows]
    assert determinant(grows) == GaussianRational(int(M.det()))
    if M.det() != 0:
        inv = inverse_matrix(grows)
        Minv = M.inv()
        assert all(inv[i][j] == GaussianRational(Fraction(int(Minv[i, j].p), int(Minv[i, j].q)))
                   for i in range(n) for j in range(n))


@given(int_mats)
def test_nullspace_vectors_are_in_kernel(rows):
    n = len(rows)
    srows = [[scalar(x) for x in r] for r in rows]
    basis = nullspace(srows, n)
    assert len(basis) == n - rank(srows, n)
    for v in basis:
        assert all(sum((r[j] * v[j] for j in range(n)), scalar(0)) == 0 for r in srows)


def test_parametric_nullspace():
    rows = [[K, scalar(1)], [K * K, K]]
    basis = nullspace(rows, 2)
    assert len(basis) == 1
    v = basis[0]
    assert K * v[0] + v[1] == 0
