from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_ido.coeffs import GaussianRational
from jacobi_ido.lie import (
    E,
    F,
    H,
    LieError,
    Z,
    basis_convert,
    e,
    f,
    identity_map,
    in_standard_coordinates,
    lc,
    make_jacobi,
    make_sl2,
    mu_M,
    tau,
    tE,
    tF,
    tH,
    theta,
    theta_tilde,
)


def G(x):
    return GaussianRational(x)


@pytest.mark.parametrize("N", [1, 2, 3, 4])
@pytest.mark.parametrize("basis", ["standard", "tilde"])
def test_jacobi_identity(N, basis):
    p = make_jacobi(N, basis)
    assert p.jacobi_violations() == []
    assert p.dim == 3 + 2 * N + N * (N + 1) // 2


def test_standard_brackets():
    p = make_jacobi(2)
    assert p.bracket_gens(E, F) == lc((H, 1))
    assert p.bracket_gens(H, E) == lc((E, 2))
    assert p.bracket_gens(H, f(2)) == lc((f(2), -1))
    assert p.bracket_gens(E, f(1)) == lc((e(1), -1))
    assert p.bracket_gens(e(1), f(2)) == lc((Z(1, 2), -2))
    assert p.bracket_gens(Z(1, 2), E) == {}


def test_tilde_table_matches_standard_table():
    # the tilde basis has the same structure constants as the standard basis
    std, til = make_jacobi(2), make_jacobi(2, "tilde")
    plain = {g: g._replace(tilde=True) for g in std.gens}
    for a in std.gens:
        for b in std.gens:
            lhs = {plain[g]: c for g, c in std.bracket_gens(a, b).items()}
            assert til.bracket_gens(plain[a], plain[b]) == lhs


def test_tilde_expansions():
    assert basis_convert({tH: G(1)}, "tilde", "standard", 1) == lc((F, GaussianRational(0, 1)),
                                                                  (E, GaussianRational(0, -1)))
    back = basis_convert(basis_convert({tE: G(1)}, "tilde", "standard", 1), "standard", "tilde", 1)
    assert back == {tE: G(1)}


def test_sl2():
    p = make_sl2()
    assert p.dim == 3 and p.jacobi_violations() == []


@pytest.mark.parametrize("N", [1, 2, 3])
def test_theta_has_order_four(N):
    th = theta(N)
    assert th.power(4).same_as(identity_map(th.source))
    assert not th.power(2).same_as(identity_map(th.source))
    assert th.is_automorphism()
    tt = theta_tilde(N)
    assert tt.power(4).same_as(identity_map(tt.source))


@pytest.mark.parametrize("N", [1, 2])
def test_tau_intertwines_theta(N):
    t = tau(N)
    assert t.is_automorphism()
    assert t.compose(theta(N)).same_as(in_standard_coordinates(theta_tilde(N), N).compose(t))


def test_mu_composition_order():
    A = [[1, 2], [0, 1]]
    B = [[0, 1], [-1, Fraction(3, 2)]]
    BA = [[sum(Fraction(B[i][t]) * A[t][j] for t in range(2)) for j in range(2)] for i in range(2)]
    AB = [[sum(Fraction(A[i][t]) * B[t][j] for t in range(2)) for j in range(2)] for i in range(2)]
    assert mu_M(A).compose(mu_M(B)).same_as(mu_M(BA))
    assert not mu_M(A).compose(mu_M(B)).same_as(mu_M(AB))


def test_mu_rejects_singular():
    with pytest.raises(LieError):
        mu_M([[1, 1], [1, 1]])


coeffs = st.integers(-3, 3).map(G)


@given(st.lists(coeffs, min_size=8, max_size=8), st.lists(coeffs, min_size=8, max_size=8),
       st.lists(coeffs, min_size=8, max_size=8))
def test_bracket_is_antisymmetric_and_jacobi_on_combinations(xs, ys, zs):
    p = make_jacobi(2)
    gens = p.gens
    x, y, z = ({g: c for g, c in zip(gens, v) if c} for v in (xs, ys, zs))
    br = p.bracket
    zero = {}
    assert br(x, y) == {g: -c for g, c in br(y, x).items()}
    total = {}
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        for g, v in br(a, br(b, c)).items():
            total[g] = total.get(g, G(0)) + v
    assert {g: v for g, v in total.items() if v} == zero
