import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_ido.coeffs import GaussianRational, scalar
from jacobi_ido.lie import E, F, H, LieError, W, Z, e, f, tau, theta
from jacobi_ido.pbw import (
    apply_map,
    casimir_sl2,
    commutator,
    jacobi_algebra,
    nu_images,
    omega_rank1,
    sl2_algebra,
)


def naive_normal_form(alg, word):
    """Straighten a word by adjacent swaps ab -> ba + [a, b]; independent of the PBW engine."""
    pres = alg.pres
    pending = {tuple(word): scalar(1)}
    done = {}
    while pending:
        w, c = pending.popitem()
        idx = [pres.index[g] for g in w]
        pos = next((i for i in range(len(idx) - 1) if idx[i] > idx[i + 1]), None)
        if pos is None:
            done[w] = done.get(w, scalar(0)) + c
            continue
        a, b = w[pos], w[pos + 1]
        swapped = w[:pos] + (b, a) + w[pos + 2:]
        pending[swapped] = pending.get(swapped, scalar(0)) + c
        for g, v in pres.bracket_gens(a, b).items():
            nw = w[:pos] + (g,) + w[pos + 2:]
            pending[nw] = pending.get(nw, scalar(0)) + c * v
    out = alg.zero()
    for w, c in done.items():
        if c:
            out = out + alg.word(list(w)).scale(c)
    return out


words = st.lists(st.integers(0, 7), min_size=1, max_size=5)


@given(words)
def test_normal_form_matches_naive_rewriting(w):
    alg = jacobi_algebra(2)
    gens = [alg.pres.gens[i] for i in w]
    fast = alg.product(alg.gen(g) for g in gens)
    assert fast == naive_normal_form(alg, gens)


@given(words, words, words)
def test_associativity(a, b, c):
    alg = jacobi_algebra(2)
    x, y, z = (alg.product(alg.gen(alg.pres.gens[i]) for i in w) for w in (a, b, c))
    assert (x * y) * z == x * (y * z)


def test_commutators_of_generators():
    alg = jacobi_algebra(1)
    assert commutator(alg.gen(E), alg.gen(F)) == alg.gen(H)
    assert commutator(alg.gen(e(1)), alg.gen(f(1))) == alg.gen(Z(1, 1)).scale(-2)


def test_normal_form_from_text():
    alg = jacobi_algebra(1)
    assert alg.normal_form("e1 f1 - f1 e1") == alg.gen(Z(1, 1)).scale(-2)
    assert alg.normal_form("[E, F]") == alg.gen(H)


def test_sl2_casimir_is_central():
    alg = sl2_algebra()
    om = casimir_sl2(alg)
    for g in alg.pres.gens:
        assert commutator(om, alg.gen(g)).is_zero()


def test_localization():
    loc = jacobi_algebra(1, localized=True)
    assert loc.gen(Z(1, 1)) * loc.gen(W) == loc.one()
    assert loc.gen(W) * loc.gen(Z(1, 1)) == loc.one()


def test_nu_is_a_homomorphism_and_commutes_with_heisenberg():
    nu = nu_images()
    loc = jacobi_algebra(1, localized=True)
    assert commutator(nu[E], nu[F]) == nu[H]
    assert commutator(nu[H], nu[E]) == nu[E].scale(2)
    for x in nu.values():
        for g in (e(1), f(1), Z(1, 1)):
            assert commutator(x, loc.gen(g)).is_zero()


def test_omega():
    om = omega_rank1()
    alg = om.alg
    assert W not in alg.pres.gens
    assert om.constant_term() == 0
    expected = alg.normal_form("4 F E Z11 - F e1^2 + E f1^2 - f1 e1 H + H^2 Z11 + 3 H Z11 - 2 Z11")
    assert om == expected
    for g in alg.pres.gens:
        assert commutator(om, alg.gen(g)).is_zero()
    assert apply_map(tau(1), om) == om.scale(GaussianRational(0, 1) / 2)
    assert apply_map(theta(1), om) == om


def test_apply_map_checks_brackets():
    alg = jacobi_algebra(1)
    rnd = random.Random(1)
    x = alg.product(alg.gen(rnd.choice(alg.pres.gens)) for _ in range(3))
    assert apply_map(theta(1), apply_map(theta(1), apply_map(theta(1), apply_map(theta(1), x)))) == x


def test_word_with_foreign_generator_fails():
    with pytest.raises((LieError, KeyError, ValueError)):
        jacobi_algebra(1).gen(e(2))
