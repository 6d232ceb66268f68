from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_ido.characters import (
    Character,
    chi_e,
    chi_e_by_theta,
    chi_f,
    chi_f_by_projection,
    enumerate_characters,
    evaluate_character,
    expand_in_generators,
    forcing_checks,
    gaussian_roots,
    rank1_closed_forms,
    verify_character,
    words_to_element,
)
from jacobi_ido.coeffs import ONE, K, GaussianRational, ParamPoly, scalar
from jacobi_ido.ido import Ido, IdoElement, IdoError


def hand_labels(k: Fraction) -> set:
    """(c, lambda) of the five families, computed with plain fractions."""
    return {(Fraction(0), Fraction(0))} | {
        ((k + s * Fraction(2 * j + 1, 2) + s) ** 2 - 1, k + s * Fraction(2 * j + 1, 2))
        for s in (1, -1) for j in (0, 1)
    }


def labels_of(chars):
    out = set()
    for ch in chars:
        c, lam = ch.label()
        out.add((c.constant_value().re, lam.constant_value().re))
    return out


@pytest.mark.parametrize("k,count", [(0, 5), (1, 5), (Fraction(1, 4), 5), (Fraction(7, 3), 5),
                                     (Fraction(1, 2), 4), (Fraction(-1, 2), 4),
                                     (Fraction(3, 2), 4), (Fraction(-3, 2), 4)])
def test_character_counts(k, count):
    ido = Ido(1, k)
    en = enumerate_characters(ido)
    assert en.ok
    assert len(en.characters) == count
    assert labels_of(en.characters) == hand_labels(Fraction(k))
    for ch in en.characters:
        assert verify_character(ch, ido).ok


@given(st.fractions(min_value=-4, max_value=4, max_denominator=6))
def test_solver_agrees_with_hand_formula(k):
    ido = Ido(1, k)
    en = enumerate_characters(ido)
    assert en.ok
    assert labels_of(en.characters) == hand_labels(k)


def test_symbolic_rank1():
    ido = Ido(1)
    en = enumerate_characters(ido)
    assert en.ok and len(en.characters) == 5
    lams = {str(ch.label()[1]) for ch in en.characters}
    assert lams == {"0", "k + 1/2", "k - 1/2", "k + 3/2", "k - 3/2"}


@pytest.mark.parametrize("N", [2, 3])
def test_two_characters(N):
    ido = Ido(N)
    en = enumerate_characters(ido)
    assert en.ok
    assert sorted(ch.name for ch in en.characters) == ["chi_e", "chi_f"]
    a, b = K + Fraction(N, 2), K - Fraction(N, 2)
    assert chi_f(ido)(ido.casimir()) == a * (a + 2)
    assert chi_e(ido)(ido.casimir()) == b * (b - 2)
    assert all(ok for _, ok, _ in forcing_checks(ido))


@pytest.mark.parametrize("N", [1, 2, 3])
def test_independent_routes(N):
    ido = Ido(N)
    assert chi_f_by_projection(ido).values == chi_f(ido).values
    assert chi_e_by_theta(ido).values == chi_e(ido).values


@given(st.sampled_from(Ido(1).basis_B(5)))
def test_expansion_in_generators_roundtrip(m):
    ido = Ido(1)
    x = IdoElement(ido, "B", {m: ONE})
    assert words_to_element(ido, expand_in_generators(x)) == x


@given(st.sampled_from(Ido(1).basis_A(4)), st.sampled_from(Ido(1).basis_A(4)))
def test_characters_are_multiplicative(a, b):
    ido = Ido(1)
    x, y = IdoElement(ido, "A", {a: ONE}), IdoElement(ido, "A", {b: ONE})
    for chi in rank1_closed_forms(ido):
        assert evaluate_character(chi, x * y) == evaluate_character(chi, x) * evaluate_character(chi, y)


def test_non_character_is_rejected():
    ido = Ido(1)
    vals = dict(chi_f(ido).values)
    vals["Eps(1,1)"] = scalar(1)
    vals["C"] = scalar(0)
    rep = verify_character(Character(1, K, vals), ido)
    assert not rep.ok
    assert any({v[0], v[1]} == {"Fee(1,1)", "Eff(1,1)"} for v in rep.violations)


def test_unbalanced_element_has_no_expansion():
    ido = Ido(1)
    with pytest.raises(IdoError):
        expand_in_generators(IdoElement(ido, "A", {(1, 0, (0,), (0,)): ONE}))


def test_gaussian_roots():
    lam = ParamPoly.var("lam")
    roots, rest = gaussian_roots(lam * lam + ParamPoly.const(1), "lam")
    assert set(roots) == {GaussianRational(0, 1), GaussianRational(0, -1)}
    assert rest == []
    roots, rest = gaussian_roots(lam * lam - ParamPoly.const(2), "lam")
    assert roots == [] and len(rest) == 1
