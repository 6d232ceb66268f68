from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_ido.coeffs import K, scalar
from jacobi_ido.ido import Ido
from jacobi_ido.parser import parse_element
from jacobi_ido.pbw import casimir_sl2, sl2_algebra
from jacobi_ido.reps import (
    RepError,
    build_module,
    delta_set,
    embedding_checks,
    equivalent,
    invariants,
    iota,
    iota_rank,
    iso_decision,
    is_irreducible,
    module_relation_checks,
    mu_d,
    mu_d_checks,
    one_dimensional_labels,
    restrict_sl2,
)

HALF = Fraction(1, 2)


def all_pass(checks):
    return [name for name, ok, _ in checks if not ok] == []


def test_embedding_relations():
    assert all_pass(embedding_checks())


def test_embedding_is_injective_to_degree_4():
    r, n = iota_rank(4)
    assert r == n == 8


def test_iota_on_generators():
    ido = Ido(1)
    g = ido.generator_dict()
    alg = sl2_algebra()
    assert iota(g["Eps(1,1)"]) == parse_element("h - k", alg)
    assert iota(g["Fee(1,1)"]) == parse_element("y (h - k - 1/2)", alg)
    assert iota(g["C"]) == casimir_sl2(alg)


def test_delta_examples():
    d = delta_set(Fraction(5, 4), HALF, 0)
    assert d.dimension == 1 and d.m_minus == HALF
    d = delta_set(0, 0, 5)
    assert d.dimension == 1 and d.m_plus == 0
    d = delta_set(7, Fraction(1, 3), Fraction(2, 5))
    assert d.lo is None and d.hi is None


def brute_force_delta(c, lam, k, reach=40):
    """Walk from lambda until a coefficient of the action vanishes; independent of delta_set."""
    def R(mu):
        return Fraction(1, 4) * (mu - k + HALF) * (mu - k + Fraction(3, 2)) * (c - mu * mu - 2 * mu)

    def L(mu):
        return Fraction(1, 4) * (mu - k - HALF) * (mu - k - Fraction(3, 2)) * (c - mu * mu + 2 * mu)

    hi = None
    for j in range(reach):
        if R(lam + 2 * j) == 0:
            hi = j
            break
    lo = None
    for j in range(reach):
        if L(lam - 2 * j) == 0:
            lo = -j
            break
    return lo, hi


small = st.fractions(min_value=-6, max_value=6, max_denominator=2)


@given(st.integers(-3, 12), small, small)
def test_delta_set_matches_walk(c, lam, k):
    d = delta_set(c, lam, k)
    lo, hi = brute_force_delta(Fraction(c), lam, k)
    assert (d.lo, d.hi) == (lo, hi)


@given(st.integers(-3, 12), small, small)
def test_vk_relations(c, lam, k):
    m = build_module("Vk", c=c, lam=lam, k=k)
    assert all_pass(module_relation_checks(m))
    assert is_irreducible(m)


def test_vk_symbolic_mu_relations_symbolic_k():
    for c, lam in one_dimensional_labels(None):
        m = build_module("Vk", c=c, lam=lam, k=K)
        assert m.dimension == 1
        assert all_pass(module_relation_checks(m))


@given(st.integers(-3, 12), small, st.integers(-3, 3), small)
def test_equivalence_is_a_relation_on_delta(c, lam, shift, k):
    a = build_module("Vk", c=c, lam=lam, k=k)
    b = build_module("Vk", c=c, lam=lam + 2 * shift, k=k)
    assert equivalent(a, b) == (invariants(a) == invariants(b))
    assert equivalent(a, b) == equivalent(b, a)
    assert equivalent(a, a)


@pytest.mark.parametrize("n", range(0, 7))
def test_L_restriction(n):
    weights = [Fraction(2 * j - n) for j in range(n + 1)]
    ks = {w - HALF for w in weights if w - 2 in weights} | {w + HALF for w in weights if w + 2 in weights}
    for k in sorted(ks):
        r = restrict_sl2(build_module("L", n=n, k=k))
        assert r.case in ("split-up", "split-down")
        assert r.ok, [c for c in r.checks if not c[1]]
        assert len(r.sub_weights) + len(r.quotient_weights) == n + 1


def test_L2_split():
    r = restrict_sl2(build_module("L", n=2, k=Fraction(3, 2)))
    assert r.case == "split-up"
    assert [str(w) for w in r.sub_weights] == ["2"]
    assert [str(w) for w in r.quotient_weights] == ["-2", "0"]


def test_generic_restriction_is_irreducible():
    r = restrict_sl2(build_module("L", n=3, k=10))
    assert r.case == "irreducible" and r.ok


@pytest.mark.parametrize("kind,kw,k", [
    ("Mminus", {"lam": Fraction(1, 3)}, Fraction(-1, 6)),
    ("Mplus", {"lam": Fraction(1, 3)}, Fraction(17, 6)),
    ("P", {"c": Fraction(1, 3), "lam": Fraction(1, 5)}, Fraction(-3, 10)),
])
def test_infinite_restrictions(kind, kw, k):
    r = restrict_sl2(build_module(kind, k=k, **kw))
    assert r.case != "irreducible"
    assert r.ok


def test_module_errors():
    with pytest.raises(RepError):
        build_module("Mminus", lam=2)
    with pytest.raises(RepError):
        build_module("Mplus", lam=-1)
    with pytest.raises(RepError):
        build_module("P", c=8, lam=0)
    with pytest.raises(RepError):
        build_module("Q")
    with pytest.raises(RepError):
        delta_set("c", 0, 0)


def test_mu_d():
    assert all_pass(mu_d_checks(3, Fraction(1, 5)))
    ido = Ido(1)
    C = ido.casimir()
    assert mu_d(C, 7) == C


def test_iso_decision():
    assert iso_decision(3, -3)
    assert iso_decision(Fraction(1, 2), Fraction(1, 2))
    assert not iso_decision(3, 2)


def test_module_json_fields():
    m = build_module("Vk", c=8, lam=0, k=Fraction(1, 3))
    d = m.to_json()
    assert {"c", "lambda", "k", "m_minus", "m_plus", "kind", "window"} <= set(d)
    assert d["m_minus"] == "-2" and d["m_plus"] == "2"
    assert "[0]" in m.diagram()
