from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_ido.coeffs import K, GaussianRational, scalar
from jacobi_ido.lie import E, F, H, W, Z, e, f, tE, tF, tH
from jacobi_ido.parser import (
    Comm,
    GenRef,
    Imag,
    Num,
    Param,
    ParseError,
    Pow,
    Prod,
    Sum,
    parse,
    parse_element,
    parse_scalar_expression,
    render,
    tokenize,
)
from jacobi_ido.pbw import jacobi_algebra, sl2_algebra

GENS = [E, F, H, tE, tF, tH, e(1), f(2), Z(1, 2), Z(1, 1, True), e(2, True), W]

atoms = st.one_of(
    st.fractions(min_value=0, max_value=9, max_denominator=5).map(Num),
    st.just(Imag()),
    st.sampled_from(["k", "c", "lam", "mu"]).map(Param),
    st.sampled_from(GENS).map(GenRef),
)


def extend(children):
    signs = st.sampled_from([1, -1])
    return st.one_of(
        st.tuples(children, st.integers(1, 4)).map(lambda t: Pow(*t)),
        st.lists(st.tuples(st.sampled_from(["*", "/"]), children), min_size=2, max_size=3)
        .map(lambda fs: Prod((("*", fs[0][1]),) + tuple(fs[1:]))),
        st.lists(st.tuples(signs, children), min_size=2, max_size=3).map(lambda ts: Sum(tuple(ts))),
        children.map(lambda t: Sum(((-1, t),))),
        st.tuples(children, children).map(lambda t: Comm(*t)),
    )


asts = st.recursive(atoms, extend, max_leaves=8)


@given(asts)
def test_parse_render_roundtrip(node):
    text = render(node)
    again = parse(text, N=2)
    assert again == node
    assert render(again) == text


def test_commutator_of_tilde_generators():
    node = parse("[tE, tF]")
    assert node == Comm(GenRef(tE), GenRef(tF))
    alg = jacobi_algebra(1, "tilde")
    assert parse_element("[tE, tF]", alg) == alg.gen(tH)


def test_sum_of_products():
    node = parse("e1*f1 - f1*e1")
    assert isinstance(node, Sum)
    assert [s for s, _ in node.terms] == [1, -1]
    assert all(isinstance(t, Prod) for _, t in node.terms)
    alg = jacobi_algebra(1)
    assert parse_element("e1*f1 - f1*e1", alg) == alg.gen(Z(1, 1)).scale(-2)


def test_juxtaposition_and_word_splitting():
    assert parse("f1We1") == Prod((("*", GenRef(f(1))), ("*", GenRef(W)), ("*", GenRef(e(1)))))
    assert [t.text for t in tokenize("2tEk")] == ["2", "tE", "k"]


def test_index_out_of_range():
    with pytest.raises(ParseError, match="out of range"):
        parse("Z12", N=1)
    with pytest.raises(ParseError, match="out of range"):
        parse("e3", N=2)


def test_error_positions():
    with pytest.raises(ParseError) as exc:
        parse("E + * F")
    assert exc.value.span[0] == 4
    with pytest.raises(ParseError, match="unknown generator"):
        parse("Q1")
    with pytest.raises(ParseError):
        parse("[E, F")


def test_W_only_in_localized_algebra():
    with pytest.raises(ParseError):
        parse_element("f1 W e1", jacobi_algebra(1))
    loc = jacobi_algebra(1, localized=True)
    assert parse_element("Z11 W", loc) == loc.one()


def test_cross_basis_tokens_convert():
    alg = jacobi_algebra(1)
    i = GaussianRational(0, 1)
    assert parse_element("tH", alg) == alg.gen(F).scale(i) - alg.gen(E).scale(i)


def test_scalars():
    assert parse_scalar_expression("(k + 1)/(k - 2)") == (K + 1) / (K - 2)
    assert parse_scalar_expression("-(1/2)i") == scalar(GaussianRational(0, Fraction(-1, 2)))
    with pytest.raises(ParseError):
        parse_scalar_expression("E + 1")


def test_division_by_element_rejected():
    with pytest.raises(ParseError, match="non-scalar"):
        parse_element("E / F", jacobi_algebra(1))


def test_sl2_symbols():
    alg = sl2_algebra()
    assert parse_element("[x, y]", alg) == parse_element("h", alg)


@given(st.sampled_from([jacobi_algebra(2), jacobi_algebra(1, "tilde")]), st.data())
def test_str_of_elements_reparses(alg, data):
    gens = alg.pres.gens
    ws = data.draw(st.lists(st.lists(st.sampled_from(gens), min_size=1, max_size=3), min_size=1, max_size=3))
    x = alg.zero()
    for w in ws:
        x = x + alg.word(w)
    assert parse_element(str(x), alg) == x
