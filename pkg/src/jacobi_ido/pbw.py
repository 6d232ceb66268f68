"""Universal enveloping algebras in PBW normal form.

Monomials are exponent tuples aligned with the presentation's generator order.
Products of monomials are straightened with the rule
``m' g_t * g_j = (m' * g_j) * g_t + m' * [g_t, g_j]`` for ``t > j``, memoized per
algebra.  Monomial products have Gaussian-rational coefficients; elements carry
:class:`ParamScalar` coefficients.
"""

from __future__ import annotations

import sys
import threading
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .coeffs import ONE, ONE_G, ZERO, ZERO_G, GaussianRational, ParamScalar, scalar
from .lie import (
    E,
    F,
    H,
    H_SL2,
    W,
    X_SL2,
    Y_SL2,
    Gen,
    LieError,
    LiePresentation,
    LinearLieMap,
    Z,
    e,
    f,
    make_jacobi,
    make_sl2,
    tilde_weight,
)

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Mono = tuple


class UEA:
    """Enveloping algebra of a presentation, optionally with one central inverse.

    ``localization`` is a pair ``(g, w)`` of generators of the presentation, both
    central, with the cancellation rule ``g * w -> 1`` applied after sorting.
    """

    def __init__(self, pres: LiePresentation, localization: tuple[Gen, Gen] | None = None):
        self.pres = pres
        self.n = pres.dim
        self.one_mono: Mono = (0,) * self.n
        self.localization = None
        if localization is not None:
            g, w = localization
            gi, wi = pres.gen_index(g), pres.gen_index(w)
            if gi not in pres.central or wi not in pres.central:
                raise LieError("only central generators can be inverted")
            self.localization = (gi, wi)
        self._lock = threading.Lock()
        self._mg_memo: dict = {}
        self._mm_memo: dict = {}

    def __repr__(self):
        return f"UEA({self.pres.name})"

    # -- monomial arithmetic ---------------------------------------------
    def _inc(self, m: Mono, j: int) -> Mono:
        return m[:j] + (m[j] + 1,) + m[j + 1:]

    def mono_times_gen(self, m: Mono, j: int) -> dict:
        key = (m, j)
        hit = self._mg_memo.get(key)
        if hit is not None:
            return hit
        pres = self.pres
        n = self.n
        if j in pres.central or all(not m[t] or not pres.bracket_idx(t, j) for t in range(j + 1, n)):
            # g_j commutes with everything to its right
            res = {self._inc(m, j): ONE_G}
        else:
            t = max(i for i in range(j + 1, n) if m[i])
            mp = m[:t] + (m[t] - 1,) + m[t + 1:]
            res: dict = {}
            for mono, c in self.mono_times_gen(mp, j).items():
                for mono2, c2 in self.mono_times_gen(mono, t).items():
                    _acc(res, mono2, c * c2)
            for l, c in pres.bracket_idx(t, j).items():
                for mono2, c2 in self.mono_times_gen(mp, l).items():
                    _acc(res, mono2, c * c2)
        with self._lock:
            self._mg_memo[key] = res
        return res

    def mono_mul(self, a: Mono, b: Mono) -> dict:
        key = (a, b)
        hit = self._mm_memo.get(key)
        if hit is not None:
            return hit
        cur = {a: ONE_G}
        for j, p in enumerate(b):
            for _ in range(p):
                nxt: dict = {}
                for mono, c in cur.items():
                    for mono2, c2 in self.mono_times_gen(mono, j).items():
                        _acc(nxt, mono2, c * c2)
                cur = nxt
        if self.localization is not None:
            cur = self._cancel(cur)
        with self._lock:
            self._mm_memo[key] = cur
        return cur

    def _cancel(self, terms: dict) -> dict:
        gi, wi = self.localization
        out: dict = {}
        for m, c in terms.items():
            t = min(m[gi], m[wi])
            if t:
                m = list(m)
                m[gi] -= t
                m[wi] -= t
                m = tuple(m)
            _acc(out, m, c)
        return out

    # -- element constructors --------------------------------------------
    def element(self, terms: Mapping[Mono, object] | None = None) -> "UEAElement":
        out: dict = {}
        for m, c in (terms or {}).items():
            c = scalar(c)
            if c:
                _acc_s(out, tuple(m), c)
        if self.localization is not None:
            gi, wi = self.localization
            canc: dict = {}
            for m, c in out.items():
                t = min(m[gi], m[wi])
                if t:
                    m = list(m)
                    m[gi] -= t
                    m[wi] -= t
                    m = tuple(m)
                _acc_s(canc, m, c)
            out = canc
        return UEAElement(self, out)

    def zero(self) -> "UEAElement":
        return UEAElement(self, {})

    def one(self) -> "UEAElement":
        return UEAElement(self, {self.one_mono: ONE})

    def scalar(self, c) -> "UEAElement":
        c = scalar(c)
        return UEAElement(self, {self.one_mono: c} if c else {})

    def gen(self, g: Gen, power: int = 1) -> "UEAElement":
        j = self.pres.gen_index(g)
        m = [0] * self.n
        m[j] = power
        return self.element({tuple(m): ONE})

    def linear(self, comb: Mapping[Gen, object]) -> "UEAElement":
        terms: dict = {}
        for g, c in comb.items():
            j = self.pres.gen_index(g)
            m = [0] * self.n
            m[j] = 1
            terms[tuple(m)] = c
        return self.element(terms)

    def product(self, factors: Iterable["UEAElement"]) -> "UEAElement":
        out = self.one()
        for x in factors:
            out = out * x
        return out

    def word(self, gens: Sequence[Gen]) -> "UEAElement":
        """The (not necessarily ordered) product of generators, normal-ordered."""
        return self.product(self.gen(g) for g in gens)

    def normal_form(self, expr) -> "UEAElement":
        """Normal form of a parsed expression or a list of generator words."""
        if isinstance(expr, UEAElement):
            return expr
        from .parser import evaluate_ast, parse_element

        if isinstance(expr, str):
            return parse_element(expr, self)
        v = evaluate_ast(expr, self)
        return v if isinstance(v, UEAElement) else self.one().scale(v)

    def _N_hint(self) -> int:
        n = 1
        for g in self.pres.gens:
            for i in g.idx:
                n = max(n, i)
        return n


def _acc(d: dict, k, c):
    v = d.get(k)
    if v is None:
        d[k] = c
    else:
        v = v + c
        if v:
            d[k] = v
        else:
            del d[k]


def _acc_s(d: dict, k, c: ParamScalar):
    v = d.get(k)
    if v is None:
        if c:
            d[k] = c
    else:
        v = v + c
        if v:
            d[k] = v
        else:
            del d[k]


class UEAElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: UEA, terms: dict):
        self.alg = alg
        self.terms = terms

    def _check(self, other: "UEAElement"):
        if not isinstance(other, UEAElement):
            raise TypeError("expected a UEAElement")
        if other.alg is not self.alg:
            raise LieError(f"presentation mismatch: {self.alg.pres.name} vs {other.alg.pres.name}")

    def _coerce(self, other) -> "UEAElement":
        if isinstance(other, UEAElement):
            self._check(other)
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc_s(out, m, c)
        return UEAElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return UEAElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s) -> "UEAElement":
        s = scalar(s)
        if not s:
            return self.alg.zero()
        return UEAElement(self.alg, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, UEAElement):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                cc = c1 * c2
                for m, c in self.alg.mono_mul(m1, m2).items():
                    _acc_s(out, m, cc * c)
        return UEAElement(self.alg, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UEAElement):
            return self.alg is other.alg and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational, ParamScalar)):
            return self == self.alg.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def constant_term(self) -> ParamScalar:
        return self.terms.get(self.alg.one_mono, ZERO)

    def uses(self, g: Gen) -> bool:
        j = self.alg.pres.gen_index(g)
        return any(m[j] for m in self.terms)

    def monomial_str(self, m: Mono) -> str:
        parts = []
        for j, p in enumerate(m):
            if p:
                name = self.alg.pres.gens[j].name
                parts.append(name if p == 1 else f"{name}^{p}")
        return " ".join(parts) if parts else "1"

    def sorted_terms(self) -> list[tuple[Mono, ParamScalar]]:
        return sorted(self.terms.items(), key=lambda mc: (-sum(mc[0]), tuple(-x for x in mc[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            mono = self.monomial_str(m)
            cs = str(c)
            if mono == "1":
                pieces.append(cs if " " not in cs else f"({cs})")
                continue
            if c == ONE:
                pieces.append(mono)
            elif c == -ONE:
                pieces.append("-" + mono)
            elif " " in cs:
                pieces.append(f"({cs}) {mono}")
            else:
                pieces.append(f"{cs} {mono}")
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"UEAElement({self})"

    def to_json(self) -> list:
        return [[list(m), str(c)] for m, c in sorted(self.terms.items())]


def commutator(a: UEAElement, b: UEAElement) -> UEAElement:
    return a * b - b * a


def ad(x: Gen | UEAElement, y: UEAElement) -> UEAElement:
    if isinstance(x, Gen):
        x = y.alg.gen(x)
    return commutator(x, y)


def algebra_hom(images: Mapping[Gen, UEAElement], a: UEAElement, target: UEA) -> UEAElement:
    """Multiplicative extension of a map on generators."""
    gens = a.alg.pres.gens
    out = target.zero()
    powers: dict = {}

    def pw(j: int, p: int) -> UEAElement:
        key = (j, p)
        if key not in powers:
            powers[key] = target.one() if p == 0 else pw(j, p - 1) * images[gens[j]]
        return powers[key]

    for m, c in a.terms.items():
        t = target.one()
        for j, p in enumerate(m):
            if p:
                if gens[j] not in images:
                    raise LieError(f"no image for generator {gens[j]}")
                t = t * pw(j, p)
        out = out + t.scale(c)
    return out


def apply_map(m: LinearLieMap, a: UEAElement, target: UEA | None = None) -> UEAElement:
    """Extend a Lie map multiplicatively to the enveloping algebra."""
    if m.source is not a.alg.pres and m.source.gens != a.alg.pres.gens[: m.source.dim]:
        raise LieError("map source does not match the element's presentation")
    bad = m.bracket_violations()
    if bad:
        raise LieError(f"{m.name or 'map'} is not a Lie homomorphism (fails on {bad[0]})")
    target = target or a.alg
    images = {g: target.linear(m.image(g)) for g in m.source.gens}
    for g in a.alg.pres.gens:
        if g not in images:
            images[g] = target.gen(g)
    return algebra_hom(images, a, target)


# ---------------------------------------------------------------------------
# Standard algebras
# ---------------------------------------------------------------------------

_ALGEBRAS: dict = {}


def sl2_algebra() -> UEA:
    if "sl2" not in _ALGEBRAS:
        _ALGEBRAS["sl2"] = UEA(make_sl2())
    return _ALGEBRAS["sl2"]


def jacobi_algebra(N: int, basis: str = "standard", localized: bool = False) -> UEA:
    """U(g^J_N); with ``localized`` (N=1 only) the extra central symbol W = Z11^-1."""
    key = ("jacobi", N, basis, localized)
    if key not in _ALGEBRAS:
        pres = make_jacobi(N, basis)
        if localized:
            if N != 1:
                raise LieError("localization is implemented for N=1 only")
            tilde = basis == "tilde"
            pres = pres.with_central(W)
            _ALGEBRAS[key] = UEA(pres, (Z(1, 1, tilde), W))
        else:
            _ALGEBRAS[key] = UEA(pres)
    return _ALGEBRAS[key]


def casimir_sl2(alg: UEA | None = None) -> UEAElement:
    """h^2 + 2h + 4yx in U(sl2), or H^2 + 2H + 4FE in the sl2 part of a Jacobi algebra."""
    alg = alg or sl2_algebra()
    gens = set(alg.pres.gens)
    if X_SL2 in gens:
        x, y, h = X_SL2, Y_SL2, H_SL2
    elif E in gens:
        x, y, h = E, F, H
    else:
        x, y, h = (Gen("E", (), True), Gen("F", (), True), Gen("H", (), True))
    hh = alg.gen(h)
    return hh * hh + hh.scale(2) + (alg.gen(y) * alg.gen(x)).scale(4)


def nu_images(tilde: bool = False) -> dict[Gen, UEAElement]:
    """nu on E, F, H in the localized rank-1 algebra (standard or tilde symbols)."""
    alg = jacobi_algebra(1, "tilde" if tilde else "standard", localized=True)
    g = lambda kind, idx=(): alg.gen(Gen(kind, idx, tilde))
    ee, ff, w = g("e", (1,)), g("f", (1,)), alg.gen(W)
    q = Fraction(1, 4)
    return {
        Gen("H", (), tilde): g("H") - (ff * w * ee + ee * w * ff).scale(q),
        Gen("E", (), tilde): g("E") - (ee * w * ee).scale(q),
        Gen("F", (), tilde): g("F") + (ff * w * ff).scale(q),
    }


def nu_rank1(x: UEAElement, tilde: bool = False) -> UEAElement:
    """Extend nu multiplicatively from U(sl2) (symbols x, y, h) to the localized algebra."""
    if x.alg is not sl2_algebra():
        raise LieError("nu_rank1 expects an element of U(sl2)")
    imgs = nu_images(tilde)
    target = jacobi_algebra(1, "tilde" if tilde else "standard", localized=True)
    t = lambda kind: Gen(kind, (), tilde)
    images = {X_SL2: imgs[t("E")], Y_SL2: imgs[t("F")], H_SL2: imgs[t("H")]}
    return algebra_hom(images, x, target)


def omega_rank1() -> UEAElement:
    """Z11 (nu(Omega_sl2) - 5/4), returned in the unlocalized U(g^J_1).

    Raises ``LieError`` if the symbol W survives the cancellation.
    """
    loc = jacobi_algebra(1, localized=True)
    inner = nu_rank1(casimir_sl2()) - Fraction(5, 4)
    full = loc.gen(Z(1, 1)) * inner
    if full.uses(W):
        raise LieError("Z11 (nu(Omega) - 5/4) still contains W: consistency failure")
    plain = jacobi_algebra(1)
    return plain.element({m[:-1]: c for m, c in full.terms.items()})


def drop_into(alg: UEA, a: UEAElement) -> UEAElement:
    """Re-home an element onto an algebra whose generators extend (prefix-wise) those of ``a``."""
    src = a.alg.pres.gens
    idx = [alg.pres.gen_index(g) for g in src]
    out = {}
    for m, c in a.terms.items():
        mm = [0] * alg.n
        for j, p in zip(idx, m):
            mm[j] = p
        out[tuple(mm)] = c
    return alg.element(out)


def tilde_weight_of(alg: UEA, m: Mono) -> int:
    return sum(p * tilde_weight(g) for g, p in zip(alg.pres.gens, m))
