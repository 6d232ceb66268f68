"""Characters of D_k: closed forms, verification, and enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import sympy

from .coeffs import ONE, ZERO, GaussianRational, ParamPoly, ParamScalar, scalar
from .ido import HALF, Ido, IdoElement, IdoError, _acc

QUARTER = Fraction(1, 4)


# ---------------------------------------------------------------------------
# Expansion in generator words
# ---------------------------------------------------------------------------

def _peel(ido: Ido, m: tuple) -> tuple[str, tuple]:
    """Split a basis-B monomial as ``generator * rest`` up to lower terms.

    ``C`` is split off on the right (exactly); the others on the left, where the
    product has ``m`` as its leading term.
    """
    iF, iE, If, Ie, iC = m
    N = ido.N
    if iC:
        return "C", (iF, iE, If, Ie, iC - 1)
    if iF:
        idx = [r for r in range(N) for _ in range(Ie[r])]
        r, s = idx[0], idx[1]
        rest_e = list(Ie)
        rest_e[r] -= 1
        rest_e[s] -= 1
        return f"Fee({r + 1},{s + 1})", (iF - 1, 0, If, tuple(rest_e), 0)
    if iE:
        idx = [r for r in range(N) for _ in range(If[r])]
        r, s = idx[0], idx[1]
        rest_f = list(If)
        rest_f[r] -= 1
        rest_f[s] -= 1
        return f"Eff({r + 1},{s + 1})", (0, iE - 1, tuple(rest_f), Ie, 0)
    r = next(i for i in range(N) if If[i])
    s = next(i for i in range(N) if Ie[i])
    rest_f, rest_e = list(If), list(Ie)
    rest_f[r] -= 1
    rest_e[s] -= 1
    return f"Eps({r + 1},{s + 1})", (0, 0, tuple(rest_f), tuple(rest_e), 0)


_WORD_MEMO: dict = {}


def expand_in_generators(x: IdoElement) -> dict[tuple, ParamScalar]:
    """Write ``x`` as a combination of ordered generator words.

    Words are tuples of generator names; at N=1 they are exactly the monomials
    ``Fee^a Eff^b Eps^j C^c`` (a*b = 0).  ``C`` is always peeled to the right.
    """
    ido = x.ido
    if not x.is_balanced():
        raise IdoError("element has non-zero E-weight; it is not in the image of D_k")
    out: dict = {}
    for m, c in x.to("B").terms.items():
        for w, cw in _expand_mono(ido, m).items():
            _acc(out, w, c * cw)
    return out


def _expand_mono(ido: Ido, m: tuple) -> dict:
    key = (ido.N, ido.k, m)
    hit = _WORD_MEMO.get(key)
    if hit is not None:
        return hit
    z = ido.zero_vec
    if m == (0, 0, z, z, 0):
        res = {(): ONE}
    else:
        gens = ido.generator_dict()
        name, rest = _peel(ido, m)
        res = {}
        if name == "C":
            for w, c in _expand_mono(ido, rest).items():
                _acc(res, w + ("C",), c)
        else:
            g = gens[name]
            for w, c in _expand_mono(ido, rest).items():
                _acc(res, (name,) + w, c)
            prod = g * IdoElement(ido, "B", {rest: ONE})
            remainder = IdoElement(ido, "B", {m: ONE}) - prod.to("B")
            for mm, c in remainder.to("B").terms.items():
                if mm == m:
                    raise IdoError("peeling did not remove the leading monomial")
                for w, cw in _expand_mono(ido, mm).items():
                    _acc(res, w, c * cw)
    _WORD_MEMO[key] = res
    return res


def words_to_element(ido: Ido, words: Mapping[tuple, ParamScalar]) -> IdoElement:
    """Inverse of :func:`expand_in_generators` (multiplies the words out)."""
    gens = ido.generator_dict()
    out = ido.zero("B")
    for w, c in words.items():
        t = ido.one("B")
        for name in w:
            t = t * gens[name]
        out = out + t.scale(c)
    return out


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------

@dataclass
class Character:
    """Values of a character on the generators of :meth:`Ido.generators`."""

    N: int
    k: ParamScalar
    values: dict[str, ParamScalar]
    name: str = ""
    certificate: list = field(default_factory=list)

    def __call__(self, x: IdoElement) -> ParamScalar:
        return evaluate_character(self, x)

    def key(self) -> tuple:
        return tuple((n, str(self.values[n])) for n in sorted(self.values))

    def __eq__(self, other):
        return isinstance(other, Character) and self.N == other.N and self.k == other.k \
            and self.values == other.values

    def __hash__(self):
        return hash(self.key())

    def label(self) -> tuple[ParamScalar, ParamScalar]:
        """``(c, lambda)`` with ``c = chi(C)`` and ``lambda = chi(E) + k`` (N=1)."""
        if self.N != 1:
            raise IdoError("(c, lambda) labels are defined for N=1")
        return self.values["C"], self.values["Eps(1,1)"] + self.k

    def to_json(self) -> dict:
        d = {"name": self.name, "values": {n: str(v) for n, v in sorted(self.values.items())}}
        if self.N == 1:
            c, lam = self.label()
            d["c"] = str(c)
            d["lambda"] = str(lam)
        return d


def evaluate_character(chi: Character, x: IdoElement) -> ParamScalar:
    total = ZERO
    for w, c in expand_in_generators(x).items():
        t = c
        for name in w:
            t = t * chi.values[name]
            if not t:
                break
        total = total + t
    return total


def _values_from(ido: Ido, fee, eff, eps_diag, cval) -> dict[str, ParamScalar]:
    vals = {}
    for name, _ in ido.generators():
        if name.startswith("Fee"):
            vals[name] = scalar(fee)
        elif name.startswith("Eff"):
            vals[name] = scalar(eff)
        elif name.startswith("Eps"):
            r, s = name[4:-1].split(",")
            vals[name] = scalar(eps_diag) if r == s else ZERO
        else:
            vals[name] = scalar(cval)
    return vals


def chi_f(ido: Ido) -> Character:
    N, k = ido.N, ido.k
    a = k + Fraction(N, 2)
    return Character(N, k, _values_from(ido, 0, 0, HALF, a * (a + 2)), name="chi_f")


def chi_e(ido: Ido) -> Character:
    N, k = ido.N, ido.k
    a = k - Fraction(N, 2)
    return Character(N, k, _values_from(ido, 0, 0, -HALF, a * (a - 2)), name="chi_e")


def chi_f_by_projection(ido: Ido) -> Character:
    """chi_f as the coefficient of 1 in basis A (projection along the span of the other monomials)."""
    return Character(ido.N, ido.k, {n: g.constant_term() for n, g in ido.generators()}, name="chi_f")


def chi_e_by_theta(ido: Ido) -> Character:
    """chi_e computed as chi_f of D_{-k} composed with theta~_k."""
    return Character(ido.N, ido.k,
                     {n: ido.theta_tilde_k(g).constant_term() for n, g in ido.generators()},
                     name="chi_e")


@dataclass
class CharacterReport:
    ok: bool
    violations: list[tuple[str, str, str, str]]  # (g1, g2, chi(g1 g2), chi(g1) chi(g2))
    checked: int


def verify_character(chi: Character, ido: Ido, monomial_degree: int = 0) -> CharacterReport:
    """Multiplicativity on all ordered generator pairs (and optionally basis-B monomial pairs)."""
    if chi.N != ido.N or chi.k != ido.k:
        raise IdoError("character and algebra configuration differ")
    gens = ido.generators()
    violations = []
    checked = 0
    for n1, g1 in gens:
        if evaluate_character(chi, g1) != chi.values[n1]:
            violations.append((n1, "1", str(evaluate_character(chi, g1)), str(chi.values[n1])))
    for n1, g1 in gens:
        for n2, g2 in gens:
            checked += 1
            lhs = evaluate_character(chi, g1 * g2)
            rhs = chi.values[n1] * chi.values[n2]
            if lhs != rhs:
                violations.append((n1, n2, str(lhs), str(rhs)))
    if monomial_degree:
        monos = [IdoElement(ido, "B", {m: ONE}) for m in ido.basis_B(monomial_degree)]
        vals = [evaluate_character(chi, x) for x in monos]
        for i, a in enumerate(monos):
            for j, b in enumerate(monos):
                checked += 1
                lhs = evaluate_character(chi, a * b)
                if lhs != vals[i] * vals[j]:
                    violations.append((str(a), str(b), str(lhs), str(vals[i] * vals[j])))
    return CharacterReport(not violations, violations, checked)


# ---------------------------------------------------------------------------
# Polynomial root finding over Q(i)  (sympy)
# ---------------------------------------------------------------------------

_SYM = {name: sympy.Symbol(name) for name in ("k", "c", "lam", "mu")}


def to_sympy(p: ParamPoly):
    from .coeffs import PARAMS

    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        coef = sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)
        t = coef
        for j, e in enumerate(exp):
            if e:
                t = t * _SYM[PARAMS[j]] ** e
        expr += t
    return expr


def _from_sympy_number(x) -> GaussianRational:
    re, im = sympy.re(x), sympy.im(x)
    if not (re.is_Rational and im.is_Rational):
        raise IdoError(f"root {x} is not a Gaussian rational")
    return GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def gaussian_roots(p: ParamPoly, var: str) -> tuple[list[GaussianRational], list[str]]:
    """Roots in Q(i) of a univariate polynomial, plus any irreducible factors of degree > 1."""
    x = _SYM[var]
    expr = to_sympy(p)
    if expr == 0:
        raise IdoError("polynomial vanishes identically")
    poly = sympy.Poly(expr, x, domain=sympy.QQ_I)
    roots, leftovers = [], []
    for fac, _mult in poly.factor_list()[1]:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            roots.append(_from_sympy_number(-b / a))
        elif fac.degree() > 1:
            leftovers.append(str(fac.as_expr()))
    uniq = []
    for r in roots:
        if r not in uniq:
            uniq.append(r)
    return uniq, leftovers


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

@dataclass
class Enumeration:
    characters: list[Character]
    checks: list[tuple[str, bool, str]]
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def rank1_closed_forms(ido: Ido) -> list[Character]:
    """The five (c, lambda) families; duplicates removed for special numeric k."""
    if ido.N != 1:
        raise IdoError("closed forms are for N=1")
    k = ido.k
    pairs = [
        (ZERO, ZERO),
        ((k + Fraction(3, 2)) ** 2 - 1, k + HALF),
        ((k - Fraction(3, 2)) ** 2 - 1, k - HALF),
        ((k + Fraction(5, 2)) ** 2 - 1, k + Fraction(3, 2)),
        ((k - Fraction(5, 2)) ** 2 - 1, k - Fraction(3, 2)),
    ]
    out = []
    for c, lam in pairs:
        ch = Character(1, k, _values_from(ido, 0, 0, lam - k, c), name=f"V_k({c}, {lam})")
        if ch not in out:
            out.append(ch)
    return out


def _relation_polys(ido: Ido) -> list[ParamPoly]:
    """chi(g1 g2) - chi(g1) chi(g2) for generic values E -> lam - k, C -> c, others 0."""
    lam, c = ParamScalar.symbol("lam"), ParamScalar.symbol("c")
    chi = Character(1, ido.k, _values_from(ido, 0, 0, lam - ido.k, c))
    polys = []
    gens = ido.generators()
    for n1, g1 in gens:
        for n2, g2 in gens:
            d = evaluate_character(chi, g1 * g2) - chi.values[n1] * chi.values[n2]
            if not d.is_zero():
                if not d.is_polynomial():
                    raise IdoError("relation is not polynomial in the character values")
                polys.append(d.num)
    return polys


def _solve_rank1_numeric(ido: Ido) -> tuple[list[Character], list[tuple[str, bool, str]], list[str]]:
    checks = []
    notes = []
    g = ido.generator_dict()
    eps = g["Eps(1,1)"]
    # weight argument: non-zero ad(E)-eigenvalues force Fee, Eff into the kernel
    for name in ("Fee(1,1)", "Eff(1,1)"):
        br = eps.commutator(g[name])
        w = None
        for m, cm in br.to("B").terms.items():
            base = g[name].to("B").terms.get(m)
            if base is not None and base:
                w = cm / base
                break
        ok = w is not None and br == g[name].scale(w) and not w.is_zero()
        checks.append((f"{name} has non-zero ad(E)-weight {w}", ok, ""))
    polys = _relation_polys(ido)
    if not polys:
        raise IdoError("no relations found")
    sy = [to_sympy(p) for p in polys]
    lam_s, c_s = _SYM["lam"], _SYM["c"]
    # solve the two product relations; the rest are checked afterwards
    g_all = sympy.gcd_list(sy)
    if g_all.free_symbols:
        raise IdoError(f"relations share the factor {g_all}: infinitely many characters")
    p1 = sy[0]
    solutions = set()
    for p2 in sy[1:]:
        res = sympy.expand(sympy.resultant(p1, p2, c_s))
        if res == 0:
            continue
        lam_roots, left = gaussian_roots(_poly_from_sympy(res), "lam")
        if left:
            notes.append(f"irreducible factors without Gaussian-rational roots: {left}")
        for r in lam_roots:
            lam_val = sympy.Rational(r.re.numerator, r.re.denominator) + sympy.I * sympy.Rational(r.im.numerator, r.im.denominator)
            subs = [sympy.expand(s.subs(lam_s, lam_val)) for s in sy]
            gg = sympy.gcd_list([s for s in subs if s != 0]) if any(s != 0 for s in subs) else None
            if gg is None:
                raise IdoError(f"every relation vanishes at lambda = {r}: c is unconstrained")
            if not gg.free_symbols:
                continue
            c_roots, left2 = gaussian_roots(_poly_from_sympy(gg), "c")
            if left2:
                notes.append(f"irreducible factors in c at lambda={r}: {left2}")
            for cr in c_roots:
                solutions.add((r, cr))
        break
    else:
        raise IdoError("could not eliminate c from the relations")
    chars = []
    for lam_v, c_v in solutions:
        vals = _values_from(ido, 0, 0, scalar(lam_v) - ido.k, c_v)
        ch = Character(1, ido.k, vals, name=f"V_k({c_v}, {lam_v})")
        # every relation must hold, not just the two used for elimination
        if all(p.evaluate({"lam": lam_v, "c": c_v, "k": ido.k.constant_value()}) == 0 for p in polys):
            chars.append(ch)
    chars.sort(key=lambda ch: (str(ch.label()[1]), str(ch.label()[0])))
    return chars, checks, notes


def _poly_from_sympy(expr) -> ParamPoly:
    from .coeffs import PARAMS

    syms = [_SYM[n] for n in PARAMS]
    poly = sympy.Poly(sympy.expand(expr), *syms, domain=sympy.QQ_I)
    terms = {}
    for monom, coef in poly.terms():
        terms[tuple(monom)] = _from_sympy_number(coef)
    return ParamPoly(terms)


GENERIC_K = Fraction(7, 3)


def enumerate_characters(ido: Ido) -> Enumeration:
    """All characters of D_k.

    N=1, numeric k: solves the relation system.  N=1, symbolic k: the closed-form
    families, checked symbolically and shown complete at a generic rational k.
    N>=2: chi_f and chi_e after checking each forcing identity.
    """
    if ido.N == 1:
        if ido.k_is_symbolic:
            fams = rank1_closed_forms(ido)
            checks = []
            for ch in fams:
                rep = verify_character(ch, ido)
                checks.append((f"{ch.name} is multiplicative (symbolic k)", rep.ok, ""))
            generic = Ido(1, GENERIC_K)
            found, sub_checks, notes = _solve_rank1_numeric(generic)
            expected = {tuple((n, v.evaluate({"k": GENERIC_K})) for n, v in sorted(ch.values.items()))
                        for ch in fams}
            got = {tuple((n, v.constant_value()) for n, v in sorted(ch.values.items())) for ch in found}
            checks.extend(sub_checks)
            checks.append((f"completeness at k={GENERIC_K}: {len(got)} solutions match the families",
                           got == expected, ""))
            return Enumeration(fams, checks, notes)
        chars, checks, notes = _solve_rank1_numeric(ido)
        closed = rank1_closed_forms(ido)
        checks.append(("solutions agree with the closed forms", set(chars) == set(closed), ""))
        for ch in chars:
            ch.certificate = verify_character(ch, ido).violations
            checks.append((f"{ch.name} is multiplicative", not ch.certificate, ""))
        return Enumeration(chars, checks, notes)
    checks = forcing_checks(ido)
    cf, ce = chi_f(ido), chi_e(ido)
    for ch in (cf, ce):
        ch.certificate = verify_character(ch, ido).violations
        checks.append((f"{ch.name} is multiplicative", not ch.certificate, ""))
    return Enumeration([cf, ce], checks)


def forcing_checks(ido: Ido) -> list[tuple[str, bool, str]]:
    """Exact identities behind the uniqueness of chi_f, chi_e for N >= 2."""
    N = ido.N
    g = ido.generator_dict()
    Eps = {(r, s): g[f"Eps({r},{s})"] for r in range(1, N + 1) for s in range(1, N + 1)}
    tot = ido.frak_E_total()
    out = []
    ok = all(tot.commutator(x) == x.scale(-2) for n, x in g.items() if n.startswith("Fee")) and \
        all(tot.commutator(x) == x.scale(2) for n, x in g.items() if n.startswith("Eff"))
    out.append(("ad(E) weights of Fee, Eff are -2, +2 (so chi kills them)", ok, ""))
    ok = all(Eps[(r, r)].commutator(Eps[(r, s)]) == Eps[(r, s)] for r in range(1, N + 1)
             for s in range(1, N + 1) if r != s)
    out.append(("[E_rr, E_rs] = E_rs for r != s (so chi kills E_rs)", ok, ""))
    ok = all(Eps[(r, s)].commutator(Eps[(s, r)]) == Eps[(r, r)] - Eps[(s, s)] for r in range(1, N + 1)
             for s in range(1, N + 1) if r != s)
    out.append(("[E_rs, E_sr] = E_rr - E_ss (so all chi(E_rr) agree)", ok, ""))
    lhs = Eps[(1, 2)] * Eps[(2, 1)]
    rhs = (Eps[(1, 1)] - HALF) * (Eps[(2, 2)] + HALF)
    out.append(("E_12 E_21 = (E_11 - 1/2)(E_22 + 1/2), so x = +-1/2", lhs == rhs, ""))
    Fn, En = ido.F_nu(), ido.E_nu()
    ef = ido.e_t(1) * ido.f_t(1)
    lhs = g["Fee(1,1)"] * g["Eff(1,1)"]
    rhs = (Fn * En) * ef * (ef + 1)
    out.append(("(Fee11)(Eff11) = (F_nu E_nu)(e1 f1)(e1 f1 + 1)", lhs == rhs, ""))
    out.append(("e1 f1 = E_11 + 1/2", ef == Eps[(1, 1)] + HALF, ""))
    C = g["C"]
    out.append(("C = (k + E)(k + E + 2) + 4 F_nu E_nu", C == (tot + ido.k) * (tot + ido.k + 2) + (Fn * En).scale(4), ""))
    neg = ido.negated()
    ok = all(ido.theta_tilde_k(Eps[(r, r)]) == -neg.frak_E(r, r) for r in range(1, N + 1))
    out.append(("theta~_k(E_rr) = -E_rr, so x = -1/2 reduces to x = 1/2 at -k", ok, ""))
    ce = chi_e_by_theta(ido)
    out.append(("chi_f(-k) o theta~_k equals the closed form of chi_e", ce.values == chi_e(ido).values, ""))
    return out
