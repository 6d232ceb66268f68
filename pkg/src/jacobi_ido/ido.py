"""The invariant differential operator algebras D_k at L = I_N / 2pi.

Internally D_k is computed inside ``U(sl2_nu) (x) Weyl_N``: the tilde Jacobi algebra
with Z~ set to -1/2, where the nu-dressed sl2 commutes with the Weyl algebra
generated by f~_r, e~_r (``[e~_r, f~_s] = delta_rs``).  H~_nu at the far right is
replaced by ``q = k + N/2 + sum_r f~_r e~_r``.

Basis A monomials ``(iF, iE, If, Ie)`` stand for ``F~_nu^iF E~_nu^iE f~^If e~^Ie``.
Basis B monomials ``(iF, iE, If, Ie, iC)`` additionally carry ``C^iC`` and have
``iF * iE == 0``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from itertools import product as iproduct
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from .coeffs import K, ONE, ZERO, GaussianRational, ParamScalar, scalar
from .lie import Gen, LieError, Z, e, f, tE, tF, tH
from .linalg import nullspace, rank
from .pbw import UEA, UEAElement, jacobi_algebra, sl2_algebra

HALF = Fraction(1, 2)


class IdoError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Weyl algebra in normal order f~ ... e~
# ---------------------------------------------------------------------------

def _vec_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _unit(N: int, r: int, p: int = 1) -> tuple:
    return tuple(p if i == r else 0 for i in range(N))


_WEYL_MEMO: dict = {}


def _e_pow_f_pow(m: int, n: int) -> list[tuple[int, int, int]]:
    """e^m f^n = sum_t C(m,t) C(n,t) t! f^(n-t) e^(m-t) for [e, f] = 1."""
    return [(n - t, m - t, comb(m, t) * comb(n, t) * factorial(t)) for t in range(min(m, n) + 1)]


def weyl_mono_mul(a: tuple, b: tuple) -> dict:
    """``(f^A e^B)(f^C e^D)`` as ``{(If, Ie): int}``; ``a = (A, B)``, ``b = (C, D)``."""
    key = (a, b)
    hit = _WEYL_MEMO.get(key)
    if hit is not None:
        return hit
    (A, B), (C, D) = a, b
    per_index = []
    for r in range(len(A)):
        per_index.append([(A[r] + fp, ep + D[r], c) for fp, ep, c in _e_pow_f_pow(B[r], C[r])])
    out: dict = {}
    for choice in iproduct(*per_index):
        If = tuple(x[0] for x in choice)
        Ie = tuple(x[1] for x in choice)
        c = 1
        for x in choice:
            c *= x[2]
        out[(If, Ie)] = out.get((If, Ie), 0) + c
    _WEYL_MEMO[key] = out
    return out


def weyl_mul(x: Mapping, y: Mapping) -> dict:
    out: dict = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            cc = c1 * c2
            for m, c in weyl_mono_mul(m1, m2).items():
                _acc(out, m, cc * c)
    return out


def _acc(d: dict, k, c):
    if not c:
        return
    v = d.get(k)
    if v is None:
        d[k] = c
    else:
        v = v + c
        if v:
            d[k] = v
        else:
            del d[k]


# ---------------------------------------------------------------------------
# The algebra
# ---------------------------------------------------------------------------

_SL2_STRAIGHT: dict = {}


def _straighten_EF(b: int, c: int) -> dict:
    """E^b F^c in U(sl2) as ``{(i, j, l): coeff}`` for F^i E^j H^l."""
    key = (b, c)
    if key not in _SL2_STRAIGHT:
        alg = sl2_algebra()  # order y < x < h, i.e. F < E < H
        _SL2_STRAIGHT[key] = dict(alg.mono_mul((0, b, 0), (c, 0, 0)))
    return _SL2_STRAIGHT[key]


class Ido:
    """The algebra D_k of rank ``N`` (``k`` symbolic by default)."""

    _cache: dict = {}

    def __new__(cls, N: int, k=None):
        kk = K if k is None else scalar(k)
        key = (N, kk)
        inst = cls._cache.get(key)
        if inst is None:
            if not isinstance(N, int) or N < 1:
                raise IdoError("rank N must be a positive integer")
            inst = super().__new__(cls)
            inst._setup(N, kk)
            cls._cache[key] = inst
        return inst

    def _setup(self, N: int, k: ParamScalar):
        self.N = N
        self.k = k
        self.zero_vec = (0,) * N
        self._lock = threading.Lock()
        self._mul_memo: dict = {}
        self._a2b_memo: dict = {}
        self._b2a_memo: dict = {}
        self._qpow: dict = {}
        self._basis1_memo: dict = {}
        w0 = (self.zero_vec, self.zero_vec)
        q = {w0: k + Fraction(N, 2)}
        for r in range(N):
            q[(_unit(N, r), _unit(N, r))] = ONE
        self.q = q

    def __repr__(self):
        return f"Ido(N={self.N}, k={self.k})"

    @property
    def k_is_symbolic(self) -> bool:
        return not self.k.is_constant()

    def negated(self) -> "Ido":
        return Ido(self.N, -self.k)

    # -- Weyl helpers ---------------------------------------------------
    def q_shift_pow(self, s: int, l: int) -> dict:
        """``(q + s)^l`` in the Weyl algebra."""
        key = (s, l)
        hit = self._qpow.get(key)
        if hit is not None:
            return hit
        if l == 0:
            res = {(self.zero_vec, self.zero_vec): ONE}
        else:
            base = dict(self.q)
            w0 = (self.zero_vec, self.zero_vec)
            base[w0] = base[w0] + s
            if not base[w0]:
                del base[w0]
            res = weyl_mul(self.q_shift_pow(s, l - 1), base)
        self._qpow[key] = res
        return res

    # -- basis A products ------------------------------------------------
    def mono_mul_A(self, m1: tuple, m2: tuple) -> dict:
        key = (m1, m2)
        hit = self._mul_memo.get(key)
        if hit is not None:
            return hit
        a, b, If1, Ie1 = m1
        c, d, If2, Ie2 = m2
        w12 = weyl_mono_mul((If1, Ie1), (If2, Ie2))
        out: dict = {}
        for (i, j, l), coef in _straighten_EF(b, c).items():
            coef = scalar(coef)
            w = w12 if l == 0 else weyl_mul(w12, self.q_shift_pow(2 * d, l))
            for (If, Ie), cw in w.items():
                _acc(out, (a + i, j + d, If, Ie), coef * cw)
        with self._lock:
            self._mul_memo[key] = out
        return out

    def mul_A(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                cc = c1 * c2
                for m, c in self.mono_mul_A(m1, m2).items():
                    _acc(out, m, cc * c)
        return out

    # -- Casimir and conversions -------------------------------------------
    def casimir_A(self) -> dict:
        """``H_nu^2 + 2 H_nu + 4 F_nu E_nu`` with ``H_nu -> q``."""
        z = self.zero_vec
        w = weyl_mul(self.q_shift_pow(0, 2), {(z, z): ONE})
        for m, c in self.q.items():
            _acc(w, m, c * 2)
        out = {(0, 0, If, Ie): c for (If, Ie), c in w.items()}
        _acc(out, (1, 1, z, z), scalar(4))
        return out

    def mono_B_to_A(self, m: tuple) -> dict:
        hit = self._b2a_memo.get(m)
        if hit is not None:
            return hit
        iF, iE, If, Ie, iC = m
        if iC == 0:
            res = {(iF, iE, If, Ie): ONE}
        else:
            res = self.mul_A(self.mono_B_to_A((iF, iE, If, Ie, iC - 1)), self.casimir_A())
        self._b2a_memo[m] = res
        return res

    def mono_A_to_B(self, m: tuple) -> dict:
        hit = self._a2b_memo.get(m)
        if hit is not None:
            return hit
        a, b, If, Ie = m
        if a == 0 or b == 0:
            res = {(a, b, If, Ie, 0): ONE}
        else:
            # F^a E^b w = 1/4 C F^(a-1) E^(b-1) w - 1/4 F^(a-1) E^(b-1) w p(q + 2(b-1)),  p(t) = t^2 + 2t
            res: dict = {}
            quarter = scalar(Fraction(1, 4))
            for mm, c in self.mono_A_to_B((a - 1, b - 1, If, Ie)).items():
                _acc(res, mm[:4] + (mm[4] + 1,), c * quarter)
            s = 2 * (b - 1)
            p = weyl_mul({(If, Ie): ONE}, self.q_shift_pow(s, 2))
            for mw, c in weyl_mul({(If, Ie): ONE}, self.q_shift_pow(s, 1)).items():
                _acc(p, mw, c * 2)
            for (If2, Ie2), c in p.items():
                for mm, c2 in self.mono_A_to_B((a - 1, b - 1, If2, Ie2)).items():
                    _acc(res, mm, -c * c2 * quarter)
        self._a2b_memo[m] = res
        return res

    def A_to_B(self, terms: Mapping) -> dict:
        out: dict = {}
        for m, c in terms.items():
            for mm, c2 in self.mono_A_to_B(m).items():
                _acc(out, mm, c * c2)
        return out

    def B_to_A(self, terms: Mapping) -> dict:
        out: dict = {}
        for m, c in terms.items():
            for mm, c2 in self.mono_B_to_A(m).items():
                _acc(out, mm, c * c2)
        return out

    # -- element constructors --------------------------------------------
    def element(self, terms: Mapping, basis: str = "A") -> "IdoElement":
        out: dict = {}
        for m, c in terms.items():
            _acc(out, _norm_mono(m, basis), scalar(c))
        return IdoElement(self, basis, out)

    def one(self, basis: str = "A") -> "IdoElement":
        z = self.zero_vec
        return IdoElement(self, basis, {(0, 0, z, z) if basis == "A" else (0, 0, z, z, 0): ONE})

    def scalar(self, c, basis: str = "A") -> "IdoElement":
        return self.one(basis).scale(c)

    def monomial(self, iF=0, iE=0, If=None, Ie=None, iC=0, basis: str | None = None) -> "IdoElement":
        If = tuple(If) if If is not None else self.zero_vec
        Ie = tuple(Ie) if Ie is not None else self.zero_vec
        if len(If) != self.N or len(Ie) != self.N:
            raise IdoError("index vectors must have length N")
        if basis is None:
            basis = "B" if iC else "A"
        if basis == "A":
            el = IdoElement(self, "A", {(iF, iE, If, Ie): ONE})
            if iC:
                el = el * self.casimir().power(iC)
            return el
        if iF and iE:
            el = IdoElement(self, "A", {(iF, iE, If, Ie): ONE}).to("B")
            return el * self.casimir("B").power(iC) if iC else el
        return IdoElement(self, "B", {(iF, iE, If, Ie, iC): ONE})

    def casimir(self, basis: str = "A") -> "IdoElement":
        el = IdoElement(self, "A", self.casimir_A())
        return el.to(basis)

    def F_nu(self) -> "IdoElement":
        return self.monomial(iF=1)

    def E_nu(self) -> "IdoElement":
        return self.monomial(iE=1)

    def f_t(self, r: int) -> "IdoElement":
        return self.monomial(If=_unit(self.N, r - 1))

    def e_t(self, r: int) -> "IdoElement":
        return self.monomial(Ie=_unit(self.N, r - 1))

    def H_nu(self) -> "IdoElement":
        """H~_nu reduced at the far right, i.e. ``q``."""
        return IdoElement(self, "A", {(0, 0, If, Ie): c for (If, Ie), c in self.q.items()})

    def frak_E(self, r: int, s: int) -> "IdoElement":
        """``1/2 (f~_r e~_s + e~_s f~_r)``, computed by multiplication."""
        a = self.f_t(r) * self.e_t(s)
        b = self.e_t(s) * self.f_t(r)
        return (a + b).scale(HALF)

    def frak_E_total(self) -> "IdoElement":
        out = self.zero()
        for r in range(1, self.N + 1):
            out = out + self.frak_E(r, r)
        return out

    def zero(self, basis: str = "A") -> "IdoElement":
        return IdoElement(self, basis, {})

    def generators(self) -> list[tuple[str, "IdoElement"]]:
        """``F~_nu e~_r e~_s``, ``E~_nu f~_r f~_s`` (r <= s), all ``E_rs``, and ``C``."""
        N = self.N
        out = []
        for r in range(1, N + 1):
            for s in range(r, N + 1):
                out.append((f"Fee({r},{s})", self.F_nu() * self.e_t(r) * self.e_t(s)))
        for r in range(1, N + 1):
            for s in range(r, N + 1):
                out.append((f"Eff({r},{s})", self.E_nu() * self.f_t(r) * self.f_t(s)))
        for r in range(1, N + 1):
            for s in range(1, N + 1):
                out.append((f"Eps({r},{s})", self.frak_E(r, s)))
        out.append(("C", self.casimir()))
        return out

    def generator_dict(self) -> dict[str, "IdoElement"]:
        return dict(self.generators())

    # -- basis enumeration ------------------------------------------------
    def basis_B(self, degree: int) -> list[tuple]:
        """Basis-B monomials with ``2(iF+iE+iC) + |If| + |Ie| <= degree``."""
        N = self.N
        out = []
        vecs_by_size: dict[int, list[tuple]] = {}

        def vecs(n: int) -> list[tuple]:
            if n not in vecs_by_size:
                vecs_by_size[n] = sorted(_compositions(n, N), reverse=True)
            return vecs_by_size[n]

        for iC in range(degree // 2 + 1):
            for iF in range(degree // 2 + 1):
                for iE in range(degree // 2 + 1):
                    if iF and iE:
                        continue
                    rest = degree - 2 * (iF + iE + iC)
                    if rest < 0:
                        continue
                    for nf in range(rest + 1):
                        ne = 2 * iF + nf - 2 * iE
                        if ne < 0 or nf + ne > rest:
                            continue
                        for If in vecs(nf):
                            for Ie in vecs(ne):
                                out.append((iF, iE, If, Ie, iC))
        out.sort(key=lambda m: (b_degree(m), m))
        return out

    def basis_A(self, degree: int) -> list[tuple]:
        """Basis-A monomials with ``2(iF+iE) + |If| + |Ie| <= degree``."""
        N = self.N
        out = []
        for iF in range(degree // 2 + 1):
            for iE in range(degree // 2 + 1):
                rest = degree - 2 * (iF + iE)
                if rest < 0:
                    continue
                for nf in range(rest + 1):
                    ne = 2 * iF + nf - 2 * iE
                    if ne < 0 or nf + ne > rest:
                        continue
                    for If in _compositions(nf, N):
                        for Ie in _compositions(ne, N):
                            out.append((iF, iE, If, Ie))
        out.sort(key=lambda m: (a_degree(m), m))
        return out

    # -- reduction from the enveloping algebra -----------------------------
    def basis1_to_A(self, a: int, b: int, If: tuple, Ie: tuple) -> dict:
        """Class of the PBW monomial ``F~^a E~^b f~^If e~^Ie`` in basis A.

        Uses ``F~ = F~_nu + 1/2 sum f~_r^2`` and ``E~ = E~_nu - 1/2 sum e~_r^2``.
        """
        key = (a, b, If, Ie)
        hit = self._basis1_memo.get(key)
        if hit is not None:
            return hit
        N = self.N
        z = self.zero_vec
        Sf = {(_unit(N, r, 2), z): 1 for r in range(N)}
        Se = {(z, _unit(N, r, 2)): 1 for r in range(N)}

        def wpow(x, n):
            out = {(z, z): 1}
            for _ in range(n):
                out = weyl_mul(out, x)
            return out

        res: dict = {}
        for i in range(a + 1):
            for j in range(b + 1):
                c = Fraction(comb(a, i) * comb(b, j)) * HALF ** (a - i) * (-HALF) ** (b - j)
                w = weyl_mul(weyl_mul(wpow(Sf, a - i), wpow(Se, b - j)), {(If, Ie): 1})
                for (If2, Ie2), cw in w.items():
                    _acc(res, (i, j, If2, Ie2), scalar(c * cw))
        self._basis1_memo[key] = res
        return res

    def reduce(self, u: UEAElement, basis: str = "A") -> "IdoElement":
        """Image of a k^J-invariant element of U(g^J_N) (tilde presentation) in D_k."""
        alg = u.alg
        gens = alg.pres.gens
        N = self.N
        expected = jacobi_algebra(N, "tilde").pres.gens
        if gens[: len(expected)] != tuple(expected):
            raise IdoError("reduce expects an element of the tilde presentation with matching N")
        pos = {g: i for i, g in enumerate(gens)}
        iF, iE, iH = pos[tF], pos[tE], pos[tH]
        fpos = [pos[f(r, True)] for r in range(1, N + 1)]
        epos = [pos[e(r, True)] for r in range(1, N + 1)]
        zpos = {(r, s): pos[Z(r, s, True)] for r in range(1, N + 1) for s in range(r, N + 1)}
        wpos = pos.get(Gen("W"))
        # k^J-invariance: every monomial of tilde weight 0
        weights: dict[int, list] = {}
        for m, c in u.terms.items():
            wt = 2 * (m[iE] - m[iF]) + sum(m[p] for p in epos) - sum(m[p] for p in fpos)
            if wt:
                weights.setdefault(wt, []).append(m)
        if weights:
            wt = sorted(weights)[0]
            sample = u.monomial_str(weights[wt][0])
            raise IdoError(f"element is not k^J-invariant: nonzero component of ad(tH)-weight {wt} (e.g. {sample})")
        out: dict = {}
        for m, c in u.terms.items():
            coef = c
            zero = False
            for (r, s), p in zpos.items():
                if m[p]:
                    if r != s:
                        zero = True
                        break
                    coef = coef * scalar(-HALF) ** m[p]
            if zero:
                continue
            if wpos is not None and m[wpos]:
                coef = coef * scalar(-2) ** m[wpos]
            if m[iH]:
                coef = coef * self.k ** m[iH]
            If = tuple(m[p] for p in fpos)
            Ie = tuple(m[p] for p in epos)
            for mm, c2 in self.basis1_to_A(m[iF], m[iE], If, Ie).items():
                _acc(out, mm, coef * c2)
        return IdoElement(self, "A", out).to(basis)

    def lift(self, x: "IdoElement") -> UEAElement:
        """A preimage in U(g^J_N) (tilde presentation) of an element of D_k."""
        alg = jacobi_algebra(self.N, "tilde")
        N = self.N
        Fn = alg.gen(tF) - sum((alg.gen(f(r, True), 2) for r in range(1, N + 1)), alg.zero()).scale(HALF)
        En = alg.gen(tE) + sum((alg.gen(e(r, True), 2) for r in range(1, N + 1)), alg.zero()).scale(HALF)
        out = alg.zero()
        for (a, b, If, Ie), c in x.to("A").terms.items():
            t = Fn ** a * En ** b
            for r in range(N):
                if If[r]:
                    t = t * alg.gen(f(r + 1, True), If[r])
            for r in range(N):
                if Ie[r]:
                    t = t * alg.gen(e(r + 1, True), Ie[r])
            out = out + t.scale(c)
        return out

    def lift_casimir(self) -> UEAElement:
        """``H~_nu^2 + 2 H~_nu + 4 F~_nu E~_nu`` with the nu-images written in U (Z~ -> -1/2)."""
        alg = jacobi_algebra(self.N, "tilde")
        N = self.N
        Fn = alg.gen(tF) - sum((alg.gen(f(r, True), 2) for r in range(1, N + 1)), alg.zero()).scale(HALF)
        En = alg.gen(tE) + sum((alg.gen(e(r, True), 2) for r in range(1, N + 1)), alg.zero()).scale(HALF)
        Hn = alg.gen(tH) + sum((alg.gen(f(r, True)) * alg.gen(e(r, True)) for r in range(1, N + 1)),
                               alg.zero()) + Fraction(N, 2)
        return Hn * Hn + Hn.scale(2) + (Fn * En).scale(4)

    # -- theta~_k -----------------------------------------------------------
    def theta_tilde_k(self, x: "IdoElement") -> "IdoElement":
        """The isomorphism D_k -> D_{-k} on basis-A monomials."""
        target = self.negated()
        z = self.zero_vec
        out: dict = {}
        for (iF, iE, If, Ie), c in x.to("A").terms.items():
            sign = -1 if (iF + sum(If) + iE) % 2 else 1
            left = (0, iF, z, If)  # E~_nu^iF e~^If
            right = (iE, 0, Ie, z)  # F~_nu^iE f~^Ie
            for m, c2 in target.mono_mul_A(left, right).items():
                _acc(out, m, c * c2 * sign)
        return IdoElement(target, "A", out).to(x.basis)

    # -- commutant -----------------------------------------------------------
    def commutant(self, S: Sequence["IdoElement"], degree: int) -> list["IdoElement"]:
        """Basis (basis B) of ``{x : [x, s] = 0 for s in S}`` within degree ``<= degree``."""
        monos = self.basis_B(degree)
        rows_by_mono: dict = {}
        for j, m in enumerate(monos):
            xm = IdoElement(self, "B", {m: ONE})
            for si, s in enumerate(S):
                col = xm.commutator(s).to("B")
                for mm, c in col.terms.items():
                    rows_by_mono.setdefault((si, mm), {})[j] = c
        rows = []
        for key in sorted(rows_by_mono, key=lambda t: (t[0], b_degree(t[1]), t[1])):
            row = [ZERO] * len(monos)
            for j, c in rows_by_mono[key].items():
                row[j] = c
            rows.append(row)
        sols = nullspace(rows, len(monos))
        out = []
        for v in sols:
            out.append(IdoElement(self, "B", {monos[j]: c for j, c in enumerate(v) if c}))
        out.sort(key=lambda el: max((b_degree(m) for m in el.terms), default=0))
        return out

    def center(self, degree: int) -> list["IdoElement"]:
        return self.commutant([g for _, g in self.generators()], degree)


def b_degree(m: tuple) -> int:
    iF, iE, If, Ie, iC = m
    return 2 * (iF + iE + iC) + sum(If) + sum(Ie)


def a_degree(m: tuple) -> int:
    iF, iE, If, Ie = m[:4]
    return 2 * (iF + iE) + sum(If) + sum(Ie)


def _compositions(n: int, parts: int) -> list[tuple]:
    if parts == 1:
        return [(n,)]
    out = []
    for i in range(n, -1, -1):
        for rest in _compositions(n - i, parts - 1):
            out.append((i,) + rest)
    return out


def _norm_mono(m, basis: str) -> tuple:
    if basis == "A":
        iF, iE, If, Ie = m
        return (iF, iE, tuple(If), tuple(Ie))
    if basis == "B":
        iF, iE, If, Ie, iC = m
        if iF and iE:
            raise IdoError("basis-B monomials need iF * iE == 0")
        return (iF, iE, tuple(If), tuple(Ie), iC)
    raise IdoError(f"unknown basis {basis!r}")


class IdoElement:
    __slots__ = ("ido", "basis", "terms")

    def __init__(self, ido: Ido, basis: str, terms: dict):
        if basis not in ("A", "B"):
            raise IdoError(f"unknown basis {basis!r}")
        self.ido = ido
        self.basis = basis
        self.terms = {m: c for m, c in terms.items() if c}

    @property
    def N(self) -> int:
        return self.ido.N

    def to(self, basis: str) -> "IdoElement":
        if basis == self.basis:
            return self
        if basis == "A":
            return IdoElement(self.ido, "A", self.ido.B_to_A(self.terms))
        if basis == "B":
            return IdoElement(self.ido, "B", self.ido.A_to_B(self.terms))
        raise IdoError(f"unknown basis {basis!r}")

    def _same(self, other: "IdoElement"):
        if not isinstance(other, IdoElement):
            raise TypeError("expected an IdoElement")
        if other.ido is not self.ido:
            raise IdoError(f"configuration mismatch: {self.ido} vs {other.ido}")

    def _coerce(self, other) -> "IdoElement":
        if isinstance(other, IdoElement):
            self._same(other)
            return other.to(self.basis)
        return self.ido.scalar(other, self.basis)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return IdoElement(self.ido, self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return IdoElement(self.ido, self.basis, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s) -> "IdoElement":
        s = scalar(s)
        if not s:
            return IdoElement(self.ido, self.basis, {})
        return IdoElement(self.ido, self.basis, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, IdoElement):
            return self.scale(other)
        self._same(other)
        a = self.to("A").terms
        b = other.to("A").terms
        return IdoElement(self.ido, "A", self.ido.mul_A(a, b)).to(self.basis)

    def __rmul__(self, other):
        return self.scale(other)

    def power(self, n: int) -> "IdoElement":
        out = self.ido.one(self.basis)
        for _ in range(n):
            out = out * self
        return out

    __pow__ = power

    def commutator(self, other: "IdoElement") -> "IdoElement":
        return self * other - other * self

    def __eq__(self, other):
        if isinstance(other, IdoElement):
            return self.ido is other.ido and self.to("A").terms == other.to("A").terms
        if isinstance(other, (int, Fraction, GaussianRational, ParamScalar)):
            return self == self.ido.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.to("A").terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: tuple) -> ParamScalar:
        return self.terms.get(m, ZERO)

    def constant_term(self) -> ParamScalar:
        """Coefficient of the identity in basis A."""
        z = self.ido.zero_vec
        return self.to("A").terms.get((0, 0, z, z), ZERO)

    def degree(self) -> int:
        deg = b_degree if self.basis == "B" else a_degree
        return max((deg(m) for m in self.terms), default=-1)

    def is_balanced(self) -> bool:
        return all(2 * m[0] + sum(m[2]) == 2 * m[1] + sum(m[3]) for m in self.terms)

    def sorted_terms(self) -> list:
        deg = b_degree if self.basis == "B" else a_degree
        return sorted(self.terms.items(), key=lambda mc: (-deg(mc[0]), mc[0]))

    def monomial_str(self, m: tuple) -> str:
        return monomial_str(m)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            mono = monomial_str(m)
            cs = str(c)
            if mono == "1":
                pieces.append(cs if " " not in cs else f"({cs})")
            elif c == ONE:
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
        return f"IdoElement[{self.basis}]({self})"

    def to_json(self) -> dict:
        terms = []
        for m, c in sorted(self.terms.items()):
            d = {"iF": m[0], "iE": m[1], "If": list(m[2]), "Ie": list(m[3]), "iC": m[4] if len(m) > 4 else 0,
                 "coef": str(c)}
            terms.append(d)
        k = self.ido.k
        return {"N": self.N, "k": "symbolic" if not k.is_constant() else str(k), "basis": self.basis,
                "terms": terms}


def monomial_str(m: tuple) -> str:
    parts = []
    iF, iE, If, Ie = m[:4]
    if iF:
        parts.append("tF_nu" + (f"^{iF}" if iF > 1 else ""))
    if iE:
        parts.append("tE_nu" + (f"^{iE}" if iE > 1 else ""))
    for r, p in enumerate(If):
        if p:
            parts.append(f"tf{r + 1}" + (f"^{p}" if p > 1 else ""))
    for r, p in enumerate(Ie):
        if p:
            parts.append(f"te{r + 1}" + (f"^{p}" if p > 1 else ""))
    if len(m) > 4 and m[4]:
        parts.append("C" + (f"^{m[4]}" if m[4] > 1 else ""))
    return " ".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# The copy of gl_N
# ---------------------------------------------------------------------------

def verify_aN(ido: Ido, degree: int = 4) -> list[tuple[str, bool, str]]:
    """Checks on span{E_rs}; returns ``(check, ok, witness)`` triples."""
    N = ido.N
    Ers = {(r, s): ido.frak_E(r, s) for r in range(1, N + 1) for s in range(1, N + 1)}
    results = []
    # (i) closure and (ii) gl_N brackets
    closure_ok, gl_ok, witness = True, True, ""
    for (r, s), a in Ers.items():
        for (t, u), b in Ers.items():
            br = a.commutator(b)
            expect = ido.zero()
            if s == t:
                expect = expect + Ers[(r, u)]
            if u == r:
                expect = expect - Ers[(t, s)]
            if br != expect:
                gl_ok = False
                witness = witness or f"[E{r}{s}, E{t}{u}] = {br}"
                # closure: is br in the span at all?
                vecs = [[v.to("A").coefficient(mm) for mm in _support(Ers.values(), br)] for v in Ers.values()]
                target = [br.to("A").coefficient(mm) for mm in _support(Ers.values(), br)]
                if rank(vecs, len(target)) != rank(vecs + [target], len(target)):
                    closure_ok = False
    results.append(("aN closed under commutator", closure_ok, "" if closure_ok else witness))
    results.append(("eps_rs -> E_rs is a Lie map from gl_N", gl_ok, witness))
    # (iii) E spans the center of a_N
    tot = ido.frak_E_total()
    central = all(tot.commutator(x).is_zero() for x in Ers.values())
    keys = list(Ers)
    rows = []
    for b in Ers.values():
        cols = [Ers[kk].commutator(b).to("A") for kk in keys]
        support = sorted({m for c in cols for m in c.terms})
        for m in support:
            rows.append([c.coefficient(m) for c in cols])
    ns = nullspace(rows, len(keys)) if rows else [[ONE if i == j else ZERO for i in range(len(keys))] for j in range(len(keys))]
    center_dim_ok = len(ns) == 1
    results.append(("E = sum E_rr spans the center of aN", central and center_dim_ok,
                    "" if central and center_dim_ok else f"center dimension {len(ns)}"))
    # (iv) ad(E_rs) on generators
    ok4, wit4 = True, ""
    Fn, En, C = ido.F_nu(), ido.E_nu(), ido.casimir()
    for (r, s), a in Ers.items():
        checks = [(Fn, ido.zero()), (En, ido.zero()), (C, ido.zero())]
        for i in range(1, N + 1):
            checks.append((ido.f_t(i), ido.f_t(r) if s == i else ido.zero()))
            checks.append((ido.e_t(i), -ido.e_t(s) if r == i else ido.zero()))
        for x, expect in checks:
            if a.commutator(x) != expect:
                ok4, wit4 = False, f"ad(E{r}{s})({x}) = {a.commutator(x)}"
    results.append(("ad(E_rs) acts on generators as the stated derivation", ok4, wit4))
    # (v) ad(E)-eigenvalues of basis-B monomials
    ok5, wit5 = True, ""
    for m in ido.basis_B(degree):
        x = IdoElement(ido, "B", {m: ONE})
        lam = sum(m[2]) - sum(m[3])
        if tot.commutator(x) != x.scale(lam):
            ok5, wit5 = False, monomial_str(m)
            break
    results.append((f"ad(E) eigenvalue |If|-|Ie| on basis B to degree {degree}", ok5, wit5))
    return results


def _support(elems: Iterable[IdoElement], extra: IdoElement) -> list:
    s = set(extra.to("A").terms)
    for x in elems:
        s |= set(x.to("A").terms)
    return sorted(s)


def generator_count(N: int) -> int:
    """Closed form of the number of generators returned by :meth:`Ido.generators`."""
    return 2 * (N * (N + 1) // 2) + N * N + 1
