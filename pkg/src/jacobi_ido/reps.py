"""Rank-1 representation theory: the embedding into U(sl2) and weight modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .characters import Character, enumerate_characters, expand_in_generators, gaussian_roots
from .coeffs import ONE, PARAMS, ZERO, GaussianRational, ParamPoly, ParamScalar, scalar
from .ido import HALF, Ido, IdoElement, IdoError
from .linalg import rank
from .lie import H_SL2, X_SL2, Y_SL2
from .pbw import UEAElement, casimir_sl2, sl2_algebra

MU = ParamScalar.symbol("mu")
_K_IDX = PARAMS.index("k")
_MU_IDX = PARAMS.index("mu")


class RepError(ValueError):
    pass


# ---------------------------------------------------------------------------
# The embedding iota_k
# ---------------------------------------------------------------------------

def iota_images(k) -> dict[str, UEAElement]:
    k = scalar(k)
    alg = sl2_algebra()
    x, y, h = alg.gen(X_SL2), alg.gen(Y_SL2), alg.gen(H_SL2)
    return {
        "Fee(1,1)": y * (h - k - HALF),
        "Eff(1,1)": x * (h - k + HALF),
        "Eps(1,1)": h - k,
        "C": casimir_sl2(alg),
    }


def iota(a: IdoElement) -> UEAElement:
    """Image in U(sl2) of an element of D_k (N=1), via its generator-word expansion."""
    if a.ido.N != 1:
        raise RepError("the embedding into U(sl2) is defined for N=1 only")
    imgs = iota_images(a.ido.k)
    alg = sl2_algebra()
    out = alg.zero()
    for word, c in expand_in_generators(a).items():
        t = alg.one()
        for name in word:
            t = t * imgs[name]
        out = out + t.scale(c)
    return out


def theta_sl2(u: UEAElement) -> UEAElement:
    """The automorphism h -> -h, x -> -y, y -> -x of U(sl2)."""
    from .pbw import algebra_hom

    alg = sl2_algebra()
    images = {H_SL2: -alg.gen(H_SL2), X_SL2: -alg.gen(Y_SL2), Y_SL2: -alg.gen(X_SL2)}
    return algebra_hom(images, u, alg)


def embedding_checks(k=None) -> list[tuple[str, bool, str]]:
    """The defining relations hold for the images of the four generators."""
    ido = Ido(1, k)
    im = iota_images(ido.k)
    Fe, Ef, Ep, C = im["Fee(1,1)"], im["Eff(1,1)"], im["Eps(1,1)"], im["C"]
    kk = ido.k
    out = []
    out.append(("[iota E, iota Fee] = -2 iota Fee", Ep * Fe - Fe * Ep == Fe.scale(-2), ""))
    out.append(("[iota E, iota Eff] = 2 iota Eff", Ep * Ef - Ef * Ep == Ef.scale(2), ""))
    rhs_fe = (Ep + HALF) * (Ep + Fraction(3, 2)) * (C - (Ep + kk) * (Ep + kk + 2))
    out.append(("iota Fee iota Eff = 1/4 (E+1/2)(E+3/2)(C-(E+k)(E+k+2))", Fe * Ef == rhs_fe.scale(Fraction(1, 4)), ""))
    rhs_ef = (Ep - HALF) * (Ep - Fraction(3, 2)) * (C - (Ep + kk) * (Ep + kk - 2))
    out.append(("iota Eff iota Fee = 1/4 (E-1/2)(E-3/2)(C-(E+k)(E+k-2))", Ef * Fe == rhs_ef.scale(Fraction(1, 4)), ""))
    out.append(("iota C is central", all(C * g == g * C for g in (Fe, Ef, Ep)), ""))
    # with theta: x -> -y, y -> -x the two sides differ by mu_-1 (a sign on Fee, Eff)
    ok_exact, ok_sign = True, True
    for name, g in ido.generators():
        lhs = theta_sl2(iota(g))
        rhs = iota(ido.theta_tilde_k(g))
        ok_exact = ok_exact and lhs == iota(mu_d(ido.theta_tilde_k(g), -1))
        sign = -1 if name[:3] in ("Fee", "Eff") else 1
        ok_sign = ok_sign and lhs == rhs.scale(sign)
    out.append(("theta o iota_k = iota_-k o mu_-1 o theta~_k on generators", ok_exact, ""))
    out.append(("theta o iota_k and iota_-k o theta~_k agree on E, C and differ by sign on Fee, Eff",
                ok_sign, ""))
    out.append(("iota(E) = h - k", iota(ido.generator_dict()["Eps(1,1)"]) == Ep, ""))
    return out


def iota_rank(degree: int, k=None) -> tuple[int, int]:
    """(rank of the images, number of basis-B monomials) in degree <= ``degree``."""
    ido = Ido(1, k)
    monos = ido.basis_B(degree)
    imgs = [iota(IdoElement(ido, "B", {m: ONE})) for m in monos]
    support = sorted({m for u in imgs for m in u.terms})
    rows = [[u.terms.get(m, ZERO) for u in imgs] for m in support]
    return rank(rows, len(imgs)), len(imgs)


# ---------------------------------------------------------------------------
# Exact membership tests
# ---------------------------------------------------------------------------

def _check_params(*xs: ParamScalar):
    for x in xs:
        extra = x.variables() - {"k"}
        if extra:
            raise RepError(f"needs numeric k/c/lambda: {x} involves {sorted(extra)}")


def _generic_roots(p: ParamScalar) -> list[GaussianRational] | None:
    """Roots in the symbol ``mu`` valid identically in ``k``; None if ``p`` vanishes identically."""
    num = p.num
    if num.is_zero():
        return None
    if num.degree_in(_K_IDX) == 0:
        parts = [num]
    else:
        parts = [c for c in num.coefficients_in(_K_IDX).values()]
    from .coeffs import poly_gcd

    g = ParamPoly()
    for part in parts:
        g = poly_gcd(g, part)
    if g.is_constant():
        return []
    roots, _ = gaussian_roots(g, "mu")
    return roots


def _nonneg_integer(r: GaussianRational) -> int | None:
    if r.im == 0 and r.re.denominator == 1 and r.re >= 0:
        return int(r.re)
    return None


def _integer(r: GaussianRational) -> int | None:
    if r.im == 0 and r.re.denominator == 1:
        return int(r.re)
    return None


def _first_clause(lam: ParamScalar, k: ParamScalar, c: ParamScalar, direction: int):
    """Smallest n >= 0 such that mu = lam + direction*2n lies in M^- (direction -1) or M^+ (+1)."""
    mu = lam + MU * (2 * direction)
    s = -direction  # M^-: k + 1/2, k + 3/2, (mu - 1)^2 ; M^+: k - 1/2, k - 3/2, (mu + 1)^2
    clauses = [
        (f"mu = k {'+' if s > 0 else '-'} 1/2", mu - k - HALF * s),
        (f"mu = k {'+' if s > 0 else '-'} 3/2", mu - k - Fraction(3, 2) * s),
        (f"(mu {'-' if s > 0 else '+'} 1)^2 = c + 1", (mu - s) * (mu - s) - c - 1),
    ]
    best = None
    for name, poly in clauses:
        roots = _generic_roots(poly)
        ns = [0] if roots is None else [n for n in map(_nonneg_integer, roots) if n is not None]
        if ns and (best is None or min(ns) < best[0]):
            best = (min(ns), name)
    return best


@dataclass(frozen=True)
class DeltaSet:
    """The weights ``lam + 2j`` with ``lo <= j <= hi`` (None = unbounded)."""

    lam: ParamScalar
    lo: int | None
    hi: int | None
    lower_clause: str | None = field(default=None, compare=False)
    upper_clause: str | None = field(default=None, compare=False)

    @property
    def m_minus(self) -> ParamScalar | None:
        return None if self.lo is None else self.lam + 2 * self.lo

    @property
    def m_plus(self) -> ParamScalar | None:
        return None if self.hi is None else self.lam + 2 * self.hi

    @property
    def dimension(self) -> int | None:
        if self.lo is None or self.hi is None:
            return None
        return self.hi - self.lo + 1

    def offset(self, mu) -> int | None:
        """``j`` with ``mu = lam + 2j`` if ``mu`` lies in the coset, else None."""
        d = (scalar(mu) - self.lam) * HALF
        if not d.is_constant():
            return None
        return _integer(d.constant_value())

    def __contains__(self, mu) -> bool:
        j = self.offset(mu)
        if j is None:
            return False
        return (self.lo is None or j >= self.lo) and (self.hi is None or j <= self.hi)

    def weights(self, radius: int = 3) -> list[ParamScalar]:
        """Weights in increasing order, truncated to ``|j| <= radius`` around lam (or the ends)."""
        lo = self.lo if self.lo is not None else -radius
        hi = self.hi if self.hi is not None else radius
        if self.lo is not None and self.hi is None:
            hi = max(hi, lo + 2 * radius)
        if self.hi is not None and self.lo is None:
            lo = min(lo, hi - 2 * radius)
        return [self.lam + 2 * j for j in range(lo, hi + 1)]

    def key(self):
        """Canonical invariant: the coset and the two bounds."""
        lo = None if self.lo is None else str(self.m_minus)
        hi = None if self.hi is None else str(self.m_plus)
        rep = lo if lo is not None else hi
        if rep is None:
            # whole coset: normalise the representative modulo 2
            rep = _coset_rep(self.lam)
        return (rep, lo, hi)

    def to_json(self) -> dict:
        return {"lambda": str(self.lam),
                "m_minus": "-inf" if self.lo is None else str(self.m_minus),
                "m_plus": "+inf" if self.hi is None else str(self.m_plus),
                "lower_clause": self.lower_clause, "upper_clause": self.upper_clause}


def _coset_rep(lam: ParamScalar) -> str:
    """A canonical representative of lam + 2Z (shift the rational real constant into [0, 2))."""
    const = lam.num.terms.get((0,) * len(PARAMS)) if lam.is_polynomial() else None
    if const is None:
        return str(lam)
    re = const.re
    shift = (re // 2) * 2
    return str(lam - shift)


def delta_set(c, lam, k) -> DeltaSet:
    """``m^-`` and ``m^+`` for ``V_k(c, lam)``; symbolic ``k`` is treated generically."""
    c, lam, k = scalar(c), scalar(lam), scalar(k)
    _check_params(c, lam, k)
    low = _first_clause(lam, k, c, -1)
    high = _first_clause(lam, k, c, +1)
    return DeltaSet(lam, None if low is None else -low[0], None if high is None else high[0],
                    None if low is None else low[1], None if high is None else high[1])


# ---------------------------------------------------------------------------
# Weight modules
# ---------------------------------------------------------------------------

def R_coef(mu, c, k) -> ParamScalar:
    """Eigenvalue of (Fee)(Eff) on weight mu."""
    return Fraction(1, 4) * (mu - k + HALF) * (mu - k + Fraction(3, 2)) * (c - mu * mu - 2 * mu)


def L_coef(mu, c, k) -> ParamScalar:
    """Eigenvalue of (Eff)(Fee) on weight mu."""
    return Fraction(1, 4) * (mu - k - HALF) * (mu - k - Fraction(3, 2)) * (c - mu * mu + 2 * mu)


KINDS = ("Vk", "L", "Mminus", "Mplus", "P")


@dataclass
class WeightModule:
    """A weight module of D_k (N=1) with one-dimensional weight spaces.

    ``a(mu)`` is the coefficient of ``v_{mu+2}`` in ``Eff v_mu``; ``b(mu)`` that
    of ``v_{mu-2}`` in ``Fee v_mu``.  For modules coming from sl2, ``xs``/``ys``
    are the sl2 coefficients and ``a``, ``b`` are obtained through iota_k.
    """

    kind: str
    c: ParamScalar
    lam: ParamScalar
    k: ParamScalar
    delta: DeltaSet
    pieces: list  # (region, a(mu), b(mu)) closed forms in the symbol mu
    params: dict = field(default_factory=dict)
    xs: Callable | None = None
    ys: Callable | None = None

    def region(self, mu) -> str:
        j = self.delta.offset(mu)
        if j is None:
            raise RepError(f"{mu} is not in the weight coset of {self.lam}")
        return "upper" if j >= 0 else "lower"

    def _piece(self, mu):
        reg = self.region(mu) if len(self.pieces) > 1 else self.pieces[0][0]
        for name, a, b in self.pieces:
            if name == reg:
                return a, b
        raise RepError("no closed form for this region")

    def a(self, mu) -> ParamScalar:
        mu = scalar(mu)
        if mu not in self.delta:
            raise RepError(f"{mu} is not a weight")
        if (mu + 2) not in self.delta:
            return ZERO
        if self.kind == "Vk":
            j = self.delta.offset(mu)
            if j >= 0:
                return ONE
            return L_coef(mu + 2, self.c, self.k)
        return _eval_mu(self._piece(mu)[0], mu)

    def b(self, mu) -> ParamScalar:
        mu = scalar(mu)
        if mu not in self.delta:
            raise RepError(f"{mu} is not a weight")
        if (mu - 2) not in self.delta:
            return ZERO
        if self.kind == "Vk":
            j = self.delta.offset(mu)
            if j <= 0:
                return ONE
            return R_coef(mu - 2, self.c, self.k)
        return _eval_mu(self._piece(mu)[1], mu)

    def action(self, gen: str, mu) -> tuple[ParamScalar, ParamScalar]:
        """(target weight, coefficient) for a generator acting on ``v_mu``."""
        mu = scalar(mu)
        if gen.startswith("Fee"):
            return mu - 2, self.b(mu)
        if gen.startswith("Eff"):
            return mu + 2, self.a(mu)
        if gen.startswith("Eps"):
            return mu, mu - self.k
        if gen == "C":
            return mu, self.c
        raise RepError(f"unknown generator {gen}")

    def weights(self, radius: int = 3) -> list[ParamScalar]:
        return self.delta.weights(radius)

    @property
    def dimension(self) -> int | None:
        return self.delta.dimension

    def window(self, radius: int = 3) -> list[dict]:
        rows = []
        for mu in self.weights(radius):
            rows.append({"mu": str(mu), "Fee": str(self.b(mu)), "Eff": str(self.a(mu)),
                         "Eps": str(mu - self.k), "C": str(self.c)})
        return rows

    def to_json(self, radius: int = 3) -> dict:
        return {"kind": self.kind, "c": str(self.c), "lambda": str(self.lam), "k": _k_str(self.k),
                "m_minus": "-inf" if self.delta.lo is None else str(self.delta.m_minus),
                "m_plus": "+inf" if self.delta.hi is None else str(self.delta.m_plus),
                "dimension": self.dimension, "window": self.window(radius)}

    def diagram(self, radius: int = 3) -> str:
        """Plain-text weight diagram, lowest weight on the left."""
        ws = self.weights(radius)
        left = "... " if self.delta.lo is None else ""
        right = " ..." if self.delta.hi is None else ""
        cells = []
        for mu in ws:
            cells.append(f"[{mu}]")
        arrows = []
        for mu in ws[:-1]:
            up, down = self.a(mu), self.b(mu + 2)
            arrows.append(f" -{'x' if not up else '>'}{'x' if not down else '<'}- ")
        line = cells[0]
        for arr, cell in zip(arrows, cells[1:]):
            line += arr + cell
        return left + line + right


def _k_str(k: ParamScalar) -> str:
    return "symbolic" if not k.is_constant() else str(k)


def _eval_mu(expr: ParamScalar, mu: ParamScalar) -> ParamScalar:
    return expr.subs({"mu": mu})


def _sl2_pieces(xs: ParamScalar, ys: ParamScalar, k: ParamScalar) -> list:
    a = (MU - k + HALF) * xs
    b = (MU - k - HALF) * ys
    return [("all", a, b)]


def build_module(kind: str, c=None, lam=None, k=None, n: int | None = None) -> WeightModule:
    """Construct ``V_k(c, lam)``, ``L(n)``, ``M^-(lam)``, ``M^+(lam)`` or ``P(c, lam)``.

    The sl2 modules become D_k-modules through iota_k.
    """
    k = scalar(0) if k is None else scalar(k)
    if kind == "Vk":
        if c is None or lam is None:
            raise RepError("Vk needs c and lambda")
        c, lam = scalar(c), scalar(lam)
        delta = delta_set(c, lam, k)
        pieces = [("upper", ONE, R_coef(MU - 2, c, k)), ("lower", L_coef(MU + 2, c, k), ONE)]
        return WeightModule("Vk", c, lam, k, delta, pieces)
    if kind == "L":
        if n is None:
            if lam is None:
                raise RepError("L needs n")
            lv = scalar(lam)
            if not lv.is_constant() or _nonneg_integer(lv.constant_value()) is None:
                raise RepError(f"L(n) needs a non-negative integer n, got {lam}")
            n = _nonneg_integer(lv.constant_value())
        if n < 0:
            raise RepError("L(n) needs n >= 0")
        lam = scalar(n)
        cc = scalar(n * n + 2 * n)
        xs = (cc - MU * MU - 2 * MU) * Fraction(1, 4)
        delta = DeltaSet(lam, -n, 0, "sl2 lowest weight", "sl2 highest weight")
        m = WeightModule("L", cc, lam, k, delta, _sl2_pieces(xs, ONE, k), {"n": n})
        m.xs, m.ys = xs, ONE
        return m
    if kind == "Mminus":
        lam = scalar(lam)
        if lam.is_constant() and _nonneg_integer(lam.constant_value()) is not None:
            raise RepError("M^-(lambda) needs lambda outside N (otherwise it is reducible)")
        cc = lam * lam + 2 * lam
        xs = (cc - MU * MU - 2 * MU) * Fraction(1, 4)
        delta = DeltaSet(lam, None, 0, None, "sl2 highest weight")
        m = WeightModule("Mminus", cc, lam, k, delta, _sl2_pieces(xs, ONE, k))
        m.xs, m.ys = xs, ONE
        return m
    if kind == "Mplus":
        lam = scalar(lam)
        if lam.is_constant() and _nonneg_integer((-lam).constant_value()) is not None:
            raise RepError("M^+(lambda) needs lambda outside -N (otherwise it is reducible)")
        cc = lam * lam - 2 * lam
        ys = (cc - (MU - 2) * (MU - 2) - 2 * (MU - 2)) * Fraction(1, 4)
        delta = DeltaSet(lam, 0, None, "sl2 lowest weight", None)
        m = WeightModule("Mplus", cc, lam, k, delta, _sl2_pieces(ONE, ys, k))
        m.xs, m.ys = ONE, ys
        return m
    if kind == "P":
        if c is None or lam is None:
            raise RepError("P needs c and lambda")
        c, lam = scalar(c), scalar(lam)
        _check_params(c, lam)
        roots = _generic_roots((lam + 2 * MU + 1) * (lam + 2 * MU + 1) - c - 1)
        if roots is None or any(_integer(r) is not None for r in roots):
            raise RepError("P(c, lambda) needs (mu + 1)^2 != c + 1 on the whole coset")
        ys = (c - (MU - 2) * (MU - 2) - 2 * (MU - 2)) * Fraction(1, 4)
        delta = DeltaSet(lam, None, None)
        m = WeightModule("P", c, lam, k, delta, _sl2_pieces(ONE, ys, k))
        m.xs, m.ys = ONE, ys
        return m
    raise RepError(f"unknown module kind {kind!r}; expected one of {', '.join(KINDS)}")


# ---------------------------------------------------------------------------
# Checks on modules
# ---------------------------------------------------------------------------

def module_relation_checks(m: WeightModule, radius: int = 4) -> list[tuple[str, bool, str]]:
    """The defining relations as identities in mu, at the boundary, and on a window."""
    c, k = m.c, m.k
    out = []
    if m.kind == "Vk":
        (_, a_up, b_up), (_, a_lo, b_lo) = m.pieces
        # FE on v_mu: b(mu+2) a(mu) = R(mu)
        up = b_up.subs({"mu": MU + 2}) * a_up - R_coef(MU, c, k)
        lo = b_lo.subs({"mu": MU + 2}) * a_lo - R_coef(MU, c, k)
        out.append(("FE identity in mu, mu >= lambda", up.is_zero(), str(up)))
        out.append(("FE identity in mu, mu + 2 <= lambda", lo.is_zero(), str(lo)))
        up = a_up.subs({"mu": MU - 2}) * b_up - L_coef(MU, c, k)
        lo = a_lo.subs({"mu": MU - 2}) * b_lo - L_coef(MU, c, k)
        out.append(("EF identity in mu, mu - 2 >= lambda", up.is_zero(), str(up)))
        out.append(("EF identity in mu, mu <= lambda", lo.is_zero(), str(lo)))
        if m.delta.hi is not None:
            top = m.delta.m_plus
            out.append(("R vanishes at m+", R_coef(top, c, k).is_zero(), str(top)))
        if m.delta.lo is not None:
            bot = m.delta.m_minus
            out.append(("L vanishes at m-", L_coef(bot, c, k).is_zero(), str(bot)))
    else:
        _, a, b = m.pieces[0]
        fe = b.subs({"mu": MU + 2}) * a - R_coef(MU, c, k)
        ef = a.subs({"mu": MU - 2}) * b - L_coef(MU, c, k)
        out.append(("FE identity in mu", fe.is_zero(), str(fe)))
        out.append(("EF identity in mu", ef.is_zero(), str(ef)))
        # x y v_mu = ys(mu) xs(mu-2) v_mu and y x v_mu = xs(mu) ys(mu+2) v_mu
        comm = m.ys * m.xs.subs({"mu": MU - 2}) - m.xs * m.ys.subs({"mu": MU + 2}) - MU
        out.append(("[x, y] = h on v_mu", comm.is_zero(), str(comm)))
        # truncation at a finite end is compatible with the action
        if m.delta.hi is not None:
            top = m.delta.m_plus
            ok = m.xs.subs({"mu": top}).is_zero() or m.ys.subs({"mu": top + 2}).is_zero()
            out.append(("truncation above the top weight is consistent", ok, str(top)))
        if m.delta.lo is not None:
            bot = m.delta.m_minus
            ok = m.ys.subs({"mu": bot}).is_zero() or m.xs.subs({"mu": bot - 2}).is_zero()
            out.append(("truncation below the bottom weight is consistent", ok, str(bot)))
        ok, witness = True, ""
        for mu in m.weights(radius):
            xy = m.ys.subs({"mu": mu}) * m.xs.subs({"mu": mu - 2}) if (mu - 2) in m.delta else ZERO
            yx = m.xs.subs({"mu": mu}) * m.ys.subs({"mu": mu + 2}) if (mu + 2) in m.delta else ZERO
            if xy - yx != mu:
                ok, witness = False, f"mu={mu}"
                break
        out.append(("[x, y] = h on the materialized window", ok, witness))
    # explicit window: both products act by the right scalars
    ok, witness = True, ""
    for mu in m.weights(radius):
        fe = m.b(mu + 2) * m.a(mu) if (mu + 2) in m.delta else ZERO
        ef = m.a(mu - 2) * m.b(mu) if (mu - 2) in m.delta else ZERO
        if fe != R_coef(mu, c, k) or ef != L_coef(mu, c, k):
            ok, witness = False, f"mu={mu}"
            break
    out.append(("FE and EF on the materialized window", ok, witness))
    return out


def interior_zeros(m: WeightModule) -> list[tuple[str, ParamScalar]]:
    """Weights mu with a(mu) = 0 and mu+2 a weight, or b(mu) = 0 and mu-2 a weight."""
    cands = set()
    if m.kind == "Vk":
        exprs = [L_coef(MU + 2, m.c, m.k), R_coef(MU - 2, m.c, m.k)]
    else:
        exprs = [m.pieces[0][1], m.pieces[0][2]]
    for e in exprs:
        roots = _generic_roots(e)
        if roots is None:
            roots = [r.constant_value() for r in m.weights(2)]
        for r in roots:
            cands.add(scalar(r))
    out = []
    for mu in sorted(cands, key=str):
        if mu not in m.delta:
            continue
        if (mu + 2) in m.delta and m.a(mu).is_zero():
            out.append(("raising", mu))
        if (mu - 2) in m.delta and m.b(mu).is_zero():
            out.append(("lowering", mu))
    return out


def is_irreducible(m: WeightModule) -> bool:
    return not interior_zeros(m)


def equivalent(a: WeightModule, b: WeightModule) -> bool:
    """Isomorphism of the irreducible modules V_k(c, lam): same c and lam' in Delta(c, lam)."""
    if a.k != b.k:
        return False
    return a.c == b.c and b.lam in delta_set(a.c, a.lam, a.k)


def invariants(m: WeightModule) -> tuple:
    """The pair (c, Delta) as a hashable key."""
    return (str(m.c), m.delta.key())


# ---------------------------------------------------------------------------
# Restriction of sl2-modules
# ---------------------------------------------------------------------------

@dataclass
class Restriction:
    module: WeightModule
    case: str  # "irreducible" | "split-up" | "split-down"
    sub_weights: list
    quotient_weights: list
    sub_label: tuple | None
    quotient_label: tuple | None
    checks: list

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_json(self) -> dict:
        return {"kind": self.module.kind, "k": _k_str(self.module.k), "case": self.case,
                "sub_weights": [str(w) for w in self.sub_weights],
                "quotient_weights": [str(w) for w in self.quotient_weights],
                "sub": None if self.sub_label is None else {"c": str(self.sub_label[0]), "lambda": str(self.sub_label[1])},
                "quotient": None if self.quotient_label is None else
                {"c": str(self.quotient_label[0]), "lambda": str(self.quotient_label[1])},
                "checks": [{"check": n, "pass": ok, "witness": w} for n, ok, w in self.checks]}


def _span_invariant(m: WeightModule, span: list, inside: Callable) -> tuple[bool, str]:
    """Check that each generator maps ``v_mu`` (mu in span) into the part described by ``inside``."""
    for mu in span:
        for g in ("Fee(1,1)", "Eff(1,1)", "Eps(1,1)", "C"):
            target, coef = m.action(g, mu)
            if coef and target in m.delta and not inside(target):
                return False, f"{g} v_{mu} leaves the span"
    return True, ""


def restrict_sl2(m: WeightModule, radius: int = 4) -> Restriction:
    """Restrict an sl2-module to D_k through iota_k and split off the invariant part."""
    if m.kind not in ("L", "Mminus", "Mplus", "P"):
        raise RepError("restriction applies to sl2-modules L, Mminus, Mplus, P")
    k, c = m.k, m.c
    checks = module_relation_checks(m, radius)
    up_pair = (k + HALF) in m.delta and (k - Fraction(3, 2)) in m.delta
    down_pair = (k - HALF) in m.delta and (k + Fraction(3, 2)) in m.delta
    weights = m.weights(radius + 2)
    if up_pair:
        cut = k + HALF
        sub = [w for w in weights if m.delta.offset(w) >= m.delta.offset(cut)]
        quot = [w for w in weights if m.delta.offset(w) < m.delta.offset(cut)]
        sub_label, quot_label = (c, k + HALF), (c, k - Fraction(3, 2))
        case = "split-up"
    elif down_pair:
        cut = k - HALF
        sub = [w for w in weights if m.delta.offset(w) <= m.delta.offset(cut)]
        quot = [w for w in weights if m.delta.offset(w) > m.delta.offset(cut)]
        sub_label, quot_label = (c, k - HALF), (c, k + Fraction(3, 2))
        case = "split-down"
    else:
        zeros = interior_zeros(m)
        checks.append(("no interior zero of the D_k action", not zeros, str(zeros)))
        return Restriction(m, "irreducible", weights, [], None, None, checks)
    j0 = m.delta.offset(cut)
    in_sub = (lambda w: m.delta.offset(w) >= j0) if case == "split-up" else (lambda w: m.delta.offset(w) <= j0)
    ok, wit = _span_invariant(m, sub, in_sub)
    checks.append(("claimed submodule is invariant under all four generators", ok, wit))
    # the complementary span is not invariant (the split is proper)
    ok2, _ = _span_invariant(m, quot, lambda w: not in_sub(w))
    checks.append(("complement is not invariant", not ok2, ""))
    for label, part, name in ((sub_label, sub, "sub"), (quot_label, quot, "quotient")):
        d = delta_set(label[0], label[1], k)
        want = [w for w in weights if w in d]
        fin = d.dimension is not None and m.delta.dimension is not None
        match = want == part if (fin or d.lo is not None or d.hi is not None) else False
        if not fin:
            # infinite parts: compare on the window only, and the bounded end exactly
            match = all((w in d) for w in part) and all((w in part) for w in want)
        checks.append((f"{name} weights equal Delta_k{tuple(str(x) for x in label)}", match,
                       f"{[str(w) for w in part]} vs {[str(w) for w in want]}"))
    if m.delta.dimension is not None:
        d1 = delta_set(*sub_label, k).dimension
        d2 = delta_set(*quot_label, k).dimension
        checks.append(("dim(sub) + dim(quotient) = dim", d1 is not None and d2 is not None and
                       d1 + d2 == m.delta.dimension, f"{d1} + {d2} vs {m.delta.dimension}"))
    return Restriction(m, case, sub, quot, sub_label, quot_label, checks)


# ---------------------------------------------------------------------------
# Automorphisms and isomorphisms
# ---------------------------------------------------------------------------

def mu_d(x: IdoElement, d) -> IdoElement:
    """The automorphism induced by x -> d x, y -> y / d: multiplies by d^(iE - iF) in basis B."""
    d = scalar(d)
    if d.is_zero():
        raise RepError("mu_d needs d != 0")
    out = {}
    for m, c in x.to("B").terms.items():
        iF, iE = m[0], m[1]
        e = iE - iF
        out[m] = c * (d ** e if e >= 0 else d.inverse() ** (-e))
    return IdoElement(x.ido, "B", out).to(x.basis)


def mu_d_checks(d, d2, k=None) -> list[tuple[str, bool, str]]:
    ido = Ido(1, k)
    gens = ido.generators()
    g = dict(gens)
    d, d2 = scalar(d), scalar(d2)
    out = []
    out.append(("mu_d(Fee) = Fee / d", mu_d(g["Fee(1,1)"], d) == g["Fee(1,1)"].scale(d.inverse()), ""))
    out.append(("mu_d(Eff) = d Eff", mu_d(g["Eff(1,1)"], d) == g["Eff(1,1)"].scale(d), ""))
    out.append(("mu_d fixes E and C", mu_d(g["Eps(1,1)"], d) == g["Eps(1,1)"] and mu_d(g["C"], d) == g["C"], ""))
    ok = all(mu_d(a * b, d) == mu_d(a, d) * mu_d(b, d) for _, a in gens for _, b in gens)
    out.append(("mu_d is multiplicative on generator pairs", ok, ""))
    ok = all(mu_d(mu_d(a, d2), d) == mu_d(a, d * d2) for _, a in gens)
    out.append(("mu_d o mu_d' = mu_dd'", ok, ""))
    ok = all(mu_d(mu_d(a, d.inverse()), d) == a for _, a in gens)
    out.append(("mu_d o mu_1/d = identity", ok, ""))
    return out


def iso_decision(k, k2) -> bool:
    """D_k and D_k' are isomorphic exactly when k = k' or k = -k'."""
    k, k2 = scalar(k), scalar(k2)
    return k == k2 or k == -k2


def character_labels(chars: Iterable[Character]) -> set[tuple[str, str]]:
    return {(str(ch.label()[0]), str(ch.label()[1])) for ch in chars}


def character_set_consistency(k) -> tuple[bool, str]:
    """The (c, lambda) labels at -k are the labels at k with lambda negated."""
    k = scalar(k)
    at_k = enumerate_characters(Ido(1, k)).characters
    at_neg = enumerate_characters(Ido(1, -k)).characters
    mapped = {(str(c), str(-lam)) for c, lam in (ch.label() for ch in at_k)}
    got = character_labels(at_neg)
    return mapped == got, f"{sorted(mapped)} vs {sorted(got)}"


def one_dimensional_labels(k) -> list[tuple[ParamScalar, ParamScalar]]:
    """(c, lambda) of the five closed-form characters, which give the 1-dimensional V_k."""
    from .characters import rank1_closed_forms

    return [ch.label() for ch in rank1_closed_forms(Ido(1, k))]
