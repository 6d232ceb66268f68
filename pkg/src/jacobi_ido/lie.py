"""Lie algebras by structure constants: the Jacobi algebra in two bases, and sl2.

Linear combinations are plain dicts ``{Gen: GaussianRational}`` with no zero values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from .coeffs import ONE_G, ZERO_G, GaussianRational, I_G
from .linalg import determinant, inverse_matrix

HALF = GaussianRational(Fraction(1, 2))


class Gen(NamedTuple):
    """A basis symbol.

    ``kind`` is one of ``E F H e f Z W x y h``; ``idx`` holds the indices of
    ``e``/``f`` (one) and ``Z`` (two, sorted); ``tilde`` marks the tilde basis.
    """

    kind: str
    idx: tuple = ()
    tilde: bool = False

    @property
    def name(self) -> str:
        base = self.kind
        if self.idx:
            if all(i < 10 for i in self.idx):
                base += "".join(str(i) for i in self.idx)
            else:
                base += "(" + ",".join(str(i) for i in self.idx) + ")"
        return ("t" + base) if self.tilde else base

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"Gen({self.name})"


def Z(r: int, s: int, tilde: bool = False) -> Gen:
    return Gen("Z", (min(r, s), max(r, s)), tilde)


def e(r: int, tilde: bool = False) -> Gen:
    return Gen("e", (r,), tilde)


def f(r: int, tilde: bool = False) -> Gen:
    return Gen("f", (r,), tilde)


E, F, H = Gen("E"), Gen("F"), Gen("H")
tE, tF, tH = Gen("E", (), True), Gen("F", (), True), Gen("H", (), True)
W = Gen("W")
X_SL2, Y_SL2, H_SL2 = Gen("x"), Gen("y"), Gen("h")

LinComb = dict  # Gen -> GaussianRational


def lc(*pairs) -> dict:
    """``lc((g, c), ...)`` builds a combination, dropping zeros and merging repeats."""
    out: dict = {}
    for g, c in pairs:
        c = GaussianRational.coerce(c)
        v = out.get(g, ZERO_G) + c
        if v:
            out[g] = v
        else:
            out.pop(g, None)
    return out


def lc_add(a: Mapping, b: Mapping, scale: GaussianRational = ONE_G) -> dict:
    out = dict(a)
    for g, c in b.items():
        v = out.get(g, ZERO_G) + c * scale
        if v:
            out[g] = v
        else:
            out.pop(g, None)
    return out


def lc_scale(a: Mapping, s) -> dict:
    s = GaussianRational.coerce(s)
    if not s:
        return {}
    return {g: c * s for g, c in a.items()}


def lc_str(a: Mapping) -> str:
    if not a:
        return "0"
    parts = []
    for g, c in a.items():
        if c == ONE_G:
            parts.append(g.name)
        elif c == -ONE_G:
            parts.append("-" + g.name)
        elif " " not in str(c):
            parts.append(f"{c}*{g.name}")
        else:
            parts.append(f"({c})*{g.name}")
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class LieError(ValueError):
    pass


class LiePresentation:
    """Ordered basis plus an antisymmetric bracket table.

    ``table[(i, j)]`` for ``i < j`` holds ``[g_i, g_j]`` as ``{index: coefficient}``;
    missing pairs bracket to zero.  The generator order is the PBW order.
    """

    def __init__(self, name: str, gens: Sequence[Gen], table: Mapping[tuple, Mapping[int, GaussianRational]],
                 *, check_jacobi: bool = True):
        self.name = name
        self.gens = tuple(gens)
        self.index = {g: i for i, g in enumerate(self.gens)}
        if len(self.index) != len(self.gens):
            raise LieError("duplicate generators")
        self.table: dict[tuple, dict[int, GaussianRational]] = {}
        for (i, j), val in table.items():
            val = {t: c for t, c in val.items() if c}
            if i == j:
                if val:
                    raise LieError(f"[{self.gens[i]}, {self.gens[i]}] must vanish")
                continue
            if i > j:
                i, j = j, i
                val = {t: -c for t, c in val.items()}
            if val:
                self.table[(i, j)] = val
        self.central = frozenset(
            i for i in range(len(self.gens))
            if not any(i in pair for pair in self.table)
        )
        if check_jacobi:
            bad = self.jacobi_violations()
            if bad:
                raise LieError(f"Jacobi identity fails on {bad[0]}")

    @property
    def dim(self) -> int:
        return len(self.gens)

    def __repr__(self):
        return f"LiePresentation({self.name!r}, dim={self.dim})"

    def gen_index(self, g: Gen) -> int:
        try:
            return self.index[g]
        except KeyError:
            raise LieError(f"unknown generator {g} in {self.name}") from None

    def bracket_idx(self, i: int, j: int) -> dict[int, GaussianRational]:
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        v = self.table.get((j, i))
        return {t: -c for t, c in v.items()} if v else {}

    def bracket(self, a: Mapping, b: Mapping) -> dict:
        """Bilinear extension of the table to combinations keyed by :class:`Gen`."""
        out: dict = {}
        for ga, ca in a.items():
            i = self.gen_index(ga)
            for gb, cb in b.items():
                j = self.gen_index(gb)
                for t, c in self.bracket_idx(i, j).items():
                    g = self.gens[t]
                    v = out.get(g, ZERO_G) + ca * cb * c
                    if v:
                        out[g] = v
                    else:
                        out.pop(g, None)
        return out

    def bracket_gens(self, a: Gen, b: Gen) -> dict:
        return self.bracket({a: ONE_G}, {b: ONE_G})

    def jacobi_violations(self) -> list[tuple]:
        bad = []
        n = self.dim
        for i, j, k in combinations(range(n), 3):
            a, b, c = ({self.gens[t]: ONE_G} for t in (i, j, k))
            total = lc_add(lc_add(self.bracket(self.bracket(a, b), c),
                                  self.bracket(self.bracket(b, c), a)),
                           self.bracket(self.bracket(c, a), b))
            if total:
                bad.append((self.gens[i], self.gens[j], self.gens[k]))
        return bad

    def with_central(self, g: Gen) -> "LiePresentation":
        """The presentation with one extra central generator appended last."""
        gens = self.gens + (g,)
        return LiePresentation(self.name + "+" + g.name, gens, self.table, check_jacobi=False)

    def bracket_table_rows(self) -> list[tuple[str, str, str]]:
        rows = []
        for (i, j), v in sorted(self.table.items()):
            comb = {self.gens[t]: c for t, c in v.items()}
            rows.append((self.gens[i].name, self.gens[j].name, lc_str(comb)))
        return rows


# ---------------------------------------------------------------------------
# The Jacobi algebra
# ---------------------------------------------------------------------------

def jacobi_generators(N: int, tilde: bool = False) -> list[Gen]:
    """PBW order: F < E < f_1..f_N < e_1..e_N < H < Z_11 < Z_12 < ... < Z_NN."""
    gens = [Gen("F", (), tilde), Gen("E", (), tilde)]
    gens += [f(r, tilde) for r in range(1, N + 1)]
    gens += [e(r, tilde) for r in range(1, N + 1)]
    gens.append(Gen("H", (), tilde))
    gens += [Z(r, s, tilde) for r in range(1, N + 1) for s in range(r, N + 1)]
    return gens


def _standard_bracket(a: Gen, b: Gen) -> dict:
    """Brackets of the standard basis, listed once per unordered pair type."""
    ka, kb = a.kind, b.kind
    pair = {ka, kb}
    if ka == kb and a.idx == b.idx:
        return {}
    if "Z" in pair:
        return {}
    if (ka, kb) == ("E", "F"):
        return lc((H, 1))
    if (ka, kb) == ("H", "E"):
        return lc((E, 2))
    if (ka, kb) == ("H", "F"):
        return lc((F, -2))
    if (ka, kb) == ("H", "e"):
        return lc((b, 1))
    if (ka, kb) == ("H", "f"):
        return lc((b, -1))
    if (ka, kb) == ("E", "f"):
        return lc((e(b.idx[0]), -1))
    if (ka, kb) == ("F", "e"):
        return lc((f(b.idx[0]), -1))
    if (ka, kb) == ("e", "f"):
        return lc((Z(a.idx[0], b.idx[0]), -2))
    return None  # not listed in this orientation


def _standard_table(gens: Sequence[Gen]) -> dict:
    index = {g: i for i, g in enumerate(gens)}
    table = {}
    for i, a in enumerate(gens):
        for j, b in enumerate(gens):
            if i >= j:
                continue
            val = _standard_bracket(a, b)
            if val is None:
                val = _standard_bracket(b, a)
                val = lc_scale(val, -1) if val else {}
            if val:
                table[(i, j)] = {index[g]: c for g, c in val.items()}
    return table


def tilde_in_standard(g: Gen) -> dict:
    """Expansion of a tilde-basis vector in the standard basis."""
    if not g.tilde:
        raise LieError(f"{g} is not a tilde generator")
    half_i = GaussianRational(0, Fraction(1, 2))
    if g.kind == "H":
        return lc((F, I_G), (E, -I_G))
    if g.kind == "E":
        return lc((H, HALF), (F, half_i), (E, half_i))
    if g.kind == "F":
        return lc((H, HALF), (F, -half_i), (E, -half_i))
    if g.kind == "Z":
        return lc((Gen("Z", g.idx), half_i))
    if g.kind == "e":
        return lc((f(g.idx[0]), HALF), (e(g.idx[0]), half_i))
    if g.kind == "f":
        return lc((f(g.idx[0]), HALF), (e(g.idx[0]), -half_i))
    raise LieError(f"no tilde expansion for {g}")


_CONVERSION_CACHE: dict[int, tuple] = {}


def _conversion(N: int):
    if N not in _CONVERSION_CACHE:
        std = jacobi_generators(N)
        til = jacobi_generators(N, tilde=True)
        sidx = {g: i for i, g in enumerate(std)}
        # columns: tilde vectors expressed in the standard basis
        mat = [[ZERO_G] * len(std) for _ in std]
        for j, t in enumerate(til):
            for g, c in tilde_in_standard(t).items():
                mat[sidx[g]][j] = c
        inv = inverse_matrix(mat)
        _CONVERSION_CACHE[N] = (std, til, mat, inv)
    return _CONVERSION_CACHE[N]


def _infer_N(comb: Mapping) -> int:
    n = 1
    for g in comb:
        for i in g.idx:
            n = max(n, i)
    return n


def basis_convert(comb: Mapping, source: str, target: str, N: int | None = None) -> dict:
    """Rewrite a combination between the ``standard`` and ``tilde`` bases."""
    for b in (source, target):
        if b not in ("standard", "tilde"):
            raise LieError(f"unknown basis {b!r}")
    if source == target:
        return dict(comb)
    if N is None:
        N = _infer_N(comb)
    std, til, mat, inv = _conversion(N)
    src, dst = (til, std) if source == "tilde" else (std, til)
    m = mat if source == "tilde" else inv
    sidx = {g: i for i, g in enumerate(src)}
    out: dict = {}
    for g, c in comb.items():
        if g not in sidx:
            raise LieError(f"{g} is not a {source} generator for N={N}")
        j = sidx[g]
        for i, row in enumerate(m):
            if row[j]:
                out = lc_add(out, {dst[i]: row[j] * c})
    return out


_JACOBI_CACHE: dict[tuple, LiePresentation] = {}


def make_jacobi(N: int, basis: str = "standard") -> LiePresentation:
    """The Jacobi algebra of rank ``N``.

    The tilde presentation is computed by transporting brackets through the
    change of basis, not by copying the standard table.
    """
    if not isinstance(N, int) or N < 1:
        raise LieError("rank N must be a positive integer")
    key = (N, basis)
    if key in _JACOBI_CACHE:
        return _JACOBI_CACHE[key]
    if basis == "standard":
        gens = jacobi_generators(N)
        pres = LiePresentation(f"g^J_{N}", gens, _standard_table(gens))
    elif basis == "tilde":
        std = make_jacobi(N, "standard")
        gens = jacobi_generators(N, tilde=True)
        index = {g: i for i, g in enumerate(gens)}
        table = {}
        for i, j in combinations(range(len(gens)), 2):
            a = basis_convert({gens[i]: ONE_G}, "tilde", "standard", N)
            b = basis_convert({gens[j]: ONE_G}, "tilde", "standard", N)
            val = basis_convert(std.bracket(a, b), "standard", "tilde", N)
            if val:
                table[(i, j)] = {index[g]: c for g, c in val.items()}
        pres = LiePresentation(f"g^J_{N}~", gens, table)
    else:
        raise LieError(f"unknown basis {basis!r}")
    _JACOBI_CACHE[key] = pres
    return pres


def make_sl2() -> LiePresentation:
    """sl2 with PBW order y < x < h."""
    gens = [Y_SL2, X_SL2, H_SL2]
    idx = {g: i for i, g in enumerate(gens)}
    table = {
        (idx[X_SL2], idx[Y_SL2]): {idx[H_SL2]: ONE_G},
        (idx[H_SL2], idx[X_SL2]): {idx[X_SL2]: GaussianRational(2)},
        (idx[H_SL2], idx[Y_SL2]): {idx[Y_SL2]: GaussianRational(-2)},
    }
    return LiePresentation("sl2", gens, table)


def tilde_weight(g: Gen) -> int:
    """ad(tH)-weight of a tilde generator (0 for central symbols)."""
    return {"E": 2, "F": -2, "e": 1, "f": -1}.get(g.kind, 0)


# ---------------------------------------------------------------------------
# Linear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearLieMap:
    """Linear map between presentations given on generators."""

    source: LiePresentation
    target: LiePresentation
    images: Mapping[Gen, dict] = field(default_factory=dict)
    name: str = ""

    def image(self, g: Gen) -> dict:
        if g not in self.source.index:
            raise LieError(f"{g} not in source presentation {self.source.name}")
        return dict(self.images.get(g, {}))

    def apply(self, comb: Mapping) -> dict:
        out: dict = {}
        for g, c in comb.items():
            out = lc_add(out, self.image(g), c)
        return out

    def compose(self, inner: "LinearLieMap") -> "LinearLieMap":
        """``self o inner``."""
        return LinearLieMap(inner.source, self.target,
                            {g: self.apply(inner.image(g)) for g in inner.source.gens},
                            name=f"{self.name}o{inner.name}")

    def power(self, n: int) -> "LinearLieMap":
        result = identity_map(self.source)
        for _ in range(n):
            result = self.compose(result)
        return result

    def same_as(self, other: "LinearLieMap") -> bool:
        return all(self.image(g) == other.image(g) for g in self.source.gens)

    def matrix(self) -> list[list[GaussianRational]]:
        tidx = self.target.index
        mat = [[ZERO_G] * self.source.dim for _ in range(self.target.dim)]
        for j, g in enumerate(self.source.gens):
            for t, c in self.image(g).items():
                mat[tidx[t]][j] = c
        return mat

    def bracket_violations(self) -> list[tuple[Gen, Gen]]:
        bad = []
        for a, b in combinations(self.source.gens, 2):
            lhs = self.target.bracket(self.image(a), self.image(b))
            rhs = self.apply(self.source.bracket_gens(a, b))
            if lhs != rhs:
                bad.append((a, b))
        return bad

    def is_automorphism(self) -> bool:
        if self.source.dim != self.target.dim:
            return False
        if not determinant(self.matrix()):
            return False
        return not self.bracket_violations()

    def inverse(self) -> "LinearLieMap":
        inv = inverse_matrix(self.matrix())
        images = {}
        for j, g in enumerate(self.target.gens):
            images[g] = {self.source.gens[i]: inv[i][j] for i in range(self.source.dim) if inv[i][j]}
        return LinearLieMap(self.target, self.source, images, name=f"{self.name}^-1")


def identity_map(p: LiePresentation) -> LinearLieMap:
    return LinearLieMap(p, p, {g: {g: ONE_G} for g in p.gens}, name="id")


def _checked(m: LinearLieMap) -> LinearLieMap:
    bad = m.bracket_violations()
    if bad:
        raise LieError(f"{m.name} does not preserve the bracket of {bad[0]}")
    if not determinant(m.matrix()):
        raise LieError(f"{m.name} is not invertible")
    return m


def _theta_images(N: int, tilde: bool) -> dict:
    mk = lambda kind, idx=(): Gen(kind, idx, tilde)
    images = {
        mk("H"): {mk("H"): -ONE_G},
        mk("E"): {mk("F"): -ONE_G},
        mk("F"): {mk("E"): -ONE_G},
    }
    for r in range(1, N + 1):
        images[e(r, tilde)] = {f(r, tilde): ONE_G}
        images[f(r, tilde)] = {e(r, tilde): -ONE_G}
        for s in range(r, N + 1):
            images[Z(r, s, tilde)] = {Z(r, s, tilde): ONE_G}
    return images


def theta(N: int) -> LinearLieMap:
    p = make_jacobi(N)
    return _checked(LinearLieMap(p, p, _theta_images(N, False), name="theta"))


def theta_tilde(N: int) -> LinearLieMap:
    """The order-4 automorphism acting on tilde symbols by the same pattern as theta."""
    p = make_jacobi(N, "tilde")
    return _checked(LinearLieMap(p, p, _theta_images(N, True), name="theta~"))


def tau(N: int) -> LinearLieMap:
    """X -> X~ as an automorphism of the standard presentation."""
    p = make_jacobi(N)
    images = {g: tilde_in_standard(Gen(g.kind, g.idx, True)) for g in p.gens}
    return _checked(LinearLieMap(p, p, images, name="tau"))


def in_standard_coordinates(m: LinearLieMap, N: int) -> LinearLieMap:
    """Transport a map on the tilde presentation to the standard one."""
    p = make_jacobi(N)
    images = {}
    for g in p.gens:
        t = basis_convert({g: ONE_G}, "standard", "tilde", N)
        images[g] = basis_convert(m.apply(t), "tilde", "standard", N)
    return LinearLieMap(p, p, images, name=m.name)


def mu_M(M: Sequence[Sequence]) -> LinearLieMap:
    """Identity on sl2~, e~ -> M e~, f~ -> M f~, Z~ -> M Z~ M^T (tilde presentation)."""
    N = len(M)
    Mg = [[GaussianRational.coerce(x) for x in row] for row in M]
    if any(len(row) != N for row in Mg):
        raise LieError("M must be square")
    if not determinant(Mg):
        raise LieError("M is singular")
    p = make_jacobi(N, "tilde")
    images = {g: {g: ONE_G} for g in (tE, tF, tH)}
    for r in range(1, N + 1):
        images[e(r, True)] = lc(*((e(s, True), Mg[r - 1][s - 1]) for s in range(1, N + 1)))
        images[f(r, True)] = lc(*((f(s, True), Mg[r - 1][s - 1]) for s in range(1, N + 1)))
    for r in range(1, N + 1):
        for s in range(r, N + 1):
            pairs = []
            for a in range(1, N + 1):
                for b in range(1, N + 1):
                    pairs.append((Z(a, b, True), Mg[r - 1][a - 1] * Mg[s - 1][b - 1]))
            images[Z(r, s, True)] = lc(*pairs)
    return _checked(LinearLieMap(p, p, images, name="mu_M"))


def gl_bracket_elementary(N: int, r: int, s: int, t: int, u: int) -> dict:
    """[eps_rs, eps_tu] in gl_N as ``{(i, j): coefficient}``."""
    out: dict = {}
    if s == t:
        out[(r, u)] = out.get((r, u), 0) + 1
    if u == r:
        out[(t, s)] = out.get((t, s), 0) - 1
    return {k: GaussianRational(v) for k, v in out.items() if v}


def iter_generator_triples(p: LiePresentation) -> Iterable[tuple[Gen, Gen, Gen]]:
    return combinations(p.gens, 3)
