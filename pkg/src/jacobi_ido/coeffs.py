"""Exact scalars: Gaussian rationals and rational functions in formal parameters.

Three layers:

* :class:`GaussianRational` -- ``a + b i`` with ``a, b`` in Q.
* :class:`ParamPoly` -- polynomials over Q(i) in the parameters
  ``k, c, lam, mu`` (in that fixed order).
* :class:`ParamScalar` -- reduced fractions of two ``ParamPoly``.

Everything is immutable and canonical, so ``==`` and ``hash`` are structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Union

PARAMS = ("k", "c", "lam", "mu")
NPARAMS = len(PARAMS)
_ZERO_EXP = (0,) * NPARAMS


class PoleError(ZeroDivisionError):
    """Raised when a denominator vanishes (division by zero, or a pole at an assignment)."""


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot make a rational from {x!r}")


def _frac_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussianRational:
    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)
        self._hash = None

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        if isinstance(x, str):
            return parse_gaussian(x)
        raise TypeError(f"cannot coerce {x!r} to GaussianRational")

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.re) if not self.im else hash((self.re, self.im))
        return self._hash

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re + other, self.im)
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re - other, self.im)
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re * other, self.im * other)
            return NotImplemented
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise PoleError("division by zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        if not other.im:
            if not other.re:
                raise PoleError("division by zero Gaussian rational")
            return GaussianRational(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE_G
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __str__(self):
        re, im = self.re, self.im
        if not im:
            return _frac_str(re)
        mag = abs(im)
        if mag == 1:
            ims = "i"
        elif mag.denominator == 1:
            ims = f"{mag.numerator}i"
        else:
            ims = f"({_frac_str(mag)})i"
        if im < 0:
            ims = "-" + ims
        if not re:
            return ims
        if ims.startswith("-"):
            return f"{_frac_str(re)} - {ims[1:]}"
        return f"{_frac_str(re)} + {ims}"

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"


ZERO_G = GaussianRational(0)
ONE_G = GaussianRational(1)
I_G = GaussianRational(0, 1)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse the rendering produced by ``str(GaussianRational)``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    # split at a top-level +/- that is not the leading sign
    depth = 0
    cut = None
    for pos, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and pos > 0 and depth == 0:
            cut = pos
    if cut is not None and s.endswith("i"):
        re_part = _frac(s[:cut])
        im_part = _parse_imag(s[cut:])
        return GaussianRational(re_part, im_part)
    if s.endswith("i"):
        return GaussianRational(0, _parse_imag(s))
    return GaussianRational(_frac(s))


def _parse_imag(s: str) -> Fraction:
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        s = s[1:]
    body = s[:-1]
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if body == "":
        return Fraction(sign)
    return sign * _frac(body)


# ---------------------------------------------------------------------------
# Polynomials in the parameters
# ---------------------------------------------------------------------------

def _grlex_key(exp):
    return (sum(exp), exp)


class ParamPoly:
    """Polynomial over Q(i) in the fixed parameters ``k, c, lam, mu``.

    ``terms`` maps exponent 4-tuples to non-zero :class:`GaussianRational`.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None, *, _clean: bool = False):
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            self.terms = {}
            for exp, cf in terms.items():
                cf = GaussianRational.coerce(cf)
                if cf:
                    exp = tuple(exp)
                    if len(exp) != NPARAMS:
                        raise ValueError("exponent vector has wrong length")
                    self.terms[exp] = cf
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, value) -> "ParamPoly":
        value = GaussianRational.coerce(value)
        return cls({_ZERO_EXP: value}, _clean=True) if value else cls()

    @classmethod
    def var(cls, name: str, power: int = 1) -> "ParamPoly":
        if name not in PARAMS:
            raise ValueError(f"unknown parameter {name!r}; declared: {PARAMS}")
        exp = [0] * NPARAMS
        exp[PARAMS.index(name)] = power
        return cls({tuple(exp): ONE_G}, _clean=True)

    @classmethod
    def coerce(cls, x) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        return cls.const(x)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(_ZERO_EXP) == ONE_G

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(_ZERO_EXP, ZERO_G)

    def variables(self) -> set[int]:
        out = set()
        for exp in self.terms:
            for j, e in enumerate(exp):
                if e:
                    out.add(j)
        return out

    def degree_in(self, j: int) -> int:
        return max((exp[j] for exp in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(exp) for exp in self.terms), default=-1)

    def leading_exp(self):
        return max(self.terms, key=_grlex_key)

    def leading_coeff(self) -> GaussianRational:
        return self.terms[self.leading_exp()]

    # -- arithmetic -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == ParamPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return ParamPoly({e: -c for e, c in self.terms.items()}, _clean=True)

    def __add__(self, other):
        other = ParamPoly.coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return ParamPoly(out, _clean=True)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other):
        return ParamPoly.coerce(other) - self

    def scale(self, c: GaussianRational) -> "ParamPoly":
        if not c:
            return ParamPoly()
        if c == ONE_G:
            return self
        return ParamPoly({e: v * c for e, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(GaussianRational.coerce(other))
        other = ParamPoly.coerce(other)
        if not self.terms or not other.terms:
            return ParamPoly()
        if len(other.terms) == 1 and _ZERO_EXP in other.terms:
            return self.scale(other.terms[_ZERO_EXP])
        if len(self.terms) == 1 and _ZERO_EXP in self.terms:
            return other.scale(self.terms[_ZERO_EXP])
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return ParamPoly({e: c for e, c in out.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE_P
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self) -> "ParamPoly":
        if not self.terms:
            return self
        return self.scale(self.leading_coeff().inverse())

    def divmod_exact(self, other: "ParamPoly") -> "ParamPoly":
        """Exact quotient ``self / other``; raises ``ValueError`` if it does not divide."""
        if other.is_zero():
            raise PoleError("polynomial division by zero")
        if other.is_constant():
            return self.scale(other.constant_value().inverse())
        lead = other.leading_exp()
        lc_inv = other.terms[lead].inverse()
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            e = max(rem, key=_grlex_key)
            diff = tuple(a - b for a, b in zip(e, lead))
            if min(diff) < 0:
                raise ValueError("polynomial division is not exact")
            q = rem[e] * lc_inv
            quot[diff] = q
            for oe, oc in other.terms.items():
                t = tuple(a + b for a, b in zip(oe, diff))
                v = rem.get(t, ZERO_G) - q * oc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return ParamPoly(quot, _clean=True)

    # -- evaluation -----------------------------------------------------
    def evaluate(self, assignment: Mapping[str, object]) -> GaussianRational:
        vals = []
        for j, name in enumerate(PARAMS):
            if name in assignment:
                vals.append(GaussianRational.coerce(assignment[name]))
            else:
                vals.append(None)
        total = ZERO_G
        for exp, c in self.terms.items():
            t = c
            for j, e in enumerate(exp):
                if e:
                    if vals[j] is None:
                        raise KeyError(f"assignment does not cover parameter {PARAMS[j]!r}")
                    t = t * vals[j] ** e
            total = total + t
        return total

    def subs(self, assignment: Mapping[str, "ParamPoly"]) -> "ParamPoly":
        """Substitute polynomials for some parameters."""
        repl = {PARAMS.index(n): ParamPoly.coerce(v) for n, v in assignment.items()}
        out = ParamPoly()
        for exp, c in self.terms.items():
            kept = list(exp)
            t = ParamPoly.const(c)
            for j, p in repl.items():
                if exp[j]:
                    t = t * p ** exp[j]
                    kept[j] = 0
            out = out + t * ParamPoly({tuple(kept): ONE_G}, _clean=True)
        return out

    def coefficients_in(self, j: int) -> dict[int, "ParamPoly"]:
        """View as a polynomial in parameter ``j`` with coefficients in the others."""
        out: dict[int, dict] = {}
        for exp, c in self.terms.items():
            d = exp[j]
            rest = exp[:j] + (0,) + exp[j + 1:]
            out.setdefault(d, {})[rest] = c
        return {d: ParamPoly(t, _clean=True) for d, t in out.items()}

    # -- rendering ------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                (PARAMS[j] if e == 1 else f"{PARAMS[j]}^{e}")
                for j, e in enumerate(exp) if e
            )
            if not mono:
                pieces.append(str(c))
                continue
            if c == ONE_G:
                pieces.append(mono)
            elif c == -ONE_G:
                pieces.append("-" + mono)
            elif " " not in str(c):
                pieces.append(f"{c}*{mono}")
            else:
                pieces.append(f"({c})*{mono}")
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"ParamPoly({str(self)!r})"


ZERO_P = ParamPoly()
ONE_P = ParamPoly.const(1)


def _as_univariate(p: ParamPoly, j: int) -> dict[int, ParamPoly]:
    return p.coefficients_in(j)


def _from_univariate(coeffs: Mapping[int, ParamPoly], j: int) -> ParamPoly:
    out = {}
    for d, c in coeffs.items():
        for exp, v in c.terms.items():
            e = list(exp)
            e[j] = d
            out[tuple(e)] = v
    return ParamPoly(out, _clean=True)


def _uni_prem(a: dict[int, ParamPoly], b: dict[int, ParamPoly]) -> dict[int, ParamPoly]:
    """Pseudo-remainder of ``a`` by ``b`` in R[x] (dicts degree -> coefficient)."""
    db = max(b)
    lb = b[db]
    r = {d: c for d, c in a.items() if not c.is_zero()}
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        shift = dr - db
        new = {d: c * lb for d, c in r.items()}
        for d, c in b.items():
            t = d + shift
            v = new.get(t, ZERO_P) - lr * c
            if v.is_zero():
                new.pop(t, None)
            else:
                new[t] = v
        new.pop(dr, None)
        r = new
    return r


def _uni_content(a: dict[int, ParamPoly]) -> ParamPoly:
    return reduce(poly_gcd, a.values(), ZERO_P)


def poly_gcd(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    """Monic gcd over Q(i) by recursive content/primitive-part PRS (grlex-monic)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return ONE_P
    vs = a.variables() | b.variables()
    x = min(vs)
    if len(vs) == 1:
        # Euclid over the field Q(i)
        r0, r1 = a.monic(), b.monic()
        while not r1.is_zero():
            q_r = _uni_prem({d: c for d, c in _as_univariate(r0, x).items()},
                            _as_univariate(r1, x))
            # leading coefficient of r1 is 1, so pseudo-remainder == remainder
            r0, r1 = r1, _from_univariate(q_r, x).monic() if q_r else ZERO_P
        return r0.monic()
    ua, ub = _as_univariate(a, x), _as_univariate(b, x)
    ca, cb = _uni_content(ua), _uni_content(ub)
    g_cont = poly_gcd(ca, cb)
    pa = {d: c.divmod_exact(ca) for d, c in ua.items()}
    pb = {d: c.divmod_exact(cb) for d, c in ub.items()}
    if max(pa) == 0 or max(pb) == 0:
        return g_cont.monic()
    if max(pa) < max(pb):
        pa, pb = pb, pa
    while True:
        r = _uni_prem(pa, pb)
        if not r:
            break
        if max(r) == 0:
            return g_cont.monic()
        cr = _uni_content(r)
        pa, pb = pb, {d: c.divmod_exact(cr) for d, c in r.items()}
    g = _from_univariate(pb, x)
    return (g * g_cont).monic()


# ---------------------------------------------------------------------------
# Fractions
# ---------------------------------------------------------------------------

Scalarish = Union[int, Fraction, GaussianRational, ParamPoly, "ParamScalar", str]


class ParamScalar:
    """Reduced fraction ``num/den`` of parameter polynomials.

    The denominator is monic in grlex order and coprime to the numerator.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: ParamPoly, den: ParamPoly | None = None, *, _reduced: bool = False):
        if den is None:
            den = ONE_P
        if den.is_zero():
            raise PoleError("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = ONE_P
            elif den.is_constant():
                inv = den.constant_value().inverse()
                num = num.scale(inv)
                den = ONE_P
            else:
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = num.divmod_exact(g)
                    den = den.divmod_exact(g)
                lc = den.leading_coeff()
                if lc != ONE_G:
                    inv = lc.inverse()
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def coerce(cls, x: Scalarish) -> "ParamScalar":
        if isinstance(x, ParamScalar):
            return x
        if isinstance(x, ParamPoly):
            return cls(x, ONE_P, _reduced=True)
        if isinstance(x, str):
            return parse_scalar(x)
        return cls(ParamPoly.const(x), ONE_P, _reduced=True)

    @classmethod
    def symbol(cls, name: str) -> "ParamScalar":
        return cls(ParamPoly.var(name), ONE_P, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_value()

    def variables(self) -> set[str]:
        return {PARAMS[j] for j in self.num.variables() | self.den.variables()}

    def __eq__(self, other):
        if isinstance(other, ParamScalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, GaussianRational, ParamPoly)):
            return self == ParamScalar.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return ParamScalar(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        if not isinstance(other, ParamScalar):
            try:
                other = ParamScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.is_one() and other.den.is_one():
            return ParamScalar(self.num + other.num, ONE_P, _reduced=True)
        if self.den == other.den:
            return ParamScalar(self.num + other.num, self.den)
        return ParamScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ParamScalar):
            try:
                other = ParamScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ParamScalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, ParamScalar):
            if isinstance(other, (int, Fraction, GaussianRational)):
                c = GaussianRational.coerce(other)
                if not c:
                    return ZERO
                return ParamScalar(self.num.scale(c), self.den, _reduced=True)
            try:
                other = ParamScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return ParamScalar(self.num * other.num, ONE_P, _reduced=True)
        return ParamScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "ParamScalar":
        if self.num.is_zero():
            raise PoleError("inverse of zero")
        return ParamScalar(self.den, self.num)

    def __truediv__(self, other):
        return self * ParamScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return ParamScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.den.is_one():
            return ParamScalar(self.num ** n, ONE_P, _reduced=True)
        return ParamScalar(self.num ** n, self.den ** n, _reduced=True)

    def evaluate(self, assignment: Mapping[str, object]) -> GaussianRational:
        d = self.den.evaluate(assignment)
        if not d:
            raise PoleError(f"pole of {self} at {dict(assignment)}")
        return self.num.evaluate(assignment) / d

    def subs(self, assignment: Mapping[str, Scalarish]) -> "ParamScalar":
        """Partial substitution of parameters by scalars (possibly symbolic)."""
        vals = {n: ParamScalar.coerce(v) for n, v in assignment.items()}
        return _subs_poly(self.num, vals) / _subs_poly(self.den, vals) if vals else self

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        n = str(self.num)
        d = str(self.den)
        if len(self.num.terms) > 1:
            n = f"({n})"
        if len(self.den.terms) > 1 or not self.den.is_constant():
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"ParamScalar({str(self)!r})"


def _subs_poly(p: ParamPoly, vals: Mapping[str, ParamScalar]) -> ParamScalar:
    out = ZERO
    idx = {PARAMS.index(n): v for n, v in vals.items()}
    for exp, c in p.terms.items():
        kept = list(exp)
        t = ParamScalar(ParamPoly.const(c), ONE_P, _reduced=True)
        for j, v in idx.items():
            if exp[j]:
                t = t * v ** exp[j]
                kept[j] = 0
        out = out + t * ParamScalar(ParamPoly({tuple(kept): ONE_G}, _clean=True), ONE_P, _reduced=True)
    return out


ZERO = ParamScalar(ZERO_P, ONE_P, _reduced=True)
ONE = ParamScalar(ONE_P, ONE_P, _reduced=True)
K = ParamScalar.symbol("k")


def scalar(x: Scalarish) -> ParamScalar:
    return ParamScalar.coerce(x)


def evaluate(s: Scalarish, assignment: Mapping[str, object]) -> GaussianRational:
    """Substitute Gaussian rationals for every parameter of ``s``."""
    return ParamScalar.coerce(s).evaluate(assignment)


def parse_scalar(text: str) -> ParamScalar:
    """Parse a scalar written in the expression language (rationals, ``i``, parameters)."""
    from .parser import parse_scalar_expression

    return parse_scalar_expression(text)


def q(x) -> GaussianRational:
    """Shorthand: ``q("3/2")``, ``q(1)``."""
    return GaussianRational.coerce(x)


def sum_scalars(values: Iterable[ParamScalar]) -> ParamScalar:
    total = ZERO
    for v in values:
        total = total + v
    return total
