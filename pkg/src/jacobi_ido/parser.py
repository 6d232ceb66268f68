"""Expression language for elements of the enveloping algebras.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/' | juxtaposition) factor)*
    factor := atom ['^' uint]
    atom   := literal | 'i' | parameter | generator | '(' expr ')' | '[' expr ',' expr ']'

Generators: ``E F H e1 f1 Z11 Z(r,s)``, their tilde versions ``tE tF tH te1 tf1
tZ11``, ``W`` (inverse of Z11 in the localized rank-1 algebra) and the sl2
symbols ``x y h``.  Parameters: ``k`` (also ``c lam mu`` in scalar contexts).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .coeffs import ONE, PARAMS, GaussianRational, ParamScalar, scalar
from .lie import Gen, LieError, W, basis_convert

Span = tuple[int, int]


class ParseError(ValueError):
    def __init__(self, message: str, span: Span | None = None, text: str | None = None):
        self.span = span
        self.text = text
        if span is not None:
            message = f"{message} at position {span[0]}"
            if text is not None:
                message += f"\n  {text}\n  {' ' * span[0]}{'^' * max(1, span[1] - span[0])}"
        super().__init__(message)


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Imag:
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Param:
    name: str
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class GenRef:
    gen: Gen
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Prod:
    factors: tuple  # of (op, node) with op in {"*", "/"}; first op is "*"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, node) with sign in {1, -1}
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Comm:
    left: "Node"
    right: "Node"
    span: Span = field(default=(0, 0), compare=False)


Node = Union[Num, Imag, Param, GenRef, Pow, Prod, Sum, Comm]


# ---------------------------------------------------------------------------
# Lexer
# ---------------------------------------------------------------------------

_TOKEN_RE = [
    ("WS", re.compile(r"\s+")),
    ("NUM", re.compile(r"\d+(?:/\d+)?")),
    ("GEN", re.compile(r"t?Z\(\s*\d+\s*,\s*\d+\s*\)")),
    ("WORD", re.compile(r"[A-Za-z_][A-Za-z_0-9]*")),
    ("OP", re.compile(r"[-+*/^(),\[\]]")),
]

# pieces a run of letters and digits may be split into (juxtaposition)
_WORD_PIECES = [
    ("GEN", re.compile(r"t?Z\d\d")),
    ("GEN", re.compile(r"t?[ef]\d+")),
    ("GEN", re.compile(r"t?[EFH]")),
    ("PARAM", re.compile(r"lam|mu|k|c")),
    ("IMAG", re.compile(r"i")),
    ("GEN", re.compile(r"[Wxyh]")),
]


@dataclass
class Token:
    kind: str
    text: str
    span: Span


def _split_word(word: str, start: int, text: str) -> list[Token]:
    out = []
    j = 0
    while j < len(word):
        for kind, rx in _WORD_PIECES:
            m = rx.match(word, j)
            if m:
                break
        else:
            raise ParseError(f"unknown generator {word!r}", (start, start + len(word)), text)
        out.append(Token(kind, m.group(0), (start + j, start + m.end())))
        j = m.end()
    return out


def tokenize(text: str) -> list[Token]:
    pos = 0
    out: list[Token] = []
    while pos < len(text):
        for kind, rx in _TOKEN_RE:
            m = rx.match(text, pos)
            if m and m.end() > pos:
                break
        else:
            raise ParseError(f"unexpected character {text[pos]!r}", (pos, pos + 1), text)
        s = m.group(0)
        if kind == "WORD":
            out.extend(_split_word(s, pos, text))
        elif kind != "WS":
            out.append(Token(kind, s, (pos, m.end())))
        pos = m.end()
    return out


def _gen_from_text(s: str, span: Span, N: int | None, text: str) -> Gen:
    tilde = s.startswith("t") and len(s) > 1
    body = s[1:] if tilde else s
    if body in ("E", "F", "H"):
        return Gen(body, (), tilde)
    if body == "W":
        return W
    if body in ("x", "y", "h"):
        return Gen(body)
    if body[0] in "ef":
        idx: tuple = (int(body[1:]),)
        kind = body[0]
    elif body.startswith("Z("):
        r, s2 = body[2:-1].split(",")
        idx = (int(r), int(s2))
        kind = "Z"
    elif body.startswith("Z"):
        idx = (int(body[1]), int(body[2]))
        kind = "Z"
    else:
        raise ParseError(f"unknown generator {s!r}", span, text)
    limit = N if N is not None else None
    for i in idx:
        if i < 1 or (limit is not None and i > limit):
            raise ParseError(f"index out of range in {s!r} (N={N})", span, text)
    if kind == "Z":
        idx = (min(idx), max(idx))
    return Gen(kind, idx, tilde)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, N: int | None):
        self.text = text
        self.N = N
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, text: str | None = None) -> Token:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input", (len(self.text), len(self.text) + 1), self.text)
        if text is not None and t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text!r}", t.span, self.text)
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        t = self.peek()
        return t is not None and t.kind == "OP" and t.text == text

    def parse(self) -> Node:
        if not self.toks:
            raise ParseError("empty expression", (0, 1), self.text)
        node = self.expr()
        t = self.peek()
        if t is not None:
            raise ParseError(f"unexpected {t.text!r}", t.span, self.text)
        return node

    def expr(self) -> Node:
        start = self.peek().span[0] if self.peek() else len(self.text)
        terms = []
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        elif self.at("+"):
            self.take()
        terms.append((sign, self.term()))
        while self.at("+") or self.at("-"):
            sign = 1 if self.take().text == "+" else -1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms), (start, self._end()))

    def _end(self) -> int:
        return self.toks[self.i - 1].span[1] if self.i else 0

    def _starts_atom(self) -> bool:
        t = self.peek()
        if t is None:
            return False
        if t.kind == "OP":
            return t.text in ("(", "[")
        return True

    def term(self) -> Node:
        start = self.peek().span[0] if self.peek() else len(self.text)
        factors = [("*", self.factor())]
        while True:
            if self.at("*") or self.at("/"):
                op = self.take().text
                factors.append((op, self.factor()))
            elif self._starts_atom():
                factors.append(("*", self.factor()))
            else:
                break
        if len(factors) == 1:
            return factors[0][1]
        return Prod(tuple(factors), (start, self._end()))

    def factor(self) -> Node:
        start = self.peek().span[0] if self.peek() else len(self.text)
        base = self.atom()
        if self.at("^"):
            self.take()
            t = self.take()
            if t.kind != "NUM" or "/" in t.text:
                raise ParseError("exponent must be a non-negative integer", t.span, self.text)
            return Pow(base, int(t.text), (start, t.span[1]))
        return base

    def atom(self) -> Node:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input", (len(self.text), len(self.text) + 1), self.text)
        if t.kind == "NUM":
            self.take()
            return Num(Fraction(t.text), t.span)
        if t.kind == "IMAG":
            self.take()
            return Imag(t.span)
        if t.kind == "PARAM":
            self.take()
            return Param(t.text, t.span)
        if t.kind == "GEN":
            self.take()
            return GenRef(_gen_from_text(t.text.replace(" ", ""), t.span, self.N, self.text), t.span)
        if self.at("("):
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if self.at("["):
            open_tok = self.take()
            a = self.expr()
            self.take(",")
            b = self.expr()
            close = self.take("]")
            return Comm(a, b, (open_tok.span[0], close.span[1]))
        raise ParseError(f"unexpected {t.text!r}", t.span, self.text)


def parse(text: str, N: int | None = None) -> Node:
    """Parse ``text``; generator indices are checked against ``N`` when given."""
    return _Parser(text, N).parse()


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _num_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _is_atomic(node: Node) -> bool:
    return isinstance(node, (Num, Imag, Param, GenRef, Comm))


def render(node: Node) -> str:
    """Canonical text; ``parse(render(a)) == a`` for every AST produced by :func:`parse`."""
    if isinstance(node, Num):
        return _num_str(node.value)
    if isinstance(node, Imag):
        return "i"
    if isinstance(node, Param):
        return node.name
    if isinstance(node, GenRef):
        return node.gen.name
    if isinstance(node, Comm):
        return f"[{render(node.left)}, {render(node.right)}]"
    if isinstance(node, Pow):
        b = render(node.base)
        if not _is_atomic(node.base) or (isinstance(node.base, Num) and node.base.value.denominator != 1):
            b = f"({b})"
        return f"{b}^{node.exp}"
    if isinstance(node, Prod):
        parts = []
        for j, (op, f) in enumerate(node.factors):
            s = render(f)
            if isinstance(f, (Sum, Prod)):
                s = f"({s})"
            elif op == "/" and isinstance(f, Num) and f.value.denominator != 1:
                s = f"({s})"
            elif j and op == "*" and isinstance(f, Num) and f.value.denominator != 1 and \
                    isinstance(node.factors[j - 1][1], Num):
                s = f"({s})"
            parts.append(s if j == 0 else f"{op}{s}")
        return "".join(parts)
    if isinstance(node, Sum):
        out = []
        for j, (sign, t) in enumerate(node.terms):
            s = render(t)
            if isinstance(t, Sum):
                s = f"({s})"
            if j == 0:
                out.append(s if sign == 1 else f"-{s}")
            else:
                out.append(f" + {s}" if sign == 1 else f" - {s}")
        return "".join(out)
    raise TypeError(f"not an AST node: {node!r}")


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def _gen_element(alg, g: Gen, node: Node, text: str | None):
    pres = alg.pres
    if g in pres.index:
        return alg.gen(g)
    if g == W:
        raise ParseError("W is only available in the localized rank-1 algebra", node.span, text)
    names = {x.kind for x in pres.gens}
    if g.kind in ("E", "F", "H", "e", "f", "Z") and "Z" in names:
        source = "tilde" if g.tilde else "standard"
        target = "tilde" if any(x.tilde for x in pres.gens) else "standard"
        N = max(i for x in pres.gens for i in x.idx)
        if any(i > N for i in g.idx):
            raise ParseError(f"index out of range in {g.name!r} (N={N})", node.span, text)
        try:
            return alg.linear(basis_convert({g: GaussianRational(1)}, source, target, N))
        except LieError as exc:
            raise ParseError(str(exc), node.span, text) from exc
    raise ParseError(f"generator {g.name!r} does not belong to {pres.name}", node.span, text)


def evaluate_ast(node: Node, alg=None, text: str | None = None):
    """Evaluate to a ``ParamScalar`` (no generators) or an element of ``alg``."""
    if isinstance(node, Num):
        return scalar(node.value)
    if isinstance(node, Imag):
        return scalar(GaussianRational(0, 1))
    if isinstance(node, Param):
        if node.name not in PARAMS:
            raise ParseError(f"unknown parameter {node.name!r}", node.span, text)
        return ParamScalar.symbol(node.name)
    if isinstance(node, GenRef):
        if alg is None:
            raise ParseError(f"generator {node.gen.name!r} in a scalar expression", node.span, text)
        return _gen_element(alg, node.gen, node, text)
    if isinstance(node, Pow):
        return evaluate_ast(node.base, alg, text) ** node.exp
    if isinstance(node, Prod):
        acc = None
        for op, f in node.factors:
            v = evaluate_ast(f, alg, text)
            if op == "/":
                if not isinstance(v, ParamScalar):
                    raise ParseError("division by a non-scalar", f.span, text)
                if v.is_zero():
                    raise ParseError("division by zero", f.span, text)
                v = v.inverse()
            acc = v if acc is None else _mul(acc, v)
        return acc
    if isinstance(node, Sum):
        acc = None
        for sign, t in node.terms:
            v = evaluate_ast(t, alg, text)
            v = -v if sign < 0 else v
            acc = v if acc is None else _add(acc, v)
        return acc
    if isinstance(node, Comm):
        a = evaluate_ast(node.left, alg, text)
        b = evaluate_ast(node.right, alg, text)
        if isinstance(a, ParamScalar) or isinstance(b, ParamScalar):
            return scalar(0)
        return a * b - b * a
    raise TypeError(f"not an AST node: {node!r}")


def _mul(a, b):
    if isinstance(a, ParamScalar) and not isinstance(b, ParamScalar):
        return b.scale(a)
    return a * b


def _add(a, b):
    if isinstance(a, ParamScalar) and not isinstance(b, ParamScalar):
        return b + a
    return a + b


def parse_scalar_expression(text: str) -> ParamScalar:
    """Parse a scalar such as ``"3/4"``, ``"1/2 - (3/4)i"`` or ``"(k + 1)/(k - 2)"``."""
    v = evaluate_ast(parse(text), None, text)
    return v if isinstance(v, ParamScalar) else ONE * v


def parse_element(text: str, alg):
    """Parse and evaluate inside ``alg``; scalars become multiples of 1."""
    N = None
    idx = [i for g in alg.pres.gens for i in g.idx]
    if idx:
        N = max(idx)
    v = evaluate_ast(parse(text, N), alg, text)
    if isinstance(v, ParamScalar):
        return alg.one().scale(v)
    return v
