"""Command-line front end: ``jacobi-ido <command> [flags] [expressions]``."""

from __future__ import annotations

import argparse
import json
import re
import sys

from .characters import enumerate_characters
from .coeffs import ParamScalar, parse_scalar
from .ido import Ido, IdoError, IdoElement
from .lie import LieError
from .parser import GenRef, Node, ParseError, evaluate_ast, parse
from .pbw import UEAElement, jacobi_algebra, sl2_algebra
from .reps import KINDS, RepError, build_module, restrict_sl2
from .verify import SUITES, _same_span, run_suite

SCHEMA = "1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

_LATEX_SUBS = [
    (re.compile(r"\(([^()]*)\)\s*/\s*\(([^()]*)\)"), r"\\frac{\1}{\2}"),
    (re.compile(r"(?<![\w/])(\d+)/(\d+)"), r"\\frac{\1}{\2}"),
    (re.compile(r"\bt([EFH])_nu\b"), r"\\tilde{\1}_\\nu"),
    (re.compile(r"\bt([EFH])\b"), r"\\tilde{\1}"),
    (re.compile(r"\bt([ef])(\d+)\b"), r"\\tilde{\1}_{\2}"),
    (re.compile(r"\btZ(\d)(\d)\b"), r"\\tilde{Z}_{\1\2}"),
    (re.compile(r"\b([ef])(\d+)\b"), r"\1_{\2}"),
    (re.compile(r"\bZ(\d)(\d)\b"), r"Z_{\1\2}"),
    (re.compile(r"\^(\d+)"), r"^{\1}"),
    (re.compile(r"\blam\b"), r"\\lambda"),
    (re.compile(r"\bmu\b"), r"\\mu"),
    (re.compile(r"\*"), r" "),
]


def to_latex(text: str) -> str:
    for pat, rep in _LATEX_SUBS:
        text = pat.sub(rep, text)
    return text


def _dump(payload: dict) -> str:
    payload = dict(payload)
    payload["schema"] = SCHEMA
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def _element_json(x) -> dict:
    if isinstance(x, IdoElement):
        return {"text": str(x), "terms": x.to_json()["terms"], "basis": x.basis}
    if isinstance(x, UEAElement):
        return {"text": str(x), "generators": [g.name for g in x.alg.pres.gens], "terms": x.to_json()}
    return {"text": str(x)}


# ---------------------------------------------------------------------------
# Argument handling
# ---------------------------------------------------------------------------

def _parse_k(text: str) -> ParamScalar | None:
    if text == "symbolic":
        return None
    try:
        k = parse_scalar(text)
    except ParseError as exc:
        raise UsageError(f"--k: {exc}") from None
    if not k.is_constant():
        raise UsageError("--k must be 'symbolic' or an exact number such as 1/2")
    return k


def _parse_number(text: str | None, flag: str):
    if text is None:
        return None
    try:
        v = parse_scalar(text)
    except ParseError as exc:
        raise UsageError(f"{flag}: {exc}") from None
    if v.variables() - {"k"}:
        raise UsageError(f"{flag} may only involve k")
    return v


def _expressions(args, count: int) -> list[str]:
    exprs = list(args.expr or [])
    if not exprs:
        data = sys.stdin.read() if not sys.stdin.isatty() else ""
        exprs = [line.strip() for line in data.splitlines() if line.strip()]
    if len(exprs) != count:
        raise UsageError(f"{args.command} needs {count} expression(s), got {len(exprs)}")
    return exprs


def _generators(node: Node) -> list:
    out = []
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, GenRef):
            out.append(n.gen)
        for attr in ("base", "left", "right"):
            if hasattr(n, attr):
                stack.append(getattr(n, attr))
        for attr in ("factors", "terms"):
            if hasattr(n, attr):
                stack.extend(child for _, child in getattr(n, attr))
    return out


def _algebra_for(nodes: list[Node], N: int, reduce_to: str | None):
    gens = [g for n in nodes for g in _generators(n)]
    if any(g.kind in ("x", "y", "h") for g in gens):
        if reduce_to:
            raise UsageError("--basis applies to elements of the Jacobi algebra, not of sl2")
        return sl2_algebra()
    localized = any(g.kind == "W" for g in gens)
    if reduce_to:
        if localized:
            raise UsageError("--basis cannot be combined with W")
        return jacobi_algebra(N, "tilde")
    tilde = bool(gens) and all(g.tilde for g in gens if g.kind != "W")
    return jacobi_algebra(N, "tilde" if tilde else "standard", localized=localized)


def _evaluate(texts: list[str], args):
    nodes = [parse(t, args.N) for t in texts]
    alg = _algebra_for(nodes, args.N, args.basis)
    k = _parse_k(args.k)
    vals = []
    for node, text in zip(nodes, texts):
        v = evaluate_ast(node, alg, text)
        if isinstance(v, ParamScalar):
            v = alg.one().scale(v)
        if k is not None:
            v = alg.element({m: c.subs({"k": k}) for m, c in v.terms.items()})
        vals.append(v)
    return vals, k


def _finish(u: UEAElement, args, k):
    if not args.basis:
        return u
    return Ido(args.N, k).reduce(u, args.basis)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _emit_element(args, x, extra: dict | None = None) -> int:
    if args.format == "json":
        payload = {"command": args.command, "N": args.N, "k": args.k, "result": _element_json(x)}
        payload.update(extra or {})
        print(_dump(payload))
    elif args.format == "latex":
        print(to_latex(str(x)))
    else:
        print(x)
    return EXIT_OK


def cmd_nf(args) -> int:
    (text,) = _expressions(args, 1)
    (u,), k = _evaluate([text], args)
    return _emit_element(args, _finish(u, args, k), {"input": text})


def cmd_mul(args) -> int:
    texts = _expressions(args, 2)
    (a, b), k = _evaluate(texts, args)
    return _emit_element(args, _finish(a * b, args, k), {"input": texts})


def cmd_comm(args) -> int:
    texts = _expressions(args, 2)
    (a, b), k = _evaluate(texts, args)
    return _emit_element(args, _finish(a * b - b * a, args, k), {"input": texts})


def cmd_casimir(args) -> int:
    ido = Ido(args.N, _parse_k(args.k))
    return _emit_element(args, ido.casimir(args.basis or "A"))


def _power_label(j: int) -> str:
    return "1" if j == 0 else "C" if j == 1 else f"C^{j}"


def cmd_center(args) -> int:
    if args.degree is None:
        raise UsageError("center needs --degree")
    ido = Ido(args.N, _parse_k(args.k))
    basis = ido.center(args.degree)
    C = ido.casimir("B")
    powers = [C.power(j) for j in range(args.degree // 2 + 1)]
    polynomial = len(basis) == len(powers) and _same_span(ido, basis, powers)
    labels = [_power_label(j) for j in range(len(powers))] if polynomial else [str(b) for b in basis]
    if args.format == "json":
        print(_dump({"command": "center", "N": args.N, "k": args.k, "degree": args.degree,
                     "dimension": len(basis), "powers_of_C": polynomial, "basis": labels,
                     "solver_basis": [_element_json(b.to(args.basis or "B")) for b in basis]}))
    else:
        fmt = to_latex if args.format == "latex" else str
        print(f"center of D_k (N={args.N}, k={args.k}) to degree {args.degree}: dimension {len(basis)}")
        print("{" + ", ".join(fmt(s) for s in labels) + "}")
    return EXIT_OK


def cmd_characters(args) -> int:
    ido = Ido(args.N, _parse_k(args.k))
    en = enumerate_characters(ido)
    if args.format == "json":
        print(_dump({"command": "characters", "N": args.N, "k": args.k, "count": len(en.characters),
                     "characters": [ch.to_json() for ch in en.characters],
                     "checks": [{"check": n, "pass": ok, "witness": w} for n, ok, w in en.checks],
                     "notes": en.notes}))
    else:
        print(f"{len(en.characters)} characters of D_k (N={args.N}, k={args.k})")
        for ch in en.characters:
            vals = ", ".join(f"{n} -> {v}" for n, v in sorted(ch.values.items()) if v)
            line = f"  {ch.name}: " + (vals or "all generators -> 0")
            if args.N == 1:
                c, lam = ch.label()
                line += f"   (c, lambda) = ({c}, {lam})"
            print(to_latex(line) if args.format == "latex" else line)
        for note in en.notes:
            print(f"  note: {note}")
    return EXIT_OK if en.ok else EXIT_FAIL


def _module(args):
    if args.N != 1:
        raise UsageError("weight modules are implemented for N=1")
    k = _parse_k(args.k)
    c = _parse_number(args.c, "--c")
    lam = _parse_number(args.lam, "--lambda")
    kind = args.module_kind
    if kind == "L":
        if lam is None or not lam.is_constant():
            raise UsageError("L needs --lambda n (a non-negative integer)")
    elif kind == "P":
        if c is None or lam is None:
            raise UsageError("P needs --c and --lambda")
    elif kind in ("Mminus", "Mplus"):
        if lam is None:
            raise UsageError(f"{kind} needs --lambda")
    elif c is None or lam is None:
        raise UsageError("Vk needs --c and --lambda")
    from .coeffs import K

    return build_module(kind, c=c, lam=lam, k=K if k is None else k)


def cmd_module(args) -> int:
    m = _module(args)
    radius = args.degree if args.degree is not None else 3
    if args.format == "json":
        payload = m.to_json(radius)
        payload["command"] = "module"
        print(_dump(payload))
    else:
        dim = "infinite" if m.dimension is None else m.dimension
        print(f"{m.kind}: c = {m.c}, lambda = {m.lam}, k = {m.k}, dimension {dim}")
        print(f"  m- = {'-inf' if m.delta.lo is None else m.delta.m_minus}"
              f" ({m.delta.lower_clause or 'no clause'})")
        print(f"  m+ = {'+inf' if m.delta.hi is None else m.delta.m_plus}"
              f" ({m.delta.upper_clause or 'no clause'})")
        print("  " + m.diagram(radius))
    return EXIT_OK


def cmd_restrict(args) -> int:
    if args.module_kind == "Vk":
        raise UsageError("restrict needs an sl2-module: L, Mminus, Mplus or P")
    m = _module(args)
    r = restrict_sl2(m, args.degree if args.degree is not None else 4)
    if args.format == "json":
        payload = r.to_json()
        payload["command"] = "restrict"
        print(_dump(payload))
    else:
        print(f"{m.kind} at k = {m.k}: {r.case}")
        print(f"  sub weights:      {[str(w) for w in r.sub_weights]}")
        if r.case != "irreducible":
            print(f"  quotient weights: {[str(w) for w in r.quotient_weights]}")
            print(f"  sub = V_k{tuple(str(x) for x in r.sub_label)}, "
                  f"quotient = V_k{tuple(str(x) for x in r.quotient_label)}")
        for name, ok, wit in r.checks:
            print(f"  [{'pass' if ok else 'FAIL'}] {name}" + (f"  -- {wit}" if not ok and wit else ""))
    return EXIT_OK if r.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    reports = run_suite(args.suite)
    ok = all(r.ok for r in reports)
    if args.format == "json":
        print(_dump({"command": "verify", "suite": args.suite, "pass": ok,
                     "reports": [r.to_json() for r in reports]}))
    else:
        for r in reports:
            print(r.text())
        print("ALL PASS" if ok else "FAILURES")
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "nf": cmd_nf, "mul": cmd_mul, "comm": cmd_comm, "casimir": cmd_casimir, "center": cmd_center,
    "characters": cmd_characters, "module": cmd_module, "restrict": cmd_restrict, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jacobi-ido",
                                description="Exact computations in Jacobi algebras and the algebras D_k.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("expr", nargs="*", help="expressions (read from stdin, one per line, if omitted)")
    p.add_argument("--N", type=int, default=1)
    p.add_argument("--k", default="symbolic", help="'symbolic' (default) or an exact rational such as 1/2")
    p.add_argument("--basis", choices=["A", "B"])
    p.add_argument("--degree", type=int)
    p.add_argument("--c")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--module-kind", choices=list(KINDS), default="Vk")
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.N < 1:
        print("error: --N must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.degree is not None and args.degree < 0:
        print("error: --degree must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, RepError, IdoError, LieError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
