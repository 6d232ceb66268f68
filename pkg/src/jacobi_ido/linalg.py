"""Exact linear algebra over Q(i) and over the fraction field of the parameters."""

from __future__ import annotations

from typing import Sequence

from .coeffs import (
    ONE_G,
    ONE_P,
    ZERO,
    GaussianRational,
    ParamPoly,
    ParamScalar,
    PoleError,
    poly_gcd,
)


def inverse_matrix(rows: Sequence[Sequence[GaussianRational]]) -> list[list[GaussianRational]]:
    """Gauss-Jordan inverse of a square Gaussian-rational matrix."""
    n = len(rows)
    a = [[GaussianRational.coerce(x) for x in row] + [ONE_G if i == j else GaussianRational(0) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise PoleError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def determinant(rows: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    n = len(rows)
    a = [[GaussianRational.coerce(x) for x in row] for row in rows]
    det = ONE_G
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return GaussianRational(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det = det * a[col][col]
        inv = a[col][col].inverse()
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def _clear_row(row: Sequence[ParamScalar]) -> list[ParamPoly]:
    """Scale a row of fractions by the lcm of its denominators."""
    lcm = ONE_P
    for x in row:
        if not x.den.is_one():
            g = poly_gcd(lcm, x.den)
            lcm = lcm * x.den.divmod_exact(g)
    out = []
    for x in row:
        if x.is_zero():
            out.append(ParamPoly())
        else:
            out.append(x.num * lcm.divmod_exact(x.den))
    return out


def _strip_content(row: list[ParamPoly]) -> list[ParamPoly]:
    g = None
    for x in row:
        if not x.is_zero():
            g = x if g is None else poly_gcd(g, x)
            if g.is_constant():
                break
    if g is None or g.is_constant():
        return row
    return [x.divmod_exact(g) if not x.is_zero() else x for x in row]


def row_echelon(rows: Sequence[Sequence[ParamScalar]], ncols: int) -> tuple[list[list[ParamPoly]], list[int]]:
    """Fraction-free (Bareiss-style) echelon form with content stripping.

    Returns the non-zero echelon rows and their pivot columns.  Each pivot row is
    used to eliminate its column from the later rows by cross multiplication,
    after which the row content is divided out.
    """
    work = [_strip_content(_clear_row(r)) for r in rows]
    work = [r for r in work if any(not x.is_zero() for x in r)]
    echelon: list[list[ParamPoly]] = []
    pivots: list[int] = []
    col = 0
    while work and col < ncols:
        # choose the pivot with the smallest entry to limit growth
        cands = [i for i, r in enumerate(work) if not r[col].is_zero()]
        if not cands:
            col += 1
            continue
        best = min(cands, key=lambda i: (len(work[i][col].terms), work[i][col].total_degree()))
        prow = work.pop(best)
        p = prow[col]
        rest = []
        for r in work:
            a = r[col]
            if a.is_zero():
                rest.append(r)
                continue
            g = poly_gcd(p, a)
            pa, aa = p.divmod_exact(g), a.divmod_exact(g)
            new = [x * pa - y * aa for x, y in zip(r, prow)]
            new = _strip_content(new)
            if any(not x.is_zero() for x in new):
                rest.append(new)
        work = rest
        echelon.append(prow)
        pivots.append(col)
        col += 1
    return echelon, pivots


def nullspace(rows: Sequence[Sequence[ParamScalar]], ncols: int) -> list[list[ParamScalar]]:
    """Basis of the right kernel over the fraction field, in reduced form.

    Each basis vector has a 1 in one free column and 0 in the other free columns.
    """
    echelon, pivots = row_echelon(rows, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        x: list[ParamScalar] = [ZERO] * ncols
        x[f] = ParamScalar.coerce(1)
        for row, pc in reversed(list(zip(echelon, pivots))):
            acc = ZERO
            for j in range(pc + 1, ncols):
                if not row[j].is_zero() and not x[j].is_zero():
                    acc = acc + ParamScalar(row[j]) * x[j]
            x[pc] = -acc / ParamScalar(row[pc]) if not acc.is_zero() else ZERO
        basis.append(x)
    return basis


def rank(rows: Sequence[Sequence[ParamScalar]], ncols: int) -> int:
    return len(row_echelon(rows, ncols)[1])
