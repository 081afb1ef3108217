"""Alexander polynomial from the labeled-arc crossing matrix.

Arcs are maximal over-strand runs between consecutive under-passages.  Each
crossing contributes one linear relation among the arcs through it (the
abelianised Wirtinger relation); the Alexander polynomial is any maximal
minor of the resulting matrix, normalised to the symmetric representative
with value 1 at ``t = 1``.

Determinants are computed exactly by evaluating the integer matrix at enough
integer points (fraction-free Bareiss elimination) and interpolating; entry
degrees are at most 1, so ``size + 1`` sample points suffice.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, FrozenSet, List, Tuple

from .laurent import IntLaurent
from .maps import DiagramError, DoubleDiagram, d_opposite


def _int_det(mat: List[List[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    m = [row[:] for row in mat]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _interpolate(points: List[Tuple[int, int]]) -> List[Fraction]:
    """Coefficients (ascending) of the polynomial through the given points."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            denom *= xi - xj
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= Fraction(xj) * basis[k + 1]
        scale = Fraction(yi) / denom
        for k in range(len(basis)):
            coeffs[k] += basis[k] * scale
    return coeffs


def _arcs(dd: DoubleDiagram, tails: FrozenSet[int]) -> Dict[int, int]:
    """Arc index of every tail dart along the knot traversal."""
    start = min(tails)
    order = []
    d = start
    while True:
        order.append(d)
        d = d_opposite(dd.alpha[d])
        if d == start:
            break
    # break arcs after each under-passage exit: an under-exit tail starts a new arc
    arc_of: Dict[int, int] = {}
    arc = 0
    for d in order:
        if d % 4 in (0, 2):  # exiting on the under-strand: new arc starts here
            arc += 1
        arc_of[d] = arc
    # the first few darts (before the first under-exit) belong to the last arc
    total = arc
    for d in order:
        if d % 4 in (0, 2):
            break
        arc_of[d] = total
    return {d: a % total for d, a in arc_of.items()} if total else {}


def alexander(dd: DoubleDiagram, tails: FrozenSet[int] | None = None) -> IntLaurent:
    """Normalised Alexander polynomial of a knot diagram."""
    m = dd.n
    if m == 0:
        return IntLaurent.from_int_coeffs({0: 1})
    if tails is None:
        tails = dd.orientations()[0]
    arc_of = _arcs(dd, tails)

    # rows over Z[t] as coefficient pairs (c0 + c1*t) per arc column
    rows: List[Dict[int, Tuple[int, int]]] = []
    for c in range(m):
        u_out = 4 * c + (0 if 4 * c + 0 in tails else 2)
        o_out = 4 * c + (1 if 4 * c + 1 in tails else 3)
        u_in_far = dd.alpha[d_opposite(u_out)]  # tail dart of the incoming under edge
        out_arc = arc_of[u_out]
        in_arc = arc_of[u_in_far]
        over_arc = arc_of[o_out]
        sign = dd.crossing_sign(c, tails)
        row: Dict[int, Tuple[int, int]] = {}

        def add(col: int, c0: int, c1: int) -> None:
            a0, a1 = row.get(col, (0, 0))
            row[col] = (a0 + c0, a1 + c1)

        if sign > 0:
            add(over_arc, 1, -1)   # 1 - t
            add(in_arc, 0, 1)      # t
            add(out_arc, -1, 0)    # -1
        else:
            add(over_arc, -1, 1)   # t - 1
            add(in_arc, 1, 0)      # 1
            add(out_arc, 0, -1)    # -t
        rows.append(row)

    size = m - 1
    if size == 0:
        return IntLaurent.from_int_coeffs({0: 1})
    xs = list(range(2, 2 + size + 1))
    samples = []
    for x in xs:
        mat = [
            [
                rows[i].get(j, (0, 0))[0] + rows[i].get(j, (0, 0))[1] * x
                for j in range(size)
            ]
            for i in range(size)
        ]
        samples.append((x, _int_det(mat)))
    coeffs = _interpolate(samples)
    poly: Dict[int, int] = {}
    for e, v in enumerate(coeffs):
        if v:
            if v.denominator != 1:
                raise DiagramError("Alexander determinant interpolation not integral")
            poly[e] = int(v)
    return _normalize(poly)


def _normalize(poly: Dict[int, int]) -> IntLaurent:
    """Symmetric representative with value 1 at t = 1."""
    if not poly:
        raise DiagramError("Alexander determinant vanished on a knot diagram")
    lo, hi = min(poly), max(poly)
    span = hi - lo
    if span % 2:
        raise DiagramError("Alexander polynomial has odd breadth")
    shift = lo + span // 2
    centered = {e - shift: v for e, v in poly.items()}
    at_one = sum(centered.values())
    if abs(at_one) != 1:
        raise DiagramError(f"Alexander value at 1 is {at_one}, expected +-1")
    if at_one < 0:
        centered = {e: -v for e, v in centered.items()}
    sym = {-e: v for e, v in centered.items()}
    if sym != centered:
        raise DiagramError("Alexander polynomial is not symmetric")
    return IntLaurent.from_int_coeffs(centered)
