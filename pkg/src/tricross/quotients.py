"""Counting knot-group homomorphisms into small permutation groups.

From a double diagram we read off the Wirtinger presentation: one generator
per arc, one conjugation relation per crossing.  Every homomorphism into a
finite group G sends all arc generators into a single conjugacy class, so the
count splits per class C.  With a distinguished meridian pinned to a fixed
representative of C the count T(C) is constant across the class, and

    N_K(C) = |C| * T_K(C)

is the number of homomorphisms with meridians in C.  For a connected sum the
two factors share one meridian, giving the product rule

    N_{K1 # K2}(C) = |C| * T_{K1}(C) * T_{K2}(C).

Mirroring and reversal do not change the knot group, so profiles need no
mirror folding.  These counts are independent of every polynomial invariant
in this package and are used to cross-examine classes whose polynomials
factor like a connected sum.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Sequence, Tuple

from .alexander import _arcs
from .maps import DiagramError, DoubleDiagram, d_opposite

Perm = Tuple[int, ...]
Group = Tuple[List[Perm], Dict[Perm, Perm], List[List[Perm]]]

_GROUP_SIZES = {"S3": 3, "S4": 4, "S5": 5, "A4": 4, "A5": 5}


def _parity(p: Perm) -> int:
    return sum(
        1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
    ) % 2


def _mul(p: Perm, q: Perm) -> Perm:
    """Composition p after q."""
    return tuple(p[q[i]] for i in range(len(p)))


def permutation_group(name: str) -> Group:
    """Elements, inverses, and conjugacy classes of S3/S4/S5/A4/A5."""
    size = _GROUP_SIZES.get(name)
    if size is None:
        raise DiagramError(f"unsupported group {name!r}")
    els = list(itertools.permutations(range(size)))
    if name.startswith("A"):
        els = [p for p in els if _parity(p) == 0]
    inv = {p: tuple(sorted(range(size), key=lambda i: p[i])) for p in els}
    classes: List[List[Perm]] = []
    seen = set()
    for p in els:
        if p in seen:
            continue
        orbit = {_mul(_mul(g, p), inv[g]) for g in els}
        seen |= orbit
        classes.append(sorted(orbit))
    return els, inv, classes


def wirtinger_relations(dd: DoubleDiagram) -> Tuple[List[Tuple[int, int, int, int]], int]:
    """Per-crossing (out_arc, in_arc, over_arc, sign) plus the arc count."""
    if dd.n and dd.num_components() != 1:
        raise DiagramError("Wirtinger profiles are computed for knots only")
    if dd.n == 0:
        return [], 0
    tails = dd.orientations()[0]
    arc_of = _arcs(dd, tails)
    rels = []
    for c in range(dd.n):
        u_out = 4 * c + (0 if 4 * c in tails else 2)
        o_out = 4 * c + (1 if 4 * c + 1 in tails else 3)
        u_in_far = dd.alpha[d_opposite(u_out)]
        rels.append(
            (arc_of[u_out], arc_of[u_in_far], arc_of[o_out],
             dd.crossing_sign(c, tails))
        )
    return rels, 1 + max(max(r[:3]) for r in rels)


def _count_pinned(
    rels: Sequence[Tuple[int, int, int, int]],
    arcs: int,
    cls: Sequence[Perm],
    inv: Dict[Perm, Perm],
    rep: Perm,
) -> int:
    """Homomorphism count with arc 0 pinned to ``rep``, all arcs in ``cls``."""

    def solve(assign: List[Perm | None]) -> int:
        changed = True
        while changed:
            changed = False
            for out, inn, over, sign in rels:
                w = assign[over]
                if w is None:
                    continue
                a, b = (w, inv[w]) if sign > 0 else (inv[w], w)
                if assign[inn] is not None:
                    y = _mul(_mul(a, assign[inn]), b)
                    if assign[out] is None:
                        assign[out] = y
                        changed = True
                    elif assign[out] != y:
                        return 0
                elif assign[out] is not None:
                    assign[inn] = _mul(_mul(b, assign[out]), a)
                    changed = True
        for i in range(arcs):
            if assign[i] is None:
                return sum(solve(assign[:i] + [g] + assign[i + 1:]) for g in cls)
        return 1

    start: List[Perm | None] = [None] * arcs
    start[0] = rep
    return solve(start)


def meridional_profile(dd: DoubleDiagram, group: Group) -> List[int]:
    """Pinned counts T(C) per conjugacy class, in canonical class order."""
    _, inv, classes = group
    rels, arcs = wirtinger_relations(dd)
    if arcs == 0:
        return [1 for _ in classes]
    return [_count_pinned(rels, arcs, C, inv, C[0]) for C in classes]


def hom_counts(dd: DoubleDiagram, group: Group) -> List[int]:
    """Homomorphism counts N(C) = |C| * T(C) per conjugacy class."""
    _, _, classes = group
    return [len(C) * t for C, t in zip(classes, meridional_profile(dd, group))]


def connected_sum_counts(
    profile_a: Sequence[int], profile_b: Sequence[int], group: Group
) -> List[int]:
    """Predicted N(C) for a connected sum from the factors' pinned profiles."""
    _, _, classes = group
    return [
        len(C) * a * b for C, a, b in zip(classes, profile_a, profile_b)
    ]
