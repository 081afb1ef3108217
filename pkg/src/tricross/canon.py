"""Canonical codes for triple-crossing projections and diagrams.

A labeling of a connected map is fixed by a root dart and a rotation sense:
crossings are numbered in discovery order of a traversal, and each crossing's
slots are read from the entry dart in the chosen sense.  The canonical code is
the lexicographically smallest trace over all roots and all allowed senses.

Reversing the rotation sense reflects the sphere.  For a bare projection that
yields the mirror projection, so the reversed sense is only allowed when
folding mirrors.  For a diagram, a reflection combined with exchanging top and
bottom heights is a view of the same knot from the other side of the sphere,
while either operation alone gives the mirror knot; the allowed
(sense, height-operation) pairs below encode exactly that.
"""

from __future__ import annotations

from typing import List, Tuple, Union

from .maps import TripleDiagram, TripleProjection

_RANK_REVERSE = str.maketrans("TB", "BT")


def _trace(
    alpha: List[int], n: int, root: int, direction: int
) -> Tuple[Tuple[int, ...], List[int], List[int]]:
    """Relabeling trace from one root; also returns each crossing's frame.

    The frame of crossing ``c`` is ``(base slot, direction)``: new slot ``k``
    reads old slot ``base + direction * k``.  Returns the code tuple, the new
    order of the old crossings, and their base slots.
    """
    order = [-1] * n  # new id -> old crossing
    base = [0] * n  # new id -> base slot (old numbering)
    new_id = [-1] * n  # old crossing -> new id
    order[0] = root // 6
    base[0] = root % 6
    new_id[root // 6] = 0
    count = 1
    code: List[int] = []
    for cid in range(n):
        old_c = order[cid]
        for k in range(6):
            s = (base[cid] + direction * k) % 6
            partner = alpha[6 * old_c + s]
            pc, ps = partner // 6, partner % 6
            if new_id[pc] == -1:
                new_id[pc] = count
                order[count] = pc
                base[count] = ps
                count += 1
            code.append(6 * new_id[pc] + (direction * (ps - base[new_id[pc]])) % 6)
    return tuple(code), order, base


def _height_word(word: str, base: int, direction: int, reverse_ranks: bool) -> str:
    out = "".join(word[(base + direction * k) % 6 % 3] for k in range(3))
    return out.translate(_RANK_REVERSE) if reverse_ranks else out


def canonical_projection_code(
    proj: TripleProjection, fold_mirror: bool = True
) -> Tuple[int, ...]:
    """Smallest relabeling trace; with ``fold_mirror`` also over reflections."""
    n = proj.n
    if n == 0:
        return ()
    directions = (1, -1) if fold_mirror else (1,)
    best = None
    for direction in directions:
        for root in range(6 * n):
            code, _, _ = _trace(proj.alpha, n, root, direction)
            if best is None or code < best:
                best = code
    return best


# (sense, reverse_ranks) pairs giving the same knot / the mirror knot.
_SAME_KNOT = ((1, False), (-1, True))
_MIRROR_KNOT = ((1, True), (-1, False))


def canonical_diagram_code(
    diagram: TripleDiagram, fold_mirror: bool = False
) -> Tuple:
    """Smallest (projection trace, height words) over all allowed views."""
    n = diagram.n
    if n == 0:
        return ((), ())
    views = _SAME_KNOT + (_MIRROR_KNOT if fold_mirror else ())
    alpha = diagram.projection.alpha
    best = None
    for direction, reverse_ranks in views:
        for root in range(6 * n):
            code, order, base = _trace(alpha, n, root, direction)
            words = tuple(
                _height_word(diagram.heights[order[i]], base[i], direction, reverse_ranks)
                for i in range(n)
            )
            cand = (code, words)
            if best is None or cand < best:
                best = cand
    return best


def projections_isomorphic(
    p: TripleProjection, q: TripleProjection, fold_mirror: bool = True
) -> bool:
    return canonical_projection_code(p, fold_mirror) == canonical_projection_code(
        q, fold_mirror
    )


def diagrams_equivalent(
    d: TripleDiagram, e: TripleDiagram, fold_mirror: bool = False
) -> bool:
    return canonical_diagram_code(d, fold_mirror) == canonical_diagram_code(
        e, fold_mirror
    )


def canonical_form(
    obj: Union[TripleProjection, TripleDiagram], fold_mirror: bool = False
) -> Union[TripleProjection, TripleDiagram]:
    """Rebuild the object with the canonical labeling applied."""
    if isinstance(obj, TripleDiagram):
        return _rebuild_diagram(obj, fold_mirror)
    code = canonical_projection_code(obj, fold_mirror)
    return _projection_from_code(code, obj.n)


def _projection_from_code(code: Tuple[int, ...], n: int) -> TripleProjection:
    alpha = list(code)
    return TripleProjection(alpha, n)


def _rebuild_diagram(diagram: TripleDiagram, fold_mirror: bool) -> TripleDiagram:
    n = diagram.n
    if n == 0:
        return TripleDiagram.unknot()
    code, words = canonical_diagram_code(diagram, fold_mirror)
    return TripleDiagram(TripleProjection(list(code), n), list(words))
