"""The local three-double-crossing tangle that deconstructs a triple crossing.

A triple crossing has six ends on a small circle, counterclockwise slots
``0..5``; strand ``j`` enters at slot ``j`` and leaves at slot ``j + 3``.
Perturbing the triple point splits it into three transverse double points,
one per strand pair, with over/under decided by the height word (``T`` over
``M`` over ``B``).  All perturbations are related by a slide of one strand
across the opposite crossing, so the bracket-level expansion below does not
depend on the choice; we fix one concrete perturbation.

Geometry of the fixed perturbation (strand 1 pushed off the common point):

* crossing ``a`` = strands 0 x 2, ends at angles 0, 120, 180, 300;
* crossing ``b`` = strands 0 x 1, ends at angles 0, 60, 180, 240;
* crossing ``c`` = strands 1 x 2, ends at angles 60, 120, 240, 300.

Each entry below is ``(angle, strand, connection)`` where the connection is
either ``("bd", slot)`` for a tangle boundary end or ``(crossing, angle)``
for an internal edge.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .maps import HEIGHT_RANK, DoubleDiagram, TripleDiagram

TANGLE_ENDS: Dict[str, List[Tuple[int, int, Tuple]]] = {
    "a": [
        (0, 0, ("bd", 0)),
        (120, 2, ("c", 300)),
        (180, 0, ("b", 0)),
        (300, 2, ("bd", 5)),
    ],
    "b": [
        (0, 0, ("a", 180)),
        (60, 1, ("c", 240)),
        (180, 0, ("bd", 3)),
        (240, 1, ("bd", 4)),
    ],
    "c": [
        (60, 1, ("bd", 1)),
        (120, 2, ("bd", 2)),
        (240, 1, ("b", 60)),
        (300, 2, ("a", 120)),
    ],
}

# Strand pair meeting at each internal crossing.
TANGLE_STRANDS = {"a": (0, 2), "b": (0, 1), "c": (1, 2)}

# Direction of travel (exit angle) per strand at each crossing, under the
# natural orientation with slots 0, 2, 4 incoming: strand 0 runs slot 0 -> 3,
# strand 1 runs 4 -> 1, strand 2 runs 2 -> 5.
TANGLE_EXIT_ANGLE = {
    "a": {0: 180, 2: 300},
    "b": {0: 180, 1: 60},
    "c": {1: 60, 2: 300},
}


def local_crossing_sign(crossing: str, heights: str) -> int:
    """Sign of one internal double crossing for the height word ``heights``.

    Positive when the over-strand exit direction is a counterclockwise
    rotation (by less than 180 degrees) of the under-strand exit direction.
    Reversing both strands preserves the sign, so the choice between the two
    natural orientations does not matter.
    """
    s1, s2 = TANGLE_STRANDS[crossing]
    over, under = (s1, s2) if HEIGHT_RANK[heights[s1]] > HEIGHT_RANK[heights[s2]] else (s2, s1)
    diff = (TANGLE_EXIT_ANGLE[crossing][over] - TANGLE_EXIT_ANGLE[crossing][under]) % 360
    return 1 if 0 < diff < 180 else -1


def local_writhe(heights: str) -> int:
    return sum(local_crossing_sign(x, heights) for x in "abc")


def tangle_slots(crossing: str, heights: str) -> List[Tuple[int, Tuple]]:
    """Ends of one internal crossing in slot order.

    Returns four ``(strand, connection)`` entries, counterclockwise, rotated
    so the under-strand occupies slots 0 and 2.
    """
    ends = sorted(TANGLE_ENDS[crossing])
    s1, s2 = TANGLE_STRANDS[crossing]
    under = s1 if HEIGHT_RANK[heights[s1]] < HEIGHT_RANK[heights[s2]] else s2
    if ends[0][1] != under:
        ends = ends[1:] + ends[:1]
    return [(strand, conn) for _, strand, conn in ends]


def convert_to_double(diagram: TripleDiagram) -> DoubleDiagram:
    """Deconstruct every triple crossing into three double crossings.

    The result has ``3n`` crossings and represents the same knot.
    """
    n = diagram.n
    if n == 0:
        return DoubleDiagram.unknot()
    sub_index = {"a": 0, "b": 1, "c": 2}
    # dart id of each tangle end: (triple crossing, sub-crossing, connection)
    end_dart: Dict[Tuple[int, str, Tuple], int] = {}
    for t in range(n):
        w = diagram.heights[t]
        for x in "abc":
            c = 3 * t + sub_index[x]
            for s, (_, conn) in enumerate(tangle_slots(x, w)):
                end_dart[(t, x, conn)] = 4 * c + s
    alpha = [0] * (12 * n)

    def link(d: int, e: int) -> None:
        alpha[d] = e
        alpha[e] = d

    for t in range(n):
        w = diagram.heights[t]
        for x in "abc":
            for s, (_, conn) in enumerate(tangle_slots(x, w)):
                d = end_dart[(t, x, conn)]
                if conn[0] == "bd":
                    other = diagram.alpha[6 * t + conn[1]]
                    e = _boundary_dart(end_dart, other // 6, other % 6)
                    link(d, e)
                else:
                    e = end_dart[(t, conn[0], _reverse_conn(x, conn))]
                    link(d, e)
    dd = DoubleDiagram(alpha, 3 * n)
    dd.validate()
    return dd


def _reverse_conn(crossing: str, conn: Tuple) -> Tuple:
    """Connection key of the far end of an internal tangle edge."""
    target, angle = conn
    for a, _, c in TANGLE_ENDS[target]:
        if a == angle:
            # that end connects back to `crossing`
            assert c[0] == crossing
            return c
    raise AssertionError("inconsistent tangle tables")


def _boundary_dart(end_dart: Dict, t: int, slot: int) -> int:
    return end_dart[(t, _boundary_owner(slot), ("bd", slot))]


def _boundary_owner(slot: int) -> str:
    for x, ends in TANGLE_ENDS.items():
        for _, _, conn in ends:
            if conn == ("bd", slot):
                return x
    raise AssertionError("no tangle end for boundary slot")
