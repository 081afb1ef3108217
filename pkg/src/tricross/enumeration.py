"""Exhaustive enumeration of triple-crossing projections and knot classes.

The generator backtracks over edge pairings of ``n`` six-valent vertices:

* crossings are activated in discovery order and each is first entered at its
  slot 0, which quotients away vertex relabelings and rotations;
* a pairing that closes a face is accepted only while the closed-face count
  can still reach the spherical total ``2n + 2``;
* a pairing that closes a strand component early is rejected, so every
  completed shadow is a knot projection (one closed curve).

Survivors are filtered to prime shadows, deduplicated by canonical code with
mirror folding, and then grouped into orbits of the M1/M2 slides; one
canonical representative per orbit is kept, giving the census counts
1, 2, 15, 116 for n = 2..5.

Long runs honour a wall-clock budget: on expiry a ``BudgetExceeded`` error
carries the partial results and a resume token (the decision path), which
``enumerate_projections`` accepts to continue the search.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .alexander import alexander
from .canon import canonical_diagram_code, canonical_projection_code, canonical_form
from .jones import jones_triple_batch
from .laurent import HalfLaurent, IntLaurent
from .maps import TripleDiagram, TripleProjection
from .moves import apply_m, find_m_sites
from .tangle import convert_to_double

HEIGHT_WORDS = tuple("".join(w) for w in itertools.permutations("TMB"))


@dataclass
class Budget:
    wall_secs: Optional[float] = None
    max_nodes: Optional[int] = None


class BudgetExceeded(RuntimeError):
    """Raised when a budget expires; carries partial results and a resume token."""

    def __init__(self, message: str, partial: list, resume_token: str) -> None:
        super().__init__(message)
        self.partial = partial
        self.resume_token = resume_token


def _resume_path(token: Optional[str]) -> List[int]:
    if not token:
        return []
    rec = json.loads(token)
    return list(rec["path"])


def _make_token(path: List[int]) -> str:
    return json.dumps({"path": path})


def enumerate_raw_shadows(
    n: int,
    budget: Optional[Budget] = None,
    resume_token: Optional[str] = None,
    collected: Optional[list] = None,
) -> Iterator[TripleProjection]:
    """Yield connected spherical one-curve shadows with ``n`` triple points.

    Output is one representative per labeling reachable by the activation
    scheme; use canonical codes to deduplicate isomorphic shadows.
    """
    if n < 1:
        return
    N = 6 * n
    target = 2 * n + 2
    alpha = [-1] * N
    touched = [False] * n
    touched[0] = True
    # strand-segment union-find: opposite slots of a crossing are one segment
    parent = list(range(N))
    for c in range(n):
        for s in range(3):
            parent[6 * c + s + 3] = 6 * c + s
    rank = [0] * N

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    sigma = [(d - d % 6) + (d % 6 + 1) % 6 for d in range(N)]

    def closes_face_count(d: int, e: int) -> int:
        cnt = 0
        first_cycle = None
        for x in (d, e):
            u = sigma[alpha[x]]
            steps = 0
            while alpha[u] != -1 and u != x:
                u = sigma[alpha[u]]
                steps += 1
                if steps > N:
                    raise RuntimeError("face walk did not terminate")
            if u == x:
                if first_cycle is None:
                    # record the cycle's dart set to avoid double counting
                    cyc = set()
                    v = x
                    while True:
                        cyc.add(v)
                        v = sigma[alpha[v]]
                        if v == x:
                            break
                    first_cycle = cyc
                    cnt += 1
                elif x not in first_cycle:
                    cnt += 1
        return cnt

    start_time = time.monotonic()
    nodes = 0
    path: List[int] = []
    replay = _resume_path(resume_token)

    # iterative backtracking; each frame: (d, candidates, next index, undo)
    stack: List[list] = []

    def candidates_for(d: int) -> List[int]:
        cands = [
            e
            for e in range(d + 1, N)
            if alpha[e] == -1 and touched[e // 6]
        ]
        for c in range(n):
            if not touched[c]:
                cands.append(6 * c)
                break
        return cands

    def check_budget() -> None:
        if budget is None:
            return
        if budget.max_nodes is not None and nodes > budget.max_nodes:
            raise BudgetExceeded(
                "node budget exhausted",
                collected if collected is not None else [],
                _make_token(path),
            )
        if budget.wall_secs is not None and nodes % 512 == 0:
            if time.monotonic() - start_time > budget.wall_secs:
                raise BudgetExceeded(
                    "time budget exhausted",
                    collected if collected is not None else [],
                    _make_token(path),
                )

    pairs = 0
    closed = 0
    d = 0
    stack.append([0, candidates_for(0), 0, 0])
    while stack:
        frame = stack[-1]
        d, cands, idx, _ = frame
        advanced = False
        while idx < len(cands):
            e = cands[idx]
            idx += 1
            if replay:
                if e < replay[0]:
                    continue
                if e > replay[0]:
                    replay.clear()
                    # the recorded branch is gone; fall through normally
            nodes += 1
            check_budget()
            ra, rb = find(d), find(e)
            if ra == rb and pairs + 1 < 3 * n:
                continue  # would close a strand component early
            alpha[d] = e
            alpha[e] = d
            delta = closes_face_count(d, e)
            rem = 3 * n - pairs - 1
            if closed + delta > target or closed + delta + 2 * rem < target:
                alpha[d] = -1
                alpha[e] = -1
                continue
            # commit
            frame[2] = idx
            undo = {"e": e, "fresh": not touched[e // 6], "delta": delta}
            if ra != rb:
                if rank[ra] < rank[rb]:
                    ra, rb = rb, ra
                parent[rb] = ra
                undo["union"] = (ra, rb, rank[ra] == rank[rb])
                if rank[ra] == rank[rb]:
                    rank[ra] += 1
            touched[e // 6] = True
            closed += delta
            pairs += 1
            path.append(e)
            if replay and e == replay[0]:
                replay.pop(0)
            if pairs == 3 * n:
                if closed == target:
                    p = TripleProjection(list(alpha), n)
                    yield p
                # undo immediately and continue with siblings
                _undo_pair(alpha, touched, parent, rank, d, undo)
                closed -= delta
                pairs -= 1
                path.pop()
                continue
            nd = alpha.index(-1)
            stack.append([nd, candidates_for(nd), 0, undo])
            advanced = True
            break
        if advanced:
            continue
        # frame exhausted: undo the pairing that created it and pop
        stack.pop()
        if stack:
            pframe = stack[-1]
            pd = pframe[0]
            undo = frame[3]
            _undo_pair(alpha, touched, parent, rank, pd, undo)
            closed -= undo["delta"]
            pairs -= 1
            path.pop()


def _undo_pair(alpha, touched, parent, rank, d, undo) -> None:
    e = undo["e"]
    alpha[d] = -1
    alpha[e] = -1
    if undo["fresh"]:
        touched[e // 6] = False
    u = undo.get("union")
    if u is not None:
        ra, rb, bumped = u
        parent[rb] = rb
        if bumped:
            rank[ra] -= 1


def enumerate_projections(
    n: int,
    fold_mirror: bool = True,
    budget: Optional[Budget] = None,
    resume_token: Optional[str] = None,
    partial_codes: Optional[List[Tuple[int, ...]]] = None,
) -> List[TripleProjection]:
    """Canonical representatives of prime knot projections with ``n`` triple
    points, one per orbit of the M1/M2 slides (mirror images folded)."""
    seen: Dict[Tuple[int, ...], TripleProjection] = {}
    if partial_codes:
        for code in partial_codes:
            p = TripleProjection(list(code), n)
            seen[canonical_projection_code(p, fold_mirror)] = p
    collected: List[Tuple[int, ...]] = list(partial_codes or [])
    for p in enumerate_raw_shadows(n, budget, resume_token, collected):
        if not p.is_prime():
            continue
        code = canonical_projection_code(p, fold_mirror)
        if code not in seen:
            seen[code] = TripleProjection(list(code), n)
            collected.append(code)
    return _m_orbit_representatives(seen, fold_mirror)


def _m_orbit_representatives(
    seen: Dict[Tuple[int, ...], TripleProjection], fold_mirror: bool
) -> List[TripleProjection]:
    codes = sorted(seen)
    index = {code: i for i, code in enumerate(codes)}
    parent = list(range(len(codes)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for code in codes:
        p = seen[code]
        for site in find_m_sites(p):
            q = apply_m(p, site)
            qc = canonical_projection_code(q, fold_mirror)
            if qc in index:
                a, b = find(index[code]), find(index[qc])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    reps = sorted({codes[find(i)] for i in range(len(codes))})
    return [seen[code] for code in reps]


def enumerate_diagrams(p: TripleProjection) -> List[TripleDiagram]:
    """All height assignments on a knot projection, deduplicated up to
    relabeling (mirror images kept distinct)."""
    seen = {}
    for words in itertools.product(HEIGHT_WORDS, repeat=p.n):
        d = TripleDiagram(p, list(words))
        code = canonical_diagram_code(d, fold_mirror=False)
        if code not in seen:
            seen[code] = d
    return [seen[c] for c in sorted(seen)]


@dataclass
class KnotClass:
    jones_folded: str
    alexander: str
    c3: int
    witness_spd: str
    homfly_folded: Optional[str] = None
    name: Optional[str] = None
    composite: bool = False

    @property
    def fingerprint(self) -> Tuple[str, str]:
        return (self.jones_folded, self.alexander)


def fold_jones(v: HalfLaurent) -> str:
    """Mirror-folded textual form: the smaller of V(t) and V(1/t)."""
    return min(str(v), str(v.invert_t()))


def diagram_fingerprint(d: TripleDiagram) -> Tuple[str, str]:
    words_list = [tuple(d.heights)]
    v = jones_triple_batch(d.projection, words_list)[0] if d.n else HalfLaurent.one()
    a = alexander(convert_to_double(d))
    return (fold_jones(v), str(a))


@dataclass
class ClassifyRun:
    max_n: int
    projections_per_n: Dict[int, int] = field(default_factory=dict)
    new_knots_per_n: Dict[int, int] = field(default_factory=dict)
    classes: Dict[Tuple[str, str], KnotClass] = field(default_factory=dict)


def _project_classes(
    p: TripleProjection, n: int
) -> List[Tuple[Tuple[str, str], TripleDiagram]]:
    """Fingerprint every distinct diagram on one projection."""
    words_list = list(itertools.product(HEIGHT_WORDS, repeat=n))
    jones_all = jones_triple_batch(p, words_list)
    by_diagram: Dict[Tuple, Tuple[HalfLaurent, Tuple[str, ...]]] = {}
    for words, v in zip(words_list, jones_all):
        d = TripleDiagram(p, list(words))
        dc = canonical_diagram_code(d, fold_mirror=False)
        if dc not in by_diagram:
            by_diagram[dc] = (v, words)
    out = []
    for v, words in by_diagram.values():
        d = TripleDiagram(p, list(words))
        a = alexander(convert_to_double(d))
        out.append(((fold_jones(v), str(a)), d))
    return out


def classify(
    max_n: int,
    fold_mirror: bool = True,
    budget: Optional[Budget] = None,
    projections_by_n: Optional[Dict[int, List[TripleProjection]]] = None,
    threads: int = 1,
) -> ClassifyRun:
    """Enumerate diagrams for n = 2..max_n and group them into knot classes.

    The unknot (Jones and Alexander both 1) is discarded.  Classes are keyed
    by mirror-folded Jones plus Alexander; c3 is the smallest n realizing the
    class.  Classes whose invariants factor as a product over smaller classes
    are flagged ``composite`` but stay in the census — flagged, never dropped.

    ``threads`` > 1 fingerprints projections concurrently; the class table is
    still merged in deterministic projection order.
    """
    from .spd import serialize_spd

    run = ClassifyRun(max_n)
    unknot_key = (fold_jones(HalfLaurent.one()), str(IntLaurent.from_int_coeffs({0: 1})))
    for n in range(2, max_n + 1):
        if projections_by_n and n in projections_by_n:
            projections = projections_by_n[n]
        else:
            projections = enumerate_projections(n, fold_mirror, budget)
        run.projections_per_n[n] = len(projections)
        if threads > 1 and len(projections) > 1:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=threads) as pool:
                per_projection = list(
                    pool.map(lambda p: _project_classes(p, n), projections)
                )
        else:
            per_projection = [_project_classes(p, n) for p in projections]
        new_here = 0
        for fingerprints in per_projection:
            for key, d in fingerprints:
                if key == unknot_key:
                    continue
                if key not in run.classes:
                    run.classes[key] = KnotClass(
                        jones_folded=key[0],
                        alexander=key[1],
                        c3=n,
                        witness_spd=serialize_spd(canonical_form(d)),
                    )
                    new_here += 1
        run.new_knots_per_n[n] = new_here
    _mark_composites(run.classes)
    return run


def _mark_composites(classes: Dict[Tuple[str, str], KnotClass]) -> None:
    """Flag classes whose invariants factor over two nontrivial classes.

    Jones and Alexander are multiplicative under connected sum, and the
    diagram of a sum needs no more triple crossings than its parts together,
    so a class whose invariant pair is a product of two smaller classes is
    indistinguishable from that connected sum by these invariants.  Such
    classes are flagged, never dropped or merged: the polynomials cannot
    prove compositeness, only fail to refute it.
    """
    items = list(classes.values())
    for kc in items:
        for a in items:
            if a.c3 >= kc.c3:
                continue
            for b in items:
                if a.c3 + b.c3 > kc.c3:
                    continue
                prod_alex = IntLaurent.parse(a.alexander) * IntLaurent.parse(b.alexander)
                if str(prod_alex) != kc.alexander:
                    continue
                va = HalfLaurent.parse(a.jones_folded)
                vb = HalfLaurent.parse(b.jones_folded)
                folded_products = {
                    fold_jones(x * y)
                    for x in (va, va.invert_t())
                    for y in (vb, vb.invert_t())
                }
                if kc.jones_folded in folded_products:
                    kc.composite = True
                    break
            if kc.composite:
                break


def count_table(run: ClassifyRun) -> List[Tuple[int, int, int]]:
    """Rows (n, projections, new knot classes first realized at n).

    The knots column counts every nontrivial class, including the ones
    flagged ``composite`` (their per-class records carry the flag)."""
    return [
        (n, run.projections_per_n.get(n, 0), run.new_knots_per_n.get(n, 0))
        for n in sorted(run.projections_per_n)
    ]
