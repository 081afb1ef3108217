"""Acceptance gate: one test (and one printed verdict line) per criterion.

Run with ``pytest -v tests/test_acceptance.py``; the verbose test lines are
the per-criterion pass/fail summary, and each test also prints an explicit
``criterion-NN: PASS/FAIL`` line.

Criterion 2 is expected to FAIL: the census target for c3 = 4 is 24 knot
classes, but the exhaustive run finds 25 pairwise-distinct classes (25
distinct mirror-folded Jones polynomials), of which three carry exactly the
invariants of connected sums (3_1 # m3_1, 3_1 # 4_1, 4_1 # 4_1) on prime
projections.  Neither 25 nor 25 - 3 equals 24; the discrepancy is reported
rather than patched over.  See the class flags in ``classify`` output.
"""

import itertools
import json
import os
import random

import pytest

from tricross import (
    Budget,
    BudgetExceeded,
    KnotClass,
    TripleDiagram,
    alexander,
    bracket_jones,
    conjecture_report,
    convert_to_double,
    count_table,
    derive_triple_relation,
    enumerate_projections,
    enumerate_raw_shadows,
    find_jr_sites,
    apply_move,
    identify,
    jones_triple,
    jones_triple_batch,
    natural_orientations,
    parse_spd,
    serialize_spd,
)
from tricross.cli import EXIT_VIOLATION, main
from tricross.enumeration import HEIGHT_WORDS
from tricross.laurent import HalfLaurent


def verdict(num, ok, detail):
    line = f"criterion-{num:02d}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def projections_n4():
    return {n: enumerate_projections(n) for n in (2, 3, 4)}


def test_criterion_01_projection_counts(projections_n4):
    counts = [len(projections_n4[n]) for n in (2, 3, 4)]
    verdict(1, counts == [1, 2, 15],
            f"projection census for n=2,3,4 is {counts}, target [1, 2, 15]")


def test_criterion_02_knot_counts(run_n4):
    rows = count_table(run_n4)
    knots = [k for (_, _, k) in rows]
    flagged = sorted(
        (kc.c3, kc.alexander) for kc in run_n4.classes.values() if kc.composite)
    verdict(
        2, knots == [2, 2, 24],
        f"knot census for c3=2,3,4 is {knots}, target [2, 2, 24]; the 25 "
        f"classes at c3=4 have 25 distinct folded Jones polynomials and "
        f"{len(flagged)} of them carry connected-sum invariants "
        f"(all of Jones/Alexander/HOMFLY/Kauffman/S4-quotient counts match "
        f"3_1#m3_1, 3_1#4_1, 4_1#4_1); excluding them gives 22 - no "
        f"defensible rule reaches 24, so the honest census is reported")


def test_criterion_03_extended_n5_budgeted():
    if os.environ.get("TRICROSS_FULL_N5"):
        projections = enumerate_projections(5)
        verdict(3, len(projections) == 116,
                f"full n=5 projection census: {len(projections)}, target 116")
        return
    # default: exercise the budget/checkpoint contract on a deliberately
    # small budget; the full run is out of scope for the default gate
    try:
        enumerate_projections(5, budget=Budget(max_nodes=2000))
    except BudgetExceeded as exc:
        resumed_more = token_ok = False
        try:
            enumerate_projections(
                5, budget=Budget(max_nodes=4000), resume_token=exc.resume_token,
                partial_codes=[tuple(c) for c in exc.partial])
        except BudgetExceeded as exc2:
            resumed_more = len(exc2.partial) >= len(exc.partial)
            token_ok = bool(exc.resume_token and exc2.resume_token)
        verdict(3, resumed_more and token_ok,
                "n=5 run is budget-gated: partial results + resume token "
                "round-trip verified (full census = 116 projections, "
                "18 CPU-hours for the knot census; marked partial)")
        return
    verdict(3, True, "n=5 completed within the tiny budget (unexpected but fine)")


def test_criterion_04_small_class_names(run_n4, reference):
    names = {}
    for kc in run_n4.classes.values():
        if kc.c3 <= 3:
            names.setdefault(kc.c3, set()).add(identify(kc.fingerprint, reference))
    ok = names.get(2) == {"3_1", "4_1"} and names.get(3) == {"5_2", "6_1"}
    verdict(4, ok, f"c3=2 -> {sorted(names.get(2, []))}, "
                   f"c3=3 -> {sorted(names.get(3, []))}; "
                   "targets 3_1,4_1 and 5_2,6_1")


def test_criterion_05_oracle_equivalence(projections_n4):
    checked = 0
    for n in (2, 3):
        for p in projections_n4[n]:
            words_list = list(itertools.product(HEIGHT_WORDS, repeat=n))
            batch = jones_triple_batch(p, words_list)
            for words, v in zip(words_list, batch):
                d = TripleDiagram(p, list(words))
                assert v == bracket_jones(convert_to_double(d))
                checked += 1
    rng = random.Random(20240824)
    random_checked = 0
    per_proj = 1000 // len(projections_n4[4]) + 1
    for p in projections_n4[4]:
        words_list = [
            tuple(rng.choice(HEIGHT_WORDS) for _ in range(4))
            for _ in range(per_proj)
        ]
        batch = jones_triple_batch(p, words_list)
        for words, v in zip(words_list, batch):
            d = TripleDiagram(p, list(words))
            assert v == bracket_jones(convert_to_double(d))
            random_checked += 1
    verdict(5, checked == 36 + 2 * 216 and random_checked >= 1000,
            f"triple-crossing Jones == bracket of deconstruction on all "
            f"{checked} diagrams with n<=3 and {random_checked} random n=4 "
            f"diagrams")


def test_criterion_06_relation_derivation():
    rel = derive_triple_relation()
    plus = sorted(str(c) for c in rel.coefficient_multiset("x"))
    minus = sorted(str(c) for c in rel.coefficient_multiset("y"))
    want_plus = sorted(str(HalfLaurent({e: -1})) for e in (3, 2, 2, 1, 1))
    want_minus = sorted(str(HalfLaurent({e: -1})) for e in (-3, -2, -2, -1, -1))
    ok = plus == want_plus and minus == want_minus
    verdict(6, ok, "derived resolution coefficients are "
                   "{-t^3/2, -t, -t, -t^1/2, -t^1/2} and the t -> 1/t mirror")


def test_criterion_07_conjecture(run_n4, reference, tmp_path):
    report = conjecture_report(list(run_n4.classes.values()), reference)
    weak_ok = all(v.weak_bound_holds for v in report.verdicts)
    strict_ok = not report.violated
    # the dedicated exit code fires on a (synthetic) violation
    bad_run = tmp_path / "bad.jsonl"
    bad_run.write_text(json.dumps({
        "type": "class", "c3": 2, "jones": "x",
        "alexander": "2*t^-1 + -3*t^0 + 2*t^1", "homfly": None,
        "witness": "w", "composite": False}))
    exit_ok = main(["report", str(bad_run)]) == EXIT_VIOLATION
    verdict(7, strict_ok and weak_ok and exit_ok,
            f"all {len(report.verdicts)} classes satisfy c3 >= breadth and "
            "every non-monic class satisfies c3 > breadth strictly; "
            "violations exit with the dedicated code")


def test_criterion_08_natural_orientations(projections_n4):
    checked = 0
    for n in (2, 3, 4):
        for p in projections_n4[n]:
            # orientations depend only on the projection, so one height
            # assignment per projection is exhaustive over diagrams
            d = TripleDiagram(p, ["TMB"] * n)
            assert len(natural_orientations(d)) == 2
            checked += 1
    verdict(8, checked == 18,
            f"every enumerated projection (n<=4, {checked} total) admits "
            "exactly 2 natural orientations; heights cannot change this")


def test_criterion_09_move_preservation(projections_n4):
    applications = 0
    for n in (2, 3):
        for p in projections_n4[n]:
            for words in itertools.product(HEIGHT_WORDS, repeat=n):
                d = TripleDiagram(p, list(words))
                v = None
                for site in find_jr_sites(d, max_width=2):
                    if v is None:
                        v = jones_triple(d)
                    d2 = apply_move(d, site)
                    assert jones_triple(d2) == v
                    applications += 1
        if applications >= 100:
            break
    verdict(9, applications >= 100,
            f"{applications} J_R/J_R' applications all preserve Jones")


def test_criterion_10_property_suites(run_n4, projections_n4):
    # Euler characteristic on every enumerated projection
    for n in (2, 3, 4):
        for p in projections_n4[n]:
            assert p.n - 3 * p.n + len(p.faces()) == 2
    # Alexander symmetry + value 1 at t=1, and sPD round-trip, on all
    # classified witnesses
    for kc in run_n4.classes.values():
        d = parse_spd(kc.witness_spd)
        assert parse_spd(serialize_spd(d)) == d
        cs = alexander(convert_to_double(d)).int_coeffs()
        assert cs == {-e: c for e, c in cs.items()}
        assert sum(cs.values()) == 1
    # mirror involution at projection level
    from tricross import canonical_projection_code
    from tricross.maps import TripleProjection
    for p in projections_n4[3]:
        refl = lambda d_: 6 * (d_ // 6) + (6 - d_ % 6) % 6
        alpha = [0] * (6 * p.n)
        for d_ in range(6 * p.n):
            alpha[refl(d_)] = refl(p.alpha[d_])
        m = TripleProjection(alpha, p.n)
        assert canonical_projection_code(p, True) == canonical_projection_code(m, True)
    verdict(10, True,
            "Euler characteristic, Alexander symmetry/normalization, sPD "
            "round-trip, and mirror folding verified on all enumerated "
            "objects (canonical-code completeness vs brute force is covered "
            "in test_canon)")
