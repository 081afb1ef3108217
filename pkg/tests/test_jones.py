import itertools
import random

from tricross import (
    DoubleDiagram,
    HalfLaurent,
    TripleDiagram,
    bracket_jones,
    convert_to_double,
    derive_triple_relation,
    enumerate_projections,
    jones_triple,
    jones_triple_batch,
    kauffman_bracket,
    parse_spd,
)
from conftest import PD_FIG8, PD_KINK, PD_TREFOIL, T2_1, T2_2

V_TREFOIL = {2: 1, 6: 1, 8: -1}          # t + t^3 - t^4  (exp2 keys)
V_FIG8 = {-4: 1, -2: -1, 0: 1, 2: -1, 4: 1}


def test_bracket_jones_standard_pds():
    vt = bracket_jones(DoubleDiagram.from_pd(PD_TREFOIL))
    assert vt in (HalfLaurent(V_TREFOIL), HalfLaurent(V_TREFOIL).invert_t())
    assert bracket_jones(DoubleDiagram.from_pd(PD_FIG8)) == HalfLaurent(V_FIG8)


def test_bracket_jones_kink_is_unknot():
    assert bracket_jones(DoubleDiagram.from_pd(PD_KINK)) == HalfLaurent.one()


def test_kauffman_bracket_unnormalized_values():
    b = kauffman_bracket(DoubleDiagram.unknot())
    assert b == {0: 1}


def test_jones_triple_fixtures():
    assert jones_triple(parse_spd(T2_1)) in (
        HalfLaurent(V_TREFOIL), HalfLaurent(V_TREFOIL).invert_t())
    assert jones_triple(parse_spd(T2_2)) == HalfLaurent(V_FIG8)


def test_derive_triple_relation_multiset_and_mirror():
    rel = derive_triple_relation()
    plus = sorted(str(c) for c in rel.coefficient_multiset("x"))
    minus = sorted(str(c) for c in rel.coefficient_multiset("y"))
    # {-t^{3/2}, -t, -t, -t^{1/2}, -t^{1/2}} and its t -> 1/t image
    want_plus = sorted(str(HalfLaurent({e: -1})) for e in (3, 2, 2, 1, 1))
    want_minus = sorted(str(HalfLaurent({e: -1})) for e in (-3, -2, -2, -1, -1))
    assert plus == want_plus
    assert minus == want_minus
    assert sorted(
        str(c.invert_t()) for c in rel.coefficient_multiset("x")) == minus


def test_batch_matches_single():
    d = parse_spd(T2_1)
    p = d.projection
    words_list = list(itertools.product(["TMB", "BMT", "MTB"], repeat=2))
    batch = jones_triple_batch(p, words_list)
    for words, v in zip(words_list, batch):
        assert v == jones_triple(TripleDiagram(p, list(words)))


def test_triple_vs_bracket_on_random_n3_diagrams():
    rng = random.Random(7)
    words_all = ["".join(w) for w in itertools.permutations("TMB")]
    for p in enumerate_projections(3):
        for _ in range(10):
            words = [rng.choice(words_all) for _ in range(3)]
            d = TripleDiagram(p, words)
            assert jones_triple(d) == bracket_jones(convert_to_double(d))
