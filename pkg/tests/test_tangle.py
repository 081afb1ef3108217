import itertools

from tricross import TripleDiagram, convert_to_double, parse_spd
from tricross.tangle import local_crossing_sign, local_writhe
from conftest import T2_1, T2_2


def test_conversion_produces_valid_knot_diagrams():
    for text in (T2_1, T2_2):
        dd = convert_to_double(parse_spd(text))
        assert dd.n == 3 * 2  # three double crossings per triple crossing
        assert dd.num_components() == 1


def test_local_writhe_totals():
    # each height word resolves into three pairwise crossings; the local
    # writhe is the sum of their signs and flips under word reversal
    for word in ("".join(w) for w in itertools.permutations("TMB")):
        w = local_writhe(word)
        assert w in (-3, -1, 1, 3)
        assert local_writhe(word[::-1]) == -w


def test_local_crossing_signs_pm_one():
    # the three internal double crossings are labeled "a", "b", "c"
    for word in ("".join(w) for w in itertools.permutations("TMB")):
        for crossing in "abc":
            assert local_crossing_sign(crossing, word) in (-1, 1)


def test_conversion_respects_mirror():
    # reversing every height word mirrors the diagram: converted double
    # diagrams have opposite writhe
    d = parse_spd(T2_1)
    mirror = TripleDiagram(d.projection, [w[::-1] for w in d.heights])
    dd, mm = convert_to_double(d), convert_to_double(mirror)
    assert dd.writhe(dd.orientations()[0]) == -mm.writhe(mm.orientations()[0])
