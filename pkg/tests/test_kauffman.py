from math import comb

from tricross import (
    DoubleDiagram,
    HalfLaurent,
    bracket_jones,
    convert_to_double,
    kauffman_f,
    kauffman_lambda,
    parse_spd,
    rational_knot_pd,
)
from tricross.kauffman import DELTA_K
from tricross.laurent import Laurent2
from conftest import PD_KINK, PD_TREFOIL, T2_1, T2_2


def kauffman_to_jones(f: Laurent2) -> HalfLaurent:
    """Specialize F(a, z) at a = -t^(-3/4), z = t^(1/4) + t^(-1/4)."""
    out = {}
    for (ea, ez), c in f.coeffs.items():
        for k in range(ez + 1):
            e = -3 * ea + (ez - 2 * k)          # quarter-exponents of t
            sign = 1 if ea % 2 == 0 else -1
            out[e] = out.get(e, 0) + c * sign * comb(ez, k)
    assert all(e % 2 == 0 for e, c in out.items() if c)
    return HalfLaurent({e // 2: c for e, c in out.items() if c})


def test_unknot_and_kink_normalization():
    assert kauffman_f(DoubleDiagram.unknot()) == Laurent2.one()
    assert kauffman_lambda(DoubleDiagram.from_pd(PD_KINK)) in (
        Laurent2({(1, 0): 1}), Laurent2({(-1, 0): 1}))
    assert kauffman_f(DoubleDiagram.from_pd(PD_KINK)) == Laurent2.one()


def test_delta_constant():
    assert DELTA_K == Laurent2({(1, -1): 1, (-1, -1): 1, (0, 0): -1})


def test_jones_specialization():
    for pd in (PD_TREFOIL, rational_knot_pd((2, 2)), rational_knot_pd((3, 2)),
               rational_knot_pd((4, 2))):
        dd = DoubleDiagram.from_pd(pd)
        assert kauffman_to_jones(kauffman_f(dd)) == bracket_jones(dd)


def test_jones_specialization_on_triple_fixtures():
    for text in (T2_1, T2_2):
        dd = convert_to_double(parse_spd(text))
        assert kauffman_to_jones(kauffman_f(dd)) == bracket_jones(dd)


def test_mirror_symmetry_of_fig8():
    f = kauffman_f(DoubleDiagram.from_pd(rational_knot_pd((2, 2))))
    assert f == Laurent2({(-ea, ez): c for (ea, ez), c in f.coeffs.items()})
