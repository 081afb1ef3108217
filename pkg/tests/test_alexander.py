import pytest

from tricross import (
    DiagramError,
    DoubleDiagram,
    IntLaurent,
    alexander,
    convert_to_double,
    parse_spd,
    rational_knot_pd,
)
from conftest import PD_FIG8, PD_KINK, PD_TREFOIL, T2_1, T2_2

D_TREFOIL = IntLaurent.from_int_coeffs({-1: 1, 0: -1, 1: 1})
D_FIG8 = IntLaurent.from_int_coeffs({-1: -1, 0: 3, 1: -1})


def test_known_values():
    assert alexander(DoubleDiagram.from_pd(PD_TREFOIL)) == D_TREFOIL
    assert alexander(DoubleDiagram.from_pd(PD_FIG8)) == D_FIG8
    assert alexander(DoubleDiagram.from_pd(PD_KINK)) == IntLaurent.from_int_coeffs({0: 1})


def test_fixture_diagrams_via_conversion():
    assert alexander(convert_to_double(parse_spd(T2_1))) == D_TREFOIL
    assert alexander(convert_to_double(parse_spd(T2_2))) == D_FIG8


@pytest.mark.parametrize("twists,det", [
    ((3,), 3), ((2, 2), 5), ((5,), 5), ((3, 2), 7),
    ((4, 2), 9), ((2, 1, 1, 2), 13), ((2, 2, 2, 2), 29),
])
def test_rational_knot_determinants(twists, det):
    a = alexander(DoubleDiagram.from_pd(rational_knot_pd(twists)))
    value = sum(c * (-1) ** abs(e) for e, c in a.int_coeffs().items())
    assert abs(value) == det


def test_symmetry_and_normalization_enforced():
    # every produced polynomial is its own t -> 1/t image and is 1 at t = 1
    for pd in (PD_TREFOIL, PD_FIG8, rational_knot_pd((3, 1, 2))):
        a = alexander(DoubleDiagram.from_pd(pd))
        cs = a.int_coeffs()
        assert cs == {-e: c for e, c in cs.items()}
        assert sum(cs.values()) == 1
