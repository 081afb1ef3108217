import pytest

from tricross import (
    DiagramError,
    DoubleDiagram,
    TripleDiagram,
    TripleProjection,
    natural_orientations,
    parse_spd,
    reverse_orientation,
)
from conftest import PD_FIG8, PD_KINK, PD_TREFOIL, T2_1, T2_2


def faces(alpha, sigma_next):
    """Count faces of the rotation system via the face permutation."""
    darts = range(len(alpha))
    seen = set()
    count = 0
    for d in darts:
        if d in seen:
            continue
        count += 1
        e = d
        while e not in seen:
            seen.add(e)
            e = sigma_next(alpha[e])
    return count


def test_projection_euler_characteristic():
    p = parse_spd(T2_1).projection
    # V - E + F = 2 on the sphere: V = n, E = 3n, F from face tracing.
    n = p.n
    f = faces(p.alpha, lambda d: 6 * (d // 6) + (d + 1) % 6)
    assert n - 3 * n + f == 2


def test_projection_validate_rejects_non_spherical():
    # A pairing with the wrong face count must be refused by validate().
    p = TripleProjection([3, 4, 5, 0, 1, 2], 1)  # torus map: 2 faces, not 4
    assert not p.is_spherical()
    with pytest.raises(DiagramError):
        p.validate()


def test_projection_rejects_non_involution():
    with pytest.raises(DiagramError):
        TripleProjection([1, 2, 0, 4, 5, 3], 1)


def test_natural_orientations_exactly_two_and_reverse():
    for text in (T2_1, T2_2):
        d = parse_spd(text)
        orients = natural_orientations(d)
        assert len(orients) == 2
        assert reverse_orientation(d, orients[0]) == orients[1]
        assert reverse_orientation(d, orients[1]) == orients[0]


def test_double_diagram_from_pd_roundtrip_counts():
    dd = DoubleDiagram.from_pd(PD_TREFOIL)
    assert dd.n == 3
    assert dd.num_components() == 1
    tails = dd.orientations()[0]
    assert abs(dd.writhe(tails)) == 3  # trefoil is alternating, |w| = 3
    assert all(dd.crossing_sign(c, tails) in (-1, 1) for c in range(dd.n))


def test_double_diagram_kink_writhe():
    dd = DoubleDiagram.from_pd(PD_KINK)
    assert dd.n == 1
    assert abs(dd.writhe(dd.orientations()[0])) == 1


def test_double_diagram_fig8_writhe_zero():
    dd = DoubleDiagram.from_pd(PD_FIG8)
    assert dd.writhe(dd.orientations()[0]) == 0


def test_from_pd_rejects_bad_edge_multiplicity():
    with pytest.raises(DiagramError):
        DoubleDiagram.from_pd([[1, 2, 3, 4]])


def test_diagram_requires_height_word_per_crossing():
    p = parse_spd(T2_1).projection
    with pytest.raises(DiagramError):
        TripleDiagram(p, ["TMB"])  # wrong number of words
    with pytest.raises(DiagramError):
        TripleDiagram(p, ["TMB", "TTB"])  # not a permutation of T/M/B
