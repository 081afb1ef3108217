import itertools

from tricross import (
    TripleDiagram,
    canonical_diagram_code,
    canonical_form,
    canonical_projection_code,
    diagrams_equivalent,
    enumerate_raw_shadows,
    parse_spd,
    projections_isomorphic,
    serialize_spd,
)
from tricross.maps import TripleProjection
from conftest import T2_1, T2_2


def brute_force_isomorphic(p, q, allow_mirror):
    """Independent check: try every crossing relabeling + rotation (+ mirror)."""
    n = p.n
    if q.n != n:
        return False

    def try_maps(reflect):
        for perm in itertools.permutations(range(n)):
            for rots in itertools.product(range(6), repeat=n):
                def phi(d):
                    c, s = d // 6, d % 6
                    s2 = (rots[c] - s) % 6 if reflect else (s + rots[c]) % 6
                    return 6 * perm[c] + s2
                if all(phi(p.alpha[d]) == q.alpha[phi(d)] for d in range(6 * n)):
                    return True
        return False

    return try_maps(False) or (allow_mirror and try_maps(True))


def _check_codes_vs_brute_force(n):
    shadows = list(enumerate_raw_shadows(n))
    groups = {}
    for p in shadows:
        groups.setdefault(canonical_projection_code(p, fold_mirror=False), []).append(p)
    # same code -> isomorphic (every member against its representative)
    for members in groups.values():
        rep = members[0]
        for q in members[1:]:
            assert brute_force_isomorphic(rep, q, allow_mirror=False)
    # different code -> not isomorphic without mirroring
    reps = [members[0] for members in groups.values()]
    for a, b in itertools.combinations(reps, 2):
        assert not brute_force_isomorphic(a, b, allow_mirror=False)
    # the mirror-folded quotient agrees with brute force allowing reflection
    folded = {}
    for code, members in groups.items():
        folded.setdefault(
            canonical_projection_code(members[0], fold_mirror=True), []
        ).append(members[0])
    for members in folded.values():
        rep = members[0]
        for q in members[1:]:
            assert brute_force_isomorphic(rep, q, allow_mirror=True)
    for a, b in itertools.combinations([m[0] for m in folded.values()], 2):
        assert not brute_force_isomorphic(a, b, allow_mirror=True)


def test_canonical_code_completeness_n2():
    _check_codes_vs_brute_force(2)


def test_canonical_code_completeness_n3():
    _check_codes_vs_brute_force(3)


def test_code_is_relabeling_invariant():
    p = parse_spd(T2_1).projection
    # relabel crossings by swapping 0 and 1 (conjugate alpha by the swap)
    def swap(d):
        return (d + 6) % 12
    alpha = [0] * 12
    for d in range(12):
        alpha[swap(d)] = swap(p.alpha[d])
    q = TripleProjection(alpha, 2)
    assert canonical_projection_code(p, False) == canonical_projection_code(q, False)


def test_mirror_folding_merges_mirror_codes():
    d = parse_spd(T2_1)
    p = d.projection
    mirror_alpha = [0] * (6 * p.n)
    # reflect each crossing: slot s -> (6 - s) % 6
    def refl(d_):
        return 6 * (d_ // 6) + (6 - d_ % 6) % 6
    for d_ in range(6 * p.n):
        mirror_alpha[refl(d_)] = refl(p.alpha[d_])
    m = TripleProjection(mirror_alpha, p.n)
    assert canonical_projection_code(p, True) == canonical_projection_code(m, True)


def test_diagram_code_separates_heights():
    d1 = parse_spd(T2_1)
    d2 = parse_spd(T2_2)
    assert canonical_diagram_code(d1, False) != canonical_diagram_code(d2, False)
    assert diagrams_equivalent(d1, d1)
    assert not diagrams_equivalent(d1, d2)


def test_canonical_form_is_stable():
    d = parse_spd(T2_2)
    c = canonical_form(d)
    assert serialize_spd(canonical_form(c)) == serialize_spd(c)
