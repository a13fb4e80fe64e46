"""Sharp 2-transitivity certificates and the derived element sets."""

import numpy as np
import pytest

from involq import (
    CharacteristicTwo,
    NotSharply2Transitive,
    PointsEqual,
    certify_sharply_2_transitive,
    characteristic,
    centralizer,
    involutions,
    swap_involution,
    translations,
    verify_basic_properties,
)
from involq.s2t import fixed_point_bijection_ok


def test_certificate_agl_f5(agl_f5):
    cert = certify_sharply_2_transitive(agl_f5)
    assert cert.valid
    assert cert.degree == 5 and cert.order == 20
    assert cert.involution_count == 5
    assert cert.fixed_point_profile == "all-one-fixed"
    assert cert.characteristic == 5
    assert cert.j_single_class and cert.j2_single_class


def test_certificate_sym4_fails_on_order(sym4):
    cert = certify_sharply_2_transitive(sym4)
    assert not cert.valid
    assert cert.failure == {"check": "order", "expected": 12, "actual": 24}
    with pytest.raises(NotSharply2Transitive):
        involutions(sym4)


def test_certificate_pair_orbit_failure():
    """Order d(d-1) alone is not enough: translations of the 3x3 grid extended
    by the dihedral linear part give order 72 on 9 points, but the linear part
    has two orbits on nonzero vectors, so pairs split into two orbits."""
    from involq import parse_group_doc

    def perm(f):
        return [
            (lambda a, b: (a % 3) + 3 * (b % 3))(*f(i % 3, i // 3))
            for i in range(9)
        ]

    doc = {
        "degree": 9,
        "generators": [
            perm(lambda a, b: (a + 1, b)),
            perm(lambda a, b: (a, b + 1)),
            perm(lambda a, b: (b, a)),
            perm(lambda a, b: (-b, a)),
        ],
    }
    G = parse_group_doc(doc)
    assert G.order == 72
    cert = certify_sharply_2_transitive(G)
    assert cert.order_ok and not cert.pair_transitive and not cert.valid
    assert cert.failure["check"] == "pair-orbit"
    assert cert.failure["missing_pair"] == [0, 4]  # (0,0) -> (1,1) unreachable


def test_certificate_dickson(agl_d9):
    cert = certify_sharply_2_transitive(agl_d9)
    assert cert.valid and cert.degree == 9 and cert.order == 72
    assert cert.characteristic == 3


def test_certificate_gf4(agl_f4):
    cert = certify_sharply_2_transitive(agl_f4)
    assert cert.valid
    assert cert.fixed_point_profile == "all-zero-fixed"
    assert cert.characteristic == 2
    assert characteristic(agl_f4) == 2


def test_involution_counts(agl_f3, agl_f9, agl_f4):
    assert len(involutions(agl_f3)) == 3
    assert len(involutions(agl_f9)) == 9
    j4 = involutions(agl_f4)
    assert len(j4) == 3
    for idx in j4:  # all fixed-point-free
        assert not np.any(agl_f4.elements[idx] == np.arange(4))


def test_involutions_are_negation_maps(agl_f5):
    expected = {tuple((b - x) % 5 for x in range(5)) for b in range(5)}
    got = {tuple(agl_f5.elements[i]) for i in involutions(agl_f5)}
    assert got == expected


def test_involution_count_equals_degree_when_char_odd(agl_f5, agl_f7, agl_f9, agl_d9, agl_d25):
    for G in (agl_f5, agl_f7, agl_f9, agl_d9, agl_d25):
        assert len(involutions(G)) == G.degree
        assert fixed_point_bijection_ok(G)


def test_swap_involution_f5(agl_f5):
    swap = swap_involution(agl_f5, 0, 1)
    assert swap.tolist() == [(1 - x) % 5 for x in range(5)]  # x -> -x + 1


def test_swap_symmetry(agl_f5, agl_f7):
    for G in (agl_f5, agl_f7):
        for x in range(G.degree):
            for y in range(x + 1, G.degree):
                assert np.array_equal(
                    swap_involution(G, x, y), swap_involution(G, y, x)
                )


def test_swap_fixed_point_count(agl_f7):
    swap = swap_involution(agl_f7, 2, 5)
    assert int((swap == np.arange(7)).sum()) == 1


def test_swap_points_equal(agl_f5):
    with pytest.raises(PointsEqual):
        swap_involution(agl_f5, 2, 2)


def test_translations_f5(agl_f5):
    trans = translations(agl_f5)
    assert len(trans) == 5
    assert agl_f5.identity_index in set(int(t) for t in trans)
    expected = {tuple((x + c) % 5 for x in range(5)) for c in range(5)}
    assert {tuple(agl_f5.elements[t]) for t in trans} == expected


def test_translation_fiber_identity(agl_f5, agl_f7, agl_f9, agl_d9):
    # |J.J| * |Cen(sigma)| == |J|^2 for any nontrivial translation sigma
    for G in (agl_f5, agl_f7, agl_f9, agl_d9):
        J = involutions(G)
        trans = translations(G)
        nontrivial = [t for t in trans if t != G.identity_index]
        for t in nontrivial:
            cen = centralizer(G, G.elements[t])
            assert len(trans) * len(cen) == len(J) ** 2


def test_characteristics(agl_f7, agl_d9, agl_f4):
    assert characteristic(agl_f7) == 7
    assert characteristic(agl_d9) == 3
    assert characteristic(agl_f4) == 2


def test_basic_properties_pass(agl_f5, agl_f7, agl_d9):
    for G in (agl_f5, agl_f7, agl_d9):
        report = verify_basic_properties(G)
        assert report.ok
        assert [c.name for c in report.checks] == [
            "centralizer-regular-on-other-involutions",
            "involution-conjugation-regular",
            "translations-meet-centralizers-trivially",
        ]


def test_basic_properties_unique_selfconjugator(agl_f5):
    """i == j forces k == i in the unique-conjugator property: conjugating i
    by any other involution moves it."""
    J = involutions(agl_f5)
    for i in J:
        irow = agl_f5.elements[i]
        for k in J:
            krow = agl_f5.elements[k]
            conj = krow[irow[krow]]  # k i k with k its own inverse
            if np.array_equal(conj, irow):
                assert k == i


def test_basic_properties_char2_raises(agl_f4):
    with pytest.raises(CharacteristicTwo):
        verify_basic_properties(agl_f4)


def test_fixed_point_equivariance(agl_f5, agl_d9):
    """fix(h^-1 j h) == h(fix(j)): the bijection between involutions and
    points commutes with the group action. Exhaustive over J x G."""
    for G in (agl_f5, agl_d9):
        ident = np.arange(G.degree)
        for j in involutions(G):
            jrow = G.elements[j]
            fix_j = int(np.nonzero(jrow == ident)[0][0])
            for h in range(G.order):
                hrow = G.elements[h]
                conj = hrow[jrow[np.argsort(hrow)]]
                fixes = np.nonzero(conj == ident)[0]
                assert len(fixes) == 1
                assert int(fixes[0]) == hrow[fix_j]


def test_swap_is_always_an_involution_in_j(agl_f7):
    jset = {tuple(agl_f7.elements[i]) for i in involutions(agl_f7)}
    for x in range(7):
        for y in range(7):
            if x != y:
                assert tuple(swap_involution(agl_f7, x, y)) in jset


def test_certificate_json_shape(agl_f5):
    import json

    cert = certify_sharply_2_transitive(agl_f5)
    doc = cert.as_dict()
    assert list(doc) == [
        "degree", "order", "order_ok", "pair_transitive", "valid", "failure",
        "involution_count", "fixed_point_profile", "characteristic",
        "j_single_class", "j2_single_class",
    ]
    json.dumps(doc)  # everything serializable
