"""Permutation group enumeration, scans, and the affine construction.

Oracles are naive pure-Python loops over tuples (no numpy), independent of
the vectorized paths, plus hand-frozen element lists for the BFS order.
"""

from itertools import permutations

import numpy as np
import pytest

from involq import (
    MalformedDocument,
    NotABijection,
    NotAMember,
    OrderCapExceeded,
    affine_group,
    centralizer,
    compose,
    conjugacy_class,
    conjugate,
    identity_perm,
    invert,
    is_subgroup,
    make_field,
    parse_group_doc,
    perm_order,
)

S3_DOC = {"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}

# breadth-first from the identity, generators in document order, each layer
# sorted by image sequence; derived by hand from the composition convention
S3_BFS_ORDER = [
    (0, 1, 2),
    (1, 0, 2),
    (1, 2, 0),
    (0, 2, 1),
    (2, 0, 1),
    (2, 1, 0),
]


def naive_compose(g, h):
    return tuple(h[g[x]] for x in range(len(g)))


def test_parse_s3_order_and_bfs_layout():
    G = parse_group_doc(S3_DOC)
    assert G.order == 6
    assert [tuple(row) for row in G.elements] == S3_BFS_ORDER
    assert set(map(tuple, G.elements)) == set(permutations(range(3)))


def test_parse_trivial_group():
    G = parse_group_doc({"degree": 4, "generators": [[0, 1, 2, 3]]})
    assert G.order == 1
    assert G.identity_index == 0


def test_parse_rejects_non_bijection():
    with pytest.raises(NotABijection) as err:
        parse_group_doc({"degree": 3, "generators": [[0, 0, 1]]})
    assert err.value.generator_index == 0


def test_parse_rejects_malformed():
    for doc in [
        "not json {",
        [1, 2, 3],
        {"degree": 3},
        {"generators": []},
        {"degree": 0, "generators": []},
        {"degree": 3, "generators": [[0, 1]]},
        {"degree": 3, "generators": "nope"},
    ]:
        with pytest.raises(MalformedDocument):
            parse_group_doc(doc)


def test_parse_json_text():
    G = parse_group_doc('{"degree": 3, "generators": [[1, 2, 0]]}')
    assert G.order == 3


def test_order_cap():
    # S5 has order 120
    doc = {"degree": 5, "generators": [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]]}
    with pytest.raises(OrderCapExceeded):
        parse_group_doc(doc, order_cap=100)
    assert parse_group_doc(doc, order_cap=120).order == 120


# ---------------------------------------------------------------------------
# composition conventions


def test_compose_convention():
    g = np.array([1, 2, 0], dtype=np.int32)
    h = np.array([1, 0, 2], dtype=np.int32)
    gh = compose(g, h)
    assert tuple(gh) == naive_compose(tuple(g), tuple(h))
    for x in range(3):
        assert gh[x] == h[g[x]]


def test_compose_associative_s3():
    G = parse_group_doc(S3_DOC)
    rows = [tuple(r) for r in G.elements]
    for a in rows:
        for b in rows:
            for c in rows:
                assert naive_compose(naive_compose(a, b), c) == naive_compose(
                    a, naive_compose(b, c)
                )


def test_invert_and_conjugate(agl_f5):
    for i in range(agl_f5.order):
        g = agl_f5.elements[i]
        assert np.array_equal(compose(g, invert(g)), identity_perm(5))
        assert np.array_equal(compose(invert(g), g), identity_perm(5))
    g = agl_f5.elements[3]
    h = agl_f5.elements[7]
    manual = compose(compose(invert(h), g), h)
    assert np.array_equal(conjugate(g, h), manual)


def test_every_element_has_inverse_in_group(agl_f9):
    inv = agl_f9.inverse_indices
    for i in range(agl_f9.order):
        assert agl_f9.product_index(i, int(inv[i])) == agl_f9.identity_index


# ---------------------------------------------------------------------------
# affine groups


def test_affine_f3_is_full_symmetric_group(agl_f3):
    assert agl_f3.order == 6
    assert agl_f3.degree == 3
    assert set(map(tuple, agl_f3.elements)) == set(permutations(range(3)))


def test_affine_f5_order(agl_f5):
    assert agl_f5.order == 20
    assert agl_f5.degree == 5
    # every element is x -> (x*m + a) mod 5 for a unique pair (m, a)
    expected = {
        tuple((x * m + a) % 5 for x in range(5))
        for m in range(1, 5)
        for a in range(5)
    }
    assert set(map(tuple, agl_f5.elements)) == expected


def test_affine_dickson_order(agl_d9):
    assert agl_d9.order == 72
    assert agl_d9.degree == 9


def test_affine_order_formula(agl_f7, agl_f9, agl_d25):
    for G in (agl_f7, agl_f9, agl_d25):
        assert G.order == G.degree * (G.degree - 1)


# ---------------------------------------------------------------------------
# centralizer / conjugacy class / subgroup scans against naive oracles


def naive_centralizer(G, idx):
    g = tuple(G.elements[idx])
    out = []
    for k in range(G.order):
        h = tuple(G.elements[k])
        if naive_compose(h, g) == naive_compose(g, h):
            out.append(k)
    return out


def naive_class(G, idx):
    g = tuple(G.elements[idx])
    seen = set()
    for k in range(G.order):
        h = tuple(G.elements[k])
        hinv = tuple(np.argsort(np.array(h)))
        seen.add(naive_compose(naive_compose(hinv, g), h))
    return sorted(G.index[np.array(p, dtype=np.int32).tobytes()] for p in seen)


def test_centralizer_of_identity_is_everything(agl_f5):
    cen = centralizer(agl_f5, identity_perm(5))
    assert list(cen) == list(range(20))


def test_centralizer_of_translation_f5(agl_f5):
    shift = np.array([(x + 1) % 5 for x in range(5)], dtype=np.int32)
    cen = centralizer(agl_f5, shift)
    assert len(cen) == 5
    translations = {
        tuple((x + c) % 5 for x in range(5)) for c in range(5)
    }
    assert {tuple(agl_f5.elements[i]) for i in cen} == translations
    assert list(cen) == naive_centralizer(agl_f5, agl_f5.index_of(shift))


def test_centralizer_of_translation_dickson(agl_d9):
    shift = agl_d9.elements[1]  # first non-identity element is a translation
    assert shift[0] != 0 and perm_order(shift) == 3
    assert len(centralizer(agl_d9, shift)) == 9


def test_class_of_identity(agl_f5):
    assert list(conjugacy_class(agl_f5, identity_perm(5))) == [agl_f5.identity_index]


def test_class_sizes_f5(agl_f5):
    negation = np.array([(-x) % 5 for x in range(5)], dtype=np.int32)
    assert len(conjugacy_class(agl_f5, negation)) == 5
    shift = np.array([(x + 1) % 5 for x in range(5)], dtype=np.int32)
    cls = conjugacy_class(agl_f5, shift)
    assert len(cls) == 4
    assert list(cls) == naive_class(agl_f5, agl_f5.index_of(shift))


def test_orbit_stabilizer_identity(agl_f5, agl_f7, agl_d9):
    for G in (agl_f5, agl_f7, agl_d9):
        for i in range(G.order):
            row = G.elements[i]
            assert len(conjugacy_class(G, row)) * len(centralizer(G, row)) == G.order


def test_is_subgroup(agl_f7, agl_f5):
    translations = [
        agl_f7.index_of(np.array([(x + c) % 7 for x in range(7)], dtype=np.int32))
        for c in range(7)
    ]
    assert is_subgroup(agl_f7, translations)
    assert is_subgroup(agl_f5, [agl_f5.identity_index])
    involutions = [
        agl_f5.index_of(np.array([(b - x) % 5 for x in range(5)], dtype=np.int32))
        for b in range(5)
    ]
    assert not is_subgroup(agl_f5, involutions)  # identity missing
    with pytest.raises(NotAMember):
        is_subgroup(agl_f5, [0, 99])


def test_index_of_rejects_outsiders(agl_f5):
    with pytest.raises(NotAMember):
        agl_f5.index_of(np.array([2, 1, 0, 3, 4], dtype=np.int32))  # a transposition


def test_affine_needs_valid_nearfield():
    from involq import NearField, AxiomFailure

    f5 = make_field(5, 1)
    mul = f5.mul.copy()
    mul[2, 3] = 4
    broken = NearField(5, "field(5,1)", f5.add, mul)
    with pytest.raises(AxiomFailure):
        affine_group(broken)


def test_bfs_ingestion_matches_direct_affine_construction(agl_f5):
    """Enumerating from generator documents and building affine maps directly
    give the same permutation set (element order may differ)."""
    doc = {"degree": 5, "generators": [[1, 2, 3, 4, 0], [0, 2, 4, 1, 3]]}
    H = parse_group_doc(doc)
    assert H.order == agl_f5.order
    assert set(map(tuple, H.elements)) == set(map(tuple, agl_f5.elements))
