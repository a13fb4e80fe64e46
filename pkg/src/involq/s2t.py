"""Certification of sharp 2-transitivity and the derived element sets.

A degree-d group is sharply 2-transitive iff its order is d(d-1) and it is
transitive on ordered distinct pairs; one pair orbit suffices for the latter
since orbits partition the pairs. The certificate also records the involution
set J, the translation set (all products of two involutions), the permutation
characteristic (2 when involutions are fixed-point-free, else the common
prime order of nontrivial translations) and the conjugacy-class flags.

Certificates are cached on the group object; all downstream modules
(geometry, splitting, census) read the same certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CharacteristicAnomaly,
    CharacteristicTwo,
    NotSharply2Transitive,
    PointsEqual,
    UniquenessViolated,
)
from .permgroup import PermGroup, conjugacy_class, centralizer, perm_order
from .reporting import Check, CheckReport


@dataclass
class S2TCertificate:
    degree: int
    order: int
    order_ok: bool
    pair_transitive: bool
    valid: bool
    failure: dict | None = None
    involution_count: int | None = None
    fixed_point_profile: str | None = None
    characteristic: int | None = None
    j_single_class: bool | None = None
    j2_single_class: bool | None = None
    # caches for downstream modules, not serialized
    _j: np.ndarray | None = field(default=None, repr=False)
    _translations: np.ndarray | None = field(default=None, repr=False)
    _fix_points: np.ndarray | None = field(default=None, repr=False)

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "order": self.order,
            "order_ok": self.order_ok,
            "pair_transitive": self.pair_transitive,
            "valid": self.valid,
            "failure": self.failure,
            "involution_count": self.involution_count,
            "fixed_point_profile": self.fixed_point_profile,
            "characteristic": self.characteristic,
            "j_single_class": self.j_single_class,
            "j2_single_class": self.j2_single_class,
        }


def _involution_indices(G: PermGroup) -> np.ndarray:
    squared = np.take_along_axis(G.elements, G.elements, axis=1)
    is_sq_id = np.all(squared == np.arange(G.degree), axis=1)
    is_id = np.all(G.elements == np.arange(G.degree), axis=1)
    return np.nonzero(is_sq_id & ~is_id)[0].astype(np.int64)


def _translation_indices(G: PermGroup, j_idx: np.ndarray) -> np.ndarray:
    rows = G.elements[j_idx]
    found: set[int] = set()
    for i in range(len(j_idx)):
        produced = rows[:, rows[i]]  # row k: i then j_k
        for k in range(len(j_idx)):
            found.add(G.index[produced[k].tobytes()])
    return np.array(sorted(found), dtype=np.int64)


def certify_sharply_2_transitive(G: PermGroup) -> S2TCertificate:
    """Check regularity on ordered distinct pairs and fill the certificate."""
    if G._s2t_certificate is not None:
        return G._s2t_certificate
    d = G.degree
    if d < 2:
        raise ValueError("need degree >= 2")
    order = G.order
    expected = d * (d - 1)
    order_ok = order == expected

    pair_rows = G.elements[:, [0, 1]]
    pairs = {(int(a), int(b)) for a, b in pair_rows}
    pair_transitive = len(pairs) == expected
    cert = S2TCertificate(
        degree=d,
        order=order,
        order_ok=order_ok,
        pair_transitive=pair_transitive,
        valid=order_ok and pair_transitive,
    )
    if not order_ok:
        cert.failure = {"check": "order", "expected": expected, "actual": order}
    elif not pair_transitive:
        missing = next(
            (x, y)
            for x in range(d)
            for y in range(d)
            if x != y and (x, y) not in pairs
        )
        cert.failure = {"check": "pair-orbit", "missing_pair": list(missing)}

    if cert.valid:
        _fill_certificate(G, cert)
    G._s2t_certificate = cert
    return cert


def _fill_certificate(G: PermGroup, cert: S2TCertificate) -> None:
    d = G.degree
    j_idx = _involution_indices(G)
    if len(j_idx) == 0:
        raise CharacteristicAnomaly("a sharply 2-transitive group has involutions")
    cert._j = j_idx
    cert.involution_count = len(j_idx)

    fixed = G.elements[j_idx] == np.arange(d)
    counts = fixed.sum(axis=1)
    if np.all(counts == 0):
        cert.fixed_point_profile = "all-zero-fixed"
        cert.characteristic = 2
    elif np.all(counts == 1):
        cert.fixed_point_profile = "all-one-fixed"
        cert._fix_points = fixed.argmax(axis=1).astype(np.int64)
    else:
        raise CharacteristicAnomaly("mixed involution fixed-point counts")

    trans = _translation_indices(G, j_idx)
    cert._translations = trans

    nontrivial = trans[trans != G.identity_index]
    if cert.characteristic != 2:
        orders = {perm_order(G.elements[t]) for t in nontrivial}
        if len(orders) != 1:
            raise CharacteristicAnomaly(f"translation orders not constant: {sorted(orders)}")
        p = orders.pop()
        from .nearfield import is_prime

        if not is_prime(p):
            raise CharacteristicAnomaly(f"translation order {p} is not prime")
        cert.characteristic = p

    cls = conjugacy_class(G, G.elements[j_idx[0]])
    cert.j_single_class = np.array_equal(cls, j_idx)
    if cert.characteristic != 2 and len(nontrivial):
        cls2 = conjugacy_class(G, G.elements[nontrivial[0]])
        cert.j2_single_class = np.array_equal(cls2, nontrivial)


def _require_certified(G: PermGroup) -> S2TCertificate:
    cert = certify_sharply_2_transitive(G)
    if not cert.valid:
        raise NotSharply2Transitive(f"certificate failed: {cert.failure}")
    return cert


def involutions(G: PermGroup) -> np.ndarray:
    """Element indices of all order-2 elements, in enumeration order."""
    cert = _require_certified(G)
    if cert.j_single_class is not True:
        raise CharacteristicAnomaly("involutions do not form a single conjugacy class")
    return cert._j


def translations(G: PermGroup) -> np.ndarray:
    """Element indices of all products of two involutions (identity included)."""
    cert = _require_certified(G)
    trans = cert._translations
    nontrivial = trans[trans != G.identity_index]
    rows = G.elements[nontrivial]
    if np.any(np.any(rows == np.arange(G.degree), axis=1)):
        raise CharacteristicAnomaly("a nontrivial translation has a fixed point")
    if cert.characteristic != 2 and cert.j2_single_class is not True:
        raise CharacteristicAnomaly("nontrivial translations are not a single class")
    return trans


def characteristic(G: PermGroup) -> int:
    cert = _require_certified(G)
    return int(cert.characteristic)


def fixed_point_of(G: PermGroup, j_position: int) -> int:
    """The unique fixed point of the involution at position j_position in J."""
    cert = _require_certified(G)
    if cert.characteristic == 2:
        raise CharacteristicTwo("fixed points undefined: involutions are free")
    return int(cert._fix_points[j_position])


def swap_involution(G: PermGroup, x: int, y: int) -> np.ndarray:
    """The unique element exchanging the points x and y; always order 2."""
    _require_certified(G)
    if x == y:
        raise PointsEqual(f"need two distinct points, got {x} twice")
    mask = (G.elements[:, x] == y) & (G.elements[:, y] == x)
    hits = np.nonzero(mask)[0]
    if len(hits) != 1:
        raise UniquenessViolated(
            f"{len(hits)} elements swap {x} and {y}; input is not sharply 2-transitive"
        )
    row = G.elements[hits[0]]
    if not np.array_equal(row[row], np.arange(G.degree)):
        raise UniquenessViolated(f"unique swapper of ({x},{y}) is not an involution")
    return row


def verify_basic_properties(G: PermGroup) -> CheckReport:
    """Exhaustive scan of the three standard regularity facts (char != 2):

    (a) the centralizer of each involution acts regularly, by conjugation,
        on the remaining involutions;
    (b) for any involutions i, j there is a unique involution k with
        k^-1 i k = j;
    (c) the translations meet every involution centralizer only in 1.
    """
    cert = _require_certified(G)
    if cert.characteristic == 2:
        raise CharacteristicTwo("these properties presuppose involutions with fixed points")
    j_idx = cert._j
    n = len(j_idx)
    jrows = G.elements[j_idx]
    pos_of = {jrows[k].tobytes(): k for k in range(n)}

    def conj_positions(h: int) -> np.ndarray:
        """Positions in J of h^-1 j h for every involution j."""
        hrow = G.elements[h]
        hinv = G.elements[G.inverse_indices[h]]
        rows = hrow[jrows[:, hinv]]
        return np.array([pos_of[rows[k].tobytes()] for k in range(n)], dtype=np.int64)

    checks = []

    witness = None
    for ipos in range(n):
        cen = centralizer(G, G.elements[j_idx[ipos]])
        if len(cen) != n - 1:
            witness = (int(j_idx[ipos]), "centralizer-size", len(cen), n - 1)
            break
        table = np.array([conj_positions(int(c)) for c in cen])
        expected = [p for p in range(n) if p != ipos]
        for jpos in expected:
            col = sorted(table[:, jpos].tolist())
            if col != expected:
                witness = (int(j_idx[ipos]), int(j_idx[jpos]))
                break
        if witness:
            break
    checks.append(Check("centralizer-regular-on-other-involutions", witness is None,
                        witness=witness))

    witness = None
    full = list(range(n))
    conj_by_involution = np.array([conj_positions(int(k)) for k in j_idx])
    for ipos in range(n):
        if sorted(conj_by_involution[:, ipos].tolist()) != full:
            witness = (int(j_idx[ipos]),)
            break
    checks.append(Check("involution-conjugation-regular", witness is None,
                        witness=witness))

    witness = None
    trans = set(cert._translations.tolist())
    for ipos in range(n):
        cen = set(centralizer(G, G.elements[j_idx[ipos]]).tolist())
        meet = trans & cen
        if meet != {G.identity_index}:
            witness = (int(j_idx[ipos]), sorted(meet))
            break
    checks.append(Check("translations-meet-centralizers-trivially", witness is None,
                        witness=witness))

    return CheckReport("basic regularity properties", checks)


def fixed_point_bijection_ok(G: PermGroup) -> bool:
    """True iff involution -> fixed point is a bijection onto the points."""
    cert = _require_certified(G)
    if cert.characteristic == 2:
        raise CharacteristicTwo("no fixed points in characteristic 2")
    return sorted(cert._fix_points.tolist()) == list(range(G.degree))
