"""Splitting decision and near-field recovery for certified groups.

The split test is the product-closure criterion: the group splits (has a
nontrivial abelian normal subgroup) exactly when the translation set is a
subgroup, in which case that subgroup is abelian and normal, and it is the
located witness.

Coordinatization reconstructs a near-field from a split group: with base
points 0 and 1, addition moves along the regular translation action
(``a + b`` = the image of a under the translation taking 0 to b) and
multiplication along the regular action of the point stabilizer of 0
(``a * m`` = the image of a under the stabilizer element taking 1 to m).
The recovered tables always face the full axiom scan before being returned;
the affine group they induce must reproduce the input permutations exactly,
which :func:`roundtrip_check` verifies.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AxiomRecoveryFailure, CharacteristicAnomaly, NotSplit
from .nearfield import NearField, verify_nearfield_axioms
from .permgroup import PermGroup, affine_group
from .s2t import _require_certified


@dataclass
class SplitReport:
    j2_is_subgroup: bool
    j2_abelian: bool
    split: bool
    abelian_normal_subgroup: list[int] | None = None
    closure_witness: tuple | None = None

    def as_dict(self) -> dict:
        return {
            "j2_is_subgroup": self.j2_is_subgroup,
            "j2_abelian": self.j2_abelian,
            "split": self.split,
            "abelian_normal_subgroup": self.abelian_normal_subgroup,
            "closure_witness": list(self.closure_witness) if self.closure_witness else None,
        }


@dataclass
class Coordinatization:
    zero_point: int
    one_point: int
    nearfield: NearField
    relabeling: np.ndarray = field(repr=False)

    def as_dict(self) -> dict:
        return {
            "zero_point": self.zero_point,
            "one_point": self.one_point,
            "relabeling": [int(x) for x in self.relabeling],
            "nearfield": self.nearfield.to_json_dict(),
        }


def neumann_split_test(G: PermGroup) -> SplitReport:
    """Split iff the translation set is product-closed; then it must also be
    abelian and conjugation-stable, which is asserted rather than assumed."""
    cert = _require_certified(G)
    trans = cert._translations
    tset = set(int(t) for t in trans)
    rows = G.elements[trans]
    nt = len(trans)

    closed = True
    witness = None
    for a in range(nt):
        produced = rows[:, rows[a]]  # a then b
        for b in range(nt):
            if G.index.get(produced[b].tobytes()) not in tset:
                closed = False
                witness = (int(trans[a]), int(trans[b]))
                break
        if not closed:
            break

    if not closed:
        return SplitReport(
            j2_is_subgroup=False, j2_abelian=False, split=False,
            closure_witness=witness,
        )

    for a in range(nt):
        left = rows[a][rows]
        right = rows[:, rows[a]]
        if not np.all(left == right):
            raise CharacteristicAnomaly("translation subgroup is not abelian")

    for g in range(len(G.generators)):
        grow = G.generators[g]
        ginv = np.argsort(grow).astype(np.int32)
        conj = grow[rows[:, ginv]]
        for b in range(nt):
            if G.index.get(conj[b].tobytes()) not in tset:
                raise CharacteristicAnomaly("translation subgroup is not normal")

    return SplitReport(
        j2_is_subgroup=True,
        j2_abelian=True,
        split=True,
        abelian_normal_subgroup=[int(t) for t in trans],
    )


def coordinatize(G: PermGroup, split_report: SplitReport | None = None) -> Coordinatization:
    """Recover the coordinatizing near-field of a split group.

    Base points are the least indices 0 and 1. Because points double as
    element indices and the base points are already 0 and 1, the recorded
    point-to-element relabeling is the identity map.
    """
    if split_report is None:
        split_report = neumann_split_test(G)
    if not split_report.split:
        raise NotSplit("translations are not a subgroup")
    d = G.degree
    trans_rows = G.elements[_require_certified(G)._translations]

    add = np.empty((d, d), dtype=np.int32)
    for b in range(d):
        mask = trans_rows[:, 0] == b
        count = int(mask.sum())
        if count != 1:
            raise AxiomRecoveryFailure(
                f"{count} translations send 0 to {b}; the action is not regular"
            )
        add[:, b] = trans_rows[np.nonzero(mask)[0][0]]

    stab_mask = G.elements[:, 0] == 0
    stab_rows = G.elements[np.nonzero(stab_mask)[0]]
    mul = np.empty((d, d), dtype=np.int32)
    mul[:, 0] = 0
    for m in range(1, d):
        mask = stab_rows[:, 1] == m
        count = int(mask.sum())
        if count != 1:
            raise AxiomRecoveryFailure(
                f"{count} stabilizer elements send 1 to {m}; the action is not regular"
            )
        mul[:, m] = stab_rows[np.nonzero(mask)[0][0]]

    nf = NearField(d, f"recovered({d})", add, mul)
    report = verify_nearfield_axioms(nf)
    if not report.ok:
        bad = report.failures()[0]
        raise AxiomRecoveryFailure(f"recovered tables fail {bad.name} at {bad.witness}")
    nf._verified = True
    return Coordinatization(
        zero_point=0, one_point=1, nearfield=nf,
        relabeling=np.arange(d, dtype=np.int64),
    )


def roundtrip_check(G: PermGroup, coord: Coordinatization | None = None) -> bool:
    """True iff the affine group of the recovered near-field, relabeled back,
    equals the input group as a set of permutations."""
    if coord is None:
        coord = coordinatize(G)
    H = affine_group(coord.nearfield)
    if H.order != G.order or H.degree != G.degree:
        return False
    rel = coord.relabeling.astype(np.int32)
    rel_inv = np.argsort(rel).astype(np.int32)
    relabeled = rel[H.elements[:, rel_inv]]  # x -> rel(h(rel^-1(x)))
    keys = {relabeled[k].tobytes() for k in range(len(relabeled))}
    return keys == set(G.index.keys())
