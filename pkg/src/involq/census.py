"""Cardinality census of the involution power sets, and the line-covering scan.

For a certified group of characteristic != 2 the census records |J| (nhat),
the common centralizer size of nontrivial translations (khat), |J.J| and
|J.J.J| (j2_size, j3_size), their signed difference (lhat), and the sizes of
the sets X_alpha = { i in J : i.alpha is a translation } for sampled alpha.

Everything here is a plain finite count. lhat can be zero or negative; the
report says so explicitly rather than asserting any inequality between the
quantities.

Alphas are sampled exhaustively for degree <= FULL_ALPHA_DEGREE and otherwise
as the first ``alpha_cap`` elements of the triple-product set in enumeration
order, which keeps every run byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CharacteristicTwo, NotInJ3
from .geometry import Geometry
from .permgroup import PermGroup, centralizer
from .reporting import Check, CheckReport
from .s2t import _require_certified

FULL_ALPHA_DEGREE = 9
DEFAULT_ALPHA_CAP = 100


@dataclass
class CensusReport:
    nhat: int
    khat: int
    khat_constant: bool
    j2_size: int
    j3_size: int
    lhat: int
    fiber_identity_ok: bool          # j2_size * khat == nhat**2
    j_disjoint_from_j2: bool
    j3_contains_j: bool
    xalpha_sizes: list[tuple[int, int]] = field(default_factory=list)
    alpha_sample_complete: bool = True
    disclaimer: str = (
        "finite cardinalities only; lhat may be zero or negative and no "
        "inequality between nhat, khat and lhat is asserted"
    )

    @property
    def ok(self) -> bool:
        return (
            self.khat_constant
            and self.fiber_identity_ok
            and self.j_disjoint_from_j2
            and self.j3_contains_j
        )

    def as_dict(self) -> dict:
        return {
            "nhat": self.nhat,
            "khat": self.khat,
            "khat_constant": self.khat_constant,
            "j2_size": self.j2_size,
            "j3_size": self.j3_size,
            "lhat": self.lhat,
            "fiber_identity_ok": self.fiber_identity_ok,
            "j_disjoint_from_j2": self.j_disjoint_from_j2,
            "j3_contains_j": self.j3_contains_j,
            "xalpha_sizes": [[int(a), int(s)] for a, s in self.xalpha_sizes],
            "alpha_sample_complete": self.alpha_sample_complete,
            "disclaimer": self.disclaimer,
        }

    def csv_row(self, entry_id: str = "") -> dict:
        return {
            "id": entry_id,
            "nhat": self.nhat,
            "khat": self.khat,
            "khat_constant": int(self.khat_constant),
            "j2_size": self.j2_size,
            "j3_size": self.j3_size,
            "lhat": self.lhat,
            "fiber_identity_ok": int(self.fiber_identity_ok),
        }


def _require_odd_characteristic(G: PermGroup):
    cert = _require_certified(G)
    if cert.characteristic == 2:
        raise CharacteristicTwo("the census presupposes characteristic != 2")
    return cert


def _triple_products(G: PermGroup, j_idx: np.ndarray, trans: np.ndarray) -> np.ndarray:
    """Sorted element indices of { i.sigma : i in J, sigma in J.J }."""
    cert = G._s2t_certificate
    cached = getattr(cert, "_j3", None) if cert is not None else None
    if cached is not None:
        return cached
    trows = G.elements[trans]
    found: set[int] = set()
    for jpos in range(len(j_idx)):
        produced = trows[:, G.elements[j_idx[jpos]]]  # j then sigma
        for k in range(len(trans)):
            found.add(G.index[produced[k].tobytes()])
    result = np.array(sorted(found), dtype=np.int64)
    if cert is not None:
        cert._j3 = result
    return result


def _alpha_sample(G: PermGroup, j3: np.ndarray, alpha_cap: int | None) -> tuple[np.ndarray, bool]:
    cap = DEFAULT_ALPHA_CAP if alpha_cap is None else alpha_cap
    if G.degree <= FULL_ALPHA_DEGREE or len(j3) <= cap:
        return j3, True
    return j3[:cap], False


def x_alpha(G: PermGroup, alpha) -> np.ndarray:
    """Positions in J of the involutions i with i.alpha in the translation set.

    alpha may be an element index or an image row. It must lie in the triple
    products of J, except that the identity is accepted as the degenerate
    sanity input (its X set is always empty since no involution is a
    translation).
    """
    cert = _require_odd_characteristic(G)
    a_idx = int(alpha) if isinstance(alpha, (int, np.integer)) else G.index_of(alpha)
    if a_idx < 0 or a_idx >= G.order:
        raise NotInJ3(f"no element with index {a_idx}")
    j3 = _triple_products(G, cert._j, cert._translations)
    if a_idx != G.identity_index and a_idx not in set(int(x) for x in j3):
        raise NotInJ3(f"element {a_idx} is not a product of three involutions")
    return _x_alpha_positions(G, cert, a_idx)


def _x_alpha_positions(G: PermGroup, cert, a_idx: int) -> np.ndarray:
    jrows = G.elements[cert._j]
    arow = G.elements[a_idx]
    produced = arow[jrows]  # row p: involution_p then alpha
    tset = set(int(t) for t in cert._translations)
    hits = [
        p for p in range(len(jrows))
        if G.index[produced[p].tobytes()] in tset
    ]
    return np.array(hits, dtype=np.int64)


def census(G: PermGroup, alpha_cap: int | None = None) -> CensusReport:
    """Compute all census quantities by exhaustive product enumeration."""
    cert = _require_odd_characteristic(G)
    j_idx = cert._j
    trans = cert._translations
    nhat = len(j_idx)
    j2_size = len(trans)

    nontrivial = trans[trans != G.identity_index]
    sizes = {len(centralizer(G, G.elements[t])) for t in nontrivial}
    khat_constant = len(sizes) == 1
    khat = sorted(sizes)[0]

    j3 = _triple_products(G, j_idx, trans)
    j3_size = len(j3)
    j3_set = set(int(x) for x in j3)

    sample, complete = _alpha_sample(G, j3, alpha_cap)
    xalpha_sizes = [
        (int(a), len(_x_alpha_positions(G, cert, int(a)))) for a in sample
    ]

    jset = set(int(j) for j in j_idx)
    return CensusReport(
        nhat=nhat,
        khat=khat,
        khat_constant=khat_constant,
        j2_size=j2_size,
        j3_size=j3_size,
        lhat=j3_size - j2_size,
        fiber_identity_ok=j2_size * khat == nhat * nhat,
        j_disjoint_from_j2=not (jset & set(int(t) for t in trans)),
        j3_contains_j=jset <= j3_set,
        xalpha_sizes=xalpha_sizes,
        alpha_sample_complete=complete,
    )


def verify_xalpha_covering(G: PermGroup, geom: Geometry,
                           alpha_cap: int | None = None) -> CheckReport:
    """The line-covering step behind the X_alpha sets, scanned per alpha:

    * line-covering: whenever i.r.s == alpha and v is on the line of (r,s),
      the whole line of (i,v) sits inside X_alpha. Since the line of (r,s)
      depends only on the product r.s == i.alpha, the scan runs over the
      deduplicated witnesses (i, i.alpha) instead of raw triples.
    * point-line-saturation: every member of X_alpha lies on at least one
      line fully inside X_alpha.
    * fiber-size-identity: |X_alpha| * khat equals the number of triples
      (i, r, s) in J^3 with i.r.s == alpha.
    """
    cert = _require_odd_characteristic(G)
    j_idx = cert._j
    n = len(j_idx)
    jrows = G.elements[j_idx]
    trans = cert._translations
    nontrivial = trans[trans != G.identity_index]
    khat = len(centralizer(G, G.elements[nontrivial[0]]))

    # pair-product fibers: how many (r, s) in J x J give each translation
    fiber: dict[int, int] = {}
    for a in range(n):
        produced = jrows[:, jrows[a]]  # a then b
        for b in range(n):
            idx = G.index[produced[b].tobytes()]
            fiber[idx] = fiber.get(idx, 0) + 1

    j3 = _triple_products(G, j_idx, trans)
    sample, complete = _alpha_sample(G, j3, alpha_cap)

    line_point_sets = [set(line.points) for line in geom.lines]
    checks_note = f"alphas checked: {len(sample)}/{len(j3)}"

    witness_cover = witness_sat = witness_fiber = None
    tset = set(int(t) for t in trans)
    for a_val in sample:
        a_idx = int(a_val)
        arow = G.elements[a_idx]
        produced = arow[jrows]  # involution then alpha
        sigma_of = {}
        xpos = []
        for p in range(n):
            idx = G.index[produced[p].tobytes()]
            if idx in tset:
                xpos.append(p)
                sigma_of[p] = idx
        xset = set(xpos)
        inside: dict[int, bool] = {}   # line id -> line subset of X_alpha

        def line_inside(lid: int) -> bool:
            hit = inside.get(lid)
            if hit is None:
                hit = line_point_sets[lid] <= xset
                inside[lid] = hit
            return hit

        triple_count = sum(fiber.get(sigma_of[p], 0) for p in xpos)
        if witness_fiber is None and triple_count != len(xpos) * khat:
            witness_fiber = (a_idx, triple_count, len(xpos) * khat)

        if witness_cover is None:
            for p in xpos:
                sigma = sigma_of[p]
                if sigma == G.identity_index:
                    continue  # degenerate: r == s carries no line
                lid = geom.line_of_translation[sigma]
                for v in geom.lines[lid].points:
                    if v == p:
                        continue
                    if not line_inside(int(geom.line_of_pair[p, v])):
                        witness_cover = (a_idx, int(j_idx[p]), int(j_idx[v]))
                        break
                if witness_cover:
                    break

        if witness_sat is None:
            for p in xpos:
                if not any(line_inside(lid) for lid in geom.incidence[p]):
                    witness_sat = (a_idx, int(j_idx[p]))
                    break

    checks = [
        Check("line-covering", witness_cover is None, witness=witness_cover,
              note=checks_note),
        Check("point-line-saturation", witness_sat is None, witness=witness_sat),
        Check("fiber-size-identity", witness_fiber is None, witness=witness_fiber),
    ]
    report = CheckReport("triple-product line covering", checks)
    report.alphas_checked = len(sample)
    report.alphas_total = len(j3)
    report.complete = complete
    return report
