"""Built-in verification targets.

The catalog holds, for each degree bound:

* affine groups over every finite field of odd order (the split positives),
* the affine group over GF(4) as the characteristic-2 path,
* affine groups over every Dickson near-field with odd q, n >= 2,
* the symmetric group on 4 points as a certification-negative fixture.

Entries carry the flags the pipeline expects to observe, so a batch run can
distinguish "this fixture failed as designed" from a real regression.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvolqError
from .nearfield import is_dickson_pair, make_dickson, make_field, prime_power
from .permgroup import PermGroup, affine_group, parse_group_doc

DEFAULT_MAX_DEGREE = 121

SYM4_DOC = {"degree": 4, "generators": [[1, 2, 3, 0], [1, 0, 2, 3]]}


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    family: str                  # agl-field | agl-dickson | ingested
    params: tuple
    degree: int
    expected_certified: bool
    expected_split: bool | None
    expected_characteristic: int | None

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "family": self.family,
            "params": list(self.params),
            "degree": self.degree,
            "expected_certified": self.expected_certified,
            "expected_split": self.expected_split,
            "expected_characteristic": self.expected_characteristic,
        }


def _odd_prime_powers(limit: int) -> list[int]:
    out = []
    for q in range(3, limit + 1, 2):
        if prime_power(q) is not None:
            out.append(q)
    return out


def run_catalog(max_degree: int = DEFAULT_MAX_DEGREE) -> list[CatalogEntry]:
    """All built-in entries of degree <= max_degree, in sorted id order."""
    if max_degree < 3:
        raise ValueError("need max_degree >= 3")
    entries = []
    for q in _odd_prime_powers(max_degree):
        p, e = prime_power(q)
        entries.append(
            CatalogEntry(
                id=f"agl-field-{q}",
                family="agl-field",
                params=(p, e),
                degree=q,
                expected_certified=True,
                expected_split=True,
                expected_characteristic=p,
            )
        )
    if max_degree >= 4:
        entries.append(
            CatalogEntry(
                id="agl-field-4",
                family="agl-field",
                params=(2, 2),
                degree=4,
                expected_certified=True,
                expected_split=True,
                expected_characteristic=2,
            )
        )
        entries.append(
            CatalogEntry(
                id="sym4-fixture",
                family="ingested",
                params=(),
                degree=4,
                expected_certified=False,
                expected_split=None,
                expected_characteristic=None,
            )
        )
    for q in _odd_prime_powers(max_degree):
        n = 2
        while q**n <= max_degree:
            if is_dickson_pair(q, n):
                entries.append(
                    CatalogEntry(
                        id=f"agl-dickson-{q}-{n}",
                        family="agl-dickson",
                        params=(q, n),
                        degree=q**n,
                        expected_certified=True,
                        expected_split=True,
                        expected_characteristic=prime_power(q)[0],
                    )
                )
            n += 1
    return sorted(entries, key=lambda e: e.id)


def build_entry(entry: CatalogEntry) -> PermGroup:
    if entry.family == "agl-field":
        p, e = entry.params
        return affine_group(make_field(p, e))
    if entry.family == "agl-dickson":
        q, n = entry.params
        return affine_group(make_dickson(q, n))
    if entry.id == "sym4-fixture":
        return parse_group_doc(SYM4_DOC)
    raise InvolqError(f"cannot build entry {entry.id}")


def find_entry(entry_id: str, max_degree: int = DEFAULT_MAX_DEGREE) -> CatalogEntry | None:
    for entry in run_catalog(max_degree):
        if entry.id == entry_id:
            return entry
    return None
