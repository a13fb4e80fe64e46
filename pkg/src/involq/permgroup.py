"""Fully enumerated finite permutation groups.

A permutation of degree d is a 1-D int32 numpy array of images on the points
0..d-1. The fixed composition convention everywhere in this package is
"g then h":

    compose(g, h)(x) == h(g(x))        conjugate(g, h) == h^-1 g h

A :class:`PermGroup` stores every element as a row of a single (order, degree)
array plus a bytes -> index lookup, so membership tests, centralizers and
conjugacy classes are plain vectorized scans. Enumeration order is
deterministic: breadth-first from the identity with generators applied in
document order, each new layer sorted by image sequence.

Groups enter either through :func:`parse_group_doc` (JSON documents of the
form ``{"degree": d, "generators": [[...], ...]}``, 0-based) or through
:func:`affine_group`, which realizes the maps ``x -> (x mul m) add a`` over a
near-field.
"""

from __future__ import annotations

import json

import numpy as np

from .config import group_order_cap
from .errors import (
    AxiomFailure,
    MalformedDocument,
    NotABijection,
    NotAMember,
    OrderCapExceeded,
)
from .nearfield import NearField, verify_nearfield_axioms

# ---------------------------------------------------------------------------
# single-permutation helpers


def identity_perm(degree: int) -> np.ndarray:
    return np.arange(degree, dtype=np.int32)


def as_perm(images, degree: int | None = None) -> np.ndarray:
    arr = np.ascontiguousarray(images, dtype=np.int32)
    if arr.ndim != 1:
        raise NotABijection("a permutation must be a flat image sequence")
    d = len(arr) if degree is None else degree
    if len(arr) != d or not np.array_equal(np.sort(arr), np.arange(d)):
        raise NotABijection(f"{arr.tolist()} is not a bijection on 0..{d - 1}")
    return arr


def compose(g: np.ndarray, h: np.ndarray) -> np.ndarray:
    """g then h: x -> h(g(x))."""
    return h[g]


def invert(g: np.ndarray) -> np.ndarray:
    return np.argsort(g).astype(np.int32)


def conjugate(g: np.ndarray, h: np.ndarray) -> np.ndarray:
    """h^-1 g h: x -> h(g(h^-1(x)))."""
    return h[g[invert(h)]]


def perm_order(g: np.ndarray) -> int:
    ident = np.arange(len(g))
    cur = g
    n = 1
    while not np.array_equal(cur, ident):
        cur = compose(cur, g)
        n += 1
    return n


# ---------------------------------------------------------------------------
# the group container


class PermGroup:
    """Immutable, fully enumerated permutation group."""

    def __init__(self, degree: int, elements: np.ndarray, generators: np.ndarray):
        elements = np.ascontiguousarray(elements, dtype=np.int32)
        generators = np.ascontiguousarray(generators, dtype=np.int32)
        elements.setflags(write=False)
        generators.setflags(write=False)
        self.degree = int(degree)
        self.elements = elements
        self.generators = generators
        self.index: dict[bytes, int] = {
            elements[i].tobytes(): i for i in range(len(elements))
        }
        if len(self.index) != len(elements):
            raise ValueError("duplicate elements")
        ident = identity_perm(degree).tobytes()
        if ident not in self.index:
            raise ValueError("identity missing from element list")
        self.identity_index = self.index[ident]
        self._inverse_indices: np.ndarray | None = None
        self._square_indices: np.ndarray | None = None
        self._centralizer_cache: dict[int, np.ndarray] = {}
        self._s2t_certificate = None  # filled lazily by involq.s2t

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def index_of(self, perm) -> int:
        row = np.ascontiguousarray(perm, dtype=np.int32)
        if row.shape != (self.degree,):
            raise NotAMember(f"degree mismatch: {row.shape} vs {self.degree}")
        idx = self.index.get(row.tobytes())
        if idx is None:
            raise NotAMember(f"{row.tolist()} is not an element")
        return idx

    def contains(self, perm) -> bool:
        try:
            self.index_of(perm)
            return True
        except NotAMember:
            return False

    def indices_of_rows(self, rows: np.ndarray) -> np.ndarray:
        rows = np.ascontiguousarray(rows, dtype=np.int32)
        out = np.empty(len(rows), dtype=np.int64)
        for k in range(len(rows)):
            idx = self.index.get(rows[k].tobytes())
            if idx is None:
                raise NotAMember("row is not an element")
            out[k] = idx
        return out

    @property
    def inverse_indices(self) -> np.ndarray:
        if self._inverse_indices is None:
            inv_rows = np.argsort(self.elements, axis=1).astype(np.int32)
            self._inverse_indices = self.indices_of_rows(inv_rows)
        return self._inverse_indices

    @property
    def square_indices(self) -> np.ndarray:
        if self._square_indices is None:
            sq = np.take_along_axis(self.elements, self.elements, axis=1)
            self._square_indices = self.indices_of_rows(sq)
        return self._square_indices

    def product_index(self, i: int, j: int) -> int:
        row = compose(self.elements[i], self.elements[j])
        return self.index[row.tobytes()]

    def product_indices_with(self, idxs: np.ndarray, j: int) -> np.ndarray:
        """Indices of (element_i then element_j) for every i in idxs."""
        rows = self.elements[j][self.elements[idxs]]
        return self.indices_of_rows(rows)

    def conjugate_indices_by(self, idxs: np.ndarray, h: int) -> np.ndarray:
        """Indices of h^-1 g h for every g in idxs."""
        hrow = self.elements[h]
        hinv = self.elements[self.inverse_indices[h]]
        rows = hrow[self.elements[idxs][:, hinv]]
        return self.indices_of_rows(rows)


# ---------------------------------------------------------------------------
# ingestion


def _bfs_enumerate(degree: int, gens: np.ndarray, cap: int) -> np.ndarray:
    ident = identity_perm(degree)
    seen = {ident.tobytes()}
    ordered = [ident]
    layer = np.array([ident], dtype=np.int32)
    while len(layer):
        fresh = {}
        for g in gens:
            produced = g[layer]  # rows: u then g
            for row in produced:
                key = row.tobytes()
                if key not in seen and key not in fresh:
                    fresh[key] = row
        if not fresh:
            break
        rows = sorted(fresh.values(), key=lambda r: tuple(r))
        for row in rows:
            seen.add(row.tobytes())
            ordered.append(row)
        if len(ordered) > cap:
            raise OrderCapExceeded(f"group order exceeds cap {cap}")
        layer = np.array(rows, dtype=np.int32)
    return np.array(ordered, dtype=np.int32)


def parse_group_doc(doc, order_cap: int | None = None) -> PermGroup:
    """Enumerate the group generated by a GroupDoc (dict or JSON text)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedDocument(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedDocument("document must be a JSON object")
    if "degree" not in doc or "generators" not in doc:
        raise MalformedDocument("document needs 'degree' and 'generators'")
    degree = doc["degree"]
    if not isinstance(degree, int) or degree < 1:
        raise MalformedDocument(f"degree must be a positive integer, got {degree!r}")
    raw_gens = doc["generators"]
    if not isinstance(raw_gens, list):
        raise MalformedDocument("'generators' must be a list of image sequences")

    gens = []
    for k, seq in enumerate(raw_gens):
        if not isinstance(seq, list) or len(seq) != degree:
            raise MalformedDocument(f"generator {k} is not a length-{degree} list")
        try:
            gens.append(as_perm(seq, degree))
        except NotABijection as exc:
            raise NotABijection(str(exc), generator_index=k) from exc

    cap = group_order_cap(order_cap)
    gen_arr = (
        np.array(gens, dtype=np.int32)
        if gens
        else np.empty((0, degree), dtype=np.int32)
    )
    elements = _bfs_enumerate(degree, gen_arr, cap)
    return PermGroup(degree, elements, gen_arr)


def affine_group(nf: NearField, order_cap: int | None = None) -> PermGroup:
    """The group { x -> (x mul m) add a : m != 0 } acting on 0..|nf|-1.

    Element order is deterministic: m ascending, then a ascending, so the
    identity (m=1, a=0) is element 0.
    """
    if not nf._verified:
        report = verify_nearfield_axioms(nf)
        if not report.ok:
            raise AxiomFailure(
                f"near-field fails axiom {report.failures()[0].name}"
            )
        nf._verified = True
    q = nf.order
    cap = group_order_cap(order_cap)
    if q * (q - 1) > cap:
        raise OrderCapExceeded(f"group order {q * (q - 1)} exceeds cap {cap}")

    blocks = []
    for m in range(1, q):
        scaled = nf.mul[:, m]          # x -> x mul m
        blocks.append(nf.add[scaled].T)  # row a: x -> (x mul m) add a
    elements = np.concatenate(blocks, axis=0).astype(np.int32)
    if len({elements[i].tobytes() for i in range(len(elements))}) != len(elements):
        raise AxiomFailure("distinct (a, m) pairs produced equal affine maps")

    gens = []
    for a in range(1, q):
        gens.append(nf.add[:, a])      # x -> x add a
    for m in range(2, q):
        gens.append(nf.mul[:, m])      # x -> x mul m
    return PermGroup(q, elements, np.array(gens, dtype=np.int32))


# ---------------------------------------------------------------------------
# scans


def centralizer(G: PermGroup, g) -> np.ndarray:
    """Element indices of everything commuting with g, in enumeration order."""
    gi = G.index_of(g)
    cached = G._centralizer_cache.get(gi)
    if cached is not None:
        return cached
    grow = G.elements[gi]
    left = grow[G.elements]        # h then g
    right = G.elements[:, grow]    # g then h
    mask = np.all(left == right, axis=1)
    result = np.nonzero(mask)[0].astype(np.int64)
    result.setflags(write=False)
    G._centralizer_cache[gi] = result
    return result


def conjugacy_class(G: PermGroup, g) -> np.ndarray:
    """Element indices of { h^-1 g h : h in G }, in enumeration order."""
    gi = G.index_of(g)
    grow = G.elements[gi]
    inv_rows = G.elements[G.inverse_indices]
    part = grow[inv_rows]                       # x -> g(h^-1(x))
    rows = np.take_along_axis(G.elements, part, axis=1)
    idxs = sorted({G.index[rows[k].tobytes()] for k in range(len(rows))})
    return np.array(idxs, dtype=np.int64)


def is_subgroup(G: PermGroup, indices) -> bool:
    """True iff the listed elements contain the identity and are product-closed."""
    idxs = np.asarray(sorted(set(int(i) for i in indices)), dtype=np.int64)
    if np.any(idxs < 0) or np.any(idxs >= G.order):
        raise NotAMember("index out of range")
    member = set(idxs.tolist())
    if G.identity_index not in member:
        return False
    for i in idxs:
        products = G.product_indices_with(idxs, int(i))
        if not all(int(pk) in member for pk in products):
            return False
    return True
