"""Finite near-fields as explicit addition/multiplication tables.

Two constructions are provided:

* ``make_field(p, e)`` -- the field GF(p^e) over the lexicographically least
  monic irreducible polynomial of degree e over GF(p).
* ``make_dickson(q, n)`` -- the twisted near-field of order q^n obtained from
  GF(q^n) by replacing multiplication with ``x * y = frob(x, r(y)) * y``,
  where ``r(y)`` is the twist class of ``y``.

Elements are the indices 0..order-1; ``0`` is the additive and ``1`` the
multiplicative identity in every table produced here. A near-field keeps the
additive group of its field but is only right-distributive, which is the
convention matching the affine action ``x -> (x mul m) add a`` used by
:func:`involq.permgroup.affine_group`.

Index encoding for GF(p^e): the element ``sum c_i * X**i`` (polynomial basis
modulo the chosen irreducible) has index ``sum c_i * p**i``. "Lexicographically
least" irreducible means the non-leading coefficient vector, read from the
highest degree down, is smallest -- equivalently the polynomial whose
coefficient digits encode the smallest base-p integer.

Tables are numpy int32 arrays, write-protected after construction, so values
are immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import nearfield_order_cap
from .errors import (
    ConstructionSanityFailure,
    EvenCharacteristicUnsupported,
    NotDicksonPair,
    NotPrime,
    OrderCapExceeded,
)
from .reporting import Check, CheckReport

# ---------------------------------------------------------------------------
# small integer helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, e) with q == p**e, or None if q is not a prime power."""
    if q < 2:
        return None
    ps = prime_factors(q)
    if len(ps) != 1:
        return None
    p = ps[0]
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p), little-endian coefficient lists


def _poly_divisible(num: list[int], den: list[int], p: int) -> bool:
    """True if den (monic) divides num over GF(p)."""
    num = list(num)
    dd = len(den) - 1
    for k in range(len(num) - 1 - dd, -1, -1):
        c = num[dd + k]
        if c:
            for i in range(dd + 1):
                num[i + k] = (num[i + k] - c * den[i]) % p
    return not any(num[:dd])


def _digits(k: int, p: int, e: int) -> list[int]:
    return [(k // p**i) % p for i in range(e)]


def least_irreducible(p: int, e: int) -> list[int]:
    """Least monic irreducible of degree e over GF(p), little-endian coeffs.

    Candidates x^e + c are scanned in increasing order of the base-p integer
    encoded by the coefficient digits of c; a candidate is irreducible iff no
    monic polynomial of degree 1..e//2 divides it.
    """
    if e == 1:
        return [0, 1]
    divisors = []
    for d in range(1, e // 2 + 1):
        for t in range(p**d):
            divisors.append(_digits(t, p, d) + [1])
    for k in range(p**e):
        cand = _digits(k, p, e) + [1]
        if all(not _poly_divisible(cand, den, p) for den in divisors):
            return cand
    raise ConstructionSanityFailure(f"no irreducible of degree {e} over GF({p})")


# ---------------------------------------------------------------------------
# the NearField value


class NearField:
    """An order-q algebra given by total add/mul tables on indices 0..q-1.

    ``zero`` is index 0 and ``one`` is index 1. ``char_p`` is the additive
    order of ``one`` (0 if that order is not finite, which only happens for
    hand-built broken tables). The constructor performs shape checks only;
    axioms are the business of :func:`verify_nearfield_axioms`, so that
    deliberately corrupted tables can be built and reported on.
    """

    zero = 0
    one = 1

    def __init__(self, order: int, family: str, add, mul):
        add = np.ascontiguousarray(add, dtype=np.int32)
        mul = np.ascontiguousarray(mul, dtype=np.int32)
        if add.shape != (order, order) or mul.shape != (order, order):
            raise ValueError("tables must be order x order")
        if order < 2:
            raise ValueError("need at least the elements 0 and 1")
        if add.min() < 0 or add.max() >= order or mul.min() < 0 or mul.max() >= order:
            raise ValueError("table entries out of range")
        add.setflags(write=False)
        mul.setflags(write=False)
        self.order = int(order)
        self.family = family
        self.add = add
        self.mul = mul
        self.char_p = self._additive_order_of_one()
        self._verified = False

    def _additive_order_of_one(self) -> int:
        cur, count = 1, 1
        while cur != 0:
            cur = int(self.add[cur, 1])
            count += 1
            if count > self.order + 1:
                return 0
        return count

    @property
    def is_field_family(self) -> bool:
        return self.family.startswith("field(")

    def neg(self, a: int) -> int:
        row = self.add[a]
        hits = np.nonzero(row == 0)[0]
        if len(hits) != 1:
            raise ValueError(f"element {a} has {len(hits)} additive inverses")
        return int(hits[0])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        row = self.mul[a]
        hits = [b for b in np.nonzero(row == 1)[0] if self.mul[b, a] == 1]
        if len(hits) != 1:
            raise ValueError(f"element {a} has {len(hits)} two-sided inverses")
        return int(hits[0])

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "family": self.family,
            "add": self.add.tolist(),
            "mul": self.mul.tolist(),
        }

    def __repr__(self):
        return f"NearField(order={self.order}, family={self.family!r})"


def nearfield_from_json(doc: dict) -> NearField:
    return NearField(int(doc["order"]), str(doc["family"]), doc["add"], doc["mul"])


# ---------------------------------------------------------------------------
# field construction


def make_field(p: int, e: int = 1, order_cap: int | None = None, verify: bool = True) -> NearField:
    """Build GF(p^e) as index tables.

    The representation is canonical: polynomial basis modulo
    :func:`least_irreducible`. Identical inputs produce identical tables.
    """
    if not isinstance(p, int) or not isinstance(e, int):
        raise TypeError("p and e must be integers")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("e must be >= 1")
    q = p**e
    cap = nearfield_order_cap(order_cap)
    if q > cap:
        raise OrderCapExceeded(f"order {q} exceeds cap {cap}")

    if e == 1:
        idx = np.arange(q, dtype=np.int64)
        add = (idx[:, None] + idx[None, :]) % p
        mul = (idx[:, None] * idx[None, :]) % p
        nf = NearField(q, f"field({p},{e})", add, mul)
        nf.modulus = least_irreducible(p, 1)
    else:
        f = least_irreducible(p, e)
        pw = p ** np.arange(e, dtype=np.int64)
        D = (np.arange(q, dtype=np.int64)[:, None] // pw[None, :]) % p

        add = np.empty((q, q), dtype=np.int32)
        step = max(1, (1 << 20) // q)
        for s in range(0, q, step):
            block = (D[s : s + step, None, :] + D[None, :, :]) % p
            add[s : s + step] = block @ pw

        # red[j] = coefficient vector of X**(e+j) modulo f
        red = np.zeros((e - 1, e), dtype=np.int64)
        cur = [(-c) % p for c in f[:e]]
        red[0] = cur
        for j in range(1, e - 1):
            overflow = cur[-1]
            cur = [0] + cur[:-1]
            cur = [(cur[i] + overflow * red[0][i]) % p for i in range(e)]
            red[j] = cur

        mul = np.empty((q, q), dtype=np.int32)
        conv = np.zeros((q, 2 * e - 1), dtype=np.int64)
        for a in range(q):
            conv[:] = 0
            da = D[a]
            for i in range(e):
                if da[i]:
                    conv[:, i : i + e] += da[i] * D
            vec = (conv[:, :e] + conv[:, e:] @ red) % p
            mul[a] = vec @ pw
        nf = NearField(q, f"field({p},{e})", add, mul)
        nf.modulus = f

    if verify:
        report = verify_nearfield_axioms(nf)
        if not report.ok:
            raise ConstructionSanityFailure(
                f"field({p},{e}) failed axiom {report.failures()[0].name}"
            )
        nf._verified = True
    return nf


# ---------------------------------------------------------------------------
# Dickson near-fields


def is_dickson_pair(q: int, n: int) -> bool:
    """True iff every prime divisor of n divides q-1, and q = 1 mod 4 when 4 | n."""
    if q < 2 or n < 1:
        raise ValueError("need q >= 2 and n >= 1")
    if any((q - 1) % r != 0 for r in prime_factors(n)):
        return False
    if n % 4 == 0 and q % 4 != 1:
        return False
    return True


def _multiplicative_order(mul: np.ndarray, g: int, bound: int) -> int:
    cur, count = g, 1
    while cur != 1:
        cur = int(mul[cur, g])
        count += 1
        if count > bound:
            return 0
    return count


def make_dickson(q: int, n: int, order_cap: int | None = None) -> NearField:
    """Build the Dickson near-field of order q^n (q an odd prime power, n >= 2).

    Underlying additive group: GF(q^n). Multiplication: ``x * y`` is the field
    product of ``y`` with ``x`` raised to the q^r-th power, r being the twist
    class of y. Classes: fix the least-index generator g of GF(q^n)*; the
    class of ``y = g**i`` is the unique r in 0..n-1 with
    ``i = (q**r - 1)/(q - 1) (mod n)``. The classes must partition the nonzero
    elements into n blocks of size (q^n - 1)/n and the finished table must
    pass every required near-field axiom; both are enforced.
    """
    pe = prime_power(q)
    if pe is None:
        raise NotDicksonPair(f"{q} is not a prime power")
    if not is_dickson_pair(q, n):
        raise NotDicksonPair(f"({q},{n}) is not a Dickson pair")
    if q % 2 == 0:
        raise EvenCharacteristicUnsupported("even q is not supported")
    if n < 2:
        raise ValueError("need n >= 2; use make_field for n = 1")
    p, e = pe
    order = q**n
    cap = nearfield_order_cap(order_cap)
    if order > cap:
        raise OrderCapExceeded(f"order {order} exceeds cap {cap}")

    K = make_field(p, e * n, order_cap=order_cap)
    m = order - 1

    g = 0
    for cand in range(2, order):
        if _multiplicative_order(K.mul, cand, m) == m:
            g = cand
            break
    if g == 0:
        raise ConstructionSanityFailure("no multiplicative generator found")

    dlog = np.full(order, -1, dtype=np.int64)
    dlog[1] = 0
    cur = 1
    for i in range(1, m):
        cur = int(K.mul[cur, g])
        dlog[cur] = i
    if np.any(dlog[1:] < 0):
        raise ConstructionSanityFailure("generator powers do not cover nonzeros")

    # residue of the twist-class anchor exponent for each r
    anchors = [((q**r - 1) // (q - 1)) % n for r in range(n)]
    if len(set(anchors)) != n:
        raise ConstructionSanityFailure("twist anchors do not separate classes mod n")
    class_of_residue = {res: r for r, res in enumerate(anchors)}

    class_of = np.full(order, -1, dtype=np.int64)
    for y in range(1, order):
        res = int(dlog[y]) % n
        r = class_of_residue.get(res)
        if r is None:
            raise ConstructionSanityFailure(f"element {y} falls outside every twist class")
        class_of[y] = r
    sizes = np.bincount(class_of[1:], minlength=n)
    if not np.all(sizes == m // n):
        raise ConstructionSanityFailure(f"twist classes have sizes {sizes.tolist()}")

    # frobenius x -> x^p as an index permutation, then q^r-th powers by iteration
    idx = np.arange(order, dtype=np.int64)
    frob_p = idx.copy()
    for _ in range(p - 1):
        frob_p = K.mul[frob_p, idx]
    frob_qr = np.empty((n, order), dtype=np.int64)
    frob_qr[0] = idx
    for r in range(1, n):
        step = frob_qr[r - 1]
        for _ in range(e):
            step = frob_p[step]
        frob_qr[r] = step

    mul = np.empty((order, order), dtype=np.int32)
    mul[:, 0] = 0
    for y in range(1, order):
        mul[:, y] = K.mul[frob_qr[class_of[y]], y]

    nf = NearField(order, f"dickson({q},{n})", K.add, mul)
    report = verify_nearfield_axioms(nf)
    if not report.ok:
        bad = report.failures()[0]
        raise ConstructionSanityFailure(
            f"dickson({q},{n}) failed axiom {bad.name} at {bad.witness}"
        )
    nf._verified = True
    nf.twist_generator = g
    return nf


# ---------------------------------------------------------------------------
# exhaustive axiom verification


def _first_mismatch3(lhs_fn, q: int) -> tuple | None:
    """Least (a,b,c) where the chunked triple comparison fails, else None."""
    step = max(1, (1 << 21) // max(q * q, 1))
    for s in range(0, q, step):
        bad = lhs_fn(s, min(s + step, q))
        if bad.any():
            a, b, c = np.argwhere(bad)[0]
            return (int(s + a), int(b), int(c))
    return None


def verify_nearfield_axioms(nf: NearField) -> CheckReport:
    """Exhaustively check every near-field invariant of ``nf``.

    Every check scans all of its tuples (cubic scans are chunked over the
    first coordinate). Failures carry the lexicographically least violating
    tuple. Commutativity and left distributivity are only *required* for the
    field family; for other families they are still evaluated and reported
    with required=False.
    """
    q = nf.order
    add, mul = nf.add.astype(np.int64), nf.mul.astype(np.int64)
    idx = np.arange(q, dtype=np.int64)
    checks: list[Check] = []

    def add3(lo, hi):
        lhs = add[add[lo:hi]]
        rhs = add[lo:hi][:, add]
        return lhs != rhs

    w = _first_mismatch3(add3, q)
    checks.append(Check("add-associativity", w is None, witness=w))

    bad = add != add.T
    w = tuple(int(v) for v in np.argwhere(bad)[0]) if bad.any() else None
    checks.append(Check("add-commutativity", w is None, witness=w))

    bad = (add[:, 0] != idx) | (add[0, :] != idx)
    w = (int(np.nonzero(bad)[0][0]),) if bad.any() else None
    checks.append(Check("add-identity", w is None, witness=w))

    bad = ~np.any(add == 0, axis=1)
    w = (int(np.nonzero(bad)[0][0]),) if bad.any() else None
    checks.append(Check("add-inverses", w is None, witness=w))

    # char_p prime and char_p . x == 0 for every x
    w = None
    if nf.char_p == 0 or not is_prime(nf.char_p):
        w = (1,)
    else:
        acc = np.zeros(q, dtype=np.int64)
        for _ in range(nf.char_p):
            acc = add[acc, idx]
        if np.any(acc != 0):
            w = (int(np.nonzero(acc != 0)[0][0]),)
    checks.append(
        Check("add-exponent-char", w is None, witness=w,
              note=f"char_p={nf.char_p}")
    )

    bad = (mul[0, :] != 0) | (mul[:, 0] != 0)
    w = (int(np.nonzero(bad)[0][0]),) if bad.any() else None
    checks.append(Check("mul-zero-annihilation", w is None, witness=w))

    bad = mul[1:, 1:] == 0
    if bad.any():
        a, b = np.argwhere(bad)[0]
        w = (int(a) + 1, int(b) + 1)
    else:
        w = None
    checks.append(Check("mul-nonzero-closure", w is None, witness=w))

    def mul3(lo, hi):
        lhs = mul[mul[lo:hi]]
        rhs = mul[lo:hi][:, mul]
        return lhs != rhs

    w = _first_mismatch3(mul3, q)
    checks.append(Check("mul-associativity", w is None, witness=w))

    bad = (mul[:, 1] != idx) | (mul[1, :] != idx)
    w = (int(np.nonzero(bad)[0][0]),) if bad.any() else None
    checks.append(Check("mul-identity", w is None, witness=w))

    w = None
    for a in range(1, q):
        rights = np.nonzero(mul[a, 1:] == 1)[0] + 1
        if not any(mul[b, a] == 1 for b in rights):
            w = (a,)
            break
    checks.append(Check("mul-inverses", w is None, witness=w))

    def rdist(lo, hi):
        lhs = mul[add[lo:hi]]                      # (a add b) mul c
        rhs = add[mul[lo:hi][:, None, :], mul[None, :, :]]
        return lhs != rhs

    w = _first_mismatch3(rdist, q)
    checks.append(Check("right-distributivity", w is None, witness=w))

    required_extra = nf.is_field_family
    note = "" if required_extra else "not required for near-fields"

    bad = mul != mul.T
    w = tuple(int(v) for v in np.argwhere(bad)[0]) if bad.any() else None
    checks.append(Check("mul-commutativity", w is None, required=required_extra,
                        witness=w, note=note))

    def ldist(lo, hi):
        lhs = mul[lo:hi][:, add]                   # a mul (b add c)
        part = mul[lo:hi]
        rhs = add[part[:, :, None], part[:, None, :]]
        return lhs != rhs

    w = _first_mismatch3(ldist, q)
    checks.append(Check("left-distributivity", w is None, required=required_extra,
                        witness=w, note=note))

    checks.sort(key=lambda c: (c.name, c.witness or ()))
    return CheckReport(f"near-field axioms for {nf.family}", checks)


@dataclass(frozen=True)
class MultiplicativeGroupSummary:
    """Brute-force shape of the nonzero elements under multiplication."""

    order: int
    abelian: bool
    involution_count: int
    exponent: int
    element_orders: tuple[int, ...]


def multiplicative_group_summary(nf: NearField) -> MultiplicativeGroupSummary:
    q = nf.order
    mul = nf.mul
    orders = []
    for a in range(1, q):
        o = _multiplicative_order(mul, a, q)
        if o == 0:
            raise ConstructionSanityFailure(f"element {a} has no finite order")
        orders.append(o)
    exponent = 1
    for o in orders:
        exponent = exponent * o // np.gcd(exponent, o)
    sub = mul[1:, 1:]
    return MultiplicativeGroupSummary(
        order=q - 1,
        abelian=bool(np.array_equal(sub, sub.T)),
        involution_count=sum(1 for o in orders if o == 2),
        exponent=int(exponent),
        element_orders=tuple(sorted(orders)),
    )
