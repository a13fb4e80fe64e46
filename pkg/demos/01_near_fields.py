"""Build finite near-fields and watch the axiom scan at work.

A near-field keeps a field's additive group and an associative multiplication
with identity and inverses, but only ONE distributive law. The Dickson
construction twists a field's multiplication by Frobenius powers, giving the
smallest genuinely noncommutative examples.
"""

from involq import (
    is_dickson_pair,
    make_dickson,
    make_field,
    multiplicative_group_summary,
    verify_nearfield_axioms,
)

# ---------------------------------------------------------------------------
# fields first: GF(9) over its canonical modulus

f9 = make_field(3, 2)
print(f"GF(9): family {f9.family}, char {f9.char_p}, modulus {f9.modulus}")
print("addition row of X (index 3):", f9.add[3].tolist())
print("X * X =", f9.mul[3, 3], " (the modulus forces X^2 = -1 = 2)")
print()

# ---------------------------------------------------------------------------
# the order-9 Dickson near-field: multiply by squares plainly, through the
# cube map otherwise

print("Dickson pairs: (3,2) ->", is_dickson_pair(3, 2), "  (3,4) ->", is_dickson_pair(3, 4))
d9 = make_dickson(3, 2)
print(f"dickson(3,2): order {d9.order}, char {d9.char_p}")
print("3*4 =", d9.mul[3, 4], " but 4*3 =", d9.mul[4, 3], " (noncommutative)")

report = verify_nearfield_axioms(d9)
print(f"\naxiom scan over all {d9.order}^3 triples:")
for check in report.checks:
    tag = "required" if check.required else "informational"
    status = "pass" if check.passed else f"FAILS at {check.witness}"
    print(f"  {check.name:28s} [{tag}] {status}")
print("verdict:", "all required axioms hold" if report.ok else "BROKEN")

# ---------------------------------------------------------------------------
# the multiplicative group of dickson(3,2) is the quaternion group

summary = multiplicative_group_summary(d9)
print(f"\nnonzero elements under *: order {summary.order}, abelian={summary.abelian},")
print(f"  {summary.involution_count} involution(s), exponent {summary.exponent},")
print(f"  element orders {summary.element_orders}  -- the quaternion signature")
