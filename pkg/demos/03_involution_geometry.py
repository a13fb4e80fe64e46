"""The point-line structure on involutions, built and cross-validated.

Points are involutions; the line through two of them collects every
involution k whose product with their translation stays inside the
involutions. Split groups collapse to a single line containing all points,
and the no-proper-plane verdict confirms nothing richer hides inside.
"""

from involq import (
    affine_group,
    build_geometry,
    check_geometry_conditions,
    divisible_subgroup_scan,
    line_through,
    make_dickson,
    plane_closure,
    verify_line_lemma,
    verify_no_proper_plane,
)

G = affine_group(make_dickson(3, 2))
conditions = check_geometry_conditions(G)
print("geometry preconditions:")
for check in conditions.checks:
    print(f"  {check.name:45s} {'pass' if check.passed else 'FAIL'}")

geom = build_geometry(G, conditions)
print(f"\npoints: {geom.n_points}, lines: {len(geom.lines)},"
      f" translation classes: {len(geom.classes)}")
line = line_through(geom, 0, 1)
print("the line through points 0 and 1 has", len(line.points), "points:",
      list(line.points))

lemma = verify_line_lemma(geom)
print("line conjugation lemma:", "pass" if lemma.ok else "FAIL")

closure = plane_closure(geom, [2, 5])
print(f"\nclosing {{2, 5}} under joins gives {len(closure.points)} points")
verdict = verify_no_proper_plane(geom, closure.points)
print(f"no-proper-plane verdict: hypotheses_met={verdict.hypotheses_met},"
      f" contained lines={verdict.line_count}")

scan = divisible_subgroup_scan(geom)
print(f"\nodd-order subgroups inside the translations, normalized by an involution:")
print(f"  found {scan.found} (sizes {scan.size_histogram}),"
      f" violations: {len(scan.violations)}, complete: {scan.complete}")
