#!/usr/bin/env python3
"""Print the classification tables together with the computed-vs-published
audit of the local-invariant table."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from katz_forge import classify


def main():
    print("slope profiles")
    for row in classify.enumerate_slope_profiles():
        print("   " + ", ".join(f"{s} on {d}" for s, d in row))

    print("\nlocal invariants (published table)")
    for r in classify.enumerate_local_invariants():
        slopes = ",".join(str(s) for s in r["slopes"])
        dims = ",".join(str(d) for d in r["dims"])
        print(f"   {slopes:<10} {dims:<6} soln {sorted(r['soln'])}  irr {sorted(r['irr'])}")

    print("\naudit (honest recomputation per profile)")
    for rec in classify.table_audit():
        tag = "agrees" if rec["agrees"] else "DIFFERS"
        prof = ", ".join(f"{s} on {d}" for s, d in rec["profile"])
        print(f"   {tag:<8} {prof}")
        if not rec["agrees"]:
            print(f"      computed soln {sorted(rec['computed_soln'])} irr {sorted(rec['computed_irr'])}")
            print(f"      published soln {sorted(rec['published_soln'])} irr {sorted(rec['published_irr'])}")
            print(f"      note: {rec['note']}")

    for r in (2, 3, 4):
        tups = classify.solve_rigidity_tuples(r)
        print(f"\nrigidity tuples r={r}: {len(tups)}")
        for t in tups:
            print(f"   {t}")

    print("\nclassification verification")
    rep = classify.verify_classification()
    for name, _, _ in classify.CLASSIFICATION_ROWS:
        rr = rep[name]
        print(f"   {name}: rig={rr['rig']} torus={rr['torus_dim']} "
              f"chi3={rr.get('lambda3_chi', '-')} pass={rr['pass']}")
    ex = rep["excluded"]
    print(f"   excluded: adjoint {ex['adjoint_dim']} != 6 -> pass={ex['pass']}")

    print("\npullback identities")
    for k, v in classify.pullback_identities().items():
        print(f"   {k}: {v}")


if __name__ == "__main__":
    main()
