"""
Lifting Siegel cusp forms
=========================

Evaluate the named lifts and run a small parity scan.
"""

from arthur_lift import lifting as lf

for spec in (lf.miyawaki1(12), lf.miyawaki2(14), lf.ikeda(12, 2), lf.ibukiyama1(2, 6), lf.ibukiyama2(2, 7)):
    r = lf.evaluate_lift(spec)
    print(f"{spec.name:22s} k' = {tuple(r.k_prime)}  automorphic = {r.automorphic}")
    print("   ", r.factorization)

# Saito-Kurokawa / Ikeda: lifts exist iff k and d have the same parity
print("2k \\ d", *range(1, 5))
for w in range(12, 27, 2):
    row = []
    for d in range(1, 5):
        row.append("-" if w // 2 <= d else "yes" if lf.evaluate_lift(lf.ikeda(w, d)).automorphic else "no")
    print(f"{w:5d} ", *row)

# a custom mode A lift: f of weight 30 over g = Delta
g, k = lf.elliptic_source(12)
spec = lf.LiftSpec(lf.MODE_A, g, k, lf.elliptic_eigenform(30), 2)
r = lf.evaluate_lift(spec)
print(r.psi, tuple(r.k_prime), r.automorphic, lf.predicted_automorphy(spec))
