"""
Standard Euler factors
======================

Hecke eigenvalues come from exact q-expansions; the standard L-function of
a lift factors through those of g and f.
"""

from arthur_lift import lifting as lf
from arthur_lift.lfunctions.qexp import eigenform_hecke_data, oracle_q_expansion
from arthur_lift.lfunctions.satake import satake_of_parameter, std_euler_factor, verify_factorization

print("tau(n):", oracle_q_expansion(12, 10)[1:])

sk = lf.evaluate_lift(lf.ikeda(18, 1))
f18 = eigenform_hecke_data(18)
for p in (2, 3, 5):
    print(p, std_euler_factor(satake_of_parameter(sk.psi, p)))
    print("   factorization holds:", bool(verify_factorization(sk, f18, None, p)))

# perturb one eigenvalue and the identity breaks at the linear term
chk = verify_factorization(sk, f18.with_ap(2, f18.ap[2] + 1), None, 2)
print(bool(chk), "first difference at X^%d" % chk.difference[0])

# with no Hecke data for f the comparison is done symbolically
print(bool(verify_factorization(lf.evaluate_lift(lf.ibukiyama1(2, 6)), None, None, 3)))
