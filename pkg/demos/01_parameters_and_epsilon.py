"""
Global parameters and Arthur's character
========================================

Build the parameter of an Ikeda lift of Delta, look at its component
group and compute eps_psi two ways.
"""

from arthur_lift import CuspidalDatum, GlobalAParameter
from arthur_lift.params import component_group, epsilon_adjoint, epsilon_direct, validate

# tau_Delta sits in GL_2 with archimedean parameter rho_11
delta = CuspidalDatum.elliptic("Delta", 12)
one = CuspidalDatum.trivial()

psi = GlobalAParameter([(delta, 4), (one, 1)])
print(psi, "n =", psi.n)
print("violations:", validate(psi) or "none")

A = component_group(psi)
eps = epsilon_direct(psi)
for s in A.elements():
    print("".join(map(str, s)), eps(s), epsilon_adjoint(psi, s))

# the character is trivial on z_psi
print("eps(z) =", eps(A.z))

# an even d on an orthogonal datum is rejected
print(validate(GlobalAParameter([(one, 2), (one, 1)])))
