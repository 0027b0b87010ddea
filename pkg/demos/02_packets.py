"""
Adams-Johnson packets at the real place
=======================================
"""

from arthur_lift.ajpackets import (
    AJParameter,
    infinitesimal_character,
    lowest_weight_test,
    member_character,
    packet_members,
    to_adams_johnson,
)
from arthur_lift.lifting import evaluate_lift, miyawaki1
from arthur_lift.params import localize_infinity

# blocks (alpha, d) with alpha decreasing, then the quadratic tail
aj = AJParameter([(22, 1), (19, 2)], delta=1)
for w in packet_members(aj):
    print(w.signature, member_character(aj, w).values)

# the Miyawaki parameter localizes to exactly this shape
psi = evaluate_lift(miyawaki1(12)).psi
print(to_adams_johnson(localize_infinity(psi)) == aj)

# which member is the holomorphic module of weight (12,12,12)?
lw = lowest_weight_test(aj, (12, 12, 12))
print(lw.member, lw.character.values)
print(infinitesimal_character((12, 12, 12)))

# a weight that does not match the strings
print(lowest_weight_test(aj, (13, 12, 12)).reason)
