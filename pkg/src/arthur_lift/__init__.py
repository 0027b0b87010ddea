"""Arthur's multiplicity formula for level-one Sp_n, made computable.

Parameters, sign characters, Adams-Johnson packets, the lifting engine and
exact Euler factors.
"""

from .ajpackets import (
    AJMember,
    AJParameter,
    WeightVector,
    infinitesimal_character,
    is_adams_johnson,
    lowest_weight_test,
    member_character,
    packet_members,
    smo_exception,
    to_adams_johnson,
)
from .archrep import ArchConstituent, ArchRep, FourthRootUnit
from .lifting import (
    LiftResult,
    LiftSpec,
    evaluate_lift,
    lift_a_weights,
    lift_b_weights,
    multiplicity,
    named_instance,
)
from .params import (
    ComponentGroup,
    CuspidalDatum,
    GlobalAParameter,
    SignCharacter,
    component_group,
    epsilon_adjoint,
    epsilon_direct,
    localize_infinity,
    validate,
)

__version__ = "0.1.0"
