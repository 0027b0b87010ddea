import random

import pytest

from arthur_lift.archrep import ArchRep
from arthur_lift.errors import IncoherentParameter, NotRealizable
from arthur_lift.params import (
    ComponentGroup,
    CuspidalDatum,
    GlobalAParameter,
    SignCharacter,
    component_group,
    epsilon_adjoint,
    epsilon_direct,
    localize_infinity,
    pair_root_numbers,
    validate,
)
from _families import all_subsets, parameter_family

DELTA = CuspidalDatum.elliptic("Delta", 12)
F18 = CuspidalDatum.elliptic("f18", 18)
F20 = CuspidalDatum.elliptic("f20", 20)
SYM2_DELTA = CuspidalDatum.sym2("Delta", 12)
ONE = CuspidalDatum.trivial()


def test_datum_checks():
    with pytest.raises(ValueError, match="dimension"):
        CuspidalDatum("x", 3, "orthogonal", ArchRep.parse("rho_4"))
    with pytest.raises(ValueError, match="incompatible"):
        CuspidalDatum("x", 2, "orthogonal", ArchRep.parse("rho_11"))
    with pytest.raises(ValueError, match="incompatible"):
        CuspidalDatum("x", 2, "symplectic", ArchRep.parse("rho_10"))
    # a symplectic rho may occur in pairs inside an orthogonal datum
    CuspidalDatum("x", 4, "orthogonal", ArchRep.parse("rho_11 + rho_11"))
    assert SYM2_DELTA.arch == ArchRep.parse("rho_22 + sgn")
    assert SYM2_DELTA.central_sign == 1


def test_validate_examples():
    bad = validate(GlobalAParameter([(DELTA, 1)]))
    assert any("odd d requires orthogonal" in v for v in bad)
    assert validate(GlobalAParameter([(DELTA, 2), (ONE, 1)])) == []
    dup = validate(GlobalAParameter([(DELTA, 2), (DELTA, 2), (ONE, 1)]))
    assert any(v.startswith("distinctness") for v in dup)
    even = validate(GlobalAParameter([(DELTA, 2)]))
    assert any(v.startswith("dimension") for v in even)
    odd_det = CuspidalDatum("chi", 1, "orthogonal", ArchRep.parse("sgn"))
    assert any(v.startswith("central character") for v in validate(GlobalAParameter([(odd_det, 1)])))


def test_component_group():
    psi = GlobalAParameter([(DELTA, 2), (F18, 2), (ONE, 1)])
    A = component_group(psi)
    assert A.rank == 3 and len(A) == 8 and len(list(A.elements())) == 8
    assert A.z == (1, 1, 1)
    single = component_group(GlobalAParameter([(ONE, 1)]))
    assert single.z == single.generator(0)
    seen = {A.element(I) for I in all_subsets(3)}
    assert seen == set(A.elements())


def test_epsilon_direct_examples():
    ikeda = GlobalAParameter([(DELTA, 4), (ONE, 1)])
    assert epsilon_direct(ikeda).values == (1, 1)
    miyawaki = GlobalAParameter([(F20, 2), (SYM2_DELTA, 1)])
    assert epsilon_direct(miyawaki).values == (-1, -1)
    assert epsilon_direct(GlobalAParameter([(SYM2_DELTA, 1)])).values == (1,)


def test_epsilon_adjoint_examples():
    ikeda = GlobalAParameter([(DELTA, 4), (ONE, 1)])
    assert epsilon_adjoint(ikeda, {1}) == 1
    for psi in (ikeda, GlobalAParameter([(F20, 2), (SYM2_DELTA, 1)])):
        assert epsilon_adjoint(psi, set()) == 1
        assert epsilon_adjoint(psi, set(range(len(psi)))) == 1


def test_incoherent_and_unrealizable():
    # rho_22 + sgn against the trivial character gives a non-real root number
    psi = GlobalAParameter([(SYM2_DELTA, 1), (ONE, 1), (ONE, 3)])
    with pytest.raises(IncoherentParameter, match="not globally coherent"):
        epsilon_direct(psi)
    with pytest.raises(IncoherentParameter):
        epsilon_adjoint(psi, {0})
    s2 = CuspidalDatum("S2", 3, "orthogonal", ArchRep.parse("rho_4 + sgn"))
    s4 = CuspidalDatum("S4", 3, "orthogonal", ArchRep.parse("rho_8 + sgn"))
    s6 = CuspidalDatum("S6", 3, "orthogonal", ArchRep.parse("rho_12 + sgn"))
    with pytest.raises(NotRealizable, match="not automorphically realizable"):
        pair_root_numbers(GlobalAParameter([(s2, 1), (s4, 1), (s6, 1)]))


def test_epsilon_trivial_on_z_and_methods_agree():
    fam = parameter_family(4)
    assert len(fam) >= 500
    for psi in fam:
        eps = epsilon_direct(psi)
        assert eps.at_z() == 1
        A = component_group(psi)
        for s in A.elements():
            assert eps(s) == epsilon_adjoint(psi, s)


def test_same_parity_pairs_have_trivial_root_number():
    for psi in parameter_family(4):
        for (i, j), e in pair_root_numbers(psi).items():
            if (psi[i].d - psi[j].d) % 2 == 0:
                assert e == 1


def test_epsilon_independent_of_order():
    rng = random.Random(5)
    for psi in parameter_family(4)[::7]:
        perm = list(range(len(psi)))
        rng.shuffle(perm)
        shuffled = GlobalAParameter([psi[i] for i in perm])
        a, b = epsilon_direct(psi), epsilon_direct(shuffled)
        assert [a.values[i] for i in perm] == list(b.values)


def test_localize_infinity():
    loc = localize_infinity(GlobalAParameter([(DELTA, 4), (ONE, 1)]))
    assert [str(f) for f in loc.factors] == ["rho_11[x]S_4", "1[x]S_1"]
    loc = localize_infinity(GlobalAParameter([(F20, 2), (SYM2_DELTA, 1)]))
    assert [str(f) for f in loc.factors] == ["rho_19[x]S_2", "rho_22[x]S_1", "sgn[x]S_1"]
    assert loc.generator_map == ((0,), (1, 2))
    assert str(localize_infinity(GlobalAParameter([(ONE, 3)]))) == "1[x]S_3"
    for psi in parameter_family(4):
        assert localize_infinity(psi).dimension == 2 * psi.n + 1


def test_sign_character():
    chi = SignCharacter((1, -1, -1))
    assert chi((0, 1, 0)) == -1 and chi((0, 1, 1)) == 1 and chi.at_z() == 1
    with pytest.raises(ValueError):
        SignCharacter((1, 0))
    assert ComponentGroup.support((1, 0, 1)) == frozenset({0, 2})


def test_json_round_trip():
    psi = GlobalAParameter([(F20, 2), (SYM2_DELTA, 1)])
    assert GlobalAParameter.from_json(psi.to_json()) == psi
