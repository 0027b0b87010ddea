import random

import pytest

from arthur_lift import archrep as ar
from arthur_lift.ajpackets import (
    AJMember,
    AJParameter,
    WeightVector,
    delta_i,
    factor_positions,
    infinitesimal_character,
    is_adams_johnson,
    lowest_weight_test,
    member_character,
    packet_members,
    packet_size,
    smo_exception,
    to_adams_johnson,
)
from arthur_lift.errors import NotAdamsJohnson, OutsideDiscreteRegime
from arthur_lift.params import CuspidalDatum, GlobalAParameter, localize_infinity
from _families import random_aj

MIYAWAKI_LOCAL = [(ar.rho(19), 2), (ar.rho(22), 1), (ar.SIGN_CHAR, 1)]


def test_shape_examples():
    aj = to_adams_johnson(MIYAWAKI_LOCAL)
    assert aj.blocks == ((22, 1), (19, 2)) and aj.tail == (1, 1)
    ik = to_adams_johnson([(ar.rho(11), 4), (ar.TRIVIAL_CHAR, 1)])
    assert ik.blocks == ((11, 4),) and ik.tail == (0, 1)
    bad = is_adams_johnson([(ar.rho(10), 2), (ar.rho(9), 1), (ar.TRIVIAL_CHAR, 1)])
    assert isinstance(bad, list) and any(v.startswith("gap") for v in bad)


def test_shape_violations():
    rep = is_adams_johnson([(ar.rho(11), 1), (ar.rho(11), 1), (ar.TRIVIAL_CHAR, 1)])
    assert any("multiplicity-free" in v for v in rep)
    rep = is_adams_johnson([(ar.rho(12), 2), (ar.TRIVIAL_CHAR, 1)])
    assert any(v.startswith("parity") for v in rep)
    rep = is_adams_johnson([(ar.rho(12), 1), (ar.TRIVIAL_CHAR, 1)])
    assert any(v.startswith("tail sign") for v in rep)
    rep = is_adams_johnson([(ar.rho(12), 1)])
    assert any(v.startswith("tail") for v in rep)
    rep = is_adams_johnson([(ar.rho(3), 2), (ar.SIGN_CHAR, 3)])
    assert any("alpha_t" in v for v in rep)
    with pytest.raises(NotAdamsJohnson):
        AJParameter([(10, 2), (9, 1)], 1, 1)


def test_factor_positions():
    psi = GlobalAParameter([(CuspidalDatum.elliptic("f20", 20), 2), (CuspidalDatum.sym2("g", 12), 1)])
    loc = localize_infinity(psi)
    aj = to_adams_johnson(loc)
    assert factor_positions(loc, aj) == (1, 0, 2)


def test_packet_members():
    assert len(packet_members(AJParameter([(22, 1), (19, 2)], 1))) == 6
    assert len(packet_members(AJParameter([(11, 4)], 0))) == 5
    assert packet_members(AJParameter([], 0, 3)) == [AJMember(())]


def test_delta_i():
    aj = AJParameter([(22, 1), (19, 2)], 1)
    assert delta_i(aj, 0) == 1 and delta_i(aj, 1) == 0
    assert delta_i(AJParameter([(20, 1), (10, 1)], 0), 1) == -1


def test_member_character_examples():
    two = AJParameter([(20, 1), (10, 1)], 0)
    assert member_character(two, [(1, 0), (0, 1)]).values[:2] == (1, 1)
    assert member_character(AJParameter([(11, 4)], 0), [(2, 2)]).values[0] == 1
    aj = AJParameter([(22, 1), (19, 2)], 1)
    assert member_character(aj, [(1, 0), (2, 0)]).values[1] == -1
    with pytest.raises(ValueError):
        member_character(aj, [(1, 0), (2, 1)])


def test_member_characters_trivial_on_z():
    rng = random.Random(11)
    for _ in range(100):
        aj = random_aj(rng)
        members = packet_members(aj)
        assert len(members) == packet_size(aj)
        for w in members:
            assert member_character(aj, w).at_z() == 1


def test_discrete_series_specialization():
    rng = random.Random(3)
    for _ in range(100):
        aj = random_aj(rng, max_blocks=6, ones=True)
        chars = set()
        for w in packet_members(aj):
            chi = member_character(aj, w)
            expect = tuple((-1) ** i * (p - q) for i, (p, q) in enumerate(w.signature))
            assert chi.values[: aj.t] == expect
            chars.add(chi.values)
        assert len(chars) == packet_size(aj)


def test_lowest_weight_examples():
    aj = to_adams_johnson(MIYAWAKI_LOCAL)
    lw = lowest_weight_test(aj, (12, 12, 12))
    assert lw and lw.character.values == (1, -1, -1)
    ik = AJParameter([(11, 4)], 0)
    lw = lowest_weight_test(ik, (8, 8, 8, 8))
    assert lw and lw.character.values[0] == 1
    assert not lowest_weight_test(aj, (13, 12, 12))
    assert not lowest_weight_test(AJParameter([(11, 4)], 0), (8, 8, 8))
    with pytest.raises(OutsideDiscreteRegime):
        lowest_weight_test(aj, (3, 3, 3))


def test_lowest_weight_character_is_attained():
    rng = random.Random(7)
    hits = 0
    for _ in range(300):
        aj = random_aj(rng)
        if aj.d0 != 1 or not aj.blocks:
            continue
        s = sorted(((a + d - 1) // 2 - l for a, d in aj.blocks for l in range(d)), reverse=True)
        k = WeightVector.from_shifted(s)
        lw = lowest_weight_test(aj, k)
        assert lw
        chars = [member_character(aj, w).values for w in packet_members(aj)]
        assert lw.character.values in chars
        assert member_character(aj, lw.signature).values == lw.character.values
        assert infinitesimal_character(k) == [e // 2 for e in aj.exponents()]
        hits += 1
    assert hits > 50


def test_infinitesimal_character():
    assert infinitesimal_character((12, 12, 12)) == [11, 10, 9, 0, -9, -10, -11]
    assert infinitesimal_character((8, 8, 8, 8)) == [7, 6, 5, 4, 0, -4, -5, -6, -7]
    assert infinitesimal_character(()) == [0]


def test_weight_vector():
    with pytest.raises(ValueError):
        WeightVector((3, 5))
    assert WeightVector((12, 12, 12)).is_discrete
    assert not WeightVector((3, 3, 3)).is_discrete
    assert WeightVector(()).is_discrete


def test_smo_exception():
    assert smo_exception(4, 2, 3)
    assert not smo_exception(5, 2, 3)
    assert not smo_exception(4, 3, 4)
    with pytest.raises(ValueError):
        smo_exception(4, 3, 3)
