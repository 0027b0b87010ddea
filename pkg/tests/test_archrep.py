import pytest
from hypothesis import given, strategies as st

from arthur_lift import archrep as ar
from arthur_lift.archrep import ArchConstituent, ArchRep, FourthRootUnit


def test_rho_rho_examples():
    assert ar.root_number_rho_rho(12, 11) == -1
    assert ar.root_number_rho_rho(11, 12) == -1
    assert ar.root_number_rho_rho(3, 3) == 1
    assert ar.root_number_rho_rho(4, 2) == 1
    assert ar.root_number_rho_rho(11, 4) == 1


def test_rho_rho_rejects_zero():
    with pytest.raises(ValueError):
        ar.root_number_rho_rho(0, 3)
    with pytest.raises(ValueError):
        ar.root_number_rho_rho(5, 0)


def test_rho_rho_symmetric_and_same_parity_trivial():
    for a in range(1, 51):
        for b in range(1, 51):
            v = ar.root_number_rho_rho(a, b)
            assert v == ar.root_number_rho_rho(b, a)
            if (a - b) % 2 == 0:
                assert v == 1


def test_rho_sgn_examples():
    assert ar.root_number_rho_sgn(11, 1) == FourthRootUnit(0)
    assert ar.root_number_rho_sgn(13, 0).sign == -1
    assert ar.root_number_rho_sgn(2, 0).exponent == 3
    assert complex(ar.root_number_rho_sgn(2, 0)) == -1j


@given(st.integers(1, 200), st.integers(0, 1))
def test_rho_sgn_real_iff_odd(a, delta):
    u = ar.root_number_rho_sgn(a, delta)
    assert u == ar.root_number_rho_sgn(a, 1 - delta)
    assert u.is_real == (a % 2 == 1)


def test_root_number_pair():
    A = ArchRep.parse("rho_19")
    B = ArchRep.parse("rho_22 + sgn")
    assert ar.root_number_pair(A, B).sign == -1
    assert ar.root_number_pair(ArchRep.parse("rho_11"), ArchRep.parse("1")).sign == 1
    single = ar.root_number_pair(ArchRep.parse("rho_2"), ArchRep.parse("1"))
    double = ar.root_number_pair(ArchRep.parse("rho_2 + rho_2"), ArchRep.parse("1"))
    assert double == single * single
    assert ar.root_number_pair(ArchRep.parse("1"), ArchRep.parse("sgn")) == ar.ONE
    with pytest.raises(ValueError):
        ar.root_number_pair(ArchRep(), A)


def test_non_real_sign_raises():
    with pytest.raises(ValueError):
        FourthRootUnit(1).sign


def test_self_dual_type():
    assert ar.self_dual_type(ar.rho(22)) == ar.ORTHOGONAL
    assert ar.self_dual_type(ar.rho(11)) == ar.SYMPLECTIC
    assert ar.self_dual_type(ar.SIGN_CHAR) == ar.ORTHOGONAL
    assert ar.self_dual_type(ar.TRIVIAL_CHAR) == ar.ORTHOGONAL


def test_det_at_minus_one():
    assert ar.det_at_minus_one(ArchRep.parse("rho_22 + sgn")) == 1
    assert ar.det_at_minus_one(ArchRep.parse("rho_11")) == 1
    assert ar.det_at_minus_one(ArchRep.parse("rho_22")) == -1


@given(st.lists(st.sampled_from(["1", "sgn"] + [f"rho_{a}" for a in range(1, 30)]), min_size=1, max_size=6))
def test_det_of_double_is_one(items):
    A = ArchRep.parse(items)
    assert ar.det_at_minus_one(A + A) == 1
    assert A.dimension == sum(2 if x.startswith("rho") else 1 for x in items)


def test_exponents_of_factor():
    assert ar.exponents_of_factor(ar.rho(19), 2) == [20, 18, -18, -20]
    assert ar.exponents_of_factor(ar.rho(22), 1) == [22, -22]
    assert ar.exponents_of_factor(ar.SIGN_CHAR, 3) == [2, 0, -2]


@given(st.integers(1, 60), st.integers(1, 12))
def test_exponents_closed_under_negation(a, d):
    ex = ar.exponents_of_factor(ar.rho(a), d)
    assert sorted(ex) == sorted(-x for x in ex)
    q = ar.exponents_of_factor(ar.TRIVIAL_CHAR, 2 * d - 1)
    assert sorted(q) == sorted(-x for x in q)


def test_rho_zero_is_split():
    with pytest.raises(ValueError):
        ArchConstituent(ar.TWO_DIM, 0)
    assert ar.rho_sum(0, 3) == ArchRep.parse("rho_3 + 1 + sgn")


def test_parse_and_print_round_trip():
    A = ArchRep.parse(["sgn", "rho_3", "rho_11", "1"])
    assert A.to_json() == ["rho_11", "rho_3", "sgn", "1"]
    assert ArchRep.parse(A.to_json()) == A
    with pytest.raises(ValueError):
        ArchConstituent.parse("tau_3")
