import random

import pytest

from arthur_lift import lifting as lf
from arthur_lift.errors import (
    ConstraintViolation,
    HypothesisViolated,
    IntervalHypothesisViolated,
    NotDiscrete,
    NotLowestWeightPacket,
    SourceNotCertified,
)
from arthur_lift.params import CuspidalDatum, GlobalAParameter


def _psi(*pairs):
    return GlobalAParameter(list(pairs))


ONE = CuspidalDatum.trivial()


def test_multiplicity_examples():
    delta = CuspidalDatum.elliptic("Delta", 12)
    assert lf.multiplicity(_psi((delta, 2), (ONE, 1)), (7, 7)) == 0
    f18 = CuspidalDatum.elliptic("f18", 18)
    assert lf.multiplicity(_psi((f18, 2), (ONE, 1)), (10, 10)) == 1
    res = lf.evaluate_lift(lf.miyawaki1(12))
    assert lf.multiplicity(res.psi, (12, 12, 12)) == 1


def test_multiplicity_requires_lowest_weight_member():
    f18 = CuspidalDatum.elliptic("f18", 18)
    with pytest.raises(NotLowestWeightPacket):
        lf.multiplicity(_psi((f18, 2), (ONE, 1)), (11, 10))


def test_sources_are_certified():
    for src in (lf.trivial_source(), lf.elliptic_source(12), lf.elliptic_source(20), lf.siegel2_general_source(10, 6)):
        assert lf.certify_source(*src).m == 1


def test_uncertified_source():
    g, _ = lf.elliptic_source(12)
    with pytest.raises(SourceNotCertified):
        lf.certify_source(g, (13,))


def test_weight_calculus():
    assert tuple(lf.lift_a_weights((12,), 10, 1)) == (12, 12, 12)
    assert tuple(lf.lift_a_weights((), 6, 2)) == (8, 8, 8, 8)
    assert tuple(lf.lift_b_weights((), 4, 2, 1)) == (5, 5, 5, 5)
    assert tuple(lf.lift_b_weights((), 4, 4, 1)) == (6, 6, 6, 6)
    with pytest.raises(IntervalHypothesisViolated):
        lf.lift_a_weights((12,), 11, 1)
    with pytest.raises(HypothesisViolated):
        lf.lift_b_weights((), 4, 3, 1)


def test_named_instances():
    r = lf.evaluate_lift(lf.miyawaki1(12))
    assert tuple(r.k_prime) == (12, 12, 12) and r.automorphic
    assert str(r.factorization) == "L(s,g,std)·L(s+10,f)·L(s+9,f)"
    r = lf.evaluate_lift(lf.miyawaki2(14))
    assert tuple(r.k_prime) == (14, 14, 14) and r.automorphic
    assert str(r.factorization) == "L(s,g,std)·L(s+13,f)·L(s+12,f)"
    r = lf.evaluate_lift(lf.ikeda(12, 2))
    assert tuple(r.k_prime) == (8, 8, 8, 8) and r.automorphic and r.cuspidal
    assert r.factorization.base == lf.ZETA
    assert not lf.evaluate_lift(lf.ikeda(12, 1)).automorphic
    for m, auto in ((6, True), (8, True)):
        r = lf.evaluate_lift(lf.ibukiyama1(2, m))
        assert tuple(r.k_prime) == (m,) * 4 and r.automorphic is auto
    for m in (6, 7, 8, 9):
        r = lf.evaluate_lift(lf.ibukiyama2(2, m))
        assert tuple(r.k_prime) == (m,) * 4 and r.automorphic is (m % 2 == 0)


def test_named_constraints():
    with pytest.raises(ConstraintViolation):
        lf.miyawaki1(13)
    with pytest.raises(ConstraintViolation):
        lf.ibukiyama1(2, 7)
    with pytest.raises(ConstraintViolation):
        lf.ikeda(12, 6)
    with pytest.raises(ConstraintViolation):
        lf.ibukiyama2(3, 6)
    with pytest.raises(ValueError):
        lf.named_instance("nope")
    assert lf.named_instance("ikeda", fweight=18, d=1).d == 1


def test_hypotheses():
    g, k = lf.trivial_source()
    with pytest.raises(HypothesisViolated):
        lf.evaluate_lift(lf.LiftSpec(lf.MODE_A, g, k, lf.elliptic_eigenform(4), 2))
    g, k = lf.elliptic_source(12)
    with pytest.raises(IntervalHypothesisViolated):
        lf.evaluate_lift(lf.LiftSpec(lf.MODE_A, g, k, lf.elliptic_eigenform(22), 1))
    with pytest.raises(HypothesisViolated):
        lf.LiftSpec(lf.MODE_A, g, k, lf.elliptic_eigenform(22), 1, k_f=12)
    with pytest.raises(HypothesisViolated):
        lf.LiftSpec(lf.MODE_B, g, k, lf.siegel2_datum(10, 4), 1)


def test_not_discrete():
    g, k = lf.siegel2_general_source(10, 6)
    # f of weight 2*10 - 2 puts rho_{19} next to g's rho_{18}: the strings collide
    with pytest.raises((NotDiscrete, IntervalHypothesisViolated)):
        lf.evaluate_lift(lf.LiftSpec(lf.MODE_GENERAL, g, k, lf.elliptic_eigenform(18), 1))


def _random_spec(rng):
    src = rng.choice(("trivial", "elliptic", "siegel"))
    if src == "trivial":
        g, k = lf.trivial_source()
    elif src == "elliptic":
        g, k = lf.elliptic_source(rng.randrange(12, 41, 2))
    else:
        k1 = rng.randint(4, 20)
        g, k = lf.siegel2_general_source(k1, rng.randint(3, k1))
    d = rng.randint(1, 4)
    if rng.random() < 0.5:
        kf = rng.randint(d + 1, 30)
        return lf.LiftSpec(lf.MODE_A, g, k, lf.elliptic_eigenform(2 * kf), d)
    kf = rng.randint(2 * d + 2, 30)
    j = rng.randrange(2 * d, 30, 2)
    return lf.LiftSpec(lf.MODE_B, g, k, lf.siegel2_datum(kf, j), d, kf, j)


def test_random_lifts_follow_parity_rules():
    rng = random.Random(2024)
    seen = {lf.MODE_A: [0, 0], lf.MODE_B: [0, 0]}
    checked = 0
    while checked < 200:
        spec = _random_spec(rng)
        try:
            res = lf.evaluate_lift(spec)
        except (IntervalHypothesisViolated, NotDiscrete):
            continue
        assert res.automorphic == lf.predicted_automorphy(spec), spec
        assert res.epsilon.at_z() == 1
        # k' keeps the source strings and adds the f strings
        assert set(spec.k.shifted()) <= set(res.k_prime.shifted())
        assert res.k_prime.n == spec.n + 2 * spec.d * spec.f.m // 2
        seen[spec.mode][res.automorphic] += 1
        checked += 1
    assert all(min(v) > 10 for v in seen.values()), seen


def test_json_round_trip():
    for spec in (lf.miyawaki1(12), lf.ibukiyama1(2, 6), lf.ibukiyama2(2, 7)):
        res = lf.evaluate_lift(spec)
        obj = res.to_json()
        assert lf.LiftResult.from_json(obj) == res
        assert lf.LiftResult.from_json(obj, reevaluate=False) == res
        assert lf.LiftSpec.from_json(spec.to_json()) == spec
