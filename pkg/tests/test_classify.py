from fractions import Fraction

import pytest

from ncsolenoid.classify import (
    AngleMatrix,
    IsoVerdict,
    aut_generators,
    block_shift,
    bundle_data,
    conjugacy_report,
    isomorphic,
    prime_case_isomorphic,
    replay_witness,
    rescale,
    same_prime_support,
)
from ncsolenoid.nadic import NadicInteger
from ncsolenoid.sequences import Angle, AngleSequence


# ---------------------------------------------------------------- moves


def test_same_prime_support():
    assert same_prime_support(4, 2)
    assert same_prime_support(12, 6)
    assert not same_prime_support(2, 3)
    assert not same_prime_support(6, 10)


def test_rescale_frozen(thirds_4, thirds_2):
    got = rescale(thirds_4, 2)
    assert got == thirds_2
    assert [got.value(n) for n in range(4)] == [
        Fraction(1, 3),
        Fraction(2, 3),
        Fraction(1, 3),
        Fraction(2, 3),
    ]


def test_rescale_validates_divisor(thirds_4):
    with pytest.raises(ValueError):
        rescale(thirds_4, 3)
    assert rescale(thirds_4, 4) is thirds_4


def test_rescale_prefix_carrier():
    a = AngleSequence(4, Fraction(1, 3), NadicInteger.from_prefix([2, 3], 4))
    got = rescale(a, 2)
    # one base-4 digit splits into two base-2 digits
    assert got.carrier.length == 2
    assert got.carrier.at(2) == a.carrier.at(1) % 4


def test_block_shift_reverses_one_division():
    a = AngleSequence(6, Fraction(1, 5), NadicInteger.from_value(Fraction(-1, 5), 6))
    for d in (2, 3):
        b = block_shift(a, d)
        # d * beta_0 recovers alpha_0 on the circle
        assert (d * b.value(0) - a.value(0)).denominator == 1
        assert b.modulus == a.modulus
    with pytest.raises(ValueError):
        block_shift(a, 6)
    with pytest.raises(ValueError):
        block_shift(a, 4)
    assert block_shift(a, 1) is a


def test_block_shift_needs_exact_carrier():
    a = AngleSequence(6, 0, NadicInteger.from_prefix([5, 2], 6))
    with pytest.raises(ValueError):
        block_shift(a, 2)


# ---------------------------------------------------------------- verdicts


def test_verdict_json_shapes():
    assert IsoVerdict.no("x").to_json() == {"verdict": "No", "reason": "x"}
    assert IsoVerdict.unknown(5).to_json() == {"verdict": "Unknown", "bound": 5}
    y = IsoVerdict.yes({"R": 2})
    assert y.to_json()["verdict"] == "Yes"
    assert y.is_yes and not y.is_no and not y.is_unknown


def test_isomorphic_cross_scale_yes(thirds_2, thirds_4):
    verdict = isomorphic(thirds_2, thirds_4, bound=16)
    assert verdict.is_yes
    w = verdict.witness
    assert (w["R"], w["mu"], w["nu"]) == (2, 1, 2)
    assert replay_witness(thirds_2, thirds_4, verdict)


def test_isomorphic_denominator_no(thirds_2, fifths_2):
    verdict = isomorphic(thirds_2, fifths_2, bound=16)
    assert verdict.is_no
    assert "denominators" in verdict.reason


def test_isomorphic_prime_support_no(thirds_2):
    other = AngleSequence.constant(3, Fraction(1, 2))
    verdict = isomorphic(thirds_2, other)
    assert verdict.is_no
    assert "prime supports" in verdict.reason


def test_isomorphic_is_symmetric(thirds_2, thirds_4, fifths_2):
    for a, b in ((thirds_2, thirds_4), (thirds_2, fifths_2)):
        assert isomorphic(a, b, 8).kind == isomorphic(b, a, 8).kind


def test_isomorphic_reflexive(five_62, thirds_2):
    for seq in (five_62, thirds_2):
        verdict = isomorphic(seq, seq, bound=4)
        assert verdict.is_yes
        assert replay_witness(seq, seq, verdict)


def test_periodic_exhaustion_is_complete_no(five_62):
    # same scale and period but different value cycles: 1/62 vs 3/62
    other = AngleSequence(5, Fraction(3, 62), NadicInteger.from_value(Fraction(-3, 62), 5))
    assert other.period() == five_62.period()
    verdict = isomorphic(five_62, other, bound=32)
    assert verdict.is_no
    assert "exhausted" in verdict.reason


def test_prime_case_shift_pairs(three_half, fifths_2):
    for seq, q in ((three_half, 1), (fifths_2, 2), (fifths_2, 3)):
        verdict = prime_case_isomorphic(seq, seq.shift(q), bound=8)
        assert verdict.is_yes
        assert "shift" in verdict.witness
        assert replay_witness(seq, seq.shift(q), verdict)


def test_prime_case_distinct_primes(thirds_2, three_half):
    assert prime_case_isomorphic(thirds_2, three_half).is_no
    with pytest.raises(ValueError):
        prime_case_isomorphic(thirds_2, AngleSequence.zero(4))


def test_unknown_on_aperiodic_exhaustion():
    a = AngleSequence(3, Fraction(1, 2), NadicInteger.iota(0, 3))
    b = AngleSequence(3, Fraction(1, 2), NadicInteger.iota(2, 3))
    verdict = isomorphic(a, b, bound=4)
    assert verdict.is_unknown
    assert verdict.to_json() == {"verdict": "Unknown", "bound": 4}


def test_replay_rejects_non_yes(thirds_2, fifths_2):
    verdict = isomorphic(thirds_2, fifths_2)
    with pytest.raises(ValueError):
        replay_witness(thirds_2, fifths_2, verdict)


def test_conjugacy_report(thirds_2, fifths_2, thirds_4):
    no = conjugacy_report(thirds_2, fifths_2)
    assert no["conjugate"] == "No"
    open_case = conjugacy_report(thirds_2, thirds_4)
    assert open_case["conjugate"] == "Unknown"
    assert open_case["isomorphism"]["verdict"] == "Yes"


# ---------------------------------------------------------------- aut generators


def test_aut_generators_frozen():
    got = [g.fraction for g in aut_generators(2, 1)]
    assert got == [Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2)]
    got6 = [g.fraction for g in aut_generators(6, 0)]
    assert got6 == [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(3), Fraction(-3)]


# ---------------------------------------------------------------- angle matrices


def test_cyclic_orientation():
    v = AngleMatrix.cyclic(3)
    # row i carries its phase in column i+1 (mod 3)
    for i in range(3):
        assert v.rows[i][(i + 1) % 3] == Angle(0)
        assert sum(1 for e in v.rows[i] if e is not None) == 1


def test_matrix_power_and_identity():
    v = AngleMatrix.cyclic(4)
    assert v**4 == AngleMatrix.identity(4)
    assert v**0 == AngleMatrix.identity(4)
    u = AngleMatrix.diagonal([Angle(Fraction(j, 4)) for j in range(4)])
    assert u**4 == AngleMatrix.identity(4)


def test_matrix_product_raises_on_non_monomial():
    ones = AngleMatrix([[Angle(0), Angle(0)], [Angle(0), Angle(0)]])
    with pytest.raises(ValueError):
        ones @ ones


def test_matrix_json():
    u = AngleMatrix.diagonal([Angle(0), Angle(Fraction(1, 3))])
    assert u.to_json() == [["0", None], [None, "1/3"]]


# ---------------------------------------------------------------- bundle data


def test_bundle_frozen_small(thirds_2):
    data = bundle_data(thirds_2)
    assert (data.q, data.p, data.k) == (3, 1, 2)
    assert data.lam == Angle(Fraction(1, 3))
    assert data.base_label == "S_{2^2} x S_{2^2}"
    assert data.v @ data.u == (data.u @ data.v).scaled(data.lam)
    assert data.u**3 == AngleMatrix.identity(3)
    assert data.v**3 == AngleMatrix.identity(3)


def test_bundle_frozen_62(five_62):
    data = bundle_data(five_62)
    assert (data.q, data.k) == (62, 3)
    assert data.lam == Angle(Fraction(1, 62))


def test_bundle_rejects_aperiodic():
    a = AngleSequence(3, Fraction(1, 2), NadicInteger.iota(0, 3))
    with pytest.raises(ValueError):
        bundle_data(a)


def test_bundle_json_keys(thirds_2):
    blob = bundle_data(thirds_2).to_json()
    assert set(blob) == {"q", "p", "k", "lambda", "base", "u", "v"}
    assert blob["lambda"] == "1/3"
