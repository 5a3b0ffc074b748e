from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncsolenoid.ktheory import (
    MIRROR,
    ExtensionElement,
    GeneratorCochain,
    KPairElement,
    as_extension,
    as_pair,
    coboundary,
    cohomologous,
    connecting_matrix,
    cross_section_carry,
    embedding_matrix,
    j_seq,
    k1_shape,
    k_member,
    k_project,
    mat_mul,
    mu_cochain,
    prufer_pair,
    r_digit,
    trace,
    weakly_equivalent,
    xi_cocycle,
    zeta_cocycle,
)
from ncsolenoid.nadic import NadicInteger, QnRational
from ncsolenoid.sequences import AngleSequence

J12 = NadicInteger.iota(1, 2)


def qns(scale, max_num=50, max_exp=6):
    return st.builds(
        QnRational,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=0, max_value=max_exp),
        st.just(scale),
    )


carriers = st.sampled_from(
    [
        NadicInteger.iota(0, 2),
        NadicInteger.iota(1, 2),
        NadicInteger.iota(-1, 2),
        NadicInteger.from_value(Fraction(-1, 2), 3),
        NadicInteger.from_value(Fraction(2, 7), 6),
        NadicInteger.iota(-3, 10),
    ]
)


# ---------------------------------------------------------------- cocycles


def test_xi_frozen_values():
    assert xi_cocycle(J12, QnRational(1, 1, 2), QnRational(1, 1, 2)) == 1
    assert xi_cocycle(J12, QnRational(1, 1, 2), QnRational(1, 2, 2)) == 0
    assert xi_cocycle(J12, QnRational(3, 2, 2), QnRational(1, 2, 2)) == 1
    assert xi_cocycle(J12, QnRational(1, 1, 2), QnRational(-1, 1, 2)) == 0


def test_xi_zero_carrier_is_zero():
    Z = NadicInteger.iota(0, 3)
    for x, y in [((1, 1), (2, 2)), ((4, 3), (-5, 1))]:
        assert xi_cocycle(Z, QnRational(*x, 3), QnRational(*y, 3)) == 0


@given(carriers.flatmap(lambda J: st.tuples(st.just(J), qns(J.modulus), qns(J.modulus), qns(J.modulus))))
def test_xi_symmetry_and_cocycle_identity(args):
    J, x, y, w = args
    zero = QnRational(0, 0, J.modulus)
    assert xi_cocycle(J, x, y) == xi_cocycle(J, y, x)
    assert xi_cocycle(J, x, zero) == 0
    lhs = xi_cocycle(J, x, y) + xi_cocycle(J, x + y, w)
    rhs = xi_cocycle(J, y, w) + xi_cocycle(J, x, y + w)
    assert lhs == rhs


@given(carriers.flatmap(lambda J: st.tuples(st.just(J), qns(J.modulus), qns(J.modulus))))
def test_xi_is_the_coboundary_of_the_pairing_lift(args):
    # v(x) = p J_k / N**k satisfies v(x) + v(y) - v(x+y) == xi(x, y)
    J, x, y = args
    N = J.modulus

    def lift(u):
        return Fraction(u.num * J.at(u.exp), N**u.exp)

    assert lift(x) + lift(y) - lift(x + y) == xi_cocycle(J, x, y)


def test_mu_frozen_values():
    assert mu_cochain(J12, QnRational(1, 1, 2)) == 0
    assert mu_cochain(J12, QnRational(3, 1, 2)) == -1
    assert mu_cochain(J12, QnRational(-1, 1, 2)) == 1
    assert mu_cochain(J12, QnRational(1, 0, 2)) == 0


def test_cross_section_carry():
    assert cross_section_carry(Fraction(1, 2), Fraction(1, 2)) == 1
    assert cross_section_carry(Fraction(1, 3), Fraction(1, 2)) == 0
    assert cross_section_carry(0, Fraction(3, 4)) == 0


@given(carriers.flatmap(lambda J: st.tuples(st.just(J), qns(J.modulus), qns(J.modulus))))
def test_zeta_relation(args):
    J, x, y = args
    z = zeta_cocycle(J, x, y)
    assert z in (0, 1)
    neg_mu = lambda u: -mu_cochain(J, u)
    assert z + coboundary(neg_mu, x, y) == xi_cocycle(J, x, y)


def test_prufer_pair_lands_in_prufer_group():
    J = NadicInteger.from_value(Fraction(-1, 2), 3)
    for num, exp in [(1, 1), (5, 2), (-7, 3)]:
        t = prufer_pair(J, QnRational(num, exp, 3))
        assert t.value.denominator in (1, 3, 9, 27)


# ---------------------------------------------------------------- cochains


def test_generator_cochain_validation():
    with pytest.raises(ValueError):
        GeneratorCochain(3, {1: 5})
    with pytest.raises(ValueError):
        GeneratorCochain(3, {0: "x"})
    c = GeneratorCochain(3, {0: -5, 1: -1, 2: 0})
    assert c.depth == 2
    assert c.psi1() == -5
    assert c(QnRational(7, 1, 3)) == -7
    with pytest.raises(ValueError):
        c(QnRational(1, 5, 3))


def test_cohomologous_frozen_witness():
    psi = cohomologous(NadicInteger.iota(5, 3), NadicInteger.iota(0, 3), depth=4)
    assert [psi.table[k] for k in range(5)] == [-5, -1, 0, 0, 0]


def test_cohomologous_none_case():
    got = cohomologous(NadicInteger.from_value(Fraction(-1, 2), 3), NadicInteger.iota(0, 3))
    assert got is None


def test_cohomologous_reflexive(three_half):
    psi = cohomologous(j_seq(three_half), j_seq(three_half))
    assert all(v == 0 for v in psi.table.values())


@given(st.integers(min_value=-30, max_value=30), st.integers(min_value=-30, max_value=30))
def test_cohomologous_integer_carriers(a, b):
    psi = cohomologous(NadicInteger.iota(a, 5), NadicInteger.iota(b, 5), samples=10)
    assert psi is not None
    assert psi.psi1() == b - a


# ---------------------------------------------------------------- weak equivalence


def test_weakly_equivalent_frozen():
    J = NadicInteger.from_value(Fraction(-1, 2), 3)
    R = NadicInteger.from_value(Fraction(-3, 2), 3)
    got = weakly_equivalent(J, R)
    assert got.is_yes and got.exponent == 0
    assert got.to_json()["verdict"] == "Yes"


def test_weakly_equivalent_denominator_obstruction():
    J = NadicInteger.from_value(Fraction(1, 5), 3)
    R = NadicInteger.from_value(Fraction(1, 7), 3)
    assert weakly_equivalent(J, R).is_no


def test_weakly_equivalent_scaling_direction():
    J = NadicInteger.from_value(Fraction(1, 7), 3)
    R = NadicInteger.from_value(Fraction(3, 7), 3)
    got = weakly_equivalent(J, R)
    assert got.is_yes and got.exponent == 1


def test_weakly_equivalent_cycle_exhaustion_is_no():
    # mod 8 the powers of 3 are {1, 3}; 1 and 5 are in different orbits
    J = NadicInteger.from_value(Fraction(1, 8), 3)
    R = NadicInteger.from_value(Fraction(5, 8), 3)
    got = weakly_equivalent(J, R)
    assert got.is_no


def test_weakly_equivalent_requires_prime_scale():
    with pytest.raises(ValueError):
        weakly_equivalent(NadicInteger.iota(1, 6), NadicInteger.iota(0, 6))


# ---------------------------------------------------------------- extension group


def test_extension_add_frozen(three_half):
    a = ExtensionElement(three_half, 0, QnRational(1, 1, 3))
    b = ExtensionElement(three_half, 0, QnRational(2, 1, 3))
    assert a + a == b
    s = a + b
    assert (s.z, s.x) == (1, QnRational(1, 0, 3))


def test_extension_group_laws(three_half):
    rngs = [(-1, 1), (2, 2), (5, 0), (-4, 3)]
    elems = [ExtensionElement(three_half, z, QnRational(n, k, 3)) for z, (n, k) in zip((0, 1, -2, 3), rngs)]
    zero = ExtensionElement(three_half, 0, QnRational(0, 0, 3))
    for e in elems:
        assert e + zero == e
        assert e + (-e) == zero
    for a in elems:
        for b in elems:
            assert a + b == b + a
    assert (elems[0] + elems[1]) + elems[2] == elems[0] + (elems[1] + elems[2])


def test_trace_frozen(three_half):
    assert trace(ExtensionElement(three_half, 1, QnRational(1, 1, 3))) == Fraction(3, 2)
    assert trace(ExtensionElement(three_half, 0, QnRational(1, 1, 3))) == Fraction(1, 2)


def test_trace_additive(three_half):
    a = ExtensionElement(three_half, 2, QnRational(5, 2, 3))
    b = ExtensionElement(three_half, -1, QnRational(7, 3, 3))
    s = a + b
    # the cocycle shifts z by exactly the carry of the alpha-values
    assert trace(s) - trace(a) - trace(b) == int(trace(s) - trace(a) - trace(b))


# ---------------------------------------------------------------- pair picture


def test_k_member(three_half):
    assert k_member(three_half, Fraction(1, 3), QnRational(1, 1, 3))
    assert not k_member(three_half, Fraction(1, 2), QnRational(1, 1, 3))
    assert k_member(three_half, 7, QnRational(0, 0, 3))


def test_pair_round_trip(three_half):
    e = ExtensionElement(three_half, 2, QnRational(5, 2, 3))
    p = as_pair(e)
    assert as_extension(p) == e
    assert k_project(e) == k_project(p) == QnRational(5, 2, 3)


def test_pair_validates_membership(three_half):
    with pytest.raises(ValueError):
        KPairElement(three_half, Fraction(1, 2), QnRational(1, 1, 3))


def test_pair_json_round_trip(three_half):
    p = as_pair(ExtensionElement(three_half, 1, QnRational(2, 2, 3)))
    blob = p.to_json()
    assert set(blob) == {"first", "second"}
    assert KPairElement.from_json(blob, three_half) == p


def test_extension_json_round_trip(three_half):
    e = ExtensionElement(three_half, -3, QnRational(2, 1, 3))
    assert e.to_json() == {"z": "-3", "x": {"num": "2", "exp": 1}}
    assert ExtensionElement.from_json(e.to_json(), three_half) == e


# ---------------------------------------------------------------- stage matrices


def test_r_digit_and_matrices(three_half):
    assert r_digit(three_half, 0) == 4
    assert r_digit(three_half, 1) == 4
    assert connecting_matrix(three_half, 0) == ((1, 4), (0, 9))
    assert embedding_matrix(three_half, 1) == (
        (Fraction(1), Fraction(4, 9)),
        (Fraction(0), Fraction(1, 9)),
    )


def test_mirrored_stage_identity(three_half, five_62):
    for seq in (three_half, five_62):
        for k in range(4):
            F = connecting_matrix(seq, k)
            U0 = embedding_matrix(seq, k)
            U1 = embedding_matrix(seq, k + 1)
            assert mat_mul(U1, mat_mul(MIRROR, mat_mul(F, MIRROR))) == U0
            # without the mirror the product differs whenever r_k != 0
            if F[0][1]:
                assert mat_mul(U1, F) != U0


def test_k1_shape():
    assert k1_shape(6) == "(Q_6)^2"
    with pytest.raises(ValueError):
        k1_shape(1)
