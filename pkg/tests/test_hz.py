"""The Harer-Zagier transform, certificates, conditions, oracle, inverse."""
import random

import pytest

from hzknot.braid import BraidWord, concat, full_twist, jm_twist_e, torus_braid
from hzknot.homfly import homfly
from hzknot.hz import (HZError, HZFunction, check_fact_conditions, factorise,
                       hz_char, hz_of_braid, hz_summation_oracle, hz_transform,
                       hz_via_characters, inverse_hz, lam_mul_factor)
from hzknot.qring import LaurentPoly, parse_laurent, qint
from hzknot.young import YoungDiagram, partitions

Y = YoungDiagram
P = parse_laurent


def test_unknot():
    z = hz_of_braid(BraidWord(2, (1,)))
    assert z.den_exponents == (-1, 1)
    assert z.numerator == (LaurentPoly.one(),)
    # series lambda(1) + lambda^2 (q + 1/q) + lambda^3 [3] + lambda^4 [4]
    assert z.series(4) == [LaurentPoly.zero(), P("1"), qint(2), qint(3), qint(4)]


def test_two_strand_closed_form():
    # Z = lambda/D_2 (1 + (-1)^w q^{-3w} lambda)
    for w in (1, 2, 3, 4, 5, 7):
        z = hz_of_braid(torus_braid(2, w))
        want = (LaurentPoly.one(),)
        want = lam_mul_factor(want, -3 * w, -1 if w % 2 else 1)
        full = HZFunction(want, tuple(-w - 2 + 2 * i for i in range(3)))
        assert z == full


def test_5_2_certificate():
    z = hz_of_braid(BraidWord(3, (-1, 2, -1, -2, -2, -2)))
    assert z.den_exponents == (1, 5, 7) and z.cancelled == (3,)
    cert = factorise(z)
    assert cert.factorisable and cert.factors == ((-1, 13),) and cert.scale == (1, 0)


def test_10_132_certificate():
    z = hz_of_braid(BraidWord(4, (1, 1, 1, -2, -1, -1, -2, -3, 2, -3, -3)))
    cert = factorise(z)
    assert cert.factorisable
    assert all(s == -1 for s, _ in cert.factors)
    # pre-cancellation numerator exponents {15, 1, -1}; the (1 - lambda q^{+-1})
    # factors cancel against the denominator
    pre = sorted(list(cert.alpha_exponents()) + list(z.cancelled))
    assert pre == [-1, 1, 15]
    assert z.cancelled == (-1, 1)
    assert z.den_exponents == (3, 5, 7)


def test_4_1_not_factorisable():
    z = hz_of_braid(BraidWord(3, (1, -2, 1, -2)))
    cert = factorise(z)
    assert not cert.factorisable
    assert len(cert.witness) == 3  # quadratic irreducible remainder
    # numerator lambda coefficient per the worked expansion
    assert z.numerator[1] == P("q^5 - q^3 - q - q^-1 - q^-3 + q^-5")


def test_character_closed_forms_3_strands():
    for w in (0, 1, -4):
        d3 = tuple(-w - 3 + 2 * i for i in range(4))
        assert hz_char(Y((3,)), w) == HZFunction((LaurentPoly.monomial(-w),), d3)
        assert hz_char(Y((2, 1)), w) == HZFunction(
            (LaurentPoly.zero(), qint(2).shift(-2 * w)), d3)
        assert hz_char(Y((1, 1, 1)), w) == HZFunction(
            (LaurentPoly.zero(), LaurentPoly.zero(), LaurentPoly.monomial(-3 * w)), d3)


def test_character_closed_forms_4_strands():
    for w in (0, 1):
        d4 = tuple(-w - 4 + 2 * i for i in range(5))
        assert hz_char(Y((3, 1)), w) == HZFunction(
            (LaurentPoly.zero(), qint(3).shift(-2 * w)), d4)
        assert hz_char(Y((2, 2)), w) == HZFunction(
            (LaurentPoly.zero(), LaurentPoly.monomial(-2 * w),
             LaurentPoly.monomial(-3 * w)), d4)
        assert hz_char(Y((2, 1, 1)), w) == HZFunction(
            (LaurentPoly.zero(), LaurentPoly.zero(), qint(3).shift(-3 * w)), d4)


def test_character_closed_forms_5_strands():
    w = 0
    d5 = tuple(-5 + 2 * i for i in range(6))
    assert hz_char(Y((4, 1)), w) == HZFunction(
        (LaurentPoly.zero(), P("q^3 + q + q^-1 + q^-3")), d5)
    assert hz_char(Y((3, 2)), w) == HZFunction(
        (LaurentPoly.zero(), qint(2), qint(3)), d5)
    assert hz_char(Y((3, 1, 1)), w) == HZFunction(
        (LaurentPoly.zero(), LaurentPoly.zero(),
         P("q^2 + q^-2") * qint(3)), d5)
    assert hz_char(Y((2, 2, 1)), w) == HZFunction(
        (LaurentPoly.zero(), LaurentPoly.zero(), qint(3), qint(2)), d5)


def test_character_closed_forms_6_strands():
    for w in (0, 1):
        d6 = tuple(-w - 6 + 2 * i for i in range(7))
        z = LaurentPoly.zero()
        assert hz_char(Y((6,)), w) == HZFunction((LaurentPoly.monomial(-w),), d6)
        assert hz_char(Y((5, 1)), w) == HZFunction(
            (z, P("q^4 + q^2 + 1 + q^-2 + q^-4").shift(-2 * w)), d6)
        assert hz_char(Y((4, 2)), w) == HZFunction(
            (z, qint(3).shift(-2 * w), (qint(3) * P("q^2 + q^-2")).shift(-3 * w)), d6)
        assert hz_char(Y((4, 1, 1)), w) == HZFunction(
            (z, z, P("q^6 + q^4 + 2q^2 + 2 + 2q^-2 + q^-4 + q^-6").shift(-3 * w)), d6)
        assert hz_char(Y((3, 3)), w) == HZFunction(
            (z, LaurentPoly.monomial(-2 * w), qint(3).shift(-3 * w),
             LaurentPoly.monomial(-4 * w)), d6)
        assert hz_char(Y((3, 2, 1)), w) == HZFunction(
            (z, z, P("q^4 + 2q^2 + 2 + 2q^-2 + q^-4").shift(-3 * w),
             P("q^4 + 2q^2 + 2 + 2q^-2 + q^-4").shift(-4 * w)), d6)


def test_character_route_equals_transform():
    words = ((3, (1, -2, 1, -2)), (3, (-1, 2, -1, -2, -2, -2)),
             (4, (-1, 2, -3, -1, 2, 3, 3)), (5, (1, 1, 2, -1, -3, 2, -3, -4, 3, -4)),
             (4, (1, -2, 1, -3, 2, 2, -3, -2, 1, 3)))
    for m, letters in words:
        b = BraidWord(m, letters)
        assert hz_via_characters(b) == hz_transform(homfly(b))


def test_denominator_law():
    rng = random.Random(5)
    for _ in range(10):
        m = rng.choice((2, 3, 4, 5))
        letters = tuple(rng.choice([1, -1]) * rng.randint(1, m - 1)
                        for _ in range(rng.randint(1, 7)))
        b = BraidWord(m, letters)
        z = hz_of_braid(b)
        full = {-b.writhe - m + 2 * i for i in range(m + 1)}
        assert set(z.den_exponents) | set(z.cancelled) == full


def test_exponent_sum_law():
    # sum(alpha) = sum(beta) for factorisable examples
    for b in (BraidWord(3, (-1, 2, -1, -2, -2, -2)),
              BraidWord(4, (1, 1, 1, -2, -1, -1, -2, -3, 2, -3, -3)),
              torus_braid(3, 4), torus_braid(5, 3)):
        z = hz_of_braid(b)
        cert = factorise(z)
        assert cert.factorisable
        # over the universal denominator, sum(alpha) = sum(beta) = -(m+1) w
        full_beta = sum(-b.writhe - b.strands + 2 * i for i in range(b.strands + 1))
        assert sum(e for _, e in cert.factors) + sum(z.cancelled) == full_beta
        assert full_beta == -(b.strands + 1) * b.writhe


def test_oracle_equivalence():
    rng = random.Random(9)
    for _ in range(8):
        m = rng.choice((2, 3, 4, 5))
        letters = tuple(rng.choice([1, -1]) * rng.randint(1, m - 1)
                        for _ in range(rng.randint(1, 7)))
        b = BraidWord(m, letters)
        h = homfly(b)
        z = hz_transform(h)
        terms = m + 3
        assert hz_summation_oracle(h, terms) == z.series(terms)


def test_oracle_zeroth_term():
    h = homfly(BraidWord(3, (1, 2, 1, 2)))
    assert hz_summation_oracle(h, 0) == [LaurentPoly.zero()]


def test_inverse_hz():
    for letters, m in (((1, 1, 1), 2), ((-1, 2, -1, -2, -2, -2), 3),
                       ((1, -2, 1, -2), 3), ((1, 1, 2, -1, -3, 2, -3, -4, 3, -4), 5)):
        b = BraidWord(m, letters)
        h = homfly(b)
        assert inverse_hz(hz_transform(h)) == h.unnormalised
    # unknot: Hbar = {A}/{q}
    z = hz_of_braid(BraidWord(2, (1,)))
    hb = inverse_hz(z)
    assert hb == homfly(BraidWord(2, (1,))).unnormalised


def test_inverse_hz_degenerate():
    z = HZFunction((LaurentPoly.one(),), (1, 1))
    with pytest.raises(HZError):
        inverse_hz(z)


def test_jones_from_series():
    # the lambda^2 series coefficient is the unnormalised Jones (q+q^-1) J(q^2)
    from hzknot.homfly import jones
    for letters, m in (((1, -2, 1, -2), 3), ((-1, 2, -1, -2, -2, -2), 3),
                       ((1, 1, -2, 1, -2, -2), 3)):
        b = BraidWord(m, letters)
        z = hz_of_braid(b)
        assert z.series(2)[2] == qint(2) * jones(b)


def test_conditions_3_strand():
    rep = check_fact_conditions(BraidWord(3, (-1, 2, -1, -2, -2, -2)))
    assert rep.satisfied and rep.agrees
    assert rep.gammas == (5, -5)
    assert rep.predicted_alpha == ((-1, 13), (-1, 3))
    rep = check_fact_conditions(BraidWord(3, (1, -2, 1, -2)))
    assert not rep.satisfied
    assert not rep.cert.factorisable


def test_conditions_4_strand():
    rep = check_fact_conditions(BraidWord(4, (1, 1, 1, -2, -1, -1, -2, -3, 2, -3, -3)))
    assert rep.satisfied and rep.agrees
    assert sorted(rep.gammas) == [-7, -5, 9]
    rep = check_fact_conditions(BraidWord(4, (1, -2, 1, -3, 2, 2, -3, -2, 1, 3)))
    assert not rep.satisfied
    assert rep.cert.factorisable  # the sufficiency-not-necessity exception


def test_conditions_5_strand():
    b83 = BraidWord(5, (1, 1, 2, -1, -3, 2, -3, -4, 3, -4))
    rep = check_fact_conditions(b83)
    assert not rep.satisfied and not rep.cert.factorisable
    rep = check_fact_conditions(torus_braid(5, 3))
    assert rep.satisfied and rep.agrees and rep.cert.factorisable


def test_conditions_sufficient_not_necessary_torus():
    # T(3,5) as a 4-strand braid with E_4 violates the conditions but is
    # HZ-factorisable (same Z as the 3-strand torus presentation)
    b = BraidWord(4, (3, -2, -1))
    b = concat(b, full_twist(3, strands=4, power=-1))
    b = concat(b, full_twist(4))
    b = concat(b, jm_twist_e(4))
    rep = check_fact_conditions(b)
    assert not rep.satisfied
    assert rep.cert.factorisable
    assert hz_via_characters(b) == hz_via_characters(torus_braid(3, 5))


def test_torus_link_nonfactorisable():
    # T(4,6): h^[22] = 2, conditions violated, not factorisable
    b = torus_braid(4, 6)
    from hzknot.rmatrix import racah_coeff
    assert racah_coeff(b, Y((2, 2))) == P("2")
    assert racah_coeff(b, Y((3, 1))) == P("-q^6")
    rep = check_fact_conditions(b)
    assert not rep.satisfied and not rep.cert.factorisable


def test_l10n42_coincidence():
    # the cancelled (1 - q^-6 lambda) factor leaves the D_3 denominator at w=1
    bl = BraidWord(4, (1, -2, 1, -3, 2, 2, -3, -2, 1, 3))
    z = hz_via_characters(bl)
    assert z.cancelled == (-6,)
    assert z.den_exponents == (-4, -2, 0, 2)


def test_hz_equality_cross_denominators():
    # the 2- and 3-strand trefoil routes give the same rational function,
    # and eager cancellation even makes the stored forms agree
    z1 = hz_of_braid(torus_braid(2, 3))
    z2 = hz_of_braid(BraidWord(3, (1, 2, 1, 2)))
    assert z1 == z2
    assert z1.den_exponents == z2.den_exponents
