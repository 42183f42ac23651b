"""R-matrix transcriptions: explicit entries, Yang-Baxter, twist identities."""
import random

import pytest

from hzknot.braid import BraidWord, full_twist, jm_twist, jm_twist_e, torus_braid
from hzknot.qring import (ExtScalar, LaurentPoly, RatFuncQ, parse_laurent,
                          qbracket, qint)
from hzknot.rmatrix import (RMatrixError, RMatrixSet, build_rmatrices,
                            racah_coeff, racah_table, twist_diag_exponents,
                            twist_rep)
from hzknot.young import YoungDiagram, partitions

Y = YoungDiagram
P = parse_laurent
SETS = [(3, Y((2, 1))), (4, Y((3, 1))), (4, Y((2, 2))),
        (5, Y((4, 1))), (5, Y((3, 2))), (5, Y((3, 1, 1)))]


def scalar(x):
    return ExtScalar.from_scalar(x)


def rad_over(n, num, den):
    """num * r_n / den as an ExtScalar."""
    return ExtScalar({frozenset({n}): RatFuncQ(num, den)})


def mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n)), ExtScalar())
                       for j in range(n)) for i in range(n))


def test_r_matrices_3_21_explicit():
    rs = build_rmatrices(3, Y((2, 1)))
    q = LaurentPoly.monomial(1)
    c = RatFuncQ(LaurentPoly.one(), qint(2))
    assert rs.matrix(1) == ((scalar(q), scalar(0)), (scalar(0), scalar(P("-q^-1"))))
    # R_2 = (-c/q^2, s; s, q^2 c) with s = r2/[2]
    s = rad_over(2, LaurentPoly.one(), qint(2))
    want = ((scalar(RatFuncQ(P("-q^-2"), qint(2))), s),
            (s, scalar(RatFuncQ(P("q^2"), qint(2)))))
    assert rs.matrix(2) == want


def test_r_matrices_4_22_explicit():
    rs = build_rmatrices(4, Y((2, 2)))
    s = rad_over(2, LaurentPoly.const(-1), qint(2))
    want = ((scalar(RatFuncQ(P("-q^-2"), qint(2))), s),
            (s, scalar(RatFuncQ(P("q^2"), qint(2)))))
    assert rs.matrix(2) == want
    assert rs.matrix(3) == rs.matrix(1)


def test_r_matrices_4_31_explicit():
    rs = build_rmatrices(4, Y((3, 1)))
    q2, q3 = qint(2), qint(3)
    R2 = rs.matrix(2)
    assert R2[0][0] == scalar(LaurentPoly.monomial(1))
    # (2,2) entry: q/[2]^2 - [3]/(q [2]^2)
    assert R2[1][1] == scalar(RatFuncQ(LaurentPoly.monomial(1), q2 * q2)
                              - RatFuncQ(q3.shift(-1), q2 * q2))
    # (2,3) entry: -s([2]) = -r2/[2]
    assert R2[1][2] == rad_over(2, LaurentPoly.const(-1), q2)
    R3 = rs.matrix(3)
    # top-left -1/(q(1-q+q^2)(1+q+q^2)) = -1/(q^3 [3])
    assert R3[0][0] == scalar(RatFuncQ(LaurentPoly.const(-1), q3.shift(3)))
    assert R3[1][1] == scalar(RatFuncQ(LaurentPoly.monomial(5), q3.shift(2)))
    assert R3[0][1] == rad_over(3, LaurentPoly.const(-1), q3)
    assert R3[2][2] == scalar(LaurentPoly.monomial(1))


def test_r_matrices_5_41_explicit():
    rs = build_rmatrices(5, Y((4, 1)))
    R2, R3, R4 = rs.matrix(2), rs.matrix(3), rs.matrix(4)
    q2, q3, q4 = qint(2), qint(3), qint(4)
    # R_2 block: -1/(q(1+q^2)) and -sqrt(1+q^2+q^4)/(1+q^2) = -r2/[2]
    assert R2[2][2] == scalar(RatFuncQ(LaurentPoly.const(-1), q2.shift(2)))
    assert R2[2][3] == rad_over(2, LaurentPoly.const(-1), q2)
    assert R2[3][3] == scalar(RatFuncQ(LaurentPoly.monomial(3), q2.shift(1)))
    # R_3 middle block as in the 4-strand [31] case
    assert R3[1][1] == scalar(RatFuncQ(LaurentPoly.const(-1), q3.shift(3)))
    assert R3[1][2] == rad_over(3, LaurentPoly.const(-1), q3)
    # R_4 top-left -1/(q(1+q^2)(1+q^4)) = -q^-1/(q^3 [4])
    assert R4[0][0] == scalar(RatFuncQ(P("-q^-1"), q4.shift(3)))
    assert R4[0][1] == rad_over(4, LaurentPoly.const(-1), q4)
    assert R4[1][1] == scalar(RatFuncQ(LaurentPoly.monomial(7), q4.shift(3)))
    assert R4[2][2] == scalar(LaurentPoly.monomial(1))


def test_yang_baxter_and_far_commutation():
    for m, Q in SETS:
        rs = build_rmatrices(m, Q)
        mats = {i: rs.rep(i) for i in range(1, m)}
        for i in range(1, m - 1):
            lhs = mats[i] @ mats[i + 1] @ mats[i]
            rhs = mats[i + 1] @ mats[i] @ mats[i + 1]
            assert lhs.equals(rhs), (m, Q, i)
        for i in range(1, m):
            for j in range(i + 2, m):
                assert (mats[i] @ mats[j]).equals(mats[j] @ mats[i]), (m, Q, i, j)


def test_inverses():
    for m, Q in SETS:
        rs = build_rmatrices(m, Q)
        for i in range(1, m):
            prod = rs.rep(i) @ rs.rep(i, -1)
            ident = rs.rep(i).identity(rs.dim)
            assert prod.equals(ident), (m, Q, i)


def test_eigenvalue_property():
    # (R - q)(R + 1/q) = 0 exactly for every generator matrix
    for m, Q in SETS:
        rs = build_rmatrices(m, Q)
        for i in range(1, m):
            grid = rs.matrix(i)
            n = len(grid)
            q = scalar(LaurentPoly.monomial(1))
            qinv = scalar(LaurentPoly.monomial(-1))
            a = tuple(tuple(grid[r][c] - (q if r == c else scalar(0))
                            for c in range(n)) for r in range(n))
            b = tuple(tuple(grid[r][c] + (qinv if r == c else scalar(0))
                            for c in range(n)) for r in range(n))
            prod = mat_mul(a, b)
            assert all(prod[r][c].is_zero() for r in range(n) for c in range(n)), (m, Q, i)


def test_determinants_and_trace_powers():
    rs31 = build_rmatrices(4, Y((3, 1)))
    for i in (1, 2, 3):
        g = rs31.matrix(i)
        det = (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
               - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
               + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))
        assert det == scalar(P("-q"))
        for n in range(1, 5):
            b = BraidWord(4, (i,) * n)
            want = (LaurentPoly.monomial(n, 2)
                    + LaurentPoly.monomial(-n, 1 if n % 2 == 0 else -1))
            assert racah_coeff(b, Y((3, 1))) == want
    for i in (1, 2, 3, 4):
        for n in range(1, 5):
            b = BraidWord(5, (i,) * n)
            want = (LaurentPoly.monomial(n, 3)
                    + LaurentPoly.monomial(-n, 1 if n % 2 == 0 else -1))
            assert racah_coeff(b, Y((4, 1))) == want


def test_31_combination_identity():
    # tr(R1) tr(R2^-1) - 1 = tr(R1 R2^-1) + tr(R1^-1 R2) = 4 - 2/q^2 - 2q^2
    t1 = racah_coeff(BraidWord(4, (1,)), Y((3, 1)))
    t2inv = racah_coeff(BraidWord(4, (-2,)), Y((3, 1)))
    lhs = t1 * t2inv - LaurentPoly.one()
    rhs = (racah_coeff(BraidWord(4, (1, -2)), Y((3, 1)))
           + racah_coeff(BraidWord(4, (-1, 2)), Y((3, 1))))
    want = P("4 - 2q^-2 - 2q^2")
    assert lhs == rhs == want


def test_twist_representations():
    # Prop F3E3
    assert twist_diag_exponents(3, Y((2, 1)), "full_twist") == (0, 0)
    assert twist_diag_exponents(3, Y((2, 1)), "jm_twist") == (-2, 2)
    rep = build_rmatrices(3, Y((2, 1))).word_rep((1, 1))
    assert rep.is_diagonal()
    assert rep.entry_ext(0, 0) == scalar(P("q^2")) and rep.entry_ext(1, 1) == scalar(P("q^-2"))
    # Prop F4E4
    assert twist_diag_exponents(4, Y((3, 1)), "full_twist") == (4, 4, 4)
    assert twist_diag_exponents(4, Y((2, 2)), "full_twist") == (0, 0)
    assert twist_diag_exponents(4, Y((3, 1)), "partial_twist") == (6, 0, 0)
    assert twist_diag_exponents(4, Y((2, 2)), "partial_twist") == (0, 0)
    assert twist_diag_exponents(4, Y((3, 1)), "jm_twist") == (-2, 4, 4)
    assert twist_diag_exponents(4, Y((2, 2)), "jm_twist") == (0, 0)
    # Prop F5E5
    assert twist_diag_exponents(5, Y((4, 1)), "full_twist") == (10,) * 4
    assert twist_diag_exponents(5, Y((3, 2)), "full_twist") == (4,) * 5
    assert twist_diag_exponents(5, Y((3, 1, 1)), "full_twist") == (0,) * 6
    assert twist_diag_exponents(5, Y((4, 1)), "partial_twist") == (12, 4, 4, 4)
    assert twist_diag_exponents(5, Y((3, 2)), "partial_twist") == (4, 4, 4, 0, 0)
    assert twist_diag_exponents(5, Y((3, 1, 1)), "partial_twist") == (4, 4, 4, -4, -4, -4)
    assert twist_diag_exponents(5, Y((4, 1)), "jm_twist") == (-2, 6, 6, 6)
    assert twist_diag_exponents(5, Y((3, 2)), "jm_twist") == (0, 0, 0, 4, 4)
    assert twist_diag_exponents(5, Y((3, 1, 1)), "jm_twist") == (-4, -4, -4, 4, 4, 4)


def test_e3_variant_not_diagonal():
    # E_3 = s1 s2^2 s1 has representation diag cq(q^2+q^-2), cq^-1(q^2+q^-2)
    # with off-diagonal -s(q - q^-1): not diagonal, unlike E~_3
    rs = build_rmatrices(3, Y((2, 1)))
    rep = rs.word_rep(jm_twist_e(3).letters)
    assert not rep.is_diagonal()
    assert rep.entry_ext(0, 0) == scalar(
        RatFuncQ(LaurentPoly.monomial(1) * P("q^2 + q^-2"), qint(2)))
    assert rep.entry_ext(1, 1) == scalar(
        RatFuncQ(LaurentPoly.monomial(-1) * P("q^2 + q^-2"), qint(2)))
    off = ExtScalar({frozenset({2}): RatFuncQ(-qbracket(1), qint(2))})
    assert rep.entry_ext(0, 1) == off == rep.entry_ext(1, 0)


def test_squared_22_not_identity():
    # R^2 for [22] is diag(q^2, q^-2), so F_2 breaks the h^[22] = 0 condition
    rep = build_rmatrices(4, Y((2, 2))).word_rep((1, 1))
    assert rep.entry_ext(0, 0) == scalar(P("q^2"))
    assert rep.entry_ext(1, 1) == scalar(P("q^-2"))


def test_base_braid_diagonals():
    # the x_ii data driving every family closed form
    q2, q3, q4 = qint(2), qint(3), qint(4)
    rep = build_rmatrices(3, Y((2, 1))).word_rep((2, 1))
    assert rep.entry_ext(0, 0) == scalar(RatFuncQ(P("-q^-1"), q2))
    assert rep.entry_ext(1, 1) == scalar(RatFuncQ(P("-q"), q2))
    rep = build_rmatrices(4, Y((3, 1))).word_rep((3, 2, 1))
    diag = [rep.entry_ext(i, i) for i in range(3)]
    assert diag[0] == scalar(RatFuncQ(P("-q^-1"), q3))
    assert diag[1] == scalar(RatFuncQ(P("-q^2"), q3 * q2))
    assert diag[2] == scalar(RatFuncQ(P("-q^2"), q2))
    rep = build_rmatrices(4, Y((2, 2))).word_rep((3, 2, 1))
    assert rep.entry_ext(0, 0) == scalar(RatFuncQ(LaurentPoly.const(-1), q2))
    assert rep.entry_ext(1, 1) == scalar(RatFuncQ(LaurentPoly.one(), q2))
    rep = build_rmatrices(5, Y((4, 1))).word_rep((4, 3, 2, 1))
    diag = [rep.entry_ext(i, i) for i in range(4)]
    assert diag[0] == scalar(RatFuncQ(P("-q^-1"), q4))
    assert diag[1] == scalar(RatFuncQ(P("-q^3"), q4 * q3))
    assert diag[2] == scalar(RatFuncQ(P("-q^3"), q2 * q3))
    assert diag[3] == scalar(RatFuncQ(P("-q^3"), q2))
    rep = build_rmatrices(5, Y((3, 2))).word_rep((4, 3, 2, 1))
    diag = [rep.entry_ext(i, i) for i in range(5)]
    assert diag[0] == scalar(RatFuncQ(LaurentPoly.const(-1), q3))
    assert diag[1] == scalar(RatFuncQ(LaurentPoly.one(), q3 * q2 * q2))
    assert diag[2] == scalar(RatFuncQ(LaurentPoly.one(), q2 * q2))
    assert diag[3] == scalar(RatFuncQ(P("-q^2"), q2 * q2))
    assert diag[4] == scalar(RatFuncQ(P("q^2"), q2 * q2))
    rep = build_rmatrices(5, Y((3, 1, 1))).word_rep((4, 3, 2, 1))
    diag = [rep.entry_ext(i, i) for i in range(6)]
    t3m1 = q3 - LaurentPoly.one()
    assert diag[0] == scalar(RatFuncQ(P("q^-2"), q3))
    assert diag[1] == scalar(RatFuncQ(P("q^-2"), q2 * q2 * q3 * t3m1))
    assert diag[2] == scalar(RatFuncQ(P("q^-2"), q2 * q2 * t3m1))
    assert diag[3] == scalar(RatFuncQ(P("q^2"), q2 * q2 * t3m1))
    assert diag[4] == scalar(RatFuncQ(P("q^2"), q2 * q2 * q3 * t3m1))
    assert diag[5] == scalar(RatFuncQ(P("q^2"), q3))


def test_worked_traces():
    assert racah_coeff(BraidWord(3, (1, 2, 1, 2)), Y((2, 1))) == P("-1")
    assert racah_coeff(BraidWord(3, (1, -2, 1, -2)), Y((2, 1))) == \
        P("q^4 - 2q^2 + 1 - 2q^-2 + q^-4")
    b61 = BraidWord(4, (-1, 2, -3, -1, 2, 3, 3))
    assert racah_coeff(b61, Y((2, 2))) == P("q - q^-1")
    assert racah_coeff(b61, Y((3, 1))) == P("q^-5 - q^-3 - q^-1 + q - 2q^3 + q^5")
    b83 = BraidWord(5, (1, 1, 2, -1, -3, 2, -3, -4, 3, -4))
    assert racah_coeff(b83, Y((4, 1))) == P("q^6 - q^4 - q^2 + 1 - q^-2 - q^-4 + q^-6")
    assert racah_coeff(b83, Y((3, 1, 1))) == \
        P("-2q^6 + 3q^4 - q^2 + 1 - q^-2 + 3q^-4 - 2q^-6")
    assert racah_coeff(b83, Y((3, 2))) == \
        P("q^2 - 1 + q^-2") * P("q - q^-1") * P("q - q^-1")
    b10 = BraidWord(4, (1, 1, 1, -2, -1, -1, -2, -3, 2, -3, -3))
    assert racah_coeff(b10, Y((3, 1))) == P("-q^-5 + q^-1 - q + q^5 - q^7")
    assert racah_coeff(b10, Y((2, 2))).is_zero()
    bl = BraidWord(4, (1, -2, 1, -3, 2, 2, -3, -2, 1, 3))
    assert racah_coeff(bl, Y((3, 1))) == P("-q^-4 + 2q^-2 - 3 + 2q^2 - q^6 + q^8")
    assert racah_coeff(bl, Y((2, 2))) == P("-q^-4 + q^-2 - 1 + q^2 - q^4")


def test_scalar_diagrams_and_mirrors():
    b = BraidWord(4, (1, -2, 3, 3))
    w = b.writhe
    table = racah_table(b)
    assert table[Y((4,))] == LaurentPoly.monomial(w)
    assert table[Y((1, 1, 1, 1))] == LaurentPoly.monomial(-w, (-1) ** w)
    assert table[Y((2, 1, 1))] == table[Y((3, 1))].subs_mirror()


def test_cyclic_invariance():
    rng = random.Random(7)
    for m in (3, 4, 5):
        for _ in range(6):
            letters = tuple(rng.choice([1, -1]) * rng.randint(1, m - 1)
                            for _ in range(rng.randint(2, 8)))
            b = BraidWord(m, letters)
            ref = racah_table(b)
            rot = racah_table(b.rotate(rng.randint(1, len(letters))))
            assert ref == rot


def test_unsupported_diagram():
    with pytest.raises(RMatrixError):
        racah_coeff(BraidWord(6, (1,)), Y((4, 2)))
    with pytest.raises(RMatrixError):
        build_rmatrices(6, Y((5, 1)))
    # scalar diagrams work at any strand count
    assert racah_coeff(BraidWord(7, (1, 2, 3)), Y((7,))) == P("q^3")


def test_torus_full_twist_scalars():
    # F_m^l = T(m, ml) acts as q^{m(m-3)l} on [(m-1)1]
    for m, l in ((3, 1), (4, 1), (5, 1), (4, 2)):
        h = racah_coeff(torus_braid(m, m * l), Y((m - 1, 1)))
        assert h == LaurentPoly.monomial(m * (m - 3) * l, m - 1)
