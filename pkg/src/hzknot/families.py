"""Closed-form predictions for the twist families and ADE quiver polynomials.

The hyperbolic-extension family K^(m)_{j,k,l} has writhe, top Racah
coefficient, HZ exponents and Jones polynomial in closed form; the
verifier recomputes everything through the R-matrix pipeline.  Forest
quiver polynomials for the A/D/E series follow the two-term skein-style
recursion in the (a, z) variables and are cross-checked against the
pretzel links P(3,-2,n-3).
"""
from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, FamilyIndex, concat, family_braid, full_twist, jm_twist, torus_braid
from .homfly import homfly, jones
from .hz import (FactorCert, HZFunction, factorise, hz_transform,
                 hz_via_characters, lam_mul_factor)
from .qring import APoly, LaurentPoly, RatFuncQ, qbracket, qint
from .rmatrix import racah_coeff
from .young import YoungDiagram


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyPrediction:
    index: FamilyIndex
    writhe: int
    h_top: LaurentPoly          # predicted h^[(m-1)1]
    alpha: tuple                # m-1 numerator exponents
    beta: tuple                 # m+1 denominator exponents
    jones: LaurentPoly          # normalised Jones polynomial

    def to_json(self):
        return {"m": self.index.m, "j": self.index.j, "k": self.index.k, "l": self.index.l,
                "writhe": self.writhe, "h_top": self.h_top.to_json(),
                "alpha": list(self.alpha), "beta": list(self.beta),
                "jones": self.jones.to_json()}


def predict_family(idx: FamilyIndex) -> FamilyPrediction:
    """Closed forms for K^(m)_{j,k,l}: writhe, h^[(m-1)1], HZ exponents, Jones."""
    m, j, k, l = idx.m, idx.j, idx.k, idx.l
    w = idx.writhe
    exps = [j * (m - 1) * (m - 2) + l * m * (m - 3) - 2 * k - 1]
    exps += [j * (m - 1) * (m - 4) + l * m * (m - 3) + 2 * k * (m - 2) - 1 + 2 * i
             for i in range(1, m - 1)]
    num = LaurentPoly({})
    for e in exps:
        num = num + LaurentPoly.monomial(e)
    h_top = num.exact_div(qint(m - 1))
    if h_top is None:
        raise FamilyError(f"family numerator {num} not divisible by [{m-1}]_q")
    h_top = -h_top
    alpha = [-j * (m - 1) * (m - 2) - l * m * (m + 1) - 2 * k * (2 * m - 1) - 2 * m + 1]
    alpha += [-j * m * (m - 1) - l * m * (m + 1) - 2 * k * m - 2 * (m - i) + 1
              for i in range(1, m - 1)]
    beta = [-w - m + 2 * i for i in range(m + 1)]
    if sum(alpha) != sum(beta):
        raise FamilyError(f"exponent sums differ: {sum(alpha)} vs {sum(beta)}")
    jbar = LaurentPoly({})
    for e in beta:
        jbar = jbar + LaurentPoly.monomial(e)
    for e in alpha:
        jbar = jbar - LaurentPoly.monomial(e)
    jpoly = jbar.exact_div(qint(2))
    if jpoly is None:
        raise FamilyError("family Jones numerator not divisible by [2]_q")
    return FamilyPrediction(idx, w, h_top,
                            tuple(sorted(alpha, reverse=True)),
                            tuple(sorted(beta, reverse=True)), jpoly)


@dataclass(frozen=True)
class FamilyReport:
    prediction: FamilyPrediction
    braid: BraidWord
    h_top_matches: bool
    factorisable: bool
    alpha_matches: bool
    beta_matches: bool
    jones_matches: bool

    @property
    def all_match(self):
        return (self.h_top_matches and self.factorisable and self.alpha_matches
                and self.beta_matches and self.jones_matches)


def verify_family(idx: FamilyIndex) -> FamilyReport:
    """Run the R-matrix pipeline on the family braid and compare with the
    closed-form prediction."""
    if idx.m > 5:
        raise FamilyError("pipeline verification needs at most 5 strands")
    pred = predict_family(idx)
    b = family_braid(idx)
    top = YoungDiagram((idx.m - 1, 1))
    h_top = racah_coeff(b, top)
    z = hz_via_characters(b)
    cert = factorise(z)
    alpha_ok = cert.factorisable and _exponents_match(pred.alpha, cert, z)
    beta_ok = set(z.den_exponents) | set(z.cancelled) == set(pred.beta)
    jones_ok = jones(b) == pred.jones
    return FamilyReport(pred, b, h_top == pred.h_top, cert.factorisable,
                        alpha_ok, beta_ok, jones_ok)


def _exponents_match(alpha, cert: FactorCert, z: HZFunction):
    remaining = list(cert.factors)
    for a in alpha:
        if (-1, a) in remaining:
            remaining.remove((-1, a))
        elif a in z.cancelled:
            continue
        else:
            return False
    return not remaining


def torus_top_coeff(m, n):
    """h^[(m-1)1](T(m,n)) computed by traces; the torus law gives -q^{(m-3)n}."""
    if m == 2:
        return racah_coeff(torus_braid(2, n), YoungDiagram((1, 1)))
    return racah_coeff(torus_braid(m, n), YoungDiagram((m - 1, 1)))


def torus_alexander(m, n) -> LaurentPoly:
    """Alexander polynomial of T(m,n) from the factorised product formula,
    in the q-variable (t = q^2)."""
    num = (LaurentPoly.one() - LaurentPoly.monomial(2)) * \
          (LaurentPoly.one() - LaurentPoly.monomial(2 * m * n))
    den = (LaurentPoly.one() - LaurentPoly.monomial(2 * m)) * \
          (LaurentPoly.one() - LaurentPoly.monomial(2 * n))
    out = num.exact_div(den)
    if out is None:
        raise FamilyError(f"torus Alexander for ({m},{n}) is not polynomial")
    return out.shift(-(m - 1) * (n - 1))


# ---------------------------------------------------------------------------
# forest quiver polynomials in the (a, z) variables
# ---------------------------------------------------------------------------

class AZPoly:
    """Laurent polynomial in a whose coefficients are Laurent in z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        for k, v in (coeffs or {}).items():
            if not v.is_zero():
                d[k] = v
        self.coeffs = d

    @classmethod
    def one(cls):
        return cls({0: LaurentPoly.one()})

    def __add__(self, other):
        d = dict(self.coeffs)
        for k, v in other.coeffs.items():
            nv = d.get(k, LaurentPoly.zero()) + v
            if nv.is_zero():
                d.pop(k, None)
            else:
                d[k] = nv
        return AZPoly(d)

    def __mul__(self, other):
        d = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                nv = d.get(k, LaurentPoly.zero()) + v1 * v2
                if nv.is_zero():
                    d.pop(k, None)
                else:
                    d[k] = nv
        return AZPoly(d)

    def step(self, other):
        """The quiver recursion step (z/a)*self + (1/a^2)*other."""
        d = {}
        for k, v in self.coeffs.items():
            d[k - 1] = v.shift(1)    # multiply the z-coefficient by z
        for k, v in other.coeffs.items():
            nv = d.get(k - 2, LaurentPoly.zero()) + v
            if nv.is_zero():
                d.pop(k - 2, None)
            else:
                d[k - 2] = nv
        return AZPoly(d)

    def to_apoly(self) -> APoly:
        """Substitute a -> A, z -> q - q^-1 (normalised HOMFLY in (A, q))."""
        zbar = qbracket(1)
        out = {}
        for k, v in self.coeffs.items():
            total = RatFuncQ(0)
            for ze, c in v.terms.items():
                if ze >= 0:
                    total = total + RatFuncQ(zbar ** ze * c)
                else:
                    total = total + RatFuncQ(LaurentPoly.const(c), zbar ** (-ze))
            if total:
                out[k] = total
        return APoly(out)

    def hbar(self) -> APoly:
        """Unnormalised polynomial ({A}/{q}) * P."""
        bracket = APoly({1: RatFuncQ(LaurentPoly.one(), qbracket(1)),
                         -1: RatFuncQ(LaurentPoly.const(-1), qbracket(1))})
        return self.to_apoly() * bracket


@dataclass(frozen=True)
class QuiverPoly:
    series: str
    n: int
    value: AZPoly

    def hz(self) -> HZFunction:
        return hz_transform(self.value.hbar())


def _a_series(n):
    if n < 0:
        raise FamilyError("A-series index must be nonnegative")
    p_prev = AZPoly.one()                                    # A_0: unknot
    if n == 0:
        return p_prev
    p = AZPoly({-1: LaurentPoly({1: 1, -1: 1}), -3: LaurentPoly({-1: -1})})  # A_1: Hopf
    for _ in range(n - 1):
        p, p_prev = p.step(p_prev), p
    return p


def _d_series(n):
    if n < 2:
        raise FamilyError("D-series index starts at 2")
    hopf = AZPoly({-1: LaurentPoly({1: 1, -1: 1}), -3: LaurentPoly({-1: -1})})
    p_prev = hopf * hopf                                     # D_2: double covering
    if n == 2:
        return p_prev
    p = _a_series(3)                                         # D_3 = A_3
    for _ in range(n - 3):
        p, p_prev = p.step(p_prev), p
    return p


def _e_series(n):
    if n < 4:
        raise FamilyError("E-series index starts at 4")
    p_prev = _a_series(4)                                    # E_4 = A_4
    if n == 4:
        return p_prev
    p = _d_series(5)                                         # E_5 = D_5
    for _ in range(n - 5):
        p, p_prev = p.step(p_prev), p
    return p


def quiver_poly(series, n) -> QuiverPoly:
    """P(L_n) for L in {A, D, E} via the two-term recursion."""
    series = series.upper()
    if series == "A":
        value = _a_series(n)
    elif series == "D":
        value = _d_series(n)
    elif series == "E":
        value = _e_series(n)
    else:
        raise FamilyError(f"unknown series {series!r}")
    return QuiverPoly(series, n, value)


def z_en_closed_form(n) -> HZFunction:
    """Z(E_n) = lambda (1 - q^{-n-11} l)(1 - (-1)^n q^{-3n+3} l) / prod."""
    num = (LaurentPoly.one(),)
    num = lam_mul_factor(num, -n - 11)
    num = lam_mul_factor(num, -3 * n + 3, -1 if n % 2 == 0 else 1)
    return HZFunction(num, (-n + 1, -n - 1, -n - 3, -n - 5))


def pretzel_braid(n, variant=0) -> BraidWord:
    """A 3-strand braid whose closure is the pretzel link P(3,-2,n-3).

    Even n = 2j: the knot K^(3)_{j-2,1,0}.  Odd n = 2j+1: a two-component
    link, either sigma_2 (x) F_2^{j-1} (x) E~_3 (variant 0) or
    sigma_2 (x) F_2^{j-2} (x) F_3 (variant 1); both have equal HZ.
    """
    if n < 4:
        raise FamilyError("pretzel family starts at n = 4")
    if n % 2 == 0:
        return family_braid(FamilyIndex(3, n // 2 - 2, 1, 0))
    j = (n - 1) // 2
    base = BraidWord(3, (2,))
    if variant == 0:
        return concat(concat(base, full_twist(2, strands=3, power=j - 1)), jm_twist(3))
    return concat(concat(base, full_twist(2, strands=3, power=j - 2)), full_twist(3))
