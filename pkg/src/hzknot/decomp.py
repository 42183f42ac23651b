"""Factorised-form decomposition of HZ functions.

Every HZ function of a knot is conjectured to be a rational-coefficient
combination of brackets [a_0,...,a_{k-2}] = lambda prod(1 - lambda q^{a_i})
over the knot's type denominator, with coefficients summing to 1.  The
closed form settles types with at most 4 denominator exponents (pair
peeling); 5-exponent types need a triple solver and 6-exponent types a
quadruple solver with cyclic zero-sum corrections.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hz import HZError, HZFunction, lam_mul_factor
from .qring import LaurentPoly, qint


class DecompositionError(HZError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class Bracket:
    """[a_0, ..., a_{k-2}] over the type denominator prod(1 - lambda q^{b_i}).

    Factors default to (1 - lambda q^a); passing signs allows the
    (1 + lambda q^a) variants used by even-component links and the
    D-series fractional decompositions.
    """

    exponents: tuple
    beta: tuple
    signs: tuple = None

    def __post_init__(self):
        signs = self.signs or (-1,) * len(self.exponents)
        paired = sorted(zip(self.exponents, signs))
        object.__setattr__(self, "exponents", tuple(e for e, _ in paired))
        object.__setattr__(self, "signs", tuple(s for _, s in paired))
        object.__setattr__(self, "beta", tuple(sorted(self.beta)))
        if sum(self.exponents) != sum(self.beta):
            raise DecompositionError(
                f"bracket exponents {self.exponents} do not sum to {sum(self.beta)}")

    def expand(self) -> HZFunction:
        num = (LaurentPoly.one(),)
        for a, s in zip(self.exponents, self.signs):
            num = lam_mul_factor(num, a, s)
        return HZFunction(num, self.beta)

    def __str__(self):
        body = ",".join(("" if s < 0 else "+") + str(a)
                        for a, s in zip(self.exponents, self.signs))
        return f"[{body}]"


@dataclass(frozen=True)
class Decomposition:
    terms: tuple               # ((coefficient, Bracket), ...)
    beta: tuple

    @property
    def coefficient_sum(self):
        return sum((c for c, _ in self.terms), Fraction(0))

    def __str__(self):
        parts = []
        for c, br in self.terms:
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coeff = "" if mag == 1 else f"{mag}"
            parts.append(f"{sign}{coeff}{br}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def to_json(self):
        return [[str(Fraction(c)), list(br.exponents)] for c, br in self.terms]


def expand(d: Decomposition) -> HZFunction:
    """Exact rational-function sum of the decomposition."""
    total = None
    for c, br in d.terms:
        z = br.expand()
        piece = HZFunction(tuple(coef * c for coef in z.numerator), z.den_exponents,
                           z.strands, z.writhe, z.cancelled)
        total = piece if total is None else total + piece
    if total is None:
        raise DecompositionError("empty decomposition")
    return total


def hz_type(z: HZFunction):
    """The knot's HZ type: the smallest step-2 progression covering the poles."""
    poles = z.den_exponents
    lo, hi = min(poles), max(poles)
    if any((e - lo) % 2 for e in poles):
        raise DecompositionError(f"poles {poles} are not of a single parity")
    return tuple(range(lo, hi + 1, 2))


def _type_numerator(z: HZFunction, beta):
    """Numerator of z over the full type denominator."""
    num = z.numerator
    for e in beta:
        if e not in z.den_exponents:
            num = lam_mul_factor(num, e)
    return num


def _poly_from_pairs(pairs):
    return LaurentPoly(dict(pairs))


def _extreme_exponent(p: LaurentPoly):
    """Exponent of largest magnitude (positive preferred on ties)."""
    return max(p.terms, key=lambda e: (abs(e), e))


def _candidates(support, parity, extra_margin=0):
    lo, hi = min(support) - extra_margin, max(support) + extra_margin
    return [e for e in range(hi, lo - 1, -1) if (e - parity) % 2 == 0]


def _partner_tuples(cand, total, size):
    """Sorted-descending tuples from cand of given size with given sum,
    ordered lexicographically ascending (the canonical search order)."""
    out = set()

    def rec(prefix, remaining, rest_size, cap):
        if rest_size == 1:
            if remaining in cand and remaining <= cap:
                out.add(prefix + (remaining,))
            return
        for x in cand:
            if x > cap:
                continue
            rec(prefix + (x,), remaining - x, rest_size - 1, x)

    rec((), total, size, max(cand) if cand else 0)
    return sorted(out)


def _peel_search(P, S, size, cand, max_terms):
    """DFS for coefficients/brackets whose first-order monomials sum to P.

    Each step zeroes the extreme exponent t with one bracket containing t
    (possibly with multiplicity) and `size` further exponents summing to
    S - t.  Returns a list of (Fraction, sorted exponent tuple) or None.
    """
    if P.is_zero():
        return []
    if max_terms == 0:
        return None
    t = _extreme_exponent(P)
    r = Fraction(P.terms[t])
    for partners in _partner_tuples(cand, S - t, size):
        mult = 1 + sum(1 for x in partners if x == t)
        coeff = r / mult
        bracket = tuple(sorted((t,) + partners))
        delta = LaurentPoly({})
        for x in bracket:
            delta = delta + LaurentPoly.monomial(x, coeff)
        rest = _peel_search(P - delta, S, size, cand, max_terms - 1)
        if rest is not None:
            return [(coeff, bracket)] + rest
    return None


def _first_order_target(num):
    """P = -(lambda^1 coefficient of the type numerator)."""
    return -(num[1] if len(num) > 1 else LaurentPoly.zero())


def _second_order(num):
    return num[2] if len(num) > 2 else LaurentPoly.zero()


def _merge_terms(terms, beta):
    """Combine duplicate brackets and drop zero coefficients."""
    acc = {}
    order = []
    for c, exps in terms:
        if exps not in acc:
            acc[exps] = Fraction(0)
            order.append(exps)
        acc[exps] += Fraction(c)
    out = []
    for exps in order:
        if acc[exps]:
            out.append((acc[exps], Bracket(exps, beta)))
    return tuple(out)


def decompose3(h21: LaurentPoly, w: int) -> Decomposition:
    """Closed-form decomposition of a 3-strand HZ from its h^[21].

    h^[21] is a symmetric Laurent polynomial for every 3-strand braid;
    the pair peeling below is the telescoping closed form, with bracket
    pairs symmetric about -2w and coefficients summing to -h^[21](q=1).
    """
    if h21 != h21.subs_inv():
        raise DecompositionError(f"h^[21] = {h21} is not symmetric under q -> 1/q")
    beta = tuple(-w - 3 + 2 * i for i in range(4))
    P = -(qint(2) * h21).shift(-2 * w)
    S = -4 * w
    terms = []
    while not P.is_zero():
        t = _extreme_exponent(P)
        c = Fraction(P.terms[t])
        pair = (t, S - t)
        mult = 2 if t == S - t else 1
        c /= mult
        terms.append((c, tuple(sorted(pair))))
        delta = LaurentPoly.monomial(t, c) + LaurentPoly.monomial(S - t, c)
        P = P - delta
    return Decomposition(_merge_terms(terms, beta), beta)


# -- quadruple corrections for 6-exponent types ------------------------------

def _pair_sum_poly(exps):
    out = LaurentPoly({})
    for i in range(len(exps)):
        for j in range(i + 1, len(exps)):
            out = out + LaurentPoly.monomial(exps[i] + exps[j])
    return out


def _correction_poly(pu1, pu2, pv1, pv2):
    """lambda^2 effect of [pu1+pv1] - [pu1+pv2] + [pu2+pv2] - [pu2+pv1]."""
    du = (LaurentPoly.monomial(pu1[0]) + LaurentPoly.monomial(pu1[1])
          - LaurentPoly.monomial(pu2[0]) - LaurentPoly.monomial(pu2[1]))
    dv = (LaurentPoly.monomial(pv1[0]) + LaurentPoly.monomial(pv1[1])
          - LaurentPoly.monomial(pv2[0]) - LaurentPoly.monomial(pv2[1]))
    return du * dv


def _pairs_by_sum(cand):
    pairs = {}
    for i, a in enumerate(cand):
        for b in cand[i:]:
            pairs.setdefault(a + b, []).append((a, b))
    for v in pairs.values():
        v.sort()
    return pairs


def _correction_search(R, S, cand, max_corr):
    """Find cyclic quadruple corrections whose lambda^2 effect equals R.

    Each correction contributes d * (q^{u1}+q^{u2}-q^{u1'}-q^{u2'}) *
    (q^{v1}+q^{v2}-q^{v1'}-q^{v2'}) with pair sums u + v = S; such terms
    vanish at first and third order by the zero-sum structure.
    """
    if R.is_zero():
        return []
    if max_corr == 0:
        return None
    pairs = _pairs_by_sum(cand)
    E = _extreme_exponent(R)
    r = Fraction(R.terms[E])
    seen = set()
    # balanced splits of S first, matching the worked corrections
    for u in sorted(pairs, key=lambda x: (abs(2 * x - S), -x)):
        v = S - u
        if v not in pairs or (u, v) in seen or (v, u) in seen:
            continue
        seen.add((u, v))
        plist_u, plist_v = pairs[u], pairs[v]
        for pu1 in plist_u:
            for pv1 in plist_v:
                # the extreme of R must be hit by one of the four products
                tops = {pu1[0] + pv1[0], pu1[0] + pv1[1], pu1[1] + pv1[0], pu1[1] + pv1[1]}
                if E not in tops:
                    continue
                for pu2 in plist_u:
                    if pu2 == pu1:
                        continue
                    for pv2 in plist_v:
                        if pv2 == pv1:
                            continue
                        corr = _correction_poly(pu1, pu2, pv1, pv2)
                        if corr.is_zero() or E not in corr.terms:
                            continue
                        d = r / Fraction(corr.terms[E])
                        rest = _correction_search(R - corr * d, S, cand, max_corr - 1)
                        if rest is not None:
                            return [(d, pu1, pu2, pv1, pv2)] + rest
    return None


def decompose(z: HZFunction) -> Decomposition:
    """Factorised-form decomposition of an HZ function.

    Types with up to 6 exponents are supported (braids on up to 5
    strands).  The expansion of the result always reproduces z exactly;
    failure raises DecompositionError with the unmatched residual.
    """
    beta = hz_type(z)
    k = len(beta)
    if k < 2:
        raise DecompositionError(f"degenerate type {beta}")
    if k > 6:
        raise DecompositionError(
            f"type {beta} has {k} exponents; decomposition beyond 6 needs octuple corrections")
    num = _type_numerator(z, beta)
    S = sum(beta)
    if k == 2:
        d = Decomposition(_merge_terms([(Fraction(1), ())], beta), beta)
    elif k == 3:
        # single bracket [S]; the lambda^1 coefficient fixes the sign convention
        d = Decomposition(_merge_terms([(Fraction(1), (S,))], beta), beta)
    elif k == 4:
        P = _first_order_target(num)
        if P != LaurentPoly({S - e: c for e, c in P.terms.items()}):
            raise DecompositionError(
                f"first-order coefficient not symmetric about {S}/2", residual=P)
        terms = []
        while not P.is_zero():
            t = _extreme_exponent(P)
            c = Fraction(P.terms[t])
            mult = 2 if t == S - t else 1
            terms.append((c / mult, tuple(sorted((t, S - t)))))
            delta = LaurentPoly.monomial(t, c / mult) + LaurentPoly.monomial(S - t, c / mult)
            P = P - delta
        d = Decomposition(_merge_terms(terms, beta), beta)
    else:
        P = _first_order_target(num)
        if P.is_zero():
            raise DecompositionError("vanishing first-order coefficient", residual=num)
        parity = _extreme_exponent(P) % 2
        cand = _candidates(P.support(), parity)
        size = k - 3  # partners per bracket beyond the peeled exponent
        base = None
        for max_terms in range(1, 9):
            base = _peel_search(P, S, size, cand, max_terms)
            if base is not None:
                break
        if base is None:
            raise DecompositionError("no bracket combination matches first order",
                                     residual=P)
        terms = list(base)
        if k == 6:
            achieved = LaurentPoly({})
            for c, exps in base:
                achieved = achieved + _pair_sum_poly(exps) * c
            R = _second_order(num) - achieved
            if not R.is_zero():
                corr_cand = sorted(set(cand) | set(_candidates(R.support(), parity)),
                                   reverse=True)
                corrs = None
                for max_corr in range(1, 4):
                    corrs = _correction_search(R, S, corr_cand, max_corr)
                    if corrs is not None:
                        break
                if corrs is None:
                    raise DecompositionError("no quadruple correction matches second order",
                                             residual=R)
                for dcoef, pu1, pu2, pv1, pv2 in corrs:
                    terms.append((dcoef, tuple(sorted(pu1 + pv1))))
                    terms.append((-dcoef, tuple(sorted(pu1 + pv2))))
                    terms.append((dcoef, tuple(sorted(pu2 + pv2))))
                    terms.append((-dcoef, tuple(sorted(pu2 + pv1))))
        d = Decomposition(_merge_terms(terms, beta), beta)
    check = expand(d)
    if check != z:
        raise DecompositionError("decomposition does not expand back to the input",
                                 residual=num)
    return d
