"""The Harer-Zagier transform and its factorisability machinery.

Z(K; lambda, q) = sum_N Hbar(q^N, q) lambda^N is rational in lambda: the
poles sit exactly at the A-support of Hbar, so the transform is built in
least terms directly.  Factorisation certificates, the proposition-style
sufficient conditions, the summation oracle and the inverse transform all
live here.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .braid import BraidWord
from .homfly import HomflyPoly, homfly
from .qring import APoly, LaurentPoly, RatFuncQ, qbracket, qint
from .rmatrix import racah_coeff, racah_table
from .young import YoungDiagram, partitions, schur_star


class HZError(ValueError):
    pass


# -- small helpers on polynomials in lambda with Laurent coefficients -------

def lam_mul_factor(coeffs, exp, sign=-1):
    """Multiply a lambda-polynomial by (1 + sign*lambda*q^exp)."""
    mono = LaurentPoly.monomial(exp, sign)
    out = list(coeffs) + [LaurentPoly.zero()]
    for k in range(len(coeffs), 0, -1):
        out[k] = out[k] + coeffs[k - 1] * mono
    return tuple(out)


def lam_div_factor(coeffs, exp, sign=-1):
    """Exact quotient by (1 + sign*lambda*q^exp), or None."""
    n = len(coeffs) - 1
    if n < 1:
        return None
    mono = LaurentPoly.monomial(exp, sign)
    out = [LaurentPoly.zero()] * n
    out[0] = coeffs[0]
    for k in range(1, n):
        out[k] = coeffs[k] - out[k - 1] * mono
    if coeffs[n] != out[n - 1] * mono:
        return None
    return tuple(out)


def lam_root_test(coeffs, exp, sign=-1):
    """True iff (1 + sign*lambda*q^exp) divides, i.e. the value at the root is 0.

    The root is lambda = -sign * q^-exp.
    """
    acc = LaurentPoly.zero()
    for k, c in enumerate(coeffs):
        acc = acc + c * LaurentPoly.monomial(-exp * k, (-sign) ** k)
    return acc.is_zero()


def _strip_tail(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class HZFunction:
    """Z = lambda * N(lambda) / prod_i (1 - lambda q^{beta_i}).

    `numerator` holds the coefficients of N; `den_exponents` is the sorted
    post-cancellation beta list.  For braid-derived transforms `strands`
    and `writhe` record the context and `cancelled` the exponents of the
    universal denominator prod(1 - lambda q^{-w-m+2i}) that cancelled.
    """

    numerator: tuple
    den_exponents: tuple
    strands: int | None = None
    writhe: int | None = None
    cancelled: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "numerator", _strip_tail(self.numerator))
        object.__setattr__(self, "den_exponents", tuple(sorted(self.den_exponents)))
        object.__setattr__(self, "cancelled", tuple(sorted(self.cancelled)))

    def __eq__(self, other):
        if not isinstance(other, HZFunction):
            return NotImplemented
        # cross-multiply over the merged denominator
        a = self.numerator
        for e in other.den_exponents:
            if e not in self.den_exponents:
                a = lam_mul_factor(a, e)
        b = other.numerator
        for e in self.den_exponents:
            if e not in other.den_exponents:
                b = lam_mul_factor(b, e)
        return _strip_tail(a) == _strip_tail(b)

    def __hash__(self):
        return hash((self.numerator, self.den_exponents))

    def series(self, terms):
        """Coefficients of lambda^0 .. lambda^terms of the expansion."""
        den = (LaurentPoly.one(),)
        for e in self.den_exponents:
            den = lam_mul_factor(den, e)
        shifted = (LaurentPoly.zero(),) + self.numerator  # lambda * N
        out = []
        for k in range(terms + 1):
            acc = shifted[k] if k < len(shifted) else LaurentPoly.zero()
            for j in range(1, min(k, len(den) - 1) + 1):
                acc = acc - den[j] * out[k - j]
            out.append(acc)
        return out

    def scale(self, factor):
        factor = factor if isinstance(factor, LaurentPoly) else LaurentPoly.const(factor)
        return HZFunction(tuple(c * factor for c in self.numerator), self.den_exponents,
                          self.strands, self.writhe, self.cancelled)

    def __add__(self, other):
        if not isinstance(other, HZFunction):
            return NotImplemented
        merged = sorted(set(self.den_exponents) | set(other.den_exponents))
        a = self.numerator
        for e in merged:
            if e not in self.den_exponents:
                a = lam_mul_factor(a, e)
        b = other.numerator
        for e in merged:
            if e not in other.den_exponents:
                b = lam_mul_factor(b, e)
        n = max(len(a), len(b))
        a = a + (LaurentPoly.zero(),) * (n - len(a))
        b = b + (LaurentPoly.zero(),) * (n - len(b))
        total = tuple(x + y for x, y in zip(a, b))
        strands = self.strands if self.strands == other.strands else None
        writhe = self.writhe if self.writhe == other.writhe else None
        return _cancel_poles(total, merged, strands, writhe)

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self):
        return all(c.is_zero() for c in self.numerator)

    def render(self):
        num = _render_lambda_product_or_poly(self.numerator)
        den = "".join(_render_factor(e) for e in self.den_exponents)
        return f"λ{num}/({den})" if den else f"λ{num}"

    def to_json(self):
        return {"beta": list(self.den_exponents),
                "numerator": [[k, c.to_json()] for k, c in enumerate(self.numerator)],
                "strands": self.strands, "writhe": self.writhe,
                "cancelled": list(self.cancelled)}


def _render_factor(e, sign=-1):
    s = "-" if sign < 0 else "+"
    if e == 0:
        return f"(1 {s} λ)"
    return f"(1 {s} q^{e} λ)"


def _render_lambda_product_or_poly(coeffs):
    cert = factorise_numerator(coeffs)
    if cert is not None:
        factors, (sgn, exp) = cert
        lead = "-" if sgn < 0 else ""
        if exp:
            lead += f"q^{exp}" + ("*" if factors else "")
        elif sgn < 0 and not factors:
            lead += "1"
        return lead + "".join(_render_factor(e, s) for s, e in factors)
    body = " + ".join(f"({c})λ^{k}" if k else f"({c})" for k, c in enumerate(coeffs) if not c.is_zero())
    return f"({body})"


def _cancel_poles(numerator, exponents, strands, writhe, cancelled=()):
    """Drop denominator factors whose pole the numerator also kills."""
    numerator = _strip_tail(numerator)
    exponents = list(exponents)
    cancelled = list(cancelled)
    changed = True
    while changed and len(numerator) > 1:
        changed = False
        for e in list(exponents):
            if lam_root_test(numerator, e):
                quotient = lam_div_factor(numerator, e)
                if quotient is not None:
                    numerator = _strip_tail(quotient)
                    exponents.remove(e)
                    cancelled.append(e)
                    changed = True
                    break
    return HZFunction(numerator, tuple(exponents), strands, writhe, tuple(cancelled))


# ---------------------------------------------------------------------------
# the transform
# ---------------------------------------------------------------------------

def hz_transform(hbar, strands=None, writhe=None) -> HZFunction:
    """HZ transform of an unnormalised HOMFLY-PT polynomial.

    Accepts a HomflyPoly or a bare APoly Hbar.  Geometric-series
    substitution q^{Nk} -> (1 - lambda q^k)^{-1}: the denominator is the
    A-support of Hbar and the numerator follows by partial fractions in
    reverse.  Numerator coefficients must come out Laurent.
    """
    if isinstance(hbar, HomflyPoly):
        strands, writhe = hbar.strands, hbar.writhe
        hbar = hbar.unnormalised
    if hbar.is_zero():
        raise HZError("zero polynomial has no HZ transform")
    supp = hbar.support()
    # numerator over the common denominator
    coeffs = [RatFuncQ(0)] * len(supp)
    for k in supp:
        fk = hbar.coeff(k)
        part = [RatFuncQ(0)] * len(supp)
        part[0] = fk
        deg = 0
        for j in supp:
            if j == k:
                continue
            mono = LaurentPoly.monomial(j, -1)
            for i in range(deg, -1, -1):
                part[i + 1] = part[i + 1] + part[i] * mono
            deg += 1
        for i in range(len(supp)):
            coeffs[i] = coeffs[i] + part[i]
    if coeffs[0]:
        raise HZError("Hbar(A=1) != 0: not an unnormalised link polynomial")
    laurent = []
    for c in coeffs[1:]:
        if not c.is_laurent():
            raise HZError(f"non-Laurent HZ numerator coefficient {c}")
        laurent.append(c.as_laurent())
    cancelled = ()
    if strands is not None and writhe is not None:
        full = {-writhe - strands + 2 * i for i in range(strands + 1)}
        if not set(supp) <= full:
            raise HZError(f"A-support {supp} outside the universal exponents {sorted(full)}")
        cancelled = tuple(sorted(full - set(supp)))
    return _cancel_poles(tuple(laurent), tuple(supp), strands, writhe, cancelled)


@cache
def hz_char(Q: YoungDiagram, w: int) -> HZFunction:
    """Z(S^_Q) for S^_Q = A^-w S_Q, in closed rational form."""
    hbar = schur_star(Q).unnorm_apoly().shift_A(-w)
    return hz_transform(hbar, strands=Q.size, writhe=w)


def hz_via_characters(b: BraidWord) -> HZFunction:
    """Z(K) = sum_Q h^Q Z(S^_Q); equals hz_transform(homfly(b)) exactly."""
    table = racah_table(b)
    total = None
    for Q, hq in table.items():
        if hq.is_zero():
            continue
        piece = hz_char(Q, b.writhe).scale(hq)
        total = piece if total is None else total + piece
    if total is None:
        raise HZError("empty character table")
    return total


def hz_summation_oracle(hbar, terms) -> list:
    """Partial sums sum_{N=0}^{terms} Hbar(q^N, q) lambda^N by substitution.

    Independent of the geometric-series route: each coefficient is a direct
    exact evaluation of Hbar at A = q^N.
    """
    if isinstance(hbar, HomflyPoly):
        hbar = hbar.unnormalised
    return [hbar.eval_at_qN(N) for N in range(terms + 1)]


def inverse_hz(z: HZFunction) -> APoly:
    """Reconstruct Hbar from Z by partial fractions.

    Works for any HZFunction with distinct denominator exponents:
    Hbar(q^N) = sum_i r_i q^{N beta_i} with residues evaluated at the poles.
    """
    beta = z.den_exponents
    if len(set(beta)) != len(beta):
        raise HZError(f"repeated denominator exponents {beta}: degenerate partial fractions")
    out = {}
    for bi in beta:
        num = LaurentPoly.zero()
        for k, c in enumerate(z.numerator):
            num = num + c * LaurentPoly.monomial(-bi * k)
        num = num * LaurentPoly.monomial(-bi)  # the global lambda
        den = LaurentPoly.one()
        for bj in beta:
            if bj != bi:
                den = den * (LaurentPoly.one() - LaurentPoly.monomial(bj - bi))
        out[bi] = RatFuncQ(num, den)
    return APoly(out)


# ---------------------------------------------------------------------------
# factorisation certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorCert:
    """Certificate that the HZ numerator splits into monomial factors.

    factors: ((sign, exp), ...) meaning prod (1 + sign * lambda q^exp);
    scale: (sign, exp) for the monomial front factor.  When not
    factorisable, `witness` holds the irreducible lambda-polynomial left
    after stripping every monomial root.
    """

    factorisable: bool
    factors: tuple = ()
    scale: tuple = (1, 0)
    witness: tuple = ()

    def alpha_exponents(self):
        return tuple(e for _, e in self.factors)

    def to_json(self):
        if self.factorisable:
            return {"factorisable": True, "scale": list(self.scale),
                    "factors": [[s, e] for s, e in self.factors]}
        return {"factorisable": False,
                "witness": [[k, c.to_json()] for k, c in enumerate(self.witness)]}


def _candidate_exponents(coeffs):
    """Integer exponents a for which (1 +- lambda q^a) could divide.

    Bounded by the first nonzero higher coefficient against the constant
    term: a monomial-factor exponent satisfies k*a within the q-degree
    span of c_k / c_0.
    """
    c0 = coeffs[0]
    if c0.is_zero():
        return ()
    for k in range(1, len(coeffs)):
        ck = coeffs[k]
        if not ck.is_zero():
            lo = (ck.min_exp() - c0.max_exp() + k - 1) // k
            hi = (ck.max_exp() - c0.min_exp()) // k
            return range(hi, lo - 1, -1)
    return ()


def _strip_monomial_root(coeffs):
    """Divide off one (1 +- lambda q^a) factor if any; (sign, a, quotient) or None."""
    for a in _candidate_exponents(coeffs):
        for sign in (-1, 1):
            if lam_root_test(coeffs, a, sign):
                quotient = lam_div_factor(coeffs, a, sign)
                if quotient is not None:
                    return sign, a, _strip_tail(quotient)
    return None


def factorise_numerator(coeffs):
    """Split a lambda-polynomial into monomial factors, or None.

    Returns (factors, scale) with factors a tuple of (sign, exp) pairs and
    scale a (sign, exp) monomial, or None when the polynomial has a
    non-monomial irreducible part.
    """
    coeffs = _strip_tail(coeffs)
    factors = []
    while len(coeffs) > 1:
        hit = _strip_monomial_root(coeffs)
        if hit is None:
            return None
        sign, a, coeffs = hit
        factors.append((sign, a))
    const = coeffs[0]
    if len(const.terms) != 1:
        return None
    ((exp, coeff),) = const.terms.items()
    if coeff not in (1, -1):
        return None
    factors.sort(key=lambda f: (-f[1], f[0]))
    return tuple(factors), (coeff, exp)


def factorise(z: HZFunction) -> FactorCert:
    """Certify or refute factorisability of the HZ numerator."""
    split = factorise_numerator(z.numerator)
    if split is not None:
        factors, scale = split
        return FactorCert(True, factors=factors, scale=scale)
    # strip whatever monomial roots do exist so the witness is the
    # irreducible remainder
    coeffs = _strip_tail(z.numerator)
    while len(coeffs) > 1:
        hit = _strip_monomial_root(coeffs)
        if hit is None:
            break
        coeffs = hit[2]
    return FactorCert(False, witness=coeffs)


# ---------------------------------------------------------------------------
# proposition-style sufficient conditions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the strand-specific HZ-factorisability conditions."""

    strands: int
    writhe: int
    conditions: tuple          # ((name, bool), ...)
    gammas: tuple = ()
    predicted_alpha: tuple = ()
    cert: FactorCert = None
    agrees: bool = True

    @property
    def satisfied(self):
        return all(ok for _, ok in self.conditions)

    def to_json(self):
        return {"strands": self.strands, "writhe": self.writhe,
                "conditions": {k: v for k, v in self.conditions},
                "gammas": list(self.gammas),
                "predicted_alpha": [list(p) for p in self.predicted_alpha],
                "factorisable": self.cert.factorisable if self.cert else None,
                "agrees": self.agrees}


def _plus_monomials(p, count):
    """Exponents if p = q^{e_1} + ... + q^{e_count} (with multiplicity), else None."""
    exps = []
    for e, c in sorted(p.terms.items(), reverse=True):
        if not isinstance(c, int) or c < 1:
            return None
        exps.extend([e] * c)
    if len(exps) != count:
        return None
    return tuple(exps)


def check_fact_conditions(b: BraidWord) -> ConditionReport:
    """Evaluate the sufficient factorisability conditions on the Racah data.

    Sufficient but not necessary: a violating braid whose HZ still
    factorises (the L10n42{1} phenomenon) is reported with agrees=False
    on the violated-implies-nonfactorisable direction left to the caller;
    `agrees` records satisfied => certificate match only.
    """
    m, w = b.strands, b.writhe
    if m == 3:
        h21 = racah_coeff(b, YoungDiagram((2, 1)))
        if w % 2 == 0:
            P = -(qint(2) * h21)
            exps = _plus_monomials(P, 2)
            ok = exps is not None and exps[0] == -exps[1] and exps[0] % 2 == 1
            conditions = (("h[21] of -(q^d+q^-d)/[2]_q shape with d odd", bool(ok)),)
            gammas = exps if ok else ()
            predicted = tuple((-1, e - 2 * w) for e in exps) if ok else ()
        else:
            # even-component link: one factor flips sign, (1 - lq^a)(1 + lq^b)
            P = qint(2) * h21
            terms = sorted(P.terms.items())
            ok = (len(terms) == 2 and sorted(c for _, c in terms) == [-1, 1]
                  and sum(e for e, _ in terms) == 0)
            conditions = (("h[21] of (q^b - q^a)/[2]_q shape for an even-component link", bool(ok)),)
            gammas = tuple(e for e, _ in terms) if ok else ()
            predicted = ()
            if ok:
                plus = next(e for e, c in terms if c == 1)
                minus = next(e for e, c in terms if c == -1)
                predicted = ((1, plus - 2 * w), (-1, minus - 2 * w))
    elif m == 4:
        h22 = racah_coeff(b, YoungDiagram((2, 2)))
        h31 = racah_coeff(b, YoungDiagram((3, 1)))
        G = -(qint(3) * h31)
        exps = _plus_monomials(G, 3)
        ok31 = exps is not None and all(e % 2 == 1 for e in exps) and sum(exps) == w
        conditions = (("h[22] = 0", h22.is_zero()),
                      ("h[31] of -(sum of 3 odd q-powers)/[3]_q shape with sum w", bool(ok31)))
        gammas = exps if ok31 else ()
        predicted = tuple((-1, e - 2 * w) for e in exps) if ok31 and h22.is_zero() else ()
    elif m == 5:
        h32 = racah_coeff(b, YoungDiagram((3, 2)))
        h41 = racah_coeff(b, YoungDiagram((4, 1)))
        h311 = racah_coeff(b, YoungDiagram((3, 1, 1)))
        G = -(qint(2) * LaurentPoly({2: 1, -2: 1}) * h41)
        exps = _plus_monomials(G, 4)
        ok41 = exps is not None and all(e % 2 == 1 for e in exps) and sum(exps) == 2 * w
        ok311 = False
        if ok41:
            target = LaurentPoly.zero()
            for i in range(4):
                for j in range(i + 1, 4):
                    target = target + LaurentPoly.monomial(exps[i] + exps[j] - w)
            ok311 = h311 * LaurentPoly({2: 1, -2: 1}) * qint(3) == target
        conditions = (("h[32] = 0", h32.is_zero()),
                      ("h[41] of -(sum of 4 odd q-powers)/((q^2+q^-2)(q+q^-1)) shape with sum 2w", bool(ok41)),
                      ("h[311] matches the pair-sum formula", bool(ok311)))
        gammas = exps if ok41 else ()
        predicted = tuple((-1, e - 2 * w) for e in exps) if ok41 and h32.is_zero() and ok311 else ()
    else:
        raise HZError(f"factorisability conditions are stated for 3..5 strands, not {m}")

    z = hz_via_characters(b)
    cert = factorise(z)
    agrees = True
    if all(ok for _, ok in conditions):
        agrees = cert.factorisable and _alpha_match(predicted, cert, z)
    return ConditionReport(m, w, conditions, gammas, predicted, cert, agrees)


def _alpha_match(predicted, cert, z):
    """Predicted (sign, exp) factors match the certificate, allowing for
    factors that cancelled against the denominator."""
    remaining = list(cert.factors)
    for sa in predicted:
        if sa in remaining:
            remaining.remove(sa)
        elif sa[0] == -1 and sa[1] in z.cancelled:
            continue
        else:
            return False
    return not remaining


# convenience wrapper matching the character-expansion pipeline

def hz_of_braid(b: BraidWord) -> HZFunction:
    return hz_transform(homfly(b))
