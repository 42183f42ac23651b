"""HOMFLY-PT polynomials from the character expansion, plus the Jones and
Alexander specialisations.

Conventions: variables (A, q) with A = q^N; relative to standard (a, z)
tables a = A^-1 and z = q - q^-1.  The normalised polynomial satisfies
H(unknot) = 1 and H = ({q}/{A}) Hbar.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .braid import BraidWord
from .qring import APoly, LaurentPoly, RatFuncQ, qbracket
from .rmatrix import racah_coeff, racah_table
from .young import YoungDiagram, hook_diagrams, schur_star

MAX_STRANDS = 5


class HomflyError(ValueError):
    pass


@dataclass(frozen=True)
class HomflyPoly:
    """A knot/link invariant in the (A, q) variables.

    `normalised` is H (H(unknot) = 1); `unnormalised` is Hbar = ({A}/{q}) H.
    For knots the normalised coefficients are Laurent in q, asserted at
    construction time.
    """

    strands: int
    writhe: int
    normalised: APoly
    unnormalised: APoly
    racah: dict = field(default=None, compare=False, repr=False)

    def eval_at_qN(self, N):
        """H at A = q^N, exact."""
        return self.normalised.eval_at_qN(N)

    def mirror_image(self):
        return HomflyPoly(self.strands, -self.writhe,
                          self.normalised.subs_mirror(),
                          self.unnormalised.subs_mirror())

    def to_json(self):
        return {"strands": self.strands, "writhe": self.writhe,
                "H": self.normalised.to_json(), "Hbar": self.unnormalised.to_json()}


def _unnormalise(h: APoly) -> APoly:
    """Hbar = ({A}/{q}) H."""
    bracket = APoly({1: RatFuncQ(LaurentPoly.one(), qbracket(1)),
                     -1: RatFuncQ(LaurentPoly.const(-1), qbracket(1))})
    return h * bracket


def homfly(b: BraidWord) -> HomflyPoly:
    """H = A^-w sum_Q h^Q S*_Q over the diagrams with |Q| = strand count."""
    if b.strands > MAX_STRANDS:
        raise HomflyError(f"braids on more than {MAX_STRANDS} strands are unsupported")
    table = racah_table(b)
    total = APoly.zero()
    for Q, hq in table.items():
        if hq.is_zero():
            continue
        total = total + schur_star(Q).star_apoly() * hq
    h = total.shift_A(-b.writhe)
    if b.is_knot() and not h.is_laurent():
        raise HomflyError("normalised HOMFLY of a knot must be Laurent in A and q")
    return HomflyPoly(b.strands, b.writhe, h, _unnormalise(h), racah=table)


def jones(b: BraidWord) -> LaurentPoly:
    """Jones polynomial J(q^2), i.e. H at A = q^2, normalised to J(unknot) = 1.

    Only the two-row diagrams survive the substitution; the division by
    {q^2} is exact on the total even though single characters need not be.
    """
    if b.strands > MAX_STRANDS:
        raise HomflyError(f"braids on more than {MAX_STRANDS} strands are unsupported")
    m, w = b.strands, b.writhe
    total = LaurentPoly.zero()
    for i in range(m // 2 + 1):
        Q = YoungDiagram((m - i, i) if i else (m,))
        total = total + racah_coeff(b, Q) * qbracket(m + 1 - 2 * i)
    out = total.exact_div(qbracket(2))
    if out is None:
        raise HomflyError("Jones character sum not divisible by {q^2}")
    return out.shift(-2 * w)


def alexander(b: BraidWord) -> LaurentPoly:
    """Alexander polynomial Delta(q^2) from the hook-diagram expansion.

    Defined for knots only; normalised so Delta(1) = +-1 and symmetric
    under q -> q^-1.
    """
    if b.strands > MAX_STRANDS:
        raise HomflyError(f"braids on more than {MAX_STRANDS} strands are unsupported")
    if not b.is_knot():
        raise HomflyError("the single-variable Alexander polynomial needs a knot closure")
    m = b.strands
    total = LaurentPoly.zero()
    for Q in hook_diagrams(m):
        sign = 1 if Q.row_count % 2 == 1 else -1
        total = total + racah_coeff(b, Q) * sign
    out = total.exact_div(LaurentPoly({m - 1 - 2 * i: 1 for i in range(m)}))
    if out is None:
        raise HomflyError("Alexander character sum not divisible by [m]_q")
    return out


def racah_from_jones(J: LaurentPoly, w: int) -> LaurentPoly:
    """Recover h^[21] of a 3-strand braid from its Jones polynomial.

    h^[21] = q^{2w} J(q^2) - q^w (q^2 + q^-2); round-trips with the trace.
    """
    return J.shift(2 * w) - LaurentPoly({w + 2: 1, w - 2: 1})


def specialisation_checks(h: HomflyPoly, b: BraidWord):
    """Exact cross-checks: Jones = H|_{A=q^2}, Alexander = A -> 1 limit."""
    j = jones(b)
    if h.eval_at_qN(2) != j:
        raise HomflyError("Jones expansion disagrees with A = q^2 specialisation")
    if b.is_knot():
        # A -> 1 through the character limit
        limit = RatFuncQ(0)
        for Q, hq in (h.racah or racah_table(b)).items():
            limit = limit + RatFuncQ(hq) * schur_star(Q).star_at_A1()
        if limit != RatFuncQ(alexander(b)):
            raise HomflyError("Alexander expansion disagrees with A -> 1 limit")
    return True


def unlink_homfly(m: int) -> APoly:
    """Hbar of the m-component unlink, ({A}/{q})^m."""
    one = APoly({0: LaurentPoly.one()})
    bracket = APoly({1: RatFuncQ(LaurentPoly.one(), qbracket(1)),
                     -1: RatFuncQ(LaurentPoly.const(-1), qbracket(1))})
    out = one
    for _ in range(m):
        out = out * bracket
    return out
