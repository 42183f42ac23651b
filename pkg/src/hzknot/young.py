"""Young diagrams with up to six boxes and their quantum Schur functions.

Boxes are indexed (i, j) with i the column and j the row, (1,1) top-left.
The Schur value for a diagram Q is kept as a product of quantum brackets
(numerator factors {A q^{i-j}}, denominator factors {q^{hook}}), which
specialises exactly and keeps the A -> 1 limit symbolic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .qring import APoly, LaurentPoly, RatFuncQ, qbracket

MAX_BOXES = 6


class YoungError(ValueError):
    pass


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.rows or any(r < 1 for r in self.rows):
            raise YoungError(f"invalid row lengths {self.rows}")
        if any(self.rows[i] < self.rows[i + 1] for i in range(len(self.rows) - 1)):
            raise YoungError(f"rows must be weakly decreasing, got {self.rows}")

    @property
    def size(self):
        return sum(self.rows)

    @property
    def row_count(self):
        return len(self.rows)

    def transpose(self):
        cols = [sum(1 for r in self.rows if r >= i + 1) for i in range(self.rows[0])]
        return YoungDiagram(tuple(cols))

    def is_hook(self):
        """At most one row longer than 1 box."""
        return all(r <= 1 for r in self.rows[1:])

    def boxes(self):
        """(column i, row j) pairs, 1-indexed."""
        return [(i, j) for j, r in enumerate(self.rows, start=1) for i in range(1, r + 1)]

    def hook_lengths(self):
        """Map box (i, j) -> hook length (arm + leg + 1)."""
        cols = self.transpose().rows
        out = {}
        for i, j in self.boxes():
            arm = self.rows[j - 1] - i
            leg = cols[i - 1] - j
            out[(i, j)] = arm + leg + 1
        return out

    def __str__(self):
        return "[" + ",".join(str(r) for r in self.rows) + "]"

    def __repr__(self):
        return f"YoungDiagram({self})"

    @classmethod
    def parse(cls, text):
        body = text.strip().strip("[]")
        return cls(tuple(int(x) for x in body.split(",") if x))


@cache
def partitions(m):
    """All Young diagrams with m boxes, in reverse-lexicographic order."""
    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(YoungDiagram(p) for p in gen(m, m))


def hook_diagrams(m):
    """The hook-shaped diagrams [m-r+1, 1^(r-1)] for r = 1..m."""
    return tuple(YoungDiagram((m - r + 1,) + (1,) * (r - 1)) for r in range(1, m + 1))


def weyl_dim(Q: YoungDiagram, N: int) -> Fraction:
    """Classical Weyl dimension prod (N + i - j)/h_{i,j}."""
    hooks = Q.hook_lengths()
    out = Fraction(1)
    for (i, j), h in hooks.items():
        out *= Fraction(N + i - j, h)
    return out


@dataclass(frozen=True)
class SchurFn:
    """S_Q as an exact product of brackets.

    S_Q = prod {A q^d} / prod {q^h} over the boxes, with d = i - j; the
    normalised S*_Q = ({q}/{A}) S_Q trades the (1,1) box's {A} for {q}.
    """

    diagram: YoungDiagram
    shifts: tuple[int, ...]   # i - j per box, sorted descending
    hooks: tuple[int, ...]    # hook lengths, sorted descending

    # -- exact specialisations --------------------------------------------
    def star_at_qN(self, N: int):
        """S*_Q at A = q^N, exactly.

        S*_Q = {q} prod_{boxes != (1,1)} {q^{N+d}} / prod {q^h}; a vanishing
        numerator bracket kills the product (denominator brackets never
        vanish), which is exactly the two-row/hook selection rule.  Returns
        a LaurentPoly when the quotient is polynomial (always for N >= the
        box count), otherwise the reduced RatFuncQ: single characters at
        small N may be genuinely rational even though character sums are
        polynomial.
        """
        shifts = list(self.shifts)
        shifts.remove(0)  # the (1,1) box
        num = qbracket(1)
        for d in shifts:
            f = qbracket(N + d)
            if f.is_zero():
                return LaurentPoly.zero()
            num = num * f
        den = LaurentPoly.one()
        for h in self.hooks:
            den = den * qbracket(h)
        out = num.exact_div(den)
        if out is None:
            return RatFuncQ(num, den)
        return out

    def star_at_A1(self) -> RatFuncQ:
        """Limit of S*_Q as A -> 1: zero unless Q is a hook.

        For the hook with r rows the value is (-1)^(r+1) {q}/{q^m}.
        """
        Q = self.diagram
        if not Q.is_hook():
            return RatFuncQ(0)
        sign = 1 if Q.row_count % 2 == 1 else -1
        return RatFuncQ(LaurentPoly.const(sign) * qbracket(1), qbracket(Q.size))

    def star_apoly(self) -> APoly:
        """S*_Q expanded as a polynomial in A with rational-in-q coefficients."""
        shifts = list(self.shifts)
        shifts.remove(0)
        out = APoly({0: qbracket(1)})
        for d in shifts:
            out = out * APoly.bracket_A(d)
        den = LaurentPoly.one()
        for h in self.hooks:
            den = den * qbracket(h)
        inv = RatFuncQ(LaurentPoly.one(), den)
        return out * inv

    def unnorm_apoly(self) -> APoly:
        """S_Q = prod {A q^d} / prod {q^h} expanded in A."""
        out = APoly({0: LaurentPoly.one()})
        for d in self.shifts:
            out = out * APoly.bracket_A(d)
        den = LaurentPoly.one()
        for h in self.hooks:
            den = den * qbracket(h)
        return out * RatFuncQ(LaurentPoly.one(), den)


@cache
def schur_star(Q: YoungDiagram) -> SchurFn:
    """Bracket-product form of the (normalised) Schur function of Q."""
    if not 1 <= Q.size <= MAX_BOXES:
        raise YoungError(f"only diagrams with 1..{MAX_BOXES} boxes are supported, got {Q}")
    shifts = tuple(sorted((i - j for i, j in Q.boxes()), reverse=True))
    hooks = tuple(sorted(Q.hook_lengths().values(), reverse=True))
    return SchurFn(Q, shifts, hooks)


def schur_at_A(Q: YoungDiagram, spec):
    """Specialise S*_Q.

    spec is an integer N (meaning A = q^N, exact Laurent result) or the
    string "A=1" (symbolic limit, a RatFuncQ: zero for non-hooks).
    """
    fn = schur_star(Q)
    if spec == "A=1" or spec == 0:
        # A = q^0 needs the symbolic limit: hooks give +-{q}/{q^m}
        return fn.star_at_A1()
    if isinstance(spec, int):
        return fn.star_at_qN(spec)
    raise YoungError(f"unsupported specialisation {spec!r}")
