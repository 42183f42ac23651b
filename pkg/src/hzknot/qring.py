"""Exact arithmetic in the quantum parameter q.

Laurent polynomials over arbitrary-precision rationals, their fraction
field, quantum integers/brackets, Laurent polynomials in A = q^N, and the
radical extension ring Q(q)[r2,r3,r4] with r_n^2 = [n-1]_q [n+1]_q that
hosts Racah-matrix entries.  No floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd


def _norm_coeff(c):
    """Collapse integral Fractions to int; reject floats."""
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class LaurentPoly:
    """Laurent polynomial in q with rational coefficients, canonical form.

    Stored as a mapping exponent -> nonzero coefficient; the zero polynomial
    is the empty mapping.  Immutable by convention.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        d = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = _norm_coeff(c)
                if c:
                    nc = d.get(e, 0) + c
                    if nc:
                        d[e] = _norm_coeff(nc) if isinstance(nc, Fraction) else nc
                    else:
                        d.pop(e, None)
        self.terms = d
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def monomial(cls, exp, coeff=1):
        p = cls.__new__(cls)
        c = _norm_coeff(coeff)
        p.terms = {exp: c} if c else {}
        p._hash = None
        return p

    @classmethod
    def const(cls, coeff):
        return cls.monomial(0, coeff)

    # -- basic queries -------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {0: 1}

    def min_exp(self):
        return min(self.terms)

    def max_exp(self):
        return max(self.terms)

    def coeff(self, e):
        return self.terms.get(e, 0)

    def support(self):
        return sorted(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    # -- ring operations -----------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d = dict(self.terms)
        for e, c in other.terms.items():
            nc = d.get(e, 0) + c
            if nc:
                d[e] = nc
            else:
                d.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = d
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: -c for e, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _norm_coeff(other)
            if not c:
                return _ZERO
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = {e: _norm_coeff(v * c) for e, v in self.terms.items()}
            out._hash = None
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return _ZERO
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        d = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                nc = d.get(e, 0) + c1 * c2
                if nc:
                    d[e] = nc
                else:
                    d.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: _norm_coeff(c) if isinstance(c, Fraction) else c for e, c in d.items()}
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial is not polynomial")
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- substitutions ---------------------------------------------------
    def shift(self, k):
        """Multiply by q^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e + k: c for e, c in self.terms.items()}
        out._hash = None
        return out

    def subs_inv(self):
        """q -> q^-1."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {-e: c for e, c in self.terms.items()}
        out._hash = None
        return out

    def subs_mirror(self):
        """q -> -q^-1 (transposed-diagram involution)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {-e: (c if e % 2 == 0 else -c) for e, c in self.terms.items()}
        out._hash = None
        return out

    def subs_monomial(self, sign, k):
        """q -> sign * q^k with sign in {1,-1} and integer k."""
        d = {}
        for e, c in self.terms.items():
            if sign < 0 and e % 2:
                c = -c
            ne = e * k
            nc = d.get(ne, 0) + c
            if nc:
                d[ne] = nc
            else:
                d.pop(ne, None)
        return LaurentPoly(d)

    def eval_at_one(self):
        """Value at q = 1."""
        return sum(self.terms.values())

    # -- division ---------------------------------------------------------
    def exact_div(self, other):
        """Exact quotient self/other, or None if the division is not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return _ZERO
        rem = dict(self.terms)
        out = {}
        d_hi = other.max_exp()
        d_lead = other.terms[d_hi]
        o_items = list(other.terms.items())
        lo_bound = self.min_exp() - other.min_exp()
        while rem:
            hi = max(rem)
            qexp = hi - d_hi
            if qexp < lo_bound:
                return None
            qc = _norm_coeff(Fraction(rem[hi]) / d_lead)
            out[qexp] = qc
            for e, c in o_items:
                ne = e + qexp
                nc = rem.get(ne, 0) - qc * c
                if nc:
                    rem[ne] = nc
                else:
                    rem.pop(ne, None)
        return LaurentPoly(out)

    def divides(self, other):
        return other.exact_div(self) is not None

    def content(self):
        """Positive rational content (gcd of coefficients)."""
        num = 0
        den = 1
        for c in self.terms.values():
            f = Fraction(c)
            num = int_gcd(num, abs(f.numerator))
            den = den * f.denominator // int_gcd(den, f.denominator)
        return Fraction(num, den) if num else Fraction(0)

    # -- rendering ----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = str(c)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if c == 1 else f"{c}{var}" if isinstance(c, int) else f"{c}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self):
        """Sorted [exponent, numerator-string, denominator-string] triples."""
        out = []
        for e in sorted(self.terms):
            f = Fraction(self.terms[e])
            out.append([e, str(f.numerator), str(f.denominator)])
        return out

    @classmethod
    def from_json(cls, data):
        return cls({int(e): Fraction(int(n), int(d)) for e, n, d in data})


_ZERO = LaurentPoly.__new__(LaurentPoly)
_ZERO.terms = {}
_ZERO._hash = None
_ONE = LaurentPoly.__new__(LaurentPoly)
_ONE.terms = {0: 1}
_ONE._hash = None


_TERM_RE = None


def parse_laurent(text):
    """Parse the canonical text rendering back into a LaurentPoly."""
    import re
    global _TERM_RE
    if _TERM_RE is None:
        _TERM_RE = re.compile(
            r"([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(q(?:\^(-?\d+))?)?")
    text = text.replace("−", "-").strip()
    if not text or text == "0":
        return LaurentPoly.zero()
    terms = []
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"unparseable polynomial text {text!r} at {pos}")
        sign_s, coeff_s, qpart, exp_s = m.groups()
        sign = -1 if sign_s == "-" else 1
        coeff = Fraction(coeff_s) if coeff_s else Fraction(1)
        if qpart:
            exp = int(exp_s) if exp_s is not None else 1
        elif coeff_s:
            exp = 0
        else:
            raise ValueError(f"unparseable polynomial text {text!r} at {pos}")
        terms.append((exp, sign * coeff))
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return LaurentPoly(terms)


# ---------------------------------------------------------------------------
# quantum integers and brackets
# ---------------------------------------------------------------------------

def qint(n):
    """Quantum integer [n]_q = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial."""
    if n == 0:
        return LaurentPoly.zero()
    if n < 0:
        return -qint(-n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


def qbracket(k):
    """Quantum bracket {q^k} = q^k - q^-k."""
    if k == 0:
        return LaurentPoly.zero()
    return LaurentPoly({k: 1, -k: -1})


def mirror_q(p):
    """Substitute q -> -q^-1; involutive."""
    return p.subs_mirror()


# ---------------------------------------------------------------------------
# gcd over the Laurent ring
# ---------------------------------------------------------------------------

def _to_int_poly(p):
    """Shift a LaurentPoly to an ordinary primitive integer coefficient list."""
    lo = p.min_exp()
    deg = p.max_exp() - lo
    den = 1
    for c in p.terms.values():
        d = Fraction(c).denominator
        den = den * d // int_gcd(den, d)
    coeffs = [0] * (deg + 1)
    for e, c in p.terms.items():
        f = Fraction(c) * den
        coeffs[e - lo] = int(f)
    g = 0
    for c in coeffs:
        g = int_gcd(g, abs(c))
    if g > 1:
        coeffs = [c // g for c in coeffs]
    return coeffs


def _strip(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def _primitive(v):
    g = 0
    for c in v:
        g = int_gcd(g, abs(c))
    if g > 1:
        v = [c // g for c in v]
    return v


def _pseudo_rem(a, b):
    """Pseudo-remainder of integer coefficient lists (ascending order)."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    _strip(r)
    while r and len(r) - 1 >= db:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [lead * c for c in r]
        for i, c in enumerate(b):
            r[shift + i] -= top * c
        _strip(r)
    return r


def _int_poly_gcd(a, b):
    """Primitive gcd of integer coefficient lists via the primitive PRS."""
    a, b = _primitive(_strip(list(a))), _primitive(_strip(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def laurent_gcd(a, b):
    """Canonical gcd over the Laurent ring.

    Returned with minimal exponent 0, primitive integer coefficients and
    positive leading coefficient; units (monomials) collapse to 1.
    """
    if a.is_zero():
        return _canonical_assoc(b)
    if b.is_zero():
        return _canonical_assoc(a)
    g = _int_poly_gcd(_to_int_poly(a), _to_int_poly(b))
    return LaurentPoly({i: c for i, c in enumerate(g)})


def _canonical_assoc(p):
    """Canonical associate: min exponent 0, primitive, positive leading coeff."""
    if p.is_zero():
        return p
    coeffs = _to_int_poly(p)
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return LaurentPoly({i: c for i, c in enumerate(coeffs)})


# ---------------------------------------------------------------------------
# fraction field
# ---------------------------------------------------------------------------

class RatFuncQ:
    """Rational function in q, stored reduced.

    Canonical form: gcd(num, den) is a unit, den has minimal exponent 0 and
    positive leading (highest-degree) rational coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = LaurentPoly.const(num)
        if den is None:
            den = LaurentPoly.one()
        elif isinstance(den, (int, Fraction)):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = self._reduce(num, den)

    @staticmethod
    def _reduce(num, den):
        if num.is_zero():
            return num, LaurentPoly.one()
        g = laurent_gcd(num, den)
        if not g.is_one():
            num = num.exact_div(g)
            den = den.exact_div(g)
        # normalise the denominator to a canonical associate
        lo = den.min_exp()
        lead = den.terms[den.max_exp()]
        num = num.shift(-lo)
        den = den.shift(-lo)
        if lead != 1:
            inv = Fraction(1) / Fraction(lead)
            num = num * inv
            den = den * inv
        return num, den

    @classmethod
    def from_laurent(cls, p):
        return cls(p)

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return self.den.is_one()

    def as_laurent(self):
        if not self.den.is_one():
            raise ValueError(f"not a Laurent polynomial: ({self.num})/({self.den})")
        return self.num

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFuncQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RatFuncQ.__new__(RatFuncQ)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFuncQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFuncQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def subs_inv(self):
        return RatFuncQ(self.num.subs_inv(), self.den.subs_inv())

    def subs_mirror(self):
        return RatFuncQ(self.num.subs_mirror(), self.den.subs_mirror())

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFuncQ({self})"


def _as_ratfunc(x):
    if isinstance(x, RatFuncQ):
        return x
    if isinstance(x, LaurentPoly):
        return RatFuncQ(x)
    if isinstance(x, (int, Fraction)):
        return RatFuncQ(LaurentPoly.const(x))
    return NotImplemented


# ---------------------------------------------------------------------------
# radical extension ring
# ---------------------------------------------------------------------------

def radical_square(n):
    """r_n^2 = [n-1]_q [n+1]_q."""
    return qint(n - 1) * qint(n + 1)


class ExtScalar:
    """Element of Q(q)[r2, r3, r4] with r_n^2 = [n-1]_q [n+1]_q.

    Components are keyed by the radical monomial, a frozenset of indices n;
    the empty set is the radical-free part.
    """

    __slots__ = ("comps",)

    def __init__(self, comps=None):
        d = {}
        if comps:
            for key, val in (comps.items() if isinstance(comps, dict) else comps):
                key = frozenset(key)
                if not key <= {2, 3, 4}:
                    raise ValueError(f"unsupported radical monomial {set(key)}")
                val = val if isinstance(val, RatFuncQ) else _as_ratfunc(val)
                if val:
                    cur = d.get(key)
                    val = val if cur is None else cur + val
                    if val:
                        d[key] = val
                    else:
                        d.pop(key, None)
        self.comps = d

    @classmethod
    def from_scalar(cls, x):
        return cls({frozenset(): _as_ratfunc(x)})

    @classmethod
    def radical(cls, n, coeff=1):
        return cls({frozenset({n}): _as_ratfunc(coeff)})

    def is_zero(self):
        return not self.comps

    def is_radical_free(self):
        return set(self.comps) <= {frozenset()}

    def scalar_part(self):
        return self.comps.get(frozenset(), RatFuncQ(0))

    def as_scalar(self):
        if not self.is_radical_free():
            raise ValueError(f"nonzero radical components: {self}")
        return self.scalar_part()

    def __eq__(self, other):
        if isinstance(other, ExtScalar):
            return self.comps == other.comps
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.comps == ExtScalar({frozenset(): other}).comps

    def __hash__(self):
        return hash(tuple(sorted(self.comps.items(), key=lambda kv: sorted(kv[0]))))

    def __add__(self, other):
        if not isinstance(other, ExtScalar):
            other = ExtScalar.from_scalar(other)
        d = dict(self.comps)
        for k, v in other.comps.items():
            cur = d.get(k)
            nv = v if cur is None else cur + v
            if nv:
                d[k] = nv
            else:
                d.pop(k, None)
        out = ExtScalar.__new__(ExtScalar)
        out.comps = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = ExtScalar.__new__(ExtScalar)
        out.comps = {k: -v for k, v in self.comps.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, ExtScalar):
            other = ExtScalar.from_scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ExtScalar):
            other = ExtScalar.from_scalar(other)
        d = {}
        for k1, v1 in self.comps.items():
            for k2, v2 in other.comps.items():
                key = k1 ^ k2
                val = v1 * v2
                for n in k1 & k2:
                    val = val * radical_square(n)
                cur = d.get(key)
                val = val if cur is None else cur + val
                if val:
                    d[key] = val
                else:
                    d.pop(key, None)
        out = ExtScalar.__new__(ExtScalar)
        out.comps = d
        return out

    __rmul__ = __mul__

    def __str__(self):
        if not self.comps:
            return "0"
        parts = []
        for key in sorted(self.comps, key=sorted):
            rad = "*".join(f"r{n}" for n in sorted(key))
            val = self.comps[key]
            parts.append(f"({val})" + (f"*{rad}" if rad else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"ExtScalar({self})"


def ext_mul(a, b):
    """Product in the radical extension ring (every r_n^2 rewritten)."""
    return a * b


# ---------------------------------------------------------------------------
# Laurent polynomials in A with coefficients in Q(q)
# ---------------------------------------------------------------------------

class APoly:
    """Laurent polynomial in A = q^N whose coefficients are rational in q.

    The HOMFLY-PT polynomial and its unnormalised variant live here; for
    knots the normalised coefficients are genuine Laurent polynomials.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for k, v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                v = v if isinstance(v, RatFuncQ) else _as_ratfunc(v)
                if v:
                    cur = d.get(k)
                    v = v if cur is None else cur + v
                    if v:
                        d[k] = v
                    else:
                        d.pop(k, None)
        self.coeffs = d

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, aexp, coeff=1):
        return cls({aexp: coeff})

    @classmethod
    def bracket_A(cls, k):
        """{A q^k} = A q^k - A^-1 q^-k."""
        return cls({1: LaurentPoly.monomial(k), -1: LaurentPoly.monomial(-k, -1)})

    def is_zero(self):
        return not self.coeffs

    def support(self):
        return sorted(self.coeffs)

    def coeff(self, k):
        return self.coeffs.get(k, RatFuncQ(0))

    def __eq__(self, other):
        if not isinstance(other, APoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted((k, v) for k, v in self.coeffs.items())))

    def __add__(self, other):
        if not isinstance(other, APoly):
            return NotImplemented
        d = dict(self.coeffs)
        for k, v in other.coeffs.items():
            cur = d.get(k)
            nv = v if cur is None else cur + v
            if nv:
                d[k] = nv
            else:
                d.pop(k, None)
        out = APoly.__new__(APoly)
        out.coeffs = d
        return out

    def __neg__(self):
        out = APoly.__new__(APoly)
        out.coeffs = {k: -v for k, v in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly, RatFuncQ)):
            s = _as_ratfunc(other)
            if not s:
                return APoly.zero()
            out = APoly.__new__(APoly)
            out.coeffs = {k: v * s for k, v in self.coeffs.items()}
            return out
        if not isinstance(other, APoly):
            return NotImplemented
        d = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                v = v1 * v2
                cur = d.get(k)
                v = v if cur is None else cur + v
                if v:
                    d[k] = v
                else:
                    d.pop(k, None)
        out = APoly.__new__(APoly)
        out.coeffs = d
        return out

    __rmul__ = __mul__

    def shift_A(self, k):
        """Multiply by A^k."""
        out = APoly.__new__(APoly)
        out.coeffs = {e + k: v for e, v in self.coeffs.items()}
        return out

    def eval_at_qN(self, N):
        """Exact substitution A -> q^N; the result must be Laurent."""
        total = RatFuncQ(0)
        for k, v in self.coeffs.items():
            total = total + v * LaurentPoly.monomial(N * k)
        return total.as_laurent()

    def subs_mirror(self):
        """(A, q) -> (A^-1, q^-1), the mirror-image transform."""
        out = APoly.__new__(APoly)
        out.coeffs = {-k: v.subs_inv() for k, v in self.coeffs.items()}
        return out

    def is_laurent(self):
        return all(v.is_laurent() for v in self.coeffs.values())

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            var = "" if k == 0 else ("A" if k == 1 else f"A^{k}")
            parts.append(f"({self.coeffs[k]})" + (f"*{var}" if var else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"APoly({self})"

    def to_json(self):
        out = []
        for k in sorted(self.coeffs):
            v = self.coeffs[k]
            out.append([k, v.num.to_json(), v.den.to_json()])
        return out

    @classmethod
    def from_json(cls, data):
        return cls({int(k): RatFuncQ(LaurentPoly.from_json(n), LaurentPoly.from_json(d))
                    for k, n, d in data})
