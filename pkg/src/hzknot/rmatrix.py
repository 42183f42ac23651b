"""R-matrices and Racah rotation matrices for braid representations.

Hard-coded matrices for the diagrams the braid-trace pipeline needs at
up to 5 strands: (3,[21]), (4,[31]), (4,[22]), (5,[41]), (5,[32]),
(5,[311]).  One-dimensional diagrams [m] and [1^m] act as the scalars
q^w and (-1/q)^w; transposed diagrams are reached through q -> -q^-1.

Every R_i is the conjugate M_i R_1 M_i^T of the diagonal R_1 by an
orthogonal product of Racah matrices, so inverses and powers come from
the eigenvalues q and -1/q, never from elimination.

Internally matrix entries are kept as radical-monomial components with
integer Laurent numerators over a shared denominator that is a product
of quantum integers [n]_q; products cancel the denominator eagerly.
"""
from __future__ import annotations

from functools import cache

from .braid import BraidWord, full_twist, jm_twist
from .qring import ExtScalar, LaurentPoly, RatFuncQ, qint
from .young import YoungDiagram

_EMPTY = frozenset()
_R2, _R3, _R4 = frozenset({2}), frozenset({3}), frozenset({4})

#: r_n^2 = [n-1]_q [n+1]_q
RAD_SQ = {2: qint(1) * qint(3), 3: qint(2) * qint(4), 4: qint(3) * qint(5)}

SUPPORTED = {
    (3, (2, 1)),
    (4, (3, 1)),
    (4, (2, 2)),
    (5, (4, 1)),
    (5, (3, 2)),
    (5, (3, 1, 1)),
}


class RMatrixError(ValueError):
    pass


# ---------------------------------------------------------------------------
# scaled entries: dict {radical monomial: LaurentPoly}, None meaning zero
# ---------------------------------------------------------------------------

def _ext_add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    out = dict(a)
    for k, v in b.items():
        cur = out.get(k)
        nv = v if cur is None else cur + v
        if nv.is_zero():
            out.pop(k, None)
        else:
            out[k] = nv
    return out or None


def _ext_mul(a, b):
    if a is None or b is None:
        return None
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            key = k1 ^ k2
            val = v1 * v2
            for n in k1 & k2:
                val = val * RAD_SQ[n]
            cur = out.get(key)
            nv = val if cur is None else cur + val
            if nv.is_zero():
                out.pop(key, None)
            else:
                out[key] = nv
    return out or None


def _ext_scale(a, poly):
    if a is None or poly.is_zero():
        return None
    return {k: v * poly for k, v in a.items()}


def _den_poly(den):
    out = LaurentPoly.one()
    for n, e in den.items():
        out = out * qint(n) ** e
    return out


class RepMatrix:
    """Square matrix of radical-extension scalars over a factored denominator."""

    __slots__ = ("dim", "rows", "den")

    def __init__(self, dim, rows, den=None):
        self.dim = dim
        self.rows = rows
        self.den = dict(den or {})

    @classmethod
    def identity(cls, dim):
        one = LaurentPoly.one()
        rows = [[({_EMPTY: one} if i == j else None) for j in range(dim)] for i in range(dim)]
        return cls(dim, rows)

    @classmethod
    def diagonal_monomials(cls, entries):
        """Diagonal matrix with entries sign * q^exp given as (sign, exp) pairs."""
        dim = len(entries)
        rows = [[None] * dim for _ in range(dim)]
        for i, (sign, exp) in enumerate(entries):
            rows[i][i] = {_EMPTY: LaurentPoly.monomial(exp, sign)}
        return cls(dim, rows)

    def transpose(self):
        rows = [[self.rows[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return RepMatrix(self.dim, rows, self.den)

    def __matmul__(self, other):
        n = self.dim
        a, b = self.rows, other.rows
        rows = []
        for i in range(n):
            ai = a[i]
            row = []
            for j in range(n):
                acc = None
                for k in range(n):
                    x = ai[k]
                    if x is None:
                        continue
                    y = b[k][j]
                    if y is None:
                        continue
                    acc = _ext_add(acc, _ext_mul(x, y))
                row.append(acc)
            rows.append(row)
        den = dict(self.den)
        for nfac, e in other.den.items():
            den[nfac] = den.get(nfac, 0) + e
        out = RepMatrix(n, rows, den)
        out._cancel()
        return out

    def _cancel(self):
        """Divide out denominator factors [n]_q shared by every entry."""
        for nfac in list(self.den):
            poly = qint(nfac)
            while self.den.get(nfac, 0) > 0:
                new_rows = []
                ok = True
                for row in self.rows:
                    new_row = []
                    for entry in row:
                        if entry is None:
                            new_row.append(None)
                            continue
                        reduced = {}
                        for key, val in entry.items():
                            d = val.exact_div(poly)
                            if d is None:
                                ok = False
                                break
                            reduced[key] = d
                        if not ok:
                            break
                        new_row.append(reduced)
                    if not ok:
                        break
                    new_rows.append(new_row)
                if not ok:
                    break
                self.rows = new_rows
                self.den[nfac] -= 1
            if self.den.get(nfac) == 0:
                del self.den[nfac]

    def power(self, t):
        if t < 1:
            raise ValueError("power must be positive")
        result = None
        base = self
        while t:
            if t & 1:
                result = base if result is None else result @ base
            t >>= 1
            if t:
                base = base @ base
        return result

    def trace_scaled(self):
        acc = None
        for i in range(self.dim):
            acc = _ext_add(acc, self.rows[i][i])
        return acc, dict(self.den)

    def entry_ext(self, i, j):
        """Entry (i, j) as a public ExtScalar."""
        raw = self.rows[i][j]
        if raw is None:
            return ExtScalar()
        den = _den_poly(self.den)
        return ExtScalar({k: RatFuncQ(v, den) for k, v in raw.items()})

    def to_ext_grid(self):
        return tuple(tuple(self.entry_ext(i, j) for j in range(self.dim)) for i in range(self.dim))

    def is_diagonal(self):
        return all(self.rows[i][j] is None for i in range(self.dim) for j in range(self.dim) if i != j)

    def equals(self, other):
        if self.dim != other.dim:
            return False
        da, db = _den_poly(self.den), _den_poly(other.den)
        for i in range(self.dim):
            for j in range(self.dim):
                x = _ext_scale(self.rows[i][j], db)
                y = _ext_scale(other.rows[i][j], da)
                if (x or {}) != (y or {}):
                    return False
        return True


# ---------------------------------------------------------------------------
# the Racah rotation matrices, entry tables scaled by their [n]_q denominator
# ---------------------------------------------------------------------------

def _entries(dim, table, den):
    """Build a RepMatrix from {(i, j): (radical-or-0, exponent, sign)} shorthand."""
    rows = [[None] * dim for _ in range(dim)]
    for (i, j), (rad, exp, sign) in table.items():
        key = _EMPTY if rad == 0 else frozenset({rad})
        rows[i][j] = {key: LaurentPoly.monomial(exp, sign)}
    return RepMatrix(dim, rows, den)


def _scaled(dim, cells, den):
    """Build a RepMatrix from {(i, j): LaurentPoly-or-(rad, poly)} cells."""
    rows = [[None] * dim for _ in range(dim)]
    for (i, j), val in cells.items():
        if isinstance(val, tuple):
            rad, poly = val
            rows[i][j] = {frozenset({rad}): poly}
        else:
            rows[i][j] = {_EMPTY: val}
    return RepMatrix(dim, rows, den)


def _block_u2():
    """[2]_q * U^(2) = [[-1, -r2], [r2, -1]] as cell shorthand."""
    one = LaurentPoly.one()
    return {(0, 0): -one, (0, 1): (2, -one), (1, 0): (2, one), (1, 1): -one}


def _block_v2():
    """[3]_q * V^(2) = [[-1, r3], [r3, 1]]."""
    one = LaurentPoly.one()
    return {(0, 0): -one, (0, 1): (3, one), (1, 0): (3, one), (1, 1): one}


def _shift_cells(cells, di, dj):
    return {(i + di, j + dj): v for (i, j), v in cells.items()}


@cache
def _racah_conjugators(m, rows):
    """The ordered conjugator prefixes M_1 = I, M_2 = U, M_3 = UVU, M_4 = UVWUVU."""
    one = LaurentPoly.one()
    q2, q3, q4 = qint(2), qint(3), qint(4)
    if (m, rows) == (3, (2, 1)):
        # S = [[c, s], [s, -c]]
        S = _scaled(2, {(0, 0): one, (0, 1): (2, one), (1, 0): (2, one), (1, 1): -one}, {2: 1})
        return (RepMatrix.identity(2), S)
    if (m, rows) == (4, (2, 2)):
        # R_2^[22] = U T U with U = [[c, -s], [-s, -c]]; R_3 = R_1
        U = _scaled(2, {(0, 0): one, (0, 1): (2, -one), (1, 0): (2, -one), (1, 1): -one}, {2: 1})
        return (RepMatrix.identity(2), U, RepMatrix.identity(2))
    if (m, rows) == (4, (3, 1)):
        U = _scaled(3, {(0, 0): q2, (1, 1): one, (1, 2): (2, one),
                        (2, 1): (2, -one), (2, 2): one}, {2: 1})
        V = _scaled(3, {(0, 0): one, (0, 1): (3, one), (1, 0): (3, -one),
                        (1, 1): one, (2, 2): q3}, {3: 1})
        return (RepMatrix.identity(3), U, U @ V @ U)
    if (m, rows) == (5, (4, 1)):
        U = _scaled(4, {(0, 0): q2, (1, 1): q2, (2, 2): one, (2, 3): (2, one),
                        (3, 2): (2, -one), (3, 3): one}, {2: 1})
        V = _scaled(4, {(0, 0): q3, (1, 1): one, (1, 2): (3, one),
                        (2, 1): (3, -one), (2, 2): one, (3, 3): q3}, {3: 1})
        W = _scaled(4, {(0, 0): one, (0, 1): (4, one), (1, 0): (4, -one),
                        (1, 1): one, (2, 2): q4, (3, 3): q4}, {4: 1})
    elif (m, rows) == (5, (3, 2)):
        cells = {(0, 0): q2}
        cells.update(_shift_cells(_block_u2(), 1, 1))
        cells.update(_shift_cells(_block_u2(), 3, 3))
        U = _scaled(5, cells, {2: 1})
        cells = dict(_shift_cells(_block_v2(), 0, 0))
        cells.update({(2, 2): q3, (3, 3): q3, (4, 4): -q3})
        V = _scaled(5, cells, {3: 1})
        W = _scaled(5, {(0, 0): q2,
                        (1, 1): -one, (1, 3): (2, one),
                        (2, 2): -one, (2, 4): (2, one),
                        (3, 1): (2, one), (3, 3): one,
                        (4, 2): (2, one), (4, 4): one}, {2: 1})
    elif (m, rows) == (5, (3, 1, 1)):
        cells = {(0, 0): q2, (5, 5): q2}
        cells.update(_shift_cells(_block_u2(), 1, 1))
        cells.update(_shift_cells(_block_u2(), 3, 3))
        U = _scaled(6, cells, {2: 1})
        cells = dict(_shift_cells(_block_v2(), 0, 0))
        cells.update({(2, 2): q3, (3, 3): -q3})
        cells.update(_shift_cells(_block_v2(), 4, 4))
        V = _scaled(6, cells, {3: 1})
        W = _scaled(6, {(0, 0): -q4, (5, 5): q4,
                        (1, 1): -one, (1, 3): (4, one),
                        (2, 2): -one, (2, 4): (4, one),
                        (3, 1): (4, one), (3, 3): one,
                        (4, 2): (4, one), (4, 4): one}, {4: 1})
    else:
        raise RMatrixError(f"no R-matrices for {m} strands and diagram {list(rows)}")
    UVU = U @ V @ U
    return (RepMatrix.identity(U.dim), U, UVU, U @ V @ W @ UVU)


_R1_DIAG = {
    (3, (2, 1)): ((1, 1), (-1, -1)),
    (4, (3, 1)): ((1, 1), (1, 1), (-1, -1)),
    (4, (2, 2)): ((1, 1), (-1, -1)),
    (5, (4, 1)): ((1, 1), (1, 1), (1, 1), (-1, -1)),
    (5, (3, 2)): ((1, 1), (1, 1), (-1, -1), (1, 1), (-1, -1)),
    (5, (3, 1, 1)): ((1, 1), (1, 1), (-1, -1), (1, 1), (-1, -1), (-1, -1)),
}


@cache
def _gen_power(m, rows, gen, exp):
    """R_gen^exp = M_gen diag(eig^exp) M_gen^T, exact for any integer exp."""
    M = _racah_conjugators(m, rows)[gen - 1]
    # eigenvalue (sign, e) powers to (sign^exp, e*exp); signs are +-1
    eig = tuple((s if exp % 2 else 1, e * exp) for s, e in _R1_DIAG[(m, rows)])
    D = RepMatrix.diagonal_monomials(eig)
    return M @ D @ M.transpose()


def _tokens(letters):
    """Run-length encode a letter sequence into (generator, exponent) tokens."""
    out = []
    for x in letters:
        g, s = abs(x), (1 if x > 0 else -1)
        if out and out[-1][0] == g:
            out[-1] = (g, out[-1][1] + s)
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append((g, s))
    return tuple(out)


_REP_CACHE = {}


def _rep_tokens(m, rows, tokens):
    """Product of R-matrix powers along the tokens, with repeat folding."""
    if not tokens:
        dim = len(_R1_DIAG[(m, rows)])
        return RepMatrix.identity(dim)
    key = (m, rows, tokens)
    hit = _REP_CACHE.get(key)
    if hit is not None:
        return hit
    if len(tokens) == 1:
        g, e = tokens[0]
        out = _gen_power(m, rows, g, e)
    else:
        parts = _split_repeats(tokens)
        out = None
        for block, t in parts:
            base = _rep_tokens(m, rows, block)
            piece = base if t == 1 else _rep_power(m, rows, block, t)
            out = piece if out is None else out @ piece
    _REP_CACHE[key] = out
    return out


def _rep_power(m, rows, block, t):
    key = (m, rows, block, t)
    hit = _REP_CACHE.get(key)
    if hit is None:
        hit = _rep_tokens(m, rows, block).power(t)
        _REP_CACHE[key] = hit
    return hit


def _split_repeats(tokens):
    """Greedy factorisation of the token list into repeated blocks."""
    parts = []
    i = 0
    n = len(tokens)
    while i < n:
        best = None
        limit = (n - i) // 2
        for p in range(1, limit + 1):
            t = 1
            while tokens[i + t * p:i + (t + 1) * p] == tokens[i:i + p]:
                t += 1
            if t >= 2 and (best is None or p * t > best[0] * best[1]):
                best = (p, t)
        if best:
            p, t = best
            parts.append((tokens[i:i + p], t))
            i += p * t
        else:
            parts.append((tokens[i:i + 1], 1))
            i += 1
    return parts


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

class RMatrixSet:
    """The braid-generator matrices R_1..R_{m-1} for one diagram."""

    def __init__(self, strands, diagram):
        key = (strands, diagram.rows)
        if key not in SUPPORTED:
            raise RMatrixError(f"no R-matrices for {strands} strands and diagram {diagram}")
        self.strands = strands
        self.diagram = diagram
        self._key = key

    @property
    def dim(self):
        return len(_R1_DIAG[self._key])

    def rep(self, gen, exp=1) -> RepMatrix:
        if not 1 <= gen <= self.strands - 1:
            raise RMatrixError(f"generator {gen} out of range for {self.strands} strands")
        return _gen_power(self._key[0], self._key[1], gen, exp)

    def matrix(self, gen):
        """R_gen as a grid of ExtScalar entries."""
        return self.rep(gen).to_ext_grid()

    def inverse(self, gen):
        return self.rep(gen, -1).to_ext_grid()

    def word_rep(self, letters) -> RepMatrix:
        return _rep_tokens(self._key[0], self._key[1], _tokens(tuple(letters)))


def build_rmatrices(m, Q: YoungDiagram) -> RMatrixSet:
    return RMatrixSet(m, Q)


def _scalar_diagram_coeff(Q: YoungDiagram, w):
    """h^Q for the one-dimensional diagrams [m] and [1^m]."""
    if Q.row_count == 1:
        return LaurentPoly.monomial(w)
    return LaurentPoly.monomial(-w, 1 if w % 2 == 0 else -1)


def racah_coeff(b: BraidWord, Q: YoungDiagram) -> LaurentPoly:
    """h^Q(b): trace of the R-matrix word; exact Laurent polynomial.

    Any nonzero radical component or non-polynomial trace aborts, since the
    trace of a braid word in these representations is always radical-free
    and Laurent; a residue signals a transcription bug.
    """
    m = b.strands
    if Q.size != m:
        raise RMatrixError(f"diagram {Q} does not have {m} boxes")
    if Q.row_count == 1 or all(r == 1 for r in Q.rows):
        return _scalar_diagram_coeff(Q, b.writhe)
    key = (m, Q.rows)
    if key in SUPPORTED:
        rep = _rep_tokens(m, Q.rows, _tokens(b.letters))
        comps, den = rep.trace_scaled()
        comps = comps or {}
        if any(k != _EMPTY for k in comps):
            raise RMatrixError(f"radical residue in trace for {Q}: {comps}")
        num = comps.get(_EMPTY, LaurentPoly.zero())
        out = num.exact_div(_den_poly(den))
        if out is None:
            raise RMatrixError(f"non-polynomial trace for {Q}")
        return out
    tkey = (m, Q.transpose().rows)
    if tkey in SUPPORTED:
        return racah_coeff(b, Q.transpose()).subs_mirror()
    raise RMatrixError(f"no R-matrices for {m} strands and diagram {Q}")


def racah_table(b: BraidWord):
    """h^Q for every diagram Q with |Q| = strand count."""
    from .young import partitions

    return {Q: racah_coeff(b, Q) for Q in partitions(b.strands)}


_TWIST_WORDS = {
    "full_twist": lambda m: full_twist(m),
    "partial_twist": lambda m: full_twist(m - 1, strands=m),
    "jm_twist": lambda m: jm_twist(m),
}


def twist_rep(m, Q: YoungDiagram, twist, power=1):
    """Diagonal representation of F_m, F_{m-1} or E~_m (and its powers).

    Raises if the computed matrix is not diagonal, which would break the
    commutative-subalgebra property the families rely on.
    """
    if twist not in _TWIST_WORDS:
        raise RMatrixError(f"unknown twist {twist!r}; expected one of {sorted(_TWIST_WORDS)}")
    word = _TWIST_WORDS[twist](m)
    rset = RMatrixSet(m, Q)
    rep = rset.word_rep(word.letters)
    if not rep.is_diagonal():
        raise RMatrixError(f"{twist} representation for {Q} is not diagonal")
    if power != 1:
        diag = twist_diag_exponents(m, Q, twist)
        rep = RepMatrix.diagonal_monomials(tuple((1, e * power) for e in diag))
    return rep


@cache
def twist_diag_exponents(m, Q: YoungDiagram, twist):
    """The diagonal of a twist representation as plain q-exponents."""
    rep = twist_rep(m, Q, twist)
    if rep.den:
        raise RMatrixError(f"{twist} diagonal for {Q} is not monomial")
    out = []
    for i in range(rep.dim):
        entry = rep.rows[i][i]
        if entry is None or set(entry) != {_EMPTY} or len(entry[_EMPTY].terms) != 1:
            raise RMatrixError(f"{twist} diagonal entry {i} for {Q} is not a monomial")
        ((e, c),) = entry[_EMPTY].terms.items()
        if c != 1:
            raise RMatrixError(f"{twist} diagonal entry {i} for {Q} has sign {c}")
        out.append(e)
    return tuple(out)
