"""Braid words and the twist builders used by the knot families.

A braid word on m strands is a sequence of nonzero signed integers; letter
k stands for the Artin generator sigma_k and -k for its inverse.  Words are
kept verbatim (no free reduction); trace invariance handles equivalence.
"""
from __future__ import annotations

from dataclasses import dataclass


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidError(f"letter {x} invalid on {self.strands} strands")

    @property
    def writhe(self):
        return sum(1 if x > 0 else -1 for x in self.letters)

    def permutation(self):
        """Closure permutation as a tuple p with strand i -> p[i]."""
        p = list(range(self.strands))
        for x in self.letters:
            k = abs(x) - 1
            p[k], p[k + 1] = p[k + 1], p[k]
        return tuple(p)

    def component_count(self):
        """Number of cycles of the closure permutation."""
        p = self.permutation()
        seen = [False] * self.strands
        count = 0
        for i in range(self.strands):
            if not seen[i]:
                count += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = p[j]
        return count

    def is_knot(self):
        return self.component_count() == 1

    def mirror(self):
        """Flip every crossing; the closure is the mirror link."""
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def inverse(self):
        """Group inverse (reversed sequence of inverted letters)."""
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def rotate(self, k):
        """Cyclic rotation; the closure is unchanged."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def __mul__(self, other):
        return concat(self, other)

    def __pow__(self, n):
        if n >= 0:
            return BraidWord(self.strands, self.letters * n)
        return self.inverse() ** (-n)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def to_json(self):
        return {"strands": self.strands, "word": list(self.letters)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["strands"]), tuple(int(x) for x in data["word"]))


def parse_braid(text, strands):
    """Parse whitespace-separated signed generator indices."""
    try:
        letters = tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise BraidError(f"unparseable braid word {text!r}") from exc
    return BraidWord(strands, letters)


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise BraidError(f"strand mismatch: {a.strands} vs {b.strands}")
    return BraidWord(a.strands, a.letters + b.letters)


def torus_braid(m, n, strands=None):
    """(sigma_{m-1} ... sigma_1)^n on `strands` strands (default m)."""
    if m < 2:
        raise BraidError("torus braid needs at least 2 strands")
    strands = strands or m
    loop = tuple(range(m - 1, 0, -1))
    if n >= 0:
        return BraidWord(strands, loop * n)
    inv = tuple(-x for x in reversed(loop))
    return BraidWord(strands, inv * (-n))


def full_twist(m, strands=None, power=1):
    """Full twist F_m^power = (sigma_{m-1} ... sigma_1)^(m*power).

    With `strands` > m this is the partial full twist acting on the lowest
    m strands.
    """
    if m < 2:
        raise BraidError("full twist needs at least 2 strands")
    return torus_braid(m, m * power, strands=strands or m)


def jm_twist(m, strands=None, power=1):
    """Jucys-Murphy twist E~_m = sigma_{m-1}..sigma_2 sigma_1^2 sigma_2..sigma_{m-1}."""
    if m < 2:
        raise BraidError("Jucys-Murphy twist needs at least 2 strands")
    strands = strands or m
    up = tuple(range(m - 1, 1, -1))
    base = up + (1, 1) + tuple(reversed(up))
    if power >= 0:
        return BraidWord(strands, base * power)
    inv = tuple(-x for x in reversed(base))
    return BraidWord(strands, inv * (-power))


def jm_twist_e(m, strands=None, power=1):
    """The variant E_m = sigma_1..sigma_{m-2} sigma_{m-1}^2 sigma_{m-2}..sigma_1.

    Unlike E~_m its representation is not diagonal off the symmetric
    diagrams, so it does not preserve the factorisability conditions.
    """
    if m < 2:
        raise BraidError("Jucys-Murphy twist needs at least 2 strands")
    strands = strands or m
    up = tuple(range(1, m - 1))
    base = up + (m - 1, m - 1) + tuple(reversed(up))
    if power >= 0:
        return BraidWord(strands, base * power)
    inv = tuple(-x for x in reversed(base))
    return BraidWord(strands, inv * (-power))


@dataclass(frozen=True)
class FamilyIndex:
    """Index (m; j, k, l) of the hyperbolic-extension family K^(m)_{j,k,l}."""
    m: int
    j: int
    k: int
    l: int

    def __post_init__(self):
        if self.m < 3:
            raise BraidError("family needs at least 3 strands")

    @property
    def writhe(self):
        m, j, k, l = self.m, self.j, self.k, self.l
        return (m - 1) * (1 + l * m + 2 * k + (m - 2) * j)


def family_braid(idx: FamilyIndex) -> BraidWord:
    """K^(m)_{j,k,l} = sigma_{m-1}..sigma_1 (x) F_{m-1}^j (x) E~_m^k (x) F_m^l."""
    m = idx.m
    b = torus_braid(m, 1)
    b = concat(b, full_twist(m - 1, strands=m, power=idx.j))
    b = concat(b, jm_twist(m, power=idx.k))
    b = concat(b, full_twist(m, power=idx.l))
    assert b.writhe == idx.writhe, (b.writhe, idx.writhe)
    return b
