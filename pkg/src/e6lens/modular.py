"""SL(2,Z) arithmetic: matrices, S/T generator words, Euclidean word
decomposition, Bezout cofactors, the principal congruence subgroup of
level 12 and its published generating set.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class SL2Z:
    """Integer 2x2 matrix [[a, b], [c, d]] with determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant must be 1: {self.entries()}")

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other):
        if not isinstance(other, SL2Z):
            return NotImplemented
        return SL2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return SL2Z(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        acc = IDENTITY
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = SL2Z(1, 0, 0, 1)
S = SL2Z(0, -1, 1, 0)
T = SL2Z(1, 1, 0, 1)


def t_power(k):
    return SL2Z(1, k, 0, 1)


_WORD_TOKEN = re.compile(r"S(\d+)?|T(-?\d+)")


class Word:
    """A word in the generators S and T, stored as a token sequence.

    Tokens are the literal string "S" or a nonzero int k meaning T^k.
    Adjacent T tokens are merged on construction (and dropped when they
    cancel); S may repeat, since S^2 = -I is meaningful in SL(2,Z).
    """

    __slots__ = ("_tokens",)

    def __init__(self, tokens=()):
        merged = []
        for tok in tokens:
            if tok == "S":
                merged.append("S")
            elif isinstance(tok, int) and not isinstance(tok, bool):
                if merged and merged[-1] != "S":
                    merged[-1] += tok
                    if merged[-1] == 0:
                        merged.pop()
                elif tok != 0:
                    merged.append(tok)
            else:
                raise ValueError(f"bad token {tok!r}: expected 'S' or nonzero int")
        object.__setattr__(self, "_tokens", tuple(merged))

    @property
    def tokens(self):
        return self._tokens

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self):
        return len(self._tokens)

    def __iter__(self):
        return iter(self._tokens)

    def __eq__(self, other):
        return isinstance(other, Word) and self._tokens == other._tokens

    def __hash__(self):
        return hash(self._tokens)

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self._tokens + other._tokens)

    def s_count(self):
        return sum(1 for t in self._tokens if t == "S")

    def to_matrix(self):
        """Left-to-right product of the token matrices; empty word -> I."""
        m = IDENTITY
        for tok in self._tokens:
            m = m * (S if tok == "S" else t_power(tok))
        return m

    def compact(self):
        """Whitespace-free form, e.g. `S2T12ST12S`."""
        out = []
        run = 0
        for tok in self._tokens:
            if tok == "S":
                run += 1
                continue
            if run:
                out.append("S" if run == 1 else f"S{run}")
                run = 0
            out.append(f"T{tok}")
        if run:
            out.append("S" if run == 1 else f"S{run}")
        return "".join(out)

    def pretty(self):
        """Readable form, e.g. `S^2 T^12 S T^12 S`."""
        out = []
        run = 0
        for tok in self._tokens:
            if tok == "S":
                run += 1
                continue
            if run:
                out.append("S" if run == 1 else f"S^{run}")
                run = 0
            out.append(f"T^{tok}")
        if run:
            out.append("S" if run == 1 else f"S^{run}")
        return " ".join(out)

    @classmethod
    def parse(cls, text):
        """Parse either the compact or the pretty form back to a Word."""
        squeezed = re.sub(r"[\s^]+", "", text)
        tokens = []
        pos = 0
        while pos < len(squeezed):
            m = _WORD_TOKEN.match(squeezed, pos)
            if not m:
                raise ValueError(f"cannot parse word at {squeezed[pos:]!r}")
            if m.group(2) is not None:
                tokens.append(int(m.group(2)))
            else:
                tokens.extend("S" * (int(m.group(1)) if m.group(1) else 1))
            pos = m.end()
        return cls(tokens)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"Word({self.compact()!r})"


def _nearest_div(n, d):
    # floor(n/d + 1/2); d normalized positive
    if d < 0:
        n, d = -n, -d
    return (2 * n + d) // (2 * d)


def decompose(m):
    """Write m as a word in S and T, by Euclidean descent on the first column.

    Repeatedly peels m = T^k * S * m' (driving the lower-left entry down by
    nearest-integer division), then clears the remaining +-(1, n; 0, 1) with
    a T power and S^2 = -I for the sign.  The result evaluates back to m
    exactly; its length is O(log max|entry|).
    """
    tokens = []
    a, b, c, d = m.entries()
    while c:
        k = _nearest_div(a, c)
        if k:
            a -= k * c
            b -= k * d
            tokens.append(k)
        tokens.append("S")
        # apply S^-1 on the left: rows (r1, r2) -> (r2, -r1)
        a, b, c, d = c, d, -a, -b
    if a == 1:
        if b:
            tokens.append(b)
    else:
        tokens.append("S")
        tokens.append("S")
        if b:
            tokens.append(-b)
    return Word(tokens)


def xgcd(a, b):
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def cofactors(p, q):
    """The canonical (a, b) with a*q - b*p = 1.

    For |p| > 1 this is the unique pair with 0 <= a < |p|; for |p| <= 1 the
    choice is forced up to b, fixed as below.  Raises if gcd(p, q) != 1.
    """
    g = math.gcd(p, q)
    if g != 1:
        raise ValueError(f"p and q must be coprime, but gcd({p}, {q}) = {g}")
    if p == 0:
        return q, 0  # q = +-1, a*q = q^2 = 1
    if abs(p) == 1:
        return 0, -p
    a = pow(q, -1, abs(p))
    b = (a * q - 1) // p
    return a, b


def lens_matrix(p, q, a, b):
    """The gluing matrix (-q, b; p, -a) of L(p, q), for a*q - b*p = 1."""
    if a * q - b * p != 1:
        raise ValueError(f"need a*q - b*p = 1, got {a * q - b * p}")
    return SL2Z(-q, b, p, -a)


def in_gamma12(m):
    """Membership in Gamma(12) = {P in SL(2,Z) : P = I mod 12}."""
    return (
        m.a % 12 == 1
        and m.b % 12 == 0
        and m.c % 12 == 0
        and m.d % 12 == 1
    )


def congruent_lift(p, q, p2, q2):
    """Cofactor pairs for (p, q) and (p2, q2) that agree mod 12.

    Requires both pairs coprime and p = p2, q = q2 mod 12.  Constructive:
    take (a, b) for (p, q), write (a2, b2) = (a, b) + 12(x, y) and solve the
    linear Diophantine equation p2*y - q2*x = a*w - z*b, where z = (p2-p)/12
    and w = (q2-q)/12.  Returns (a, b, a2, b2) with a*q - b*p = 1,
    a2*q2 - b2*p2 = 1, a = a2 and b = b2 mod 12.
    """
    if math.gcd(p, q) != 1 or math.gcd(p2, q2) != 1:
        raise ValueError("both (p, q) and (p2, q2) must be coprime")
    if (p - p2) % 12 or (q - q2) % 12:
        raise ValueError("need p = p2 and q = q2 mod 12")
    a, b = cofactors(p, q)
    z = (p2 - p) // 12
    w = (q2 - q) // 12
    rhs = a * w - z * b
    g, u, v = xgcd(p2, q2)
    assert g == 1
    # p2*y - q2*x = rhs with y = u*rhs, x = -v*rhs
    y = u * rhs
    x = -v * rhs
    a2 = a + 12 * x
    b2 = b + 12 * y
    assert a2 * q2 - b2 * p2 == 1
    return a, b, a2, b2


@dataclass(frozen=True)
class GammaGenerator:
    name: str
    matrix: SL2Z
    word: Word


# Generating set of Gamma(12) as a normal subgroup (19 elements, computed
# externally with the GAP package Congruence), each with an S/T word.  Taken
# as given; everything checkable about it is checked in _build_generators.
_GENERATOR_DATA = (
    ("P1+", (1, 12, 0, 1), "T12"),
    ("P1-", (1, -12, 0, 1), "T-12"),
    ("P2", (-143, 12, -12, 1), "S2T12ST12S"),
    ("P3", (-155, 84, -24, 13), "S2T7ST2ST7ST2S"),
    ("P4", (-191, 156, -60, 49), "S2T3ST-5ST2ST-4ST1S"),
    ("P5", (-443, 120, -48, 13), "T9ST-4ST3ST4S"),
    ("P6", (-467, 360, -48, 37), "T10ST4ST3ST-3ST1S"),
    ("P7", (-299, 108, -36, 13), "T8ST-3ST4ST3S"),
    ("P8", (-311, 216, -36, 25), "T9ST3ST4ST-2ST1S"),
    ("P9", (937, -396, 168, -71), "T5ST-2ST-4ST-4ST-3ST2S"),
    ("P10", (157, -36, 48, -11), "T3ST-4ST-3ST4S"),
    ("P11", (157, -48, 36, -11), "T4ST-3ST-4ST3S"),
    ("P12", (205, -84, 144, -59), "T1ST-2ST3ST4ST-2ST2S"),
    ("P13", (157, -72, 24, -11), "T6ST-2ST-6ST2S"),
    ("P14", (229, -132, 144, -83), "T1ST-2ST-3ST4ST4ST2S"),
    ("P15", (169, -108, 36, -23), "S2T5ST3ST-3ST2ST2S"),
    ("P16", (181, -132, 48, -35), "T4ST4ST-3ST-3ST1S"),
    ("P17", (589, -108, 60, -11), "S2T10ST5ST-2ST5S"),
    ("P18", (649, -384, 120, -71), "T5ST-2ST2ST-4ST3ST2S"),
)


@lru_cache(maxsize=1)
def _build_generators():
    table = []
    for name, entries, word_text in _GENERATOR_DATA:
        matrix = SL2Z(*entries)
        word = Word.parse(word_text)
        if word.to_matrix() != matrix:
            raise RuntimeError(
                f"generator table bug: word for {name} evaluates to "
                f"{word.to_matrix()}, expected {matrix}"
            )
        if not in_gamma12(matrix):
            raise RuntimeError(f"generator table bug: {name} not in Gamma(12)")
        table.append(GammaGenerator(name, matrix, word))
    return tuple(table)


def gamma12_generators():
    """The 19 (name, matrix, word) entries, self-checked on first use."""
    return _build_generators()
