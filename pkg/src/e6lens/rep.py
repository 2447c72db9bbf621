"""The 10-dimensional unitary representation of SL(2,Z) behind the E6
state sum, as exact matrices over Q(zeta_24).

The image of S is (1/w) times an integer combination of quantum integers,
with w = 6 + 2*sqrt(3) the global index; the image of T is diagonal with
24th roots of unity.  The matrices are hand-entered data, so construction
is self-verifying: every row of w*rho(S) must have squared conjugate norm
exactly w^2 (which pins down the two composite entries (3+sqrt3) and
i*(3+sqrt3) as the only values consistent with unitarity), and the standard
presentation relations S^4 = 1, (ST)^3 = S^2 must hold exactly.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclotomic import (
    GLOBAL_INDEX,
    GLOBAL_INDEX_INV,
    ONE,
    ZERO,
    Cyclotomic,
    _ZPOW,
    _mul_coeffs,
    quantum_integer,
    zeta_pow,
)
from .modular import decompose, gamma12_generators
from .report import Check, Report

DIM = 10


class CycloMatrix:
    """Immutable square matrix over Q(zeta_24)."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(e for e in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for e in row:
                if not isinstance(e, Cyclotomic):
                    raise TypeError("entries must be Cyclotomic")
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("CycloMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def n(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def entry(self, i, j):
        return self._rows[i][j]

    def __eq__(self, other):
        return isinstance(other, CycloMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __mul__(self, other):
        if isinstance(other, Cyclotomic):
            return CycloMatrix(tuple(tuple(e * other for e in row) for row in self._rows))
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        raw = _raw_mat_mul(
            tuple(tuple(e._c for e in row) for row in self._rows),
            tuple(tuple(e._c for e in row) for row in other._rows),
        )
        return CycloMatrix(tuple(tuple(Cyclotomic._raw(e) for e in row) for row in raw))

    def __rmul__(self, other):
        if isinstance(other, Cyclotomic):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        acc = CycloMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def conjugate_transpose(self):
        n = self.n
        return CycloMatrix(
            tuple(tuple(self._rows[j][i].conjugate() for j in range(n)) for i in range(n))
        )

    def first_difference(self, other):
        """(i, j, self_entry, other_entry) at the first differing position."""
        for i in range(self.n):
            for j in range(self.n):
                if self._rows[i][j] != other._rows[i][j]:
                    return i, j, self._rows[i][j], other._rows[i][j]
        return None


def _raw_mat_mul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        arow = a[i]
        orow = []
        for j in range(n):
            acc = None
            for k in range(n):
                if any(arow[k]) and any(b[k][j]):
                    term = _mul_coeffs(arow[k], b[k][j])
                    acc = term if acc is None else [x + y for x, y in zip(acc, term)]
            orow.append(tuple(acc) if acc is not None else (0,) * 8)
        out.append(tuple(orow))
    return tuple(out)


def _raw_scale_columns(a, diag_pows):
    # right-multiply by the diagonal matrix with entries zeta^diag_pows[j]
    return tuple(
        tuple(
            tuple(_mul_coeffs(row[j], _ZPOW[diag_pows[j]])) if diag_pows[j] else row[j]
            for j in range(len(row))
        )
        for row in a
    )


# diagonal of rho(T) as zeta exponents:
# (1, -zeta^2, -1, 1, i, -zeta^2, 1, zeta^8, zeta^-4, -1)
_T_EXP = (0, 14, 12, 0, 6, 14, 0, 8, 20, 12)


@lru_cache(maxsize=1)
def _s_numerator():
    """w * rho(S), all entries with integer coefficients."""
    o = ONE
    z = ZERO
    t = quantum_integer(3)            # 1 + sqrt3
    b = quantum_integer(2) ** 2       # 2 + sqrt3
    x = quantum_integer(4) * quantum_integer(3) / quantum_integer(2)  # 3 + sqrt3
    ix = zeta_pow(6) * x
    t2 = 2 * t
    rows = (
        (o, t, o, b, t, t, x, t, t, b),
        (t, ix, -t, -t, z, -ix, z, t, -t, t),
        (o, -t, o, b, -t, -t, -x, t, t, b),
        (b, -t, b, o, -t, -t, x, -t, -t, o),
        (t, z, -t, -t, z, z, z, -t2, t2, t),
        (t, -ix, -t, -t, z, ix, z, t, -t, t),
        (x, z, -x, x, z, z, z, z, z, -x),
        (t, t, t, -t, -t2, t, z, t, t, -t),
        (t, -t, t, -t, t2, -t, z, t, t, -t),
        (b, t, b, o, t, t, -x, -t, -t, o),
    )
    mat = CycloMatrix(rows)
    _self_check(mat)
    return mat


def _raw_identity():
    e = [(0,) * 8] * DIM
    rows = []
    for i in range(DIM):
        row = list(e)
        row[i] = (1, 0, 0, 0, 0, 0, 0, 0)
        rows.append(tuple(row))
    return tuple(rows)


def _raw_from(mat):
    return tuple(tuple(e._c for e in row) for row in mat.rows)


def _self_check(ns):
    """Abort construction unless the hand-entered matrix passes its oracles."""
    w2 = GLOBAL_INDEX * GLOBAL_INDEX
    for i, row in enumerate(ns.rows):
        norm = sum((e * e.conjugate() for e in row), start=ZERO)
        if norm != w2:
            raise RuntimeError(
                f"row {i + 1} of w*rho(S) has squared norm {norm}, expected w^2"
            )
    for check in _relation_checks(ns):
        if not check.passed:
            raise RuntimeError(f"presentation relation failed: {check.name}")


def _relation_checks(ns):
    """The standard SL(2,Z) presentation relations, on the w-scaled level.

    S^4 = I and (S T)^3 = S^2 become (wS)^4 = w^4 I and (wS T)^3 = w (wS)^2,
    which stay in integer coefficients.  T^12 = I is checked on exponents.
    """
    raw_ns = _raw_from(ns)
    w_raw = GLOBAL_INDEX._c

    ns2 = _raw_mat_mul(raw_ns, raw_ns)
    ns4 = _raw_mat_mul(ns2, ns2)
    w4 = _mul_coeffs(_mul_coeffs(w_raw, w_raw), _mul_coeffs(w_raw, w_raw))
    expect = tuple(
        tuple(tuple(w4) if i == j else (0,) * 8 for j in range(DIM)) for i in range(DIM)
    )
    checks = [Check("rho(S)^4 = I", _raw_eq(ns4, expect), _raw_witness(ns4, expect))]

    nst = _raw_scale_columns(raw_ns, _T_EXP)
    nst3 = _raw_mat_mul(_raw_mat_mul(nst, nst), nst)
    w_ns2 = tuple(tuple(tuple(_mul_coeffs(e, w_raw)) for e in row) for row in ns2)
    checks.append(
        Check("(rho(S) rho(T))^3 = rho(S)^2", _raw_eq(nst3, w_ns2), _raw_witness(nst3, w_ns2))
    )

    t12_trivial = all((e * 12) % 24 == 0 for e in _T_EXP)
    checks.append(Check("rho(T)^12 = I", t12_trivial, None))
    return checks


def _raw_eq(a, b):
    return all(
        all(x == y for x, y in zip(ea, eb))
        for ra, rb in zip(a, b)
        for ea, eb in zip(ra, rb)
    )


def _raw_witness(a, b):
    for i, (ra, rb) in enumerate(zip(a, b)):
        for j, (ea, eb) in enumerate(zip(ra, rb)):
            if any(x != y for x, y in zip(ea, eb)):
                got = Cyclotomic._raw(ea)
                want = Cyclotomic._raw(eb)
                return f"({i + 1},{j + 1}): expected {want.to_text()}, got {got.to_text()}"
    return None


@lru_cache(maxsize=1)
def rho_s():
    """rho(S), exact; aborts if the transcription self-checks fail."""
    ns = _s_numerator()
    return ns * GLOBAL_INDEX_INV


@lru_cache(maxsize=1)
def rho_t():
    """rho(T) = diag(1, -zeta^2, -1, 1, i, -zeta^2, 1, zeta^8, zeta^-4, -1)."""
    return rho_t_power(1)


def rho_t_power(k):
    """rho(T)^k by diagonal exponentiation (k mod 12)."""
    return CycloMatrix(
        tuple(
            tuple(zeta_pow(_T_EXP[i] * k) if i == j else ZERO for j in range(DIM))
            for i in range(DIM)
        )
    )


def _word_raw_and_scount(word):
    raw = _raw_identity()
    m = 0
    ns = _raw_from(_s_numerator())
    for tok in word:
        if tok == "S":
            raw = _raw_mat_mul(raw, ns)
            m += 1
        else:
            raw = _raw_scale_columns(raw, tuple((e * tok) % 24 for e in _T_EXP))
    return raw, m


def rho_word(word):
    """Image of a generator word, computed with w-denominators pulled out."""
    raw, m = _word_raw_and_scount(word)
    if m == 0:
        return CycloMatrix(tuple(tuple(Cyclotomic._raw(e) for e in row) for row in raw))
    scale = GLOBAL_INDEX_INV**m
    return CycloMatrix(
        tuple(tuple(Cyclotomic._raw(e) * scale for e in row) for row in raw)
    )


def rho_matrix(m):
    """rho on an SL(2,Z) matrix, via word decomposition (well-defined since
    the presentation relations are verified at construction)."""
    return rho_word(decompose(m))


def rho_entry_11(word):
    """First matrix entry of rho(word), via one matrix-vector sweep.

    Applies the tokens to the basis vector e = (1, 0, ..., 0) right-to-left,
    keeping integer coefficients and dividing by the accumulated power of w
    only at the end.
    """
    v = [(0,) * 8] * DIM
    v[0] = (1, 0, 0, 0, 0, 0, 0, 0)
    m = 0
    ns = _raw_from(_s_numerator())
    for tok in reversed(word.tokens):
        if tok == "S":
            new = []
            for i in range(DIM):
                acc = None
                row = ns[i]
                for j in range(DIM):
                    if any(row[j]) and any(v[j]):
                        term = _mul_coeffs(row[j], v[j])
                        acc = term if acc is None else [x + y for x, y in zip(acc, term)]
                new.append(tuple(acc) if acc is not None else (0,) * 8)
            v = new
            m += 1
        else:
            v = [
                tuple(_mul_coeffs(v[i], _ZPOW[(_T_EXP[i] * tok) % 24]))
                if (_T_EXP[i] * tok) % 24
                else v[i]
                for i in range(DIM)
            ]
    first = Cyclotomic._raw(v[0])
    if m == 0:
        return first
    return first * GLOBAL_INDEX_INV**m


def verify_relations():
    """Report on the three presentation relations."""
    return Report("relations", tuple(_relation_checks(_s_numerator())))


def verify_unitary():
    """Report that rho(S) and rho(T) are exactly unitary."""
    ident = CycloMatrix.identity(DIM)
    s = rho_s()
    checks = []
    prod = s * s.conjugate_transpose()
    diff = prod.first_difference(ident)
    checks.append(
        Check(
            "rho(S) rho(S)* = I",
            diff is None,
            None if diff is None else _diff_str(diff),
        )
    )
    t = rho_t()
    prod = t * t.conjugate_transpose()
    diff = prod.first_difference(ident)
    checks.append(
        Check(
            "rho(T) rho(T)* = I",
            diff is None,
            None if diff is None else _diff_str(diff),
        )
    )
    return Report("unitarity", tuple(checks))


def verify_kernel_generators():
    """Report that rho kills all 19 published generators of Gamma(12).

    Each generator is evaluated along two routes: its published word and a
    fresh decomposition of its matrix; both must give the identity exactly.
    """
    ident = CycloMatrix.identity(DIM)
    checks = []
    for gen in gamma12_generators():
        via_word = rho_word(gen.word)
        diff = via_word.first_difference(ident)
        if diff is not None:
            checks.append(Check(gen.name, False, "via word " + _diff_str(diff)))
            continue
        via_matrix = rho_word(decompose(gen.matrix))
        diff = via_matrix.first_difference(ident)
        if diff is not None:
            checks.append(Check(gen.name, False, "via matrix " + _diff_str(diff)))
            continue
        checks.append(Check(gen.name, True))
    return Report("kernel", tuple(checks))


def _diff_str(diff):
    i, j, got, want = diff
    return f"({i + 1},{j + 1}): expected {want.to_text()}, got {got.to_text()}"
