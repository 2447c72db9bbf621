"""The E6 state sum invariant Z(L(p, q)) of lens spaces, two independent ways.

Route one (state_sum): Z = w * (rho(-q, b; p, -a))_{1,1} with a*q - b*p = 1,
evaluated by decomposing the gluing matrix into an S/T word.  Route two
(closed_form): an exact case table keyed on p mod 12 and q mod gcd(p, 12).
Both are normalized so that Z(S^3) = Z(L(1, 0)) = 1.

The case table, with g = gcd(|p|, 12) and r = p mod 12:

    g = 1        |[p]|                (1 if p = +-1, 2+sqrt3 if p = +-5 mod 12)
    g = 2, 6     [4][3]/[2] = 3 + sqrt3
    g = 3        zeta^(+-3) [4]       sign + iff (r, q mod 3) in {(9,1), (3,2)}
    g = 4        2 zeta^(+-2) [3]     sign + iff (r, q mod 4) in {(4,1), (8,3)}
    g = 12       2 [4][3]/[2] if q = +-1 mod 12, else 0 (q = +-5 mod 12)

The complex cases carry opposite signs on the two residues r of p sharing a
gcd; this is forced by the state sum (the gluing matrix of L(p, 1) is
S T^p S, whose first entry works out to zeta^{-3}[4] at p = 3 but
zeta^{+3}[4] at p = 9), and is exactly the "determined by p mod 12 and
q mod (p, 12)" shape.  Every branch is pinned against route one by the
exhaustive agreement sweep below.

Both routes accept any coprime integer pair, including q >= p, q < 0 and
p <= 0; no normalization of q is applied (the gluing formula is used
literally, and mod-12 periodicity makes the extension forced).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import GLOBAL_INDEX, ZERO, Cyclotomic, quantum_integer, zeta_pow
from .modular import cofactors, decompose, lens_matrix
from .rep import rho_entry_11
from .report import Check, Report


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) for coprime integers p, q (any signs, q not reduced mod p)."""

    p: int
    q: int

    def __post_init__(self):
        g = math.gcd(self.p, self.q)
        if g != 1:
            raise ValueError(
                f"p and q must be coprime, but gcd({self.p}, {self.q}) = {g}"
            )

    def __str__(self):
        return f"L({self.p},{self.q})"


def state_sum(space):
    """Z via the representation: w times the first entry of rho of the
    gluing matrix (-q, b; p, -a), for the canonical cofactors (a, b)."""
    return _state_sum_cached(space.p, space.q)


@lru_cache(maxsize=None)
def _state_sum_cached(p, q):
    a, b = cofactors(p, q)
    return _state_sum_with_cofactors(p, q, a, b)


def _state_sum_with_cofactors(p, q, a, b):
    word = decompose(lens_matrix(p, q, a, b))
    return GLOBAL_INDEX * rho_entry_11(word)


def closed_form(space):
    """Z via the exact case table (see module docstring)."""
    p, q = space.p, space.q
    r = p % 12
    g = math.gcd(r, 12) if r else 12
    if g == 1:
        return quantum_integer(p).abs_real()
    if g in (2, 6):
        return _binomial_42()
    if g == 3:
        plus = (q % 3 == 1) == (r == 9)
        return zeta_pow(3 if plus else -3) * quantum_integer(4)
    if g == 4:
        plus = (q % 4 == 1) == (r == 4)
        return 2 * zeta_pow(2 if plus else -2) * quantum_integer(3)
    # 12 | p
    if q % 12 in (1, 11):
        return 2 * _binomial_42()
    return ZERO


@lru_cache(maxsize=1)
def _binomial_42():
    # [4][3]/[2] = 3 + sqrt3
    return quantum_integer(4) * quantum_integer(3) / quantum_integer(2)


def homotopy_equivalent(one, two):
    """Orientation-preserving homotopy equivalence of L(p,q) and L(p',q'):
    p = p' and q = n^2 q' mod p for some n (for p = 0: q = q')."""
    if one.p != two.p:
        return False
    p = abs(one.p)
    if p == 0:
        return one.q == two.q
    return any((one.q - n * n * two.q) % p == 0 for n in range(p))


# ---------------------------------------------------------------------------
# verification sweeps


def _coprime_pairs(p_max):
    for p in range(1, p_max + 1):
        for q in range(max(p, 1)):
            if math.gcd(p, q) == 1:
                yield p, q


def verify_closed_form(p_max=48):
    """Exact agreement of the two routes on all coprime pairs up to p_max."""
    checks = []
    for p in range(1, p_max + 1):
        bad = None
        count = 0
        for q in range(max(p, 1)):
            if math.gcd(p, q) != 1:
                continue
            count += 1
            space = LensSpace(p, q)
            if state_sum(space) != closed_form(space):
                bad = q
                break
        checks.append(
            Check(
                f"state sum = closed form, p={p} ({count} pairs)",
                bad is None,
                None if bad is None else f"first mismatch at q={bad}",
            )
        )
    return Report("closedform", tuple(checks))


def check_well_defined(space, shifts):
    """The state sum is unchanged when (a, b) is replaced by (a+kp, b+kq)."""
    p, q = space.p, space.q
    a, b = cofactors(p, q)
    reference = state_sum(space)
    checks = []
    for k in shifts:
        value = _state_sum_with_cofactors(p, q, a + k * p, b + k * q)
        checks.append(
            Check(
                f"{space} cofactor shift k={k}",
                value == reference,
                None
                if value == reference
                else f"expected {reference.to_text()}, got {value.to_text()}",
            )
        )
    return Report("welldefined", tuple(checks))


def verify_well_defined(p_max=48, shifts=range(-3, 4), sample=100, seed=7):
    """check_well_defined over a deterministic sample of coprime pairs."""
    pairs = list(_coprime_pairs(p_max))
    if sample and sample < len(pairs):
        pairs = sorted(random.Random(seed).sample(pairs, sample))
    lo, hi = min(shifts), max(shifts)
    checks = []
    for p, q in pairs:
        rep = check_well_defined(LensSpace(p, q), shifts)
        failures = rep.failures()
        checks.append(
            Check(
                f"L({p},{q}) shifts {lo}..{hi}",
                not failures,
                failures[0].witness if failures else None,
            )
        )
    return Report("welldefined", tuple(checks))


def verify_periodicity(p_max=48):
    """Z(L(p,q)) = Z(L(p+12s, q+12t)) for every swept coprime pair and every
    nonnegative shift that stays in range (p+12s <= p_max, q+12t < p_max)."""
    if p_max < 13:
        raise ValueError("p_max must be at least 13")
    checks = []
    for p, q in _coprime_pairs(p_max - 12):
        value = _state_sum_cached(p, q)
        bad = None
        for s in range((p_max - p) // 12 + 1):
            p2 = p + 12 * s
            for t in range((p_max - 1 - q) // 12 + 1):
                q2 = q + 12 * t
                if (s, t) == (0, 0) or math.gcd(p2, q2) != 1:
                    continue
                if _state_sum_cached(p2, q2) != value:
                    bad = (p2, q2)
                    break
            if bad:
                break
        checks.append(
            Check(
                f"L({p},{q}) mod-12 shifts",
                bad is None,
                None if bad is None else f"differs at L({bad[0]},{bad[1]})",
            )
        )
    return Report("periodicity", tuple(checks))


def verify_corollary(p_max=60):
    """Equal closed-form values on every homotopy-equivalent pair q, q' < p."""
    checks = []
    for p in range(1, p_max + 1):
        spaces = [LensSpace(p, q) for q in range(max(p, 1)) if math.gcd(p, q) == 1]
        bad = None
        pairs = 0
        for i, one in enumerate(spaces):
            for two in spaces[i:]:
                if not homotopy_equivalent(one, two):
                    continue
                pairs += 1
                if closed_form(one) != closed_form(two):
                    bad = (one.q, two.q)
                    break
            if bad:
                break
        checks.append(
            Check(
                f"p={p} ({pairs} equivalent pairs)",
                bad is None,
                None if bad is None else f"L({p},{bad[0]}) vs L({p},{bad[1]})",
            )
        )
    return Report("corollary", tuple(checks))


# ---------------------------------------------------------------------------
# sweep table


@dataclass(frozen=True)
class TableRow:
    p: int
    q: int
    state: Cyclotomic
    closed: Cyclotomic
    agrees: bool

    def float_parts(self, precision_bits=64):
        return self.state.approx(precision_bits)


def sweep_table(p_max):
    """Rows (p, q, state-sum value, closed-form value, agreement flag) for
    all coprime pairs 1 <= p <= p_max, 0 <= q < max(p, 1), in (p, q) order."""
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    rows = []
    for p, q in _coprime_pairs(p_max):
        space = LensSpace(p, q)
        s = state_sum(space)
        c = closed_form(space)
        rows.append(TableRow(p, q, s, c, s == c))
    return rows


def _format_float(x, digits=10):
    return f"{float(x):.{digits}g}"


def table_csv(rows, precision_bits=64):
    lines = ["p,q,exact,float_re,float_im,agrees"]
    for row in rows:
        re, im = row.float_parts(precision_bits)
        lines.append(
            f"{row.p},{row.q},{row.state.to_text()},"
            f"{_format_float(re)},{_format_float(im)},{str(row.agrees).lower()}"
        )
    return "\n".join(lines) + "\n"


def table_json_obj(rows, precision_bits=64):
    out = []
    for row in rows:
        re, im = row.float_parts(precision_bits)
        out.append(
            {
                "p": row.p,
                "q": row.q,
                "exact": row.state.to_text(),
                "exact_coeffs": row.state.to_json_coeffs(),
                "float_re": float(re),
                "float_im": float(im),
                "agrees": row.agrees,
            }
        )
    return out


def table_text(rows, precision_bits=64):
    lines = [f"{'p':>4} {'q':>4}  {'value':<28} {'float':<28} agrees"]
    for row in rows:
        re, im = row.float_parts(precision_bits)
        fr = _format_float(re)
        fi = _format_float(im)
        fl = fr if im == 0 else (f"{fr} + {fi}i" if im > 0 else f"{fr} - {fi[1:]}i")
        lines.append(
            f"{row.p:>4} {row.q:>4}  {row.state.surd_str():<28} {fl:<28} "
            f"{'yes' if row.agrees else 'NO'}"
        )
    return "\n".join(lines) + "\n"
