"""Closed-form Feng-Rao numbers and order bounds at P_inf.

For q = 2 and odd n >= 5 every nongap at P_inf has a unique representation

    rho = i*(2^n + 1) + 2*j*m + 8*k,   i in {0,1}, j in {0,..,3}, k >= 0,

with m = (2^n + 1)/3, and nu / d_ORD are piecewise expressions in (i, j, k).
Piecewise lists are read top to bottom and the first matching branch wins.
``dord_closed`` returns ``None`` for an unresolved case instead of falling
back to enumeration; callers that want a number compose it with
:meth:`Semigroup.dord` explicitly (see :func:`dord_with_fallback`).

Two results also cover general q: the head of the order bound for small
rho_{l+1} and the window just below the tail (``dord_telescopic_head`` and
``dord_tail``).
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import NamedTuple

from .curve import curve_params
from .errors import NotANongap, OutOfRange, PreconditionViolated
from .semigroup import Semigroup


class Triple(NamedTuple):
    i: int
    j: int
    k: int


def _m(n: int) -> int:
    if n % 2 == 0 or n < 5:
        raise PreconditionViolated(f"q=2 closed forms need odd n >= 5, got n={n}")
    return (2**n + 1) // 3


def genus_q2(n: int) -> int:
    return curve_params(2, n).g


def value_of(t: Triple, n: int) -> int:
    m = _m(n)
    return t.i * 3 * m + 2 * t.j * m + 8 * t.k


def triple_of(rho: int, n: int) -> Triple:
    m = _m(n)
    found = []
    for i in (0, 1):
        for j in range(4):
            rem = rho - 3 * i * m - 2 * j * m
            if rem >= 0 and rem % 8 == 0:
                found.append(Triple(i, j, rem // 8))
    if not found:
        raise NotANongap(f"{rho} is a gap at P_inf for n={n}")
    assert len(found) == 1, found
    return found[0]


def is_nongap(rho: int, n: int) -> bool:
    try:
        triple_of(rho, n)
    except NotANongap:
        return False
    return rho >= 0


def nu_closed(t: Triple, n: int) -> int:
    """nu_l for rho_{l+1} = t."""
    m = _m(n)
    i, j, k = t
    if i == 1:
        if k < m:
            return 2 * (j + 1) * (k + 1)
        return 2 * (j + 1) * (k + 1) + 2 * (3 - j) * (k - m + 1)
    base = (j + 1) * (k + 1) + (j // 3) * (k + 1)
    if k < m:
        return base
    base += (5 - 2 * max(0, j - 2)) * (k - m + 1)
    if k < 2 * m:
        return base
    return base + max(0, 2 - j) * (k - 2 * m + 1)


# ---------- d_ORD case analysis

F = Fraction


def _fl(x: Fraction) -> int:
    return floor(x)


def _ce(x: Fraction) -> int:
    return ceil(x)


def _dord_1_0(k: int, m: int) -> int | None:
    if k == 0:
        return 2
    if k <= _fl(F(m, 8)):
        return 3
    if F(m, 8) < k <= _fl(F(m, 4)):
        return 4
    if F(m, 4) < k <= _fl(F(3 * m, 8)):
        return 5
    if F(3 * m, 8) < k <= _fl(F(m, 2)):
        return 6
    if F(m, 2) < k <= _fl(F(3 * m, 4)):
        return 8
    if F(3 * m, 4) <= k <= m - 2:
        return 8 * (_ce(k - F(3 * m, 4)) + 1)
    if k == m - 1:
        return 2 * m
    return None


def _dord_1_1(k: int, m: int) -> int | None:
    if k == 0:
        return 4
    if k <= _fl(F(m, 8)):
        return 5
    if F(m, 8) < k <= _fl(F(m, 4)):
        return 6
    if F(m, 4) < k <= _fl(F(m, 2)):
        return 8
    if _ce(F(m, 2)) <= k <= _fl(F(3 * m, 4)) - 2:
        return 8 * (_ce(k - F(m, 2)) + 1)
    if _fl(F(3 * m, 4)) - 1 <= k <= m - 2:
        c = _ce(F(m, 4) + k)
        return 2 * (c + 1) + 6 * (c - m + 1)
    if k == m - 1:
        return 4 * m
    return None


def _dord_1_2(k: int, m: int) -> int | None:
    if k == 0:
        return 6
    if k <= _fl(F(m, 4)):
        return 8
    if _ce(F(m, 4)) <= k <= _fl(F(m, 2)) - 2:
        return 8 * (_ce(k - F(m, 4)) + 1)
    if _fl(F(m, 2)) - 1 <= k <= _fl(F(3 * m, 4)) - 2:
        c = _ce(k + F(m, 2))
        return 2 * (c + 1) + 6 * (c - m + 1)
    if _fl(F(3 * m, 4)) - 1 <= k <= m - 2:
        c = _ce(k + F(m, 4))
        return 4 * (c + 1) + 4 * (c - m + 1)
    if k == m - 1:
        return 6 * m
    return None


def _dord_0_0_low(k: int, m: int) -> int | None:
    if k <= _fl(F(3 * m, 8)):
        return 2
    if _ce(F(3 * m, 8)) <= k <= _fl(F(m, 2)):
        return 3
    if _ce(F(m, 2)) <= k <= _fl(F(5 * m, 8)):
        return 4
    if _ce(F(5 * m, 8)) <= k <= _fl(F(3 * m, 4)):
        return 5
    if _ce(F(3 * m, 4)) <= k <= _fl(F(7 * m, 8)):
        return 6
    if _ce(F(7 * m, 8)) <= k <= m - 1:
        return 8
    return None


def _dord_0_1(k: int, m: int) -> int | None:
    if k <= _fl(F(m, 8)):
        return 2
    if _ce(F(m, 8)) <= k <= _fl(F(m, 4)):
        return 3
    if _ce(F(m, 4)) <= k <= _fl(F(3 * m, 8)):
        return 4
    if _ce(F(3 * m, 8)) <= k <= _fl(F(m, 2)):
        return 5
    if _ce(F(m, 2)) <= k <= _fl(F(5 * m, 8)):
        return 6
    if _ce(F(5 * m, 8)) <= k <= m - 1:
        return 8 * (max(0, _ce(k - F(7 * m, 8))) + 1)
    return None


def _dord_0_3(k: int, m: int, printed: bool) -> int | None:
    if k <= _fl(F(m, 8)):
        return 6
    if _ce(F(m, 8)) <= k <= m - 2:
        # the printed middle branch has no k inside the ceiling
        if printed:
            return 8 * (max(0, _ce(F(3 * m, 8))) + 1)
        return None
    if k == m - 1:
        return 5 * (k + 1)
    return None


def _dord_0_2(k: int, m: int) -> int | None:
    if k <= _fl(F(m, 8)):
        return 4
    if _ce(F(m, 8)) <= k <= _fl(F(m, 4)):
        return 5
    if _ce(F(m, 4)) <= k <= _fl(F(3 * m, 8)):
        return 6
    if _ce(F(3 * m, 8)) <= k <= _fl(F(7 * m, 8)) - 2:
        return 8 * (max(0, _ce(k - F(5 * m, 8))) + 1)
    if _fl(F(7 * m, 8)) - 1 <= k <= m - 3:
        return 2 * (_ce(k + F(m, 8)) + 1)
    if k in (m - 2, m - 1):
        return 3 * (k + 1)
    return None


def _dord_0_0_high(k: int, m: int) -> int | None:
    split = _fl(F(11 * m, 8) - 1)
    if m <= k < split:
        return 8 * (_ce(k - F(9 * m, 8)) + 1)
    if split <= k < 2 * m:
        c = _ce(k - F(3 * m, 8))
        return 2 * (c + 1) + max(0, 6 * (c - m + 1))
    return None


def _perquant(k: int, m: int) -> int:
    if k < F(9 * m - 11, 8):
        return 8 * k - 7 * m + 13
    if k < F(11 * m - 9, 8):
        return 8 * k - 7 * m + 11
    return 8 * k - 7 * m + 9


def classify(t: Triple, n: int) -> str:
    """Name of the published case that covers rho_{l+1} = t."""
    m = _m(n)
    g = genus_q2(n)
    i, j, k = t
    rho = value_of(t, n)
    if rho == 0:
        raise PreconditionViolated("rho_{l+1} = 0 means l = 0; the dual code needs l >= 1")
    if k < m:
        return {
            (1, 0): "dord1",
            (1, 1): "dord2",
            (1, 2): "dord4",
            (1, 3): "dord3",
            (0, 0): "dord5",
            (0, 1): "dord6",
            (0, 2): "dord7",
            (0, 3): "dord_0_3",
        }[(i, j)]
    if (i, j) == (0, 0) and k < 2 * m:
        return "dord8"
    e = rho - (2 * g - 1)
    if e > 0 and is_nongap(e, n):
        return "campillo"
    if (i, j) == (0, 1) and k < 2 * m and rho < 4 * g:
        return "perquant"
    if rho >= 4 * g:
        return "tail"
    return "unresolved"


def dord_closed(t: Triple, n: int, printed_0_3: bool = False) -> int | None:
    """d_ORD(C_l(P_inf)) for rho_{l+1} = t, or None if no published case applies.

    ``printed_0_3`` selects the printed (k-free) middle branch of the (0,3,k)
    lemma; by default that branch is reported unresolved.
    """
    m = _m(n)
    g = genus_q2(n)
    i, j, k = t
    case = classify(t, n)
    if case == "dord1":
        return _dord_1_0(k, m)
    if case == "dord2":
        return _dord_1_1(k, m)
    if case == "dord4":
        return _dord_1_2(k, m)
    if case == "dord3":
        return nu_closed(t, n)
    if case == "dord5":
        return _dord_0_0_low(k, m)
    if case == "dord6":
        return _dord_0_1(k, m)
    if case == "dord7":
        return _dord_0_2(k, m)
    if case == "dord_0_3":
        return _dord_0_3(k, m, printed_0_3)
    if case == "dord8":
        return _dord_0_0_high(k, m)
    if case == "campillo":
        return nu_closed(t, n)
    if case == "perquant":
        return _perquant(k, m)
    if case == "tail":
        return value_of(t, n) - 2 * g + 1
    return None


def dord_with_fallback(s: Semigroup, l: int, n: int) -> tuple[int, str]:
    """Closed form when resolved, else the brute-force value; returns (value, source)."""
    t = triple_of(s.element(l + 1), n)
    v = dord_closed(t, n)
    if v is None:
        return s.dord(l), "oracle"
    return v, classify(t, n)


# ---------- general q


def dord_telescopic_head(rho_next: int, q: int, n: int) -> int:
    """j + 1 where (j-1)(q^n+1) < rho_{l+1} <= j(q^n+1), valid for rho_{l+1} <= (q-1)(q^n+1)."""
    big = q**n + 1
    if not 0 <= rho_next <= (q - 1) * big:
        raise OutOfRange(f"rho_(l+1)={rho_next} outside [0, {(q - 1) * big}]")
    j = -(-rho_next // big)
    return j + 1


def tail_window(q: int, n: int) -> tuple[Fraction, int]:
    """(exclusive lower, inclusive upper) bound on l for :func:`dord_tail`."""
    lo = F(3, 2) * (q - 1) * (q ** (n + 1) + F(q**n, 3) - q**2 - F(2, 3)) - 2
    hi = F(3, 2) * (q - 1) * (q ** (n + 1) + q**n - q**2) - 2
    return lo, int(hi)


def dord_tail(l: int, q: int, n: int, s: Semigroup | None = None) -> int:
    """Smallest nongap >= l + 1 - g, valid inside :func:`tail_window`."""
    lo, hi = tail_window(q, n)
    if not lo < l <= hi:
        raise OutOfRange(f"l={l} outside ({lo}, {hi}]")
    p = curve_params(q, n)
    s = s or Semigroup([q**3, p.m * q, q**n + 1])
    return s.smallest_from(l + 1 - p.g)


def gap_character(rho_next: int, n: int) -> bool:
    """Whether rho_{l+1} - 2g + 1 is a gap, decided from the triple alone.

    True exactly for (0,1,k) with m <= k < 2m - 1.

    Defined for rho_l > 2g and rho_{l+1} = (i,j,k) with k >= m, excluding
    (0,0,k) with k in [m, 2m).
    """
    m = _m(n)
    g = genus_q2(n)
    t = triple_of(rho_next, n)
    prev = rho_next - 1
    while prev >= 0 and not is_nongap(prev, n):
        prev -= 1
    if prev <= 2 * g:
        raise PreconditionViolated(f"rho_l={prev} is not > 2g={2 * g}")
    if t.k < m or (t.i == 0 and t.j == 0 and t.k < 2 * m):
        raise PreconditionViolated(f"triple {tuple(t)} outside the covered range")
    # (0,1,2m-1) is the exception: there rho-2g+1 = (1,3,0) is a nongap
    return t.i == 0 and t.j == 1 and m <= t.k < 2 * m - 1


class AuditRow(NamedTuple):
    l: int
    rho_next: int
    triple: Triple
    case: str
    closed: int | None
    oracle: int


def audit(n: int, s: Semigroup | None = None, printed_0_3: bool = False) -> list[AuditRow]:
    """Closed form against brute force for every l >= 1 with rho_{l+1} <= 4g."""
    p = curve_params(2, n)
    s = s or Semigroup([8, 2 * p.m, 2**n + 1])
    rows = []
    l = 1
    while s.element(l + 1) <= 4 * p.g:
        rho = s.element(l + 1)
        t = triple_of(rho, n)
        rows.append(AuditRow(l, rho, t, classify(t, n), dord_closed(t, n, printed_0_3), s.dord(l)))
        l += 1
    return rows


def disagreements(rows: list[AuditRow]) -> list[AuditRow]:
    return [r for r in rows if r.closed is not None and r.closed != r.oracle]
