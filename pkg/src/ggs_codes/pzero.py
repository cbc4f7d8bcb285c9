"""The Weierstrass semigroup at P_0 = (0, 0, 0).

Every nongap below 2g is written -t - r*m + m*(q+1)*s and the seven
families L1..L7 enumerate the admissible (s, r, t).  An independent route
(``p0_oracle``) collects pole orders of y^r z^t / x^s and closes them under
addition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .curve import curve_params
from .errors import ConsistencyFailure
from .semigroup import Semigroup


def _a(q: int, m: int) -> Fraction:
    return Fraction(m - q * q + q - 1, q**3)


def _t_top(q: int, m: int, s: int, r: int) -> int:
    """Upper end of the common t-range; may be negative (empty range)."""
    return floor(((s - r) * q + s) * _a(q, m) + s - r)


@dataclass
class LSets:
    q: int
    n: int
    m: int
    g: int
    sets: list[list[int]]
    union: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.union:
            self.union = sorted(set().union(*self.sets))

    def sizes(self) -> list[int]:
        return [len(x) for x in self.sets]

    def disjoint(self) -> bool:
        return sum(self.sizes()) == len(self.union)

    def to_dict(self) -> dict:
        d = {"q": self.q, "n": self.n, "m": self.m, "g": self.g}
        for i, x in enumerate(self.sets, 1):
            d[f"L{i}"] = x
        d["union"] = self.union
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def build_lsets(q: int, n: int) -> LSets:
    p = curve_params(q, n)
    m, g = p.m, p.g
    base = m * (q + 1)

    def val(s, r, t):
        return -t - r * m + base * s

    def common(s_lo, s_hi, r_range):
        out = []
        for s in range(s_lo, s_hi + 1):
            for r in r_range(s):
                for t in range(0, _t_top(q, m, s, r) + 1):
                    out.append(val(s, r, t))
        return out

    l1 = common(0, q, lambda s: range(0, s + 1))
    l2 = common(q + 1, q * q - q, lambda s: range(0, q + 1))
    l3 = [
        val(s, r, t)
        for s in range(q * q - q + 1, q * q - 1)
        for r in range(0, q + s - q * q)
        for t in range(m)
    ]
    l4 = common(q * q - q + 1, q * q - 2, lambda s: range(q + s - q * q, q + 1))
    top = base * (q * q - 1)
    l5 = [top - t for t in range(q**3, m)]
    l6 = [top - t - r * m for r in range(1, q - 1) for t in range(m)]
    l7 = [
        top - t - r * m
        for r in (q - 1, q)
        for t in range(0, _t_top(q, m, q * q - 1, r) + 1)
    ]
    sets = [sorted(x) for x in (l1, l2, l3, l4, l5, l6, l7)]
    return LSets(q, n, m, g, sets)


def lset_cardinalities(q: int, n: int) -> list[int]:
    """The seven closed-form sizes, evaluated exactly (may be negative or fractional
    outside the range where they are meant to apply; returned as Fraction then)."""
    p = curve_params(q, n)
    m = p.m
    a = _a(q, m)
    out = [
        Fraction(q**4 + 5 * q**3 + 8 * q**2 + 4 * q, 6) * a + Fraction((q + 1) * (q + 2) * (q + 3), 6),
        Fraction(q**6 - q**5 - q**4 - 3 * q**2 - 2 * q, 2) * a + Fraction(q**5 - 2 * q**4 + 2 * q**3 - q**2 - 6 * q, 2),
        Fraction(m * (q - 2) * (q - 1), 2),
        Fraction(3 * q**5 + 2 * q**4 - 20 * q**3 + q**2 + 8 * q + 12, 6) * a
        + Fraction(3 * q**4 - q**3 - 18 * q**2 + 22 * q - 12, 6),
        Fraction(m - q**3),
        Fraction((q - 2) * m),
        a * (2 * q**3 - q - 2) + 2 * q * q - 2 * q + 1,
    ]
    return [int(x) if x.denominator == 1 else x for x in out]


def _closed_upto(elems: set[int], top: int) -> bool:
    srt = sorted(elems)
    for i, a in enumerate(srt):
        for b in srt[i:]:
            if a + b > top:
                break
            if a + b not in elems:
                return False
    return True


def h_p0(q: int, n: int, lsets: LSets | None = None, clip: bool = False) -> Semigroup:
    """H(P_0) from the L-sets, with every integer >= 2g declared a nongap.

    When m < q^3 (e.g. q=3, n=3) the top families L6, L7 reach past 2g-1;
    ``clip=True`` drops those values instead of raising.
    """
    ls = lsets or build_lsets(q, n)
    g = ls.g
    elems = set(ls.union)
    if clip:
        elems = {x for x in elems if 0 <= x <= 2 * g - 1}
    if any(not 0 <= x <= 2 * g - 1 for x in elems):
        raise ConsistencyFailure("L-set element outside [0, 2g-1]")
    if len(elems) != g:
        raise ConsistencyFailure(f"|union| = {len(elems)}, expected g = {g}")
    if not _closed_upto(elems, 2 * g - 1):
        raise ConsistencyFailure("union is not closed under addition below 2g")
    member = [x in elems for x in range(2 * g)]
    return Semigroup.from_membership(member)


def p0_oracle(q: int, n: int) -> list[int]:
    """Nongaps in [0, 2g-1] from pole orders of y^r z^t / x^s, closed under addition."""
    p = curve_params(q, n)
    m, g = p.m, p.g
    top = 2 * g - 1
    seeds = set()
    for s in range(q * q):
        for r in range(s + 1):
            for t in range((s * m * (q + 1) - r * q * m) // q**3 + 1):
                v = m * (q + 1) * s - m * r - t
                if 0 <= v <= top:
                    seeds.add(v)
    have = bytearray(top + 1)
    have[0] = 1
    gens = sorted(x for x in seeds if x > 0)
    for v in range(1, top + 1):
        have[v] = any(v >= a and have[v - a] for a in gens)
    return [v for v in range(top + 1) if have[v]]
