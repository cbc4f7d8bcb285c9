"""Numerical semigroups and brute-force Feng-Rao quantities.

Indexing of nongaps is 1-based: rho_1 = 0 < rho_2 < ...  The Feng-Rao
number nu_l counts ordered pairs of nongaps summing to rho_{l+1}, and the
order bound is d_ORD(l) = min{nu_m : m >= l}.  Everything here is computed
by direct enumeration and serves as the reference for the closed forms in
:mod:`ggs_codes.qtwo`.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import ConsistencyFailure, GcdNotOne, IndexBeyondBound, NotAnElement


class Semigroup:
    """A numerical semigroup given by generators.

    Membership is stored as a boolean array up to ``bound``; the bound is
    extended until the conductor is certified (a run of ``min(generators)``
    consecutive elements) and ``bound >= 2 * conductor``.  Beyond the bound
    every integer is an element, so all queries are total.
    """

    def __init__(self, generators: Iterable[int], bound: int = 0):
        gens = tuple(sorted(set(int(a) for a in generators)))
        if not gens or any(a <= 0 for a in gens):
            raise ValueError("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise GcdNotOne(f"gcd{gens} != 1")
        self.generators = gens
        bound = max(bound, 2 * gens[-1], 4)
        while True:
            mem = _generate(gens, bound)
            gaps = np.flatnonzero(~mem)
            frob = int(gaps[-1]) if len(gaps) else -1
            if bound - frob >= gens[0] and bound >= 2 * (frob + 1):
                break
            bound *= 2
        self.bound = bound
        self._mem = mem
        self.conductor = frob + 1
        self.genus = len(gaps)
        self.gaps = gaps.tolist()
        self._small = np.flatnonzero(mem[: self.conductor]).tolist()
        self._nu_cache: dict[int, int] = {}

    def __repr__(self) -> str:
        return f"Semigroup{self.generators}"

    # -- membership and indexing

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return bool(self._mem[x])

    def membership(self, upto: int) -> np.ndarray:
        """Boolean array ``a[x] = x in S`` for 0 <= x <= upto."""
        if upto <= self.bound:
            return self._mem[: upto + 1]
        out = np.ones(upto + 1, dtype=bool)
        out[: self.bound + 1] = self._mem
        return out

    @property
    def elements(self) -> list[int]:
        """All elements up to the stored bound."""
        return np.flatnonzero(self._mem).tolist()

    def elements_upto(self, b: int) -> list[int]:
        return np.flatnonzero(self.membership(b)).tolist()

    def element(self, l: int) -> int:
        """rho_l, 1-based."""
        if l < 1:
            raise IndexBeyondBound(f"index {l} < 1")
        if l <= len(self._small):
            return self._small[l - 1]
        return self.conductor + (l - 1 - len(self._small))

    def index(self, rho: int) -> int:
        """l with rho_l = rho."""
        if rho not in self:
            raise NotAnElement(f"{rho} is a gap")
        if rho >= self.conductor:
            return len(self._small) + 1 + rho - self.conductor
        return bisect_left(self._small, rho) + 1

    def count_upto(self, x: int) -> int:
        """Number of elements <= x (0 when x < 0)."""
        if x < 0:
            return 0
        if x >= self.conductor:
            return len(self._small) + x - self.conductor + 1
        return bisect_left(self._small, x + 1)

    def largest_upto(self, x: int) -> int:
        """Largest element <= x."""
        if x < 0:
            raise NotAnElement("no element below 0")
        if x >= self.conductor:
            return x
        return self._small[bisect_left(self._small, x + 1) - 1]

    def smallest_from(self, x: int) -> int:
        """Smallest element >= x."""
        x = max(x, 0)
        if x >= self.conductor:
            return x
        i = bisect_left(self._small, x)
        return self._small[i] if i < len(self._small) else self.conductor

    # -- Feng-Rao

    def pairs(self, value: int) -> int:
        """Ordered pairs (a, b) of elements with a + b = value."""
        if value < 0:
            return 0
        mem = self.membership(value)
        return int(np.count_nonzero(mem & mem[::-1]))

    def nu(self, l: int) -> int:
        if l < 0:
            raise IndexBeyondBound(f"nu index {l} < 0")
        v = self._nu_cache.get(l)
        if v is None:
            v = self._nu_cache[l] = self.pairs(self.element(l + 1))
        return v

    def dord(self, l: int) -> int:
        """min{nu_m : m >= l}, cut off once m + 1 - g reaches the running minimum."""
        best = self.nu(l)
        m = l + 1
        while m + 1 - self.genus < best:
            best = min(best, self.nu(m))
            m += 1
        return best

    # -- structure

    def is_symmetric(self) -> bool:
        g = self.genus
        sym = (2 * g - 1) not in self
        paired = all((x in self) != ((2 * g - 1 - x) in self) for x in range(0, 2 * g))
        if sym != paired:
            raise ConsistencyFailure("2g-1 test and pairing test disagree")
        return sym

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "genus": self.genus,
            "conductor": self.conductor,
            "elements_upto": self.bound,
            "elements": self.elements,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_membership(cls, member: Sequence[bool]) -> "Semigroup":
        """Semigroup whose elements below ``len(member)`` are given and all
        larger integers are elements.  The set must be additively closed."""
        mem = np.asarray(member, dtype=bool)
        limit = len(mem)

        def has(x: int) -> bool:
            return x >= limit or bool(mem[x])

        gens = minimal_generators(has, limit + max(1, _first_positive(mem, limit)))
        sg = cls(gens)
        if any(has(x) != (x in sg) for x in range(limit + sg.generators[0] + 1)):
            raise ConsistencyFailure("element set is not a numerical semigroup")
        return sg


def _first_positive(mem: np.ndarray, limit: int) -> int:
    nz = np.flatnonzero(mem[1:])
    return int(nz[0]) + 1 if len(nz) else limit


def _generate(gens: Sequence[int], bound: int) -> np.ndarray:
    mem = bytearray(bound + 1)
    mem[0] = 1
    for a in gens:
        for v in range(a, bound + 1):
            if mem[v - a]:
                mem[v] = 1
    return np.frombuffer(bytes(mem), dtype=np.uint8).astype(bool)


def minimal_generators(has, limit: int) -> list[int]:
    """Elements in (0, limit] that are not a sum of two positive elements."""
    elems = [x for x in range(1, limit + 1) if has(x)]
    out = []
    for x in elems:
        if not any(has(x - a) for a in elems if a < x and x - a > 0 and a <= x - a):
            out.append(x)
    return out


def sg_generate(generators: Iterable[int], bound: int = 0) -> Semigroup:
    return Semigroup(generators, bound)


def sg_nu(s: Semigroup, l: int) -> int:
    return s.nu(l)


def sg_dord(s: Semigroup, l: int) -> int:
    return s.dord(l)


def sg_is_symmetric(s: Semigroup) -> bool:
    return s.is_symmetric()


def sg_is_telescopic(ordered: Sequence[int]) -> bool:
    """Check a_i/d_i in <a_1/d_{i-1}, ..., a_{i-1}/d_{i-1}> for i >= 2,
    where d_i = gcd(a_1, ..., a_i), in the given order."""
    a = [int(x) for x in ordered]
    if reduce(gcd, a) != 1:
        raise GcdNotOne(f"gcd{tuple(a)} != 1")
    d_prev = a[0]
    for i in range(1, len(a)):
        d_i = gcd(d_prev, a[i])
        prefix = Semigroup([x // d_prev for x in a[:i]])
        if (a[i] // d_i) not in prefix:
            return False
        d_prev = d_i
    return True


def sg_index_value(s: Semigroup, direction: str, arg: int) -> int:
    """``direction`` is "index_to_value" (l -> rho_l) or "value_to_index"."""
    if direction == "index_to_value":
        return s.element(arg)
    if direction == "value_to_index":
        return s.index(arg)
    raise ValueError(f"unknown direction {direction!r}")
