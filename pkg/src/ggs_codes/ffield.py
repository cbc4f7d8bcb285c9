"""Exact arithmetic in GF(p^k).

Elements are stored as integers ``v = c0 + c1*p + ... + c_{k-1}*p^{k-1}``
where ``c_i`` is the coefficient of ``T^i`` in GF(p)[T]/(f).  In
characteristic 2 this is the usual bit-vector encoding, so addition is XOR.

Every field carries eager log/antilog tables with respect to a fixed
multiplicative generator, which makes multiplication, inversion, powers and
m-th root extraction table lookups.  Bulk operations on ``numpy`` integer
arrays (``vadd``, ``vmul``, ...) are what the curve and code modules use.
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    FieldMismatch,
    HomomorphismCheckFailed,
    IncompatibleDegrees,
    InverseOfZero,
    NoGeneratorFound,
    NonPrimeP,
    ReducibleModulus,
)

MAX_FIELD_SIZE = 1 << 20

# Lexicographically first primitive modulus per (p, k), little-endian
# coefficients including the leading 1.  Frozen so that point orders and
# exported matrices are identical across runs; regenerate with
# ``first_primitive_modulus`` only when adding new entries.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 18): (1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 20): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 10): (2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (3, 12): (2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 1): (2, 1),
    (5, 2): (2, 1, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (7, 1): (2, 1),
    (7, 2): (3, 1, 1),
    (7, 6): (5, 1, 3, 0, 0, 0, 1),
}


# ---------- helpers on GF(p)[T]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by b over GF(p); b must have a nonzero leading coefficient."""
    r = [c % p for c in a]
    _trim(r)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(r) - 1 >= db and r:
        coef = r[-1] * inv_lead % p
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - coef * bc) % p
        _trim(r)
    return r


def _poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                prod[i + j] = (prod[i + j] + ac * bc) % p
    return _poly_mod(prod, f, p)


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _monic_polys(p: int, d: int) -> Iterable[list[int]]:
    for v in range(p**d):
        coeffs = []
        for _ in range(d):
            coeffs.append(v % p)
            v //= p
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..k//2."""
    k = len(modulus) - 1
    if k < 1 or modulus[-1] % p == 0:
        return False
    for d in range(1, k // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_mod(modulus, cand, p):
                return False
    return True


def _is_primitive(modulus: Sequence[int], p: int) -> bool:
    k = len(modulus) - 1
    order = p**k - 1
    if k == 1:
        # GF(p): the root of T - a is a, primitive iff a generates GF(p)^*
        a = (-modulus[0]) % p
        if a == 0:
            return False
        return all(pow(a, order // r, p) != 1 for r in prime_factors(order)) if order > 1 else a == 1
    t = [0, 1]
    return all(_poly_powmod(t, order // r, modulus, p) != [1] for r in prime_factors(order))


def first_primitive_modulus(p: int, k: int) -> tuple[int, ...]:
    """Deterministic search used to populate ``DEFAULT_MODULI``."""
    for low in range(p**k):
        coeffs = []
        v = low
        for _ in range(k):
            coeffs.append(v % p)
            v //= p
        cand = coeffs + [1]
        if coeffs[0] == 0 and k > 1:
            continue
        if is_irreducible(cand, p) and _is_primitive(cand, p):
            return tuple(cand)
    raise NoGeneratorFound(f"no primitive modulus for GF({p}^{k})")


# ---------- the field


class Field:
    """GF(p^k) as GF(p)[T]/(modulus) with eager log tables.

    Use :func:`make_field` rather than the constructor; it caches instances so
    that identical parameters share tables.
    """

    def __init__(self, p: int, k: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise NonPrimeP(f"p={p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if p**k > MAX_FIELD_SIZE:
            raise ValueError(f"GF({p}^{k}) exceeds the supported size {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, k)) or first_primitive_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1:
            raise ReducibleModulus(f"modulus has degree {len(modulus) - 1}, expected {k}")
        if modulus[-1] != 1:
            inv = pow(modulus[-1], -1, p)
            modulus = tuple(c * inv % p for c in modulus)
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")

        self.p = p
        self.k = k
        self.modulus = modulus
        self.size = p**k
        self.order = self.size - 1
        self._weights = np.array([p**i for i in range(k)], dtype=np.int64)
        if p != 2:
            vals = np.arange(self.size, dtype=np.int64)
            self._digits = np.stack([(vals // p**i) % p for i in range(k)], axis=1)
        else:
            self._digits = None
        self.generator = self._build_tables()

    # -- construction

    def _mul_slow(self, a: int, b: int) -> int:
        return self._from_digits(_poly_mulmod(self._to_digits(a), self._to_digits(b), self.modulus, self.p))

    def _to_digits(self, v: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(v % self.p)
            v //= self.p
        return _trim(out)

    def _from_digits(self, d: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(d)):
            v = v * self.p + c
        return v

    def _times_t(self, v: int) -> int:
        p, size = self.p, self.size
        if p == 2:
            v <<= 1
            if v & size:
                v ^= self._modulus_int
            return v
        v *= p
        top = v // size
        if not top:
            return v
        d = self._to_digits(v % size)
        d += [0] * (self.k - len(d))
        for i in range(self.k):
            d[i] = (d[i] - top * self.modulus[i]) % p
        return self._from_digits(d)

    def _build_tables(self) -> int:
        order = self.order
        self._modulus_int = self._from_digits(self.modulus)
        # T first: it generates whenever the modulus is primitive
        cands = ([self.p] if self.k > 1 else []) + [c for c in range(1, self.size) if c != self.p or self.k == 1]
        for cand in cands:
            step = self._times_t if (cand == self.p and self.k > 1) else (lambda v, c=cand: self._mul_slow(v, c))
            exp_list = []
            cur = 1
            ok = True
            for i in range(order):
                if i > 0 and cur == 1:
                    ok = False
                    break
                exp_list.append(cur)
                cur = step(cur)
            if not ok or cur != 1:
                continue
            exp = np.zeros(2 * order + 1, dtype=np.int64)
            exp[:order] = exp_list
            exp[order:2 * order] = exp[:order]
            exp[2 * order] = exp[0]
            log = np.full(self.size, -1, dtype=np.int64)
            log[exp[:order]] = np.arange(order, dtype=np.int64)
            self.exp = exp
            self.log = log
            self._exp_list = exp.tolist()
            self._log_list = log.tolist()
            return cand
        raise NoGeneratorFound(f"no element of order {order} in GF({self.p}^{self.k})")

    # -- identity

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    def to_json(self) -> str:
        return json.dumps({"p": self.p, "k": self.k, "modulus": list(self.modulus)})

    @classmethod
    def from_json(cls, text: str) -> "Field":
        d = json.loads(text)
        return make_field(d["p"], d["k"], d["modulus"])

    # -- element handles

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return (FieldElement(self, v) for v in range(self.size))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self.generator)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) > self.k:
            raise ValueError("too many coefficients")
        return FieldElement(self, self._from_digits([c % self.p for c in coeffs]))

    def to_coeffs(self, v: int) -> list[int]:
        d = self._to_digits(v)
        return d + [0] * (self.k - len(d))

    # -- scalar integer arithmetic

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return int(((self._digits[a] + self._digits[b]) % self.p) @ self._weights)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return int(((-self._digits[a]) % self.p) @ self._weights)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise InverseOfZero("zero has no inverse")
        return self._exp_list[(-self._log_list[a]) % self.order]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise InverseOfZero("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp_list[(self._log_list[a] * e) % self.order]

    def power_of_gen(self, e: int) -> int:
        return self._exp_list[e % self.order]

    def log_of(self, a: int) -> int:
        """Discrete log base the generator; -1 for zero."""
        return self._log_list[a]

    # -- vectorized arithmetic on integer arrays

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._weights

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        return ((-self._digits[a]) % self.p) @ self._weights

    def vsub(self, a, b) -> np.ndarray:
        if self.p == 2:
            return self.vadd(a, b)
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise InverseOfZero("zero has no inverse")
        return self.exp[(-self.log[a]) % self.order]

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        out = self.exp[(self.log[a] * e) % self.order]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def vsum(self, a, axis: int = 0) -> np.ndarray:
        """Field sum along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        return (self._digits[a].sum(axis=axis) % self.p) @ self._weights

    def outer_mul(self, col, row) -> np.ndarray:
        """Matrix ``col[i] * row[j]``."""
        col = np.asarray(col, dtype=np.int64)
        row = np.asarray(row, dtype=np.int64)
        out = self.exp[self.log[col][:, None] + self.log[row][None, :]]
        out[col == 0, :] = 0
        out[:, row == 0] = 0
        return out

    def vlog(self, a) -> np.ndarray:
        return self.log[np.asarray(a, dtype=np.int64)]


@lru_cache(maxsize=None)
def _cached_field(p: int, k: int, modulus: tuple[int, ...] | None) -> Field:
    return Field(p, k, modulus)


def make_field(p: int, k: int, modulus: Sequence[int] | None = None) -> Field:
    """Return GF(p^k), verified irreducible modulus and verified generator.

    Raises NonPrimeP, ReducibleModulus or NoGeneratorFound.
    """
    key = None if modulus is None else tuple(int(c) for c in modulus)
    if not is_prime(p):
        raise NonPrimeP(f"p={p} is not prime")
    return _cached_field(p, k, key)


class FieldElement:
    """A single element of a :class:`Field` with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        if not 0 <= value < field.size:
            raise ValueError(f"{value} is not an element encoding of {field}")
        self.field = field
        self.value = int(value)

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldMismatch(f"cannot combine {self.field} with {getattr(other, 'field', other)}")

    @property
    def coeffs(self) -> list[int]:
        return self.field.to_coeffs(self.value)

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(other.value)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def log(self) -> int:
        return self.field.log_of(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldElement) and other.field == self.field and other.value == self.value

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.k, self.value))

    def __repr__(self) -> str:
        if self.value == 0:
            return f"{self.field}(0)"
        return f"{self.field}(g^{self.log()})"


def arith(a: FieldElement, b: FieldElement | None, op: str, exponent: int | None = None) -> FieldElement:
    """Dispatch form of the element operations: add, sub, mul, inv, pow, neg."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if op == "pow":
        return a ** exponent
    raise ValueError(f"unknown operation {op!r}")


# ---------- subfield embedding


class Embedding:
    """A ring homomorphism GF(p^s) -> GF(p^t), s | t.

    ``image_of_generator`` is the image of ``source.generator``; ``table[v]``
    is the image of the element encoded by ``v``.
    """

    def __init__(self, source: Field, target: Field, image_of_generator: int, table: np.ndarray):
        self.source = source
        self.target = target
        self.image_of_generator = image_of_generator
        self.table = table

    def __call__(self, a: FieldElement) -> FieldElement:
        return embed(self, a)

    def image(self) -> np.ndarray:
        """Encodings of all embedded elements, indexed by source encoding."""
        return self.table


def _candidate_table(source: Field, target: Field, t_log: int) -> np.ndarray:
    table = np.zeros(source.size, dtype=np.int64)
    src_logs = source.log[1:]
    table[1:] = target.exp[(src_logs * t_log) % target.order]
    return table


def make_embedding(source: Field, target: Field) -> Embedding:
    """Map the source generator to an element of the same order in the target.

    Candidates ``G^(j*(|T|-1)/(|S|-1))`` with ``gcd(j, |S|-1) = 1`` are tried in
    increasing ``j`` until additivity holds on every pair of source elements.
    """
    if source.p != target.p or target.k % source.k != 0:
        raise IncompatibleDegrees(f"{source} does not embed in {target}")
    step = target.order // source.order
    vals = np.arange(source.size, dtype=np.int64)
    for j in range(1, source.order + 1):
        if gcd(j, source.order) != 1:
            continue
        table = _candidate_table(source, target, j * step)
        sums = source.vadd(vals[:, None], vals[None, :])
        lhs = table[sums]
        rhs = target.vadd(table[:, None], table[None, :])
        if np.array_equal(lhs, rhs):
            return Embedding(source, target, int(table[source.generator]), table)
    raise HomomorphismCheckFailed(f"no additive generator image for {source} -> {target}")


def embed(e: Embedding, a: FieldElement) -> FieldElement:
    if a.field != e.source:
        raise FieldMismatch(f"{a.field} is not the embedding source {e.source}")
    return FieldElement(e.target, int(e.table[a.value]))


# ---------- roots


def mth_root_logs(field: Field, log_c: int, m: int) -> list[int]:
    """Logs of all z with z^m = g^log_c (nonzero c)."""
    d = gcd(m, field.order)
    if log_c % d:
        return []
    sub = field.order // d
    x0 = (log_c // d) * pow(m // d, -1, sub) % sub if sub > 1 else 0
    return [x0 + i * sub for i in range(d)]


def mth_roots(c: FieldElement, m: int) -> set[FieldElement]:
    """All z with z^m = c.

    ``m`` need not divide the group order; only ``gcd(m, p^k - 1)`` matters.
    """
    if m <= 0:
        raise ValueError("m must be positive")
    f = c.field
    if c.value == 0:
        return {f.zero}
    return {FieldElement(f, f.power_of_gen(e)) for e in mth_root_logs(f, f.log_of(c.value), m)}
