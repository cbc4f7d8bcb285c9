"""The GGS(q, n) curve  x^q + x = y^(q+1),  y^(q^2) - y = z^m.

Affine rational points over GF(q^(2n)) are stored column-wise as integer
encodings (see :mod:`ggs_codes.ffield`).  The single place at infinity is
never given coordinates; it is the :data:`INFINITY` marker.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .errors import CountMismatch, EvenN, InfinitePoint, OutOfRange, QNotPrimePower
from .ffield import Field, FieldElement, is_prime, make_field, mth_root_logs


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, h) with q = p^h, or raise QNotPrimePower."""
    if q < 2:
        raise QNotPrimePower(f"q={q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    if not is_prime(p):
        raise QNotPrimePower(f"q={q}")
    h, r = 0, q
    while r % p == 0:
        r //= p
        h += 1
    if r != 1:
        raise QNotPrimePower(f"q={q} is not a prime power")
    return p, h


@dataclass(frozen=True)
class CurveParams:
    q: int
    n: int
    p: int
    h: int
    m: int
    g: int
    n_affine: int
    n_total: int

    @property
    def field_degree(self) -> int:
        """k with GF(q^(2n)) = GF(p^k)."""
        return 2 * self.n * self.h

    @property
    def pole_x(self) -> int:
        return self.q**self.n + 1

    @property
    def pole_y(self) -> int:
        return self.m * self.q

    @property
    def pole_z(self) -> int:
        return self.q**3

    def big_field(self) -> Field:
        return make_field(self.p, self.field_degree)

    def small_field(self) -> Field:
        """GF(q^2)."""
        return make_field(self.p, 2 * self.h)


def curve_params(q: int, n: int) -> CurveParams:
    p, h = prime_power(q)
    if n % 2 == 0:
        raise EvenN(f"n={n} must be odd")
    if n < 3:
        raise OutOfRange(f"n={n} must be at least 3")
    m, rem = divmod(q**n + 1, q + 1)
    assert rem == 0
    g = (q - 1) * (q ** (n + 1) + q**n - q**2) // 2
    n_affine = q ** (2 * n + 2) - q ** (n + 3) + q ** (n + 2)
    n_total = q ** (2 * n) + 1 + 2 * g * q**n
    if n_total != n_affine + 1:
        raise CountMismatch(f"maximality count {n_total} != {n_affine} + 1")
    return CurveParams(q, n, p, h, m, g, n_affine, n_total)


class Monomial(NamedTuple):
    """x^a y^b z^c."""

    a: int
    b: int
    c: int


class _Infinity:
    kind = "infinity"

    def __repr__(self) -> str:
        return "P_inf"


INFINITY = _Infinity()


@dataclass(frozen=True)
class CurvePoint:
    x: FieldElement
    y: FieldElement
    z: FieldElement
    kind: str = "affine"


class PointSet:
    """Affine rational points in canonical order, as parallel arrays."""

    def __init__(self, params: CurveParams, field: Field, x: np.ndarray, y: np.ndarray, z: np.ndarray):
        self.params = params
        self.field = field
        self.x = x
        self.y = y
        self.z = z
        keys = (x * field.size + y) * field.size + z
        self._sorter = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._sorter]

    def __len__(self) -> int:
        return len(self.x)

    def __getitem__(self, i: int) -> CurvePoint:
        f = self.field
        return CurvePoint(f(int(self.x[i])), f(int(self.y[i])), f(int(self.z[i])))

    def __iter__(self) -> Iterator[CurvePoint]:
        return (self[i] for i in range(len(self)))

    def index_of(self, x, y, z) -> np.ndarray:
        """Positions of the given coordinate arrays; -1 where not a point."""
        size = self.field.size
        keys = (np.asarray(x, dtype=np.int64) * size + np.asarray(y, dtype=np.int64)) * size + np.asarray(z, dtype=np.int64)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.clip(pos, 0, len(self._sorted_keys) - 1)
        found = self._sorted_keys[pos] == keys
        return np.where(found, self._sorter[pos], -1)

    def logs(self) -> np.ndarray:
        """(N, 3) array of discrete logs of x, y, z; -1 encodes zero."""
        f = self.field
        return np.stack([f.vlog(self.x), f.vlog(self.y), f.vlog(self.z)], axis=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x_log", "y_log", "z_log"])
        w.writerows(self.logs().tolist())
        return buf.getvalue()


def _log_key(field: Field, vals) -> list[int]:
    return [field.log_of(int(v)) for v in vals]


def enumerate_points(params: CurveParams, field: Field | None = None) -> PointSet:
    """All affine GF(q^(2n))-rational points, sorted by (log y, log x, log z).

    For each y the x-solutions are read off precomputed fibers of the additive
    map x -> x^q + x, and the z-solutions are m-th roots of y^(q^2) - y.
    """
    f = field or params.big_field()
    if f.size != params.q ** (2 * params.n):
        raise CountMismatch(f"{f} is not GF({params.q}^{2 * params.n})")
    q, m = params.q, params.m
    vals = np.arange(f.size, dtype=np.int64)
    trace_like = f.vadd(f.vpow(vals, q), vals)
    logs = f.vlog(vals)
    order = np.lexsort((logs, trace_like))
    sorted_keys = trace_like[order]
    starts = np.searchsorted(sorted_keys, vals, side="left")
    ends = np.searchsorted(sorted_keys, vals, side="right")
    fibers = [order[s:e].tolist() for s, e in zip(starts.tolist(), ends.tolist())]

    y_order = [0] + f.exp[: f.order].tolist()
    ys_c1 = f.vpow(np.array(y_order), q + 1).tolist()
    ys_c2 = f.vsub(f.vpow(np.array(y_order), q * q), np.array(y_order)).tolist()

    xs, ysv, zs = [], [], []
    for y, c1, c2 in zip(y_order, ys_c1, ys_c2):
        fib = fibers[c1]
        if not fib:
            continue
        if c2 == 0:
            roots = [0]
        else:
            roots = [f.power_of_gen(e) for e in sorted(mth_root_logs(f, f.log_of(c2), m))]
        for x in fib:
            for z in roots:
                xs.append(x)
                ysv.append(y)
                zs.append(z)
    pts = PointSet(params, f, np.array(xs, dtype=np.int64), np.array(ysv, dtype=np.int64), np.array(zs, dtype=np.int64))
    if len(pts) != params.n_affine:
        raise CountMismatch(f"found {len(pts)} affine points, expected {params.n_affine}")
    return pts


def on_curve(params: CurveParams, field: Field, x, y, z) -> np.ndarray:
    """Elementwise check of both defining equations."""
    q, m = params.q, params.m
    eq1 = field.vadd(field.vpow(x, q), x) == field.vpow(y, q + 1)
    eq2 = field.vsub(field.vpow(y, q * q), y) == field.vpow(z, m)
    return eq1 & eq2


def eval_monomial(pt, mono: Monomial) -> FieldElement:
    if pt is INFINITY or getattr(pt, "kind", "affine") != "affine":
        raise InfinitePoint("monomials are not evaluated at P_inf")
    a, b, c = mono
    return pt.x**a * pt.y**b * pt.z**c


def eval_monomial_all(points: PointSet, mono: Monomial) -> np.ndarray:
    """Vector (f(P_1), ..., f(P_N)) for f = x^a y^b z^c."""
    f = points.field
    a, b, c = mono
    out = f.vmul(f.vpow(points.x, a), f.vpow(points.y, b))
    return f.vmul(out, f.vpow(points.z, c))


def pole_order_infinity(mono: Monomial, params: CurveParams) -> int:
    a, b, c = mono
    return a * params.pole_x + b * params.pole_y + c * params.pole_z


def valuation_p0(r: int, t: int, s: int, params: CurveParams) -> tuple[int, int]:
    """(v_P0, v_Pinf) of y^r z^t / x^s."""
    q, m = params.q, params.m
    return m * r + t - m * (q + 1) * s, m * (q + 1) * s - m * q * r - t * q**3
