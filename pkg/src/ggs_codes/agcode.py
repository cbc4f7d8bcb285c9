"""One-point evaluation codes C(D, rho P_inf) and their duals C_l(P).

Indexing follows the semigroup module: rho_1 = 0, and C_l(P) is the dual of
the evaluation code of L(rho_l P), so its dimension is N - l.  Designed
quantities for the duals use the order bound of the relevant Weierstrass
semigroup; by default that is the brute-force :meth:`Semigroup.dord`.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .curve import CurveParams, Monomial, PointSet, eval_monomial_all, pole_order_infinity
from .errors import IndexBeyondBound, RankDeficient
from .linalg import RowSpace, nullspace_sampler, rank
from .semigroup import Semigroup

DEFAULT_SEED = 42


def semigroup_infinity(params: CurveParams) -> Semigroup:
    return Semigroup([params.pole_z, params.pole_y, params.pole_x])


def rr_basis_infinity(l: int, params: CurveParams) -> list[Monomial]:
    """Monomials x^a y^b z^c, b <= q, c < m, with pole order <= l, sorted by pole order."""
    q, m = params.q, params.m
    out = []
    for b in range(q + 1):
        for c in range(m):
            base = b * params.pole_y + c * params.pole_z
            if base > l:
                break
            for a in range((l - base) // params.pole_x + 1):
                out.append(Monomial(a, b, c))
    out.sort(key=lambda mono: pole_order_infinity(mono, params))
    return out


@dataclass
class EvalCode:
    params: CurveParams
    l: int
    requested: int
    basis: list[Monomial]
    matrix: np.ndarray = field(repr=False)
    k: int

    @property
    def length(self) -> int:
        return self.matrix.shape[1]

    @property
    def designed_distance(self) -> int:
        """Goppa bound N - l of the primal code."""
        return self.length - self.l

    def generator_logs(self) -> np.ndarray:
        """Generator matrix as discrete logs (-1 for zero), little-endian int32."""
        f = self.params.big_field()
        return f.vlog(self.matrix).astype("<i4")

    def generator_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.generator_logs().tolist())
        return buf.getvalue()


def evaluation_matrix(basis: Sequence[Monomial], points: PointSet) -> np.ndarray:
    if not basis:
        return np.zeros((0, len(points)), dtype=np.int64)
    return np.stack([eval_monomial_all(points, mono) for mono in basis])


def build_code(l: int, points: PointSet, params: CurveParams | None = None, s: Semigroup | None = None) -> EvalCode:
    """Evaluation code of L(l P_inf) on the affine points.

    A gap ``l`` is lowered to the largest nongap below it; the request is
    kept in ``requested``.
    """
    params = params or points.params
    n_pts = len(points)
    if l >= n_pts:
        raise IndexBeyondBound(f"l={l} must be below N={n_pts}")
    s = s or semigroup_infinity(params)
    rho = s.largest_upto(l)
    basis = rr_basis_infinity(rho, params)
    mat = evaluation_matrix(basis, points)
    k = rank(points.field, mat)
    if k != len(basis):
        raise RankDeficient(f"rank {k} < {len(basis)} monomials at l={rho}")
    return EvalCode(params, rho, l, basis, mat, k)


def dimension_sweep(lmax: int, points: PointSet, params: CurveParams | None = None) -> dict[int, int]:
    """rank of the evaluation code for every nongap l <= lmax.

    Monomials are added in pole order to one growing row space, so each
    prefix is the basis of L(l P_inf).
    """
    params = params or points.params
    basis = rr_basis_infinity(lmax, params)
    rs = RowSpace(points.field, len(points))
    out = {}
    for mono in basis:
        rs.add(eval_monomial_all(points, mono))
        out[pole_order_infinity(mono, params)] = rs.rank
    return out


def containment(l1: int, l2: int, points: PointSet, params: CurveParams | None = None) -> bool:
    """Whether C(D, l1 P_inf) lies inside C(D, l2 P_inf), checked by row reduction."""
    params = params or points.params
    big = evaluation_matrix(rr_basis_infinity(l2, params), points)
    rs = RowSpace(points.field, len(points))
    for row in big:
        rs.add(row)
    return all(rs.contains(eval_monomial_all(points, mono)) for mono in rr_basis_infinity(l1, params))


# ---------- dual parameters


@dataclass(frozen=True)
class DualCodeParams:
    l: int
    rho: int
    n: int
    k_dual: int
    d_ord: int
    goppa: int
    delta: int
    Delta: Fraction

    def as_row(self) -> list:
        return [self.l, self.rho, self.k_dual, self.d_ord, self.delta, f"{self.Delta.numerator}/{self.Delta.denominator}"]


def dual_params(
    l: int,
    s: Semigroup,
    n_points: int,
    dord: Callable[[int], int] | None = None,
) -> DualCodeParams:
    """Parameters of C_l(P) for the semigroup ``s`` at P and length ``n_points``."""
    if l < 1:
        raise IndexBeyondBound(f"l={l} < 1")
    rho = s.element(l)
    if rho >= n_points:
        raise IndexBeyondBound(f"rho_l={rho} not below N={n_points}")
    d = (dord or s.dord)(l)
    k_dual = n_points - l
    delta = n_points + 1 - k_dual - d
    return DualCodeParams(l, rho, n_points, k_dual, d, rho - 2 * s.genus + 2, delta, Fraction(delta, n_points))


def weight_falsification(
    code: EvalCode,
    samples: int = 1000,
    seed: int = DEFAULT_SEED,
    max_support: int = 8,
) -> int:
    """Minimum weight over random nonzero codewords of the dual of ``code``."""
    rng = np.random.default_rng(seed)
    draw = nullspace_sampler(code.params.big_field(), code.matrix, rng, max_support)
    best = code.length
    for _ in range(samples):
        c = draw()
        best = min(best, int(np.count_nonzero(c)))
    return best


# ---------- tables

TABLE_HEADER = ["l_index", "rho", "k_dual", "d_ord", "delta", "Delta"]
COMPARE_HEADER = ["l0", "linf", "delta_inf_minus_delta_0"]


def emit_table(ls: Iterable[int], s: Semigroup, n_points: int) -> list[DualCodeParams]:
    return [dual_params(l, s, n_points) for l in ls]


@dataclass(frozen=True)
class CompareRow:
    l0: int
    linf: int
    diff: int


def compare_table(pairs: Iterable[tuple[int, int]], s0: Semigroup, sinf: Semigroup, n_points: int) -> list[CompareRow]:
    out = []
    for l0, linf in pairs:
        d0 = dual_params(l0, s0, n_points).delta
        dinf = dual_params(linf, sinf, n_points).delta
        out.append(CompareRow(l0, linf, dinf - d0))
    return out


def better_pairs(s0: Semigroup, sinf: Semigroup, n_points: int, lmax: int) -> list[CompareRow]:
    """Pairs (l0, linf), linf in {l0, l0+1}, where the P_0 dual has dimension and
    order bound at least those at P_inf and a strictly smaller defect."""
    out = []
    for l0 in range(1, lmax + 1):
        a = dual_params(l0, s0, n_points)
        for linf in (l0, l0 + 1):
            b = dual_params(linf, sinf, n_points)
            if a.k_dual >= b.k_dual and a.d_ord >= b.d_ord and a.delta < b.delta:
                out.append(CompareRow(l0, linf, b.delta - a.delta))
    return out


def table_csv(rows: Sequence[DualCodeParams]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    w.writerows(r.as_row() for r in rows)
    return buf.getvalue()


def compare_csv(rows: Sequence[CompareRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COMPARE_HEADER)
    w.writerows([r.l0, r.linf, r.diff] for r in rows)
    return buf.getvalue()
