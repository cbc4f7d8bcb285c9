"""Automorphisms of GGS(q, n) and their action on rational points.

The group is Q x| Sigma: translations

    Q_{a,b}: (x, y, z) -> (x + b^q y + a, y + b, z),   a^q + a = b^(q+1) in GF(q^2),

and the cyclic diagonal group generated by

    g: (x, y, z) -> (zeta^(q^n+1) x, zeta^m y, zeta z),

zeta of order (q^n+1)(q-1).  Both fix P_inf.  Point permutations are index
arrays over the canonical affine point order; P_inf gets index N when it
is included.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .curve import CurveParams, PointSet
from .errors import CountMismatch, HypothesisViolated, NotAPermutation, OrderCheckFailed
from .ffield import Field, make_embedding, prime_factors
from .linalg import RowSpace
from .semigroup import Semigroup


@dataclass
class CurveAut:
    """A curve automorphism fixing P_inf.

    ``kind`` is "translation" (uses a, b), "diagonal" (uses zeta, e) or
    "composite" (applies ``parts`` left to right).
    """

    kind: str
    field: Field
    params: CurveParams
    a: int = 0
    b: int = 0
    zeta: int = 1
    e: int = 0
    parts: list["CurveAut"] = field(default_factory=list)

    def __repr__(self) -> str:
        if self.kind == "translation":
            return f"Q(a={self.a}, b={self.b})"
        if self.kind == "diagonal":
            return f"g^{self.e}"
        return " * ".join(map(repr, self.parts))

    def apply_xyz(self, x, y, z):
        """Image of coordinate arrays."""
        f = self.field
        if self.kind == "translation":
            bq = f.pow(self.b, self.params.q)
            return f.vadd(f.vadd(x, f.vmul(y, bq)), self.a), f.vadd(y, self.b), np.asarray(z, dtype=np.int64)
        if self.kind == "diagonal":
            p = self.params
            zx = f.pow(self.zeta, self.e * p.pole_x)
            zy = f.pow(self.zeta, self.e * p.m)
            zz = f.pow(self.zeta, self.e)
            return f.vmul(x, zx), f.vmul(y, zy), f.vmul(z, zz)
        for part in self.parts:
            x, y, z = part.apply_xyz(x, y, z)
        return x, y, z

    def permutation(self, points: PointSet, with_infinity: bool = False) -> np.ndarray:
        """perm[i] = index of the image of point i; raises NotAPermutation."""
        x, y, z = self.apply_xyz(points.x, points.y, points.z)
        perm = points.index_of(x, y, z)
        if np.any(perm < 0):
            raise NotAPermutation(f"{self!r} maps a point off the curve")
        if len(np.unique(perm)) != len(perm):
            raise NotAPermutation(f"{self!r} is not injective on points")
        if with_infinity:
            perm = np.append(perm, len(points))
        return perm

    def then(self, other: "CurveAut") -> "CurveAut":
        """Apply self, then other."""
        parts = (self.parts if self.kind == "composite" else [self]) + (
            other.parts if other.kind == "composite" else [other]
        )
        return CurveAut("composite", self.field, self.params, parts=parts)

    def matrix_form(self) -> np.ndarray:
        """4x4 matrix acting on (x, y, z, 1) columns; translations and diagonals only."""
        f = self.field
        mat = np.zeros((4, 4), dtype=np.int64)
        if self.kind == "translation":
            np.fill_diagonal(mat, 1)
            mat[0, 1] = f.pow(self.b, self.params.q)
            mat[0, 3] = self.a
            mat[1, 3] = self.b
            return mat
        if self.kind == "diagonal":
            p = self.params
            mat[0, 0] = f.pow(self.zeta, self.e * p.pole_x)
            mat[1, 1] = f.pow(self.zeta, self.e * p.m)
            mat[2, 2] = f.pow(self.zeta, self.e)
            mat[3, 3] = 1
            return mat
        raise ValueError("composite automorphisms have no single stored matrix")


def apply_matrix(f: Field, mat: np.ndarray, x: int, y: int, z: int) -> tuple[int, int, int]:
    vec = [x, y, z, 1]
    out = []
    for i in range(4):
        acc = 0
        for j in range(4):
            acc = f.add(acc, f.mul(int(mat[i, j]), vec[j]))
        out.append(acc)
    if out[3] != 1:
        raise ValueError("matrix does not fix the affine chart")
    return out[0], out[1], out[2]


def q_group(params: CurveParams, field: Field | None = None) -> list[CurveAut]:
    """All q^3 translations Q_{a,b}, identity first."""
    big = field or params.big_field()
    small = params.small_field()
    emb = make_embedding(small, big)
    q = params.q
    out = []
    for b in range(small.size):
        rhs = small.pow(b, q + 1)
        for a in range(small.size):
            if small.add(small.pow(a, q), a) == rhs:
                out.append(CurveAut("translation", big, params, a=int(emb.table[a]), b=int(emb.table[b])))
    if len(out) != q**3:
        raise CountMismatch(f"{len(out)} translations, expected {q**3}")
    return out


def sigma_order(params: CurveParams) -> int:
    return (params.q**params.n + 1) * (params.q - 1)


def sigma_generator(params: CurveParams, field: Field | None = None) -> CurveAut:
    f = field or params.big_field()
    order = sigma_order(params)
    if f.order % order:
        raise OrderCheckFailed(f"{order} does not divide {f.order}")
    zeta = f.power_of_gen(f.order // order)
    if f.pow(zeta, order) != 1 or any(f.pow(zeta, order // r) == 1 for r in prime_factors(order)):
        raise OrderCheckFailed(f"zeta does not have order {order}")
    return CurveAut("diagonal", f, params, zeta=zeta, e=1)


def group_order(params: CurveParams) -> int:
    return params.q**3 * sigma_order(params)


def generators(params: CurveParams, field: Field | None = None) -> list[CurveAut]:
    """The q^3 translations followed by the diagonal generator."""
    f = field or params.big_field()
    return q_group(params, f) + [sigma_generator(params, f)]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        p = self.parent
        while p[i] != i:
            p[i] = p[p[i]]
            i = p[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


@dataclass
class OrbitReport:
    group_order: int
    orbit_sizes: list[int]
    labels: np.ndarray = field(repr=False)

    @property
    def short_orbits(self) -> list[int]:
        return sorted(s for s in self.orbit_sizes if s < self.group_order)

    def to_dict(self) -> dict:
        return {"group_order": self.group_order, "orbit_sizes": self.orbit_sizes, "short_orbits": self.short_orbits}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def orbits(gens: Sequence[CurveAut], points: PointSet) -> OrbitReport:
    """Orbits on the affine points plus P_inf (last index)."""
    n = len(points) + 1
    uf = _UnionFind(n)
    for g in gens:
        perm = g.permutation(points, with_infinity=True)
        for i, j in enumerate(perm.tolist()):
            uf.union(i, j)
    labels = np.array([uf.find(i) for i in range(n)])
    _, counts = np.unique(labels, return_counts=True)
    return OrbitReport(group_order(points.params), sorted(counts.tolist()), labels)


def group_elements(params: CurveParams, points: PointSet) -> list[np.ndarray]:
    """Every element of Q x| Sigma as a point permutation (meant for small cases such as q=2).

    The products Q_{a,b} then g^e are checked to be pairwise distinct and
    closed under right multiplication by the generators.
    """
    gens = generators(params, points.field)
    sigma = gens[-1]
    qs = [t.permutation(points) for t in gens[:-1]]
    s = sigma.permutation(points)
    powers = [np.arange(len(points))]
    for _ in range(sigma_order(params) - 1):
        powers.append(s[powers[-1]])
    if not np.array_equal(s[powers[-1]], powers[0]):
        raise OrderCheckFailed("g^|Sigma| is not the identity")
    # element "apply Q, then g^e": point i -> pw[qp[i]]
    elems = [pw[qp] for qp in qs for pw in powers]
    seen = {e.tobytes() for e in elems}
    if len(seen) != group_order(params):
        raise OrderCheckFailed(f"{len(seen)} distinct elements, expected {group_order(params)}")
    gen_perms = qs + [s]
    for e in elems:
        for gp in gen_perms:
            if gp[e].tobytes() not in seen:
                raise OrderCheckFailed("element set not closed under the generators")
    return elems


def code_aut_report(l: int, params: CurveParams, sg: Semigroup | None = None) -> tuple[int, list[dict]]:
    """Order of the automorphism group of C(D, l P_inf) and the hypotheses checked."""
    q, n = params.q, params.n
    sg = sg or Semigroup([params.pole_z, params.pole_y, params.pole_x])
    checks = [
        (f"l >= q^n+1 ({l} >= {q**n + 1})", l >= q**n + 1),
        (f"l <= q^(n+2)-q^3 ({l} <= {q ** (n + 2) - q**3})", l <= q ** (n + 2) - q**3),
        (f"l in H(P_inf) ({l})", l in sg),
        (f"l-1 in H(P_inf) ({l - 1})", (l - 1) in sg),
    ]
    report = [{"name": name, "pass": bool(ok)} for name, ok in checks]
    for name, ok in checks:
        if not ok:
            raise HypothesisViolated(name)
    order = group_order(params) * params.field_degree * (q ** (2 * n) - 1)
    return order, report


def code_aut_order(l: int, params: CurveParams, sg: Semigroup | None = None) -> int:
    return code_aut_report(l, params, sg)[0]


def permutation_preserves_code(sigma: CurveAut, code, points: PointSet) -> bool:
    """Whether permuting coordinates by ``sigma`` maps the code's row space into itself.

    Row f(P_1..P_N) goes to f(sigma(P_1)..sigma(P_N)), i.e. columns reindexed by
    the permutation.
    """
    perm = sigma.permutation(points)
    rs = RowSpace(points.field, len(points))
    for row in code.matrix:
        rs.add(row)
    return all(rs.contains(row[perm]) for row in code.matrix)


def identity(params: CurveParams, field: Field | None = None) -> CurveAut:
    f = field or params.big_field()
    return CurveAut("translation", f, params, a=0, b=0)


def orbit_report(params: CurveParams, points: PointSet, gens: Iterable[CurveAut] | None = None) -> OrbitReport:
    return orbits(list(gens) if gens is not None else generators(params, points.field), points)
