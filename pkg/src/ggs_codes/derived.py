"""Parameter certificates for CSS quantum codes and unit-memory convolutional
codes built from one-point codes at P_inf.

Nothing here builds stabilizers or encoders; each function checks the
hypotheses of the construction it applies (hard errors) and returns the
resulting parameters together with the list of checks performed.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from .curve import CurveParams
from .errors import HypothesisViolated, TripleMismatch
from .semigroup import Semigroup


@dataclass
class QuantumParams:
    family: str
    q: int
    n: int
    N: int
    k: int
    D_lower: int
    provenance: str
    hypotheses: list[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def delta_Q(self) -> int:
        return self.N - self.k - 2 * self.D_lower + 2

    @property
    def Delta_Q(self) -> Fraction:
        return Fraction(self.delta_Q, self.N)

    @property
    def bound_exceeds_singleton(self) -> bool:
        return self.delta_Q < 0

    def label(self) -> str:
        return f"[[{self.N},{self.k},D>={self.D_lower}]]"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["delta_Q"] = self.delta_Q
        d["Delta_Q"] = f"{self.Delta_Q.numerator}/{self.Delta_Q.denominator}"
        d["bound_exceeds_singleton"] = self.bound_exceeds_singleton
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass
class ConvolutionalParams:
    q: int
    n: int
    N: int
    k_conv: int
    gamma: int
    memory: int
    df_lower: int
    provenance: str
    hypotheses: list[dict] = field(default_factory=list)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.N, self.k_conv, self.gamma, self.memory, self.df_lower)

    def label(self) -> str:
        return f"({self.N},{self.k_conv},{self.gamma};{self.memory},df>={self.df_lower})"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check(checks: list[tuple[str, bool]]) -> list[dict]:
    out = [{"name": name, "pass": bool(ok)} for name, ok in checks]
    for name, ok in checks:
        if not ok:
            raise HypothesisViolated(name)
    return out


def css_two_point(a: int, b: int, params: CurveParams) -> QuantumParams:
    """CSS code from G1 = a P_inf inside G2 = b P_inf."""
    g, N = params.g, params.n_affine
    hyp = _check([(f"2g-2 < a ({2 * g - 2} < {a})", 2 * g - 2 < a), (f"a < b ({a} < {b})", a < b), (f"b < N ({b} < {N})", b < N)])
    d = min(N - b, a - 2 * g + 2)
    return QuantumParams("two_point", params.q, params.n, N, b - a, d, "general t-point CSS, t=1", hyp)


def css_family_t1(l: int, s: int, params: CurveParams) -> QuantumParams:
    """[[N, s, D >= l+1-g]] from duals C_{l+s} inside C_l, l an index."""
    g, N = params.g, params.n_affine
    hyp = _check(
        [
            (f"l >= 3g-1 ({l} >= {3 * g - 1})", l >= 3 * g - 1),
            (f"l <= N-g ({l} <= {N - g})", l <= N - g),
            (f"s >= 1 ({s})", s >= 1),
            (f"s <= N-2l ({s} <= {N - 2 * l})", s <= N - 2 * l),
        ]
    )
    d_ord = l + 1 - g
    d1 = N - l - s - g + 1
    return QuantumParams(
        "t1", params.q, params.n, N, s, d_ord, "dual one-point CSS, l >= 3g-1", hyp,
        {"d_ord": d_ord, "d1_lower": d1, "min_d_ord_d1": min(d_ord, d1)},
    )


def css_quant2(l: int, params: CurveParams) -> QuantumParams:
    """Maximal-dimension member s = N - 2l of :func:`css_family_t1`."""
    qp = css_family_t1(l, params.n_affine - 2 * l, params)
    qp.family = "quant2"
    return qp


def improved_bonus(k: int, m: int) -> int:
    if 8 * k < 9 * m - 11:
        return 5
    if 8 * k < 11 * m - 9:
        return 3
    return 1


def css_improved(l: int, s: int, params: CurveParams, sg: Semigroup | None = None) -> QuantumParams:
    """Bound l+1-g+{5,3,1} when rho_{l+1} = (0,1,k) with k in [m, 2m), q = 2."""
    from .qtwo import triple_of

    g, N, m = params.g, params.n_affine, params.m
    if params.q != 2:
        raise HypothesisViolated("q = 2", f"q={params.q}")
    sg = sg or Semigroup([params.pole_z, params.pole_y, params.pole_x])
    t = triple_of(sg.element(l + 1), params.n)
    if not (t.i == 0 and t.j == 1 and m <= t.k < 2 * m):
        raise TripleMismatch(f"rho_(l+1) = {tuple(t)} is not (0,1,k) with k in [{m},{2 * m})")
    hyp = _check(
        [
            (f"l >= g ({l} >= {g})", l >= g),
            (f"l <= 3g-1 ({l} <= {3 * g - 1})", l <= 3 * g - 1),
            (f"s >= 1 ({s})", s >= 1),
            (f"s <= N-2l-5 ({s} <= {N - 2 * l - 5})", s <= N - 2 * l - 5),
        ]
    )
    bonus = improved_bonus(t.k, m)
    return QuantumParams(
        "improved", params.q, params.n, N, s, l + 1 - g + bonus, "dual one-point CSS with exact order bound", hyp,
        {"triple": list(t), "bonus": bonus},
    )


def verify_css_nesting(l: int, l_plus_s: int, points, sg: Semigroup | None = None) -> bool:
    """C_{l+s} inside C_l, checked as C(D, rho_l P) inside C(D, rho_{l+s} P)."""
    from .agcode import containment

    params = points.params
    sg = sg or Semigroup([params.pole_z, params.pole_y, params.pole_x])
    return containment(sg.element(l), sg.element(l_plus_s), points, params)


def conv_params(
    rho: int,
    s: int,
    params: CurveParams,
    sg: Semigroup | None = None,
    dord: Callable[[int], int] | None = None,
) -> ConvolutionalParams:
    """(N, k-s, s; 1, d_f >= d_ORD(C_l)) for rho = rho_l, k = rho + 1 - g."""
    g, N = params.g, params.n_affine
    sg = sg or Semigroup([params.pole_z, params.pole_y, params.pole_x])
    k = rho + 1 - g
    hyp = _check(
        [
            (f"rho_l is a nongap ({rho})", rho in sg),
            (f"2g-2 < rho_l ({2 * g - 2} < {rho})", 2 * g - 2 < rho),
            (f"rho_l < N ({rho} < {N})", rho < N),
            (f"s >= 0 ({s})", s >= 0),
            (f"s <= k/2 ({s} <= {k}/2)", 2 * s <= k),
        ]
    )
    l = sg.index(rho)
    df = (dord or sg.dord)(l)
    prov = "unit-memory from dual one-point code"
    if l >= 3 * g:
        df = max(df, l + 1 - g)
        prov += "; l >= 3g tail"
    return ConvolutionalParams(params.q, params.n, N, k - s, s, 1, df, prov, hyp)
