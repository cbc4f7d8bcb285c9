from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ggs_codes import derived, qtwo
from ggs_codes.curve import curve_params
from ggs_codes.errors import HypothesisViolated, TripleMismatch
from ggs_codes.semigroup import Semigroup

P25 = curve_params(2, 5)
P27 = curve_params(2, 7)


def test_two_point():
    qp = derived.css_two_point(91, 3900, P25)
    assert (qp.N, qp.k) == (3968, 3809)
    # min{N-b, a-2g+2} = min{68, 1}
    assert qp.D_lower == 1
    qp = derived.css_two_point(200, 3000, P25)
    assert qp.D_lower == min(968, 110)
    with pytest.raises(HypothesisViolated) as e:
        derived.css_two_point(90, 100, P25)
    assert "2g-2 < a" in e.value.failed


def test_t1_example():
    qp = derived.css_family_t1(137, 1, P25)
    assert qp.label() == "[[3968,1,D>=92]]"
    assert qp.extra["d1_lower"] == 3968 - 137 - 1 - 46 + 1
    assert all(h["pass"] for h in qp.hypotheses)
    with pytest.raises(HypothesisViolated):
        derived.css_family_t1(136, 1, P25)
    with pytest.raises(HypothesisViolated):
        derived.css_family_t1(137, 3968 - 274 + 1, P25)


@pytest.mark.parametrize("params", [P25, P27])
def test_quant2_defect_bound(params):
    g, N = params.g, params.n_affine
    worst = Fraction(0)
    for l in range(3 * g - 1, (N - 1) // 2 + 1):
        qp = derived.css_quant2(l, params)
        assert qp.k == N - 2 * l
        assert qp.Delta_Q <= Fraction(2 * g, N)
        worst = max(worst, qp.Delta_Q)
    assert worst == Fraction(2 * g, N)


def test_quant2_decreases_in_n():
    assert Fraction(2 * P27.g, P27.n_affine) < Fraction(2 * P25.g, P25.n_affine)


@pytest.mark.parametrize("params,bonuses", [(P25, {1, 3}), (P27, {1, 3, 5})])
def test_improved_against_oracle(params, bonuses):
    s = Semigroup([8, 2 * params.m, 2**params.n + 1])
    g, m = params.g, params.m
    seen = set()
    for l in range(g, 3 * g):
        t = qtwo.triple_of(s.element(l + 1), params.n)
        if not (t.i == 0 and t.j == 1 and m <= t.k < 2 * m):
            with pytest.raises(TripleMismatch):
                derived.css_improved(l, 1, params, s)
            continue
        qp = derived.css_improved(l, 1, params, s)
        assert qp.D_lower == s.dord(l)
        assert qp.D_lower >= l + 1 - g + 1
        seen.add(qp.extra["bonus"])
    # bonus 5 needs 8m < 9m - 11, i.e. m > 11
    assert seen == bonuses


def test_improved_rejects_q3():
    with pytest.raises(HypothesisViolated):
        derived.css_improved(10, 1, curve_params(3, 3))


def test_bonus_branches():
    m = 43
    assert derived.improved_bonus(46, m) == 5
    assert derived.improved_bonus(47, m) == 3
    assert derived.improved_bonus(58, m) == 1
    assert derived.improved_bonus(11, 11) == 3


def test_nesting(pts25, s25):
    assert derived.verify_css_nesting(54, 62, pts25, s25)


def test_conv():
    cp = derived.conv_params(99, 27, P25)
    assert cp.as_tuple() == (3968, 27, 27, 1, 16)
    assert cp.label() == "(3968,27,27;1,df>=16)"
    with pytest.raises(HypothesisViolated) as e:
        derived.conv_params(99, 28, P25)
    assert e.value.failed.startswith("s <= k/2")
    with pytest.raises(HypothesisViolated):
        derived.conv_params(91, 1, P25)


def test_conv_tail_uses_goppa_style_floor():
    s = Semigroup([8, 22, 33])
    rho = s.element(3 * 46 + 5)
    cp = derived.conv_params(rho, 0, P25, s)
    assert cp.df_lower == s.dord(s.index(rho))
    assert "tail" in cp.provenance


def test_json_roundtrip():
    import json

    d = json.loads(derived.css_family_t1(137, 1, P25).to_json())
    assert d["D_lower"] == 92 and d["Delta_Q"] == f"{3968 - 1 - 184 + 2}/3968"


@settings(max_examples=50, deadline=None)
@given(st.integers(137, 1984), st.integers(1, 3968))
def test_t1_properties(l, s):
    if s > 3968 - 2 * l:
        with pytest.raises(HypothesisViolated):
            derived.css_family_t1(l, s, P25)
        return
    qp = derived.css_family_t1(l, s, P25)
    assert qp.D_lower == l + 1 - 46
    assert qp.delta_Q == 3968 - s - 2 * (l - 45) + 2
    assert qp.extra["min_d_ord_d1"] == min(l - 45, 3968 - l - s - 45)


@settings(max_examples=50, deadline=None)
@given(st.integers(91, 400), st.integers(0, 200))
def test_conv_properties(rho, s):
    sg = Semigroup([8, 22, 33])
    k = rho + 1 - 46
    ok = rho in sg and 2 * s <= k
    if not ok:
        with pytest.raises(HypothesisViolated):
            derived.conv_params(rho, s, P25, sg)
        return
    cp = derived.conv_params(rho, s, P25, sg)
    assert cp.memory == 1
    assert cp.k_conv + cp.gamma == k
    assert 2 * cp.gamma <= k
