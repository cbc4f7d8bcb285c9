from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ggs_codes.curve import curve_params
from ggs_codes.errors import GcdNotOne, IndexBeyondBound, NotAnElement
from ggs_codes.semigroup import (
    Semigroup,
    sg_dord,
    sg_generate,
    sg_index_value,
    sg_is_symmetric,
    sg_is_telescopic,
    sg_nu,
)

from oracles import dord_full, members, nu_pairs

# H(P_inf) for q=2, n=5 as displayed, up to 100
DISPLAY_INF = (
    [0, 8, 16, 22, 24, 30, 32, 33, 38, 40, 41, 44, 46, 48, 49, 52]
    + list(range(54, 58))
    + [60]
    + list(range(62, 67))
    + [68]
    + list(range(70, 75))
    + list(range(76, 83))
    + list(range(84, 91))
    + list(range(92, 101))
)


def test_display_inf():
    s = sg_generate([8, 22, 33], 200)
    assert s.elements_upto(100) == DISPLAY_INF
    assert (s.genus, s.conductor) == (46, 92)
    assert sg_is_symmetric(s)
    assert sg_is_telescopic([8, 22, 33])


def test_trivial_semigroups():
    one = Semigroup([1])
    assert (one.genus, one.conductor) == (0, 0)
    assert one.elements_upto(5) == [0, 1, 2, 3, 4, 5]
    assert sg_is_symmetric(Semigroup([2, 3]))
    assert not sg_is_symmetric(Semigroup([3, 4, 5]))
    assert sg_is_telescopic([1])


def test_gcd_error():
    with pytest.raises(GcdNotOne):
        Semigroup([4, 6])


@pytest.mark.parametrize(
    "gens,expected",
    [
        ((33, 22, 8), True),  # 22/11 in <1>, 8 in <3, 2>
        ((8, 22, 33), True),  # 22/2 in <1>, 33 in <4, 11>
        ((4, 6, 9), True),
        ((3, 4, 5), False),  # 5 not in <3, 4>
        ((6, 10, 15), True),
        ((5, 7, 9), False),
    ],
)
def test_telescopic_hand_cases(gens, expected):
    assert sg_is_telescopic(list(gens)) is expected


def test_nu_dord_examples(s25):
    assert sg_nu(s25, 0) == 1
    assert s25.nu(s25.index(33) - 1) == 2
    assert s25.nu(s25.index(16) - 1) == 3
    assert sg_dord(s25, s25.index(33) - 1) == 2
    assert sg_dord(s25, s25.index(99)) == 16
    g = s25.genus
    for l in range(1, 400):
        if s25.element(l + 1) >= 4 * g:
            assert s25.dord(l) == l + 1 - g


def test_index_value(s25):
    assert sg_index_value(s25, "index_to_value", 2) == 8
    assert sg_index_value(s25, "index_to_value", 1) == 0
    assert sg_index_value(s25, "value_to_index", 92) == 47
    for l in range(1, 300):
        assert s25.index(s25.element(l)) == l
    with pytest.raises(IndexBeyondBound):
        s25.element(0)
    with pytest.raises(NotAnElement):
        s25.index(87 - 86)  # 1 is a gap


@pytest.mark.parametrize("q,n", [(2, 5), (2, 7), (3, 3), (2, 9), (3, 5)])
def test_genus_matches_curve(q, n):
    p = curve_params(q, n)
    s = Semigroup([p.pole_z, p.pole_y, p.pole_x])
    assert s.genus == p.g
    assert s.conductor == 2 * p.g
    assert s.is_symmetric()


@pytest.mark.parametrize("gens", [(8, 22, 33), (27, 21, 28), (3, 5), (4, 6, 9), (5, 7, 11, 13)])
def test_nu_dord_against_independent_oracle(gens):
    s = Semigroup(gens)
    bound = 4 * s.conductor + 4 * max(gens) + 60
    have = members(gens, bound)
    elems = sorted(have)
    top = s.index(s.conductor + 2 * s.genus + 10) if s.genus else 10
    for l in range(0, top):
        assert s.nu(l) == nu_pairs(have, elems[l])
    for l in range(1, top):
        assert s.dord(l) == dord_full(have, elems[top + 2 * s.genus + 20], l)


def test_campillo_on_symmetric(s25):
    g = s25.genus
    for l in range(1, s25.index(4 * g) + 1):
        e = s25.element(l + 1) - (2 * g - 1)
        if e > 0 and e in s25:
            assert s25.dord(l) == s25.nu(l)


def test_to_json_roundtrip(s25):
    import json

    d = json.loads(s25.to_json())
    assert d["genus"] == 46 and d["elements"][:4] == [0, 8, 16, 22]


def test_from_membership():
    base = Semigroup([8, 22, 33])
    s = Semigroup.from_membership([x in base for x in range(2 * base.genus)])
    assert s.elements_upto(200) == base.elements_upto(200)


gen_sets = st.lists(st.integers(2, 40), min_size=2, max_size=4).filter(lambda xs: gcd(*xs) == 1 if len(xs) > 1 else False)


@settings(max_examples=60, deadline=None)
@given(gen_sets)
def test_semigroup_properties(gens):
    from functools import reduce

    assume(reduce(gcd, gens) == 1)
    s = Semigroup(gens)
    el = s.elements_upto(s.conductor + 20)
    have = set(el)
    assert 0 in have
    top = s.conductor + 20
    assert all(a + b in have for a in el for b in el if a + b <= top)
    assert s.genus == sum(1 for x in range(s.conductor) if x not in have)
    assert s.conductor == 0 or (s.conductor - 1) not in have
    assert s.genus <= s.conductor <= 2 * s.genus
    # symmetric iff the pairing x <-> 2g-1-x swaps gaps and elements
    g = s.genus
    pairing = all((x in s) != ((2 * g - 1 - x) in s) for x in range(2 * g))
    assert s.is_symmetric() == pairing
    prev = None
    for l in range(1, min(40, s.index(s.conductor) + 10)):
        nu = s.nu(l)
        rho = s.element(l + 1)
        assert nu >= 2
        if rho % 2 or rho // 2 not in s:
            assert nu % 2 == 0
        d = s.dord(l)
        assert d >= l + 1 - g
        if prev is not None:
            assert prev <= d
        prev = d


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 25), st.integers(2, 25))
def test_two_generator_symmetric_and_campillo(a, b):
    assume(gcd(a, b) == 1)
    s = Semigroup([a, b])
    assert s.genus == (a - 1) * (b - 1) // 2
    assert s.is_symmetric()
    assert sg_is_telescopic([a, b])
    g = s.genus
    for l in range(1, s.index(4 * g + 1) + 1):
        e = s.element(l + 1) - (2 * g - 1)
        if e > 0 and e in s:
            assert s.dord(l) == s.nu(l)
