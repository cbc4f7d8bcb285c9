import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ggs_codes.errors import FieldMismatch, IncompatibleDegrees, InverseOfZero, NonPrimeP, ReducibleModulus
from ggs_codes.ffield import (
    DEFAULT_MODULI,
    Field,
    arith,
    embed,
    first_primitive_modulus,
    is_irreducible,
    make_embedding,
    make_field,
    mth_roots,
)

from oracles import brute_mth_roots

SMALL = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 6), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 2)]


def _order(f, a):
    k, x = 1, a
    while x != 1:
        x = f.mul(x, a)
        k += 1
    return k


def test_prime_field_generator():
    f = make_field(2, 1)
    assert f.size == 2 and f.generator == 1


@pytest.mark.parametrize("p,k", [(2, 10), (3, 6)])
def test_generator_order(p, k):
    f = make_field(p, k)
    assert f.size == p**k
    assert _order(f, f.generator) == p**k - 1


def test_arith_examples():
    f = make_field(2, 10)
    x = f(0b1011001)
    assert arith(x, x, "add") == f.zero
    g = f.gen
    assert g**1023 == f.one
    assert arith(g, g.inverse(), "mul") == f.one
    assert arith(g, None, "pow", exponent=2) == g * g
    assert arith(g, None, "neg") == g


def test_inverse_of_zero():
    f = make_field(3, 2)
    with pytest.raises(InverseOfZero):
        f.inv(0)
    with pytest.raises(InverseOfZero):
        f(0).inverse()


def test_constructor_errors():
    with pytest.raises(NonPrimeP):
        Field(4, 2)
    with pytest.raises(ReducibleModulus):
        Field(2, 2, modulus=[1, 0, 1])  # T^2 + 1 = (T+1)^2
    with pytest.raises(FieldMismatch):
        make_field(2, 2).one + make_field(2, 3).one


def test_modulus_normalized_to_monic():
    f = Field(3, 2, modulus=[1, 2, 2])  # 2T^2+2T+1 -> T^2+T+2
    assert f.modulus == (2, 1, 1)


def test_default_moduli_are_first_primitive():
    for (p, k), mod in DEFAULT_MODULI.items():
        if p**k <= 4096:
            assert first_primitive_modulus(p, k) == mod
        assert is_irreducible(mod, p)


def test_json_roundtrip():
    f = make_field(3, 4)
    assert Field.from_json(f.to_json()) == f
    assert json.loads(f.to_json())["modulus"] == list(f.modulus)


@pytest.mark.parametrize("p,k", SMALL)
def test_axioms_exhaustive_small(p, k):
    f = make_field(p, k)
    v = np.arange(f.size)
    a, b = np.meshgrid(v, v)
    if f.size <= 64:
        for c in range(f.size):
            left = f.vmul(a, f.vadd(b, c))
            right = f.vadd(f.vmul(a, b), f.vmul(a, c))
            assert np.array_equal(left, right)
            assert np.array_equal(f.vadd(f.vadd(a, b), c), f.vadd(a, f.vadd(b, c)))
    nz = v[1:]
    assert np.all(f.vmul(nz, f.vinv(nz)) == 1)
    # scalar and vector paths agree
    for x, y in [(1, f.size - 1), (f.size // 2, f.size // 3 or 1)]:
        assert f.mul(x, y) == int(f.vmul(x, y))
        assert f.add(x, y) == int(f.vadd(x, y))
        assert f.sub(x, y) == int(f.vsub(x, y))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(2, 10), (3, 6), (2, 12), (5, 2)]), st.data())
def test_field_properties_sampled(pk, data):
    f = make_field(*pk)
    a, b, c = (data.draw(st.integers(0, f.size - 1)) for _ in range(3))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.add(a, f.neg(a)) == 0
    # Frobenius is additive
    assert f.pow(f.add(a, b), f.p) == f.add(f.pow(a, f.p), f.pow(b, f.p))
    if a:
        assert f.mul(a, f.inv(a)) == 1
        assert f.power_of_gen(f.log_of(a)) == a


def test_coeff_roundtrip():
    f = make_field(3, 3)
    for v in range(f.size):
        assert f.from_coeffs(f.to_coeffs(v)).value == v


@pytest.mark.parametrize("q,n", [(2, 5), (2, 3), (3, 3)])
def test_embedding_image_is_fixed_field(q, n):
    p = 2 if q == 2 else 3
    small, big = make_field(p, 2), make_field(p, 2 * n)
    e = make_embedding(small, big)
    img = set(e.image().tolist())
    v = np.arange(big.size)
    fixed = set(v[big.vpow(v, small.size) == v].tolist())
    assert img == fixed
    assert embed(e, small.zero) == big.zero
    assert embed(e, small.one) == big.one
    g4 = embed(e, small.gen)
    assert g4 ** (small.size - 1) == big.one and g4 != big.one
    for x in range(small.size):
        for y in range(small.size):
            assert e.table[small.mul(x, y)] == big.mul(int(e.table[x]), int(e.table[y]))


def test_embedding_errors():
    with pytest.raises(IncompatibleDegrees):
        make_embedding(make_field(2, 3), make_field(2, 4))
    e = make_embedding(make_field(2, 2), make_field(2, 4))
    with pytest.raises(FieldMismatch):
        embed(e, make_field(2, 4).one)


def test_mth_roots_examples():
    f = make_field(2, 10)
    assert mth_roots(f.zero, 11) == {f.zero}
    ones = mth_roots(f.one, 11)
    assert len(ones) == 11
    assert {r.value for r in ones} == brute_mth_roots(f, 1, 11)
    assert mth_roots(f.gen, 11) == set()


@pytest.mark.parametrize("pk,m", [((2, 6), 3), ((2, 6), 9), ((3, 2), 4), ((3, 4), 5), ((2, 10), 11), ((2, 4), 7)])
def test_mth_roots_against_enumeration(pk, m):
    f = make_field(*pk)
    total = 0
    for c in range(f.size):
        got = {r.value for r in mth_roots(f(c), m)}
        assert got == brute_mth_roots(f, c, m)
        total += len(got)
    assert total == f.size
