import pytest

from gfft.errors import MixedFields, NonPrimeP, ReducibleModulus, ZeroInverse
from gfft.gf import (
    field_make,
    find_primitive_element,
    find_primitive_quadratic,
    is_irreducible_modp,
    quadratic_is_irreducible,
    quadratic_root_order,
)


def test_field_make_prime_fields():
    assert field_make(127).q == 127
    assert field_make(2).q == 2
    with pytest.raises(NonPrimeP):
        field_make(15)


def test_field_make_f9_least_modulus():
    # exhaustive oracle over the 9 monic quadratics over F_3
    irreducible = []
    for c1 in range(3):
        for c0 in range(3):
            if all((t * t + c1 * t + c0) % 3 != 0 for t in range(3)):
                irreducible.append((c0, c1, 1))
    least = min(irreducible, key=lambda m: m[0] + 3 * m[1])
    F9 = field_make(3, 2)
    assert F9.modulus == least == (1, 0, 1)  # x^2 + 1


def test_field_make_rejects_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        field_make(3, 2, (0, 0, 1))  # x^2
    with pytest.raises(ReducibleModulus):
        field_make(2, 3, (1, 0, 1))  # wrong degree


def test_irreducibility_degree6():
    assert is_irreducible_modp([1, 1, 0, 0, 0, 0, 1], 2)  # x^6+x+1
    assert not is_irreducible_modp([1, 0, 1, 0, 1, 0, 1], 2)  # (x^2+x+1)^... reducible


def test_arithmetic_f127(F127):
    three = F127(3)
    assert (three.inverse()).raw == 85
    assert (three * three.inverse()).raw == 1
    assert (F127(100) + F127(50)).raw == 23
    assert (-F127(21)).raw == 106


def test_arithmetic_identity_random(F127, F9, rng):
    for field in (F127, F9):
        for _ in range(50):
            x = rng.randrange(field.q)
            assert field.mul(x, 1) == x
            if x:
                assert field.mul(x, field.inv(x)) == 1


def test_pow_group_order(F9):
    for g in range(1, 9):
        assert F9.pow(g, 8) == 1


def test_pow_exponent_additivity(F127, rng):
    for _ in range(30):
        x = rng.randrange(1, 127)
        y, z = rng.randrange(500), rng.randrange(500)
        assert F127.mul(F127.pow(x, y), F127.pow(x, z)) == F127.pow(x, (y + z) % 126)


def test_extension_subtraction_and_packing(F27):
    x = F27.pack((1, 2, 0))
    y = F27.pack((2, 2, 1))
    assert F27.unpack(F27.sub(x, y)) == (2, 0, 2)
    assert F27.add(x, F27.neg(x)) == 0


def test_zero_inverse_raises(F127, F64):
    for field in (F127, F64):
        with pytest.raises(ZeroInverse):
            field.inv(0)


def test_mixed_fields_raises(F127, F17):
    with pytest.raises(MixedFields):
        F127(1) + F17(1)


def test_find_primitive_element_values(F127, F17):
    g = find_primitive_element(F127)
    assert g.raw == 3
    # oracle: g^((q-1)/l) != 1 for every prime l | 126 = 2*3^2*7
    for ell in (2, 3, 7):
        assert F127.pow(3, 126 // ell) != 1
    assert find_primitive_element(field_make(2)).raw == 1
    g17 = find_primitive_element(F17)
    assert g17.raw == 3
    for k in (2, 8):
        assert F17.pow(3, k) != 1


def test_find_primitive_element_extension(F9):
    g = find_primitive_element(F9)
    order = 1
    acc = g.raw
    while acc != 1:
        acc = F9.mul(acc, g.raw)
        order += 1
    assert order == 8


def test_primitive_quadratic_f2():
    F2 = field_make(2)
    a, b = find_primitive_quadratic(F2)
    assert (a.raw, b.raw) == (1, 1)


def test_primitive_quadratic_f3_order8():
    F3 = field_make(3)
    a, b = find_primitive_quadratic(F3)
    assert quadratic_is_irreducible(F3, a.raw, b.raw)
    assert quadratic_root_order(F3, a.raw, b.raw) == 8


def test_primitive_quadratic_accepts_published_f127_pair(F127):
    assert quadratic_is_irreducible(F127, 126, 3)
    assert quadratic_root_order(F127, 126, 3) == 127 * 127 - 1


def test_counter_additivity(F127):
    with F127.count_ops() as both:
        F127.mul(3, 5)
        F127.add(1, 2)
    with F127.count_ops() as first:
        F127.mul(3, 5)
    with F127.count_ops() as second:
        F127.add(1, 2)
    assert both.adds == first.adds + second.adds
    assert both.muls == first.muls + second.muls
    assert both.total() == first.total() + second.total()


def test_counter_scopes_nest(F127):
    with F127.count_ops() as outer:
        F127.mul(2, 2)
        with F127.count_ops() as inner:
            F127.mul(2, 2)
        F127.mul(2, 2)
    assert inner.muls == 1
    assert outer.muls == 2  # inner scope owns its own counts


def test_serialization_forms(F127, F27):
    assert F127.serialize_raw(42) == 42
    assert F27.serialize_raw(F27.pack((1, 2, 0))) == [1, 2, 0]
    assert F27.parse_raw([1, 2, 0]) == F27.pack((1, 2, 0))
