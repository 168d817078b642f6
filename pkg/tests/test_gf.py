"""Finite field construction and arithmetic, exhaustively at small orders."""

import pytest

from qkneser.gf import factor_prime_power, field_of_order, is_prime, make_field


def test_prime_field():
    ctx = make_field(2, 1)
    assert ctx.q == 2 and list(ctx.elements()) == [0, 1]
    assert ctx.add(1, 1) == 0
    assert ctx.mul(1, 1) == 1


def test_gf4_modulus_and_arithmetic():
    ctx = make_field(2, 2)
    assert ctx.modulus == (1, 1, 1)  # x^2 + x + 1; smaller tuples all have roots
    # x * x = x + 1 under that modulus; x encodes to 2, x+1 to 3
    assert ctx.mul(2, 2) == 3
    assert ctx.decode(2) == (0, 1)
    assert ctx.encode((1, 1)) == 3


def test_gf9_modulus():
    ctx = make_field(3, 2)
    assert ctx.modulus == (1, 0, 1)  # x^2 + 1 has no root mod 3 and is lex-smallest


def test_gf5_inverse():
    ctx = make_field(5, 1)
    assert ctx.inv(2) == 3


def test_additive_inverse_everywhere():
    for q in (2, 3, 4, 5, 7, 8, 9):
        ctx = field_of_order(q)
        for a in ctx.elements():
            assert ctx.add(a, ctx.neg(a)) == 0


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive(q):
    ctx = field_of_order(q)
    elements = list(ctx.elements())
    assert len(set(elements)) == q
    for a in elements:
        assert ctx.add(a, 0) == a and ctx.mul(a, 1) == a
        for b in elements:
            assert ctx.add(a, b) == ctx.add(b, a)
            assert ctx.mul(a, b) == ctx.mul(b, a)
            for c in elements:
                assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
                assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
                assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_multiplicative_group_order(q):
    ctx = field_of_order(q)
    for a in range(1, q):
        assert ctx.mul(a, ctx.inv(a)) == 1
        assert ctx.pow(a, q - 1) == 1


def test_inverse_of_zero_fails():
    ctx = make_field(3, 2)
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


def test_make_field_rejects_bad_input():
    with pytest.raises(ValueError):
        make_field(4, 1)  # composite characteristic
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(ValueError):
        make_field(2, 5)  # beyond default degree bound
    assert make_field(2, 5, max_degree=5).q == 32  # explicit override works


def test_factor_prime_power():
    assert factor_prime_power(2) == (2, 1)
    assert factor_prime_power(9) == (3, 2)
    assert factor_prime_power(16) == (2, 4)
    assert factor_prime_power(49) == (7, 2)
    for bad in (1, 0, 6, 12, 100):
        with pytest.raises(ValueError):
            factor_prime_power(bad)


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)


def test_larger_extension_field():
    # GF(16): sanity on a degree-4 modulus without full tables of axioms
    ctx = make_field(2, 4)
    assert ctx.q == 16
    assert len(ctx.modulus) == 5 and ctx.modulus[-1] == 1
    for a in range(1, 16):
        assert ctx.mul(a, ctx.inv(a)) == 1
        assert ctx.pow(a, 15) == 1


def test_context_equality():
    assert make_field(2, 2) == make_field(2, 2)
    assert make_field(2, 2) != make_field(3, 2)
    assert field_of_order(9) == make_field(3, 2)
