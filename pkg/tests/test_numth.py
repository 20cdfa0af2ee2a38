import math

import pytest

from addcollatz.numth import (
    Factorization,
    carmichael_lambda,
    divisors,
    euler_phi,
    factorize,
    gcd,
    is_prime,
    mod_inverse,
    mod_pow,
    multiplicative_order,
)


# --- brute-force oracles, kept independent of the implementations they check

def brute_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def brute_order(d, m):
    if m == 1:
        return 1
    t, v = 1, d % m
    while v != 1:
        v = v * d % m
        t += 1
    return t


def brute_lambda(n):
    if n == 1:
        return 1
    return max(brute_order(u, n) for u in range(1, n + 1) if math.gcd(u, n) == 1)


def brute_divisors(n):
    return [f for f in range(1, n + 1) if n % f == 0]


def test_gcd_examples():
    assert gcd(12, 8) == 4
    assert gcd(0, 5) == 5
    assert gcd(5, 0) == 5
    assert gcd(7, 1) == 1


def test_gcd_rejects_double_zero():
    with pytest.raises(ValueError):
        gcd(0, 0)


def test_mod_pow_examples():
    assert mod_pow(7, 0, 13) == 1
    assert mod_pow(2, 10, 1000) == 24
    assert mod_pow(3, 4, 16) == 81 % 16 == 1
    assert mod_pow(5, 0, 1) == 0  # everything is 0 mod 1


def test_mod_pow_rejects_zero_modulus():
    with pytest.raises(ValueError):
        mod_pow(2, 3, 0)


def test_mod_inverse_examples():
    assert mod_inverse(1, 7) == 1
    assert mod_inverse(1, 1) == 0
    assert mod_inverse(2, 3) == 2
    assert mod_inverse(3, 7) == 5


def test_mod_inverse_rejects_non_coprime():
    with pytest.raises(ValueError):
        mod_inverse(4, 6)


def test_mod_inverse_property():
    for m in range(2, 80):
        for u in range(1, m):
            if math.gcd(u, m) == 1:
                assert u * mod_inverse(u, m) % m == 1


def test_factorize_examples():
    assert factorize(1) == Factorization(1, ())
    assert factorize(12).entries == ((2, 2), (3, 1))
    assert factorize(97).entries == ((97, 1),)


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_reconstructs_and_counts_divisors():
    for n in range(1, 10_001):
        fac = factorize(n)
        product = 1
        expected_divisors = 1
        last_prime = 0
        for p, e in fac:
            assert p > last_prime and e >= 1
            last_prime = p
            product *= p**e
            expected_divisors *= e + 1
        assert product == n
        assert (fac.entries == ()) == (n == 1)
        assert len(divisors(n)) == expected_divisors


def test_factorize_large_semiprime_uses_rho_stage():
    p, q = 1_000_003, 1_000_033
    assert factorize(p * q).entries == ((p, 1), (q, 1))


def test_factorize_64_bit_boundary():
    # 2^63 - 1 = 7^2 * 73 * 127 * 337 * 92737 * 649657
    assert factorize(2**63 - 1).entries == (
        (7, 2), (73, 1), (127, 1), (337, 1), (92737, 1), (649657, 1)
    )


def test_is_prime_mersenne():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**62 - 1)


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(97) == [1, 97]


def test_divisors_sorted_and_exact():
    for n in range(1, 500):
        assert divisors(n) == brute_divisors(n)


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(10) == 4
    assert euler_phi(12) == 4


def test_euler_phi_against_brute_force():
    for n in range(1, 1001):
        assert euler_phi(n) == brute_phi(n)


def test_carmichael_examples():
    assert carmichael_lambda(1) == 1
    assert carmichael_lambda(8) == 2
    assert carmichael_lambda(15) == 4


def test_carmichael_is_max_order():
    for n in range(1, 1001):
        assert carmichael_lambda(n) == brute_lambda(n)


def test_multiplicative_order_examples():
    assert multiplicative_order(7, 1) == 1
    assert multiplicative_order(2, 5) == 4
    assert multiplicative_order(2, 3) == 2


def test_multiplicative_order_rejects_non_coprime():
    with pytest.raises(ValueError):
        multiplicative_order(2, 4)


def test_order_divides_lambda_divides_phi():
    for m in range(1, 501):
        lam = carmichael_lambda(m)
        phi = euler_phi(m)
        assert phi % lam == 0
        for d in range(1, m + 1):
            if math.gcd(d, m) == 1:
                order = multiplicative_order(d, m)
                assert order == brute_order(d, m)
                assert lam % order == 0
