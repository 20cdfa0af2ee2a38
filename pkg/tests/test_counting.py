import math

import pytest

from addcollatz.counting import (
    strong_bound_witness,
    xi_formula,
    xi_lower_bound,
    xi_pq,
)
from addcollatz.numth import is_prime
from addcollatz.orbits import burnside_count, permutation_cycles


def test_xi_formula_examples():
    assert xi_formula(3, 2).total == 2
    assert xi_formula(7, 1).total == 7
    assert xi_formula(8, 3).total == 5


def test_xi_formula_breakdown_shape():
    breakdown = xi_formula(8, 3)
    assert [t.divisor for t in breakdown.terms] == [1, 2, 4, 8]
    assert [t.term for t in breakdown.terms] == [1, 1, 1, 2]
    for t in breakdown.terms:
        assert t.phi == t.alpha * t.term
    assert breakdown.total == sum(t.term for t in breakdown.terms)


def test_xi_formula_rejects_non_coprime():
    with pytest.raises(ValueError):
        xi_formula(8, 2)


def test_xi_lower_bound_examples():
    assert xi_lower_bound(1) == 1
    assert xi_lower_bound(8) == 5
    assert xi_lower_bound(15) == 5


def test_xi_pq_examples():
    assert xi_pq(3, 5, 2) == 5
    assert xi_pq(3, 5, 1) == 15
    assert xi_pq(3, 7, 2) == 6 == xi_formula(21, 2).total


def test_xi_pq_validates():
    with pytest.raises(ValueError):
        xi_pq(4, 5, 2)  # 4 not prime
    with pytest.raises(ValueError):
        xi_pq(5, 5, 2)  # not distinct
    with pytest.raises(ValueError):
        xi_pq(3, 5, 6)  # d shares a factor with pq


def test_strong_bound_witness_examples():
    assert strong_bound_witness(1) == 1
    assert strong_bound_witness(8) == 3
    assert strong_bound_witness(15) == 2


def test_oracle_equivalence():
    for a in range(1, 41):
        for d in range(1, 41):
            if math.gcd(a, d) != 1:
                continue
            total = xi_formula(a, d).total
            assert total == burnside_count(a, d)
            assert total == permutation_cycles(a, d).orbit_count


def test_bound_sandwich():
    for a in range(1, 61):
        lower = xi_lower_bound(a)
        for d in range(1, a + 1):
            if math.gcd(a, d) != 1:
                continue
            total = xi_formula(a, d).total
            assert lower <= total <= a
        assert xi_formula(a, 1).total == a
        witness = strong_bound_witness(a)
        assert witness is not None
        assert xi_formula(a, witness).total == lower


def test_witness_is_smallest():
    for a in (6, 8, 12, 15, 24):
        witness = strong_bound_witness(a)
        target = xi_lower_bound(a)
        for d in range(1, witness):
            if math.gcd(d, a) == 1:
                assert xi_formula(a, d).total != target


def test_two_prime_consistency():
    primes = [p for p in range(2, 24) if is_prime(p)]
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            for d in range(1, 31):
                if math.gcd(d, p * q) == 1:
                    assert xi_pq(p, q, d) == xi_formula(p * q, d).total
