"""Closed-form loop counting and its bounds.

xi(a, d) = sum over divisors f of a of phi(f) / order_f(d) counts the orbits
of multiplication by d on Z/aZ, hence the distinct trajectory loops. The
Carmichael function gives the lower envelope xi_inf(a) = sum phi(f)/lambda(f),
attained for a witness multiplier; d = 1 attains the upper bound a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvariantViolation
from .numth import (
    carmichael_lambda,
    divisors,
    euler_phi,
    is_prime,
    multiplicative_order,
)


@dataclass(frozen=True)
class XiTerm:
    """One divisor's contribution: phi(divisor) / order of d mod divisor."""

    divisor: int
    phi: int
    alpha: int
    term: int


@dataclass(frozen=True)
class XiBreakdown:
    a: int
    d: int
    terms: tuple[XiTerm, ...]
    total: int


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise InvariantViolation(f"{what}: {num} not divisible by {den}")
    return num // den


def xi_formula(a: int, d: int) -> XiBreakdown:
    """Per-divisor breakdown of xi(a, d); every term divides exactly."""
    if a < 1 or d < 1:
        raise ValueError(f"a and d must be positive, got a={a}, d={d}")
    g = math.gcd(a, d)
    if g != 1:
        raise ValueError(f"a and d must be coprime, gcd({a}, {d}) = {g}")
    terms = []
    for f in divisors(a):
        phi = euler_phi(f)
        alpha = multiplicative_order(d, f)
        terms.append(
            XiTerm(f, phi, alpha, _exact_div(phi, alpha, f"xi term at divisor {f}"))
        )
    return XiBreakdown(a=a, d=d, terms=tuple(terms), total=sum(t.term for t in terms))


def xi_lower_bound(a: int) -> int:
    """xi_inf(a) = sum over f | a of phi(f) / lambda(f)."""
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    return sum(
        _exact_div(euler_phi(f), carmichael_lambda(f), f"lower-bound term at {f}")
        for f in divisors(a)
    )


def xi_pq(p: int, q: int, d: int) -> int:
    """xi(p*q, d) for distinct primes p, q from the four-term product form.

    1 + (p-1)/a_p + (q-1)/a_q + (p-1)(q-1) gcd(a_p, a_q) / (a_p a_q)
    where a_p, a_q are the orders of d mod p and mod q.
    """
    if p == q or not (is_prime(p) and is_prime(q)):
        raise ValueError(f"p and q must be distinct primes, got {p}, {q}")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    g = math.gcd(d, p * q)
    if g != 1:
        raise ValueError(f"d must be coprime to p*q, gcd({d}, {p * q}) = {g}")
    a_p = multiplicative_order(d, p)
    a_q = multiplicative_order(d, q)
    return (
        1
        + _exact_div(p - 1, a_p, "p-part")
        + _exact_div(q - 1, a_q, "q-part")
        + _exact_div((p - 1) * (q - 1) * math.gcd(a_p, a_q), a_p * a_q, "pq-part")
    )


def strong_bound_witness(a: int) -> int | None:
    """Smallest d < max(a, 2) coprime to a with xi(a, d) = xi_inf(a).

    Only d mod a matters, so the search range is complete; None would be a
    reportable finding, not an error.
    """
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    target = xi_lower_bound(a)
    for d in range(1, max(a, 2)):
        if math.gcd(d, a) == 1 and xi_formula(a, d).total == target:
            return d
    return None
