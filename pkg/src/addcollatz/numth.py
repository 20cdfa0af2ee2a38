"""Exact integer number theory: factorization, totients, multiplicative orders.

Everything here is pure and exact. Python integers are unbounded, so
intermediate results never wrap; inputs of any size are accepted, though the
factorization stage is tuned for inputs up to 64 bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

_TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization n = prod(p**e), entries sorted by prime."""

    n: int
    entries: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.entries)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)


def gcd(u: int, v: int) -> int:
    """Greatest common divisor with the gcd(0, v) = v convention."""
    if u == 0 and v == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(u, v)


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    return pow(base, exponent, modulus)


def mod_inverse(u: int, m: int) -> int:
    """v in [0, m) with u*v = 1 (mod m); returns 0 for m = 1."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if math.gcd(u, m) != 1:
        raise ValueError(f"{u} is not invertible mod {m}")
    return pow(u, -1, m)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for all inputs below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_factor(n: int) -> int:
    """One nontrivial factor of composite odd n via Brent's cycle variant.

    Deterministically seeded: the polynomial offset c is incremented until a
    factor shows up, so results are reproducible run to run.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # unreachable in practice


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Complete prime factorization of n >= 1.

    Trial division by 2, 3 and 6k+-1 up to 10^6 handles desk-scale inputs;
    larger cofactors go through Miller-Rabin plus Pollard rho.
    """
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    original = n
    raw: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            raw[p] = raw.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n and f < _TRIAL_LIMIT:
        for p in (f, f + 2):
            while n % p == 0:
                raw[p] = raw.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        if f * f > n:
            raw[n] = raw.get(n, 0) + 1
        else:
            stack = [n]
            while stack:
                v = stack.pop()
                if is_prime(v):
                    raw[v] = raw.get(v, 0) + 1
                    continue
                g = _rho_factor(v)
                stack.append(g)
                stack.append(v // g)
    entries = tuple(sorted(raw.items()))
    return Factorization(original, entries)


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    """Count of integers in [1, n] coprime to n."""
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def _lcm(u: int, v: int) -> int:
    return u * v // math.gcd(u, v)


@lru_cache(maxsize=None)
def carmichael_lambda(n: int) -> int:
    """Exponent of the unit group mod n.

    Prime powers: 2 -> 1, 4 -> 2, 2^e -> 2^(e-2) for e >= 3, odd p^e ->
    phi(p^e); products combine by lcm.
    """
    if n < 1:
        raise ValueError(f"carmichael_lambda undefined for {n}")
    parts = []
    for p, e in factorize(n):
        if p == 2 and e >= 3:
            parts.append(2 ** (e - 2))
        else:
            parts.append(p ** (e - 1) * (p - 1))
    return reduce(_lcm, parts, 1)


@lru_cache(maxsize=None)
def multiplicative_order(d: int, m: int) -> int:
    """Least t >= 1 with d^t = 1 (mod m); requires gcd(d, m) = 1.

    Computed by stripping primes from carmichael_lambda(m) rather than by
    linear search, so it stays cheap inside divisor sums.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if math.gcd(d, m) != 1:
        raise ValueError(f"order of {d} mod {m} undefined: gcd is {math.gcd(d, m)}")
    if m == 1:
        return 1
    t = carmichael_lambda(m)
    for p, _ in factorize(t):
        while t % p == 0 and pow(d, t // p, m) == 1:
            t //= p
    return t
