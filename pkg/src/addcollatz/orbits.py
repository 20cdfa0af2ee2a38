"""Orbits of the cyclic group generated by d acting on Z/aZ by multiplication.

The division-output subsequence of a trajectory walks x -> d^{-1} x (mod a),
so its eventual behavior is an orbit of <d> acting on residues. Multiplying
by d instead of its inverse produces the same partition and needs no inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvariantViolation
from .numth import multiplicative_order
from .trajectory import Params, Loops, classify


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of {0..a-1} into cycles of multiplication by d mod a."""

    modulus: int
    multiplier: int
    orbits: tuple[tuple[int, ...], ...]

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)


def _require_coprime(a: int, d: int) -> None:
    if a < 1 or d < 1:
        raise ValueError(f"a and d must be positive, got a={a}, d={d}")
    g = math.gcd(a, d)
    if g != 1:
        raise ValueError(f"a and d must be coprime, gcd({a}, {d}) = {g}")


def permutation_cycles(a: int, d: int) -> OrbitPartition:
    """Cycle decomposition of x -> d*x (mod a) on {0..a-1}.

    Orbits are listed by smallest member, each orbit sorted ascending.
    """
    _require_coprime(a, d)
    seen = bytearray(a)
    orbits = []
    for start in range(a):
        if seen[start]:
            continue
        orbit = []
        v = start
        while not seen[v]:
            seen[v] = 1
            orbit.append(v)
            v = v * d % a
        orbits.append(tuple(sorted(orbit)))
    return OrbitPartition(modulus=a, multiplier=d, orbits=tuple(orbits))


def stabilizer_size(a: int, d: int, x: int, method: str = "formula") -> int:
    """Number of powers of d (mod a) fixing the residue x.

    The formula route evaluates |H| / order(d mod a/gcd(x,a)); the brute
    route counts fixing exponents directly. Both must agree.
    """
    _require_coprime(a, d)
    if not 0 <= x < a:
        raise ValueError(f"residue {x} out of range [0, {a})")
    h = multiplicative_order(d, a)
    if method == "formula":
        p_x = a // math.gcd(x, a)  # gcd(0, a) = a, so x = 0 gives p_x = 1
        alpha = multiplicative_order(d, p_x)
        if h % alpha:
            raise InvariantViolation(
                f"order {alpha} mod {p_x} does not divide group order {h}"
            )
        return h // alpha
    if method == "brute":
        return sum(1 for t in range(h) if pow(d, t, a) * x % a == x)
    raise ValueError(f"unknown method {method!r}")


def burnside_count(a: int, d: int, method: str = "formula") -> int:
    """Orbit count as the average stabilizer size over all residues.

    The division by the group order must be exact; a remainder means the
    stabilizer computation is broken and aborts loudly.
    """
    _require_coprime(a, d)
    h = multiplicative_order(d, a)
    total = sum(stabilizer_size(a, d, x, method=method) for x in range(a))
    if total % h:
        raise InvariantViolation(
            f"stabilizer sum {total} not divisible by group order {h} for (a={a}, d={d})"
        )
    return total // h


def loop_for_residue(params: Params, r: int) -> tuple[int, ...]:
    """Canonical trajectory cycle reached from residue r of Z/aZ.

    Residue 0 is represented by the start value a (trajectory values are
    positive). Members of one orbit always land on the same cycle.
    """
    _require_coprime(params.a, params.d)
    if params.d < 2:
        raise ValueError(f"d must be at least 2, got {params.d}")
    if not 0 <= r < params.a:
        raise ValueError(f"residue {r} out of range [0, {params.a})")
    start = params.a if r == 0 else r
    verdict = classify(params, start)
    if not isinstance(verdict, Loops):  # coprime parameters always loop
        raise InvariantViolation(f"start {start} did not loop under {params}")
    return verdict.cycle
