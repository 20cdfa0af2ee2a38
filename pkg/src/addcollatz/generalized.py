"""The generalized map: x -> m*x + a off multiples of d, x -> x/d on them.

Unlike the additive case (m = 1), genuine unresolved growth is possible, so
classification is capped and Unknown is a first-class verdict. Divergence is
still certified, never guessed: if the multiply-add walk on residues mod d
never reaches 0, no future iterate can take the division branch, and values
then increase strictly forever.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .trajectory import Loops, canonical_cycle

DEFAULT_GEN_CAP = 10**5


@dataclass(frozen=True)
class GenParams:
    a: int
    d: int
    m: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"a must be positive, got {self.a}")
        if self.d < 2:
            raise ValueError(f"d must be at least 2, got {self.d}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")


@dataclass(frozen=True)
class NoDivisibilityDivergence:
    """No value with this residue mod d ever reaches a multiple of d.

    Certified by exhausting the residue orbit of u -> m*u + a (mod d): from
    the witness residue onward only the multiply-add branch can fire, so the
    trajectory increases strictly forever.
    """

    witness_residue: int


@dataclass(frozen=True)
class Unknown:
    """Step cap exhausted with neither a repeat nor a certificate."""

    steps_executed: int


GenClass = Loops | NoDivisibilityDivergence | Unknown


@dataclass(frozen=True)
class GenSubStep:
    """Division output with the run of multiply-add steps that produced it.

    run_length is None on the starting record; it is 0 when the previous
    output was itself divisible by d.
    """

    index: int
    value: int
    run_length: int | None


def gen_step(gp: GenParams, x: int) -> int:
    if x < 1:
        raise ValueError(f"trajectory values must be positive, got {x}")
    return x // gp.d if x % gp.d == 0 else gp.m * x + gp.a


def run_residue(gp: GenParams, x: int, r: int) -> int:
    """Residue mod d after r+1 consecutive multiply-add steps from x.

    Equals m^(r+1)*x + a*(m^r + ... + m + 1) mod d, evaluated by modular
    iteration; for m = 1 this collapses to x + (r+1)*a mod d.
    """
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    v = x % gp.d
    for _ in range(r + 1):
        v = (gp.m * v + gp.a) % gp.d
    return v


def divisibility_reachable(gp: GenParams, x: int) -> int | None:
    """Least r with run_residue(gp, x, r) = 0, or None if no r exists.

    The residue walk lives in a state space of size d, so absence within d
    steps proves absence outright.
    """
    u = x % gp.d
    for k in range(1, gp.d + 1):
        u = (gp.m * u + gp.a) % gp.d
        if u == 0:
            return k - 1
    return None


def gen_classify(gp: GenParams, x: int, cap: int | None = None) -> GenClass:
    """Loop with certificate, certified divergence, or Unknown at the cap."""
    if x < 1:
        raise ValueError(f"start must be positive, got {x}")
    if cap is None:
        cap = DEFAULT_GEN_CAP
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    reach: dict[int, int | None] = {}  # keyed by residue mod d
    seen: dict[int, int] = {}
    sequence: list[int] = []
    v = x
    for steps_taken in range(cap + 1):
        if v in seen:
            first = seen[v]
            return Loops(
                preperiod_length=first,
                cycle=canonical_cycle(sequence[first:]),
            )
        u = v % gp.d
        if u:
            if u not in reach:
                reach[u] = divisibility_reachable(gp, v)
            if reach[u] is None:
                return NoDivisibilityDivergence(witness_residue=u)
        seen[v] = steps_taken
        sequence.append(v)
        v = gen_step(gp, v)
    return Unknown(steps_executed=cap)


def gen_sub_trajectory(gp: GenParams, x: int, count: int) -> list[GenSubStep]:
    """The first count+1 division outputs with their multiply-add run lengths.

    Requires gcd(a, d) = 1. Each record satisfies
    d * n_{i+1} = m^r * n_i + a * (m^(r-1) + ... + 1) for run length r >= 1
    and d * n_{i+1} = n_i for r = 0. A value from which no multiple of d is
    reachable stops the extraction with an explicit error.
    """
    if x < 1:
        raise ValueError(f"start must be positive, got {x}")
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    g = math.gcd(gp.a, gp.d)
    if g != 1:
        raise ValueError(f"a and d must be coprime, gcd({gp.a}, {gp.d}) = {g}")
    records = [GenSubStep(index=0, value=x, run_length=None)]
    n = x
    for i in range(1, count + 1):
        if n % gp.d == 0:
            run = 0
            nxt = n // gp.d
        else:
            r = divisibility_reachable(gp, n)
            if r is None:
                raise ValueError(
                    f"no multiple of {gp.d} is reachable from {n}; "
                    "the division subsequence ends here"
                )
            run = r + 1
            v = n
            for _ in range(run):
                v = gp.m * v + gp.a
            nxt = v // gp.d
        records.append(GenSubStep(index=i, value=nxt, run_length=run))
        n = nxt
    return records
