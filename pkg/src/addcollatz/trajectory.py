"""The additive Collatz map and certificate-producing trajectory analysis.

The map T sends x to x/d when d divides x and to x + a otherwise. Whether a
start loops or runs away forever is decided exactly, and each verdict carries
a machine-checkable certificate: the cycle itself, or a value off the
gcd(a, d) lattice from which only the addition branch can ever fire.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExceededError

DEFAULT_CLASSIFY_CAP = 10**7


@dataclass(frozen=True)
class Params:
    """Map parameters: the additive constant a and the divisor d."""

    a: int
    d: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"a must be positive, got {self.a}")
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")

    @property
    def delta(self) -> int:
        # always recomputed so it can never go stale
        return math.gcd(self.a, self.d)


@dataclass(frozen=True)
class Loops:
    """Eventual periodicity: preperiod length plus the cycle, minimum first."""

    preperiod_length: int
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class Diverges:
    """Certified divergence.

    witness_value is not a multiple of delta = gcd(a, d) > 1, so every later
    iterate is witness_value + a*k: the addition branch fires forever.
    """

    steps_to_certificate: int
    witness_value: int


TrajectoryClass = Loops | Diverges


@dataclass(frozen=True)
class SubStep:
    """One division output n_i, reached at trajectory step step_index.

    y is the least non-negative integer with d | (value + a*y); it equals the
    number of addition steps separating this division output from the next.
    """

    index: int
    step_index: int
    value: int
    y: int


def step(params: Params, x: int) -> int:
    """One application of the map."""
    if x < 1:
        raise ValueError(f"trajectory values must be positive, got {x}")
    return x // params.d if x % params.d == 0 else x + params.a


def iterate(params: Params, x: int, count: int) -> list[int]:
    """The first count+1 trajectory values (x, T(x), ..., T^count(x))."""
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    values = [x]
    v = x
    for _ in range(count):
        v = step(params, v)
        values.append(v)
    return values


def canonical_cycle(cycle) -> tuple[int, ...]:
    """Rotate a cycle so its minimum element comes first."""
    cycle = tuple(cycle)
    if not cycle:
        raise ValueError("cannot canonicalize an empty cycle")
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def classify(params: Params, x: int, cap: int | None = None) -> TrajectoryClass:
    """Decide, with certificate, whether the trajectory of x loops or diverges.

    A loop is reported the moment a value repeats (preperiod = steps before
    the repeated value's first occurrence). Divergence is reported the moment
    the current value leaves the gcd lattice; growth alone is never treated
    as evidence. The cap is defense in depth only and is not reached for any
    tested parameter range.
    """
    if x < 1:
        raise ValueError(f"start must be positive, got {x}")
    if cap is None:
        cap = DEFAULT_CLASSIFY_CAP
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    delta = params.delta
    seen: dict[int, int] = {}
    sequence: list[int] = []
    v = x
    for steps_taken in range(cap + 1):
        if delta > 1 and v % delta:
            return Diverges(steps_to_certificate=steps_taken, witness_value=v)
        if v in seen:
            first = seen[v]
            return Loops(
                preperiod_length=first,
                cycle=canonical_cycle(sequence[first:]),
            )
        seen[v] = steps_taken
        sequence.append(v)
        v = step(params, v)
    raise CapExceededError(
        f"no verdict for x={x} under T(a={params.a}, d={params.d}) within {cap} steps"
    )


def _require_coprime_division(params: Params) -> int:
    if params.d < 2:
        raise ValueError(f"d must be at least 2, got {params.d}")
    if params.delta != 1:
        raise ValueError(
            f"a and d must be coprime, gcd({params.a}, {params.d}) = {params.delta}"
        )
    return pow(params.a, -1, params.d)


def sub_trajectory(params: Params, x: int, count: int) -> list[SubStep]:
    """The first count+1 division outputs of the trajectory of x.

    Requires coprime a, d with d >= 2, which guarantees divisions recur:
    n_{i+1} = (n_i + a*y_i) / d with y_i < d the minimal lift. The records
    satisfy the telescoped identity
    d^(k+1) * n_{k+1} = n_0 + a * sum(y_i * d^i for i <= k).
    """
    if x < 1:
        raise ValueError(f"start must be positive, got {x}")
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    a, d = params.a, params.d
    a_inv = _require_coprime_division(params)
    records = []
    n, z = x, 0
    for i in range(count + 1):
        y = (-n * a_inv) % d
        records.append(SubStep(index=i, step_index=z, value=n, y=y))
        n = (n + a * y) // d
        z += y + 1
    return records


def first_descent(params: Params, x: int) -> tuple[int, int]:
    """Least division index i with n_i <= a, together with n_i.

    The division outputs shrink strictly while above a, so this terminates,
    and i never exceeds ceil(log_d(max(x - a, 1))) + 1.
    """
    if x < 1:
        raise ValueError(f"start must be positive, got {x}")
    a, d = params.a, params.d
    a_inv = _require_coprime_division(params)
    n, i = x, 0
    while n > a:
        y = (-n * a_inv) % d
        n = (n + a * y) // d
        i += 1
    return i, n
