"""Registry-driven harness that checks each documented claim over finite grids.

Every claim is a predicate swept over an explicit deterministic grid, never a
symbolic proof. A report either PASSes or carries concrete counterexample
tuples, each of which re-fails its claim when replayed individually. Three
claims are false as printed (L1, P4 and the unrestricted G-M1) and are
expected to carry counterexamples; the registry records the expected verdict
for each claim so callers can flag surprises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .counting import xi_formula, xi_lower_bound, xi_pq, strong_bound_witness
from .generalized import (
    GenParams,
    NoDivisibilityDivergence,
    divisibility_reachable,
    gen_classify,
    gen_step,
    gen_sub_trajectory,
)
from .numth import is_prime
from .orbits import burnside_count, permutation_cycles
from .trajectory import (
    Loops,
    Params,
    classify,
    first_descent,
    step,
    sub_trajectory,
)

DEFAULT_CE_LIMIT = 10

PASS = "PASS"
COUNTEREXAMPLES = "COUNTEREXAMPLES"


@dataclass(frozen=True)
class ClaimRanges:
    """Finite sweep grid shared by all claims; mins allow single-point runs."""

    a_max: int = 12
    d_max: int = 12
    x_max: int = 50
    iterate_k_max: int = 500
    scaling_k_max: int = 20
    m_max: int = 12
    prime_max: int = 31
    pq_d_max: int = 50
    subtraj_count: int = 6
    a_min: int = 1
    d_min: int = 1
    x_min: int = 1


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    statement: str
    range_description: str
    checked_count: int
    verdict: str
    counterexamples: tuple[dict, ...]
    counterexample_total: int

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "statement": self.statement,
            "range_description": self.range_description,
            "checked_count": self.checked_count,
            "verdict": self.verdict,
            "counterexamples": list(self.counterexamples),
            "counterexample_total": self.counterexample_total,
        }


@dataclass(frozen=True)
class ClaimDef:
    statement: str
    expected_verdict: str
    runner: Callable[[ClaimRanges], tuple[int, list[dict], str]]


def _a_range(r: ClaimRanges):
    return range(r.a_min, r.a_max + 1)


def _d_range(r: ClaimRanges, lo: int = 1):
    return range(max(lo, r.d_min), r.d_max + 1)


def _x_range(r: ClaimRanges, hi: int | None = None):
    top = r.x_max if hi is None else min(hi, r.x_max)
    return range(r.x_min, top + 1)


def _ceil_log(base: int, z: int) -> int:
    """Smallest e >= 0 with base**e >= z, exact."""
    e, p = 0, 1
    while p < z:
        p *= base
        e += 1
    return e


def _run_scaling(r: ClaimRanges):
    checked, ces = 0, []
    for a in _a_range(r):
        for d in _d_range(r):
            delta = math.gcd(a, d)
            whole = Params(a, d)
            reduced = Params(a // delta, d // delta)
            for start in range(delta, r.x_max + 1, delta):
                if start < r.x_min:
                    continue
                checked += 1
                left, right = start, start // delta
                for k in range(1, r.scaling_k_max + 1):
                    left = step(whole, left)
                    right = step(reduced, right)
                    if left != delta * right:
                        ces.append(
                            {"a": a, "d": d, "r": start, "k": k,
                             "left": left, "right": delta * right}
                        )
                        break
    desc = (
        f"a in [{r.a_min},{r.a_max}], d in [{r.d_min},{r.d_max}], "
        f"r multiples of gcd(a,d) up to {r.x_max}, k up to {r.scaling_k_max}"
    )
    return checked, ces, desc


def _run_linear_divergence(r: ClaimRanges):
    checked, ces = 0, []
    for a in _a_range(r):
        for d in _d_range(r):
            delta = math.gcd(a, d)
            if delta == 1:
                continue
            for x in _x_range(r):
                if x % delta == 0:
                    continue
                checked += 1
                v = x
                for k in range(1, r.iterate_k_max + 1):
                    v = v // d if v % d == 0 else v + a
                    if v != x + a * k:
                        ces.append(
                            {"a": a, "d": d, "x": x, "k": k,
                             "observed": v, "expected": x + a * k}
                        )
                        break
    desc = (
        f"a in [{r.a_min},{r.a_max}], d in [{r.d_min},{r.d_max}] with gcd(a,d) > 1, "
        f"x up to {r.x_max} off the gcd lattice, k up to {r.iterate_k_max}"
    )
    return checked, ces, desc


def _run_descent(r: ClaimRanges):
    checked, ces = 0, []
    for a in _a_range(r):
        for d in _d_range(r, lo=2):
            if math.gcd(a, d) != 1:
                continue
            params = Params(a, d)
            for x in _x_range(r):
                checked += 1
                idx, value = first_descent(params, x)
                problems = []
                if value > a:
                    problems.append(f"descent value {value} > {a}")
                if idx > _ceil_log(d, max(x - a, 1)) + 1:
                    problems.append(f"descent index {idx} over bound")
                if idx >= 1:
                    records = sub_trajectory(params, x, idx)
                    d_pow = 1
                    for k in range(1, idx + 1):
                        d_pow *= d
                        # n_k <= (n_0 - a)/d^k + a, cross-multiplied exactly
                        if records[k].value * d_pow > (x - a) + a * d_pow:
                            problems.append(f"bound fails at division {k}")
                            break
                if problems:
                    ces.append({"a": a, "d": d, "x": x, "why": "; ".join(problems)})
    desc = (
        f"coprime a in [{r.a_min},{r.a_max}], d in [2,{r.d_max}], x up to {r.x_max}"
    )
    return checked, ces, desc


def _run_small_start_loops(r: ClaimRanges):
    checked, ces = 0, []
    for a in _a_range(r):
        for d in _d_range(r):
            if math.gcd(a, d) != 1:
                continue
            params = Params(a, d)
            for x in _x_range(r, hi=a):
                checked += 1
                verdict = classify(params, x)
                if not isinstance(verdict, Loops):
                    ces.append({"a": a, "d": d, "x": x, "observed": repr(verdict)})
    desc = (
        f"coprime a in [{r.a_min},{r.a_max}], d in [{r.d_min},{r.d_max}], x up to min(a,{r.x_max})"
    )
    return checked, ces, desc


def _run_lattice_loops(r: ClaimRanges):
    checked, ces = 0, []
    for a in _a_range(r):
        for d in _d_range(r):
            delta = math.gcd(a, d)
            params = Params(a, d)
            for start in range(delta, r.x_max + 1, delta):
                if start < r.x_min:
                    continue
                checked += 1
                verdict = classify(params, start)
                if not isinstance(verdict, Loops):
                    ces.append(
                        {"a": a, "d": d, "r": start,
                         "observed": f"diverges with witness {verdict.witness_value}"}
                    )
    desc = (
        f"a in [{r.a_min},{r.a_max}], d in [{r.d_min},{r.d_max}], "
        f"r multiples of gcd(a,d) up to {r.x_max}"
    )
    return checked, ces, desc


def _run_orbit_formula(r: ClaimRanges):
    checked, ces = 0, []
    for a in _a_range(r):
        for d in _d_range(r):
            if math.gcd(a, d) != 1:
                continue
            checked += 1
            formula = xi_formula(a, d).total
            orbit = permutation_cycles(a, d).orbit_count
            burnside = burnside_count(a, d)
            if not formula == orbit == burnside:
                ces.append(
                    {"a": a, "d": d, "formula": formula,
                     "orbits": orbit, "burnside": burnside}
                )
    desc = f"coprime a in [{r.a_min},{r.a_max}], d in [{r.d_min},{r.d_max}]"
    return checked, ces, desc


def _run_lower_bound(r: ClaimRanges):
    checked, ces = 0, []
    for a in _a_range(r):
        checked += 1
        lb = xi_lower_bound(a)
        low = min(
            (xi_formula(a, d).total for d in range(1, a + 1) if math.gcd(a, d) == 1),
            default=lb,
        )
        witness = strong_bound_witness(a)
        if low < lb:
            ces.append({"a": a, "xi_inf": lb, "smaller_xi": low})
        elif witness is None:
            ces.append({"a": a, "xi_inf": lb, "why": "no attaining d found"})
    desc = f"a in [{r.a_min},{r.a_max}], all coprime d up to a"
    return checked, ces, desc


def _run_upper_bound(r: ClaimRanges):
    checked, ces = 0, []
    for a in _a_range(r):
        checked += 1
        high = max(
            (xi_formula(a, d).total for d in range(1, a + 1) if math.gcd(a, d) == 1),
            default=a,
        )
        at_one = xi_formula(a, 1).total
        if high > a or at_one != a:
            ces.append({"a": a, "max_xi": high, "xi_at_d1": at_one})
    desc = f"a in [{r.a_min},{r.a_max}], all coprime d up to a"
    return checked, ces, desc


def _run_two_prime(r: ClaimRanges):
    checked, ces = 0, []
    primes = [p for p in range(2, r.prime_max + 1) if is_prime(p)]
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            for d in range(1, r.pq_d_max + 1):
                if math.gcd(d, p * q) != 1:
                    continue
                checked += 1
                closed = xi_pq(p, q, d)
                direct = xi_formula(p * q, d).total
                if closed != direct:
                    ces.append(
                        {"p": p, "q": q, "d": d, "closed_form": closed, "direct": direct}
                    )
    desc = f"distinct primes p < q up to {r.prime_max}, coprime d up to {r.pq_d_max}"
    return checked, ces, desc


def _run_no_solution_divergence(r: ClaimRanges):
    checked, ces = 0, []
    for a in _a_range(r):
        for d in _d_range(r, lo=2):
            for m in range(1, r.m_max + 1):
                gp = GenParams(a, d, m)
                for x in _x_range(r):
                    if x % d == 0:
                        continue  # hypothesis regime: start never divisible
                    checked += 1
                    if divisibility_reachable(gp, x) is not None:
                        continue
                    fine = isinstance(
                        gen_classify(gp, x, cap=2 * d + 4), NoDivisibilityDivergence
                    )
                    v = x
                    for _ in range(2 * d + 2):
                        nxt = gen_step(gp, v)
                        if v % d == 0 or nxt <= v:
                            fine = False
                            break
                        v = nxt
                    if not fine:
                        ces.append({"a": a, "d": d, "m": m, "x": x,
                                    "why": "division branch or non-growth observed"})
    desc = (
        f"a in [{r.a_min},{r.a_max}], d in [2,{r.d_max}], m up to {r.m_max}, "
        f"x up to {r.x_max} with d not dividing x"
    )
    return checked, ces, desc


def _run_m1_solvable(r: ClaimRanges, coprime_only: bool):
    checked, ces = 0, []
    for a in _a_range(r):
        for d in _d_range(r, lo=2):
            if coprime_only and math.gcd(a, d) != 1:
                continue
            for m in range(1, r.m_max + 1):
                if m % d != 1:
                    continue
                gp = GenParams(a, d, m)
                for x in _x_range(r):
                    checked += 1
                    if divisibility_reachable(gp, x) is None:
                        ces.append({"a": a, "d": d, "m": m, "x": x,
                                    "observed": "no multiple of d reachable"})
    scope = "gcd(a,d) = 1 only" if coprime_only else "no coprimality restriction"
    desc = (
        f"a in [{r.a_min},{r.a_max}], d in [2,{r.d_max}], "
        f"m up to {r.m_max} with m = 1 (mod d), x up to {r.x_max}; {scope}"
    )
    return checked, ces, desc


def _run_subtrajectory_recurrence(r: ClaimRanges):
    checked, ces = 0, []
    for a in _a_range(r):
        for d in _d_range(r, lo=2):
            if math.gcd(a, d) != 1:
                continue
            a_inv = pow(a, -1, d)
            for m in range(1, r.m_max + 1):
                if m % d != 1:
                    continue
                gp = GenParams(a, d, m)
                for x in _x_range(r):
                    checked += 1
                    try:
                        records = gen_sub_trajectory(gp, x, r.subtraj_count)
                    except ValueError as exc:
                        ces.append({"a": a, "d": d, "m": m, "x": x, "why": str(exc)})
                        continue
                    for prev, cur in zip(records, records[1:]):
                        run = cur.run_length
                        if run == 0:
                            ok = prev.value % d == 0 and d * cur.value == prev.value
                        else:
                            geometric = sum(m**j for j in range(run))
                            ok = (
                                d * cur.value == m**run * prev.value + a * geometric
                                and prev.value % d != 0
                                and 1 <= run <= d - 1
                                and run % d == (-a_inv * prev.value) % d
                            )
                        if not ok:
                            ces.append(
                                {"a": a, "d": d, "m": m, "x": x,
                                 "record": cur.index, "run_length": run}
                            )
                            break
    desc = (
        f"coprime a in [{r.a_min},{r.a_max}], d in [2,{r.d_max}], "
        f"m up to {r.m_max} with m = 1 (mod d), x up to {r.x_max}, "
        f"{r.subtraj_count} division outputs each"
    )
    return checked, ces, desc


REGISTRY: dict[str, ClaimDef] = {
    "L1": ClaimDef(
        "scaling: T_(a,d)^k(r) = g * T_(a/g,d/g)^k(r/g) for r = 0 (mod g), g = gcd(a,d)",
        COUNTEREXAMPLES,
        _run_scaling,
    ),
    "P1": ClaimDef(
        "off the gcd lattice the trajectory is the arithmetic progression x + a*k",
        PASS,
        _run_linear_divergence,
    ),
    "P2": ClaimDef(
        "coprime a, d with d >= 2: some iterate is <= a, with division outputs "
        "obeying n_k <= (n_0 - a)/d^k + a",
        PASS,
        _run_descent,
    ),
    "P3": ClaimDef(
        "coprime a, d: every start x <= a loops",
        PASS,
        _run_small_start_loops,
    ),
    "P4": ClaimDef(
        "every start r = 0 (mod gcd(a,d)) loops",
        COUNTEREXAMPLES,
        _run_lattice_loops,
    ),
    "XI": ClaimDef(
        "xi(a,d) = sum of phi(f)/alpha_f(d) over divisors f of a equals the "
        "orbit count of multiplication by d on Z/aZ",
        PASS,
        _run_orbit_formula,
    ),
    "LB": ClaimDef(
        "xi_inf(a) = sum of phi(f)/lambda(f) bounds xi(a,d) below and is attained",
        PASS,
        _run_lower_bound,
    ),
    "UB": ClaimDef(
        "xi(a,d) <= a with equality at d = 1",
        PASS,
        _run_upper_bound,
    ),
    "PQ": ClaimDef(
        "for distinct primes: xi(pq,d) = 1 + (p-1)/a_p + (q-1)/a_q "
        "+ (p-1)(q-1)gcd(a_p,a_q)/(a_p*a_q)",
        PASS,
        _run_two_prime,
    ),
    "G-EQ4": ClaimDef(
        "if no run of multiply-add steps from x (d never dividing x) reaches a "
        "multiple of d, the trajectory of x never loops",
        PASS,
        _run_no_solution_divergence,
    ),
    "G-M1": ClaimDef(
        "m = 1 (mod d) makes a multiple of d reachable from every start "
        "(as printed, without a coprimality hypothesis)",
        COUNTEREXAMPLES,
        lambda r: _run_m1_solvable(r, coprime_only=False),
    ),
    "G-M1-COPRIME": ClaimDef(
        "m = 1 (mod d) with gcd(a,d) = 1 makes a multiple of d reachable from "
        "every start",
        PASS,
        lambda r: _run_m1_solvable(r, coprime_only=True),
    ),
    "G-SUB": ClaimDef(
        "division outputs obey d*n_(i+1) = m^r * n_i + a*(m^(r-1)+...+1) with "
        "r = -n_i/a (mod d) when m = 1 (mod d)",
        PASS,
        _run_subtrajectory_recurrence,
    ),
}


def expected_verdicts() -> dict[str, str]:
    return {cid: cdef.expected_verdict for cid, cdef in REGISTRY.items()}


def run_claim(
    claim_id: str,
    ranges: ClaimRanges | None = None,
    ce_limit: int | None = DEFAULT_CE_LIMIT,
) -> ClaimReport:
    """Evaluate one registered claim; ce_limit=None keeps every counterexample."""
    if claim_id not in REGISTRY:
        raise ValueError(f"unknown claim id {claim_id!r}; known: {', '.join(REGISTRY)}")
    if ce_limit is not None and ce_limit < 1:
        raise ValueError(f"ce_limit must be positive or None, got {ce_limit}")
    cdef = REGISTRY[claim_id]
    ranges = ranges or ClaimRanges()
    checked, ces, desc = cdef.runner(ranges)
    kept = ces if ce_limit is None else ces[:ce_limit]
    return ClaimReport(
        claim_id=claim_id,
        statement=cdef.statement,
        range_description=desc,
        checked_count=checked,
        verdict=PASS if not ces else COUNTEREXAMPLES,
        counterexamples=tuple(kept),
        counterexample_total=len(ces),
    )


def run_all(
    ranges: ClaimRanges | None = None,
    ce_limit: int | None = DEFAULT_CE_LIMIT,
) -> list[ClaimReport]:
    """One report per registered claim, in registry order."""
    return [run_claim(cid, ranges, ce_limit) for cid in REGISTRY]


def surprise_claims(reports: list[ClaimReport]) -> list[str]:
    """Claims whose verdict contradicts the recorded expectation.

    A claim expected to PASS that produced counterexamples is a genuine
    finding (or a library bug) and drives the CLI exit code.
    """
    return [
        rep.claim_id
        for rep in reports
        if REGISTRY[rep.claim_id].expected_verdict == PASS
        and rep.verdict == COUNTEREXAMPLES
    ]
