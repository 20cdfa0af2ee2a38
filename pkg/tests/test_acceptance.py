"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines. Every check is exact (zero tolerance); the three criteria with stated
runtime budgets also assert them.
"""

import json
import math
import time

from addcollatz.claims import run_all, run_claim
from addcollatz.cli import main as cli_main
from addcollatz.counting import (
    strong_bound_witness,
    xi_formula,
    xi_lower_bound,
    xi_pq,
)
from addcollatz.generalized import (
    GenParams,
    divisibility_reachable,
    gen_sub_trajectory,
    run_residue,
)
from addcollatz.numth import carmichael_lambda, is_prime
from addcollatz.orbits import burnside_count, permutation_cycles
from addcollatz.trajectory import Loops, Params, classify, first_descent


def report(criterion: str, violations: list, detail: str = "", elapsed: float | None = None):
    status = "PASS" if not violations else "FAIL"
    timing = f" [{elapsed:.2f}s]" if elapsed is not None else ""
    print(f"\n[{criterion}] {status} {detail}{timing}")
    assert not violations, f"{criterion}: first violations: {violations[:5]}"


def test_criterion_01_triple_oracle_orbit_count():
    started = time.perf_counter()
    violations = []
    checked = 0
    for a in range(1, 61):
        for d in range(1, 61):
            if math.gcd(a, d) != 1:
                continue
            checked += 1
            formula = xi_formula(a, d).total
            burnside = burnside_count(a, d)
            orbits = permutation_cycles(a, d).orbit_count
            if not formula == burnside == orbits:
                violations.append((a, d, formula, burnside, orbits))
    elapsed = time.perf_counter() - started
    report("criterion 1: triple-oracle orbit count", violations,
           f"{checked} coprime pairs, a,d <= 60", elapsed)
    assert elapsed < 10


def test_criterion_02_loop_count_bridge():
    started = time.perf_counter()
    violations = []
    checked = 0
    for a in range(1, 41):
        for d in range(2, 21):
            if math.gcd(a, d) != 1:
                continue
            checked += 1
            params = Params(a, d)
            cycles = set()
            for x in range(1, a + 1):
                verdict = classify(params, x)
                if not isinstance(verdict, Loops):
                    violations.append((a, d, x, "did not loop"))
                    continue
                cycles.add(verdict.cycle)
            expected = xi_formula(a, d).total
            if len(cycles) != expected:
                violations.append((a, d, len(cycles), expected))
    elapsed = time.perf_counter() - started
    report("criterion 2: loop-count bridge", violations,
           f"{checked} coprime pairs, a <= 40, 2 <= d <= 20", elapsed)
    assert elapsed < 30


def test_criterion_03_divergence_progression():
    violations = []
    checked = 0
    for a in range(1, 21):
        for d in range(1, 21):
            delta = math.gcd(a, d)
            if delta == 1:
                continue
            for x in range(1, 101):
                if x % delta == 0:
                    continue
                checked += 1
                v = x
                for k in range(1, 1001):
                    v = v // d if v % d == 0 else v + a
                    if v != x + a * k:
                        violations.append((a, d, x, k, v))
                        break
    report("criterion 3: linear divergence off the gcd lattice", violations,
           f"{checked} starts, a,d <= 20, 1000 iterates each")


def test_criterion_04_descent_and_closure():
    violations = []
    checked = 0
    for a in range(1, 21):
        for d in range(2, 13):
            if math.gcd(a, d) != 1:
                continue
            a_inv = pow(a, -1, d)
            closure_ok: dict[int, bool] = {}
            for x in range(1, 10_001):
                checked += 1
                n, k, d_pow = x, 0, 1
                descent_index = None
                while descent_index is None or k < descent_index + 4:
                    y = (-n * a_inv) % d
                    n = (n + a * y) // d
                    k += 1
                    d_pow *= d
                    # n_k <= (n_0 - a)/d^k + a, cross-multiplied exactly
                    if n * d_pow > (x - a) + a * d_pow:
                        violations.append((a, d, x, k, "bound"))
                        break
                    if descent_index is None and n <= a:
                        descent_index = k
                else:
                    idx, value = first_descent(Params(a, d), x)
                    expected_idx = 0 if x <= a else descent_index
                    if idx != expected_idx:
                        violations.append((a, d, x, "index", idx, expected_idx))
                    bound, power = 0, 1
                    while power < max(x - a, 1):
                        power *= d
                        bound += 1
                    if idx > bound + 1:
                        violations.append((a, d, x, "index bound", idx))
                    if value not in closure_ok:
                        seen = set()
                        v, ok = value, True
                        while v not in seen:
                            seen.add(v)
                            y = (-v * a_inv) % d
                            v = (v + a * y) // d
                            if v > a:
                                ok = False
                                break
                        closure_ok[value] = ok
                    if not closure_ok[value]:
                        violations.append((a, d, x, "closure", value))
    report("criterion 4: descent bound, index bound, closure below a",
           violations, f"{checked} starts, a <= 20, 2 <= d <= 12, x <= 10^4")


def test_criterion_05_claims_fixture():
    started = time.perf_counter()
    violations = []
    expected = {
        "L1": "COUNTEREXAMPLES", "P1": "PASS", "P2": "PASS", "P3": "PASS",
        "P4": "COUNTEREXAMPLES", "XI": "PASS", "LB": "PASS", "UB": "PASS",
        "PQ": "PASS", "G-EQ4": "PASS", "G-M1": "COUNTEREXAMPLES",
        "G-M1-COPRIME": "PASS", "G-SUB": "PASS",
    }
    observed = {rep.claim_id: rep.verdict for rep in run_all()}
    if observed != expected:
        violations.append({k: (expected[k], observed.get(k)) for k in expected
                           if observed.get(k) != expected[k]})
    p4 = run_claim("P4", ce_limit=None)
    if not any(ce["a"] == 4 and ce["d"] == 2 and ce["r"] == 2
               for ce in p4.counterexamples):
        violations.append("P4 missing (a=4, d=2, r=2)")
    l1 = run_claim("L1", ce_limit=None)
    if not any(ce["a"] == 6 and ce["d"] == 4 and ce["r"] == 8 and ce["k"] == 1
               for ce in l1.counterexamples):
        violations.append("L1 missing (a=6, d=4, r=8, k=1)")
    elapsed = time.perf_counter() - started
    report("criterion 5: claims verdict fixture", violations,
           f"{len(expected)} claims at default ranges", elapsed)
    assert elapsed < 60


def test_criterion_06_bounds_sandwich_and_witness():
    violations = []
    for a in range(1, 101):
        lower = xi_lower_bound(a)
        for d in range(1, a + 1):
            if math.gcd(a, d) != 1:
                continue
            total = xi_formula(a, d).total
            if not lower <= total <= a:
                violations.append((a, d, lower, total))
        if xi_formula(a, 1).total != a:
            violations.append((a, "d=1 not attained"))
        if strong_bound_witness(a) is None:
            violations.append((a, "no witness"))
    report("criterion 6: bound sandwich and attaining witness", violations,
           "a <= 100, all coprime d <= a")


def test_criterion_07_two_prime_closed_form():
    violations = []
    checked = 0
    primes = [p for p in range(2, 32) if is_prime(p)]
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            for d in range(1, 51):
                if math.gcd(d, p * q) != 1:
                    continue
                checked += 1
                closed = xi_pq(p, q, d)
                direct = xi_formula(p * q, d).total
                if closed != direct:
                    violations.append((p, q, d, closed, direct))
    report("criterion 7: two-prime closed form", violations,
           f"{checked} (p, q, d) triples, p < q <= 31, d <= 50")


def test_criterion_08_carmichael_is_max_order():
    violations = []
    for m in range(1, 201):
        brute = 1
        for u in range(1, m + 1):
            if math.gcd(u, m) == 1:
                t, v = 1, u % m if m > 1 else 0
                if m > 1:
                    while v != 1:
                        v = v * u % m
                        t += 1
                    brute = max(brute, t)
        if carmichael_lambda(m) != brute:
            violations.append((m, carmichael_lambda(m), brute))
    report("criterion 8: carmichael equals brute-force max order", violations,
           "m <= 200")


def test_criterion_09_generalized_regime():
    violations = []
    checked = 0
    for a in range(1, 11):
        for d in range(2, 13):
            if math.gcd(a, d) != 1:
                continue
            a_inv = pow(a, -1, d)
            for m in range(1, 11):
                if m % d != 1:
                    continue
                gp = GenParams(a, d, m)
                for x in range(1, 51):
                    checked += 1
                    if divisibility_reachable(gp, x) is None:
                        violations.append((a, d, m, x, "unreachable"))
                        continue
                    records = gen_sub_trajectory(gp, x, 6)
                    for prev, cur in zip(records, records[1:]):
                        run = cur.run_length
                        if run == 0:
                            ok = prev.value % d == 0 and d * cur.value == prev.value
                        else:
                            geometric = sum(m**j for j in range(run))
                            ok = (
                                d * cur.value == m**run * prev.value + a * geometric
                                and 1 <= run <= d - 1
                                and run % d == (-a_inv * prev.value) % d
                            )
                        if not ok:
                            violations.append((a, d, m, x, "recurrence", cur.index))
                            break
                    v = x
                    for r in range(31):
                        v = m * v + a
                        if run_residue(gp, x, r) != v % d:
                            violations.append((a, d, m, x, "residue", r))
                            break
    report("criterion 9: generalized recurrence, congruence, residue formula",
           violations, f"{checked} points, m = 1 (mod d), a,m <= 10, d <= 12, x <= 50")


def test_criterion_10_cli_contract(capsys):
    violations = []

    def run_json(*argv):
        code = cli_main(list(argv))
        out = capsys.readouterr().out
        envelope = json.loads(out)
        if code != 0:
            violations.append((argv, "exit", code))
        if envelope["schema_version"] != "1":
            violations.append((argv, "schema", envelope["schema_version"]))
        if json.loads(json.dumps(envelope)) != envelope:
            violations.append((argv, "round-trip"))
        return envelope["result"]

    count = run_json("count", "8", "3", "--method", "all")
    if not (count["formula"] == count["burnside"] == count["brute"] == 5):
        violations.append(("count", count))

    bounds = run_json("bounds", "8")
    if bounds["lower"] != 5 or bounds["witness_d"] != 3:
        violations.append(("bounds", bounds))

    verdict = run_json("classify", "4", "2", "2")
    if verdict != {"kind": "diverges", "steps_to_certificate": 1, "witness_value": 1}:
        violations.append(("classify", verdict))

    report("criterion 10: CLI golden outputs and envelope round-trip", violations,
           "count 8 3 / bounds 8 / classify 4 2 2")
