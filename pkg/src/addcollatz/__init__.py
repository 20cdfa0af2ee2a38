"""Additive Collatz trajectories: iteration, certificates, and loop counting.

The map T sends x to x/d when d | x and to x + a otherwise. This package
classifies every trajectory with a machine-checkable certificate, counts the
distinct loops through a divisor-sum formula cross-checked against orbit
enumeration, handles the multiply-add generalization, and ships a harness
that re-verifies each documented claim over finite grids.
"""

from .claims import (
    ClaimRanges,
    ClaimReport,
    REGISTRY,
    expected_verdicts,
    run_all,
    run_claim,
    surprise_claims,
)
from .counting import (
    XiBreakdown,
    XiTerm,
    strong_bound_witness,
    xi_formula,
    xi_lower_bound,
    xi_pq,
)
from .errors import CapExceededError, InvariantViolation
from .generalized import (
    DEFAULT_GEN_CAP,
    GenClass,
    GenParams,
    GenSubStep,
    NoDivisibilityDivergence,
    Unknown,
    divisibility_reachable,
    gen_classify,
    gen_step,
    gen_sub_trajectory,
    run_residue,
)
from .numth import (
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
from .orbits import (
    OrbitPartition,
    burnside_count,
    loop_for_residue,
    permutation_cycles,
    stabilizer_size,
)
from .trajectory import (
    DEFAULT_CLASSIFY_CAP,
    Diverges,
    Loops,
    Params,
    SubStep,
    TrajectoryClass,
    canonical_cycle,
    classify,
    first_descent,
    iterate,
    step,
    sub_trajectory,
)

__version__ = "0.1.0"
