from __future__ import annotations

from math import gcd

from intarcs import arith
from intarcs.arcs.evaluate import eval_function, verify_arc_witness
from intarcs.arcs.oracle import oracle_search
from intarcs.arcs.primecount import decide_prime_count_arc, prime_count_minimum
from intarcs.arcs.sumdigits import decide_sb_exact, witness_sb
from intarcs.arcs.tau import decide_tau_exact, witness_tau
from intarcs.arcs.types import (
    BELOW_MINIMUM,
    BIG_OMEGA,
    HAPPY,
    K_BOUNDED_EXHAUSTION,
    MODULAR_EXHAUSTION,
    OMEGA,
    RESIDUE_CLASS,
    SUM_DIGITS,
    TAU,
    TAU_EXHAUSTION,
    ArcVerdict,
    Certificate,
    FunctionId,
    PreconditionError,
)
from intarcs.budget import DEFAULT_BUDGET, ExplorationBudget


def residue_obstruction(f: FunctionId, n: int, u: int) -> Certificate | None:
    """Cheap refutation: digit sums of multiples of n are multiples of gcd(b-1, n)."""
    if f.name != SUM_DIGITS:
        return None
    d = gcd(f.b - 1, n)
    if d > 1 and u % d:
        return Certificate(RESIDUE_CLASS, {"d": d})
    return None


def decide_arc(f: FunctionId, n: int, u: int,
               budget: ExplorationBudget = DEFAULT_BUDGET) -> ArcVerdict:
    if n < 1 or u < 1:
        raise PreconditionError("need n >= 1, u >= 1")
    if f.name == SUM_DIGITS:
        cert = residue_obstruction(f, n, u)
        if cert:
            return ArcVerdict.refuted(cert)
        return witness_sb(f.b, n, u, budget)
    if f.name == TAU:
        return witness_tau(n, u)
    if f.name in (OMEGA, BIG_OMEGA):
        return decide_prime_count_arc(f, n, u)
    N = oracle_search(f, n, u, budget.oracle_k_max)
    if N is None:
        return ArcVerdict.unknown(f"scanned {budget.oracle_k_max} multiples")
    return ArcVerdict.proven(N)


def k_bounded_scan(f: FunctionId, n: int, u: int, k: int) -> ArcVerdict:
    """Exact answer to: is there N in {n, ..., k*n} with g(N) = u?"""
    if k < 1 or n < 1 or u < 1:
        raise PreconditionError("need n, u, k >= 1")
    N = oracle_search(f, n, u, k)
    if N is None:
        return ArcVerdict.refuted(Certificate(K_BOUNDED_EXHAUSTION, {"k": k}))
    return ArcVerdict.proven(N)


def verdict_verifies(f: FunctionId, n: int, u: int, verdict: ArcVerdict) -> bool:
    """Re-check a verdict independently of how it was produced."""
    if verdict.is_proven:
        return verify_arc_witness(f, n, u, verdict.witness, verdict.factorization)
    if verdict.is_refuted:
        return recheck_certificate(f, n, u, verdict.certificate)
    return True


def recheck_certificate(f: FunctionId, n: int, u: int, cert: Certificate) -> bool:
    kind, data = cert.kind, cert.data
    if kind == RESIDUE_CLASS:
        d = data["d"]
        return f.name == SUM_DIGITS and d > 1 and (f.b - 1) % d == 0 and n % d == 0 and u % d != 0
    if kind == BELOW_MINIMUM:
        if f.name == TAU:
            low = arith.profile(n).tau
        elif f.name in (OMEGA, BIG_OMEGA):
            low = prime_count_minimum(f, n)
        else:
            return False
        return data["min"] == low and u < low
    if kind == MODULAR_EXHAUSTION:
        if f.name != SUM_DIGITS or (data["b"], data["n"], data["u"]) != (f.b, n, u):
            return False
        return decide_sb_exact(f.b, n, u, data["r"]).is_refuted
    if kind == TAU_EXHAUSTION:
        return f.name == TAU and decide_tau_exact(n, u).is_refuted
    if kind == K_BOUNDED_EXHAUSTION:
        k = data["k"]
        return all(eval_function(f, j * n) != u for j in range(1, k + 1))
    return False


def is_exact(f: FunctionId) -> bool:
    return f.name != HAPPY
