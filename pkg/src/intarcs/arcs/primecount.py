from __future__ import annotations

from intarcs import arith
from intarcs.arcs.types import (
    BELOW_MINIMUM,
    BIG_OMEGA,
    OMEGA,
    ArcVerdict,
    Certificate,
    FunctionId,
    PreconditionError,
)


def prime_count_minimum(f: FunctionId, n: int) -> int:
    prof = arith.profile(n)
    return prof.omega if f.name == OMEGA else prof.big_omega


def decide_prime_count_arc(f: FunctionId, n: int, u: int) -> ArcVerdict:
    """omega and Omega arcs: reachable exactly from the count of n upward,
    by padding n with the smallest primes it does not already contain."""
    if f.name not in (OMEGA, BIG_OMEGA):
        raise PreconditionError(f"{f} is not a prime-counting function")
    if n < 1 or u < 1:
        raise PreconditionError("need n >= 1, u >= 1")
    fac = arith.factorize(n)
    prof = arith.multiplicative_profile(fac)
    low = prof.omega if f.name == OMEGA else prof.big_omega
    if u < low:
        return ArcVerdict.refuted(Certificate(BELOW_MINIMUM, {"min": low}))
    extra = arith.generate_fresh_primes(u - low, {p for p, _ in fac})
    wf = arith.normalize_factorization(list(fac) + [(p, 1) for p in extra])
    return ArcVerdict.proven(arith.factorization_value(wf), wf)
