from __future__ import annotations

from intarcs import arith
from intarcs.arcs.types import BIG_OMEGA, OMEGA, TAU, FunctionId


def eval_function(f: FunctionId, N: int, factorization=None, cap: int | None = None) -> int:
    """g(N) for the selected function.

    Factor-based functions need N within ``cap`` unless a factorization of N
    is supplied; a supplied factorization is checked, not trusted.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if f.name not in (TAU, OMEGA, BIG_OMEGA):
        return arith.power_digit_sum(N, f.b, f.exponent)
    if factorization is None:
        fac = arith.factorize(N, cap)
    else:
        fac = tuple(factorization)
        if not arith.check_factorization(fac) or arith.factorization_value(fac) != N:
            raise ValueError("supplied factorization does not match N")
    prof = arith.multiplicative_profile(fac)
    if f.name == TAU:
        return prof.tau
    if f.name == OMEGA:
        return prof.omega
    return prof.big_omega


def verify_arc_witness(f: FunctionId, n: int, u: int, N: int, factorization=None,
                       cap: int | None = None) -> bool:
    if min(n, u, N) < 1:
        raise ValueError("n, u and N must be positive")
    if N % n:
        return False
    return eval_function(f, N, factorization, cap) == u
