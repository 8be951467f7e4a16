"""Divisor-count arcs.

A multiple N of n = p_1^e_1 ... p_k^e_k has tau(N) = c_1 ... c_k * rest,
where c_i >= e_i + 1 are the new exponents plus one and ``rest`` comes
from primes outside n. Any rest >= 2 is realized by one fresh prime q
with exponent rest - 1, so u is reachable exactly when some admissible
tuple (c_i) has product dividing u.
"""

from __future__ import annotations

from math import log

from intarcs import arith
from intarcs.arcs.types import (
    BELOW_MINIMUM,
    TAU_EXHAUSTION,
    ArcVerdict,
    Certificate,
    PreconditionError,
)


def _divisors(u: int) -> list[int]:
    divs = [1]
    for p, e in arith.factorize(u):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _admissible_tuples(exponents: list[int], u: int):
    """Yield every (c_1..c_k) with c_i >= e_i + 1 and product dividing u."""
    divs = _divisors(u)

    def rec(i: int, remaining: int, acc: tuple[int, ...]):
        if i == len(exponents):
            yield acc
            return
        for c in divs:
            if c > remaining:
                break
            if c >= exponents[i] + 1 and remaining % c == 0:
                yield from rec(i + 1, remaining // c, acc + (c,))

    yield from rec(0, u, ())


def _witness(fac, cs, cofactor: int):
    pairs = [(p, c - 1) for (p, _), c in zip(fac, cs)]
    if cofactor > 1:
        q = arith.generate_fresh_primes(1, {p for p, _ in fac})[0]
        pairs.append((q, cofactor - 1))
    wf = arith.normalize_factorization(pairs)
    return arith.factorization_value(wf), wf


def decide_tau_exact(n: int, u: int) -> ArcVerdict:
    """Exact membership of u in Out(tau, n).

    Among all admissible tuples the one giving the numerically smallest
    witness is returned, ties broken by the tuple itself.
    """
    if n < 1 or u < 1:
        raise PreconditionError("need n >= 1, u >= 1")
    fac = arith.factorize(n)
    exps = [e for _, e in fac]
    q = arith.generate_fresh_primes(1, {p for p, _ in fac})[0]
    best = None
    for cs in _admissible_tuples(exps, u):
        prod_c = 1
        for c in cs:
            prod_c *= c
        cof = u // prod_c
        size = sum((c - 1) * log(p) for (p, _), c in zip(fac, cs)) + (cof - 1) * log(q)
        key = (size, cs)
        if best is None or key < best:
            best = key
    if best is None:
        return ArcVerdict.refuted(Certificate(TAU_EXHAUSTION, {
            "n": n, "u": u, "exponents": exps, "divisors_of_u": len(_divisors(u)),
            "admissible_tuples": 0,
        }))
    cs = best[1]
    prod_c = 1
    for c in cs:
        prod_c *= c
    N, wf = _witness(fac, cs, u // prod_c)
    return ArcVerdict.proven(N, wf)


def witness_tau(n: int, u: int) -> ArcVerdict:
    if n < 1 or u < 1:
        raise PreconditionError("need n >= 1, u >= 1")
    fac = arith.factorize(n)
    tau_n = arith.multiplicative_profile(fac).tau
    if u < tau_n:
        return ArcVerdict.refuted(Certificate(BELOW_MINIMUM, {"min": tau_n}))
    q, rem = divmod(u, tau_n)
    if rem == 0 and q > 1 and q & (q - 1) == 0:
        # u = 2^l * tau(n): append l fresh primes to n
        extra = arith.generate_fresh_primes(q.bit_length() - 1, {p for p, _ in fac})
        wf = arith.normalize_factorization(list(fac) + [(p, 1) for p in extra])
        return ArcVerdict.proven(arith.factorization_value(wf), wf)
    return decide_tau_exact(n, u)
