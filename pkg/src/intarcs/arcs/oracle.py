"""Brute-force scans over multiples, used both for bounded arcs and as the
independent check on the exact deciders.

Values are evaluated in bulk with numpy: digit functions by repeated
division, tau/omega/Omega from a smallest-prime-factor sieve.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from intarcs.arcs.types import BIG_OMEGA, OMEGA, TAU, FunctionId
from intarcs.arith import CapExceeded

SIEVE_CAP = 3 * 10**7
DIGIT_CAP = 2**62
CHUNK = 1 << 18

_spf: np.ndarray | None = None


def _spf_sieve(limit: int) -> np.ndarray:
    global _spf
    if _spf is not None and len(_spf) > limit:
        return _spf
    if limit > SIEVE_CAP:
        raise CapExceeded(f"oracle sieve limit {limit} exceeds {SIEVE_CAP}")
    size = min(SIEVE_CAP, max(1 << 16, 1 << int(limit).bit_length())) + 1
    spf = np.zeros(size, dtype=np.int32)
    for p in range(2, int(size**0.5) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    idx = np.nonzero(spf == 0)[0]
    spf[idx] = idx
    _spf = spf
    return spf


def _prime_counts(values: np.ndarray, which: str) -> np.ndarray:
    spf = _spf_sieve(int(values.max()))
    x = values.astype(np.int64)
    tau = np.ones_like(x)
    omega = np.zeros_like(x)
    big = np.zeros_like(x)
    run = np.zeros_like(x)
    last = np.zeros_like(x)
    active = np.nonzero(x > 1)[0]
    while active.size:
        xa = x[active]
        p = spf[xa].astype(np.int64)
        fresh = p != last[active]
        # close the previous prime's run when a new prime starts
        tau[active] *= np.where(fresh, run[active] + 1, 1)
        run[active] = np.where(fresh, 1, run[active] + 1)
        omega[active] += fresh
        big[active] += 1
        last[active] = p
        x[active] = xa // p
        active = active[x[active] > 1]
    tau *= run + 1
    return {TAU: tau, OMEGA: omega, BIG_OMEGA: big}[which]


def evaluate_many(f: FunctionId, values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=np.int64)
    if values.size == 0:
        return values
    if int(values.min()) < 1:
        raise ValueError("oracle values must be positive")
    if f.name in (TAU, OMEGA, BIG_OMEGA):
        return _prime_counts(values, f.name)
    if int(values.max()) > DIGIT_CAP:
        raise CapExceeded("oracle digit scan beyond 2**62")
    x = values.copy()
    total = np.zeros_like(x)
    e = f.exponent
    while x.any():
        x, d = np.divmod(x, f.b)
        total += d**e
    return total


@lru_cache(maxsize=512)
def first_hits(f: FunctionId, start: int, step: int, count: int) -> dict[int, int]:
    """Map each value g takes on start, start+step, ... (count terms) to the
    index of its first occurrence."""
    hits: dict[int, int] = {}
    for lo in range(0, count, CHUNK):
        idx = np.arange(lo, min(count, lo + CHUNK), dtype=np.int64)
        vals = evaluate_many(f, start + step * idx)
        uniq, pos = np.unique(vals, return_index=True)
        for v, i in zip(uniq.tolist(), pos.tolist()):
            hits.setdefault(v, lo + i)
    return hits


def oracle_search(f: FunctionId, n: int, u: int, k_max: int) -> int | None:
    """Smallest N in {n, 2n, ..., k_max*n} with g(N) = u, or None."""
    if k_max < 1 or n < 1:
        raise ValueError("need n >= 1 and k_max >= 1")
    j = first_hits(f, n, n, k_max).get(u)
    return None if j is None else n * (j + 1)


def progression_search(f: FunctionId, r: int, n: int, u: int, count: int) -> int | None:
    """Smallest positive N = r (mod n) among the first ``count`` such terms
    with g(N) = u."""
    start = r if r > 0 else n
    j = first_hits(f, start, n, count).get(u)
    return None if j is None else start + n * j
