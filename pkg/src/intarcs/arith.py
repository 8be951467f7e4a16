"""Exact integer primitives: factorization, digit expansions, multiplicative
profiles and the preperiod/period of powers of a base modulo n.

Witnesses elsewhere in the package can run to hundreds of thousands of
digits, so digit work on large values goes through gmpy2 (bases up to 62)
or a divide-and-conquer split (larger bases).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod

import gmpy2

DEFAULT_CAP = 10**12
TRIAL_LIMIT = 10**6

# Witnesses for a deterministic strong-pseudoprime test below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

Factorization = tuple[tuple[int, int], ...]


class CapExceeded(ValueError):
    """Raised when a value is too large to factor under the configured cap."""


@dataclass(frozen=True)
class DigitExpansion:
    base: int
    digits: tuple[int, ...]  # least significant first

    @property
    def value(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.base + d
        return v

    def msd_first(self) -> list[int]:
        return list(reversed(self.digits))


@dataclass(frozen=True)
class MultiplicativeProfile:
    tau: int
    omega: int
    big_omega: int
    phi: int
    radical: int


@dataclass(frozen=True)
class OrderProfile:
    modulus: int
    base: int
    preperiod: int
    period: int


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")


def _require_base(b: int) -> None:
    if b < 2:
        raise ValueError(f"base must be at least 2, got {b}")


# ---------------------------------------------------------------------------
# primes and factorization
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def primes_up_to(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        x = y = rng.randrange(2, n)
        c = rng.randrange(1, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int, cap: int | None = None) -> Factorization:
    """Prime factorization of ``n`` as ascending ``(prime, exponent)`` pairs.

    >>> factorize(12)
    ((2, 2), (3, 1))
    """
    _require_positive("n", n)
    cap = DEFAULT_CAP if cap is None else cap
    if n > cap:
        raise CapExceeded(f"{n} exceeds the factorization cap {cap}")
    found: dict[int, int] = {}
    limit = min(isqrt(n), TRIAL_LIMIT)
    for p in primes_up_to(TRIAL_LIMIT):
        if p > limit:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
            limit = min(isqrt(n), TRIAL_LIMIT)
    if n > 1:
        # above the trial bound only a raised cap can leave a composite here
        _split(n, found)
    return tuple(sorted(found.items()))


def factorization_value(f: Factorization) -> int:
    return prod(p**e for p, e in f)


def check_factorization(f: Factorization) -> bool:
    primes = [p for p, _ in f]
    return (
        all(a < b for a, b in zip(primes, primes[1:]))
        and all(e >= 1 and is_prime(p) for p, e in f)
    )


def normalize_factorization(pairs) -> Factorization:
    """Merge (prime, exponent) pairs, dropping zero exponents."""
    merged: dict[int, int] = {}
    for p, e in pairs:
        if e:
            merged[p] = merged.get(p, 0) + e
    return tuple(sorted(merged.items()))


def multiplicative_profile(f: Factorization) -> MultiplicativeProfile:
    return MultiplicativeProfile(
        tau=prod(e + 1 for _, e in f),
        omega=len(f),
        big_omega=sum(e for _, e in f),
        phi=prod(p ** (e - 1) * (p - 1) for p, e in f),
        radical=prod(p for p, _ in f),
    )


def profile(n: int, cap: int | None = None) -> MultiplicativeProfile:
    return multiplicative_profile(factorize(n, cap))


def euler_phi(n: int) -> int:
    return profile(n).phi


def radical(n: int) -> int:
    return profile(n).radical


def is_prime_power(n: int) -> tuple[int | None, int] | None:
    """``(p, k)`` with ``n == p**k``; ``(None, 0)`` for n = 1; None otherwise."""
    _require_positive("n", n)
    if n == 1:
        return (None, 0)
    f = factorize(n)
    if len(f) == 1:
        return f[0]
    return None


def generate_fresh_primes(count: int, avoid=()) -> list[int]:
    """The ``count`` smallest primes not in ``avoid``, ascending."""
    avoid = set(avoid)
    out: list[int] = []
    candidate = 2
    while len(out) < count:
        if candidate not in avoid and is_prime(candidate):
            out.append(candidate)
        candidate += 1 if candidate == 2 else 2
    return out


# ---------------------------------------------------------------------------
# digits
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _charset(b: int) -> tuple[str, ...]:
    return tuple(gmpy2.digits(v, b) for v in range(b))


def _digits_dc(n: int, b: int) -> list[int]:
    """Digits of n (least significant first) by recursive splitting."""
    if n < b:
        return [n]
    powers = [b]
    while powers[-1] ** 2 <= n:
        powers.append(powers[-1] ** 2)

    def rec(x: int, level: int, pad: bool) -> list[int]:
        if level < 0:
            return [x]
        hi, lo = divmod(x, powers[level])
        width = 1 << level
        low = rec(lo, level - 1, True)
        if not pad and hi == 0:
            return _trim(low)
        low += [0] * (width - len(low))
        return low + rec(hi, level - 1, pad)

    return _trim(rec(n, len(powers) - 1, False))


def _trim(ds: list[int]) -> list[int]:
    while len(ds) > 1 and ds[-1] == 0:
        ds.pop()
    return ds


def digits_lsf(n: int, b: int) -> list[int]:
    if n < 0:
        raise ValueError("digits of a negative value")
    _require_base(b)
    if n == 0:
        return [0]
    if b <= 62:
        lookup = {c: v for v, c in enumerate(_charset(b))}
        return [lookup[c] for c in reversed(gmpy2.digits(n, b))]
    return _digits_dc(n, b)


def digit_expansion(n: int, b: int) -> DigitExpansion:
    return DigitExpansion(base=b, digits=tuple(digits_lsf(n, b)))


def digit_string(n: int, b: int) -> str:
    """Most-significant-first rendering; bases above 36 use dotted decimal digits."""
    _require_base(b)
    if b <= 36:
        return gmpy2.digits(n, b)
    return ".".join(str(d) for d in reversed(digits_lsf(n, b)))


def digit_length(n: int, b: int) -> int:
    _require_base(b)
    if n == 0:
        return 1
    guess = max(1, int(gmpy2.mpz(n).num_digits(b)) - 1) if b <= 62 else 1
    # num_digits may overshoot by one
    while b**guess <= n:
        guess += 1
    return guess


def power_digit_sum(n: int, b: int, e: int = 1) -> int:
    """Sum of the e-th powers of the base-b digits of n."""
    _require_positive("n", n)
    _require_base(b)
    _require_positive("e", e)
    if n < (1 << 64):
        total = 0
        while n:
            n, d = divmod(n, b)
            total += d**e
        return total
    if b <= 62:
        s = gmpy2.digits(n, b)
        return sum(v**e * s.count(c) for v, c in enumerate(_charset(b)) if v)
    return sum(d**e for d in _digits_dc(n, b))


def digit_sum(n: int, b: int) -> int:
    return power_digit_sum(n, b, 1)


def concat_digits(parts, b: int) -> int:
    """Integer whose base-b digit string is the parts' strings, first part leading."""
    _require_base(b)
    parts = list(parts)
    if not parts:
        raise ValueError("concat_digits needs at least one part")
    result = 0
    for part in parts:
        _require_positive("part", part)
        result = result * b ** digit_length(part, b) + part
    return result


def repeat_concat(part: int, count: int, b: int) -> int:
    """``count`` copies of ``part`` side by side in base b (0 for count 0)."""
    _require_positive("part", part)
    if count < 0:
        raise ValueError("count must be non-negative")
    shift = gmpy2.mpz(b) ** digit_length(part, b)
    return int(part * ((shift**count - 1) // (shift - 1)))


def repunit(length: int, b: int) -> int:
    return (b**length - 1) // (b - 1)


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------

def multiplicative_order(b: int, m: int) -> int:
    """Order of b modulo m; requires gcd(b, m) = 1."""
    if m == 1:
        return 1
    if gcd(b, m) != 1:
        raise ValueError(f"{b} is not a unit modulo {m}")
    order = profile(m).phi
    for p, _ in factorize(order):
        while order % p == 0 and pow(b, order // p, m) == 1:
            order //= p
    return order


def order_profile(b: int, n: int) -> OrderProfile:
    """Minimal preperiod and period of the sequence b**e mod n."""
    _require_base(b)
    _require_positive("n", n)
    # split n into a part built from primes of b and a part coprime to b
    m = n
    g = gcd(m, b)
    while g > 1:
        m //= g
        g = gcd(m, b)
    head = n // m
    rho = 0
    while pow(b, rho, head) != 0 and head > 1:
        rho += 1
    return OrderProfile(modulus=n, base=b, preperiod=rho, period=multiplicative_order(b, m))


# ---------------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------------

def to_decimal(n: int) -> str:
    return gmpy2.digits(n, 10)


def parse_natural(text: str) -> int:
    text = text.strip()
    if not text or not text.isdigit():
        raise ValueError(f"not a natural number: {text!r}")
    return int(gmpy2.mpz(text, 10))
