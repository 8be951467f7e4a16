import random
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intarcs import arith


def trial_factor(n):
    out, p = [], 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@pytest.mark.parametrize("n, expected", [(12, ((2, 2), (3, 1))), (1, ()), (33, ((3, 1), (11, 1)))])
def test_factorize_examples(n, expected):
    assert arith.factorize(n) == expected


def test_factorize_rejects_zero_and_cap():
    with pytest.raises(ValueError):
        arith.factorize(0)
    with pytest.raises(arith.CapExceeded):
        arith.factorize(10**13)
    assert arith.factorize(10**13, cap=10**14) == ((2, 13), (5, 13))


def test_factorize_matches_trial_division():
    for n in range(1, 3000):
        assert arith.factorize(n) == trial_factor(n)


def test_factorize_large_prime_products():
    assert arith.factorize(999983 * 1000003, cap=10**13) == ((999983, 1), (1000003, 1))
    # raised cap leaves a composite cofactor above the trial bound
    n = 1000003 * 1000033 * 1000037
    assert arith.factorize(n, cap=10**20) == ((1000003, 1), (1000033, 1), (1000037, 1))


def test_is_prime_agrees_with_sieve():
    sieve = set(arith.primes_up_to(20000))
    assert all(arith.is_prime(k) == (k in sieve) for k in range(20000))
    assert arith.is_prime(2**61 - 1)
    assert not arith.is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def brute_profile(n):
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    primes = [p for p in divisors if p > 1 and all(p % q for q in range(2, p))]
    big, m = 0, n
    for p in primes:
        while m % p == 0:
            m //= p
            big += 1
    return arith.MultiplicativeProfile(
        tau=len(divisors), omega=len(primes), big_omega=big,
        phi=sum(1 for k in range(1, n + 1) if gcd(k, n) == 1), radical=prod(primes),
    )


@pytest.mark.parametrize("n", [1, 7, 12, 36, 97, 360, 1001])
def test_profile_against_enumeration(n):
    assert arith.profile(n) == brute_profile(n)


def test_profile_examples():
    assert arith.profile(12) == arith.MultiplicativeProfile(6, 2, 3, 4, 6)
    assert arith.profile(1) == arith.MultiplicativeProfile(1, 0, 0, 1, 1)
    assert arith.profile(7) == arith.MultiplicativeProfile(2, 1, 1, 6, 7)


def test_digit_expansion_examples():
    assert arith.digit_expansion(123, 10).digits == (3, 2, 1)
    assert arith.digit_expansion(123, 5).digits == (3, 4, 4)
    assert arith.digit_string(123, 5) == "443"
    assert arith.digit_expansion(1, 2).digits == (1,)
    with pytest.raises(ValueError):
        arith.digit_expansion(5, 1)


def test_power_digit_sum_examples():
    assert arith.power_digit_sum(123, 10, 1) == 6
    assert arith.power_digit_sum(123, 5, 1) == 11
    assert arith.power_digit_sum(123, 10, 2) == 14
    with pytest.raises(ValueError):
        arith.power_digit_sum(0, 10)


@pytest.mark.parametrize("b", [3, 10, 12, 61, 62, 63, 100, 1000])
def test_digit_sum_of_huge_values(b):
    rng = random.Random(b)
    digits = [rng.randrange(b) for _ in range(3000)] + [1]
    n = sum(d * b**i for i, d in enumerate(digits))
    assert arith.digit_sum(n, b) == sum(digits)
    assert arith.power_digit_sum(n, b, 3) == sum(d**3 for d in digits)
    assert arith.digits_lsf(n, b) == digits
    assert arith.digit_length(n, b) == len(digits)


def test_concat_examples():
    assert arith.concat_digits([3, 3], 10) == 33
    assert arith.concat_digits([57], 7) == 57
    assert arith.concat_digits([12, 5], 10) == 125
    with pytest.raises(ValueError):
        arith.concat_digits([3, 0], 10)
    assert arith.repeat_concat(12, 3, 10) == 121212
    assert arith.repeat_concat(5, 4, 2) == int("101" * 4, 2)


def brute_order(b, n):
    seen = {}
    e, x = 0, 1 % n
    while x not in seen:
        seen[x] = e
        e += 1
        x = x * b % n
    return seen[x], e - seen[x]


@pytest.mark.parametrize("b, n, rho, t", [(10, 33, 0, 2), (10, 3, 0, 1), (2, 8, 3, 1), (10, 1, 0, 1)])
def test_order_profile_examples(b, n, rho, t):
    prof = arith.order_profile(b, n)
    assert (prof.preperiod, prof.period) == (rho, t)


def test_order_profile_is_minimal():
    for b in range(2, 13):
        for n in range(1, 200):
            prof = arith.order_profile(b, n)
            assert (prof.preperiod, prof.period) == brute_order(b, n), (b, n)
            assert pow(b, prof.preperiod + prof.period, n) == pow(b, prof.preperiod, n)


def test_prime_power_and_fresh_primes():
    assert arith.is_prime_power(8) == (2, 3)
    assert arith.is_prime_power(12) is None
    assert arith.is_prime_power(1) == (None, 0)
    assert arith.generate_fresh_primes(3, {2, 3}) == [5, 7, 11]
    assert arith.generate_fresh_primes(0, {2}) == []
    assert arith.generate_fresh_primes(2, set()) == [2, 3]


def test_decimal_round_trip_beyond_str_limit():
    n = 7**20000
    assert arith.parse_natural(arith.to_decimal(n)) == n
    with pytest.raises(ValueError):
        arith.parse_natural("12a")


@settings(max_examples=300)
@given(st.integers(0, 10**6), st.integers(2, 16))
def test_round_trip(n, b):
    assert arith.digit_expansion(n, b).value == n
    ds = arith.digit_expansion(n, b).digits
    assert all(0 <= d < b for d in ds) and (ds[-1] != 0 or n == 0)


@settings(max_examples=300)
@given(st.integers(1, 10**5), st.integers(2, 12))
def test_digit_sum_congruent_mod_b_minus_1(N, b):
    assert (arith.digit_sum(N, b) - N) % (b - 1) == 0


def test_ceiling_floor_identity():
    assert all((b + 1) // 2 + b // 2 == b for b in range(2, 101))


@settings(max_examples=300)
@given(st.integers(1, 1000), st.integers(1, 1000))
def test_tau_multiplicative(m, n):
    if gcd(m, n) == 1:
        assert arith.profile(m * n).tau == arith.profile(m).tau * arith.profile(n).tau


@given(st.lists(st.integers(1, 10**9), min_size=1, max_size=6), st.integers(2, 16))
def test_concat_additivity(parts, b):
    N = arith.concat_digits(parts, b)
    assert arith.digit_sum(N, b) == sum(arith.digit_sum(p, b) for p in parts)
    assert arith.digit_string(N, b) == "".join(arith.digit_string(p, b) for p in parts) or b > 36
