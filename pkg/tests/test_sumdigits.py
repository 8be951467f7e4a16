from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intarcs import arith
from intarcs.arcs import (
    NotRepresentable,
    PreconditionError,
    SumDigits,
    construct_sb_pair,
    decide_sb_exact,
    oracle_search,
    recheck_certificate,
    solve_coin_representation,
    verdict_verifies,
    verify_arc_witness,
    witness_sb,
)
from intarcs.arcs.sumdigits import split_coprime_part
from intarcs.budget import ExplorationBudget


def test_pair_b2_n3():
    p = construct_sb_pair(2, 3)
    assert (p.A, p.B) == (84, 180)
    assert (p.a, p.ell, p.c, p.m, p.phi_m) == (3, 4, 0, 3, 2)
    assert p.A % 3 == 0 and p.B % 3 == 0


def test_pair_b10_n7():
    p = construct_sb_pair(10, 7)
    assert p.A == sum(10 ** (6 * j) for j in range(1, 8))
    assert p.B == sum(10 ** (6 * j) for j in range(1, 7)) + 5 * 10**41 + 5 * 10**47
    assert (p.a, p.ell) == (7, 16)
    assert p.A % 7 == 0 and p.B % 7 == 0


@pytest.mark.parametrize("b, n", [(3, 4), (10, 1), (2, 8), (10, 3)])
def test_pair_preconditions(b, n):
    with pytest.raises(PreconditionError):
        construct_sb_pair(b, n)


def test_pair_invariants_over_range():
    for b in range(2, 17):
        for n in range(2, 80):
            if gcd(b - 1, n) != 1:
                continue
            _, m = split_coprime_part(b, n)
            if b == 2 and m == 1:
                continue
            p = construct_sb_pair(b, n)
            assert p.A % n == 0 and p.B % n == 0
            assert p.a == n and p.ell == n - 1 + b
            assert gcd(p.a, p.ell) == 1


def test_coin_examples():
    assert solve_coin_representation(3, 4, 6) == (2, 0)
    assert solve_coin_representation(1, 9, 17) == (17, 0)
    with pytest.raises(NotRepresentable):
        solve_coin_representation(3, 4, 5)
    with pytest.raises(PreconditionError):
        solve_coin_representation(4, 6, 100)
    # below the threshold but representable anyway
    assert solve_coin_representation(3, 4, 4) == (0, 1)


@given(st.integers(1, 60), st.integers(1, 60), st.integers(0, 5000))
def test_coin_identity(a, ell, extra):
    if gcd(a, ell) != 1:
        return
    u = (a - 1) * (ell - 1) + extra
    x, y = solve_coin_representation(a, ell, u)
    assert x >= 0 and 0 <= y < max(a, 1) and a * x + ell * y == u


def test_coin_threshold_is_sharp():
    # (a-1)(ell-1) - 1 is never representable
    for a in range(2, 15):
        for ell in range(2, 15):
            if gcd(a, ell) == 1:
                with pytest.raises(NotRepresentable):
                    solve_coin_representation(a, ell, (a - 1) * (ell - 1) - 1)


def test_witness_examples():
    assert witness_sb(10, 3, 6).witness == 33
    assert witness_sb(2, 4, 3).witness == 28
    v = witness_sb(10, 33, 3)
    assert v.is_refuted and v.certificate.kind == "modular_exhaustion"
    assert v.certificate.data == {"b": 10, "n": 33, "u": 3, "r": 0, "rho": 0, "t": 2}


def test_decide_examples():
    assert decide_sb_exact(10, 33, 3, 0).is_refuted
    v = decide_sb_exact(10, 33, 6, 0)
    assert v.is_proven and verify_arc_witness(SumDigits(10), 33, 6, v.witness)
    # 33 itself has digit sum 6; 231 is another witness
    assert oracle_search(SumDigits(10), 33, 6, 100) == 33
    assert verify_arc_witness(SumDigits(10), 33, 6, 231)
    assert decide_sb_exact(10, 33, 1, 3).is_refuted


def test_decide_budget_gives_unknown():
    v = decide_sb_exact(10, 1000, 20, 0, ExplorationBudget(dp_state_cap=1000))
    assert v.is_unknown


def test_decide_residue_target_against_scan():
    # every N = r (mod n) with s_b(N) = u below 20000 must agree with the decider
    for b in (2, 3, 10):
        for n in range(1, 14):
            for r in range(n):
                seen = set()
                for N in range(r or n, 20000, n):
                    seen.add(arith.digit_sum(N, b))
                for u in range(1, 8):
                    v = decide_sb_exact(b, n, u, r)
                    if u in seen:
                        assert v.is_proven, (b, n, r, u)
                    if v.is_proven:
                        N = v.witness
                        assert N % n == r and arith.digit_sum(N, b) == u


def test_reconstruction_is_deterministic():
    a = decide_sb_exact(7, 29, 13, 0).witness
    b = decide_sb_exact(7, 29, 13, 0).witness
    assert a == b


def test_dispatch_paths_all_verify():
    f10 = SumDigits(10)
    assert witness_sb(10, 1, 5).witness == 11111
    assert witness_sb(10, 40, 3).witness == 1000 * 111  # 40 = 2^3 * 5, so 10^3 times a repunit
    assert witness_sb(10, 12, 6).witness == 1212
    big = witness_sb(10, 7, 95)  # above (7-1)(16-1) = 90: copies of A then B
    assert verify_arc_witness(f10, 7, 95, big.witness)
    small = witness_sb(10, 7, 2)  # falls through to the table
    assert small.is_proven and verify_arc_witness(f10, 7, 2, small.witness)


def test_witness_digit_cap():
    v = witness_sb(10, 7, 200, ExplorationBudget(max_witness_digits=50))
    assert v.is_unknown


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12), st.integers(1, 40), st.integers(1, 10))
def test_self_concatenation_hits_multiples_of_digit_sum(b, n, k):
    u = k * arith.digit_sum(n, b)
    N = arith.repeat_concat(n, k, b)
    assert verify_arc_witness(SumDigits(b), n, u, N)
    assert decide_sb_exact(b, n, u, 0).is_proven


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.integers(1, 40), st.integers(1, 40))
def test_soundness_and_residue_containment(b, n, u):
    v = witness_sb(b, n, u)
    assert verdict_verifies(SumDigits(b), n, u, v)
    if v.is_proven:
        assert u % gcd(b - 1, n) == 0
    if v.is_refuted:
        assert recheck_certificate(SumDigits(b), n, u, v.certificate)
