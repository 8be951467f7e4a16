"""Regression vectors run by ``intarcs selftest``."""

from __future__ import annotations

from intarcs import arith
from intarcs.arcs import (
    BigOmega,
    Omega,
    SumDigits,
    Tau,
    construct_sb_pair,
    decide_arc,
    decide_tau_exact,
    verdict_verifies,
    witness_sb,
    witness_tau,
)
from intarcs.outsets import frobenius_of_out


def _checked(f, n, u, v, kind):
    return v.kind == kind and verdict_verifies(f, n, u, v)


def run_selftest() -> list[tuple[str, bool]]:
    sb10 = SumDigits(10)
    checks = [
        ("digit sums of 123", arith.digit_sum(123, 10) == 6 and arith.digit_sum(123, 5) == 11),
        ("33 -/-> 3 in base 10", _checked(sb10, 33, 3, decide_arc(sb10, 33, 3), "refuted")),
        ("3 -> 6 in base 10 via 33", witness_sb(10, 3, 6).witness == 33),
        ("3 -> every multiple of 3 up to 30", all(
            _checked(sb10, 3, u, witness_sb(10, 3, u), "proven") for u in range(3, 31, 3))),
        ("pair for b=2, n=3", (lambda p: (p.A, p.B, p.a, p.ell) == (84, 180, 3, 4))(construct_sb_pair(2, 3))),
        ("Out(tau, 8) misses exactly 1..3", frobenius_of_out(Tau, 8) == 3),
        ("tau: 6 -/-> 5", _checked(Tau, 6, 5, decide_tau_exact(6, 5), "refuted")),
        ("tau: 6 -> 16 via 210", witness_tau(6, 16).witness == 210),
        ("tau: 1 -> 3 via 4", witness_tau(1, 3).witness == 4),
        ("omega: 12 -/-> 1", _checked(Omega, 12, 1, decide_arc(Omega, 12, 1), "refuted")),
        ("Omega: 12 -> 5 via 420", decide_arc(BigOmega, 12, 5).witness == 420),
        ("Out(omega, 12) Frobenius number", frobenius_of_out(Omega, 12) == 1),
    ]
    return checks
