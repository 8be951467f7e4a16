"""Shape of Out(g, n): which u are reachable from n, and the Frobenius
number of that set when its complement is finite."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from intarcs import arith
from intarcs.arcs import (
    ArcVerdict,
    FunctionId,
    PreconditionError,
    construct_sb_pair,
    decide_arc,
    decide_sb_exact,
    sb_reachable_counts,
)
from intarcs.arcs.types import BIG_OMEGA, OMEGA, SUM_DIGITS, TAU
from intarcs.budget import DEFAULT_BUDGET, ExplorationBudget

FULL = "full"
EXACT_TAIL = "exact_tail"
COFINITE_COMPUTED = "cofinite_computed"
RESIDUE_CONSTRAINED = "residue_constrained"
INFINITE_NOT_COFINITE = "infinite_not_cofinite"

ESTABLISHED = "established"
STRICT_WITNESS = "strict_witness"
UNDECIDED = "undecided_within_bound"

STRICTNESS_HORIZON = 50  # multiples of d searched for a missing member


class NoFrobeniusNumber(ValueError):
    pass


@dataclass(frozen=True)
class OutCharacterization:
    kind: str
    reason: str | None = None
    min_u: int | None = None
    frobenius: int | None = None
    proven_bound: int | None = None
    d: int | None = None
    equality: str | None = None
    strict_witness: int | None = None
    minimum: int | None = None

    def as_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass(frozen=True)
class MembershipPrefix:
    f: FunctionId
    n: int
    entries: tuple[tuple[int, ArcVerdict], ...]

    def labels(self) -> list[str]:
        return [label(v) for _, v in self.entries]

    def members(self) -> list[int]:
        return [u for u, v in self.entries if v.is_proven]


def label(v: ArcVerdict) -> str:
    if v.is_proven:
        return "member"
    return "non-member" if v.is_refuted else "unknown"


def _tail(m: int, reason: str) -> OutCharacterization:
    if m <= 1:
        return OutCharacterization(FULL, reason=reason)
    return OutCharacterization(EXACT_TAIL, min_u=m)


def _sb_full(b: int, n: int) -> bool:
    return gcd(b - 1, n) == 1 and all(b % p == 0 for p, _ in arith.factorize(n))


def _sb_frobenius(b: int, n: int, budget: ExplorationBudget) -> tuple[int, int]:
    """Largest u outside Out(s_b, n), with the coin threshold that bounds it.

    Out(s_b, n) is closed under addition (writing two multiples of n side by
    side gives a multiple of n whose digit sum is the total), so once a run
    of consecutive members is as long as the smallest member, every later u
    is a member too and the sweep can stop short of the threshold.
    """
    bound = construct_sb_pair(b, n).threshold
    if bound * n > budget.dp_state_cap:
        raise NoFrobeniusNumber(f"sweep to {bound} exceeds the dp budget")
    last_gap, smallest, run = 0, None, 0
    for u in range(1, bound + 1):
        if decide_sb_exact(b, n, u, 0, budget).is_proven:
            smallest = smallest or u
            run += 1
            if run >= smallest:
                break
        else:
            last_gap, run = u, 0
    return last_gap, bound


def classify_out(f: FunctionId, n: int,
                 budget: ExplorationBudget = DEFAULT_BUDGET) -> OutCharacterization:
    if n < 1:
        raise PreconditionError("n must be positive")
    if f.name == SUM_DIGITS:
        b = f.b
        d = gcd(b - 1, n)
        if d == 1:
            if _sb_full(b, n):
                return OutCharacterization(FULL, reason="gcd(b-1, n) = 1 and every prime of n divides b")
            frob, bound = _sb_frobenius(b, n, budget)
            return OutCharacterization(COFINITE_COMPUTED, frobenius=frob, proven_bound=bound)
        if d % arith.digit_sum(n, b) == 0:
            return OutCharacterization(RESIDUE_CONSTRAINED, d=d, equality=ESTABLISHED)
        horizon = STRICTNESS_HORIZON * d
        members = sb_reachable_counts(b, n, horizon, 0, budget)
        if members is not None:
            for u in range(d, horizon + 1, d):
                if not members[u - 1]:
                    return OutCharacterization(RESIDUE_CONSTRAINED, d=d, equality=STRICT_WITNESS,
                                               strict_witness=u)
        return OutCharacterization(RESIDUE_CONSTRAINED, d=d, equality=UNDECIDED)
    if f.name == TAU:
        if n == 1:
            return OutCharacterization(FULL, reason="n = 1")
        pk = arith.is_prime_power(n)
        if pk is not None:
            return _tail(pk[1] + 1, "prime power")
        return OutCharacterization(INFINITE_NOT_COFINITE, minimum=arith.profile(n).tau)
    if f.name in (OMEGA, BIG_OMEGA):
        prof = arith.profile(n)
        low = prof.omega if f.name == OMEGA else prof.big_omega
        return _tail(max(low, 1), f"{f.name}(n) <= 1")
    raise PreconditionError(f"no classification is available for {f}")


def frobenius_of_out(f: FunctionId, n: int,
                     budget: ExplorationBudget = DEFAULT_BUDGET) -> int | None:
    """Largest u missing from Out(f, n); None when nothing is missing."""
    shape = classify_out(f, n, budget)
    if shape.kind == FULL:
        return None
    if shape.kind == EXACT_TAIL:
        return shape.min_u - 1
    if shape.kind == COFINITE_COMPUTED:
        return shape.frobenius
    raise NoFrobeniusNumber(f"Out({f}, {n}) is not cofinite ({shape.kind})")


def enumerate_out_prefix(f: FunctionId, n: int, u_max: int,
                         budget: ExplorationBudget = DEFAULT_BUDGET) -> MembershipPrefix:
    entries = tuple((u, decide_arc(f, n, u, budget)) for u in range(1, u_max + 1))
    return MembershipPrefix(f, n, entries)


def in_search(f: FunctionId, n: int, u_max: int,
              budget: ExplorationBudget = DEFAULT_BUDGET) -> MembershipPrefix:
    """Which u <= u_max have an arc into n."""
    entries = tuple((u, decide_arc(f, u, n, budget)) for u in range(1, u_max + 1))
    return MembershipPrefix(f, n, entries)
