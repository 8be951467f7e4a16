from intarcs.arcs.decide import (
    decide_arc,
    is_exact,
    k_bounded_scan,
    recheck_certificate,
    residue_obstruction,
    verdict_verifies,
)
from intarcs.arcs.evaluate import eval_function, verify_arc_witness
from intarcs.arcs.oracle import evaluate_many, oracle_search, progression_search
from intarcs.arcs.primecount import decide_prime_count_arc
from intarcs.arcs.sumdigits import (
    NotRepresentable,
    SbWitnessPair,
    construct_sb_pair,
    decide_sb_exact,
    pair_concatenation_witness,
    sb_reachable_counts,
    solve_coin_representation,
    witness_sb,
)
from intarcs.arcs.tau import decide_tau_exact, witness_tau
from intarcs.arcs.types import (
    ArcVerdict,
    BigOmega,
    Certificate,
    FunctionId,
    HappySum,
    Omega,
    PreconditionError,
    SumDigits,
    Tau,
)

__all__ = [
    "ArcVerdict", "BigOmega", "Certificate", "FunctionId", "HappySum",
    "NotRepresentable", "Omega", "PreconditionError", "SbWitnessPair",
    "SumDigits", "Tau", "construct_sb_pair", "decide_arc", "decide_prime_count_arc",
    "decide_sb_exact", "decide_tau_exact", "eval_function", "evaluate_many",
    "is_exact", "k_bounded_scan", "pair_concatenation_witness", "oracle_search", "progression_search",
    "recheck_certificate", "residue_obstruction", "sb_reachable_counts",
    "solve_coin_representation", "verdict_verifies", "verify_arc_witness",
    "witness_sb", "witness_tau",
]
