from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_PREFIX = "INTARCS_"


@dataclass(frozen=True)
class ExplorationBudget:
    """Limits shared by the searches.

    oracle_k_max bounds every scan over multiples (or progression terms),
    dp_state_cap bounds u * n for the digit-sum reachability table, and
    max_witness_digits refuses to materialize witnesses longer than that.
    """

    oracle_k_max: int = 10**5
    dp_state_cap: int = 10**7
    max_witness_digits: int = 10**7

    def __post_init__(self):
        for name in ("oracle_k_max", "dp_state_cap", "max_witness_digits"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    def with_overrides(self, **kw) -> ExplorationBudget:
        return replace(self, **{k: v for k, v in kw.items() if v is not None})

    @classmethod
    def from_env(cls, environ=None) -> ExplorationBudget:
        """Defaults overridden by INTARCS_ORACLE_K_MAX, INTARCS_DP_STATE_CAP,
        INTARCS_MAX_WITNESS_DIGITS when set."""
        environ = os.environ if environ is None else environ
        kw = {}
        for name in ("oracle_k_max", "dp_state_cap", "max_witness_digits"):
            raw = environ.get(ENV_PREFIX + name.upper())
            if raw:
                kw[name] = int(raw)
        return cls(**kw)

    def as_dict(self) -> dict[str, int]:
        return {
            "oracle_k_max": self.oracle_k_max,
            "dp_state_cap": self.dp_state_cap,
            "max_witness_digits": self.max_witness_digits,
        }


DEFAULT_BUDGET = ExplorationBudget()
