from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from intarcs.arith import Factorization

SUM_DIGITS = "sb"
HAPPY = "happy"
TAU = "tau"
OMEGA = "omega"
BIG_OMEGA = "bigomega"

FUNCTION_NAMES = (SUM_DIGITS, HAPPY, TAU, OMEGA, BIG_OMEGA)
FACTOR_BASED = (TAU, OMEGA, BIG_OMEGA)


class PreconditionError(ValueError):
    """An operation was called outside its stated preconditions."""


@dataclass(frozen=True)
class FunctionId:
    """Which arithmetic function an arc is taken with.

    A happy function with exponent 1 is the plain digit sum and is stored
    as such, so ``FunctionId("happy", b=10, e=1) == SumDigits(10)``.
    """

    name: str
    b: int | None = None
    e: int | None = None

    def __post_init__(self):
        if self.name not in FUNCTION_NAMES:
            raise ValueError(f"unknown arithmetic function {self.name!r}")
        if self.name in (SUM_DIGITS, HAPPY):
            if self.b is None or self.b < 2:
                raise ValueError(f"{self.name} needs a base b >= 2")
        elif self.b is not None or self.e is not None:
            raise ValueError(f"{self.name} takes no parameters")
        if self.name == HAPPY:
            if self.e is None or self.e < 1:
                raise ValueError("happy function needs an exponent e >= 1")
            if self.e == 1:
                object.__setattr__(self, "name", SUM_DIGITS)
                object.__setattr__(self, "e", None)
        elif self.name == SUM_DIGITS and self.e is not None:
            raise ValueError("sb takes no exponent; use happy")

    @property
    def exponent(self) -> int:
        return self.e if self.name == HAPPY else 1

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name}
        if self.b is not None:
            out["b"] = self.b
        if self.e is not None:
            out["e"] = self.e
        return out

    def __str__(self) -> str:
        if self.name == SUM_DIGITS:
            return f"s_{self.b}"
        if self.name == HAPPY:
            return f"S_{self.e},{self.b}"
        return self.name


def SumDigits(b: int) -> FunctionId:
    return FunctionId(SUM_DIGITS, b=b)


def HappySum(e: int, b: int) -> FunctionId:
    return FunctionId(HAPPY, b=b, e=e)


Tau = FunctionId(TAU)
Omega = FunctionId(OMEGA)
BigOmega = FunctionId(BIG_OMEGA)


# certificate kinds
RESIDUE_CLASS = "residue_class"
BELOW_MINIMUM = "below_minimum"
MODULAR_EXHAUSTION = "modular_exhaustion"
TAU_EXHAUSTION = "tau_factorization_exhaustion"
K_BOUNDED_EXHAUSTION = "k_bounded_exhaustion"


@dataclass(frozen=True)
class Certificate:
    kind: str
    data: dict[str, Any] = field(default_factory=dict)

    def describe(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.data.items())
        return f"{self.kind}({params})"

    def as_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, **self.data}


PROVEN = "proven"
REFUTED = "refuted"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class ArcVerdict:
    kind: str
    witness: int | None = None
    factorization: Factorization | None = None
    certificate: Certificate | None = None
    budget_spent: str | None = None

    @classmethod
    def proven(cls, witness: int, factorization: Factorization | None = None) -> ArcVerdict:
        return cls(PROVEN, witness=witness, factorization=factorization)

    @classmethod
    def refuted(cls, certificate: Certificate) -> ArcVerdict:
        return cls(REFUTED, certificate=certificate)

    @classmethod
    def unknown(cls, budget_spent: str) -> ArcVerdict:
        return cls(UNKNOWN, budget_spent=budget_spent)

    @property
    def is_proven(self) -> bool:
        return self.kind == PROVEN

    @property
    def is_refuted(self) -> bool:
        return self.kind == REFUTED

    @property
    def is_unknown(self) -> bool:
        return self.kind == UNKNOWN

    def __repr__(self) -> str:
        if self.is_proven:
            w = str(self.witness) if self.witness.bit_length() < 200 else f"<{self.witness.bit_length()} bits>"
            return f"Proven({w})"
        if self.is_refuted:
            return f"Refuted({self.certificate.describe()})"
        return f"Unknown({self.budget_spent})"
