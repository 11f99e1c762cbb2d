"""Exception hierarchy shared across the package."""

from __future__ import annotations


class FinRingError(Exception):
    """Base class for all errors raised by finrings."""


class RingAxiomError(FinRingError):
    """A table fails a ring axiom; `triple` is the lexicographically first witness."""

    axiom = "ring axiom"

    def __init__(self, triple: tuple[int, ...], detail: str = ""):
        self.triple = tuple(int(x) for x in triple)
        msg = f"{self.axiom} fails at {self.triple}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class AdditiveViolation(RingAxiomError):
    axiom = "additive group law"


class ZeroProductViolation(RingAxiomError):
    axiom = "0*a = a*0 = 0"


class DistributivityViolation(RingAxiomError):
    axiom = "distributivity"


class AssociativityViolation(RingAxiomError):
    axiom = "associativity"


class InvalidStructureConstants(FinRingError):
    pass


class PreconditionNotMet(FinRingError):
    pass


class OrderTooLarge(FinRingError):
    pass


class ClosureTooLarge(FinRingError):
    pass


class NotClosed(FinRingError):
    def __init__(self, pair, op: str):
        self.pair = pair
        self.op = op
        super().__init__(f"set not closed under {op} for pair {pair}")


class FormatError(FinRingError):
    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
