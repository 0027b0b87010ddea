"""Exception hierarchy.  Every error carries a short machine-readable ``code``."""

from __future__ import annotations


class ArthurLiftError(ValueError):
    code = "error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class IncoherentParameter(ArthurLiftError):
    """A pairwise root number came out non-real."""

    code = "not-globally-coherent"


class NotRealizable(ArthurLiftError):
    """eps(tau_i x tau_j) = -1 for a pair with d_i = d_j mod 2."""

    code = "not-automorphically-realizable"


class InvalidParameter(ArthurLiftError):
    code = "invalid-parameter"

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("invalid parameter: " + "; ".join(self.violations))

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self), "violations": self.violations}


class NotAdamsJohnson(ArthurLiftError):
    code = "not-adams-johnson"

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("not AJ: " + "; ".join(self.violations))

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self), "violations": self.violations}


class OutsideDiscreteRegime(ArthurLiftError):
    """Lowest weight test asked for k_n <= n."""

    code = "outside-discrete-regime"


class NotLowestWeightPacket(ArthurLiftError):
    code = "not-lowest-weight-packet"


class IntervalHypothesisViolated(ArthurLiftError):
    code = "interval-hypothesis-violated"


class HypothesisViolated(ArthurLiftError):
    code = "hypothesis-violated"


class NotDiscrete(ArthurLiftError):
    code = "not-a-discrete-parameter"


class SourceNotCertified(ArthurLiftError):
    code = "source-not-certified"


class ConstraintViolation(ArthurLiftError):
    code = "constraint-violated"


class InsufficientHeckeData(ArthurLiftError):
    code = "insufficient-hecke-data"


class DataFormatError(ArthurLiftError):
    code = "malformed-data"

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self), "location": self.location}
