"""Per-prime Hecke data of an eigenform."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

ELLIPTIC = "elliptic"
SIEGEL2 = "siegel2"


@dataclass(frozen=True)
class HeckeData:
    """Hecke eigenvalues of a level-one eigenform.

    For ``kind == "elliptic"`` ``ap`` holds the integer eigenvalues a_p of a
    form of even weight ``weight`` (classical normalization).  For
    ``kind == "siegel2"`` the form lies in S_{k,j}(Sp_2(Z)); ``spin_traces``
    may carry, per prime, the two traces b + 1/b of the unitary spin Satake
    pairs.
    """

    name: str
    kind: str = ELLIPTIC
    weight: int | None = None
    ap: Mapping[int, int] = field(default_factory=dict, hash=False)
    k: int | None = None
    j: int | None = None
    spin_traces: Mapping[int, tuple[Fraction, Fraction]] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.kind == ELLIPTIC:
            if self.weight is None or self.weight % 2:
                raise ValueError(f"elliptic eigenform {self.name!r} needs an even weight")
            for p, a in self.ap.items():
                if not isinstance(a, int) or isinstance(a, bool):
                    raise TypeError(f"a_{p} of {self.name!r} must be an integer, got {a!r}")
        elif self.kind == SIEGEL2:
            if self.k is None or self.j is None:
                raise ValueError(f"siegel2 datum {self.name!r} needs k and j")
        else:
            raise ValueError(f"unknown eigenform kind {self.kind!r}")
        # freeze the mappings
        object.__setattr__(self, "ap", dict(sorted(self.ap.items())))
        object.__setattr__(self, "spin_traces", dict(sorted(self.spin_traces.items())))

    @property
    def primes(self) -> list[int]:
        return list(self.ap) if self.kind == ELLIPTIC else list(self.spin_traces)

    def with_ap(self, p: int, value: int) -> "HeckeData":
        ap = dict(self.ap)
        ap[p] = value
        return HeckeData(self.name, self.kind, self.weight, ap, self.k, self.j, self.spin_traces)

    def to_json(self) -> dict:
        if self.kind == ELLIPTIC:
            return {
                "name": self.name,
                "kind": ELLIPTIC,
                "weight": self.weight,
                "ap": {str(p): a for p, a in self.ap.items()},
            }
        out = {"name": self.name, "kind": SIEGEL2, "k": self.k, "j": self.j}
        if self.spin_traces:
            out["spin_satake"] = {
                str(p): [str(t) for t in ts] for p, ts in self.spin_traces.items()
            }
        return out
