"""SL_2 strings and the adjoint decomposition of a discrete parameter.

For psi = sum_i phi_i [x] S_{d_i} the adjoint representation on so_{2n+1}
splits as the diagonal blocks Ad(phi_i [x] S_{d_i}) plus the cross blocks
(phi_i (x) phi_j) [x] (S_{d_i} (x) S_{d_j}) for i < j.  Only the cross
blocks can carry a nontrivial eigenvalue of Ad(s) for s in the centralizer,
so diagonal blocks are kept as bare dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .params import GlobalAParameter


def clebsch_gordan(d1: int, d2: int) -> list[int]:
    """Dimensions in S_{d1} (x) S_{d2} = S_{d1+d2-1} + S_{d1+d2-3} + ... + S_{|d1-d2|+1}."""
    if d1 < 1 or d2 < 1:
        raise ValueError("SL_2 dimensions must be positive")
    return list(range(d1 + d2 - 1, abs(d1 - d2), -2))


@dataclass(frozen=True)
class AdjointSummand:
    """One summand of Ad o psi.

    ``j is None`` marks the diagonal block of constituent ``i``; then
    ``dim`` is dim Lambda^2(phi_i [x] S_{d_i}) and ``d_alpha`` is unused.
    Otherwise the summand is (phi_i (x) phi_j) [x] S_{d_alpha}.
    """

    i: int
    j: int | None
    d_alpha: int
    dim: int

    @property
    def is_cross(self) -> bool:
        return self.j is not None


def adjoint_summands(psi: "GlobalAParameter") -> list[AdjointSummand]:
    out: list[AdjointSummand] = []
    summands = psi.constituents
    for i, (tau, d) in enumerate(summands):
        N = tau.m * d
        out.append(AdjointSummand(i, None, 0, N * (N - 1) // 2))
    for i in range(len(summands)):
        tau_i, d_i = summands[i]
        for j in range(i + 1, len(summands)):
            tau_j, d_j = summands[j]
            for da in clebsch_gordan(d_i, d_j):
                out.append(AdjointSummand(i, j, da, tau_i.m * tau_j.m * da))
    return out


def adjoint_cross_terms(psi: "GlobalAParameter") -> list[AdjointSummand]:
    return [s for s in adjoint_summands(psi) if s.is_cross]


def cross_dimensions(psi: "GlobalAParameter") -> dict[tuple[int, int], list[int]]:
    """SL_2-dimensions of the cross blocks, keyed by the index pair."""
    out: dict[tuple[int, int], list[int]] = {}
    for s in adjoint_cross_terms(psi):
        out.setdefault((s.i, s.j), []).append(s.d_alpha)
    return out
