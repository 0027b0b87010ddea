"""Adams-Johnson parameters and packets of Sp_n(R).

An Adams-Johnson parameter is

    psi_inf = (+)_{i=1}^t rho_{alpha_i} [x] S_{d_i}  (+)  sgn^delta [x] S_{d_0}

with alpha_1 > ... > alpha_t > 0 and the parity and gap conditions checked in
:func:`aj_violations`.  Its packet is indexed by signatures (p_i, q_i) with
p_i + q_i = d_i, one per block.  All block indices below are 0-based and
refer to the canonical decreasing-alpha order; the quadratic tail sits at
index t of every character vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from . import archrep as ar
from .errors import NotAdamsJohnson, OutsideDiscreteRegime
from .params import LocalFactor, LocalParameter, SignCharacter


class AJBlock(NamedTuple):
    alpha: int
    d: int

    def __str__(self):
        return f"rho_{self.alpha}[x]S_{self.d}"


def aj_violations(blocks: Sequence[tuple[int, int]], delta: int, d0: int, n: int | None = None) -> list[str]:
    """Violated shape conditions for blocks already sorted by decreasing alpha."""
    out = []
    alphas = [a for a, _ in blocks]
    if len(set(alphas)) != len(alphas):
        out.append("multiplicity-free: repeated alpha among the blocks")
    for a, d in blocks:
        if a < 1 or d < 1:
            out.append(f"positivity: block ({a}, {d})")
        elif (a + d) % 2 == 0:
            out.append(f"parity: alpha + d must be odd, block ({a}, {d})")
    if d0 < 1 or d0 % 2 == 0:
        out.append(f"parity: d_0 = {d0} must be odd")
    D = sum(d for _, d in blocks)
    if delta not in (0, 1):
        out.append(f"tail: delta = {delta} must be 0 or 1")
    elif (delta - D) % 2:
        out.append(f"tail sign: delta = {delta} must be = sum d_i = {D} mod 2")
    if n is not None and 2 * D + d0 != 2 * n + 1:
        out.append(f"dimension: 2 sum d_i + d_0 = {2 * D + d0} != 2n+1 = {2 * n + 1}")
    for (a1, e1), (a2, e2) in zip(blocks, blocks[1:]):
        if a1 - a2 < e1 + e2:
            out.append(f"gap: alpha {a1} - {a2} < d {e1} + {e2}")
    if blocks:
        a, d = blocks[-1]
        if a < d + d0:
            out.append(f"gap: alpha_t = {a} < d_t + d_0 = {d + d0}")
    return out


@dataclass(frozen=True)
class AJParameter:
    blocks: tuple[AJBlock, ...]
    delta: int
    d0: int

    def __init__(self, blocks: Iterable[tuple[int, int]], delta: int, d0: int = 1):
        bl = tuple(sorted((AJBlock(int(a), int(d)) for a, d in blocks), key=lambda b: -b.alpha))
        object.__setattr__(self, "blocks", bl)
        object.__setattr__(self, "delta", int(delta))
        object.__setattr__(self, "d0", int(d0))
        bad = aj_violations(bl, self.delta, self.d0)
        if bad:
            raise NotAdamsJohnson(bad)

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(b.d for b in self.blocks) + (self.d0 - 1) // 2

    @property
    def tail(self) -> tuple[int, int]:
        return (self.delta, self.d0)

    def exponents(self) -> list[int]:
        """Doubled exponents of the whole parameter (the infinitesimal character, doubled)."""
        out = []
        for a, d in self.blocks:
            out += ar.exponents_of_factor(ar.rho(a), d)
        out += ar.exponents_of_factor(ar.quadratic(self.delta), self.d0)
        return sorted(out, reverse=True)

    def __str__(self):
        tail = f"{ar.quadratic(self.delta)}[x]S_{self.d0}"
        return " + ".join([str(b) for b in self.blocks] + [tail])

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks], "delta": self.delta, "d0": self.d0}


def is_adams_johnson(phi: LocalParameter | Iterable[tuple[ar.ArchConstituent, int]], n: int | None = None):
    """Canonical AJParameter for a flattened real parameter, or the violated conditions."""
    factors = phi.factors if isinstance(phi, LocalParameter) else list(phi)
    blocks, quad, bad = [], [], []
    for f in factors:
        c, d = f[0], f[1]
        (quad if c.is_quadratic else blocks).append((c, d))
    if len(quad) != 1:
        bad.append(f"tail: expected exactly one quadratic factor sgn^delta [x] S_d0, found {len(quad)}")
    bl = sorted(((c.alpha, d) for c, d in blocks), key=lambda b: -b[0])
    if quad:
        c0, d0 = quad[0]
        delta = c0.delta
    else:
        delta, d0 = sum(d for _, d in bl) % 2, 1
    bad += aj_violations(bl, delta, d0, n)
    if bad:
        return bad
    return AJParameter(bl, delta, d0)


def to_adams_johnson(phi, n: int | None = None) -> AJParameter:
    res = is_adams_johnson(phi, n)
    if isinstance(res, list):
        raise NotAdamsJohnson(res)
    return res


def factor_positions(phi: LocalParameter, aj: AJParameter) -> tuple[int, ...]:
    """Index into an AJ character vector for each factor of ``phi``."""
    where = {(b.alpha, b.d): i for i, b in enumerate(aj.blocks)}
    out = []
    for f in phi.factors:
        c: ar.ArchConstituent = f.constituent if isinstance(f, LocalFactor) else f[0]
        d = f[1]
        out.append(aj.t if c.is_quadratic else where[c.alpha, d])
    return tuple(out)


# -- packets ---------------------------------------------------------------


@dataclass(frozen=True)
class AJMember:
    signature: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "signature", tuple((int(p), int(q)) for p, q in self.signature))
        if any(p < 0 or q < 0 for p, q in self.signature):
            raise ValueError(f"signature {self.signature} has negative entries")

    def __str__(self):
        return "(" + ", ".join(f"({p},{q})" for p, q in self.signature) + ")"


def signatures(d: int) -> list[tuple[int, int]]:
    """P_2(d): pairs (p, q) of non-negative integers with p + q = d."""
    return [(p, d - p) for p in range(d, -1, -1)]


def packet_members(aj: AJParameter) -> list[AJMember]:
    return [AJMember(w) for w in product(*(signatures(b.d) for b in aj.blocks))]


def packet_size(aj: AJParameter) -> int:
    out = 1
    for b in aj.blocks:
        out *= b.d + 1
    return out


def delta_i(aj: AJParameter, i: int) -> int:
    """0 if d_i is even, else (-1)^(d_0' + ... + d_{i-1}') over the preceding blocks."""
    d = aj.blocks[i].d
    if d % 2 == 0:
        return 0
    return -1 if sum(b.d for b in aj.blocks[:i]) % 2 else 1


def _tail_completed(values: list[int]) -> SignCharacter:
    # the tail generator is fixed by <z, pi> = 1
    prod_ = 1
    for v in values:
        prod_ *= v
    return SignCharacter(tuple(values) + (prod_,))


def member_character(aj: AJParameter, w: AJMember | Sequence[tuple[int, int]]) -> SignCharacter:
    """Character of A_{psi_inf} attached to pi_w, as (block values..., tail value)."""
    sig = w.signature if isinstance(w, AJMember) else tuple(w)
    if len(sig) != aj.t:
        raise ValueError(f"signature has {len(sig)} entries for {aj.t} blocks")
    values = []
    for i, ((p, q), b) in enumerate(zip(sig, aj.blocks)):
        if p + q != b.d:
            raise ValueError(f"signature ({p},{q}) does not lie in P_2({b.d})")
        e = p - q - delta_i(aj, i)
        if e % 2:
            raise AssertionError(f"parity invariant broken at block {i}: p-q-delta_i = {e}")
        values.append(-1 if (e // 2) % 2 else 1)
    return _tail_completed(values)


def holomorphic_signature(aj: AJParameter) -> AJMember:
    """Signature of the member realizing the holomorphic lowest weight module."""
    return AJMember(tuple((b.d, 0) for b in aj.blocks))


# -- weights -----------------------------------------------------------------


@dataclass(frozen=True)
class WeightVector:
    k: tuple[int, ...]

    def __init__(self, k: Iterable[int] = ()):
        k = tuple(int(x) for x in k)
        if any(a < b for a, b in zip(k, k[1:])):
            raise ValueError(f"weight {k} is not weakly decreasing")
        object.__setattr__(self, "k", k)

    @classmethod
    def scalar(cls, weight: int, n: int) -> "WeightVector":
        return cls((weight,) * n)

    @property
    def n(self) -> int:
        return len(self.k)

    @property
    def is_discrete(self) -> bool:
        """k_n > n; vacuous for n = 0."""
        return not self.k or self.k[-1] > self.n

    def shifted(self) -> tuple[int, ...]:
        """(k_1 - 1, ..., k_n - n)."""
        return tuple(a - i for i, a in enumerate(self.k, start=1))

    @classmethod
    def from_shifted(cls, s: Iterable[int]) -> "WeightVector":
        s = sorted(s, reverse=True)
        return cls(a + i for i, a in enumerate(s, start=1))

    def __iter__(self):
        return iter(self.k)

    def __len__(self):
        return len(self.k)

    def __getitem__(self, i):
        return self.k[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.k)) + ")"


def infinitesimal_character(k: WeightVector | Sequence[int]) -> list[int]:
    k = k if isinstance(k, WeightVector) else WeightVector(k)
    s = list(k.shifted())
    return sorted(s + [0] + [-x for x in s], reverse=True)


@dataclass(frozen=True)
class LowestWeightResult:
    member: bool
    character: SignCharacter | None = None
    signature: AJMember | None = None
    reason: str = ""

    def __bool__(self):
        return self.member


def lowest_weight_test(aj: AJParameter, k: WeightVector | Sequence[int]) -> LowestWeightResult:
    """Does the packet of ``aj`` contain the lowest weight module L(V_k)?

    Only the discrete regime k_n > n is handled.  On success the character
    carries (-1)^((d_i - delta_i)/2) on each block.
    """
    k = k if isinstance(k, WeightVector) else WeightVector(k)
    if not k.is_discrete:
        raise OutsideDiscreteRegime(
            f"weight {k} has k_n = {k.k[-1]} <= n = {k.n}; only scalar multiplicity facts are available there"
        )
    if aj.n != k.n:
        return LowestWeightResult(False, reason=f"rank mismatch: packet for Sp_{aj.n}, weight of length {k.n}")
    if aj.d0 != 1:
        return LowestWeightResult(False, reason=f"tail sgn^delta [x] S_{aj.d0} is not one-dimensional")
    strings = []
    for a, d in aj.blocks:
        strings += [(a + d - 1) // 2 - l for l in range(d)]
    if sorted(strings, reverse=True) != list(k.shifted()):
        return LowestWeightResult(
            False, reason=f"exponent strings {sorted(strings, reverse=True)} != {list(k.shifted())}"
        )
    values = []
    for i, b in enumerate(aj.blocks):
        e = (b.d - delta_i(aj, i)) // 2
        values.append(-1 if e % 2 else 1)
    return LowestWeightResult(True, _tail_completed(values), holomorphic_signature(aj))


def smo_exception(n: int, k1: int, k2: int) -> bool:
    """True iff n is even and {k1, k2} = {n/2, n/2 + 1}."""
    if k1 == k2:
        raise ValueError("smo_exception compares two distinct weights")
    if n < 1 or k1 < 1 or k2 < 1:
        raise ValueError("n, k1, k2 must be positive")
    return n % 2 == 0 and {k1, k2} == {n // 2, n // 2 + 1}
