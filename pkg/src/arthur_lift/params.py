"""Global A-parameters for Sp_n over Q at level one.

A parameter is a formal sum psi = tau_1[d_1] + ... + tau_r[d_r] of
self-dual cuspidal data with SL_2-multiplicities.  At level one every
finite local root number is trivial, so Arthur's sign character is computed
from the archimedean parameters alone.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import archrep as ar
from .archrep import ArchConstituent, ArchRep, FourthRootUnit
from .errors import IncoherentParameter, NotRealizable
from .lfunctions.hecke import HeckeData
from .sl2comb import adjoint_cross_terms

GENERIC = "generic"
TRIVIAL = "trivial"
ELLIPTIC = "elliptic"
SYM2 = "sym2"
SIEGEL2 = "siegel2"
DATUM_KINDS = (GENERIC, TRIVIAL, ELLIPTIC, SYM2, SIEGEL2)


@dataclass(frozen=True)
class CuspidalDatum:
    """A level-one self-dual cuspidal representation of GL_m, given symbolically.

    ``kind`` records where the datum comes from, which fixes its unramified
    Satake data: the trivial character, an elliptic eigenform, the symmetric
    square of one, the GL_4 spin transfer of a degree-2 Siegel eigenform, or
    ``generic`` (no Satake description).
    """

    name: str
    m: int
    type: str
    arch: ArchRep
    kind: str = GENERIC
    hecke: HeckeData | None = None

    def __post_init__(self):
        if not isinstance(self.arch, ArchRep):
            object.__setattr__(self, "arch", ArchRep.parse(self.arch))
        if self.m < 1:
            raise ValueError(f"{self.name}: GL rank must be positive")
        if self.type not in (ar.ORTHOGONAL, ar.SYMPLECTIC):
            raise ValueError(f"{self.name}: type must be orthogonal or symplectic")
        if self.kind not in DATUM_KINDS:
            raise ValueError(f"{self.name}: unknown datum kind {self.kind!r}")
        if self.arch.dimension != self.m:
            raise ValueError(
                f"{self.name}: archimedean parameter {self.arch} has dimension "
                f"{self.arch.dimension}, expected m = {self.m}"
            )
        if self.type == ar.SYMPLECTIC:
            bad = [c for c in self.arch if ar.self_dual_type(c) != ar.SYMPLECTIC]
        else:
            # symplectic constituents may only occur in pairs inside an orthogonal sum
            counts = Counter(c for c in self.arch if ar.self_dual_type(c) == ar.SYMPLECTIC)
            bad = [c for c, k in counts.items() if k % 2]
        if bad:
            raise ValueError(
                f"{self.name}: constituent {bad[0]} is incompatible with declared "
                f"type {self.type}"
            )

    @property
    def central_sign(self) -> int:
        """omega(-1), read off the archimedean determinant."""
        return ar.det_at_minus_one(self.arch)

    @property
    def unit_name(self) -> str:
        return self.hecke.name if self.hecke is not None else self.name

    def __str__(self):
        return self.name

    # -- constructors ------------------------------------------------------

    @classmethod
    def trivial(cls) -> "CuspidalDatum":
        return cls("1", 1, ar.ORTHOGONAL, ArchRep([ar.TRIVIAL_CHAR]), TRIVIAL)

    @classmethod
    def elliptic(cls, name: str, weight: int, hecke: HeckeData | None = None) -> "CuspidalDatum":
        """tau_f for an eigenform f in S_weight(SL_2(Z)); arch rho_{weight-1}."""
        if weight % 2 or weight < 2:
            raise ValueError("elliptic weight must be even and positive")
        return cls(name, 2, ar.SYMPLECTIC, ArchRep([ar.rho(weight - 1)]), ELLIPTIC, hecke)

    @classmethod
    def sym2(cls, name: str, weight: int, hecke: HeckeData | None = None) -> "CuspidalDatum":
        """Sym^2 tau_g for g in S_weight(SL_2(Z)); arch rho_{2 weight - 2} + sgn."""
        if weight % 2 or weight < 2:
            raise ValueError("elliptic weight must be even and positive")
        arch = ArchRep([ar.rho(2 * weight - 2), ar.SIGN_CHAR])
        return cls(f"Sym2({name})", 3, ar.ORTHOGONAL, arch, SYM2, hecke)

    @classmethod
    def siegel2(cls, name: str, k: int, j: int, hecke: HeckeData | None = None) -> "CuspidalDatum":
        """GL_4 transfer of f in S_{k,j}(Sp_2(Z)); arch rho_{j+2k-3} + rho_{j+1}."""
        if j % 2:
            raise ValueError("S_{k,j}(Sp_2(Z)) vanishes for odd j")
        if k < 4 or j < 1:
            raise ValueError("the GL_4 transfer is available for k >= 4, j >= 1")
        arch = ArchRep([ar.rho(j + 2 * k - 3), ar.rho(j + 1)])
        return cls(name, 4, ar.SYMPLECTIC, arch, SIEGEL2, hecke)

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "m": self.m,
            "type": self.type,
            "arch": self.arch.to_json(),
            "kind": self.kind,
        }
        if self.hecke is not None:
            out["hecke"] = self.hecke.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "CuspidalDatum":
        from .lfunctions.data import hecke_from_json

        hecke = hecke_from_json(obj["hecke"]) if obj.get("hecke") is not None else None
        return cls(
            obj["name"],
            obj["m"],
            obj["type"],
            ArchRep.parse(obj["arch"]),
            obj.get("kind", GENERIC),
            hecke,
        )


class Summand(NamedTuple):
    datum: CuspidalDatum
    d: int

    def __str__(self):
        return f"{self.datum}[{self.d}]"


@dataclass(frozen=True)
class GlobalAParameter:
    constituents: tuple[Summand, ...]

    def __init__(self, constituents: Iterable[tuple[CuspidalDatum, int]]):
        object.__setattr__(
            self, "constituents", tuple(Summand(tau, int(d)) for tau, d in constituents)
        )
        for s in self.constituents:
            if s.d < 1:
                raise ValueError(f"{s}: SL_2 dimension must be positive")

    @property
    def dimension(self) -> int:
        return sum(tau.m * d for tau, d in self.constituents)

    @property
    def n(self) -> int:
        N = self.dimension
        if N % 2 == 0:
            raise ValueError(f"total dimension {N} is even; not a parameter for Sp_n")
        return (N - 1) // 2

    @property
    def rank(self) -> int:
        return len(self.constituents)

    def __iter__(self) -> Iterator[Summand]:
        return iter(self.constituents)

    def __len__(self):
        return len(self.constituents)

    def __getitem__(self, i) -> Summand:
        return self.constituents[i]

    def boxplus(self, other: "GlobalAParameter") -> "GlobalAParameter":
        return GlobalAParameter(self.constituents + other.constituents)

    def __str__(self):
        return " [+] ".join(str(s) for s in self.constituents)

    def to_json(self) -> dict:
        return {"constituents": [{"datum": t.to_json(), "d": d} for t, d in self.constituents]}

    @classmethod
    def from_json(cls, obj: dict) -> "GlobalAParameter":
        return cls((CuspidalDatum.from_json(c["datum"]), c["d"]) for c in obj["constituents"])


def validate(psi: GlobalAParameter) -> list[str]:
    """Coherence check of a parameter; returns the list of violated conditions."""
    problems = []
    if not psi.constituents:
        return ["empty: a parameter needs at least one constituent"]
    N = psi.dimension
    if N % 2 == 0:
        problems.append(f"dimension: sum m_i d_i = {N} must be odd (= 2n+1)")
    for s in psi:
        if s.d % 2 == 1 and s.datum.type != ar.ORTHOGONAL:
            problems.append(f"odd d requires orthogonal: {s} has {s.datum.type} type")
        if s.d % 2 == 0 and s.datum.type != ar.SYMPLECTIC:
            problems.append(f"even d requires symplectic: {s} has {s.datum.type} type")
    sign = 1
    for tau, d in psi:
        sign *= tau.central_sign ** d
    if sign != 1:
        problems.append("central character: prod det(phi_i)(-1)^{d_i} = -1, expected +1")
    seen = Counter((tau.name, d) for tau, d in psi)
    for (name, d), k in seen.items():
        if k > 1:
            problems.append(f"distinctness: {name}[{d}] occurs {k} times")
    return problems


def is_valid(psi: GlobalAParameter) -> bool:
    return not validate(psi)


# -- component group --------------------------------------------------------


@dataclass(frozen=True)
class ComponentGroup:
    """Free F_2-module on one generator per constituent.

    Elements are 0/1 tuples in basis order.
    """

    basis: tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def z(self) -> tuple[int, ...]:
        return (1,) * self.rank

    def generator(self, i: int) -> tuple[int, ...]:
        return tuple(int(k == i) for k in range(self.rank))

    def element(self, subset: Iterable[int]) -> tuple[int, ...]:
        subset = set(subset)
        return tuple(int(k in subset) for k in range(self.rank))

    @staticmethod
    def support(s: Sequence[int]) -> frozenset[int]:
        return frozenset(k for k, bit in enumerate(s) if bit % 2)

    def elements(self) -> Iterator[tuple[int, ...]]:
        return product((0, 1), repeat=self.rank)

    def __len__(self):
        return 2 ** self.rank


def component_group(psi: GlobalAParameter) -> ComponentGroup:
    return ComponentGroup(tuple(f"alpha_{s}" for s in psi))


@dataclass(frozen=True)
class SignCharacter:
    """Character of an F_2-module, recorded by its values on the basis."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v not in (1, -1) for v in self.values):
            raise ValueError(f"sign character values must be +-1, got {self.values}")

    def __call__(self, s: Sequence[int]) -> int:
        out = 1
        for v, bit in zip(self.values, s, strict=True):
            if bit % 2:
                out *= v
        return out

    def at_z(self) -> int:
        out = 1
        for v in self.values:
            out *= v
        return out

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


# -- Arthur's character ------------------------------------------------------


def pair_root_number(psi: GlobalAParameter, i: int, j: int) -> int:
    """Rankin-Selberg central root number eps(1/2, tau_i x tau_j).

    Only the real place contributes at level one.
    """
    eps: FourthRootUnit = ar.root_number_pair(psi[i].datum.arch, psi[j].datum.arch)
    if not eps.is_real:
        raise IncoherentParameter(
            f"parameter not globally coherent: eps({psi[i].datum} x {psi[j].datum}) = {eps}"
        )
    return eps.sign


def pair_root_numbers(psi: GlobalAParameter, *, check_parity: bool = True) -> dict[tuple[int, int], int]:
    """All eps(tau_i x tau_j) for i < j.

    With ``check_parity`` a pair with d_i = d_j mod 2 and root number -1 is
    rejected: such a pair cannot come from automorphic data.
    """
    out = {}
    for i in range(len(psi)):
        for j in range(i + 1, len(psi)):
            e = pair_root_number(psi, i, j)
            if check_parity and e == -1 and (psi[i].d - psi[j].d) % 2 == 0:
                raise NotRealizable(
                    f"parameter not automorphically realizable: eps({psi[i].datum} x "
                    f"{psi[j].datum}) = -1 although d_i = d_j mod 2"
                )
            out[i, j] = e
    return out


def epsilon_direct(psi: GlobalAParameter) -> SignCharacter:
    """eps_psi(alpha_i) = prod_{j != i} eps(tau_i x tau_j)^{min(d_i, d_j)}."""
    eps = pair_root_numbers(psi)
    values = []
    for i in range(len(psi)):
        v = 1
        for j in range(len(psi)):
            if j == i:
                continue
            e = eps[min(i, j), max(i, j)]
            v *= e ** min(psi[i].d, psi[j].d)
        values.append(v)
    return SignCharacter(tuple(values))


def _as_subset(psi: GlobalAParameter, s) -> frozenset[int]:
    if isinstance(s, (set, frozenset)):
        subset = frozenset(s)
    else:
        s = tuple(s)
        if len(s) == len(psi) and all(b in (0, 1) for b in s):
            subset = ComponentGroup.support(s)
        else:
            subset = frozenset(s)
    if any(not 0 <= i < len(psi) for i in subset):
        raise IndexError(f"subset {sorted(subset)} out of range for rank {len(psi)}")
    return subset


def epsilon_adjoint(psi: GlobalAParameter, s) -> int:
    """Arthur's character at s_I, read off the adjoint representation.

    ``s`` is an F_2-vector or a set of constituent indices I.  s_I acts by -1
    exactly on the cross blocks with one index in I; the value is the product
    of eps(1/2, tau_i x tau_j) over those blocks S_{d_alpha} with d_alpha
    even.  An I with odd sum m_i d_i is not in SO_{2n+1}; it is replaced by
    its complement, using eps(-1_{2n+1}) = 1.
    """
    I = _as_subset(psi, s)
    if sum(psi[i].datum.m * psi[i].d for i in I) % 2:
        I = frozenset(range(len(psi))) - I
    pair_root_numbers(psi, check_parity=False)  # coherence of every pair
    value = 1
    for blk in adjoint_cross_terms(psi):
        if blk.d_alpha % 2 == 0 and ((blk.i in I) != (blk.j in I)):
            value *= pair_root_number(psi, blk.i, blk.j)
    return value


# -- localization at the real place -------------------------------------------


class LocalFactor(NamedTuple):
    constituent: ArchConstituent
    d: int
    source: int  # index of the global constituent

    def __str__(self):
        return f"{self.constituent}[x]S_{self.d}"


@dataclass(frozen=True)
class LocalParameter:
    """psi_infinity as a list of irreducible factors c [x] S_d.

    ``generator_map[i]`` lists the factors coming from the global
    constituent i; the localization map sends alpha_{tau_i[d_i]} to the sum
    of their generators.
    """

    factors: tuple[LocalFactor, ...]
    generator_map: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return sum(f.constituent.dim * f.d for f in self.factors)

    def __str__(self):
        return " + ".join(str(f) for f in self.factors)


def localize_infinity(psi: GlobalAParameter) -> LocalParameter:
    factors: list[LocalFactor] = []
    gmap = []
    for i, (tau, d) in enumerate(psi):
        idx = []
        for c in tau.arch:
            idx.append(len(factors))
            factors.append(LocalFactor(c, d, i))
        gmap.append(tuple(idx))
    return LocalParameter(tuple(factors), tuple(gmap))
