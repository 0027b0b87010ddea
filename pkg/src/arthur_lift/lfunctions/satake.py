"""Satake parameters of unramified members and their standard Euler factors.

An eigenvalue is a pair (unit, e2): ``unit`` is a monomial in symbolic
unitary Satake numbers (``()`` is the literal 1) and the eigenvalue is
unit * p^(e2/2).  Euler factors are expanded as polynomials in X = p^{-s}
whose coefficients are Laurent polynomials in the units; a unit u is
eliminated through u + 1/u = t once its trace t is known.  For an elliptic
eigenform of weight w, t = a_p p^{-(w-1)/2}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from ..errors import InsufficientHeckeData
from .halfpower import EulerFactor, HalfPower
from .hecke import ELLIPTIC, SIEGEL2, HeckeData

if TYPE_CHECKING:
    from ..lifting import LiftResult
    from ..params import CuspidalDatum, GlobalAParameter

Monomial = tuple  # tuple of (symbol, exponent), sorted, exponents nonzero


def monomial(*pairs) -> Monomial:
    acc: dict[str, int] = {}
    for name, e in pairs:
        acc[name] = acc.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in acc.items() if e))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return monomial(*a, *b)


def mono_inv(a: Monomial) -> Monomial:
    return tuple((n, -e) for n, e in a)


def mono_str(a: Monomial) -> str:
    if not a:
        return "1"
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in a)


def _as_monomial(u) -> Monomial:
    if u is None or u == "1" or u == ():
        return ()
    if isinstance(u, str):
        return ((u, 1),)
    return monomial(*u)


# -- symbolic Euler factors ------------------------------------------------------


class SymbolicFactor:
    """Polynomial in X with coefficients in Q(sqrt p)[units, units^-1]."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[Mapping[Monomial, HalfPower]]):
        cs = [{m: v for m, v in c.items() if v} for c in coeffs]
        while len(cs) > 1 and not cs[-1]:
            cs.pop()
        self.p = p
        self.coeffs: tuple[dict, ...] = tuple(cs) or ({},)

    @classmethod
    def one(cls, p: int) -> "SymbolicFactor":
        return cls(p, [{(): HalfPower(p, 1)}])

    @classmethod
    def from_euler(cls, f: EulerFactor) -> "SymbolicFactor":
        return cls(f.p, [{(): c} for c in f.coeffs])

    @classmethod
    def from_roots(cls, p: int, roots: Iterable[tuple[Monomial, int]]) -> "SymbolicFactor":
        """prod (1 - unit p^(e2/2) X)."""
        out = cls.one(p)
        for unit, e2 in roots:
            out = out * cls(p, [{(): HalfPower(p, 1)}, {unit: -HalfPower.p_power(p, e2)}])
        return out

    def __mul__(self, other: "SymbolicFactor") -> "SymbolicFactor":
        if other.p != self.p:
            raise ValueError("factors at different primes")
        out: list[dict] = [dict() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                tgt = out[i + j]
                for ma, va in a.items():
                    for mb, vb in b.items():
                        m = mono_mul(ma, mb)
                        tgt[m] = tgt.get(m, HalfPower(self.p)) + va * vb
        return SymbolicFactor(self.p, out)

    def symbols(self) -> set[str]:
        return {n for c in self.coeffs for m in c for n, _ in m}

    def substitute(self, traces: Mapping[str, HalfPower]) -> "SymbolicFactor":
        out = self
        for name in sorted(self.symbols()):
            if name in traces:
                out = out._eliminate(name, traces[name])
        return out

    def _eliminate(self, name: str, t: HalfPower) -> "SymbolicFactor":
        p = self.p
        new = []
        for deg, c in enumerate(self.coeffs):
            groups: dict[Monomial, dict[int, HalfPower]] = {}
            for m, v in c.items():
                e = dict(m).get(name, 0)
                rest = tuple(x for x in m if x[0] != name)
                groups.setdefault(rest, {})[e] = v
            acc: dict[Monomial, HalfPower] = {}
            for rest, by_e in groups.items():
                top = max(abs(e) for e in by_e)
                V = [HalfPower(p, 2), t]  # V_k = u^k + u^-k
                while len(V) <= top:
                    V.append(t * V[-1] - V[-2])
                total = by_e.get(0, HalfPower(p))
                for e, v in by_e.items():
                    if e <= 0:
                        continue
                    if by_e.get(-e, HalfPower(p)) != v:
                        raise ValueError(
                            f"coefficient of X^{deg} is not symmetric under {name} -> 1/{name}"
                        )
                    total = total + v * V[e]
                for e in by_e:
                    if e < 0 and -e not in by_e:
                        raise ValueError(
                            f"coefficient of X^{deg} is not symmetric under {name} -> 1/{name}"
                        )
                acc[rest] = acc.get(rest, HalfPower(p)) + total
            new.append(acc)
        return SymbolicFactor(p, new)

    def to_numeric(self) -> EulerFactor:
        left = self.symbols()
        if left:
            raise InsufficientHeckeData(
                f"insufficient Hecke data: unreduced unit symbols {sorted(left)} at p = {self.p}"
            )
        return EulerFactor(self.p, [c.get((), HalfPower(self.p)) for c in self.coeffs])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i) -> dict:
        return self.coeffs[i] if i < len(self.coeffs) else {}

    def __eq__(self, other):
        return isinstance(other, SymbolicFactor) and self.p == other.p and self.coeffs == other.coeffs

    def first_difference(self, other: "SymbolicFactor"):
        for i in range(max(len(self.coeffs), len(other.coeffs))):
            if self[i] != other[i]:
                return i, self[i], other[i]
        return None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "coefficients": [
                {mono_str(m): v.to_json() for m, v in sorted(c.items())} for c in self.coeffs
            ],
        }


# -- Satake parameters ------------------------------------------------------------


@dataclass(frozen=True)
class SatakeParameter:
    """Eigenvalue multiset of an unramified Satake class, with known traces."""

    p: int
    eigenvalues: tuple[tuple[Monomial, int], ...]
    traces: Mapping[str, HalfPower] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(
            self, "eigenvalues", tuple((_as_monomial(u), int(e)) for u, e in self.eigenvalues)
        )

    @property
    def degree(self) -> int:
        return len(self.eigenvalues)

    def multiset(self) -> Counter:
        return Counter(self.eigenvalues)

    def inverse(self) -> "SatakeParameter":
        return SatakeParameter(self.p, tuple((mono_inv(u), -e) for u, e in self.eigenvalues), self.traces)

    def is_self_dual(self) -> bool:
        return self.multiset() == self.inverse().multiset()

    def determinant_is_one(self) -> bool:
        return sum(e for _, e in self.eigenvalues) == 0 and monomial(
            *(x for u, _ in self.eigenvalues for x in u)
        ) == ()

    def __add__(self, other: "SatakeParameter") -> "SatakeParameter":
        if other.p != self.p:
            raise ValueError("Satake parameters at different primes")
        return SatakeParameter(
            self.p, self.eigenvalues + other.eigenvalues, {**self.traces, **other.traces}
        )

    def __str__(self):
        def one(u, e):
            pw = "" if e == 0 else f"p^({e}/2)"
            return "*".join(x for x in (mono_str(u) if u else "", pw) if x) or "1"

        return "{" + ", ".join(one(u, e) for u, e in self.eigenvalues) + "}"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "eigenvalues": [[mono_str(u), e] for u, e in self.eigenvalues],
        }


def satake_unramified(
    p: int,
    blocks: Iterable[tuple[Sequence, int]],
    traces: Mapping[str, HalfPower] | None = None,
) -> SatakeParameter:
    """Concatenate the strings unit * p^((d-1)/2), ..., unit * p^(-(d-1)/2).

    ``blocks`` lists (units, d); a unit is a symbol name, a monomial, or
    None / "1" for the literal 1.
    """
    eig = []
    for units, d in blocks:
        if isinstance(units, (str, type(None))):
            units = [units]
        for u in units:
            u = _as_monomial(u)
            eig += [(u, d - 1 - 2 * l) for l in range(d)]
    return SatakeParameter(p, tuple(eig), dict(traces or {}))


def elliptic_trace(p: int, a_p: int, weight: int) -> HalfPower:
    """alpha + 1/alpha = a_p p^(-(w-1)/2)."""
    return a_p * HalfPower.p_power(p, -(weight - 1))


def datum_units(datum: "CuspidalDatum", p: int, override: HeckeData | None = None):
    """Unitary Satake units of tau at p, and the traces known for them."""
    from ..params import ELLIPTIC as K_ELL, SIEGEL2 as K_SIE, SYM2, TRIVIAL

    hecke = override if override is not None else datum.hecke
    u = datum.unit_name
    traces: dict[str, HalfPower] = {}
    if datum.kind == TRIVIAL:
        return [()], traces
    if datum.kind in (K_ELL, SYM2):
        if hecke is not None and hecke.kind == ELLIPTIC and p in hecke.ap:
            traces[u] = elliptic_trace(p, hecke.ap[p], hecke.weight)
        if datum.kind == K_ELL:
            return [((u, 1),), ((u, -1),)], traces
        return [((u, 2),), (), ((u, -2),)], traces
    if datum.kind == K_SIE:
        names = (f"{u}.1", f"{u}.2")
        if hecke is not None and hecke.kind == SIEGEL2 and p in hecke.spin_traces:
            for name, t in zip(names, hecke.spin_traces[p]):
                traces[name] = HalfPower(p, Fraction(t))
        return [((n, s),) for n in names for s in (1, -1)], traces
    # generic self-dual datum: symbolic pairs, plus 1 in odd rank
    names = [f"{datum.name}.{i + 1}" for i in range(datum.m // 2)]
    units = [((n, s),) for n in names for s in (1, -1)]
    if datum.m % 2:
        units.append(())
    return units, traces


def satake_of_parameter(
    psi: "GlobalAParameter", p: int, overrides: Mapping[str, HeckeData] | None = None
) -> SatakeParameter:
    """Satake class at p of the unramified member of the packet of psi."""
    overrides = overrides or {}
    blocks, traces = [], {}
    for tau, d in psi:
        units, tr = datum_units(tau, p, overrides.get(tau.unit_name))
        blocks.append((units, d))
        traces.update(tr)
    return satake_unramified(p, blocks, traces)


def symbolic_std_factor(c: SatakeParameter) -> SymbolicFactor:
    return SymbolicFactor.from_roots(c.p, c.eigenvalues).substitute(c.traces)


def std_euler_factor(c: SatakeParameter) -> EulerFactor:
    """prod over the eigenvalues of (1 - beta X), with every unit reduced to its trace."""
    return symbolic_std_factor(c).to_numeric()


def _p_power_of_shift(p: int, c) -> HalfPower:
    c2 = Fraction(c) * 2
    if c2.denominator != 1:
        raise ValueError(f"shift {c} must be a half-integer")
    return HalfPower.p_power(p, -int(c2))


def hecke_euler_factor(a_p: int, weight: int, c, p: int) -> EulerFactor:
    """1 - a_p p^{-c} X + p^{w-1-2c} X^2: local factor of L(s + c, f) for f of weight w."""
    q = _p_power_of_shift(p, c)
    return EulerFactor(p, [1, -a_p * q, HalfPower.p_power(p, 2 * (weight - 1)) * q * q])


def shifted_unitary_factor(units: Sequence[Monomial], c, p: int) -> SymbolicFactor:
    """prod (1 - u p^{-c} X) over unitary units."""
    c2 = Fraction(c) * 2
    if c2.denominator != 1:
        raise ValueError(f"shift {c} must be a half-integer")
    return SymbolicFactor.from_roots(p, [(u, -int(c2)) for u in units])


# -- the factorization identity ---------------------------------------------------


@dataclass(frozen=True)
class FactorizationCheck:
    ok: bool
    p: int
    lhs: SymbolicFactor
    rhs: SymbolicFactor
    difference: tuple | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"ok": self.ok, "p": self.p, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}
        if self.difference is not None:
            i, a, b = self.difference
            out["first_difference"] = {
                "degree": i,
                "lhs": {mono_str(m): v.to_json() for m, v in a.items()},
                "rhs": {mono_str(m): v.to_json() for m, v in b.items()},
            }
        return out


def verify_factorization(
    lift: "LiftResult",
    f_data: HeckeData | None = None,
    g_satake: SatakeParameter | None = None,
    p: int = 2,
) -> FactorizationCheck:
    """Compare L_p(s, F, std) with L_p(s, g, std) * prod L_p(s + c_i, f) at one prime.

    The left side is the Satake class of the lift's own parameter (its
    embedded Hecke data, falling back to ``f_data`` for f).  The right side
    uses ``g_satake`` (default: from psi_g) and the Hecke factors of
    ``f_data`` with the shifts of the predicted factorization.  Equality is
    exact in Q(sqrt p)[X], or in the Laurent ring of any units left symbolic.
    """
    from ..params import GlobalAParameter

    psi = lift.psi
    f = psi[0].datum
    psi_g = GlobalAParameter(psi.constituents[1:])
    fallback = {f.unit_name: f_data} if (f.hecke is None and f_data is not None) else {}
    lhs_c = satake_of_parameter(psi, p, fallback)
    lhs = symbolic_std_factor(lhs_c)

    if g_satake is None:
        g_satake = satake_of_parameter(psi_g, p)
    rhs = symbolic_std_factor(g_satake)
    fact = lift.factorization
    f_units, f_traces = datum_units(f, p, f_data if f_data is not None else f.hecke)
    for c in fact.shifts:
        if fact.kind == "hecke" and f_data is not None and f_data.kind == ELLIPTIC and p in f_data.ap:
            rhs = rhs * SymbolicFactor.from_euler(hecke_euler_factor(f_data.ap[p], f_data.weight, c, p))
        elif fact.kind == "hecke":
            # classical shift c is the unitary shift c - (w-1)/2
            weight = (f.arch.constituents[0].alpha + 1)
            rhs = rhs * shifted_unitary_factor(f_units, Fraction(c) - Fraction(weight - 1, 2), p)
        else:
            rhs = rhs * shifted_unitary_factor(f_units, c, p)
    rhs = rhs.substitute({**g_satake.traces, **f_traces})
    lhs = lhs.substitute(f_traces) if lhs.symbols() & set(f_traces) else lhs
    if lhs.symbols() != rhs.symbols():
        missing = sorted(lhs.symbols() ^ rhs.symbols())
        raise InsufficientHeckeData(
            f"insufficient Hecke data: units {missing} are known on one side only at p = {p}"
        )
    diff = lhs.first_difference(rhs)
    return FactorizationCheck(diff is None, p, lhs, rhs, diff)
