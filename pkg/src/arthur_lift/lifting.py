"""Multiplicity decisions and the lifting engine.

At level one an everywhere unramified member of a global packet is
automorphic iff its archimedean character, pulled back along the
localization map, equals Arthur's character eps_psi.  The finite places
contribute trivially.  The lifting engine applies this to

    psi_{f,g} = tau_f[2d] [+] psi_g

with the holomorphic lowest weight module L(V_k') at the real place.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import archrep as ar
from .ajpackets import (
    AJParameter,
    WeightVector,
    factor_positions,
    lowest_weight_test,
    to_adams_johnson,
)
from .errors import (
    ArthurLiftError,
    ConstraintViolation,
    HypothesisViolated,
    IntervalHypothesisViolated,
    InvalidParameter,
    NotDiscrete,
    NotLowestWeightPacket,
    SourceNotCertified,
)
from .params import (
    ELLIPTIC,
    SIEGEL2,
    CuspidalDatum,
    GlobalAParameter,
    SignCharacter,
    epsilon_direct,
    localize_infinity,
    validate,
)

MODE_A = "A"
MODE_B = "B"
MODE_GENERAL = "general"
MODES = (MODE_A, MODE_B, MODE_GENERAL)


# -- multiplicity ------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityReport:
    m: int
    epsilon: SignCharacter
    character: SignCharacter  # <Delta(alpha_i), pi>, one value per global constituent
    aj: AJParameter
    local_character: SignCharacter  # on the AJ blocks, tail last

    def __int__(self):
        return self.m


def _as_weight(k) -> WeightVector:
    return k if isinstance(k, WeightVector) else WeightVector(k)


def multiplicity_report(psi: GlobalAParameter, k) -> MultiplicityReport:
    k = _as_weight(k)
    bad = validate(psi)
    if bad:
        raise InvalidParameter(bad)
    local = localize_infinity(psi)
    aj = to_adams_johnson(local, psi.n)
    lw = lowest_weight_test(aj, k)
    if not lw:
        raise NotLowestWeightPacket(f"packet of {aj} does not contain L(V_{k}): {lw.reason}")
    eps = epsilon_direct(psi)
    pos = factor_positions(local, aj)
    values = []
    for idx in local.generator_map:
        v = 1
        for f in idx:
            v *= lw.character.values[pos[f]]
        values.append(v)
    pulled = SignCharacter(tuple(values))
    m = int(pulled.values == eps.values)
    return MultiplicityReport(m, eps, pulled, aj, lw.character)


def multiplicity(psi: GlobalAParameter, k) -> int:
    """m = 1 iff <Delta(.), pi> = eps_psi for the unramified member with pi_inf = L(V_k)."""
    return multiplicity_report(psi, k).m


# -- weights of the lift -------------------------------------------------------


def _interval(top: int, bottom: int) -> list[int]:
    return list(range(top, bottom - 1, -1))


def _merge_weights(k: WeightVector, extra: Sequence[int]) -> WeightVector:
    base = list(k.shifted())
    clash = sorted(set(base) & set(extra), reverse=True)
    if clash or len(set(extra)) != len(extra):
        raise IntervalHypothesisViolated(
            f"interval hypothesis violated: {sorted(extra, reverse=True)} meets "
            f"{{k_i - i}} = {base} or itself"
        )
    if min(extra, default=1) < 1:
        raise IntervalHypothesisViolated(
            f"interval hypothesis violated: non-positive entry in {sorted(extra, reverse=True)}"
        )
    return WeightVector.from_shifted(base + list(extra))


def lift_a_weights(k, k_f: int, d: int) -> WeightVector:
    """k' with {k'_i - i} = {k_i - i} u {k_f+d-1, ..., k_f-d}."""
    return _merge_weights(_as_weight(k), _interval(k_f + d - 1, k_f - d))


def lift_b_weights(k, k_f: int, j: int, d: int) -> WeightVector:
    """k' with {k'_i - i} = {k_i - i} u {j/2+k+d-2, ..., j/2+k-d-1} u {j/2+d, ..., j/2-d+1}."""
    if j % 2:
        raise HypothesisViolated(f"j = {j} must be even")
    h = j // 2
    return _merge_weights(
        _as_weight(k), _interval(h + k_f + d - 2, h + k_f - d - 1) + _interval(h + d, h - d + 1)
    )


def f_strings(f: CuspidalDatum, d2: int) -> list[int]:
    """Exponent strings (a+d2-1)/2, ..., (a-d2+1)/2 of f's rho-constituents at S_{d2}."""
    out = []
    for c in f.arch:
        if c.is_quadratic or (c.alpha + d2) % 2 == 0:
            raise NotDiscrete(f"constituent {c} of {f} cannot sit in a regular weight at S_{d2}")
        out += _interval((c.alpha + d2 - 1) // 2, (c.alpha - d2 + 1) // 2)
    return out


# -- factorization -------------------------------------------------------------


def _fmt_shift(c: Fraction) -> str:
    if c == 0:
        return "s"
    sign = "+" if c > 0 else "-"
    return f"s{sign}{abs(c)}"


@dataclass(frozen=True)
class Factorization:
    """L(s, F, std) = base * prod L(s + c, f[, spin]) as symbolic data.

    ``kind`` is ``"hecke"`` (classical elliptic normalization), ``"spin"``
    or ``"unitary"`` (the GL_m L-function of tau_f).
    """

    base: str
    shifts: tuple[Fraction, ...]
    kind: str = "hecke"
    f_label: str = "f"

    def terms(self) -> list[str]:
        suffix = {"hecke": "", "spin": ",spin", "unitary": ""}[self.kind]
        label = self.f_label if self.kind != "unitary" else f"tau_{self.f_label}"
        return [self.base] + [f"L({_fmt_shift(c)},{label}{suffix})" for c in self.shifts]

    def display(self, sep: str = "·") -> str:
        return sep.join(self.terms())

    def __str__(self):
        return self.display()

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "shifts": [str(c) for c in self.shifts],
            "kind": self.kind,
            "f": self.f_label,
            "display": self.display(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Factorization":
        return cls(obj["base"], tuple(Fraction(c) for c in obj["shifts"]), obj["kind"], obj.get("f", "f"))


ZETA = "ζ(s)"
G_STD = "L(s,g,std)"


# -- lift specs -------------------------------------------------------------------


@dataclass(frozen=True)
class LiftSpec:
    """Input of the lifting engine.

    ``g`` with weight ``k`` is the source; ``f`` is lifted with SL_2-type
    S_{2d}.  In mode A ``f`` comes from S_{2 k_f}(SL_2(Z)); in mode B from
    S_{k_f, j}(Sp_2(Z)).  The theorem's k is recovered from the archimedean
    parameter of ``f`` when not given.
    """

    mode: str
    g: GlobalAParameter
    k: WeightVector
    f: CuspidalDatum
    d: int
    k_f: int | None = None
    j: int | None = None
    name: str = ""

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown lift mode {self.mode!r}")
        object.__setattr__(self, "k", _as_weight(self.k))
        if self.d < 1:
            raise HypothesisViolated("d must be a positive integer")
        if self.f.type != ar.SYMPLECTIC:
            raise HypothesisViolated(f"tau_f[2d] needs a symplectic f, {self.f} is {self.f.type}")
        if self.mode == MODE_A:
            alphas = [c.alpha for c in self.f.arch if not c.is_quadratic]
            if self.f.m != 2 or len(alphas) != 1:
                raise HypothesisViolated("mode A needs a GL_2 datum with arch rho_{2k-1}")
            k_f = (alphas[0] + 1) // 2
            if self.k_f is None:
                object.__setattr__(self, "k_f", k_f)
            elif self.k_f != k_f:
                raise HypothesisViolated(
                    f"f has arch {self.f.arch}, which is not rho_{2 * self.k_f - 1} for weight {2 * self.k_f}"
                )
        elif self.mode == MODE_B:
            if self.k_f is None or self.j is None:
                raise HypothesisViolated("mode B needs the Siegel weight (k, j) of f")
            want = ar.rho_sum(self.j + 2 * self.k_f - 3, self.j + 1)
            if self.f.m != 4 or self.f.arch != want:
                raise HypothesisViolated(f"f has arch {self.f.arch}, expected {want} for S_{{{self.k_f},{self.j}}}")

    @property
    def n(self) -> int:
        return self.g.n

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "name": self.name,
            "g": self.g.to_json(),
            "k": list(self.k),
            "f": self.f.to_json(),
            "d": self.d,
            "k_f": self.k_f,
            "j": self.j,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LiftSpec":
        return cls(
            obj["mode"],
            GlobalAParameter.from_json(obj["g"]),
            WeightVector(obj["k"]),
            CuspidalDatum.from_json(obj["f"]),
            obj["d"],
            obj.get("k_f"),
            obj.get("j"),
            obj.get("name", ""),
        )


@dataclass(frozen=True)
class LiftResult:
    spec: LiftSpec
    psi: GlobalAParameter
    k_prime: WeightVector
    automorphic: bool
    m: int
    factorization: Factorization
    cuspidal: bool
    epsilon: SignCharacter = field(compare=False)
    character: SignCharacter = field(compare=False)

    @property
    def n_prime(self) -> int:
        return self.k_prime.n

    def to_json(self) -> dict:
        return {
            "name": self.spec.name,
            "mode": self.spec.mode,
            "psi": str(self.psi),
            "n": self.n_prime,
            "k_prime": list(self.k_prime),
            "automorphic": self.automorphic,
            "m": self.m,
            "cuspidal": self.cuspidal,
            "epsilon": list(self.epsilon),
            "character": list(self.character),
            "factorization": self.factorization.to_json(),
            "spec": self.spec.to_json(),
            "parameter": self.psi.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict, *, reevaluate: bool = True) -> "LiftResult":
        spec = LiftSpec.from_json(obj["spec"])
        if reevaluate:
            return evaluate_lift(spec)
        return cls(
            spec,
            GlobalAParameter.from_json(obj["parameter"]),
            WeightVector(obj["k_prime"]),
            obj["automorphic"],
            obj["m"],
            Factorization.from_json(obj["factorization"]),
            obj["cuspidal"],
            SignCharacter(tuple(obj["epsilon"])),
            SignCharacter(tuple(obj["character"])),
        )


def _check_hypotheses(spec: LiftSpec) -> None:
    k, d, n = spec.k, spec.d, spec.n
    if spec.mode == MODE_A:
        kf = spec.k_f
        if not kf > d:
            raise HypothesisViolated(f"mode A needs k > d, got k = {kf}, d = {d}")
        first = n == 0 or kf + d - 1 < k[-1] - n
        second = n == 0 or kf - d > k[0] - 1
        if not (first or second):
            raise IntervalHypothesisViolated(
                f"interval hypothesis violated: neither k+d-1 = {kf + d - 1} < k_n-n = {k[-1] - n} "
                f"nor k-d = {kf - d} > k_1-1 = {k[0] - 1}"
            )
    elif spec.mode == MODE_B:
        kf, j = spec.k_f, spec.j
        if j % 2:
            raise HypothesisViolated(f"mode B needs j even, got j = {j}")
        if not kf > 2 * d + 1:
            raise HypothesisViolated(f"mode B needs k > 2d+1, got k = {kf}, d = {d}")
        if not j > 2 * d - 1:
            raise HypothesisViolated(f"mode B needs j > 2d-1, got j = {j}, d = {d}")
        lo, hi = j // 2 - d + 1, j // 2 + kf + d - 2
        bad = [s for s in k.shifted() if lo <= s <= hi]
        if bad:
            raise IntervalHypothesisViolated(
                f"interval hypothesis violated: k_i - i = {bad[0]} lies in [{lo}, {hi}]"
            )


def _factorization(spec: LiftSpec) -> Factorization:
    base = ZETA if spec.n == 0 else G_STD
    d = spec.d
    label = spec.f.unit_name if spec.f.kind not in (ELLIPTIC, SIEGEL2) or spec.mode == MODE_GENERAL else "f"
    if spec.f.kind == ELLIPTIC or spec.mode == MODE_A:
        kf = spec.k_f if spec.k_f is not None else (spec.f.arch.constituents[0].alpha + 1) // 2
        return Factorization(base, tuple(Fraction(kf + d - i) for i in range(1, 2 * d + 1)), "hecke", "f")
    half = Fraction(1, 2)
    shifts = tuple(d + half - i for i in range(1, 2 * d + 1))
    if spec.f.kind == SIEGEL2 or spec.mode == MODE_B:
        return Factorization(base, shifts, "spin", "f")
    return Factorization(base, shifts, "unitary", label)


def certify_source(psi_g: GlobalAParameter, k) -> MultiplicityReport:
    """The source must itself be automorphic with lowest weight k."""
    try:
        rep = multiplicity_report(psi_g, k)
    except ArthurLiftError as exc:
        raise SourceNotCertified(f"source parameter {psi_g} with weight {k}: {exc}") from exc
    if rep.m != 1:
        raise SourceNotCertified(f"source parameter {psi_g} has multiplicity 0 at weight {k}")
    return rep


def evaluate_lift(spec: LiftSpec) -> LiftResult:
    certify_source(spec.g, spec.k)
    _check_hypotheses(spec)

    d2 = 2 * spec.d
    strings = f_strings(spec.f, d2)
    base = set(spec.k.shifted())
    if base & set(strings) or len(set(strings)) != len(strings):
        raise NotDiscrete(
            f"not a discrete parameter: the archimedean parameter of {spec.f}[{d2}] collides with psi_g"
        )
    psi = GlobalAParameter([(spec.f, d2)]).boxplus(spec.g)
    bad = validate(psi)
    if bad:
        if any(b.startswith("distinctness") for b in bad):
            raise NotDiscrete("not a discrete parameter: " + "; ".join(bad))
        raise InvalidParameter(bad)
    if spec.mode == MODE_A:
        k_prime = lift_a_weights(spec.k, spec.k_f, spec.d)
    elif spec.mode == MODE_B:
        k_prime = lift_b_weights(spec.k, spec.k_f, spec.j, spec.d)
    else:
        k_prime = _merge_weights(spec.k, strings)

    rep = multiplicity_report(psi, k_prime)
    # both sides are characters trivial on z_psi
    assert rep.epsilon.at_z() == 1, "eps_psi(z_psi) != 1"
    assert rep.character.at_z() == 1, "<z_psi, pi> != 1"
    automorphic = rep.m == 1
    return LiftResult(
        spec,
        psi,
        k_prime,
        automorphic,
        rep.m,
        _factorization(spec),
        automorphic and k_prime.is_discrete,
        rep.epsilon,
        rep.character,
    )


def predicted_automorphy(spec: LiftSpec) -> bool | None:
    """The closed-form parity rules of the theorem; None in general mode."""
    n = spec.n
    if spec.mode == MODE_A:
        kf, d = spec.k_f, spec.d
        if n > 0 and kf + d - 1 < spec.k[-1] - n:
            return (kf - d - n) % 2 == 0
        return (kf - d) % 2 == 0
    if spec.mode == MODE_B:
        return spec.k_f % 2 == 0 and spec.j % 2 == 0
    return None


# -- sources and named instances ----------------------------------------------------


def elliptic_eigenform(weight: int, name: str | None = None, primes: int = 100) -> CuspidalDatum:
    """tau_f for f in S_weight(SL_2(Z)); Hecke data attached when the space is one-dimensional."""
    from .lfunctions.qexp import EIGENFORM_WEIGHTS, eigenform_hecke_data

    hecke = eigenform_hecke_data(weight, primes) if weight in EIGENFORM_WEIGHTS else None
    if name is None:
        name = hecke.name if hecke is not None else f"f{weight}"
    return CuspidalDatum.elliptic(name, weight, hecke)


def trivial_source() -> tuple[GlobalAParameter, WeightVector]:
    """Sp_0: psi = 1[1] and the empty weight."""
    return GlobalAParameter([(CuspidalDatum.trivial(), 1)]), WeightVector(())


def elliptic_source(weight: int, name: str | None = None) -> tuple[GlobalAParameter, WeightVector]:
    """g in S_weight(SL_2(Z)) = Sp_1; psi_g = Sym^2 tau_g [1]."""
    g = elliptic_eigenform(weight, name)
    return GlobalAParameter([(CuspidalDatum.sym2(g.name, weight, g.hecke), 1)]), WeightVector((weight,))


def siegel2_general_source(k1: int, k2: int, name: str = "g") -> tuple[GlobalAParameter, WeightVector]:
    """Degree-2 g of weight (k1, k2), general type: psi_g = tau_g[1] on GL_5."""
    if not k1 >= k2 > 2:
        raise ConstraintViolation(f"need k1 >= k2 > 2 for a discrete-series weight, got ({k1}, {k2})")
    arch = ar.ArchRep([ar.rho(2 * k1 - 2), ar.rho(2 * k2 - 4), ar.TRIVIAL_CHAR])
    tau = CuspidalDatum(f"std({name})", 5, ar.ORTHOGONAL, arch)
    return GlobalAParameter([(tau, 1)]), WeightVector((k1, k2))


def siegel2_datum(k: int, j: int, name: str = "f", hecke=None) -> CuspidalDatum:
    return CuspidalDatum.siegel2(name, k, j, hecke)


def _require(cond: bool, msg: str):
    if not cond:
        raise ConstraintViolation(msg)


def miyawaki1(k: int) -> LiftSpec:
    _require(k % 2 == 0, f"miyawaki1: k = {k} must be even")
    _require(k >= 12, f"miyawaki1: k = {k} must be >= 12")
    g, kg = elliptic_source(k)
    f = elliptic_eigenform(2 * k - 4)
    return LiftSpec(MODE_A, g, kg, f, 1, k - 2, name=f"miyawaki1(k={k})")


def miyawaki2(k: int) -> LiftSpec:
    _require(k % 2 == 0, f"miyawaki2: k = {k} must be even")
    _require(k >= 14, f"miyawaki2: k = {k} must be >= 14")
    g, kg = elliptic_source(k - 2)
    f = elliptic_eigenform(2 * k - 2)
    return LiftSpec(MODE_A, g, kg, f, 1, k - 1, name=f"miyawaki2(k={k})")


def ikeda(fweight: int, d: int) -> LiftSpec:
    _require(fweight % 2 == 0 and fweight >= 2, f"ikeda: weight {fweight} must be even and positive")
    _require(d >= 1, "ikeda: d must be positive")
    _require(fweight // 2 > d, f"ikeda: k = {fweight // 2} must exceed d = {d}")
    g, kg = trivial_source()
    return LiftSpec(MODE_A, g, kg, elliptic_eigenform(fweight), d, fweight // 2, name=f"ikeda(2k={fweight},d={d})")


def ibukiyama1(n0: int, m: int) -> LiftSpec:
    _require(n0 % 2 == 0, f"ibukiyama1: n = {n0} must be even")
    _require(m % 2 == 0, f"ibukiyama1: m = {m} must be even")
    _require(n0 >= 2, f"ibukiyama1: n = {n0} must be >= 2")
    _require(m > 2 * n0, f"ibukiyama1: m = {m} must exceed 2n = {2 * n0}")
    k, j, d = n0 + 2, 2 * m - 3 * n0 - 2, n0 // 2
    g, kg = trivial_source()
    f = siegel2_datum(k, j)
    return LiftSpec(MODE_B, g, kg, f, d, k, j, name=f"ibukiyama1(n={n0},m={m})")


def ibukiyama2(n0: int, m: int) -> LiftSpec:
    """f in S_{2m-2n}, g in S_{m-2n+2, 2n-2}(Sp_2(Z)) lifted to S_m(Sp_{2n}(Z))."""
    _require(n0 >= 2, f"ibukiyama2: n = {n0} must be >= 2")
    _require(m > 2 * n0, f"ibukiyama2: m = {m} must exceed 2n = {2 * n0} (discrete-series range)")
    g, kg = siegel2_general_source(m, m - 2 * n0 + 2)
    _require(not _is_tau_chi_shape(g), "ibukiyama2: psi_g must not be of the form tau[1] [+] chi[1] with tau on GL_4")
    f = elliptic_eigenform(2 * m - 2 * n0)
    return LiftSpec(MODE_GENERAL, g, kg, f, n0 - 1, m - n0, name=f"ibukiyama2(n={n0},m={m})")


def _is_tau_chi_shape(psi: GlobalAParameter) -> bool:
    if len(psi) != 2 or any(s.d != 1 for s in psi):
        return False
    ms = sorted(s.datum.m for s in psi)
    return ms == [1, 4] and all(s.datum.type == ar.ORTHOGONAL for s in psi)


NAMED = {
    "miyawaki1": miyawaki1,
    "miyawaki2": miyawaki2,
    "ikeda": ikeda,
    "ibukiyama1": ibukiyama1,
    "ibukiyama2": ibukiyama2,
}


def named_instance(name: str, **params) -> LiftSpec:
    try:
        factory = NAMED[name]
    except KeyError:
        raise ValueError(f"unknown named instance {name!r}; choose from {sorted(NAMED)}") from None
    return factory(**params)
