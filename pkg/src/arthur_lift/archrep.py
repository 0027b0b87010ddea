"""Archimedean Weil-group representations of self-dual type.

Every constituent is one of

* ``rho_a`` -- the irreducible 2-dimensional representation of W_R attached
  to a positive integer ``a`` (``rho_a`` and ``rho_{-a}`` are isomorphic, so
  only ``a >= 1`` is stored; ``rho_0`` splits as ``1 + sgn``),
* ``1`` -- the trivial character,
* ``sgn`` -- the sign character.

Root numbers are fourth roots of unity, stored as an exponent of sqrt(-1).
Half-integral exponents are stored doubled so everything stays in ``int``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

TWO_DIM = "rho"
TRIVIAL = "1"
SIGN = "sgn"

ORTHOGONAL = "orthogonal"
SYMPLECTIC = "symplectic"


@dataclass(frozen=True)
class ArchConstituent:
    kind: str
    alpha: int = 0

    def __post_init__(self):
        if self.kind == TWO_DIM:
            if not isinstance(self.alpha, int) or self.alpha < 1:
                raise ValueError(
                    f"rho_{self.alpha} is not a stored constituent; "
                    "use a positive index (rho_0 = 1 + sgn)"
                )
        elif self.kind in (TRIVIAL, SIGN):
            if self.alpha != 0:
                raise ValueError(f"quadratic character {self.kind!r} takes no index")
        else:
            raise ValueError(f"unknown constituent kind {self.kind!r}")

    @property
    def dim(self) -> int:
        return 2 if self.kind == TWO_DIM else 1

    @property
    def is_quadratic(self) -> bool:
        return self.kind != TWO_DIM

    @property
    def delta(self) -> int:
        """Exponent of sgn for a quadratic character."""
        if self.kind == TWO_DIM:
            raise ValueError("delta is only defined for quadratic characters")
        return 1 if self.kind == SIGN else 0

    def sort_key(self):
        # rho's first by decreasing index, then sgn, then 1
        if self.kind == TWO_DIM:
            return (0, -self.alpha)
        return (1, 0) if self.kind == SIGN else (2, 0)

    def __str__(self):
        return f"rho_{self.alpha}" if self.kind == TWO_DIM else self.kind

    @classmethod
    def parse(cls, text: str) -> "ArchConstituent":
        text = text.strip()
        if text in ("1", "triv", "trivial"):
            return TRIVIAL_CHAR
        if text in ("sgn", "sign"):
            return SIGN_CHAR
        m = re.fullmatch(r"rho_?(\d+)", text)
        if m is None:
            raise ValueError(f"cannot parse archimedean constituent {text!r}")
        return cls(TWO_DIM, int(m.group(1)))


TRIVIAL_CHAR = ArchConstituent(TRIVIAL)
SIGN_CHAR = ArchConstituent(SIGN)


def rho(alpha: int) -> ArchConstituent:
    return ArchConstituent(TWO_DIM, abs(alpha))


def quadratic(delta: int) -> ArchConstituent:
    return SIGN_CHAR if delta % 2 else TRIVIAL_CHAR


@dataclass(frozen=True)
class FourthRootUnit:
    """``sqrt(-1) ** exponent``; multiplication adds exponents mod 4."""

    exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % 4)

    def __mul__(self, other: "FourthRootUnit") -> "FourthRootUnit":
        return FourthRootUnit(self.exponent + other.exponent)

    def __pow__(self, k: int) -> "FourthRootUnit":
        return FourthRootUnit(self.exponent * k)

    @property
    def is_real(self) -> bool:
        return self.exponent % 2 == 0

    @property
    def sign(self) -> int:
        if not self.is_real:
            raise ValueError(f"{self} is not real")
        return 1 if self.exponent == 0 else -1

    @classmethod
    def from_sign(cls, s: int) -> "FourthRootUnit":
        return cls(0 if s == 1 else 2)

    def __complex__(self):
        return (1, 1j, -1, -1j)[self.exponent]

    def __str__(self):
        return ("1", "i", "-1", "-i")[self.exponent]


ONE = FourthRootUnit(0)


class ArchRep:
    """Finite direct sum of archimedean constituents (a multiset)."""

    __slots__ = ("_constituents",)

    def __init__(self, constituents: Iterable[ArchConstituent] = ()):
        cs = []
        for c in constituents:
            if isinstance(c, str):
                c = ArchConstituent.parse(c)
            cs.append(c)
        self._constituents = tuple(sorted(cs, key=ArchConstituent.sort_key))

    @classmethod
    def parse(cls, items: Iterable[str] | str) -> "ArchRep":
        if isinstance(items, str):
            items = [s for s in re.split(r"[+,]", items) if s.strip()]
        return cls(ArchConstituent.parse(s) for s in items)

    @property
    def constituents(self) -> tuple[ArchConstituent, ...]:
        return self._constituents

    @property
    def dimension(self) -> int:
        return sum(c.dim for c in self._constituents)

    def __iter__(self) -> Iterator[ArchConstituent]:
        return iter(self._constituents)

    def __len__(self):
        return len(self._constituents)

    def __add__(self, other: "ArchRep") -> "ArchRep":
        return ArchRep(self._constituents + other._constituents)

    def __eq__(self, other):
        return isinstance(other, ArchRep) and self._constituents == other._constituents

    def __hash__(self):
        return hash(self._constituents)

    def __repr__(self):
        return f"ArchRep({self})"

    def __str__(self):
        return " + ".join(str(c) for c in self._constituents) or "0"

    def to_json(self) -> list[str]:
        return [str(c) for c in self._constituents]


def rho_sum(*alphas: int) -> ArchRep:
    """Direct sum of rho's; a zero index contributes ``1 + sgn``."""
    out: list[ArchConstituent] = []
    for a in alphas:
        if a == 0:
            out += [TRIVIAL_CHAR, SIGN_CHAR]
        else:
            out.append(rho(a))
    return ArchRep(out)


# -- root numbers -----------------------------------------------------------


def root_number_rho_rho(a: int, b: int) -> int:
    """Root number of rho_a (x) rho_b for positive a, b."""
    if a < 1 or b < 1:
        raise ValueError("rho_0 must be decomposed into 1 + sgn first")
    alpha, beta = max(a, b), min(a, b)
    return -1 if alpha % 2 == 0 and beta % 2 == 1 else 1


def root_number_rho_sgn(a: int, delta: int = 0) -> FourthRootUnit:
    """Root number of rho_a (x) sgn^delta; independent of delta."""
    if a < 1:
        raise ValueError("rho_0 must be decomposed into 1 + sgn first")
    return FourthRootUnit(a + 1)


def root_number_constituents(x: ArchConstituent, y: ArchConstituent) -> FourthRootUnit:
    if x.kind == TWO_DIM and y.kind == TWO_DIM:
        return FourthRootUnit.from_sign(root_number_rho_rho(x.alpha, y.alpha))
    if x.kind == TWO_DIM:
        return root_number_rho_sgn(x.alpha, y.delta)
    if y.kind == TWO_DIM:
        return root_number_rho_sgn(y.alpha, x.delta)
    # two quadratic characters: fixed to +1 by convention
    return ONE


def root_number_pair(A: ArchRep, B: ArchRep) -> FourthRootUnit:
    """Root number of A (x) B, by multiplicativity over constituent pairs."""
    if not len(A) or not len(B):
        raise ValueError("root_number_pair needs nonempty representations")
    out = ONE
    for x in A:
        for y in B:
            out = out * root_number_constituents(x, y)
    return out


def self_dual_type(c: ArchConstituent) -> str:
    if c.kind == TWO_DIM and c.alpha % 2 == 1:
        return SYMPLECTIC
    return ORTHOGONAL


def det_at_minus_one(A: ArchRep) -> int:
    """Value of det(A) at -1 in W_R; det(rho_a) = sgn^(a+1)."""
    s = 1
    for c in A:
        if c.kind == TWO_DIM:
            s *= -1 if c.alpha % 2 == 0 else 1
        elif c.kind == SIGN:
            s = -s
    return s


def exponents_of_factor(c: ArchConstituent, d: int) -> list[int]:
    """Doubled exponents of (z/zbar) in the restriction of c [x] S_d to C^x.

    rho_a [x] S_d gives +-(a+d-1-2l)/2 for 0 <= l < d; a quadratic
    character gives (d-1-2l)/2.  Values are returned doubled, descending.
    """
    if d < 1:
        raise ValueError("S_d needs d >= 1")
    if c.kind == TWO_DIM:
        top = [c.alpha + d - 1 - 2 * l for l in range(d)]
        return sorted(top + [-x for x in top], reverse=True)
    return [d - 1 - 2 * l for l in range(d)]
