"""Exact arithmetic in Q(sqrt p) and polynomials over it."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class HalfPower:
    """a + b sqrt(p) with rational a, b, for a fixed prime p."""

    __slots__ = ("p", "a", "b")

    def __init__(self, p: int, a=0, b=0):
        self.p = p
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def p_power(cls, p: int, e2: int) -> "HalfPower":
        """p^(e2/2)."""
        if e2 % 2 == 0:
            return cls(p, Fraction(p) ** (e2 // 2))
        return cls(p, 0, Fraction(p) ** ((e2 - 1) // 2))

    def _coerce(self, other) -> "HalfPower":
        if isinstance(other, HalfPower):
            if other.p != self.p:
                raise ValueError(f"mixing Q(sqrt {self.p}) and Q(sqrt {other.p})")
            return other
        if isinstance(other, (int, Fraction)):
            return HalfPower(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return HalfPower(self.p, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return HalfPower(self.p, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return HalfPower(self.p, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return HalfPower(self.p, self.a * o.a + self.p * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "HalfPower":
        return HalfPower(self.p, self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.p * self.b * self.b

    def inverse(self) -> "HalfPower":
        N = self.norm()
        if N == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt p)")
        c = self.conjugate()
        return HalfPower(self.p, c.a / N, c.b / N)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = HalfPower(self.p, 1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, HalfPower):
            return self.p == other.p and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"HalfPower({self.p}, {self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        rad = f"sqrt({self.p})" if self.b == 1 else f"{self.b}*sqrt({self.p})"
        if self.a == 0:
            return rad
        return f"{self.a}+{rad}" if self.b > 0 else f"{self.a}-{rad.lstrip('-')}"

    def to_json(self):
        return str(self.a) if self.b == 0 else [str(self.a), str(self.b)]


class EulerFactor:
    """Reciprocal polynomial 1 + c_1 X + ... with X = p^{-s}, coefficients in Q(sqrt p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable):
        cs = [c if isinstance(c, HalfPower) else HalfPower(p, c) for c in coeffs]
        while len(cs) > 1 and not cs[-1]:
            cs.pop()
        self.p = p
        self.coeffs: tuple[HalfPower, ...] = tuple(cs) or (HalfPower(p, 0),)

    @classmethod
    def one(cls, p: int) -> "EulerFactor":
        return cls(p, [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "EulerFactor") -> "EulerFactor":
        if other.p != self.p:
            raise ValueError("Euler factors at different primes")
        out = [HalfPower(self.p)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return EulerFactor(self.p, out)

    def __eq__(self, other):
        return isinstance(other, EulerFactor) and self.p == other.p and self.coeffs == other.coeffs

    def __getitem__(self, i) -> HalfPower:
        return self.coeffs[i] if i < len(self.coeffs) else HalfPower(self.p)

    def first_difference(self, other: "EulerFactor") -> tuple[int, HalfPower, HalfPower] | None:
        for i in range(max(len(self.coeffs), len(other.coeffs))):
            if self[i] != other[i]:
                return i, self[i], other[i]
        return None

    @property
    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coeffs)

    def __repr__(self):
        return f"EulerFactor(p={self.p}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            x = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            terms.append(f"({c}){x}" if x else str(c))
        return " + ".join(terms)

    def to_json(self) -> dict:
        return {"p": self.p, "coefficients": [c.to_json() for c in self.coeffs]}


def poly_from_roots(p: int, roots: Sequence[HalfPower]) -> EulerFactor:
    """prod (1 - beta X)."""
    out = EulerFactor.one(p)
    for beta in roots:
        out = out * EulerFactor(p, [1, -beta])
    return out
