"""q-expansions of the level-one eigenforms spanning one-dimensional cusp spaces.

Everything is exact integer arithmetic on truncated power series:

    Delta = q prod (1 - q^n)^24,   E_4 = 1 + 240 sum sigma_3(n) q^n,
    E_6 = 1 - 504 sum sigma_5(n) q^n,

and the normalized eigenform of weight w in {16, 18, 20, 22, 26} is Delta
times the Eisenstein series of weight w - 12.
"""

from __future__ import annotations

from functools import lru_cache

from .hecke import HeckeData

EIGENFORM_WEIGHTS = (12, 16, 18, 20, 22, 26)
NAMES = {12: "Delta", 16: "f16", 18: "f18", 20: "f20", 22: "f22", 26: "f26"}
# weight w - 12 Eisenstein factor as (power of E_4, power of E_6)
_EISENSTEIN = {12: (0, 0), 16: (1, 0), 18: (0, 1), 20: (2, 0), 22: (1, 1), 26: (2, 1)}


def _mul(a: list[int], b: list[int], N: int) -> list[int]:
    out = [0] * N
    for i, x in enumerate(a[:N]):
        if x:
            for j, y in enumerate(b[: N - i]):
                out[i + j] += x * y
    return out


def _sigma(n: int, r: int) -> int:
    return sum(d**r for d in range(1, n + 1) if n % d == 0)


def eisenstein(weight: int, N: int) -> list[int]:
    """E_4 or E_6 to precision q^N."""
    c = {4: 240, 6: -504}[weight]
    return [1] + [c * _sigma(n, weight - 1) for n in range(1, N)]


@lru_cache(maxsize=None)
def delta_series(N: int) -> tuple[int, ...]:
    """Delta to precision q^N."""
    prod = [1] + [0] * (N - 1)
    for n in range(1, N):
        # multiply by (1 - q^n)^24 one factor at a time
        for _ in range(24):
            for i in range(N - 1, n - 1, -1):
                prod[i] -= prod[i - n]
    return tuple([0] + prod[: N - 1])


def oracle_q_expansion(weight: int, count: int) -> list[int]:
    """[a_0, a_1, ..., a_count] of the normalized eigenform of this weight."""
    if weight not in EIGENFORM_WEIGHTS:
        raise ValueError(
            f"weight {weight}: S_{weight}(SL_2(Z)) is not spanned by one eigenform; "
            f"choose from {EIGENFORM_WEIGHTS}"
        )
    N = count + 1
    out = list(delta_series(N))
    e4, e6 = _EISENSTEIN[weight]
    for _ in range(e4):
        out = _mul(out, eisenstein(4, N), N)
    for _ in range(e6):
        out = _mul(out, eisenstein(6, N), N)
    return out


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


@lru_cache(maxsize=None)
def eigenform_hecke_data(weight: int, bound: int = 100) -> HeckeData:
    a = oracle_q_expansion(weight, bound)
    return HeckeData(NAMES[weight], "elliptic", weight, {p: a[p] for p in primes_up_to(bound)})
