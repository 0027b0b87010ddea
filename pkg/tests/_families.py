"""Generators of parameters and Adams-Johnson data shared by the tests."""

from __future__ import annotations

import random
from itertools import combinations

from arthur_lift.ajpackets import AJParameter
from arthur_lift.errors import IncoherentParameter, NotRealizable
from arthur_lift.params import CuspidalDatum, GlobalAParameter, epsilon_direct, validate

ALPHA_MAX = 40


def summand_pool(max_dim: int = 9):
    pool = []
    for a in range(1, ALPHA_MAX // 2 + 1):
        # elliptic data rho_{2a-1}, weight 2a
        e = CuspidalDatum.elliptic(f"E{2 * a}", 2 * a)
        pool += [(e, d) for d in (2, 4, 6, 8) if 2 * d <= max_dim]
    for b in range(1, ALPHA_MAX // 2 + 1):
        # archimedean shape of a symmetric square
        s = CuspidalDatum(f"S{b}", 3, "orthogonal", ["rho_%d" % (2 * b), "sgn"], "generic")
        pool += [(s, d) for d in (1, 3, 5, 7, 9) if 3 * d <= max_dim]
    one = CuspidalDatum.trivial()
    pool += [(one, d) for d in range(1, max_dim + 1, 2)]
    return pool


def parameter_family(max_n: int = 4):
    """Every valid, coherent, realizable parameter built from the pool with n <= max_n."""
    max_dim = 2 * max_n + 1
    pool = summand_pool(max_dim)
    dims = [tau.m * d for tau, d in pool]
    out = []

    def rec(start, chosen, total):
        if total % 2 == 1:
            psi = GlobalAParameter([pool[i] for i in chosen])
            if not validate(psi):
                try:
                    epsilon_direct(psi)
                except (IncoherentParameter, NotRealizable):
                    pass
                else:
                    out.append(psi)
        for i in range(start, len(pool)):
            if total + dims[i] <= max_dim:
                rec(i + 1, chosen + [i], total + dims[i])

    rec(0, [], 0)
    return out


def random_aj(rng: random.Random, max_blocks: int = 5, max_d: int = 4, ones: bool = False) -> AJParameter:
    t = rng.randint(0, max_blocks)
    ds = [1 if ones else rng.randint(1, max_d) for _ in range(t)]
    d0 = 1 if ones else rng.choice((1, 1, 3, 5))
    alphas = [0] * t
    for i in range(t - 1, -1, -1):
        if i == t - 1:
            alphas[i] = ds[i] + d0 + 2 * rng.randint(0, 3)
        else:
            alphas[i] = alphas[i + 1] + ds[i] + ds[i + 1] + 2 * rng.randint(0, 3)
    delta = sum(ds) % 2
    return AJParameter(list(zip(alphas, ds)), delta, d0)


def all_subsets(r: int):
    for size in range(r + 1):
        yield from combinations(range(r), size)
