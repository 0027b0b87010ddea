"""Satake parameters, exact Euler factors and eigenform data."""

from .halfpower import EulerFactor, HalfPower
from .hecke import HeckeData
from .qexp import EIGENFORM_WEIGHTS, eigenform_hecke_data, oracle_q_expansion
from .satake import (
    FactorizationCheck,
    SatakeParameter,
    hecke_euler_factor,
    satake_of_parameter,
    satake_unramified,
    std_euler_factor,
    verify_factorization,
)
from .data import load_eigenform_data

__all__ = [
    "EIGENFORM_WEIGHTS",
    "EulerFactor",
    "FactorizationCheck",
    "HalfPower",
    "HeckeData",
    "SatakeParameter",
    "eigenform_hecke_data",
    "hecke_euler_factor",
    "load_eigenform_data",
    "oracle_q_expansion",
    "satake_of_parameter",
    "satake_unramified",
    "std_euler_factor",
    "verify_factorization",
]
