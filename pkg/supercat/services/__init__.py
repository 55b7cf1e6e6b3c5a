"""
Super Catalan Verifier - Services Package
"""
from .exact_core import (
    PascalCache,
    binomial,
    catalan,
    central_binomial,
    compute_value,
    rat_pow,
    super_catalan,
)
from .modular_core import (
    OddPrime,
    Residue,
    binom_mod,
    inverse,
    legendre3,
    odd_prime,
    pow_mod,
    reduce,
    reduce_rat,
)

__all__ = [
    "PascalCache",
    "binomial",
    "catalan",
    "central_binomial",
    "compute_value",
    "rat_pow",
    "super_catalan",
    "OddPrime",
    "Residue",
    "binom_mod",
    "inverse",
    "legendre3",
    "odd_prime",
    "pow_mod",
    "reduce",
    "reduce_rat",
]
