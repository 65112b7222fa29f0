"""Dihedral (CM) modular forms, their symmetric-power L-values, and period relations.

The package builds modular forms from Hecke characters of imaginary quadratic
fields, factors their symmetric-power L-functions into degree <= 2 pieces,
evaluates those pieces at critical integers to hundreds of bits, and certifies
period relations by recognizing the resulting ratios as algebraic numbers.
"""

__version__ = "0.1.0"

from .qfield import QuadField, QuadIdeal, enumerate_ideals_by_norm, prime_splitting, omega_K
from .dirichlet import (
    DirichletChar,
    bernoulli_gen,
    character_group,
    conjugate_char,
    dirichlet_L,
    gauss_sum,
    gauss_quotient,
)
from .hecke import HeckeChar, build_char
from .cmform import CMForm
from .periods import recognize_algebraic, shimura_periods

__all__ = [
    "QuadField",
    "QuadIdeal",
    "enumerate_ideals_by_norm",
    "prime_splitting",
    "omega_K",
    "DirichletChar",
    "character_group",
    "gauss_sum",
    "gauss_quotient",
    "bernoulli_gen",
    "dirichlet_L",
    "conjugate_char",
    "HeckeChar",
    "build_char",
    "CMForm",
    "shimura_periods",
    "recognize_algebraic",
]
