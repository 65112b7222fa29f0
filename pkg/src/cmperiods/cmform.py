"""The dihedral cusp form attached to a Hecke character.

Fourier coefficients are ideal sums of exact character values:
a_n = sum of lambda(a) over integral ideals of norm n coprime to the
conductor.  Everything downstream (Euler factors, symmetric-power
factorizations, L-series) reads these exact streams.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath as mp
import sympy

from .cyclotomic import CyclotomicRational
from .dirichlet import DirichletChar
from .errors import SpecError
from .hecke import HeckeChar, twist_char
from .qfield import enumerate_ideals_by_norm


class EulerFactor:
    """Local factor 1 - a_p X + omega(p) p^(k-1) X^2 (X = p^-s), exact."""

    __slots__ = ("prime", "ap", "q", "good")

    def __init__(self, prime: int, ap: CyclotomicRational, q: CyclotomicRational | None):
        self.prime = prime
        self.ap = ap
        self.q = q  # alpha*beta = omega(p) p^(k-1); None at bad p (beta = 0)
        self.good = q is not None

    @property
    def coeffs(self) -> list[CyclotomicRational]:
        one = CyclotomicRational.from_rational(1)
        if self.good:
            return [one, -self.ap, self.q]
        return [one, -self.ap]

    def __repr__(self):
        return f"EulerFactor(p={self.prime}, good={self.good})"


class CMForm:
    """The primitive cusp form phi_chi of weight k = (infinity weight) + 1."""

    def __init__(self, character: HeckeChar):
        self.character = character
        self.weight = character.weight_k
        self.level = abs(character.field.disc) * character.conductor_ideal.norm
        self.nebentypus = character.nebentypus()
        self._lambda_cache: dict[int, list] = {}
        self._lambda_bound = 0
        self._exact_cache: dict[int, CyclotomicRational] = {}

    # coefficients ---------------------------------------------------------

    def _lambdas_up_to(self, bound: int) -> dict[int, list]:
        if bound > self._lambda_bound:
            grouped: dict[int, list] = {}
            for ideal, n in enumerate_ideals_by_norm(self.character.field, bound):
                if not self.character.is_coprime(ideal):
                    continue
                grouped.setdefault(n, []).append(self.character.lambda_of_ideal(ideal))
            self._lambda_cache = grouped
            self._lambda_bound = bound
        return self._lambda_cache

    def coefficient_exact(self, n: int) -> CyclotomicRational:
        if n < 1:
            raise SpecError("coefficient index must be >= 1")
        if n not in self._exact_cache:
            grouped = self._lambdas_up_to(max(n, self._lambda_bound))
            total = CyclotomicRational.zero()
            for lam in grouped.get(n, []):
                total = total + lam.exact()
            self._exact_cache[n] = total
        return self._exact_cache[n]

    def fourier_coeffs(self, bound: int) -> list[CyclotomicRational]:
        """Exact a_1..a_bound (a list of length bound)."""
        self._lambdas_up_to(bound)
        return [self.coefficient_exact(n) for n in range(1, bound + 1)]

    def coefficients_numeric(self, bound: int, prec: int) -> list[mp.mpc]:
        """a_1..a_bound as complex numbers at binary precision prec."""
        grouped = self._lambdas_up_to(bound)
        out = []
        with mp.workprec(prec + 16):
            for n in range(1, bound + 1):
                total = mp.mpc(0)
                for lam in grouped.get(n, []):
                    total += lam.embed(prec + 16)
                out.append(+total)
        return out

    def coefficient_field_degree(self) -> int:
        """Degree cap for algebraic recognition: [Q(finite-part values):Q]."""
        order = self.character.value_order
        return int(sympy.totient(order)) if order > 1 else 1

    # local data -------------------------------------------------------------

    def euler_factor(self, p: int) -> EulerFactor:
        if not sympy.isprime(p):
            raise SpecError(f"{p} is not prime")
        ap = self.coefficient_exact(p)
        if self.level % p == 0:
            return EulerFactor(p, ap, None)
        wp = self.nebentypus.value_exact(p)
        q = wp * (Fraction(p) ** (self.weight - 1))
        return EulerFactor(p, ap, q)

    # operations ---------------------------------------------------------------

    def twist(self, xi: DirichletChar) -> "CMForm":
        """phi_{chi * (xi o Norm)}; requires cond(xi) coprime to the level."""
        c = xi.conductor
        if math.gcd(c, self.level) != 1:
            raise SpecError(
                f"twist conductor {c} shares a factor with the level {self.level}"
            )
        return CMForm(twist_char(self.character, xi))

    def __repr__(self):
        return (
            f"CMForm(D={self.character.field.disc}, k={self.weight}, "
            f"N={self.level})"
        )
