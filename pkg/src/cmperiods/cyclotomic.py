"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are stored on the power basis 1, zeta, ..., zeta^{phi(M)-1}, reduced
modulo the M-th cyclotomic polynomial, with Fraction coefficients.  This is
the exact home for Dirichlet-character values, Gauss sums, generalized
Bernoulli numbers and Hecke-character values (sqrt(D) lies in Q(zeta_|D|)).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import sympy

from .arith import kronecker


@lru_cache(maxsize=None)
def _field_data(order: int):
    """(degree, monomial reduction table) for Q(zeta_order).

    The table has one integer row per exponent e in [0, order): the power-basis
    coordinates of zeta^e after reduction mod the cyclotomic polynomial.
    """
    x = sympy.Symbol("x")
    phi = sympy.Poly(sympy.cyclotomic_poly(order, x), x)
    deg = phi.degree()
    # phi is monic with integer coefficients; x^deg = -(lower part)
    lower = [-int(c) for c in reversed(phi.all_coeffs()[1:])]  # length deg
    rows: list[tuple[int, ...]] = []
    for e in range(order):
        if e < deg:
            row = [0] * deg
            row[e] = 1
        else:
            prev = rows[e - 1]
            shifted = [0] + list(prev[:-1])
            top = prev[-1]
            if top:
                shifted = [s + top * l for s, l in zip(shifted, lower)]
            row = shifted
        rows.append(tuple(row))
    return deg, tuple(rows)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


class CyclotomicRational:
    """An exact element of Q(zeta_order)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        deg, _ = _field_data(order)
        cs = list(coeffs)
        if len(cs) != deg:
            raise ValueError(f"need {deg} coefficients for order {order}")
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in cs)

    # construction -----------------------------------------------------

    @staticmethod
    def zero(order: int = 1) -> "CyclotomicRational":
        deg, _ = _field_data(order)
        return CyclotomicRational(order, [0] * deg)

    @staticmethod
    def from_rational(q, order: int = 1) -> "CyclotomicRational":
        deg, _ = _field_data(order)
        cs = [Fraction(0)] * deg
        cs[0] = Fraction(q)
        return CyclotomicRational(order, cs)

    @staticmethod
    def root_of_unity(turn) -> "CyclotomicRational":
        """e^{2 pi i * turn} for a rational number of turns."""
        t = Fraction(turn) % 1
        order = t.denominator
        deg, rows = _field_data(order)
        row = rows[t.numerator % order]
        return CyclotomicRational(order, row)

    # representation management -----------------------------------------

    def promote(self, order: int) -> "CyclotomicRational":
        """Re-express in Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError("can only promote to a multiple of the current order")
        step = order // self.order
        deg, rows = _field_data(order)
        out = [Fraction(0)] * deg
        for j, c in enumerate(self.coeffs):
            if c:
                row = rows[(j * step) % order]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return CyclotomicRational(order, out)

    @staticmethod
    def _common(a: "CyclotomicRational", b: "CyclotomicRational"):
        order = _lcm(a.order, b.order)
        return a.promote(order), b.promote(order)

    def _coerce(self, other):
        if isinstance(other, CyclotomicRational):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicRational.from_rational(other)
        return NotImplemented

    # ring operations ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._common(self, o)
        return CyclotomicRational(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicRational(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CyclotomicRational(self.order, [c * q for c in self.coeffs])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._common(self, o)
        deg, rows = _field_data(a.order)
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    conv[i + j] += x * y
        out = list(conv[:deg])
        for e in range(deg, 2 * deg - 1):
            c = conv[e]
            if c:
                row = rows[e % a.order]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return CyclotomicRational(a.order, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers not supported")
        result = CyclotomicRational.from_rational(1, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # structure ----------------------------------------------------------

    def conjugation(self, b: int) -> "CyclotomicRational":
        """Apply the automorphism zeta -> zeta^b (gcd(b, order) must be 1)."""
        if math.gcd(b, self.order) != 1:
            raise ValueError(f"{b} is not coprime to the order {self.order}")
        deg, rows = _field_data(self.order)
        out = [Fraction(0)] * deg
        for j, c in enumerate(self.coeffs):
            if c:
                row = rows[(j * b) % self.order]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return CyclotomicRational(self.order, out)

    def conjugate(self) -> "CyclotomicRational":
        """Complex conjugation."""
        if self.order <= 2:
            return self
        return self.conjugation(self.order - 1)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._common(self, o)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    # numerics -----------------------------------------------------------

    def embed(self, prec: int = 53) -> mp.mpc:
        """Complex value under zeta_M = e^{2 pi i / M}, at binary precision prec."""
        with mp.workprec(prec + 10):
            total = mp.mpc(0)
            for j, c in enumerate(self.coeffs):
                if c:
                    z = mp.expjpi(mp.mpf(2 * j) / self.order)
                    total += mp.mpf(c.numerator) / c.denominator * z
            return +total

    # serialization / display ---------------------------------------------

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @staticmethod
    def from_dict(d: dict) -> "CyclotomicRational":
        return CyclotomicRational(
            d["order"], [Fraction(n, m) for n, m in d["coeffs"]]
        )

    def __repr__(self):
        if self.is_rational():
            return f"CyclotomicRational({self.coeffs[0]})"
        terms = [
            f"{c}*z{self.order}^{j}" for j, c in enumerate(self.coeffs) if c
        ]
        return "CyclotomicRational(" + " + ".join(terms) + ")"


def sqrt_disc(d: int) -> CyclotomicRational:
    """sqrt(d) for a fundamental discriminant d < 0, as the Gauss sum of (d|.).

    The result embeds to +i*sqrt(|d|).
    """
    m = abs(d)
    total = CyclotomicRational.zero(m if m > 1 else 1)
    for u in range(1, m):
        s = kronecker(d, u)
        if s:
            z = CyclotomicRational.root_of_unity(Fraction(u, m))
            total = total + (z if s > 0 else -z)
    return total
