"""Dirichlet characters with exact root-of-unity values.

A character value is stored as a rational number of turns t, meaning
e^{2 pi i t}.  This keeps Gauss sums, generalized Bernoulli numbers and
Galois conjugations exact; complex embeddings are computed on demand at a
requested binary precision.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import sympy

from .cyclotomic import CyclotomicRational
from .errors import ParityError, SpecError


def _turn_to_mpc(t: Fraction) -> mp.mpc:
    return mp.expjpi(mp.mpf(2 * t.numerator) / t.denominator)


class DirichletChar:
    """A Dirichlet character modulo N."""

    __slots__ = ("modulus", "_vals", "_conductor")

    def __init__(self, modulus: int, turns, validate: bool = True):
        if modulus < 1:
            raise SpecError("modulus must be >= 1")
        self.modulus = modulus
        vals: list[Fraction | None] = [None] * modulus
        for u in range(modulus):
            if math.gcd(u, modulus) == 1:
                t = turns[u % modulus]
                if t is None:
                    raise SpecError(f"missing value at residue {u}")
                vals[u] = Fraction(t) % 1
        if modulus == 1:
            vals = [Fraction(0)]
        self._vals = tuple(vals)
        self._conductor = None
        if validate:
            self._check_multiplicative()

    def _check_multiplicative(self):
        N = self.modulus
        if self._vals[1 % N] != 0:
            raise SpecError("chi(1) must be 1")
        coprime = [u for u in range(1, N) if math.gcd(u, N) == 1] or [0]
        for u in coprime:
            for v in coprime:
                if (self._vals[u] + self._vals[v] - self._vals[(u * v) % N]) % 1 != 0:
                    raise SpecError("value table is not completely multiplicative")

    # constructors -------------------------------------------------------

    @staticmethod
    def trivial() -> "DirichletChar":
        return DirichletChar(1, [Fraction(0)], validate=False)

    @staticmethod
    def principal(modulus: int) -> "DirichletChar":
        return DirichletChar(
            modulus, {u: Fraction(0) for u in range(modulus)}, validate=False
        )

    @staticmethod
    def from_sign_values(modulus: int, signs: dict[int, int]) -> "DirichletChar":
        turns = {}
        for u, s in signs.items():
            if s == 1:
                turns[u % modulus] = Fraction(0)
            elif s == -1:
                turns[u % modulus] = Fraction(1, 2)
            else:
                raise SpecError(f"sign value must be +-1, got {s}")
        return DirichletChar(modulus, turns)

    @staticmethod
    def kronecker_of(d: int) -> "DirichletChar":
        """The quadratic character (d|.) of a fundamental discriminant d."""
        from .arith import is_fundamental_discriminant, kronecker

        if d == 1:
            return DirichletChar.trivial()
        if not is_fundamental_discriminant(d):
            raise SpecError(f"{d} is not a fundamental discriminant")
        m = abs(d)
        signs = {
            u: kronecker(d, u) for u in range(1, m + 1) if math.gcd(u, m) == 1
        }
        return DirichletChar.from_sign_values(m, signs)

    # values ---------------------------------------------------------------

    def turn(self, n: int) -> Fraction | None:
        """Number of turns of chi(n), or None when gcd(n, N) > 1."""
        return self._vals[n % self.modulus]

    def __call__(self, n: int, prec: int = 53) -> mp.mpc:
        t = self.turn(n)
        if t is None:
            return mp.mpc(0)
        with mp.workprec(prec):
            return _turn_to_mpc(t)

    def value_exact(self, n: int) -> CyclotomicRational:
        t = self.turn(n)
        if t is None:
            return CyclotomicRational.zero()
        return CyclotomicRational.root_of_unity(t)

    @property
    def parity(self) -> int:
        """nu with chi(-1) = (-1)^nu."""
        t = self._vals[(self.modulus - 1) % self.modulus]
        return 0 if t == 0 else 1

    @property
    def value_order(self) -> int:
        order = 1
        for t in self._vals:
            if t is not None:
                order = order * t.denominator // math.gcd(order, t.denominator)
        return order

    @property
    def conductor(self) -> int:
        if self._conductor is None:
            N = self.modulus
            for c in sympy.divisors(N):
                ok = True
                for u in range(1, N + 1):
                    if math.gcd(u, N) == 1 and u % c == 1 % c and self._vals[u % N] != 0:
                        ok = False
                        break
                if ok:
                    self._conductor = c
                    break
        return self._conductor

    def is_principal(self) -> bool:
        return self.conductor == 1

    def primitive_part(self) -> "DirichletChar":
        c = self.conductor
        if c == self.modulus:
            return self
        N = self.modulus
        turns = {}
        for v in range(c):
            if math.gcd(v, c) != 1:
                continue
            u = v
            while math.gcd(u, N) != 1:
                u += c
            turns[v] = self._vals[u % N]
        return DirichletChar(c, turns, validate=False)

    # group structure ------------------------------------------------------

    def __mul__(self, other: "DirichletChar") -> "DirichletChar":
        if not isinstance(other, DirichletChar):
            return NotImplemented
        N = self.modulus * other.modulus // math.gcd(self.modulus, other.modulus)
        turns = {}
        for u in range(N):
            if math.gcd(u, N) == 1:
                turns[u] = (self.turn(u) + other.turn(u)) % 1
        return DirichletChar(N, turns, validate=False)

    def __pow__(self, k: int) -> "DirichletChar":
        turns = {}
        for u in range(self.modulus):
            t = self._vals[u]
            if t is not None:
                turns[u] = (t * k) % 1
        return DirichletChar(self.modulus, turns, validate=False)

    def conjugate(self) -> "DirichletChar":
        turns = {}
        for u in range(self.modulus):
            t = self._vals[u]
            if t is not None:
                turns[u] = (-t) % 1
        return DirichletChar(self.modulus, turns, validate=False)

    def __eq__(self, other):
        return (
            isinstance(other, DirichletChar)
            and other.modulus == self.modulus
            and other._vals == self._vals
        )

    def __hash__(self):
        return hash((self.modulus, self._vals))

    def __repr__(self):
        return f"DirichletChar(mod {self.modulus}, cond {self.conductor}, order {self.value_order})"


def conjugate_char(chi: DirichletChar, b: int) -> DirichletChar:
    """chi^sigma for the automorphism sending each root of unity z to z^b."""
    order = chi.value_order
    if math.gcd(b, order) != 1:
        raise SpecError(f"{b} is not coprime to the value order {order}")
    turns = {}
    for u in range(chi.modulus):
        t = chi.turn(u)
        if t is not None:
            turns[u] = (t * b) % 1
    return DirichletChar(chi.modulus, turns, validate=False)


# character group enumeration ------------------------------------------------


@lru_cache(maxsize=None)
def _unit_group_generators(N: int) -> tuple[tuple[int, int], ...]:
    """Generators (g, order) of (Z/N)^* in a fixed canonical order."""
    if N <= 2:
        return ()
    gens = []
    for p, e in sorted(sympy.factorint(N).items()):
        q = p**e
        rest = N // q
        def lift(g):
            if rest == 1:
                return g % N
            # CRT: g mod q, 1 mod rest
            inv = pow(rest, -1, q)
            return (1 + rest * ((g - 1) * inv % q)) % N
        if p == 2:
            if e == 2:
                gens.append((lift(3), 2))
            elif e >= 3:
                gens.append((lift(q - 1), 2))
                gens.append((lift(5), 2 ** (e - 2)))
        else:
            g = sympy.primitive_root(q)
            gens.append((lift(g), q - q // p))
    return tuple(gens)


@lru_cache(maxsize=None)
def _discrete_log_table(N: int) -> dict[int, tuple[int, ...]]:
    """residue -> exponent vector over the canonical generators."""
    gens = _unit_group_generators(N)
    table = {}
    ranges = [range(o) for _, o in gens]
    for exps in itertools.product(*ranges):
        r = 1
        for (g, _), e in zip(gens, exps):
            r = r * pow(g, e, N) % N
        table[r] = exps
    return table


def character_group(N: int) -> list[DirichletChar]:
    """All characters mod N, in the documented canonical order.

    Character index i corresponds to the i-th exponent tuple over the
    canonical generators of (Z/N)^*, in row-major (last generator fastest)
    order.
    """
    gens = _unit_group_generators(N)
    table = _discrete_log_table(N)
    out = []
    for ts in itertools.product(*[range(o) for _, o in gens]):
        turns = {}
        for r, exps in table.items():
            t = Fraction(0)
            for (g, o), e, ti in zip(gens, exps, ts):
                t += Fraction(e * ti, o)
            turns[r] = t % 1
        out.append(DirichletChar(N, turns, validate=False))
    return out


def character_by_index(N: int, index: int) -> DirichletChar:
    group = character_group(N)
    if not 0 <= index < len(group):
        raise SpecError(f"character index {index} out of range (group order {len(group)})")
    return group[index]


# Gauss sums ------------------------------------------------------------------


def gauss_sum(chi: DirichletChar, prec: int = 256) -> mp.mpc:
    """gamma(chi) = gamma(chi_0) = sum over u mod c of chi_0(u) e^{2 pi i u / c}."""
    chi0 = chi.primitive_part()
    c = chi0.modulus
    with mp.workprec(prec + 16):
        total = mp.mpc(0)
        for u in range(1, c + 1):
            t = chi0.turn(u)
            if t is not None:
                total += _turn_to_mpc(t) * mp.expjpi(mp.mpf(2 * u) / c)
        if c == 1:
            total = mp.mpc(1)
        return +total


def gauss_sum_exact(chi: DirichletChar) -> CyclotomicRational:
    chi0 = chi.primitive_part()
    c = chi0.modulus
    if c == 1:
        return CyclotomicRational.from_rational(1)
    total = CyclotomicRational.zero(c)
    for u in range(1, c):
        t = chi0.turn(u)
        if t is not None:
            term = CyclotomicRational.root_of_unity(t) * CyclotomicRational.root_of_unity(Fraction(u, c))
            total = total + term
    return total


def gauss_quotient(chi1: DirichletChar, chi2: DirichletChar, prec: int = 256) -> mp.mpc:
    """gamma(chi1) gamma(chi2) / gamma(chi1 chi2); an algebraic number."""
    with mp.workprec(prec + 16):
        return +(gauss_sum(chi1, prec) * gauss_sum(chi2, prec) / gauss_sum(chi1 * chi2, prec))


def gauss_quotient_exact(chi1: DirichletChar, chi2: DirichletChar) -> CyclotomicRational:
    """Exact version of gauss_quotient, computed in a cyclotomic field.

    Uses gamma(psi)^(-1) = psi(-1) gamma(psi-bar) / c for the primitive part
    psi of chi1*chi2.
    """
    psi = (chi1 * chi2).primitive_part()
    c = psi.modulus
    sign = 1 if psi.parity == 0 else -1
    inv = gauss_sum_exact(psi.conjugate()) * Fraction(sign, c)
    return gauss_sum_exact(chi1) * gauss_sum_exact(chi2) * inv


# generalized Bernoulli numbers and L-values ----------------------------------


def bernoulli_gen(m: int, chi: DirichletChar) -> CyclotomicRational:
    """B_{m, chi} for primitive chi, exact.

    B_{m, chi} = c^{m-1} * sum_{a=1}^{c} chi(a) B_m(a/c).
    """
    if m < 1:
        raise SpecError("m must be >= 1")
    if chi.conductor != chi.modulus:
        raise SpecError("bernoulli_gen needs the primitive character; pass chi.primitive_part()")
    c = chi.modulus
    total = CyclotomicRational.zero()
    for a in range(1, c + 1):
        t = chi.turn(a)
        if t is None:
            continue
        poly_val = sympy.bernoulli(m, sympy.Rational(a, c))
        q = Fraction(int(poly_val.p), int(poly_val.q))
        total = total + CyclotomicRational.root_of_unity(t) * q
    return total * Fraction(c) ** (m - 1)


def dirichlet_L(m: int, chi: DirichletChar, prec: int = 256) -> mp.mpc:
    """L_f(m, chi) for m >= 1 with m = parity(chi) mod 2, via the closed form.

    For imprimitive chi the finite Euler factors at primes dividing the
    modulus but not the conductor are included.
    """
    chi0 = chi.primitive_part()
    if chi0.modulus == 1:
        raise SpecError("dirichlet_L requires a nontrivial character")
    nu = chi0.parity
    if m < 1 or (m - nu) % 2 != 0:
        raise ParityError(f"m={m} is non-critical parity for nu={nu}")
    c = chi0.modulus
    B = bernoulli_gen(m, chi0.conjugate())
    with mp.workprec(prec + 32):
        sign = (-1) ** (1 + (m - nu) // 2)
        val = (
            sign
            * gauss_sum(chi0, prec + 32)
            / (2 * mp.mpc(0, 1) ** nu)
            * (2 * mp.pi / c) ** m
            * B.embed(prec + 32)
            / mp.factorial(m)
        )
        val *= _euler_corrections(chi, mp.mpf(m), prec + 32)
        return +val


def _euler_corrections(chi: DirichletChar, s, prec: int):
    """prod over p | modulus, p coprime to conductor of (1 - chi0(p) p^-s)."""
    chi0 = chi.primitive_part()
    corr = mp.mpc(1)
    for p in sympy.primefactors(chi.modulus):
        if chi0.modulus % p:
            corr *= 1 - chi0(p, prec) * mp.power(p, -s)
    return corr


def dirichlet_L_nonpositive_exact(m: int, chi: DirichletChar) -> CyclotomicRational:
    """L_f(m, chi) at an integer m <= 0, exactly: L(1-n, chi) = -B_{n, chi}/n.

    Includes the imprimitive Euler corrections (exact since p^{-m} is an
    integer for m <= 0).
    """
    if m > 0:
        raise SpecError("use dirichlet_L for positive integers")
    n = 1 - m
    chi0 = chi.primitive_part()
    val = bernoulli_gen(n, chi0) * Fraction(-1, n)
    for p in sympy.primefactors(chi.modulus):
        if chi0.modulus % p:
            val = val * (CyclotomicRational.from_rational(1) - chi0.value_exact(p) * Fraction(p) ** (-m))
    return val


def direct_L_sum(chi: DirichletChar, s, prec: int = 256, head: int = 2000) -> mp.mpc:
    """Independent oracle: sum chi(n) n^{-s} with Hurwitz-zeta tail blocks."""
    N = chi.modulus
    with mp.workprec(prec + 32):
        s = mp.mpc(s)
        total = mp.mpc(0)
        for n in range(1, head + 1):
            t = chi.turn(n)
            if t is not None:
                total += _turn_to_mpc(t) * mp.power(n, -s)
        for a in range(1, N + 1):
            t = chi.turn(a)
            if t is None:
                continue
            j0 = (head - a) // N + 1
            total += _turn_to_mpc(t) * mp.power(N, -s) * mp.zeta(s, j0 + mp.mpf(a) / N)
        return +total
