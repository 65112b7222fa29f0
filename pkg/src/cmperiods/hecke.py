"""Hecke characters of imaginary quadratic fields with infinity type (z/|z|)^(k-1).

The unitary character chi and the norm factor are packaged as the single
algebraic ideal function lambda(a) = eps(alpha) alpha^(k-1) for a = (alpha),
whose values lie in a fixed cyclotomic field.  Construction requires class
number one, so every ideal has a generator.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath as mp

from .arith import isqrt_exact
from .cyclotomic import CyclotomicRational, sqrt_disc
from .errors import NonPrincipalIdeal, SpecError, UnitCompatibilityError
from .qfield import QuadField, QuadIdeal, ideal_from_element


def principal_generator(ideal: QuadIdeal) -> tuple[int, int]:
    """A generator (x, y) of the ideal, as x + y*w.  Raises if none exists."""
    F = ideal.field
    D = F.disc
    t, _ = F.basis_poly()
    n = ideal.norm
    ymax = isqrt_exact(4 * n // abs(D)) or int(math.isqrt(4 * n // abs(D)))
    for ay in range(0, ymax + 2):
        for y in {ay, -ay}:
            disc = 4 * n + D * y * y
            if disc < 0:
                continue
            s = isqrt_exact(disc)
            if s is None:
                continue
            for pm in {s, -s}:
                num = pm - t * y
                if num % 2:
                    continue
                x = num // 2
                if (x or y) and ideal.contains(x, y):
                    return (x, y)
    raise NonPrincipalIdeal(f"{ideal} has no generator (class number > 1?)")


class ResidueRing:
    """O_K modulo a principal ideal (gamma), with canonical residue reps."""

    def __init__(self, field: QuadField, gamma: tuple[int, int]):
        self.field = field
        self.gamma = gamma
        self.ideal = ideal_from_element(field, *gamma)
        (self.A, self.B), (_, self.C) = self.ideal.hnf_matrix()

    def reduce(self, x: int, y: int) -> tuple[int, int]:
        k = y // self.C
        y -= k * self.C
        x -= k * self.B
        return (x % self.A, y)

    def one(self) -> tuple[int, int]:
        return self.reduce(1, 0)

    def mul(self, u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
        return self.reduce(*self.field.elt_mul(u, v))

    def is_unit(self, res: tuple[int, int]) -> bool:
        x, y = res
        if x == 0 and y == 0:
            return self.ideal.norm == 1
        from .qfield import _hnf_2xn

        cols = [
            (x, y),
            self.field.elt_mul((x, y), (0, 1)),
            (self.A, 0),
            (self.B, self.C),
        ]
        (a, _), (_, c) = _hnf_2xn(cols)
        return a == 1 and c == 1

    def units(self) -> list[tuple[int, int]]:
        out = []
        for y in range(self.C):
            for x in range(self.A):
                if self.is_unit((x, y)):
                    out.append((x, y))
        return out

    @property
    def rational_period(self) -> int:
        """The positive generator of (gamma) intersect Z."""
        return self.A

    @property
    def size(self) -> int:
        return self.ideal.norm


class FinitePart:
    """The finite part eps: (O_K / f)^* -> roots of unity, stored exactly."""

    def __init__(self, ring: ResidueRing, turns: dict[tuple[int, int], Fraction]):
        self.ring = ring
        self.turns = turns

    @staticmethod
    def trivial(ring: ResidueRing) -> "FinitePart":
        return FinitePart(ring, {u: Fraction(0) for u in ring.units()})

    @staticmethod
    def from_generators(
        ring: ResidueRing, gens: list[tuple[tuple[int, int], Fraction]]
    ) -> "FinitePart":
        units = ring.units()
        known = {ring.one(): Fraction(0)}
        gens = [(ring.reduce(*g), Fraction(t) % 1) for g, t in gens]
        for g, _ in gens:
            if g not in set(units):
                raise SpecError(f"finite-part generator {g} is not a unit mod the conductor")
        frontier = list(known.items())
        while frontier:
            nxt = []
            for r, t in frontier:
                for g, tg in gens:
                    r2 = ring.mul(r, g)
                    t2 = (t + tg) % 1
                    if r2 in known:
                        if known[r2] != t2:
                            raise SpecError(
                                f"inconsistent finite-part values at residue {r2}"
                            )
                    else:
                        known[r2] = t2
                        nxt.append((r2, t2))
            frontier = nxt
        if len(known) != len(units):
            raise SpecError(
                f"finite-part generators span {len(known)} of {len(units)} units"
            )
        return FinitePart(ring, known)

    @staticmethod
    def from_callable(ring: ResidueRing, fn) -> "FinitePart":
        return FinitePart(ring, {u: Fraction(fn(u)) % 1 for u in ring.units()})

    def __call__(self, x: int, y: int) -> Fraction | None:
        return self.turns.get(self.ring.reduce(x, y))

    def power(self, n: int) -> "FinitePart":
        return FinitePart(self.ring, {r: (t * n) % 1 for r, t in self.turns.items()})

    @property
    def value_order(self) -> int:
        order = 1
        for t in self.turns.values():
            order = order * t.denominator // math.gcd(order, t.denominator)
        return order


class LambdaValue:
    """An exact value eps * alpha^m: a root of unity times a quadratic integer."""

    __slots__ = ("field", "turn", "alg")

    def __init__(self, field: QuadField, turn: Fraction, alg: tuple[int, int]):
        self.field = field
        self.turn = turn % 1
        self.alg = alg

    def __mul__(self, other: "LambdaValue") -> "LambdaValue":
        return LambdaValue(
            self.field,
            self.turn + other.turn,
            self.field.elt_mul(self.alg, other.alg),
        )

    def conjugate(self) -> "LambdaValue":
        return LambdaValue(
            self.field, -self.turn, self.field.elt_conj(*self.alg)
        )

    def norm_abs(self) -> int:
        return self.field.elt_norm(*self.alg)

    def embed(self, prec: int = 53) -> mp.mpc:
        t, _ = self.field.basis_poly()
        with mp.workprec(prec + 10):
            w = (t + mp.sqrt(mp.mpf(self.field.disc))) / 2
            x, y = self.alg
            val = x + y * w
            if self.turn:
                val *= mp.expjpi(mp.mpf(2 * self.turn.numerator) / self.turn.denominator)
            return +val

    def exact(self) -> CyclotomicRational:
        t, _ = self.field.basis_poly()
        x, y = self.alg
        root = sqrt_disc(self.field.disc)
        alg = (root + t) * Fraction(y, 2) + x
        if self.turn:
            alg = alg * CyclotomicRational.root_of_unity(self.turn)
        return alg

    def __eq__(self, other):
        return (
            isinstance(other, LambdaValue)
            and self.field == other.field
            and self.turn == other.turn
            and self.alg == other.alg
        )

    def __repr__(self):
        return f"LambdaValue(e(2pi i {self.turn}) * {self.alg})"


class HeckeChar:
    """A Hecke character with infinity type (z/|z|)^(k-1), packaged as lambda."""

    def __init__(
        self,
        field: QuadField,
        weight_k: int,
        finite: FinitePart,
        conjugated: bool = False,
    ):
        self.field = field
        self.weight_k = weight_k
        self.finite = finite
        self.conjugated = conjugated

    @property
    def infinity_weight(self) -> int:
        return self.weight_k - 1

    @property
    def conductor_ideal(self) -> QuadIdeal:
        if self.conjugated:
            return ideal_from_element(
                self.field, *self.field.elt_conj(*self.finite.ring.gamma)
            )
        return self.finite.ring.ideal

    @property
    def value_order(self) -> int:
        return self.finite.value_order

    # values ---------------------------------------------------------------

    def lambda_of_element(self, x: int, y: int) -> LambdaValue:
        """lambda((alpha)) for alpha = x + y*w coprime to the conductor.

        For the Galois-conjugate character the value is lambda of the
        conjugate element under the base character.
        """
        if self.conjugated:
            x, y = self.field.elt_conj(x, y)
        t = self.finite(x, y)
        if t is None:
            raise SpecError(f"element ({x},{y}) is not coprime to the conductor")
        alg = (x, y)
        m = self.infinity_weight
        # alpha^m by binary powering on coordinate pairs
        result = (1, 0)
        base = alg
        e = m
        while e:
            if e & 1:
                result = self.field.elt_mul(result, base)
            base = self.field.elt_mul(base, base)
            e >>= 1
        return LambdaValue(self.field, t, result)

    def lambda_of_ideal(self, ideal: QuadIdeal) -> LambdaValue:
        return self.lambda_of_element(*principal_generator(ideal))

    def is_coprime(self, ideal: QuadIdeal) -> bool:
        x, y = principal_generator(ideal)
        if self.conjugated:
            x, y = self.field.elt_conj(x, y)
        return self.finite(x, y) is not None

    # operations -------------------------------------------------------------

    def power(self, n: int) -> "HeckeChar":
        if n < 1:
            raise SpecError("power requires n >= 1")
        return HeckeChar(
            self.field,
            n * self.infinity_weight + 1,
            self.finite.power(n),
            self.conjugated,
        )

    def galois_conjugate(self) -> "HeckeChar":
        return HeckeChar(self.field, self.weight_k, self.finite, not self.conjugated)

    def is_galois_invariant(self, bound: int = 60) -> bool:
        """Exact comparison of lambda with its conjugate on ideals of norm <= bound."""
        from .qfield import enumerate_ideals_by_norm

        conj = self.galois_conjugate()
        for ideal, _ in enumerate_ideals_by_norm(self.field, bound):
            if not self.is_coprime(ideal):
                continue
            if self.lambda_of_ideal(ideal) != conj.lambda_of_ideal(ideal):
                return False
        return True

    def restrict_to_Q(self):
        """chi restricted to the rationals, as a Dirichlet character mod f cap Z."""
        from .dirichlet import DirichletChar

        m0 = self.finite.ring.rational_period
        turns = {}
        for r in range(1, m0 + 1):
            t = self.finite(r, 0)
            if t is not None:
                turns[r % m0] = t
        if len(turns) != len([r for r in range(m0) if math.gcd(r, m0) == 1]):
            # residues coprime to m0 that are not coprime to f do not occur
            # for conductors with f cap Z = (m0); guard anyway
            raise SpecError("restriction is not defined modulo f cap Z")
        return DirichletChar(m0, turns)

    def nebentypus(self):
        """omega with omega * omega_K = chi_Q."""
        from .qfield import omega_K

        return self.restrict_to_Q() * omega_K(self.field)

    def __repr__(self):
        tag = ", conjugated" if self.conjugated else ""
        return (
            f"HeckeChar(D={self.field.disc}, k={self.weight_k}, "
            f"cond N={self.conductor_ideal.norm}{tag})"
        )


def _unit_turn(field: QuadField, u: tuple[int, int]) -> Fraction:
    """The unit u as a number of turns (u is a root of unity)."""
    w = field.unit_count
    units = field.units()
    # units() lists powers of the primitive w-th root in order for D=-3;
    # match by exact multiplication otherwise
    val = (1, 0)
    gen = {6: (0, 1), 4: (0, 1), 2: (-1, 0)}[w]
    for j in range(w):
        if val == u:
            return Fraction(j, w)
        val = field.elt_mul(val, gen)
    raise SpecError(f"{u} is not a unit")


def build_char(
    field: QuadField,
    k: int,
    conductor_gen: tuple[int, int] = (1, 0),
    finite_spec: list[tuple[tuple[int, int], Fraction]] | None = None,
) -> HeckeChar:
    """Construct and validate a Hecke character.

    conductor_gen gives the conductor ideal (x + y*w); finite_spec lists
    (generator, turns) pairs for the finite part on (O_K/f)^*.
    """
    if k < 2:
        raise SpecError("weight k must be >= 2")
    if field.class_number != 1:
        raise SpecError(
            f"class number {field.class_number} > 1 is unsupported (v1 requires h(D)=1)"
        )
    ring = ResidueRing(field, conductor_gen)
    if finite_spec:
        finite = FinitePart.from_generators(ring, finite_spec)
    else:
        finite = FinitePart.trivial(ring)
    char = HeckeChar(field, k, finite)
    for u in field.units():
        t = finite(*u)
        if t is None:
            raise UnitCompatibilityError(
                f"unit {u} is not coprime to the conductor"
            )
        total = (t + (k - 1) * _unit_turn(field, u)) % 1
        if total != 0:
            raise UnitCompatibilityError(
                f"finite part times infinity type is {total} turns != 1 at unit {u}"
            )
    return char


def twist_char(chi: HeckeChar, xi) -> HeckeChar:
    """chi * (xi o Norm) for a Dirichlet character xi with conductor coprime
    to the conductor of chi.

    The norm is conjugation-invariant, so the conjugated flag carries over
    unchanged.
    """
    c = xi.conductor
    xi0 = xi.primitive_part()
    F = chi.field
    if math.gcd(c, chi.finite.ring.ideal.norm) != 1:
        raise SpecError("twist conductor must be coprime to the character conductor")
    if c == 1:
        return chi
    new_gamma = F.elt_mul(chi.finite.ring.gamma, (c, 0))
    ring = ResidueRing(F, new_gamma)

    def turn(res):
        base = chi.finite(*res)
        if base is None:
            raise SpecError("residue not coprime to old conductor")
        t = xi0.turn(F.elt_norm(*res) % xi0.modulus)
        if t is None:
            raise SpecError("residue norm not coprime to twist conductor")
        return base + t

    finite = FinitePart.from_callable(ring, turn)
    return HeckeChar(F, chi.weight_k, finite, chi.conjugated)
