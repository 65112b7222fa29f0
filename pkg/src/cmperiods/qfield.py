"""Imaginary quadratic fields: ideals, norms, splitting, the character omega_K.

Ideals are kept in Hermite normal form.  A general integral ideal is a
rational multiple g >= 1 of a primitive ideal Z a + Z (b + sqrt(D))/2 with
0 <= b < 2a and b^2 = D (mod 4a); its norm is g^2 a.
"""

from __future__ import annotations

import math

import sympy

from . import kernels
from .arith import kronecker, require_fundamental
from .errors import CMPeriodsError, SpecError


def _class_number(disc: int) -> int:
    """h(D) by counting reduced binary quadratic forms of discriminant D."""
    count = 0
    b = disc % 2
    while b * b <= -disc // 3:
        q = (b * b - disc) // 4
        for a in sympy.divisors(q):
            c = q // a
            if a > c:
                break
            if b > a:
                continue
            # reduced: |b| <= a <= c, with b >= 0 when |b| = a or a = c
            count += 1
            if 0 < b < a and a < c:
                count += 1  # the distinct form with -b
        b += 2
    return count


class QuadField:
    """An imaginary quadratic field given by its fundamental discriminant."""

    __slots__ = ("disc", "class_number", "unit_count")

    def __init__(self, disc: int):
        require_fundamental(disc)
        self.disc = disc
        self.unit_count = 6 if disc == -3 else 4 if disc == -4 else 2
        self.class_number = _class_number(disc)

    def basis_poly(self) -> tuple[int, int]:
        """(t, d) with w^2 = t*w + d."""
        return kernels._basis_for_disc(self.disc)

    def elt_norm(self, x: int, y: int) -> int:
        t, d = self.basis_poly()
        return x * x + t * x * y - d * y * y

    def elt_mul(self, u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
        t, d = self.basis_poly()
        x1, y1 = u
        x2, y2 = v
        return (x1 * x2 + d * y1 * y2, x1 * y2 + x2 * y1 + t * y1 * y2)

    def elt_conj(self, x: int, y: int) -> tuple[int, int]:
        """Image under the nontrivial automorphism: w -> t - w."""
        t, _ = self.basis_poly()
        return (x + t * y, -y)

    def units(self) -> list[tuple[int, int]]:
        if self.disc == -4:
            return [(1, 0), (0, 1), (-1, 0), (0, -1)]
        if self.disc == -3:
            # powers of w = (1 + sqrt(-3))/2, a primitive 6th root of unity
            us = []
            u = (1, 0)
            for _ in range(6):
                us.append(u)
                u = self.elt_mul(u, (0, 1))
            return us
        return [(1, 0), (-1, 0)]

    def __eq__(self, other):
        return isinstance(other, QuadField) and other.disc == self.disc

    def __hash__(self):
        return hash(("QuadField", self.disc))

    def __repr__(self):
        return f"QuadField({self.disc})"


class QuadIdeal:
    """Integral ideal g * (Z a + Z (b + sqrt(D))/2) of norm g^2 a."""

    __slots__ = ("field", "content", "a", "b")

    def __init__(self, field: QuadField, a: int, b: int, content: int = 1):
        if a <= 0 or content <= 0:
            raise SpecError("ideal parameters must be positive")
        b %= 2 * a
        if (b * b - field.disc) % (4 * a) != 0:
            raise SpecError(
                f"(a={a}, b={b}) does not satisfy b^2 = {field.disc} mod 4a"
            )
        self.field = field
        self.content = content
        self.a = a
        self.b = b

    @property
    def norm(self) -> int:
        return self.content * self.content * self.a

    @property
    def basis(self):
        """((u, v), ...) pairs meaning (u + v*sqrt(D))/2, first entry rational."""
        g = self.content
        return ((2 * g * self.a, 0), (g * self.b, g))

    def key(self):
        return (self.content, self.a, self.b)

    @staticmethod
    def unit_ideal(field: QuadField) -> "QuadIdeal":
        return QuadIdeal(field, 1, field.disc % 2, 1)

    def hnf_matrix(self):
        """Columns of the ideal lattice in the integral basis (1, w)."""
        # (b + sqrt D)/2 = (b - t)/2 + w  with t = D mod 2
        t = self.field.disc % 2
        g = self.content
        return ((g * self.a, g * (self.b - t) // 2), (0, g))

    def contains(self, x: int, y: int) -> bool:
        (a11, a12), (a21, a22) = self.hnf_matrix()
        if y % a22:
            return False
        k = y // a22
        return (x - k * a12) % a11 == 0

    def __mul__(self, other: "QuadIdeal") -> "QuadIdeal":
        if not isinstance(other, QuadIdeal) or other.field != self.field:
            return NotImplemented
        (a11, a12), (a21, a22) = self.hnf_matrix()
        (b11, b12), (b21, b22) = other.hnf_matrix()
        gens1 = [(a11, 0), (a12, a22)]
        gens2 = [(b11, 0), (b12, b22)]
        prods = [
            self.field.elt_mul(u, v) for u in gens1 for v in gens2
        ]
        return ideal_from_hnf(self.field, _hnf_2xn(prods))

    def __eq__(self, other):
        return (
            isinstance(other, QuadIdeal)
            and other.field == self.field
            and other.key() == self.key()
        )

    def __hash__(self):
        return hash(("QuadIdeal", self.field.disc, self.key()))

    def __repr__(self):
        g = "" if self.content == 1 else f"{self.content}*"
        return f"QuadIdeal({g}[{self.a}, ({self.b}+sqrt({self.field.disc}))/2])"


def _hnf_2xn(cols: list[tuple[int, int]]):
    """Column HNF [[A, B], [0, C]] of the lattice spanned by (x, y) columns."""
    cols = [c for c in cols if c != (0, 0)]
    # sweep the y-entries to a single gcd via extended-euclid column ops
    work = list(cols)
    while True:
        nz = [c for c in work if c[1] != 0]
        if len(nz) <= 1:
            break
        nz.sort(key=lambda c: abs(c[1]))
        base = nz[0]
        out = [base]
        for c in work:
            if c is base:
                continue
            if c[1] == 0:
                out.append(c)
            else:
                q = c[1] // base[1]
                out.append((c[0] - q * base[0], c[1] - q * base[1]))
        work = out
    ys = [c for c in work if c[1] != 0]
    if not ys:
        raise CMPeriodsError("degenerate lattice")
    bx, by = ys[0]
    if by < 0:
        bx, by = -bx, -by
    xs = [abs(c[0]) for c in work if c[1] == 0 and c[0] != 0]
    if not xs:
        raise CMPeriodsError("degenerate lattice")
    A = 0
    for v in xs:
        A = math.gcd(A, v)
    bx %= A
    return ((A, bx), (0, by))


def ideal_from_hnf(field: QuadField, hnf) -> QuadIdeal:
    (A, B), (_, C) = hnf
    if A % C or B % C:
        raise CMPeriodsError("lattice is not an ideal (content mismatch)")
    a = A // C
    b0 = B // C
    t = field.disc % 2
    return QuadIdeal(field, a, 2 * b0 + t, C)


def ideal_from_element(field: QuadField, x: int, y: int) -> QuadIdeal:
    """The principal ideal (x + y*w)."""
    if x == 0 and y == 0:
        raise SpecError("zero element generates no ideal")
    gens = [(x, y), field.elt_mul((x, y), (0, 1))]
    return ideal_from_hnf(field, _hnf_2xn(gens))


def enumerate_ideals_by_norm(field: QuadField, bound: int) -> list[tuple[QuadIdeal, int]]:
    """Every integral ideal of norm <= bound, each exactly once.

    Sorted by (norm, content, a, b); the per-norm count matches the
    Dedekind-zeta coefficient sum over divisors of omega_K.
    """
    if bound < 1:
        raise SpecError("bound must be >= 1")
    pairs = kernels.primitive_ideal_pairs(field.disc, bound).tolist()
    out = []
    g = 1
    while g * g <= bound:
        cap = bound // (g * g)
        for a, b in pairs:
            if a <= cap:
                ideal = QuadIdeal(field, a, b, g)
                out.append((ideal, ideal.norm))
        g += 1
    out.sort(key=lambda t: (t[1],) + t[0].key())
    return out


def prime_splitting(field: QuadField, p: int) -> str:
    """'split', 'inert' or 'ramified'."""
    if not sympy.isprime(p):
        raise SpecError(f"{p} is not prime")
    s = kronecker(field.disc, p)
    return "ramified" if s == 0 else "split" if s > 0 else "inert"


def omega_K(field: QuadField):
    """The quadratic Dirichlet character attached to the field (odd, conductor |D|)."""
    from .dirichlet import DirichletChar

    m = abs(field.disc)
    vals = {}
    for u in range(1, m + 1):
        if math.gcd(u, m) == 1:
            vals[u % m] = kronecker(field.disc, u)
    return DirichletChar.from_sign_values(m, vals)
