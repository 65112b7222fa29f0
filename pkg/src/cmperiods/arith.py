"""Elementary number-theoretic helpers: Kronecker symbols, discriminant tests."""

from __future__ import annotations

import math
from functools import lru_cache

import sympy

from .errors import NonFundamentalDiscriminant


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    for p, e in sympy.factorint(n).items():
        if e >= 2:
            return False
    return True


def is_fundamental_discriminant(d: int) -> bool:
    """True for discriminants of quadratic fields (d = 1 is excluded)."""
    if d == 1 or d == 0:
        return False
    r = d % 4
    if r == 1:
        return is_squarefree(d)
    if r == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), defined for all integers n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # factor out powers of two
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 == 1 and a % 8 in (3, 5):
            sign = -sign
    if n == 1:
        return sign
    return sign * sympy.jacobi_symbol(a % n, n)


@lru_cache(maxsize=None)
def primes_up_to(bound: int) -> tuple[int, ...]:
    return tuple(sympy.primerange(2, bound + 1))


def divisors(n: int) -> list[int]:
    return sympy.divisors(n)


def isqrt_exact(n: int) -> int | None:
    """Integer square root if n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def require_fundamental(d: int) -> None:
    if d >= 0 or not is_fundamental_discriminant(d):
        raise NonFundamentalDiscriminant(
            f"{d} is not a fundamental negative discriminant"
        )
