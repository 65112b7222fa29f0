"""Hot integer kernels: ideal and lattice-point enumeration.

Both kernels are O(bound^2)-ish integer searches, far too slow in pure
Python at the bounds the test suite uses.  The default path is numba-compiled;
setting CMPERIODS_PURE_NUMPY=1 selects a vectorized numpy fallback with
identical output.  `benchmarks/bench_kernels.py` compares the two.
"""

from __future__ import annotations

import math
import os

import numpy as np

_ENV_FLAG = "CMPERIODS_PURE_NUMPY"

_njit_cache: dict[str, object] = {}


def use_numba() -> bool:
    if os.environ.get(_ENV_FLAG, "") == "1":
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def backend_name() -> str:
    return "numba" if use_numba() else "numpy"


def _compiled():
    """Lazily build the numba kernels (first call pays the JIT cost)."""
    if _njit_cache:
        return _njit_cache
    from numba import njit

    @njit(cache=True)
    def prim_pairs(c1: int, c0: int, parity: int, bound: int) -> np.ndarray:
        # roots t of t^2 + c1 t + c0 = 0 (mod a) for every a <= bound;
        # each root is one primitive ideal (a, b = 2t + parity).
        count = 0
        for a in range(1, bound + 1):
            for t in range(a):
                if (t * t + c1 * t + c0) % a == 0:
                    count += 1
        out = np.empty((count, 2), dtype=np.int64)
        i = 0
        for a in range(1, bound + 1):
            for t in range(a):
                if (t * t + c1 * t + c0) % a == 0:
                    out[i, 0] = a
                    out[i, 1] = 2 * t + parity
                    i += 1
        return out

    @njit(cache=True)
    def lattice_points(t: int, d: int, bound: int) -> np.ndarray:
        # elements x + y*w with w^2 = t*w + d (d < 0), 0 < norm <= bound;
        # norm(x + y*w) = x^2 + t*x*y - d*y^2
        ymax = int(math.sqrt(-4.0 * bound / (4.0 * d + t * t))) + 2
        out = np.empty((0, 3), dtype=np.int64)
        for phase in range(2):
            i = 0
            for y in range(-ymax, ymax + 1):
                disc = t * t * y * y + 4 * (bound + d * y * y)
                if disc < 0:
                    continue
                r = int(math.sqrt(float(disc)))
                while (r + 1) * (r + 1) <= disc:
                    r += 1
                while r * r > disc:
                    r -= 1
                lo = (-t * y - r - 2) // 2
                hi = (-t * y + r + 2) // 2
                for x in range(lo, hi + 1):
                    n = x * x + t * x * y - d * y * y
                    if 0 < n <= bound:
                        if phase == 1:
                            out[i, 0] = x
                            out[i, 1] = y
                            out[i, 2] = n
                        i += 1
            if phase == 0:
                out = np.empty((i, 3), dtype=np.int64)
        return out

    _njit_cache["prim_pairs"] = prim_pairs
    _njit_cache["lattice_points"] = lattice_points
    return _njit_cache


def _prim_pairs_numpy(c1: int, c0: int, parity: int, bound: int) -> np.ndarray:
    rows_a = []
    rows_b = []
    for a in range(1, bound + 1):
        t = np.arange(a, dtype=np.int64)
        hits = t[(t * t + c1 * t + c0) % a == 0]
        if hits.size:
            rows_a.append(np.full(hits.size, a, dtype=np.int64))
            rows_b.append(2 * hits + parity)
    if not rows_a:
        return np.empty((0, 2), dtype=np.int64)
    return np.stack([np.concatenate(rows_a), np.concatenate(rows_b)], axis=1)


def _lattice_points_numpy(t: int, d: int, bound: int) -> np.ndarray:
    ymax = int(math.sqrt(-4.0 * bound / (4.0 * d + t * t))) + 2
    blocks = []
    for y in range(-ymax, ymax + 1):
        # x^2 + t*y*x - d*y^2 <= bound: solve the quadratic in x
        disc = t * t * y * y + 4 * (bound + d * y * y)
        if disc < 0:
            continue
        r = math.isqrt(disc)
        lo = (-t * y - r - 2) // 2
        hi = (-t * y + r + 2) // 2
        x = np.arange(lo, hi + 1, dtype=np.int64)
        n = x * x + (t * y) * x - d * y * y
        keep = (n > 0) & (n <= bound)
        if keep.any():
            xs = x[keep]
            blocks.append(
                np.stack(
                    [xs, np.full(xs.size, y, dtype=np.int64), n[keep]], axis=1
                )
            )
    if not blocks:
        return np.empty((0, 3), dtype=np.int64)
    return np.concatenate(blocks, axis=0)


def _poly_for_disc(disc: int) -> tuple[int, int, int]:
    """(c1, c0, parity) so that b = 2t + parity solves b^2 = disc mod 4a."""
    if disc % 4 == 0:
        return 0, -disc // 4, 0
    return 1, (1 - disc) // 4, 1


def _basis_for_disc(disc: int) -> tuple[int, int]:
    """(t, d) with w^2 = t*w + d for the ring generator w of O_K."""
    if disc % 4 == 0:
        return 0, disc // 4
    return 1, (disc - 1) // 4


def primitive_ideal_pairs(disc: int, bound: int) -> np.ndarray:
    """All (a, b) with 0 <= b < 2a, b^2 = disc (mod 4a), a <= bound.

    Each row is one primitive integral ideal Z a + Z (b + sqrt(disc))/2 of
    norm a.
    """
    if bound < 1:
        return np.empty((0, 2), dtype=np.int64)
    c1, c0, parity = _poly_for_disc(disc)
    if use_numba():
        return _compiled()["prim_pairs"](c1, c0, parity, bound)
    return _prim_pairs_numpy(c1, c0, parity, bound)


def lattice_points_by_norm(disc: int, bound: int) -> np.ndarray:
    """All (x, y, n) with 0 < n = Norm(x + y*w) <= bound, w the ring generator."""
    if bound < 1:
        return np.empty((0, 3), dtype=np.int64)
    t, d = _basis_for_disc(disc)
    if use_numba():
        return _compiled()["lattice_points"](t, d, bound)
    return _lattice_points_numpy(t, d, bound)
