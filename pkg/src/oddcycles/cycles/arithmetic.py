"""Closed-form membership for q = 3, 4, 6 and certified empty regions.

For these q the ring Z[λ] is Z, Z[√2] or Z[√3], and the odd vanishing
cycles are the primitive points of one or two Z-lattices:

    q = 3:  a + bη             gcd(a, b) = 1
    q = 4:  a + c√2·η          gcd(a, 2c) = 1    (first lattice)
            b√2 + dη           gcd(2b, d) = 1    (second lattice)
    q = 6:  as q = 4 with √3 and 3 in place of √2 and 2.

A hole is built from an N×N grid of primes: by the Chinese remainder
theorem one finds a0, c0 with p_ij | gcd(a0 + i, c0 + j), so the N×N
block of lattice points above (a0, c0) has no primitive point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ..field import Context, CycInt
from ..group import is_odd_vanishing_cycle

CLOSED_FORM_Q = (3, 4, 6)


def _require_closed_form(ctx: Context) -> None:
    if ctx.q not in CLOSED_FORM_Q:
        raise ValueError(f"closed forms exist only for q in {CLOSED_FORM_Q}, got q={ctx.q}")


def first_lattice_point(ctx: Context, a: int, c: int) -> CycInt:
    """a + c·η for q = 3, a + c·λ·η for q = 4, 6."""
    _require_closed_form(ctx)
    if ctx.q == 3:
        return CycInt.from_coeffs(ctx, [a], [c])
    return CycInt.from_coeffs(ctx, [a, 0], [0, c])


def second_lattice_point(ctx: Context, b: int, d: int) -> CycInt:
    """b·λ + d·η (q = 4, 6 only)."""
    if ctx.q not in (4, 6):
        raise ValueError("the second lattice exists only for q = 4, 6")
    return CycInt.from_coeffs(ctx, [0, b], [d, 0])


def lattice_coordinates(ctx: Context, x: CycInt) -> tuple[int, int, int] | None:
    """(lattice, u, v) with x the point (u, v) of lattice 1 or 2, else None."""
    _require_closed_form(ctx)
    if ctx.q == 3:
        return 1, x.a.c[0], x.c.c[0]
    (a0, a1), (c0, c1) = x.a.c, x.c.c
    if a1 == 0 and c0 == 0:
        return 1, a0, c1
    if a0 == 0 and c1 == 0:
        return 2, a1, c0
    return None


def closed_form_member(ctx: Context, x: CycInt) -> bool:
    coords = lattice_coordinates(ctx, x)
    if coords is None:
        return False
    lattice, u, v = coords
    if ctx.q == 3:
        return math.gcd(u, v) == 1
    k = ctx.q // 2  # λ² = 2 or 3
    if lattice == 1:
        return math.gcd(u, k * v) == 1
    return math.gcd(k * u, v) == 1


def lattice_norm(q: int, lattice: int, u: int, v: int) -> int:
    """|x|² of the lattice point (u, v), an integer for these q."""
    if q == 3:
        return u * u - u * v + v * v
    k = q // 2
    if lattice == 1:
        return u * u - k * u * v + k * v * v
    return k * u * u - k * u * v + v * v


def _form_coefficients(q: int, lattice: int) -> tuple[int, int, int]:
    """(A, B, C) with lattice_norm = A·u² − B·u·v + C·v²."""
    if q == 3:
        return 1, 1, 1
    k = q // 2
    return (1, k, k) if lattice == 1 else (k, k, 1)


def closed_form_scan(ctx: Context, R2: int) -> Iterator[CycInt]:
    """Every closed-form member with |x|² ≤ R2, by a box scan."""
    _require_closed_form(ctx)
    q = ctx.q
    for lattice in (1,) if q == 3 else (1, 2):
        A, B, C = _form_coefficients(q, lattice)
        disc = 4 * A * C - B * B
        # completing the square: v² ≤ 4A·R2/disc and u² ≤ 4C·R2/disc
        u_max = math.isqrt(4 * C * R2 // disc) + 1
        v_max = math.isqrt(4 * A * R2 // disc) + 1
        point = first_lattice_point if lattice == 1 else second_lattice_point
        for u in range(-u_max, u_max + 1):
            for v in range(-v_max, v_max + 1):
                if lattice_norm(q, lattice, u, v) <= R2:
                    x = point(ctx, u, v)
                    if closed_form_member(ctx, x):
                        yield x


# ---------------------------------------------------------------------------
# holes


def primes(count: int) -> list[int]:
    """The first `count` primes."""
    if count <= 0:
        return []
    limit = 16
    while True:
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
        found = [i for i, flag in enumerate(sieve) if flag]
        if len(found) >= count:
            return found[:count]
        limit *= 2


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3·10^24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    if n in small:
        return True
    if any(n % p == 0 for p in small):
        return False
    if n >= 3_317_044_064_679_887_385_961_981:
        raise ValueError("prime check limited to n < 3.3e24")
    d, s = n - 1, 0
    while d % 2 == 0:
        d, s = d // 2, s + 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """The x in [0, ∏ m) with x ≡ r_i mod m_i, for pairwise coprime m_i."""
    total = math.prod(moduli)
    x = 0
    for r, m in zip(residues, moduli):
        rest = total // m
        x += r * rest * pow(rest % m, -1, m)
    return x % total


@dataclass(frozen=True)
class GridHole:
    """An N×N block of non-primitive points of one lattice."""

    primes: tuple[tuple[int, ...], ...]
    base: tuple[int, int]
    period: int

    @property
    def N(self) -> int:
        return len(self.primes)


def grid_hole(prime_grid: Sequence[Sequence[int]]) -> GridHole:
    N = len(prime_grid)
    grid = tuple(tuple(int(p) for p in row) for row in prime_grid)
    if N < 1 or any(len(row) != N for row in grid):
        raise ValueError("primes must form a nonempty N×N grid")
    flat = [p for row in grid for p in row]
    if len(set(flat)) != len(flat):
        raise ValueError("primes must be pairwise distinct")
    if not all(is_prime(p) for p in flat):
        raise ValueError("grid entries must be primes")
    P_rows = [math.prod(grid[i]) for i in range(N)]
    Q_cols = [math.prod(grid[i][j] for i in range(N)) for j in range(N)]
    a0 = crt([-(i + 1) for i in range(N)], P_rows)
    c0 = crt([-(j + 1) for j in range(N)], Q_cols)
    return GridHole(grid, (a0, c0), math.prod(flat))


def _grid(values: Sequence[int], N: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(values[i * N : (i + 1) * N]) for i in range(N))


@dataclass(frozen=True)
class HoleCertificate:
    """An open parallelogram free of odd vanishing cycles (of one lattice
    for q = 4, 6 unless the overlap stage ran).

    The region is {(a0 + s) + (c0 + t)·w : 0 < s, t < N + 1} with w = η for
    q = 3 and w = λη for q = 4, 6."""

    q: int
    N: int
    primes: tuple[tuple[int, ...], ...]
    base: tuple[int, int]
    interior: tuple[tuple[int, int], ...]
    verified: bool
    lattices: tuple[int, ...] = (1,)
    overlap: dict | None = field(default=None, compare=False)

    def quadrangle(self) -> dict:
        a0, c0 = self.base
        w = "eta" if self.q == 3 else "lambda*eta"
        return {
            "corner": [a0, c0],
            "side": self.N + 1,
            "basis": ["1", w],
            "open": True,
        }


def find_hole(
    ctx: Context,
    N: int,
    primes_grid: Sequence[Sequence[int]] | None = None,
    overlap: bool = False,
) -> HoleCertificate:
    _require_closed_form(ctx)
    if N < 1:
        raise ValueError("N must be positive")
    if primes_grid is None:
        primes_grid = _grid(primes(N * N), N)
    if len(primes_grid) != N:
        raise ValueError(f"expected an {N}×{N} grid of primes")
    hole = grid_hole(primes_grid)
    a0, c0 = hole.base
    interior = tuple((a0 + i, c0 + j) for i in range(1, N + 1) for j in range(1, N + 1))
    verified = True
    for u, v in interior:
        x = first_lattice_point(ctx, u, v)
        verified &= math.gcd(u, v) > 1
        verified &= not closed_form_member(ctx, x)
        verified &= not is_odd_vanishing_cycle(x)
    cert = HoleCertificate(ctx.q, N, hole.primes, hole.base, interior, verified)
    if overlap and ctx.q in (4, 6):
        cert = _with_overlap(ctx, cert, hole)
    return cert


def _floor_sqrt_mul(r: int, k: int) -> int:
    """floor(r·√k) for a nonsquare k."""
    t = math.isqrt(k * r * r)
    return t if r >= 0 else -t - 1


def _floor_lin(p: int, r: int, k: int, den: int) -> int:
    """floor((p + r·√k)/den) for den > 0 and nonsquare k."""
    return (p + _floor_sqrt_mul(r, k)) // den


def _sign_lin(p: int, r: int, k: int) -> int:
    """Sign of p + r·√k (nonzero unless p = r = 0)."""
    if r == 0 or p == 0 or (p > 0) == (r > 0):
        return (p > 0) - (p < 0) or (r > 0) - (r < 0)
    return 1 if (p * p > k * r * r) == (p > 0) else -1


def _with_overlap(ctx: Context, cert: HoleCertificate, hole: GridHole) -> HoleCertificate:
    """Shift the first-lattice hole by a period so that it sits inside a
    larger hole of the second lattice, then check the second-lattice
    points in the shifted region.

    Here λ = √k with k = 2 or 3, and the numbers involved have hundreds
    of thousands of digits, so comparisons use integer square roots."""
    N, P = cert.N, hole.period
    k = ctx.q // 2
    # second hole side N2 + 1 > λ(P + N + 1) leaves room for a shift
    N2 = _floor_lin(0, P + N + 1, k, 1) + 1
    used = {p for row in hole.primes for p in row}
    pool = [p for p in primes(N2 * N2 + len(used)) if p not in used][: N2 * N2]
    second = grid_hole(_grid(pool, N2))
    b0, d0 = second.base

    a0, c0 = hole.base
    # real part: b0·λ ≤ a0 + m1·P and a0 + m1·P + N + 1 ≤ (b0 + N2 + 1)·λ
    m1 = -_floor_lin(a0, -b0, k, P)
    # η part: d0 ≤ (c0 + m2·P)·λ and (c0 + m2·P + N + 1)·λ ≤ d0 + N2 + 1
    m2 = -_floor_lin(c0 * k, -d0, k, k * P)
    A0, C0 = a0 + m1 * P, c0 + m2 * P

    ok = _sign_lin(-A0, b0, k) <= 0
    ok &= _sign_lin(-(A0 + N + 1), b0 + N2 + 1, k) >= 0
    ok &= _sign_lin(-d0, C0, k) >= 0
    ok &= _sign_lin(-(d0 + N2 + 1), C0 + N + 1, k) <= 0

    # second-lattice points bλ + dη with A0 < bλ < A0 + N + 1, C0·λ < d < (C0 + N + 1)·λ
    b_lo = _floor_lin(0, A0, k, k) + 1
    b_hi = -_floor_lin(0, -(A0 + N + 1), k, k) - 1
    d_lo = _floor_sqrt_mul(C0, k) + 1
    d_hi = -_floor_sqrt_mul(-(C0 + N + 1), k) - 1
    inside = []
    for b in range(b_lo, b_hi + 1):
        for d in range(d_lo, d_hi + 1):
            inside.append((b, d))
            ok &= b0 < b < b0 + N2 + 1 and d0 < d < d0 + N2 + 1
            ok &= math.gcd(k * b, d) > 1
    # the first-lattice points keep their common factors under the shift
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            ok &= math.gcd(A0 + i, C0 + j) > 1
    info = {
        "N2": N2,
        "second_base": [b0, d0],
        "shift": [m1, m2],
        "unshifted_base": [a0, c0],
        "second_lattice_points": len(inside),
    }
    interior = tuple((A0 + i, C0 + j) for i in range(1, N + 1) for j in range(1, N + 1))
    return HoleCertificate(
        cert.q,
        N,
        cert.primes,
        (A0, C0),
        interior,
        cert.verified and ok,
        (1, 2),
        info,
    )
