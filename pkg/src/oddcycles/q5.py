"""Norm-decreasing reduction in Z[ζ] for q = 5.

Every nonzero γ ∈ Z[ζ₁₀] is u·δ with u ∈ Z[λ] positive and δ an odd
vanishing cycle, and the pair is unique.  It is found by repeating one
step: rotate γ by a power of ζ into one of two thin sectors next to the
positive or negative real axis, then shear it with a power of A1 into the
upper sector between ζ and ζ⁴.  The absolute norm |N(γ)| strictly drops
each time, so after finitely many steps γ lies on a unit-root ray.

Sectors use arguments in degrees.  LOWER is 0° < arg ≤ 18° and UPPER is
162° < arg < 180°; the target sectors are [36°, 144°) after a LOWER step
and (36°, 144°] after an UPPER step.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .field import Context, CycInt, ZLambda, floor_ratio, make_context
from .group import Word, act, generators, reduce_column, is_odd_vanishing_cycle


class Branch(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class SectorLocation:
    k: int
    branch: Branch


@dataclass(frozen=True)
class TraceStep:
    k: int
    n: int
    branch: Branch
    norm_before: int
    norm_after: int


@dataclass(frozen=True)
class Decomposition:
    gamma: CycInt
    u: ZLambda
    delta: CycInt
    trace: tuple[TraceStep, ...] = field(default=())


def _check_q5(x: CycInt) -> Context:
    ctx = x.ctx
    if ctx.q != 5:
        raise ValueError(f"this procedure needs q = 5, got q = {ctx.q}")
    return ctx


def base_case(gamma: CycInt) -> tuple[ZLambda, int] | None:
    """(w, j) with γ = w·ζ^(−j) and w > 0 in Z[λ], if γ lies on a unit-root ray."""
    ctx = gamma.ctx
    if not gamma:
        return None
    for j in range(2 * ctx.q):
        y = ctx.unit_root(j) * gamma
        if not y.c and y.a.sign() > 0:
            return y.a, j
    return None


def _open_first_sector(x: CycInt) -> bool:
    """0° < arg x < 36°: both (1, ζ) coordinates positive."""
    u, v = x.to_zeta_basis()
    return u.sign() > 0 and v.sign() > 0


def locate_sector(gamma: CycInt) -> SectorLocation:
    ctx = _check_q5(gamma)
    if not gamma:
        raise ValueError("γ must be nonzero")
    if base_case(gamma) is not None:
        raise ValueError("γ lies on a unit-root ray; it is a base case")
    for j in range(2 * ctx.q):
        y = ctx.unit_root(j) * gamma
        if _open_first_sector(y):
            u, v = y.to_zeta_basis()
            # the ray at 18° is u = v; it belongs to LOWER
            if (u - v).sign() >= 0:
                return SectorLocation(j, Branch.LOWER)
            # 18° < arg < 36° rotates by ζ⁴ into 162° < arg < 180°
            return SectorLocation((j + 4) % 10, Branch.UPPER)
    raise AssertionError(f"no sector found for {gamma!r}")


def in_lower_sector_by_square(x: CycInt) -> bool:
    """0° < arg x ≤ 18°, decided through x² (0° < arg x² ≤ 36°)."""
    u, v = x.to_zeta_basis()
    if not (u.sign() > 0 and v.sign() > 0):
        return False
    u2, v2 = (x * x).to_zeta_basis()
    return u2.sign() >= 0 and v2.sign() > 0


def _ceil_ratio(num: ZLambda, den: ZLambda) -> int:
    return -floor_ratio(-num, den)


def step_P(gamma: CycInt) -> tuple[Word, CycInt, TraceStep]:
    """One reduction step: b = A1^(−n)·Q^k, returning (b, b(γ), trace)."""
    ctx = _check_q5(gamma)
    loc = locate_sector(gamma)
    y = ctx.unit_root(loc.k) * gamma
    lam_c = y.c.times_lambda()  # c > 0 in both sectors
    if loc.branch is Branch.LOWER:
        # 0 < a − nλc ≤ λc
        n = _ceil_ratio(y.a, lam_c) - 1
    else:
        # 0 ≤ a − nλc < λc
        n = floor_ratio(y.a, lam_c)
    z = CycInt(y.a - lam_c * n, y.c)
    before, after = gamma.norm_q(), z.norm_q()
    if loc.branch is Branch.LOWER:
        assert n >= 1 and (z.a.sign() > 0 and (z.a - lam_c).sign() <= 0), (gamma, n)
    else:
        assert n <= -1 and (z.a.sign() >= 0 and (z.a - lam_c).sign() < 0), (gamma, n)
    if not abs(after) < abs(before):
        raise AssertionError(f"norm did not decrease: {before} -> {after} for {gamma!r}")
    word = Word((("A1", -n), ("Q", loc.k))) if loc.k else Word((("A1", -n),))
    return word, z, TraceStep(loc.k, n, loc.branch, before, after)


def _undo(ctx: Context, steps: list[TraceStep], x: CycInt) -> CycInt:
    """Apply (A1^(−n) Q^k)^(−1) for the steps in reverse order."""
    V, A1, A2, Q = generators(ctx)
    for st in reversed(steps):
        x = act(A1 ** st.n, x)
        x = act(Q ** (-st.k), x)
    return x


def half_line_representative(gamma: CycInt) -> tuple[ZLambda, CycInt]:
    """(u, δ) from the nearest-integer reduction run down to the real axis.

    Each reduction step is a group element g, so γ = g⁻¹(w, 0) = |w|·g⁻¹(±1)."""
    ctx = _check_q5(gamma)
    if not gamma:
        raise ValueError("γ must be nonzero")
    red = reduce_column(gamma, stop_below_one=False)
    w = red.final.a
    s = w.sign()
    x = CycInt.from_int(ctx, s)
    for m in reversed(red.multipliers):
        # inverse of (a, c) -> (c, mλc − a)
        x = CycInt(x.a.times_lambda() * m - x.c, x.a)
    return w * s, x


def decompose_q5(gamma: CycInt, cross_check: bool = True) -> Decomposition:
    ctx = _check_q5(gamma)
    if not gamma:
        raise ValueError("γ must be nonzero")
    steps: list[TraceStep] = []
    cur = gamma
    while True:
        found = base_case(cur)
        if found is not None:
            break
        _, cur, st = step_P(cur)
        steps.append(st)
    w, j = found
    delta = _undo(ctx, steps, ctx.unit_root(-j))
    if delta * w != gamma:
        raise AssertionError(f"u·δ ≠ γ for {gamma!r}")
    if not is_odd_vanishing_cycle(delta):
        raise AssertionError(f"δ = {delta!r} failed the membership test")
    if cross_check:
        u2, d2 = half_line_representative(gamma)
        if (u2, d2) != (w, delta):
            raise AssertionError(f"half-line representative differs for {gamma!r}")
    return Decomposition(gamma, w, delta, tuple(steps))


def q5_context() -> Context:
    return make_context(5)
