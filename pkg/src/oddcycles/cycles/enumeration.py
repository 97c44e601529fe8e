"""Enumeration of odd vanishing cycles through their normal-form tuples.

A tuple (r, ε, 0, l2, …, l2r) names the point
(−1)^ε ζ^{l2r} A1^{l_{2r−1}} ζ^{l_{2r−2}} ··· A1^{l3} ζ^{l2} · 1, and distinct
tuples name distinct points, so walking the tuples enumerates the set
without any deduplication.  Each A1 step strictly increases the modulus
of the points reached this way, which lets the disk search prune.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterator, Sequence

from ..field import ComplexInterval, Context, CycInt, ZLambda, make_context, sign_sqrt_gap
from ..group import CanonicalTuple, reduce_column
from . import bulk


@dataclass(frozen=True)
class CycleRecord:
    point: CycInt
    age: int
    generation: int
    orbit_label: int
    tuple: CanonicalTuple

    @cached_property
    def embedding(self) -> ComplexInterval:
        return self.point.embed(53)

    def embed(self, precision: int) -> ComplexInterval:
        return self.point.embed(precision)

    def sort_key(self) -> tuple:
        return canonical_key(self.tuple)


def canonical_key(t: CanonicalTuple) -> tuple:
    return (t.age, t.r, t.eps) + t.l[1:]


# ---------------------------------------------------------------------------
# orbit labels


def orbit_modulus(q: int) -> int:
    if q % 2:
        return 1
    return 2 if q % 4 == 0 else 4


def label_from_tuple(q: int, t: CanonicalTuple) -> int:
    """Residue of the total μ_ζ exponent (−id counting as μ_ζ^q)."""
    return (t.mu_exponent() + t.eps * q) % orbit_modulus(q)


def orbit_representatives(ctx: Context) -> dict[int, CycInt]:
    q = ctx.q
    M = orbit_modulus(q)
    one, eta = CycInt.from_int(ctx, 1), CycInt.eta(ctx)
    reps = {0: one}
    if M >= 2:
        reps[(q - 1) % M] = eta
    if M == 4:
        reps[q % M] = -one
        reps[(2 * q - 1) % M] = -eta
    return reps


def orbit_label(ctx: Context, x: CycInt) -> int:
    """Index of the orbit of the group generated by A1 and A2 containing x."""
    red = reduce_column(x)
    if not red.member:
        raise ValueError(f"{x!r} is not an odd vanishing cycle")
    q = ctx.q
    # every step is −V·A1^(−m): μ-exponent q + 1 each; the endpoint is ±1
    k = len(red.multipliers)
    label = -k * (q + 1) + (q if red.final_sign < 0 else 0)
    return label % orbit_modulus(q)


# ---------------------------------------------------------------------------
# walking tuples


def _a1_power(x: CycInt, n: int) -> CycInt:
    return CycInt(x.a + x.c.times_lambda() * n, x.c)


def _rotate(ctx: Context, x: CycInt, k: int) -> CycInt:
    return ctx.unit_root(k) * x


def _cores_with_prefix(
    ctx: Context, age: int, generation: int, l2: int
) -> list[tuple[tuple[int, ...], CycInt]]:
    """Cores of the given age and generation whose tuple starts with l2,
    in lexicographic order of (l2, l3, …, l_{2r−1})."""
    q = ctx.q
    out: list[tuple[tuple[int, ...], CycInt]] = []

    def walk(y: CycInt, prefix: tuple[int, ...], remaining: int, blocks: int) -> None:
        for n in range(1, remaining - blocks + 2):
            z = _a1_power(y, n)
            if blocks == 1:
                if n == remaining:
                    out.append((prefix + (n,), z))
                continue
            for l in range(1, q - 1):
                walk(_rotate(ctx, z, l), prefix + (n, l), remaining - n, blocks - 1)

    walk(ctx.unit_root(l2), (l2,), age, generation - 1)
    return out


def _cores_task(args: tuple[int, int, int, int]) -> list[tuple[tuple[int, ...], tuple]]:
    q, age, generation, l2 = args
    ctx = make_context(q)
    return [(p, x.key()) for p, x in _cores_with_prefix(ctx, age, generation, l2)]


def _map_tasks(fn: Callable, tasks: Sequence, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _from_key(ctx: Context, key: tuple) -> CycInt:
    d = ctx.d
    return CycInt.from_coeffs(ctx, key[:d], key[d:])


def _records_for_cores(
    ctx: Context, age: int, generation: int, cores: list[tuple[tuple[int, ...], CycInt]]
) -> Iterator[CycleRecord]:
    q = ctx.q
    for eps in (0, 1):
        for prefix, core in cores:
            base = -core if eps else core
            for last in range(q):
                t = CanonicalTuple(generation, eps, (0,) + prefix + (last,))
                yield CycleRecord(
                    _rotate(ctx, base, last), age, generation, label_from_tuple(q, t), t
                )


def enumerate_by_age(ctx: Context, age_max: int, workers: int = 1) -> Iterator[CycleRecord]:
    """One record per normal-form tuple with age ≤ age_max, in canonical order."""
    if age_max < 0:
        raise ValueError("age_max must be nonnegative")
    q = ctx.q
    for eps in (0, 1):
        for last in range(q):
            t = CanonicalTuple(1, eps, (0, last))
            point = ctx.unit_root(last + eps * q)
            yield CycleRecord(point, 0, 1, label_from_tuple(q, t), t)
    for age in range(1, age_max + 1):
        for generation in range(2, age + 2):
            tasks = [(q, age, generation, l2) for l2 in range(1, q - 1)]
            parts = _map_tasks(_cores_task, tasks, workers)
            cores = [(p, _from_key(ctx, k)) for part in parts for p, k in part]
            yield from _records_for_cores(ctx, age, generation, cores)


def _as_fraction(R2) -> Fraction:
    R2 = Fraction(R2)
    if R2 < 0:
        raise ValueError("R2 must be nonnegative")
    return R2


def _disk_task(args: tuple[int, int, int, int]) -> list[tuple[tuple[int, ...], int, tuple]]:
    q, l2, num, den = args
    ctx = make_context(q)
    return [(p, a, x.key()) for p, a, x in _disk_cores(ctx, l2, Fraction(num, den))]


def within_disk(x: CycInt, R2: Fraction) -> bool:
    R2 = Fraction(R2)
    return (x.norm_lambda() * R2.denominator - R2.numerator).sign() <= 0


def _disk_cores(ctx: Context, l2: int, R2: Fraction) -> list[tuple[tuple[int, ...], int, CycInt]]:
    q = ctx.q
    out: list[tuple[tuple[int, ...], int, CycInt]] = []

    def walk(y: CycInt, prefix: tuple[int, ...], age: int) -> None:
        n = 1
        z = _a1_power(y, 1)
        # A1 keeps increasing the modulus, so stop at the first point outside
        while within_disk(z, R2):
            out.append((prefix + (n,), age + n, z))
            for l in range(1, q - 1):
                walk(_rotate(ctx, z, l), prefix + (n, l), age + n)
            n += 1
            z = _a1_power(z, 1)

    walk(ctx.unit_root(l2), (l2,), 0)
    return out


def enumerate_in_disk(ctx: Context, R2, workers: int = 1) -> list[CycleRecord]:
    """All odd vanishing cycles with |x|² ≤ R2, in canonical order."""
    R2 = _as_fraction(R2)
    q = ctx.q
    records: list[CycleRecord] = []
    if R2 < 1:
        return records
    records.extend(enumerate_by_age(ctx, 0))
    tasks = [(q, l2, R2.numerator, R2.denominator) for l2 in range(1, q - 1)]
    parts = _map_tasks(_disk_task, tasks, workers)
    groups: dict[tuple[int, int], list[tuple[tuple[int, ...], CycInt]]] = {}
    for part in parts:
        for prefix, age, key in part:
            generation = (len(prefix) + 1) // 2 + 1
            groups.setdefault((age, generation), []).append((prefix, _from_key(ctx, key)))
    for (age, generation), cores in sorted(groups.items()):
        cores.sort(key=lambda pc: pc[0])
        records.extend(_records_for_cores(ctx, age, generation, cores))
    return records


def age_bound(ctx: Context, R2) -> int:
    """Largest age that can occur with |x|² ≤ R2, from the linear shell
    growth ρ_s ≥ 1 + s(√(2λ²+1) − 1) (rounded up generously)."""
    import math

    lam = ctx.lam_float
    step = math.sqrt(2 * lam * lam + 1) - 1
    return max(0, math.ceil((math.sqrt(float(R2)) - 1) / step + 1e-9))


# ---------------------------------------------------------------------------
# shells


@dataclass(frozen=True)
class ShellTable:
    q: int
    rho2: tuple[ZLambda, ...]
    counts: tuple[int, ...]
    minimisers: tuple[tuple[CycInt, ...], ...]


def shell_growth_step(ctx: Context) -> ZLambda:
    """2λ² + 1, the square of the smallest modulus above one."""
    return ctx.lam * ctx.lam * 2 + 1


def shell_table(ctx: Context, s_max: int) -> ShellTable:
    """Exact minimal squared modulus and cardinality of every age shell.

    The minimisers listed are the cores attaining the minimum; the full
    set of minimisers is their orbit under ±ζ^k."""
    import numpy as np

    cores = bulk.core_arrays(ctx, s_max)
    q = ctx.q
    rho2, counts, mins = [], [], []
    for age in range(s_max + 1):
        X = np.concatenate([v for (a, _), v in cores.items() if a == age])
        approx, err = bulk.float_norms(ctx, X)
        cutoff = float(np.min(approx + err))
        cand = np.nonzero(approx - err <= cutoff)[0]
        points = [bulk.row_point(ctx, X[i]) for i in cand]
        norms = [p.norm_lambda() for p in points]
        best = norms[0]
        for n in norms[1:]:
            if (n - best).sign() < 0:
                best = n
        rho2.append(best)
        mins.append(tuple(p for p, n in zip(points, norms) if n == best))
        counts.append(2 * q * X.shape[0])
    return ShellTable(q, tuple(rho2), tuple(counts), tuple(mins))


def shell_growth_holds(ctx: Context, rho2_s: ZLambda, rho2_next: ZLambda) -> bool:
    """ρ_{s+1} ≥ ρ_s + (√(2λ²+1) − 1), decided exactly."""
    return sign_sqrt_gap(rho2_next, rho2_s, shell_growth_step(ctx)) >= 0


def expected_shell_count(q: int, age: int) -> int:
    """|Δ^(1, s, *)| = 2q for s = 0 and 2q(q−2)(q−1)^(s−1) after."""
    if age == 0:
        return 2 * q
    return 2 * q * (q - 2) * (q - 1) ** (age - 1)


# ---------------------------------------------------------------------------
# sectors


def in_sector_ge1_eta(x: CycInt) -> bool:
    """x ∈ S^{≥1}(1, ζ^(q−1)): coordinates ≥ 1 in (1, η) and |x| ≥ 1."""
    return (x.a - 1).sign() >= 0 and (x.c - 1).sign() >= 0 and (x.norm_lambda() - 1).sign() >= 0


def in_sector_ge1_zeta(x: CycInt) -> bool:
    """x ∈ S^{≥1}(1, ζ): coordinates ≥ 1 in (1, ζ) and |x| ≥ 1."""
    u, v = x.to_zeta_basis()
    return (u - 1).sign() >= 0 and (v - 1).sign() >= 0 and (x.norm_lambda() - 1).sign() >= 0


# ---------------------------------------------------------------------------
# rectangles


@dataclass(frozen=True)
class Rectangle:
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction

    def __post_init__(self) -> None:
        for name in ("x0", "x1", "y0", "y1"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.x0 > self.x1 or self.y0 > self.y1:
            raise ValueError("rectangle corners out of order")

    def radius2(self) -> Fraction:
        """Squared distance from 0 to the farthest corner."""
        return max(self.x0**2, self.x1**2) + max(self.y0**2, self.y1**2)


# a window that holds the pictures of the first few shells for q ≤ 9
FIGURE_RECTANGLE = Rectangle(Fraction(-15, 2), Fraction(15, 2), Fraction(-5), Fraction(5))


def _sign_re_minus(x: CycInt, t: Fraction) -> int:
    """Sign of Re(x) − t, with Re(x) = a − λc/2."""
    diff = (x.a * 2 - x.c.times_lambda()) * t.denominator - 2 * t.numerator
    return diff.sign()


def _sign_im_minus(x: CycInt, t: Fraction) -> int:
    """Sign of Im(x) − t, with Im(x) = c·sin(π/q) and sin² = 1 − λ²/4."""
    sc = x.c.sign()
    st = (t > 0) - (t < 0)
    if sc != st:
        return (sc > st) - (sc < st)
    if sc == 0:
        return 0
    # same sign: compare c²(4 − λ²)·den² with 4·num²
    lam = x.ctx.lam
    lhs = x.c * x.c * (4 - lam * lam) * (t.denominator**2)
    return sc * (lhs - 4 * t.numerator**2).sign()


def in_rectangle(x: CycInt, rect: Rectangle) -> bool:
    return (
        _sign_re_minus(x, rect.x0) >= 0
        and _sign_re_minus(x, rect.x1) <= 0
        and _sign_im_minus(x, rect.y0) >= 0
        and _sign_im_minus(x, rect.y1) <= 0
    )


def enumerate_in_rectangle(ctx: Context, rect: Rectangle, workers: int = 1) -> list[CycleRecord]:
    """Members inside the closed rectangle, in canonical order."""
    return [r for r in enumerate_in_disk(ctx, rect.radius2(), workers) if in_rectangle(r.point, rect)]
