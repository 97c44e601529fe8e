"""Seeded self-checks across all modules, used by `oddcycles verify`."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .cycles import bulk
from .cycles.arithmetic import CLOSED_FORM_Q, closed_form_scan
from .cycles.enumeration import (
    enumerate_by_age,
    enumerate_in_disk,
    expected_shell_count,
    orbit_label,
    shell_growth_holds,
    shell_table,
)
from .field import Context, CycInt, ZLambda, make_context, poly_str
from .group import (
    Mat2,
    Word,
    act,
    eval_word,
    factor,
    generators,
    in_hecke_group,
    is_odd_vanishing_cycle,
    relations_report,
)

MINPOLY_TABLE = {
    3: "t-1",
    4: "t^2-2",
    5: "t^2-t-1",
    6: "t^2-3",
    7: "t^3-t^2-2t+1",
}

DEFAULT_Q_LIST = (3, 4, 5, 6, 7, 8, 9, 10)


def random_word(rng: random.Random, length: int) -> Word:
    """A word over V and A1 with small nonzero exponents."""
    toks = []
    for _ in range(length):
        if rng.random() < 0.5:
            toks.append(("V", rng.choice((1, 2, 3))))
        else:
            toks.append(("A1", rng.choice((-3, -2, -1, 1, 2, 3))))
    return Word(tuple(toks))


def random_zl(ctx: Context, rng: random.Random, height: int) -> ZLambda:
    return ZLambda(ctx, [rng.randint(-height, height) for _ in range(ctx.d)])


def random_cyc(ctx: Context, rng: random.Random, height: int) -> CycInt:
    return CycInt(random_zl(ctx, rng, height), random_zl(ctx, rng, height))


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    q: int
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.suite:<12} q={self.q:<3} {status} {self.passed}/{self.total}"


def _count(checks) -> tuple[int, int]:
    results = list(checks)
    return sum(bool(r) for r in results), len(results)


def suite_minpoly(ctx: Context, rng: random.Random) -> tuple[int, int]:
    if ctx.q not in MINPOLY_TABLE:
        return 0, 0
    return _count([poly_str(ctx.pmin) == MINPOLY_TABLE[ctx.q]])


def suite_relations(ctx: Context, rng: random.Random) -> tuple[int, int]:
    return _count(r.passed for r in relations_report(ctx))


def suite_ring(ctx: Context, rng: random.Random, n: int = 200) -> tuple[int, int]:
    out = []
    for _ in range(n):
        x, y, z = (random_cyc(ctx, rng, 20) for _ in range(3))
        out.append((x * y) * z == x * (y * z) and x * (y + z) == x * y + x * z)
        out.append((x * y).norm_lambda() == x.norm_lambda() * y.norm_lambda())
        out.append((x * y).norm_q() == x.norm_q() * y.norm_q())
        out.append(x * x.conj() == CycInt(x.norm_lambda(), ctx.zero))
    return _count(out)


def suite_membership(ctx: Context, rng: random.Random, n: int = 100) -> tuple[int, int]:
    out = []
    for _ in range(n):
        m = eval_word(ctx, random_word(rng, rng.randint(1, 12)))
        out.append(in_hecke_group(m))
        out.append(eval_word(ctx, factor(m)) == m)
        bumped = Mat2(m.a + 1, m.b, m.c, m.d)
        if bumped.det() != 1:
            out.append(not in_hecke_group(bumped))
    return _count(out)


def suite_enumeration(ctx: Context, rng: random.Random, age_max: int = 3) -> tuple[int, int]:
    report = bulk.duplicate_report(ctx, age_max)
    out = [report.duplicates == 0]
    shells: dict[tuple[int, int], set] = {}
    ages: dict[int, int] = {}
    for r in enumerate_by_age(ctx, min(age_max, 2)):
        shells.setdefault((r.age, r.generation), set()).add(r.point)
        ages[r.age] = ages.get(r.age, 0) + 1
        out.append(is_odd_vanishing_cycle(r.point))
    zeta = ctx.unit_root(1)
    for pts in shells.values():
        out.append({zeta * p for p in pts} == pts)
    out += [ages[s] == expected_shell_count(ctx.q, s) for s in ages]
    return _count(out)


def suite_shells(ctx: Context, rng: random.Random, s_max: int = 3) -> tuple[int, int]:
    table = shell_table(ctx, s_max)
    out = [table.rho2[0] == 1, table.rho2[1] == ctx.lam * ctx.lam * 2 + 1]
    for s in range(s_max):
        out.append(shell_growth_holds(ctx, table.rho2[s], table.rho2[s + 1]))
    return _count(out)


def suite_orbits(ctx: Context, rng: random.Random, n: int = 60) -> tuple[int, int]:
    _, A1, A2, _ = generators(ctx)
    moves = [A1, A1.inverse(), A2, A2.inverse()]
    sample = [r.point for r in enumerate_by_age(ctx, 1)]
    out = []
    for _ in range(n):
        x = rng.choice(sample)
        label = orbit_label(ctx, x)
        for _ in range(rng.randint(1, 8)):
            x = act(rng.choice(moves), x)
        out.append(orbit_label(ctx, x) == label)
        if ctx.q % 2:
            out.append(label == 0)
    return _count(out)


def suite_mcmullen(ctx: Context, rng: random.Random, n: int = 200) -> tuple[int, int]:
    if ctx.q != 5:
        return 0, 0
    out = []
    for _ in range(n):
        m = eval_word(ctx, random_word(rng, rng.randint(1, 20)))
        out.append(all(e.c[0] * e.c[1] >= 0 for e in m.entries()))
    return _count(out)


def suite_q5(ctx: Context, rng: random.Random, n: int = 100) -> tuple[int, int]:
    if ctx.q != 5:
        return 0, 0
    from .q5 import decompose_q5

    out = []
    for _ in range(n):
        g = random_cyc(ctx, rng, 4)
        if not g:
            continue
        d = decompose_q5(g)
        out.append(d.delta * d.u == g and d.u.sign() > 0)
        out.append((d.u == 1) == is_odd_vanishing_cycle(g))
    return _count(out)


def suite_closed_form(ctx: Context, rng: random.Random, R2: int = 100) -> tuple[int, int]:
    if ctx.q not in CLOSED_FORM_Q:
        return 0, 0
    enumerated = {r.point for r in enumerate_in_disk(ctx, R2)}
    return _count([enumerated == set(closed_form_scan(ctx, R2))])


SUITES: dict[str, Callable[[Context, random.Random], tuple[int, int]]] = {
    "minpoly": suite_minpoly,
    "relations": suite_relations,
    "ring": suite_ring,
    "membership": suite_membership,
    "enumeration": suite_enumeration,
    "shells": suite_shells,
    "orbits": suite_orbits,
    "mcmullen": suite_mcmullen,
    "q5": suite_q5,
    "closed_form": suite_closed_form,
}


def run(q_list=DEFAULT_Q_LIST, seed: int = 0, suites=None) -> list[SuiteResult]:
    names = list(SUITES) if suites is None else list(suites)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    results = []
    for q in q_list:
        ctx = make_context(q)
        for name in names:
            rng = random.Random(f"{seed}:{name}:{q}")
            passed, total = SUITES[name](ctx, rng)
            if total:
                results.append(SuiteResult(name, q, passed, total))
    return results
