import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddcycles.cycles.arithmetic import closed_form_member, first_lattice_point, second_lattice_point
from oddcycles.field import CycInt, QLambda, ZLambda, make_context
from oddcycles.group import (
    INFINITY,
    CanonicalTuple,
    Mat2,
    Word,
    act,
    canonical_tuple,
    cf_ratio_equals,
    eval_cf,
    eval_tuple,
    eval_word,
    factor,
    generators,
    in_hecke_group,
    is_odd_vanishing_cycle,
    pseudo_euclid,
    relations_report,
)
from oddcycles.verify import random_cyc, random_word


def test_generator_identities(ctx):
    V, A1, A2, Q = generators(ctx)
    I = Mat2.identity(ctx)
    assert Q == A1 * V
    assert A1 * A2 == -(Q * Q)
    assert V.det() == 1
    assert act(A1, CycInt.eta(ctx)) == CycInt.zeta(ctx)
    x = CycInt.from_coeffs(ctx, [1] * ctx.d, [2] * ctx.d)
    assert act(I, x) == x
    assert act(Q, x) == CycInt.zeta(ctx) * x


@pytest.mark.parametrize("q", range(3, 13))
def test_relations(q):
    report = relations_report(make_context(q))
    failed = [r.name for r in report if not r.passed]
    assert not failed


def test_relation_branches():
    from oddcycles.group import q_tilde

    assert q_tilde(5) == 10
    for q, expect in ((8, -1), (6, 1)):
        ctx = make_context(q)
        _, A1, A2, _ = generators(ctx)
        assert (A1 * A2) ** (q // 2) == Mat2.identity(ctx) * expect


def test_eval_tuple_examples(ctx):
    I = Mat2.identity(ctx)
    Q = generators(ctx)[3]
    assert eval_tuple(ctx, CanonicalTuple(1, 0, (0, 0))) == I
    assert eval_tuple(ctx, CanonicalTuple(1, 0, (0, 1))) == Q
    assert eval_tuple(ctx, CanonicalTuple(1, 1, (0, 0))) == -I
    with pytest.raises(ValueError):
        eval_tuple(ctx, CanonicalTuple(2, 0, (0, 0, 1, 0)))


def test_canonical_tuple_examples(ctx):
    q = ctx.q
    assert canonical_tuple(ctx, Word.parse("A1")) == CanonicalTuple(1, 0, (1, 0))
    assert canonical_tuple(ctx, Word.parse("V")) == CanonicalTuple(1, 0, (1, q - 1))
    assert canonical_tuple(ctx, Word.parse("Q")) == CanonicalTuple(1, 0, (0, 1))


def test_pseudo_euclid_examples():
    c5, c3 = make_context(5), make_context(3)
    cf = pseudo_euclid(QLambda(c5.lam), QLambda(c5.one))
    assert cf.terms == (1,) and cf.terminated
    cf = pseudo_euclid(QLambda(c3.one), QLambda(c3.one * 2))
    assert cf.terms == (0, -2) and cf.terminated
    assert str(cf) == "[0; -2]"
    assert eval_cf(c3, [0, -2]) == QLambda(c3.one, 2)
    assert eval_cf(c5, [1]) == QLambda(c5.lam)
    assert eval_cf(c5, []) is INFINITY
    with pytest.raises(ZeroDivisionError):
        pseudo_euclid(QLambda(c5.one), QLambda(c5.zero))


def test_pseudo_euclid_cap():
    # for q = 7 not every element of Q(λ) is a cusp; the cap must hold
    ctx = make_context(7)
    cf = pseudo_euclid(QLambda(ctx.lam * ctx.lam), QLambda(ctx.one * 3), max_steps=5)
    assert cf.steps_used <= 5
    if cf.terminated:
        assert cf_ratio_equals(eval_cf(ctx, cf.terms), QLambda(ctx.lam * ctx.lam), QLambda(ctx.one * 3))


def test_membership_examples():
    c3, c5 = make_context(3), make_context(5)
    assert is_odd_vanishing_cycle(CycInt.from_int(c5, 1))
    assert is_odd_vanishing_cycle(CycInt(c5.lam * 2, c5.one))
    assert not is_odd_vanishing_cycle(CycInt.from_coeffs(c3, [2], [4]))
    assert not is_odd_vanishing_cycle(CycInt.from_int(c5, 0))


def test_hecke_membership_examples(ctx):
    V, A1, _, _ = generators(ctx)
    assert in_hecke_group(V)
    for k in (-3, 1, 7):
        assert in_hecke_group(A1**k)
    c4 = make_context(4)
    one, zero = c4.one, c4.zero
    assert not in_hecke_group(Mat2(one, one, zero, one))


def test_factor_examples(ctx):
    V, A1, _, Q = generators(ctx)
    for m in (A1, V, Q**3 * A1**2 * Q):
        w = factor(m)
        assert eval_word(ctx, w) == m
        assert all(g in ("NEG", "Q", "A1") for g, _ in w)


def test_factor_rejects_non_members():
    c4 = make_context(4)
    with pytest.raises(ValueError):
        factor(Mat2(c4.one, c4.one, c4.zero, c4.one))


# --- properties --------------------------------------------------------------

QS = st.sampled_from([3, 4, 5, 6, 7, 8, 9])
seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=150, deadline=None)
@given(QS, seeds)
def test_psi_is_homomorphism(q, seed):
    ctx = make_context(q)
    rng = random.Random(seed)
    m1 = eval_word(ctx, random_word(rng, 6))
    m2 = eval_word(ctx, random_word(rng, 6))
    x = random_cyc(ctx, rng, 20)
    assert act(m1 * m2, x) == act(m1, act(m2, x))
    assert act(generators(ctx)[3], x) == CycInt.zeta(ctx) * x


@settings(max_examples=200, deadline=None)
@given(QS, seeds)
def test_factor_round_trip(q, seed):
    ctx = make_context(q)
    rng = random.Random(seed)
    m = eval_word(ctx, random_word(rng, rng.randint(0, 30)))
    assert in_hecke_group(m)
    assert eval_word(ctx, factor(m)) == m
    bumped = Mat2(m.a + 1, m.b, m.c, m.d)
    if bumped.det() != 1:
        assert not in_hecke_group(bumped)


@settings(max_examples=200, deadline=None)
@given(QS, seeds)
def test_canonical_tuple_round_trip(q, seed):
    ctx = make_context(q)
    rng = random.Random(seed)
    toks = []
    for _ in range(rng.randint(1, 12)):
        g = rng.choice(["V", "A1", "A2", "Q", "NEG"])
        toks.append((g, 1 if g == "NEG" else rng.choice([-2, -1, 1, 2, 3])))
    w = Word(tuple(toks))
    t = canonical_tuple(ctx, w)
    t.validate(q)
    assert eval_tuple(ctx, t) == eval_word(ctx, w)


@st.composite
def tuples(draw):
    q = draw(QS)
    r = draw(st.integers(1, 4))
    l = [draw(st.integers(-3, 3))]
    for i in range(1, 2 * r - 1):
        l.append(draw(st.integers(1, q - 2)) if i % 2 else draw(st.integers(1, 3)))
    l.append(draw(st.integers(0, q - 1)))
    return q, CanonicalTuple(r, draw(st.integers(0, 1)), tuple(l))


@settings(max_examples=200, deadline=None)
@given(tuples(), tuples())
def test_tuples_are_injective(a, b):
    (q1, t1), (q2, t2) = a, b
    if q1 != q2:
        return
    ctx = make_context(q1)
    assert canonical_tuple(ctx, t1.to_word()) == t1
    if t1 != t2:
        assert eval_tuple(ctx, t1) != eval_tuple(ctx, t2)


@settings(max_examples=200, deadline=None)
@given(QS, seeds)
def test_terminated_cf_reproduces_ratio(q, seed):
    ctx = make_context(q)
    rng = random.Random(seed)
    r0 = QLambda(ZLambda(ctx, [rng.randint(-30, 30) for _ in range(ctx.d)]), rng.randint(1, 5))
    r1 = QLambda(ZLambda(ctx, [rng.randint(-30, 30) for _ in range(ctx.d)]), rng.randint(1, 5))
    if not r1:
        return
    cf = pseudo_euclid(r0, r1, max_steps=200)
    if cf.terminated:
        assert cf_ratio_equals(eval_cf(ctx, cf.terms), r0, r1)


def test_mcmullen_sign_property():
    ctx = make_context(5)
    rng = random.Random(5)
    for _ in range(300):
        m = eval_word(ctx, random_word(rng, rng.randint(1, 20)))
        assert all(e.c[0] * e.c[1] >= 0 for e in m.entries())


def test_membership_matches_closed_form_q3():
    ctx = make_context(3)
    for a in range(-30, 31):
        for c in range(-30, 31):
            x = first_lattice_point(ctx, a, c)
            assert is_odd_vanishing_cycle(x) == closed_form_member(ctx, x), (a, c)


@pytest.mark.parametrize("q", [4, 6])
def test_membership_matches_closed_form_lattices(q):
    ctx = make_context(q)
    for u in range(-30, 31):
        for v in range(-30, 31):
            for x in (first_lattice_point(ctx, u, v), second_lattice_point(ctx, u, v)):
                assert is_odd_vanishing_cycle(x) == closed_form_member(ctx, x), (u, v)


@pytest.mark.parametrize("q", [4, 6])
def test_membership_matches_closed_form_generic(q):
    # points off both lattices are never members
    ctx = make_context(q)
    rng = random.Random(q)
    for _ in range(2000):
        x = random_cyc(ctx, rng, 3)
        assert is_odd_vanishing_cycle(x) == closed_form_member(ctx, x), x
