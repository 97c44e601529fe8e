import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddcycles.field import (
    CycInt,
    QLambda,
    ZLambda,
    cyc_norm_to_lambda,
    cyc_norm_to_q,
    cyclotomic,
    embed,
    is_unit_root,
    is_unit_zl,
    lambda_minpoly,
    make_context,
    norm_lambda,
    poly_str,
    resultant,
    sign_sqrt_gap,
    to_zeta_basis,
    zl_mul,
    zl_sign,
)

TABLE = {
    3: ("t^2-t+1", "t-1"),
    4: ("t^4+1", "t^2-2"),
    5: ("t^4-t^3+t^2-t+1", "t^2-t-1"),
    6: ("t^4-t^2+1", "t^2-3"),
    7: (None, "t^3-t^2-2t+1"),
}


@pytest.mark.parametrize("q", sorted(TABLE))
def test_minpoly_table(q):
    ctx = make_context(q)
    phi, pmin = TABLE[q]
    assert poly_str(ctx.pmin) == pmin
    if phi:
        assert poly_str(ctx.phi2q) == phi
    assert ctx.d == len(ctx.pmin) - 1


@pytest.mark.parametrize("q", range(3, 16))
def test_minpoly_roots_and_degree(q):
    ctx = make_context(q)
    lam = 2 * math.cos(math.pi / q)
    assert abs(sum(c * lam**i for i, c in enumerate(ctx.pmin))) < 1e-9
    # degree is φ(2q)/2
    phi = sum(1 for k in range(1, 2 * q) if math.gcd(k, 2 * q) == 1)
    assert ctx.d == phi // 2
    lo, hi = ctx.lambda_enclosure(80)
    assert lo <= Fraction(lam) + Fraction(1, 10**12) and Fraction(lam) - Fraction(1, 10**12) <= hi


def test_cyclotomic_divides():
    # t^n − 1 = ∏_{d | n} Φ_d, checked through the degree count
    assert sum(len(cyclotomic(d)) - 1 for d in (1, 2, 3, 4, 6, 12)) == 12


def test_reject_small_q():
    with pytest.raises(ValueError):
        make_context(2)


def test_ring_examples():
    c5, c4 = make_context(5), make_context(4)
    assert zl_mul(c5.lam, c5.lam) == c5.lam + 1
    assert c4.lam * c4.lam == 2
    x = ZLambda(c5, [3, -7])
    assert x * 1 == x


@pytest.mark.parametrize("q", range(3, 13))
def test_sign_of_lambda_bounds(q):
    ctx = make_context(q)
    assert zl_sign(ctx.zero) == 0
    assert zl_sign(ctx.lam - 1) == (1 if q > 3 else 0)
    assert zl_sign(ctx.lam - 2) == -1


def test_norms():
    assert norm_lambda(make_context(5).lam) == -1
    assert norm_lambda(make_context(6).lam) == -3
    assert norm_lambda(make_context(7).one) == 1
    assert is_unit_zl(make_context(5).lam)
    assert is_unit_zl(make_context(4).lam + 1)
    assert not is_unit_zl(make_context(6).lam)


def test_norm_oracle_resultant_vs_float():
    ctx = make_context(7)
    x = ZLambda(ctx, [2, -1, 3])
    roots = [2 * math.cos(k * math.pi / 7) for k in (1, 3, 5)]
    prod = math.prod(sum(c * r**i for i, c in enumerate(x.c)) for r in roots)
    assert norm_lambda(x) == round(prod)
    assert resultant(ctx.pmin, x.c) == norm_lambda(x)


def test_cycint_examples(ctx):
    eta = CycInt.eta(ctx)
    assert eta * eta == CycInt(-ctx.one, -ctx.lam)
    lam_plus_eta = CycInt(ctx.lam, ctx.one)
    assert lam_plus_eta * eta == CycInt.from_int(ctx, -1)
    assert cyc_norm_to_lambda(CycInt(ctx.lam * 2, ctx.one)) == ctx.lam * ctx.lam * 2 + 1
    assert cyc_norm_to_lambda(CycInt.zeta(ctx)) == 1
    assert is_unit_root(CycInt.from_int(ctx, 1)) == (True, 0)
    assert is_unit_root(lam_plus_eta) == (True, 1)
    assert is_unit_root(CycInt.from_int(ctx, 2)) == (False, None)
    assert to_zeta_basis(CycInt.from_int(ctx, 1)) == (ctx.one, ctx.zero)
    assert to_zeta_basis(CycInt.zeta(ctx)) == (ctx.zero, ctx.one)
    assert to_zeta_basis(CycInt(ctx.lam * 2, ctx.one)) == (ctx.lam, ctx.one)


def test_eta_squared_numerically():
    for q in (5, 7):
        ctx = make_context(q)
        eta = CycInt.eta(ctx)
        z = complex(eta)
        assert abs(complex(eta * eta) - z * z) < 1e-12


def test_norm_to_q():
    ctx = make_context(5)
    assert cyc_norm_to_q(CycInt.from_int(ctx, 1)) == 1
    assert cyc_norm_to_q(CycInt.from_int(ctx, 2)) == 16
    assert cyc_norm_to_q(CycInt.zeta(ctx)) == 1


def near(box, z, tol=1e-14):
    return (
        box.re_lo - tol <= z.real <= box.re_hi + tol
        and box.im_lo - tol <= z.imag <= box.im_hi + tol
    )


def test_embed_examples():
    z5 = embed(CycInt.zeta(make_context(5)), 40)
    assert near(z5, complex(math.cos(math.pi / 5), math.sin(math.pi / 5)))
    e3 = embed(CycInt.eta(make_context(3)), 40)
    assert near(e3, complex(-0.5, math.sqrt(3) / 2))
    one = embed(CycInt.from_int(make_context(7), 1), 20)
    assert one.contains(1 + 0j)
    assert one.width <= Fraction(1, 2**20)
    with pytest.raises(ValueError):
        embed(CycInt.from_int(make_context(7), 1), 8)


def test_embed_deterministic():
    x = CycInt.from_coeffs(make_context(7), [1, 2, 3], [-4, 0, 5])
    assert embed(x, 64) == embed(x, 64)


def test_qlambda_reduced_and_inverse():
    ctx = make_context(5)
    x = QLambda(ZLambda(ctx, [4, 6]), 8)
    assert x.den == 4 and x.num == ZLambda(ctx, [2, 3])
    assert x * x.inverse() == QLambda(ctx.one)


def test_sign_sqrt_gap_equality_case():
    ctx = make_context(5)
    step = ctx.lam * ctx.lam * 2 + 1
    # √step + 1 − √1 − √step = 0
    assert sign_sqrt_gap(step, ctx.one, step) == 0


# --- properties -------------------------------------------------------------

Q_VALUES = st.sampled_from([3, 4, 5, 7, 9, 12])
coef = st.integers(-100, 100)


@st.composite
def cyc_triples(draw):
    q = draw(Q_VALUES)
    ctx = make_context(q)

    def one():
        a = draw(st.lists(coef, min_size=ctx.d, max_size=ctx.d))
        c = draw(st.lists(coef, min_size=ctx.d, max_size=ctx.d))
        return CycInt.from_coeffs(ctx, a, c)

    return one(), one(), one()


@settings(max_examples=300, deadline=None)
@given(cyc_triples())
def test_ring_axioms(t):
    x, y, z = t
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x.a * (y.a + z.a) == x.a * y.a + x.a * z.a


@settings(max_examples=300, deadline=None)
@given(cyc_triples())
def test_norms_multiplicative(t):
    x, y, _ = t
    assert (x * y).norm_lambda() == x.norm_lambda() * y.norm_lambda()
    assert (x * y).norm_q() == x.norm_q() * y.norm_q()
    assert norm_lambda(x.a * y.a) == norm_lambda(x.a) * norm_lambda(y.a)


@settings(max_examples=300, deadline=None)
@given(cyc_triples())
def test_conjugation(t):
    x, y, _ = t
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    ctx = x.ctx
    assert x * x.conj() == CycInt(x.norm_lambda(), ctx.zero)
    n = x.norm_lambda().sign()
    assert n >= 0 and (n == 0) == (not x)


@settings(max_examples=1000, deadline=None)
@given(cyc_triples())
def test_sign_matches_embedding(t):
    x, _, _ = t
    v = x.a
    if not v:
        return
    lam = x.ctx.lam_float
    f = sum(c * lam**i for i, c in enumerate(v.c))
    if abs(f) > 1e-6:
        assert v.sign() == (1 if f > 0 else -1)
    box = x.embed(53)
    re = float(v) - lam * float(x.c) / 2
    assert abs(box.re - re) < 1e-6
