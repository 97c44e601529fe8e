"""The even and odd bilinear forms on Z[ζ] = Z[λ]·1 ⊕ Z[λ]·η, their
reflections and transvections, the monodromy, and the dihedral group
generated by the even reflections."""

from __future__ import annotations

from typing import Callable

from ..field import Context, CycInt, ZLambda
from ..group import Mat2, act


def form_I0(x: CycInt, y: CycInt) -> ZLambda:
    """Symmetric form with Gram matrix (2 −λ; −λ 2); equals 2·Re(x·ȳ)."""
    cross = (x.a * y.c + x.c * y.a).times_lambda()
    return (x.a * y.a + x.c * y.c) * 2 - cross


def form_I1(x: CycInt, y: CycInt) -> ZLambda:
    """Skew form with Gram matrix (0 −λ; λ 0)."""
    return (x.c * y.a - x.a * y.c).times_lambda()


def s0_reflect(a: CycInt, b: CycInt) -> CycInt:
    if form_I0(a, a) != 2:
        raise ValueError("reflection vector must satisfy I0(a, a) = 2")
    k = form_I0(a, b)
    return CycInt(b.a - k * a.a, b.c - k * a.c)


def s1_transvect(a: CycInt, b: CycInt) -> CycInt:
    k = form_I1(a, b)
    return CycInt(b.a - k * a.a, b.c - k * a.c)


def s1_inverse(a: CycInt, b: CycInt) -> CycInt:
    k = form_I1(a, b)
    return CycInt(b.a + k * a.a, b.c + k * a.c)


def operator_matrix(ctx: Context, f: Callable[[CycInt], CycInt]) -> Mat2:
    """Matrix of a Z[λ]-linear map in the basis (1, η)."""
    u = f(CycInt.from_int(ctx, 1))
    v = f(CycInt.eta(ctx))
    return Mat2(u.a, v.a, u.c, v.c)


def _basis_vector(ctx: Context, j: int) -> CycInt:
    return CycInt.from_int(ctx, 1) if j == 0 else CycInt.eta(ctx)


def form_matrix_s0(ctx: Context, j: int) -> Mat2:
    e = _basis_vector(ctx, j)
    return operator_matrix(ctx, lambda b: s0_reflect(e, b))


def form_matrix_s1(ctx: Context, j: int) -> Mat2:
    e = _basis_vector(ctx, j)
    return operator_matrix(ctx, lambda b: s1_transvect(e, b))


def monodromy(ctx: Context) -> Mat2:
    """S⁻¹·Sᵗ with S = (1 −λ; 0 1)."""
    one, zero, lam = ctx.one, ctx.zero, ctx.lam
    s_inv = Mat2(one, lam, zero, one)
    s_t = Mat2(one, zero, -lam, one)
    return s_inv * s_t


def conjugation_matrix(ctx: Context) -> Mat2:
    # conj(a + cη) = (a − λc) − cη
    return Mat2(ctx.one, -ctx.lam, ctx.zero, -ctx.one)


def rotation(ctx: Context, k: int) -> Mat2:
    """Multiplication by ζ^k."""
    from ..group import generators

    Q = generators(ctx)[3]
    return Q ** (k % (2 * ctx.q))


def reflection(ctx: Context, k: int) -> Mat2:
    """σ_c(z) = −c²·z̄ for c = ζ^k: the reflection fixing the line ⟂ c."""
    return -(rotation(ctx, 2 * k) * conjugation_matrix(ctx))


def even_group(ctx: Context) -> list[tuple[str, Mat2]]:
    """The dihedral group of order 2q: μ_{ζ^{2k}} and σ_{ζ^k}."""
    out = [(f"mu(zeta^{2 * k})", rotation(ctx, 2 * k)) for k in range(ctx.q)]
    out += [(f"sigma(zeta^{k})", reflection(ctx, k)) for k in range(ctx.q)]
    return out


def even_cycles(ctx: Context) -> set[CycInt]:
    """Closure of {±1, ±η} under the even group."""
    group = [m for _, m in even_group(ctx)]
    one, eta = CycInt.from_int(ctx, 1), CycInt.eta(ctx)
    seen = {one, -one, eta, -eta}
    todo = list(seen)
    while todo:
        x = todo.pop()
        for m in group:
            y = act(m, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen
