"""Exact arithmetic in Z[λ], Q(λ) and Z[ζ] for ζ = exp(iπ/q), λ = ζ + 1/ζ.

Elements of Z[ζ] are stored as pairs (a, c) of Z[λ] coordinates meaning
a + c·η with η = ζ^(q-1).  Real signs are decided exactly: zero by the
coefficients, anything else by interval evaluation on a rational
enclosure of λ that is refined on demand.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Poly = tuple  # ascending integer (or Fraction) coefficients

_MAX_SIGN_BITS = 1 << 20


# ---------------------------------------------------------------------------
# polynomials over Z and Q (ascending coefficient tuples)


def poly_trim(p: Sequence) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(p: Sequence, r: Sequence) -> tuple:
    if not p or not r:
        return ()
    out = [0] * (len(p) + len(r) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(r):
                out[i + j] += x * y
    return poly_trim(out)


def poly_add(p: Sequence, r: Sequence) -> tuple:
    n = max(len(p), len(r))
    return poly_trim(
        (p[i] if i < len(p) else 0) + (r[i] if i < len(r) else 0) for i in range(n)
    )


def poly_scale(p: Sequence, k) -> tuple:
    return poly_trim(k * x for x in p)


def poly_divmod(p: Sequence, r: Sequence) -> tuple[tuple, tuple]:
    """Division with remainder.  Exact over Z when r is monic, else over Q."""
    r = poly_trim(r)
    if not r:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(poly_trim(p))
    lead = r[-1]
    exact = lead in (1, -1)
    quot = [0] * max(len(rem) - len(r) + 1, 1)
    while len(rem) >= len(r):
        top = rem[-1]
        k = top * lead if exact else Fraction(top) / lead
        shift = len(rem) - len(r)
        quot[shift] = k
        for i, y in enumerate(r):
            rem[shift + i] -= k * y
        rem = list(poly_trim(rem))
    return poly_trim(quot), tuple(rem)


def poly_eval(p: Sequence, x):
    acc = 0
    for coef in reversed(p):
        acc = acc * x + coef
    return acc


def poly_derivative(p: Sequence) -> tuple:
    return poly_trim(i * p[i] for i in range(1, len(p)))


def poly_str(p: Sequence, var: str = "t") -> str:
    """Render as e.g. ``t^4-t^3+t^2-t+1``: highest power first, unit
    coefficients suppressed."""
    p = poly_trim(p)
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def resultant(f: Sequence, g: Sequence) -> Fraction:
    """Resultant of two polynomials by the Euclidean recursion."""
    f, g = poly_trim(f), poly_trim(g)
    if not f or not g:
        return Fraction(0)
    m, n = len(f) - 1, len(g) - 1
    if n == 0:
        return Fraction(g[0]) ** m
    if m == 0:
        return Fraction(f[0]) ** n
    if m < n:
        return (-1) ** (m * n) * resultant(g, f)
    _, r = poly_divmod(f, g)
    if not r:
        return Fraction(0)
    k = len(r) - 1
    return (-1) ** (m * n) * Fraction(g[-1]) ** (m - k) * resultant(g, r)


def _sturm_chain(p: Sequence) -> list[tuple]:
    chain = [tuple(Fraction(x) for x in p), tuple(Fraction(x) for x in poly_derivative(p))]
    while len(chain[-1]) > 1:
        _, r = poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append(poly_scale(r, -1))
    return chain


def _sign_changes(chain: list[tuple], x: Fraction) -> int:
    signs = [v for v in (poly_eval(p, x) for p in chain) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u < 0) != (v < 0))


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """Φ_n via Φ_n = (t^n - 1) / ∏_{d | n, d < n} Φ_d."""
    if n < 1:
        raise ValueError("n must be positive")
    num: tuple = (-1,) + (0,) * (n - 1) + (1,)
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, cyclotomic(d))
            assert not rem
    return tuple(int(c) for c in num)


def _dickson(j: int) -> tuple:
    """T_j with t^j + t^-j = T_j(t + 1/t)."""
    prev, cur = (2,), (0, 1)
    if j == 0:
        return prev
    for _ in range(j - 1):
        prev, cur = cur, poly_add(poly_mul((0, 1), cur), poly_scale(prev, -1))
    return cur


@lru_cache(maxsize=None)
def lambda_minpoly(q: int) -> Poly:
    """Minimal polynomial of 2cos(π/q) from the palindromic cyclotomic Φ_2q."""
    phi = cyclotomic(2 * q)
    d = (len(phi) - 1) // 2
    if any(phi[d + j] != phi[d - j] for j in range(d + 1)):
        raise ArithmeticError("cyclotomic polynomial is not palindromic")
    # peel off leading terms: c·(t^j + t^-j) = c·T_j(t + 1/t)
    laurent = {j: phi[d + j] for j in range(-d, d + 1)}
    out: tuple = ()
    for j in range(d, 0, -1):
        c = laurent[j]
        if c:
            out = poly_add(out, poly_scale(_dickson(j), c))
            laurent[j] -= c
            laurent[-j] -= c
    out = poly_add(out, (laurent[0],))
    return tuple(int(c) for c in out)


# ---------------------------------------------------------------------------
# context


class Context:
    """All precomputed data for one q.  Safe to share between threads: the
    only mutable state is a cache of ever-finer λ enclosures."""

    def __init__(self, q: int) -> None:
        if not isinstance(q, int) or q < 3:
            raise ValueError(f"q must be an integer >= 3, got {q!r}")
        self.q = q
        self.phi2q: Poly = cyclotomic(2 * q)
        self.pmin: Poly = lambda_minpoly(q)
        self.d = len(self.pmin) - 1
        d = self.d
        # λ^k in the basis 1, λ, …, λ^(d-1) for k < 2d
        powers = [tuple(1 if i == k else 0 for i in range(d)) for k in range(d)]
        for _ in range(d, 2 * d):
            powers.append(self._times_lambda(powers[-1]))
        self._powers_basis = tuple(powers)
        self._lock = threading.Lock()
        self._interval = self._isolate()
        self._enclosures: dict[int, tuple[list[int], list[int]]] = {}
        self.zero = ZLambda(self, (0,) * d)
        self.one = ZLambda(self, (1,) + (0,) * (d - 1))
        self.lam = ZLambda.from_poly(self, (0, 1))
        roots = [CycInt(self.one, self.zero)]
        for _ in range(2 * q - 1):
            z = roots[-1]
            roots.append(CycInt(self.lam * z.a - z.c, z.a))
        self.unit_roots: tuple[CycInt, ...] = tuple(roots)
        self._unit_index = {z: k for k, z in enumerate(roots)}

    def __repr__(self) -> str:
        return f"Context(q={self.q})"

    def __reduce__(self):
        return (make_context, (self.q,))

    def _times_lambda(self, v: Sequence[int]) -> tuple:
        d = self.d
        top = v[d - 1]
        out = [0] + list(v[: d - 1])
        if top:
            for i in range(d):
                out[i] -= top * self.pmin[i]
        return tuple(out)

    # -- λ enclosure ------------------------------------------------------

    def _isolate(self) -> list[Fraction]:
        """Rational interval (lo, hi] holding λ and no other root of pmin."""
        chain = _sturm_chain(self.pmin)
        lo, hi = Fraction(0), Fraction(2)

        def count(a, b):
            return _sign_changes(chain, a) - _sign_changes(chain, b)

        while count(lo, hi) > 1:
            mid = (lo + hi) / 2
            if count(mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
        if poly_eval(self.pmin, hi) == 0:
            lo = hi
        return [lo, hi]

    def lambda_enclosure(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """A rational interval of width at most 2^-bits containing λ."""
        width = Fraction(1, 1 << bits)
        with self._lock:
            lo, hi = self._interval
            while hi - lo > width:
                mid = (lo + hi) / 2
                v = poly_eval(self.pmin, mid)
                if v == 0:
                    lo = hi = mid
                elif v > 0:
                    hi = mid
                else:
                    lo = mid
            self._interval = [lo, hi]
        return lo, hi

    def _power_bounds(self, bits: int) -> tuple[list[int], list[int]]:
        cached = self._enclosures.get(bits)
        if cached is not None:
            return cached
        lo, hi = self.lambda_enclosure(bits)
        scale = 1 << bits
        L = math.floor(lo * scale)
        H = -math.floor(-hi * scale)
        plo, phi = [scale], [scale]
        for i in range(1, self.d):
            den = 1 << (bits * (i - 1))
            plo.append(L**i // den)
            phi.append(-((-(H**i)) // den))
        with self._lock:
            self._enclosures[bits] = (plo, phi)
        return plo, phi

    def bounds(self, coeffs: Sequence[int], bits: int = 64) -> tuple[int, int]:
        """Integers lo, hi with lo ≤ 2^bits·Σ c_i λ^i ≤ hi."""
        plo, phi = self._power_bounds(bits)
        lo = hi = 0
        for c, a, b in zip(coeffs, plo, phi):
            if c > 0:
                lo += c * a
                hi += c * b
            elif c < 0:
                lo += c * b
                hi += c * a
        return lo, hi

    def sign_of(self, coeffs: Sequence[int]) -> int:
        if not any(coeffs):
            return 0
        bits = 64
        while bits <= _MAX_SIGN_BITS:
            lo, hi = self.bounds(coeffs, bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise ArithmeticError("sign refinement did not terminate")

    def approx(self, coeffs: Sequence[int]) -> float:
        lo, hi = self.bounds(coeffs, 64)
        return (lo + hi) / 2 / 2.0**64

    @property
    def lam_float(self) -> float:
        return 2.0 * math.cos(math.pi / self.q)

    def unit_root(self, k: int) -> CycInt:
        return self.unit_roots[k % (2 * self.q)]

    def unit_root_index(self, x: CycInt) -> int | None:
        return self._unit_index.get(x)


@lru_cache(maxsize=None)
def make_context(q: int) -> Context:
    return Context(q)


# ---------------------------------------------------------------------------
# Z[λ]

IntLike = Union[int, "ZLambda"]


class ZLambda:
    """Σ c_i λ^i with integer coefficients, i < d."""

    __slots__ = ("ctx", "c")

    def __init__(self, ctx: Context, coeffs: Sequence[int]) -> None:
        if len(coeffs) != ctx.d:
            raise ValueError(f"expected {ctx.d} coefficients, got {len(coeffs)}")
        self.ctx = ctx
        self.c = tuple(int(x) for x in coeffs)

    @classmethod
    def from_int(cls, ctx: Context, n: int) -> ZLambda:
        return cls(ctx, (n,) + (0,) * (ctx.d - 1))

    @classmethod
    def from_poly(cls, ctx: Context, p: Sequence[int]) -> ZLambda:
        """Reduce an arbitrary integer polynomial in λ."""
        out = [0] * ctx.d
        basis = ctx._powers_basis
        for k, coef in enumerate(p):
            if not coef:
                continue
            while k >= len(basis):
                basis = basis + (ctx._times_lambda(basis[-1]),)
            for i, b in enumerate(basis[k]):
                out[i] += coef * b
        return cls(ctx, out)

    def _coerce(self, other) -> ZLambda | None:
        if isinstance(other, ZLambda):
            if other.ctx.q != self.ctx.q:
                raise ValueError("elements from different contexts")
            return other
        if isinstance(other, int):
            return ZLambda.from_int(self.ctx, other)
        return None

    def __repr__(self) -> str:
        return f"ZLambda(q={self.ctx.q}, {list(self.c)})"

    def __str__(self) -> str:
        return poly_str(self.c, "λ")

    def __eq__(self, other) -> bool:
        o = self._coerce(other) if isinstance(other, (int, ZLambda)) else None
        return o is not None and o.c == self.c

    def __hash__(self) -> int:
        return hash((self.ctx.q, self.c))

    def __bool__(self) -> bool:
        return any(self.c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ZLambda(self.ctx, [x + y for x, y in zip(self.c, o.c)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ZLambda(self.ctx, [x - y for x, y in zip(self.c, o.c)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> ZLambda:
        return ZLambda(self.ctx, [-x for x in self.c])

    def __mul__(self, other):
        if isinstance(other, int):
            return ZLambda(self.ctx, [other * x for x in self.c])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.ctx.d
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(o.c):
                    conv[i + j] += x * y
        out = list(conv[:d])
        basis = self.ctx._powers_basis
        for k in range(d, 2 * d - 1):
            v = conv[k]
            if v:
                for i, b in enumerate(basis[k]):
                    out[i] += v * b
        return ZLambda(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ZLambda:
        if n < 0:
            raise ValueError("negative powers leave Z[λ]")
        out, base = self.ctx.one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def times_lambda(self) -> ZLambda:
        return ZLambda(self.ctx, self.ctx._times_lambda(self.c))

    def sign(self) -> int:
        return self.ctx.sign_of(self.c)

    def __abs__(self) -> ZLambda:
        return -self if self.sign() < 0 else self

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare ZLambda with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __float__(self) -> float:
        return self.ctx.approx(self.c)

    def is_integer(self) -> bool:
        return not any(self.c[1:])

    def content(self) -> int:
        return math.gcd(*self.c) if self.c else 0

    def mul_matrix(self) -> list[list[int]]:
        """Matrix of y ↦ self·y in the power basis (columns are self·λ^j)."""
        cols = []
        col = self
        for _ in range(self.ctx.d):
            cols.append(col.c)
            col = col.times_lambda()
        return [[cols[j][i] for j in range(self.ctx.d)] for i in range(self.ctx.d)]

    def norm(self) -> int:
        return norm_lambda(self)


def floor_ratio(num: ZLambda, den: ZLambda) -> int:
    """⌊num/den⌋ as an integer, decided exactly."""
    if not den:
        raise ZeroDivisionError("floor_ratio by zero")
    ctx = num.ctx
    bits = 64 + max(1, max(abs(x) for x in num.c + den.c).bit_length())
    nlo, nhi = ctx.bounds(num.c, bits)
    dlo, dhi = ctx.bounds(den.c, bits)
    if dlo > 0 or dhi < 0:
        k = (nlo + nhi) // (dlo + dhi) if (dlo + dhi) else 0
    else:
        k = 0
    s = den.sign()
    # k ≤ num/den < k+1  ⇔  s·(num − k·den) ≥ 0  and  s·((k+1)·den − num) > 0
    for _ in range(1 << 16):
        if s * (num - den * k).sign() < 0:
            k -= 1
        elif s * (den * (k + 1) - num).sign() <= 0:
            k += 1
        else:
            return k
    raise ArithmeticError("floor_ratio failed to converge")


def norm_lambda(x: ZLambda) -> int:
    """Field norm to Q: resultant of pmin with the coefficient polynomial."""
    f = poly_trim(x.c)
    if not f:
        return 0
    res = resultant(x.ctx.pmin, f)
    assert res.denominator == 1
    return int(res)


def is_unit_zl(x: ZLambda) -> bool:
    return abs(norm_lambda(x)) == 1


def zl_add(x: ZLambda, y: ZLambda) -> ZLambda:
    return x + y


def zl_sub(x: ZLambda, y: ZLambda) -> ZLambda:
    return x - y


def zl_mul(x: ZLambda, y: ZLambda) -> ZLambda:
    return x * y


def zl_neg(x: ZLambda) -> ZLambda:
    return -x


def zl_sign(x: ZLambda) -> int:
    return x.sign()


# ---------------------------------------------------------------------------
# Q(λ)


def _solve_rational(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    n = len(matrix)
    m = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [v / p for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


class QLambda:
    """num/den with num in Z[λ] and den a positive integer, fully reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: ZLambda | int, den: int = 1, *, ctx: Context | None = None) -> None:
        if isinstance(num, int):
            if ctx is None:
                raise ValueError("integer numerator needs a context")
            num = ZLambda.from_int(ctx, num)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num.content(), den)
        if g > 1:
            num = ZLambda(num.ctx, [x // g for x in num.c])
            den //= g
        if not num:
            den = 1
        self.num = num
        self.den = den

    @property
    def ctx(self) -> Context:
        return self.num.ctx

    @classmethod
    def from_fractions(cls, ctx: Context, coeffs: Sequence[Fraction]) -> QLambda:
        den = 1
        for f in coeffs:
            den = den * Fraction(f).denominator // math.gcd(den, Fraction(f).denominator)
        return cls(ZLambda(ctx, [int(Fraction(f) * den) for f in coeffs]), den)

    def _coerce(self, other) -> QLambda | None:
        if isinstance(other, QLambda):
            return other
        if isinstance(other, ZLambda):
            return QLambda(other)
        if isinstance(other, int):
            return QLambda(other, ctx=self.ctx)
        return None

    def __repr__(self) -> str:
        return f"QLambda({self.num!s}, {self.den})"

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"({self.num})/{self.den}"

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        return o is not None and o.num == self.num and o.den == self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QLambda(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> QLambda:
        return QLambda(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QLambda(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> QLambda:
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        ctx = self.ctx
        rhs = [1] + [0] * (ctx.d - 1)
        sol = _solve_rational(self.num.mul_matrix(), rhs)
        return QLambda.from_fractions(ctx, sol) * self.den

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def sign(self) -> int:
        return self.num.sign()


# ---------------------------------------------------------------------------
# Z[ζ]


@dataclass(frozen=True)
class ComplexInterval:
    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction

    @property
    def re(self) -> float:
        return float((self.re_lo + self.re_hi) / 2)

    @property
    def im(self) -> float:
        return float((self.im_lo + self.im_hi) / 2)

    def mid(self) -> complex:
        return complex(self.re, self.im)

    def contains(self, z: complex) -> bool:
        return self.re_lo <= z.real <= self.re_hi and self.im_lo <= z.imag <= self.im_hi

    @property
    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)


def _eval_interval(p: Sequence[Fraction], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Range of Σ p_i t^i for t in [lo, hi] with lo > 0 (bounds, not tight)."""
    vlo = vhi = Fraction(0)
    for i, c in enumerate(p):
        a, b = lo**i, hi**i
        if c >= 0:
            vlo += c * a
            vhi += c * b
        else:
            vlo += c * b
            vhi += c * a
    return vlo, vhi


def _sqrt_bounds(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    if x <= 0:
        return Fraction(0), Fraction(0)
    scale = 1 << (2 * bits)
    r_lo = math.isqrt(x.numerator * scale // x.denominator)
    r_hi = r_lo + 1
    return Fraction(r_lo, 1 << bits), Fraction(r_hi, 1 << bits)


def _mul_interval(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]):
    prods = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
    return min(prods), max(prods)


class CycInt:
    """a + c·η in Z[ζ], η = ζ^(q-1)."""

    __slots__ = ("a", "c")

    def __init__(self, a: ZLambda, c: ZLambda) -> None:
        self.a = a
        self.c = c

    @property
    def ctx(self) -> Context:
        return self.a.ctx

    @classmethod
    def from_coeffs(cls, ctx: Context, a: Sequence[int], c: Sequence[int]) -> CycInt:
        a = list(a) + [0] * (ctx.d - len(a))
        c = list(c) + [0] * (ctx.d - len(c))
        return cls(ZLambda(ctx, a), ZLambda(ctx, c))

    @classmethod
    def from_int(cls, ctx: Context, n: int) -> CycInt:
        return cls(ZLambda.from_int(ctx, n), ctx.zero)

    @classmethod
    def eta(cls, ctx: Context) -> CycInt:
        return cls(ctx.zero, ctx.one)

    @classmethod
    def zeta(cls, ctx: Context) -> CycInt:
        return cls(ctx.lam, ctx.one)

    def key(self) -> tuple:
        return self.a.c + self.c.c

    def __repr__(self) -> str:
        return f"CycInt(q={self.ctx.q}, a={list(self.a.c)}, c={list(self.c.c)})"

    def __str__(self) -> str:
        return f"({self.a}) + ({self.c})·η"

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.ctx, other)
        return isinstance(other, CycInt) and self.a == other.a and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.ctx.q, self.a.c, self.c.c))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.c)

    def _coerce(self, other) -> CycInt | None:
        if isinstance(other, CycInt):
            return other
        if isinstance(other, ZLambda):
            return CycInt(other, self.ctx.zero)
        if isinstance(other, int):
            return CycInt.from_int(self.ctx, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.a + o.a, self.c + o.c)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.a - o.a, self.c - o.c)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> CycInt:
        return CycInt(-self.a, -self.c)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + bη)(c + dη) = (ac − bd) + (ad + bc − λbd)η  using η² = −1 − λη
        a, b, c, d = self.a, self.c, o.a, o.c
        bd = b * d
        return CycInt(a * c - bd, a * d + b * c - bd.times_lambda())

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CycInt:
        if n < 0:
            raise ValueError("negative power")
        out, base = CycInt.from_int(self.ctx, 1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> CycInt:
        # conj(η) = −λ − η
        return CycInt(self.a - self.c.times_lambda(), -self.c)

    def norm_lambda(self) -> ZLambda:
        """|x|² = a² − λac + c² as an element of Z[λ]."""
        a, c = self.a, self.c
        return a * a - (a * c).times_lambda() + c * c

    def norm_q(self) -> int:
        return norm_lambda(self.norm_lambda())

    def to_zeta_basis(self) -> tuple[ZLambda, ZLambda]:
        return self.a - self.c.times_lambda(), self.c

    def unit_root_index(self) -> int | None:
        return self.ctx.unit_root_index(self)

    def embed(self, precision: int = 53) -> ComplexInterval:
        return embed(self, precision)

    def __complex__(self) -> complex:
        return self.embed(53).mid()


def cyc_add(x: CycInt, y: CycInt) -> CycInt:
    return x + y


def cyc_mul(x: CycInt, y: CycInt) -> CycInt:
    return x * y


def cyc_neg(x: CycInt) -> CycInt:
    return -x


def cyc_conj(x: CycInt) -> CycInt:
    return x.conj()


def cyc_norm_to_lambda(x: CycInt) -> ZLambda:
    return x.norm_lambda()


def cyc_norm_to_q(x: CycInt) -> int:
    return x.norm_q()


def is_unit_root(x: CycInt) -> tuple[bool, int | None]:
    if x.norm_lambda() != 1:
        return False, None
    k = x.unit_root_index()
    if k is None:
        raise ArithmeticError(f"{x!r} has modulus one but is not a listed root of unity")
    return True, k


def to_zeta_basis(x: CycInt) -> tuple[ZLambda, ZLambda]:
    return x.to_zeta_basis()


def embed(x: CycInt, precision: int = 53) -> ComplexInterval:
    """Interval enclosure of a + c·exp(iπ(q−1)/q), width at most
    2^-precision times max(1, |x|)."""
    if precision < 16:
        raise ValueError("precision must be at least 16 bits")
    ctx = x.ctx
    size = max([1] + [abs(v) for v in x.a.c + x.c.c]).bit_length()
    # Re = a(λ) − λ·c(λ)/2 ;  Im = c(λ)·sqrt(1 − λ²/4)
    re_poly = [Fraction(v) for v in x.a.c] + [Fraction(0)]
    for i, v in enumerate(x.c.c):
        re_poly[i + 1] -= Fraction(v, 2)
    c_poly = [Fraction(v) for v in x.c.c]
    bits = precision + 2 * size + 8
    target = Fraction(1, 1 << precision) * max(1, 1 << size)
    while True:
        lo, hi = ctx.lambda_enclosure(bits)
        re = _eval_interval(re_poly, lo, hi)
        cv = _eval_interval(c_poly, lo, hi)
        s_lo, _ = _sqrt_bounds(1 - hi * hi / 4, bits)
        _, s_hi = _sqrt_bounds(1 - lo * lo / 4, bits)
        im = _mul_interval(cv, (s_lo, s_hi))
        box = ComplexInterval(re[0], re[1], im[0], im[1])
        if box.width <= target or bits > _MAX_SIGN_BITS:
            return box
        bits *= 2


def coeffs_of(values: Iterable[int], ctx: Context) -> ZLambda:
    values = list(values)
    if len(values) > ctx.d:
        raise ValueError(f"at most {ctx.d} coefficients for q={ctx.q}")
    return ZLambda(ctx, values + [0] * (ctx.d - len(values)))


def sign_r_plus_c_sqrt(r: ZLambda, c: ZLambda, A: ZLambda) -> int:
    """Exact sign of r + c·√A for A ≥ 0."""
    sr = r.sign()
    sc = c.sign() if A else 0
    if sc == 0:
        return sr
    if sr == 0 or sr == sc:
        return sc
    return sr * (r * r - c * c * A).sign()


def sign_sqrt_gap(A: ZLambda, B: ZLambda, C: ZLambda) -> int:
    """Exact sign of √A + 1 − √B − √C for A, B, C ≥ 0."""
    # both sides are nonnegative, so compare squares:
    # sign(p + 2√A − 2√(BC)) with p = A + 1 − B − C
    p = A + 1 - B - C
    M = B * C
    s_u = sign_r_plus_c_sqrt(p, p.ctx.one * 2, A)
    if s_u <= 0:
        return 0 if (s_u == 0 and not M) else -1
    return sign_r_plus_c_sqrt(p * p + A * 4 - M * 4, p * 4, A)
