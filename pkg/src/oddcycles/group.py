"""The matrix Hecke group generated by V and A1 over Z[λ].

Besides matrix arithmetic this module holds the normal form of group
elements as tuples (r, ε, l1..l2r), the nearest-integer λ-continued
fraction, and the decision procedure for the orbit of (1, 0)ᵗ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .field import Context, CycInt, QLambda, ZLambda, floor_ratio

GENERATORS = ("V", "A1", "A2", "Q", "NEG")


class Mat2:
    """2×2 matrix over Z[λ], row-major (a b; c d)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: ZLambda, b: ZLambda, c: ZLambda, d: ZLambda) -> None:
        self.a, self.b, self.c, self.d = a, b, c, d

    @property
    def ctx(self) -> Context:
        return self.a.ctx

    @classmethod
    def identity(cls, ctx: Context) -> Mat2:
        return cls(ctx.one, ctx.zero, ctx.zero, ctx.one)

    @classmethod
    def from_coeffs(cls, ctx: Context, rows: Sequence[Sequence[Sequence[int]]]) -> Mat2:
        (a, b), (c, d) = rows
        pad = lambda v: ZLambda(ctx, list(v) + [0] * (ctx.d - len(v)))  # noqa: E731
        return cls(pad(a), pad(b), pad(c), pad(d))

    def entries(self) -> tuple[ZLambda, ZLambda, ZLambda, ZLambda]:
        return self.a, self.b, self.c, self.d

    def __repr__(self) -> str:
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat2) and self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(tuple(x.c for x in self.entries()))

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        if isinstance(other, (int, ZLambda)):
            return Mat2(self.a * other, self.b * other, self.c * other, self.d * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, ZLambda)):
            return self * other
        return NotImplemented

    def __add__(self, other: Mat2) -> Mat2:
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> ZLambda:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> Mat2:
        """Inverse of a determinant ±1 matrix."""
        det = self.det()
        if det == 1:
            return Mat2(self.d, -self.b, -self.c, self.a)
        if det == -1:
            return Mat2(-self.d, self.b, self.c, -self.a)
        raise ValueError("matrix is not invertible over Z[λ]")

    def __pow__(self, n: int) -> Mat2:
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = Mat2.identity(self.ctx)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def column(self, j: int) -> CycInt:
        return CycInt(self.a, self.c) if j == 0 else CycInt(self.b, self.d)

    def to_lists(self) -> list[list[list[int]]]:
        return [[list(self.a.c), list(self.b.c)], [list(self.c.c), list(self.d.c)]]


def generators(ctx: Context) -> tuple[Mat2, Mat2, Mat2, Mat2]:
    """(V, A1, A2, Q) with Q = A1·V and A2 = V·A1·V⁻¹."""
    one, zero, lam = ctx.one, ctx.zero, ctx.lam
    V = Mat2(zero, -one, one, zero)
    A1 = Mat2(one, lam, zero, one)
    A2 = Mat2(one, zero, -lam, one)
    Q = Mat2(lam, -one, one, zero)
    return V, A1, A2, Q


def generator_matrix(ctx: Context, name: str) -> Mat2:
    V, A1, A2, Q = generators(ctx)
    table = {"V": V, "A1": A1, "A2": A2, "Q": Q, "NEG": -Mat2.identity(ctx)}
    try:
        return table[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}") from None


def act(m: Mat2, x: CycInt) -> CycInt:
    """Left multiplication of the column (a, c)ᵗ of x = a + cη."""
    return CycInt(m.a * x.a + m.b * x.c, m.c * x.a + m.d * x.c)


def mobius_fixes(m: Mat2, z: CycInt, w: CycInt) -> bool:
    """Whether the Möbius map of m sends z to w (both finite, in Z[ζ])."""
    a, b, c, d = (CycInt(e, m.ctx.zero) for e in m.entries())
    return a * z + b == w * (c * z + d)


# ---------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class Word:
    tokens: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        for gen, exp in self.tokens:
            if gen not in GENERATORS:
                raise ValueError(f"unknown generator {gen!r}")
            if exp == 0:
                raise ValueError("zero exponent in word")
            if gen == "NEG" and exp != 1:
                raise ValueError("NEG takes exponent 1")

    @classmethod
    def of(cls, *tokens: tuple[str, int] | str) -> Word:
        out = []
        for t in tokens:
            out.append((t, 1) if isinstance(t, str) else tuple(t))
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse e.g. ``"Q^3 A1^2 Q NEG"`` (spaces or '*' between tokens)."""
        out = []
        for part in text.replace("*", " ").replace("·", " ").split():
            gen, _, exp = part.partition("^")
            out.append((gen, int(exp) if exp else 1))
        return cls(tuple(out))

    def __str__(self) -> str:
        if not self.tokens:
            return "I"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[tuple[str, int]]:
        return iter(self.tokens)

    def __add__(self, other: Word) -> Word:
        return simplify_word(self.tokens + other.tokens)


def simplify_word(tokens: Iterable[tuple[str, int]]) -> Word:
    """Merge adjacent equal generators, drop zero exponents, pull NEG to the
    front (it is central)."""
    neg = 0
    out: list[list] = []
    for gen, exp in tokens:
        if gen == "NEG":
            neg ^= exp & 1
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        elif exp:
            out.append([gen, exp])
    toks = [("NEG", 1)] if neg else []
    return Word(tuple(toks + [(g, e) for g, e in out]))


def eval_word(ctx: Context, w: Word) -> Mat2:
    m = Mat2.identity(ctx)
    for gen, exp in w:
        m = m * generator_matrix(ctx, gen) ** exp
    return m


# ---------------------------------------------------------------------------
# normal form


@dataclass(frozen=True)
class CanonicalTuple:
    r: int
    eps: int
    l: tuple[int, ...]

    def validate(self, q: int) -> None:
        r, l = self.r, self.l
        if r < 1 or len(l) != 2 * r:
            raise ValueError(f"tuple needs 2r = {2 * r} entries, got {len(l)}")
        if self.eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")
        if not 0 <= l[-1] <= q - 1:
            raise ValueError(f"last entry must lie in 0..{q - 1}")
        if r >= 2:
            for i in range(1, 2 * r - 2, 2):  # l2, l4, ..., l_{2r-2}
                if not 1 <= l[i] <= q - 2:
                    raise ValueError(f"l{i + 1} must lie in 1..{q - 2}")
            for i in range(2, 2 * r - 1, 2):  # l3, l5, ..., l_{2r-1}
                if l[i] < 1:
                    raise ValueError(f"l{i + 1} must be positive")

    @property
    def age(self) -> int:
        return sum(self.l[2 : 2 * self.r - 1 : 2])

    @property
    def generation(self) -> int:
        return self.r

    def mu_exponent(self) -> int:
        """Total exponent of Q in the product (the even-indexed entries)."""
        return sum(self.l[1::2])

    def to_word(self) -> Word:
        toks: list[tuple[str, int]] = []
        if self.eps:
            toks.append(("NEG", 1))
        for i in range(2 * self.r - 1, -1, -1):
            e = self.l[i]
            if e:
                toks.append(("Q" if i % 2 else "A1", e))
        return Word(tuple(toks))

    def __str__(self) -> str:
        return f"(r={self.r}, eps={self.eps}, l={list(self.l)})"


def eval_tuple(ctx: Context, t: CanonicalTuple) -> Mat2:
    """(−I)^ε Q^{l2r} A1^{l2r−1} ··· Q^{l2} A1^{l1}."""
    t.validate(ctx.q)
    return eval_word(ctx, t.to_word())


_V = -1  # the letter v⁻¹ on the rewriting stack; positive entries are powers of μ


class _FreeProduct:
    """Reduced words in v⁻¹ (order 4, square −1) and μ (order 2q, μ^q = −1),
    with the central sign tracked apart."""

    def __init__(self, q: int) -> None:
        self.q = q
        self.stack: list[int] = []
        self.sign = 0

    def push_v(self) -> None:
        if self.stack and self.stack[-1] == _V:
            self.stack.pop()
            self.sign ^= 1
        else:
            self.stack.append(_V)

    def push_mu(self, k: int) -> None:
        q = self.q
        k %= 2 * q
        if k >= q:
            k -= q
            self.sign ^= 1
        if k == 0:
            return
        if self.stack and self.stack[-1] != _V:
            k += self.stack.pop()
            if k >= q:
                k -= q
                self.sign ^= 1
            if k:
                self.stack.append(k)
        else:
            self.stack.append(k)

    def push(self, gen: str, exp: int) -> None:
        q = self.q
        if gen == "NEG":
            self.sign ^= exp & 1
        elif gen == "Q":
            self.push_mu(exp)
        elif gen == "V":
            # v = (v⁻¹)³
            for _ in range((-exp) % 4):
                self.push_v()
        elif gen == "A1":
            # a1 = μ v⁻¹, a1⁻¹ = v⁻¹ μ^(q−1)
            for _ in range(abs(exp)):
                if exp > 0:
                    self.push_mu(1)
                    self.push_v()
                else:
                    self.push_v()
                    self.push_mu(q - 1)
        elif gen == "A2":
            # a2 = v⁻¹ μ, a2⁻¹ = μ^(q−1) v⁻¹
            for _ in range(abs(exp)):
                if exp > 0:
                    self.push_v()
                    self.push_mu(1)
                else:
                    self.push_mu(q - 1)
                    self.push_v()
        else:
            raise ValueError(f"unknown generator {gen!r}")


def canonical_tuple(ctx: Context, w: Word) -> CanonicalTuple:
    """The unique normal-form tuple of the element represented by w."""
    q = ctx.q
    fp = _FreeProduct(q)
    for gen, exp in w:
        fp.push(gen, exp)
    st, sign = fp.stack, fp.sign

    # split a1 = μ v⁻¹ and a1⁻¹ = v⁻¹ μ^(q−1) off the right end
    l1 = 0
    while len(st) >= 2:
        if st[-1] == _V and st[-2] != _V:
            st.pop()
            k = st.pop() - 1
            if k:
                st.append(k)
            l1 += 1
        elif st[-1] == q - 1 and st[-2] == _V:
            st.pop()
            st.pop()
            l1 -= 1
        else:
            break
    if st == [_V]:
        # v⁻¹ = −μ^(q−1) a1
        st = [q - 1]
        sign ^= 1
        l1 += 1

    if _V not in st:
        return CanonicalTuple(1, sign, (l1, st[0] if st else 0))

    # st = [μ^{m_t}] v⁻¹ μ^{m_{t−1}} … v⁻¹ μ^{m_1}; read m_t..m_1
    ms = [0] if st[0] == _V else []
    ms += [x for x in st if x != _V]
    ms.reverse()  # ms[0] = m_1, ms[-1] = m_t
    t = len(ms)
    l = [l1, ms[0]]
    run = 0
    for j in range(2, t + 1):
        run += 1
        m = ms[j - 1]
        if j < t:
            e = m - 1
            if e == 0:
                continue
            l += [run, e]
            run = 0
        else:
            if m == 0:
                # μ^0 v⁻¹ = −μ^(q−1) a1
                e = q - 1
                sign ^= 1
            else:
                e = m - 1
            l += [run, e]
    out = CanonicalTuple(len(l) // 2, sign, tuple(l))
    out.validate(q)
    return out


# ---------------------------------------------------------------------------
# λ-continued fractions


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    __str__ = __repr__


INFINITY = _Infinity()


@dataclass(frozen=True)
class CFExpansion:
    terms: tuple[int, ...]
    terminated: bool
    steps_used: int

    def __str__(self) -> str:
        return format_cf(self.terms)


def format_cf(terms: Sequence[int]) -> str:
    if not terms:
        return "[]"
    head = f"[{terms[0]}"
    if len(terms) == 1:
        return head + "]"
    return head + "; " + ", ".join(str(t) for t in terms[1:]) + "]"


def nearest_multiplier(r0: ZLambda, r1: ZLambda) -> int:
    """The integer m with −|r1|λ/2 ≤ mλr1 − r0 < |r1|λ/2."""
    lr1 = r1.times_lambda()
    s = r1.sign()
    if s > 0:
        # ceil(t − 1/2) with t = r0/(λ r1)
        m = -floor_ratio(lr1 - r0 * 2, lr1 * 2)
    elif s < 0:
        m = floor_ratio(r0 * 2 + lr1, lr1 * 2)
    else:
        raise ZeroDivisionError("nearest_multiplier with r1 = 0")
    r2 = lr1 * m - r0
    half = lr1 * s  # λ|r1|
    if (r2 * 2 + half).sign() < 0 or (half - r2 * 2).sign() <= 0:
        raise ArithmeticError("remainder outside the half-open window")
    return m


def _clear_denominators(r0: QLambda, r1: QLambda) -> tuple[ZLambda, ZLambda]:
    den = r0.den * r1.den // math.gcd(r0.den, r1.den)
    return r0.num * (den // r0.den), r1.num * (den // r1.den)


def pseudo_euclid(r0: QLambda, r1: QLambda, max_steps: int = 1000) -> CFExpansion:
    """Nearest-integer expansion r0/r1 = [a1; a2, …] with
    r_i = a_{i+1}·λ·r_{i+1} − r_{i+2}."""
    if not r1:
        raise ZeroDivisionError("r1 must be nonzero")
    x, y = _clear_denominators(QLambda(r0.num, r0.den), QLambda(r1.num, r1.den))
    terms: list[int] = []
    while len(terms) < max_steps:
        m = nearest_multiplier(x, y)
        terms.append(m)
        x, y = y, y.times_lambda() * m - x
        if not y:
            return CFExpansion(tuple(terms), True, len(terms))
    return CFExpansion(tuple(terms), False, len(terms))


def eval_cf(ctx: Context, terms: Sequence[int]):
    """a1λ − 1/(a2λ − 1/(…)); the empty expansion is INFINITY."""
    value = INFINITY
    lam = QLambda(ctx.lam)
    for a in reversed(terms):
        if value is INFINITY:
            value = lam * a
        elif not value:
            value = INFINITY
        else:
            value = lam * a - value.inverse()
    return value


def cf_ratio_equals(value, r0: QLambda, r1: QLambda) -> bool:
    if value is INFINITY:
        return not r1
    return value * r1 == r0


# ---------------------------------------------------------------------------
# membership in the orbit of (1, 0)ᵗ


@dataclass
class ColumnReduction:
    """Trace of (a, c) → (c, mλc − a) until c = 0 or |x| < 1."""

    start: CycInt
    multipliers: list[int] = field(default_factory=list)
    final: CycInt | None = None
    member: bool = False
    reason: str = ""

    @property
    def final_sign(self) -> int:
        return 1 if self.final.a == 1 else -1


def step_cap(x: CycInt) -> int:
    """Generous bound on the number of reduction steps for x."""
    lam = x.ctx.lam_float
    size = max(1.0, abs(float(x.a)), abs(float(x.c)))
    rate = -2.0 * math.log(lam / 2.0)
    return int(math.log((2.0 + lam) * size * size * 4.0) / rate) + 32


def reduce_column(x: CycInt, *, stop_below_one: bool = True) -> ColumnReduction:
    """Run the nearest-integer reduction on the coordinates of x.

    Each step is left multiplication by −V·A1^(−m), so membership in the
    orbit is preserved.  With stop_below_one the walk also stops as soon
    as the modulus drops below one (no member is that short)."""
    out = ColumnReduction(start=x)
    if not x:
        out.final, out.reason = x, "zero"
        return out
    a, c = x.a, x.c
    cap = step_cap(x)
    while True:
        cur = CycInt(a, c)
        if not c:
            out.final = cur
            out.member = a == 1 or a == -1
            out.reason = "reached real axis"
            return out
        if stop_below_one and (cur.norm_lambda() - 1).sign() < 0:
            out.final = cur
            out.reason = "modulus below one"
            return out
        if len(out.multipliers) >= cap:
            raise ArithmeticError(f"reduction exceeded {cap} steps for {x!r}")
        m = nearest_multiplier(a, c)
        out.multipliers.append(m)
        a, c = c, c.times_lambda() * m - a


def is_odd_vanishing_cycle(x: CycInt) -> bool:
    return reduce_column(x).member


def in_hecke_group(m: Mat2) -> bool:
    if m.det() != 1:
        return False
    return is_odd_vanishing_cycle(m.column(0)) and is_odd_vanishing_cycle(m.column(1))


def _reduce_q_powers(q: int, w: Word) -> Word:
    """Bring Q exponents into 1..q−1 using Q^q = −I."""
    while True:
        toks: list[tuple[str, int]] = []
        for gen, exp in w:
            if gen == "Q":
                exp %= 2 * q
                if exp >= q:
                    exp -= q
                    toks.append(("NEG", 1))
            if exp:
                toks.append((gen, exp))
        out = simplify_word(toks)
        if out == w:
            return out
        w = out


def _step_matrix(ctx: Context, m: int) -> Mat2:
    # −V·A1^(−m) = (0 1; −1 mλ)
    return Mat2(ctx.zero, ctx.one, -ctx.one, ctx.lam * m)


def factor(m: Mat2) -> Word:
    """A word over NEG, Q, A1 evaluating to m."""
    ctx = m.ctx
    if not in_hecke_group(m):
        raise ValueError("matrix is not in the Hecke group")
    red = reduce_column(m.column(0))
    t = m
    for k in red.multipliers:
        t = _step_matrix(ctx, k) * t
    s = 1 if t.a == 1 else -1
    # t = s·A1^l, so s·b = l·λ
    sb = t.b * s
    l = sb.c[0] if ctx.d == 1 else sb.c[1]
    if ctx.lam * l != sb or t.c or t.d != s:
        raise ArithmeticError("column reduction did not reach ±A1^l")
    toks: list[tuple[str, int]] = []
    for k in red.multipliers:
        # (−V A1^(−k))⁻¹ = A1^k V = A1^k Q^(q−1) A1
        toks += [("A1", k), ("Q", ctx.q - 1), ("A1", 1)]
    if s < 0:
        toks.append(("NEG", 1))
    toks.append(("A1", l))
    w = _reduce_q_powers(ctx.q, simplify_word((g, e) for g, e in toks if e))
    if eval_word(ctx, w) != m:
        raise ArithmeticError("factorisation does not evaluate back")
    return w


# ---------------------------------------------------------------------------
# relations


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool


def q_tilde(q: int) -> int:
    if q % 4 == 0:
        return q
    if q % 4 == 2:
        return q // 2
    return 2 * q


def alternating_product(x: Mat2, y: Mat2, n: int) -> Mat2:
    out = Mat2.identity(x.ctx)
    for i in range(n):
        out = out * (x if i % 2 == 0 else y)
    return out


def relations_report(ctx: Context) -> list[RelationCheck]:
    from .cycles.forms import form_matrix_s0, form_matrix_s1, monodromy

    q = ctx.q
    V, A1, A2, Q = generators(ctx)
    I = Mat2.identity(ctx)
    one = CycInt.from_int(ctx, 1)
    eta = CycInt.eta(ctx)
    zeta = CycInt.zeta(ctx)
    checks: list[tuple[str, bool]] = [
        ("det V = det A1 = det A2 = det Q = 1", all(g.det() == 1 for g in (V, A1, A2, Q))),
        ("V^2 = -I", V * V == -I),
        ("V^4 = I", V**4 == I),
        ("Q^q = -I", Q**q == -I),
        ("V^2 = Q^q", V * V == Q**q),
        ("Q = A1 V", Q == A1 * V),
        ("A1 V = V A2", A1 * V == V * A2),
        ("A2 = V A1 V^-1", A2 == V * A1 * V.inverse()),
        ("V = Q^(q-1) A1", V == Q ** (q - 1) * A1),
        ("A1 A2 = -Q^2", A1 * A2 == -(Q * Q)),
        (
            "a1 a2 = multiplication by -zeta^2",
            all(act(A1 * A2, x) == -(zeta * zeta) * x for x in (one, eta)),
        ),
        ("Q acts as multiplication by zeta", all(act(Q, x) == zeta * x for x in (one, eta))),
        ("Q fixes zeta (Mobius)", mobius_fixes(Q, zeta, zeta)),
        ("A1 A2 fixes zeta (Mobius)", mobius_fixes(A1 * A2, zeta, zeta)),
        ("A1 maps zeta^(q-1) to zeta", mobius_fixes(A1, eta, zeta)),
        ("A2 maps zeta to zeta^(q-1)", mobius_fixes(A2, zeta, eta)),
        ("a1 = s1(e1), a2 = s1(e2)", form_matrix_s1(ctx, 0) == A1 and form_matrix_s1(ctx, 1) == A2),
        ("s0(e1) s0(e2) = -M", form_matrix_s0(ctx, 0) * form_matrix_s0(ctx, 1) == -monodromy(ctx)),
        ("s1(e1) s1(e2) = M", form_matrix_s1(ctx, 0) * form_matrix_s1(ctx, 1) == monodromy(ctx)),
        (f"(A1 A2)^{q_tilde(q)} = I", (A1 * A2) ** q_tilde(q) == I),
        (
            "alternating products of q factors agree",
            alternating_product(A1, A2, q) == alternating_product(A2, A1, q),
        ),
    ]
    if q % 2 == 0:
        i_unit = ctx.unit_root(q // 2)
        checks.append(("V fixes i (Mobius)", mobius_fixes(V, i_unit, i_unit)))
        target = -I if q % 4 == 0 else I
        half = q // 2
        checks.append(
            (
                f"(A1 A2)^{half} = (A2 A1)^{half} = {'-I' if q % 4 == 0 else 'I'}",
                (A1 * A2) ** half == target and (A2 * A1) ** half == target,
            )
        )
    else:
        sgn = (-1) ** ((q - 1) // 2)
        checks.append(
            (
                "alternating products of q factors = (-1)^((q-1)/2) V",
                alternating_product(A1, A2, q) == V * sgn
                and alternating_product(A2, A1, q) == V * sgn,
            )
        )
        checks.append(
            ("(A1 A2)^((q+1)/2) = (-1)^((q-1)/2) Q", (A1 * A2) ** ((q + 1) // 2) == Q * sgn)
        )
    return [RelationCheck(n, bool(p)) for n, p in checks]
