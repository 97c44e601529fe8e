"""Vectorised enumeration of vanishing cycles as int64 coordinate arrays.

Used for the large sweeps (duplicate detection, shell minima), where
building one Python object per point would be too slow.  Every array
row is (a_0..a_{d-1}, c_0..c_{d-1}) for the point a + c·η.  The arrays
hold the cores: points before the final rotation (−1)^ε ζ^l.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..field import Context, CycInt

_LIMIT = 1 << 40


def _lambda_matrix(ctx: Context) -> np.ndarray:
    d = ctx.d
    L = np.zeros((d, d), dtype=np.int64)
    for j in range(d):
        col = ctx._times_lambda(tuple(1 if i == j else 0 for i in range(d)))
        L[:, j] = col
    return L


def a1_power(ctx: Context, n: int) -> np.ndarray:
    d = ctx.d
    M = np.eye(2 * d, dtype=np.int64)
    M[:d, d:] = n * _lambda_matrix(ctx)
    return M


def q_matrix(ctx: Context) -> np.ndarray:
    d = ctx.d
    M = np.zeros((2 * d, 2 * d), dtype=np.int64)
    M[:d, :d] = _lambda_matrix(ctx)
    M[:d, d:] = -np.eye(d, dtype=np.int64)
    M[d:, :d] = np.eye(d, dtype=np.int64)
    return M


def q_powers(ctx: Context) -> list[np.ndarray]:
    Q = q_matrix(ctx)
    out = [np.eye(2 * ctx.d, dtype=np.int64)]
    for _ in range(2 * ctx.q - 1):
        out.append(Q @ out[-1])
    return out


def _apply(X: np.ndarray, M: np.ndarray) -> np.ndarray:
    if X.size and int(np.abs(X).max()) * int(np.abs(M).sum(axis=1).max()) >= _LIMIT:
        raise OverflowError("coefficients too large for the int64 fast path")
    return X @ M.T


def point_row(x: CycInt) -> np.ndarray:
    return np.array(x.a.c + x.c.c, dtype=np.int64)


def row_point(ctx: Context, row) -> CycInt:
    d = ctx.d
    vals = [int(v) for v in row]
    return CycInt.from_coeffs(ctx, vals[:d], vals[d:])


def core_arrays(ctx: Context, age_max: int) -> dict[tuple[int, int], np.ndarray]:
    """Cores keyed by (age, generation); (0, 1) holds just the point 1."""
    q, d = ctx.q, ctx.d
    Qp = q_powers(ctx)
    cores: dict[tuple[int, int], list[np.ndarray]] = {
        (0, 1): [np.array([[1] + [0] * (2 * d - 1)], dtype=np.int64)]
    }
    start = np.stack([point_row(ctx.unit_root(l)) for l in range(1, q - 1)]) if q > 2 else None
    frontier: dict[tuple[int, int], list[np.ndarray]] = {(0, 1): [start]}
    for age in range(age_max):
        for r in sorted(k[1] for k in frontier if k[0] == age):
            Y = np.concatenate(frontier.pop((age, r)))
            for n in range(1, age_max - age + 1):
                Z = _apply(Y, a1_power(ctx, n))
                cores.setdefault((age + n, r + 1), []).append(Z)
                if age + n < age_max:
                    rotated = [_apply(Z, Qp[l]) for l in range(1, q - 1)]
                    frontier.setdefault((age + n, r + 1), []).extend(rotated)
    return {k: np.concatenate(v) for k, v in sorted(cores.items())}


def _hash_weights(ctx: Context, seed: int = 0x5EED) -> np.ndarray:
    rng = np.random.default_rng(seed)
    R = rng.integers(0, 2**63, size=2 * ctx.d, dtype=np.uint64) * np.uint64(2) + np.uint64(1)
    # hash of Q^l x is (Q^l x)·R = x·((Q^l)ᵗ R) modulo 2^64
    W = [Qp.T.astype(np.uint64) @ R for Qp in q_powers(ctx)[: ctx.q]]
    return np.stack(W, axis=1)


@dataclass(frozen=True)
class DuplicateReport:
    q: int
    age_max: int
    points: int
    duplicates: int
    hash_collisions: int


def duplicate_report(ctx: Context, age_max: int) -> DuplicateReport:
    """Count repeated points among all 2q rotations and signs of all cores.

    Points are hashed with a random linear form modulo 2^64.  Equal points
    always share a hash; every shared hash is then compared exactly, so
    the duplicate count is exact."""
    cores = core_arrays(ctx, age_max)
    W = _hash_weights(ctx)
    q = ctx.q
    blocks, sources = [], []
    for key, X in cores.items():
        H = X.astype(np.uint64) @ W  # (n, q) rotations ζ^0..ζ^(q−1)
        H = np.concatenate([H, np.uint64(0) - H], axis=1)  # and their negatives
        blocks.append(H.reshape(-1))
        sources.append((key, X.shape[0]))
    allh = np.concatenate(blocks)
    order = np.argsort(allh, kind="stable")
    sh = allh[order]
    same = np.nonzero(sh[1:] == sh[:-1])[0]
    duplicates = collisions = 0
    if same.size:
        offsets = np.cumsum([0] + [n * 2 * q for _, n in sources])
        Qp = q_powers(ctx)

        def materialise(flat: int) -> tuple:
            b = int(np.searchsorted(offsets, flat, side="right")) - 1
            key, _ = sources[b]
            local = flat - offsets[b]
            row, col = divmod(int(local), 2 * q)
            sign = -1 if col >= q else 1
            x = cores[key][row] @ Qp[col % q].T * sign
            return tuple(int(v) for v in x)

        for i in same:
            if materialise(int(order[i])) == materialise(int(order[i + 1])):
                duplicates += 1
            else:
                collisions += 1
    return DuplicateReport(q, age_max, int(allh.size), duplicates, collisions)


def float_norms(ctx: Context, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Approximate |x|² per row and a generous bound on its rounding error."""
    d = ctx.d
    lam = ctx.approx(ctx.lam.c)
    powers = np.array([lam**i for i in range(d)])
    a = X[:, :d].astype(float) @ powers
    c = X[:, d:].astype(float) @ powers
    size = np.abs(X[:, :d]).astype(float) @ powers + np.abs(X[:, d:]).astype(float) @ powers
    return a * a - lam * a * c + c * c, 1e-12 * (size + 1.0) ** 2
