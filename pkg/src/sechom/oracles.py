"""Independent dense reference computations for cross-checking.

Everything here is deliberately separate from the sparse engine: basis
tensors are enumerated as tuples, matrices are dense numpy object arrays
of exact numbers, and ranks come from an integer fraction-free
elimination.  The only shared inputs are the algebra structure tables
themselves.

These are slow paths; every entry point refuses ambient dimensions above
5000 so an accidental call on a large instance fails fast instead of
grinding.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd, lcm

import numpy as np

from .algebra import FinAlgebra, multiply

_CAP = 5000


def _check_cap(dim: int) -> None:
    if dim > _CAP:
        raise ValueError(
            f"reference path refuses ambient dimension {dim} > {_CAP}")


def _tuple_positions(dim: int, length: int) -> dict:
    return {t: i for i, t in enumerate(product(range(dim), repeat=length))}


def _zeros(nrows: int, ncols: int):
    M = np.empty((nrows, ncols), dtype=object)
    M[:] = 0
    return M


def bar_boundary(A: FinAlgebra, n: int):
    """Classical boundary from (n+1)-fold to n-fold tensors, dense.

    Adjacent factors are multiplied with alternating signs; the last face
    wraps the final factor around to the front.
    """
    if n < 1:
        raise ValueError("boundary needs degree at least 1")
    d = A.dim
    _check_cap(d ** (n + 1))
    src = list(product(range(d), repeat=n + 1))
    dst_pos = _tuple_positions(d, n)
    M = _zeros(d ** n, d ** (n + 1))
    for c, tup in enumerate(src):
        for i in range(n):
            coeffs = A.mult[tup[i]][tup[i + 1]]
            rest = tup[:i] + tup[i + 2:]
            sign = 1 if i % 2 == 0 else -1
            for k, x in enumerate(coeffs):
                if x:
                    r = dst_pos[rest[:i] + (k,) + rest[i:]]
                    M[r, c] += sign * x
        coeffs = A.mult[tup[n]][tup[0]]
        sign = 1 if n % 2 == 0 else -1
        for k, x in enumerate(coeffs):
            if x:
                r = dst_pos[(k,) + tup[1:n]]
                M[r, c] += sign * x
    return M


def bar_rotation(A: FinAlgebra, n: int):
    """Signed cyclic rotation on (n+1)-fold tensors, dense."""
    d = A.dim
    _check_cap(d ** (n + 1))
    pos = _tuple_positions(d, n + 1)
    M = _zeros(d ** (n + 1), d ** (n + 1))
    sign = 1 if n % 2 == 0 else -1
    for tup, c in pos.items():
        M[pos[(tup[-1],) + tup[:-1]], c] = sign
    return M


def dense_rank(M) -> int:
    """Fraction-free integer elimination; rows are scaled primitive."""
    rows = []
    for row in M:
        den = 1
        vals = [Fraction(x) for x in row]
        for x in vals:
            den = lcm(den, x.denominator)
        ints = [int(x * den) for x in vals]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g:
            rows.append([x // g for x in ints])
    ncols = len(rows[0]) if rows else 0
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[col]
        for i in range(r + 1, len(rows)):
            q = rows[i][col]
            if q:
                row = [p * a - q * b for a, b in zip(rows[i], prow)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                rows[i] = [x // g for x in row] if g else row
        r += 1
    return r


def dense_rank_of_sparse(M) -> int:
    """Rank of an engine sparse matrix, recomputed densely."""
    _check_cap(max(M.nrows, M.ncols))
    D = _zeros(M.nrows, M.ncols)
    for rr, cc, x in M.entries():
        D[rr, cc] = x
    return dense_rank(D)


def _hstack(mats):
    mats = [m for m in mats if m is not None and m.shape[1]]
    if not mats:
        return None
    return np.concatenate(mats, axis=1)


def classical_hh_dims(A: FinAlgebra, n_max: int) -> list:
    """Hochschild homology dimensions of A in degrees 0..n_max."""
    dims = []
    ranks = {0: 0}
    for k in range(1, n_max + 2):
        _check_cap(A.dim ** (k + 1))
        ranks[k] = dense_rank(bar_boundary(A, k))
    for n in range(n_max + 1):
        dims.append(A.dim ** (n + 1) - ranks[n] - ranks[n + 1])
    return dims


def classical_hc_dims(A: FinAlgebra, n_max: int) -> list:
    """Cyclic homology dimensions of A in degrees 0..n_max.

    Computed purely from ranks: with W_k the image of (1 - rotation) in
    degree k, the degree-n dimension equals
    N_n + rank(W_{n-1}) - rank[b_n | W_{n-1}] - rank[b_{n+1} | W_n],
    where [X | Y] is column concatenation.  This avoids constructing
    quotient complexes entirely, so it shares nothing with the engine's
    route.
    """
    dims = []
    omegas = {}
    for k in range(n_max + 1):
        _check_cap(A.dim ** (k + 1))
        ident = _zeros(A.dim ** (k + 1), A.dim ** (k + 1))
        for i in range(A.dim ** (k + 1)):
            ident[i, i] = 1
        omegas[k] = ident - bar_rotation(A, k)
    w_rank = {k: dense_rank(M) for k, M in omegas.items()}
    w_rank[-1] = 0
    for n in range(n_max + 1):
        N = A.dim ** (n + 1)
        if n == 0:
            mid = dense_rank(bar_boundary(A, 1))
            dims.append(N - mid)
            continue
        low = dense_rank(_hstack([bar_boundary(A, n), omegas[n - 1]]))
        high = dense_rank(_hstack([bar_boundary(A, n + 1), omegas[n]]))
        dims.append(N + w_rank[n - 1] - low - high)
    return dims


def classical_kahler_dim(A: FinAlgebra) -> int:
    """Dimension of the classical module of differentials of a commutative
    algebra, from the Leibniz presentation on the free module a d(b)."""
    d = A.dim
    _check_cap(d * d)
    rows = []
    for m in range(d):
        e_m = [Fraction(int(t == m)) for t in range(d)]
        for p in range(d):
            for q in range(d):
                vec = [Fraction(0)] * (d * d)
                for k, x in enumerate(A.mult[p][q]):
                    if x:
                        vec[m * d + k] += x
                cp = multiply(A, e_m, [Fraction(int(t == p)) for t in range(d)])
                for t, x in enumerate(cp):
                    if x:
                        vec[t * d + q] -= x
                cq = multiply(A, e_m, [Fraction(int(t == q)) for t in range(d)])
                for t, x in enumerate(cq):
                    if x:
                        vec[t * d + p] -= x
                if any(vec):
                    rows.append(vec)
    return d * d - dense_rank(rows)


def _dense_kernel(M) -> list:
    """Kernel basis of a dense matrix by textbook reduced elimination."""
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    rows = [[Fraction(x) for x in row] for row in M]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [x - c * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return basis


def classical_I_mod_I2_dim(A: FinAlgebra) -> int:
    """Dimension of I/I^2 for the kernel I of the product map on A (x) A."""
    d = A.dim
    _check_cap(d * d)
    mu = _zeros(d, d * d)
    for i in range(d):
        for j in range(d):
            for k, x in enumerate(A.mult[i][j]):
                if x:
                    mu[k, i * d + j] += x
    kernel = _dense_kernel(mu)

    def tensor_mult(u, v):
        out = [Fraction(0)] * (d * d)
        for i1 in range(d):
            for j1 in range(d):
                x = u[i1 * d + j1]
                if not x:
                    continue
                for i2 in range(d):
                    for j2 in range(d):
                        y = v[i2 * d + j2]
                        if not y:
                            continue
                        for k1, a in enumerate(A.mult[i1][i2]):
                            if not a:
                                continue
                            for k2, b in enumerate(A.mult[j1][j2]):
                                if b:
                                    out[k1 * d + k2] += x * y * a * b
        return out

    squares = [tensor_mult(u, v) for u in kernel for v in kernel]
    return len(kernel) - dense_rank(squares) if kernel else 0
