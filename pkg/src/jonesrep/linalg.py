"""Exact dense linear algebra on numpy object arrays.

Entries are scalars from one of the fields in ``arith``; every routine takes
the field explicitly so it can build zeros and ones of the right type.
Pivoting is exact: an entry is a pivot candidate iff it is nonzero.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


def matrix(rows: Sequence[Sequence], field) -> np.ndarray:
    rows = [[field.coerce(x) for x in row] for row in rows]
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = x
    return out


def zeros(n: int, m: int, field) -> np.ndarray:
    out = np.empty((n, m), dtype=object)
    out.fill(field.zero)
    return out


def identity(n: int, field) -> np.ndarray:
    out = zeros(n, n, field)
    for i in range(n):
        out[i, i] = field.one
    return out


def convert(a: np.ndarray, field) -> np.ndarray:
    """Entrywise coercion into another field (e.g. generic -> cyclotomic)."""
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = field.coerce(x)
    return out


def apply(a: np.ndarray, fn) -> np.ndarray:
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = fn(x)
    return out


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def mul(a: np.ndarray, b: np.ndarray, field) -> np.ndarray:
    n, k = a.shape
    k2, m = b.shape
    if k != k2:
        raise ValueError("shape mismatch")
    out = zeros(n, m, field)
    for i in range(n):
        for j in range(m):
            total = field.zero
            for l in range(k):
                x, y = a[i, l], b[l, j]
                if x and y:
                    total = total + x * y
            out[i, j] = total
    return out


def product(mats: Sequence[np.ndarray], field, size: int) -> np.ndarray:
    out = identity(size, field)
    for m in mats:
        out = mul(out, m, field)
    return out


def rref(a: np.ndarray, field) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    r = a.copy()
    n, m = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(m):
        if row >= n:
            break
        piv = next((i for i in range(row, n) if r[i, col]), None)
        if piv is None:
            continue
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        inv = field.one / r[row, col]
        for j in range(m):
            if r[row, j]:
                r[row, j] = r[row, j] * inv
        for i in range(n):
            if i != row and r[i, col]:
                f = r[i, col]
                for j in range(m):
                    if r[row, j]:
                        r[i, j] = r[i, j] - f * r[row, j]
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: np.ndarray, field) -> int:
    return len(rref(a, field)[1]) if a.size else 0


def nullspace(a: np.ndarray, field) -> np.ndarray:
    """Matrix whose columns form a basis of {x : a x = 0}."""
    n, m = a.shape
    r, pivots = rref(a, field)
    free = [j for j in range(m) if j not in pivots]
    out = zeros(m, len(free), field)
    for k, f in enumerate(free):
        out[f, k] = field.one
        for i, p in enumerate(pivots):
            out[p, k] = -r[i, f]
    return out


def inverse(a: np.ndarray, field) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([a, identity(n, field)], axis=1)
    r, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return r[:, n:]


def solve(a: np.ndarray, b: np.ndarray, field) -> np.ndarray:
    """Unique solution of a x = b (a square and invertible)."""
    return mul(inverse(a, field), b, field)


def det(a: np.ndarray, field):
    r = a.copy()
    n = r.shape[0]
    result = field.one
    for col in range(n):
        piv = next((i for i in range(col, n) if r[i, col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            r[[col, piv]] = r[[piv, col]]
            result = -result
        p = r[col, col]
        result = result * p
        inv = field.one / p
        for i in range(col + 1, n):
            if r[i, col]:
                f = r[i, col] * inv
                for j in range(col, n):
                    if r[col, j]:
                        r[i, j] = r[i, j] - f * r[col, j]
    return result


def charpoly(a: np.ndarray, field) -> list:
    """Coefficients c_0..c_N (low to high, monic) of det(x I - a), by Berkowitz.

    Division free, so it stays inside Laurent polynomials when the entries do.
    """
    n = a.shape[0]
    if n == 0:
        return [field.one]
    # Berkowitz: build the Toeplitz vectors for successive leading submatrices
    poly = [field.one, -a[0, 0]]  # high to low, for the 1x1 block
    for k in range(1, n):
        r_row = [a[k, j] for j in range(k)]
        c_col = [a[i, k] for i in range(k)]
        sub = a[:k, :k]
        # vector q = [1, -a_kk, -R C, -R A C, -R A^2 C, ...] of length k + 2
        q = [field.one, -a[k, k]]
        vec = c_col
        for _ in range(k):
            total = field.zero
            for x, y in zip(r_row, vec):
                if x and y:
                    total = total + x * y
            q.append(-total)
            vec = [sum((sub[i, j] * vec[j] for j in range(k) if sub[i, j] and vec[j]), field.zero)
                   for i in range(k)]
        # new poly = Toeplitz(q) * poly
        new = []
        for i in range(k + 2):
            total = field.zero
            for j in range(len(poly)):
                if 0 <= i - j < len(q) and q[i - j] and poly[j]:
                    total = total + q[i - j] * poly[j]
            new.append(total)
        poly = new
    return poly[::-1]


def poly_eval_matrix(coeffs: list, a: np.ndarray, field) -> np.ndarray:
    n = a.shape[0]
    out = zeros(n, n, field)
    for c in reversed(coeffs):
        out = _axpy(mul(out, a, field), c, field)
    return out


def _axpy(m: np.ndarray, c, field) -> np.ndarray:
    out = m.copy()
    for i in range(m.shape[0]):
        out[i, i] = out[i, i] + c
    return out


def transpose(a: np.ndarray) -> np.ndarray:
    return a.T.copy()


def bar(a: np.ndarray, field) -> np.ndarray:
    return apply(a, field.bar)


def minimal_polynomial(a: np.ndarray, field) -> list:
    """Monic minimal polynomial (low to high) via linear dependence of powers."""
    n = a.shape[0]
    powers = [identity(n, field)]
    while True:
        stack = np.stack([p.reshape(-1) for p in powers], axis=1)
        ns = nullspace(stack, field)
        if ns.shape[1]:
            v = ns[:, 0]
            lead = v[-1]
            return [x / lead for x in v]
        powers.append(mul(powers[-1], a, field))


def to_strings(a: np.ndarray) -> list[list[str]]:
    return [[str(x) for x in row] for row in a]
