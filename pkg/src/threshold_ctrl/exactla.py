"""Exact dense linear algebra over Python integers and rationals.

Matrices are plain lists of rows.  Every decision made by the package
(rank, eigenvector checks, characteristic polynomials) goes through the
exact routines here; the float Jacobi solver at the bottom only serves
numerical cross-checks such as eigenvalue interlacing.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

import numpy as np

Matrix = list[list[int]]
Poly = list[int]


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    return rows, cols


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*M)]


def is_symmetric(M: Sequence[Sequence]) -> bool:
    n, m = shape(M)
    return n == m and all(M[i][j] == M[j][i] for i in range(n) for j in range(i))


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    """Exact product ``A @ B``.

    Zero entries of ``A`` are skipped, which makes products with sparse
    Laplacians cheap even when ``B`` holds large integers.
    """
    n, inner = shape(A)
    inner_b, m = shape(B)
    if inner != inner_b:
        raise ValueError(f"dimension mismatch: {n}x{inner} times {inner_b}x{m}")
    out = []
    for row in A:
        acc = [0] * m
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def mat_vec(A: Sequence[Sequence], v: Sequence) -> list:
    if len(v) != shape(A)[1]:
        raise ValueError("dimension mismatch")
    return [sum(a * x for a, x in zip(row, v) if a) for row in A]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def hstack(*blocks: Sequence[Sequence]) -> list[list]:
    rows = {len(b) for b in blocks}
    if len(rows) != 1:
        raise ValueError("blocks must have the same number of rows")
    return [sum((list(b[i]) for b in blocks), []) for i in range(rows.pop())]


def integerize_columns(M: Sequence[Sequence]) -> Matrix:
    """Scale each column by the lcm of its denominators.

    Column scaling by nonzero constants preserves rank, column spaces up to
    scale and orthogonality, so rational matrices can be handled by the
    integer routines.
    """
    n, m = shape(M)
    out = [[0] * m for _ in range(n)]
    for j in range(m):
        den = 1
        for i in range(n):
            den = lcm(den, Fraction(M[i][j]).denominator)
        for i in range(n):
            x = Fraction(M[i][j]) * den
            out[i][j] = x.numerator
    return out


def rank_exact(M: Sequence[Sequence]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    The pivot in each column is the first nonzero entry at or below the
    current row.  Rational input is scaled to integers column by column.
    """
    rows, cols = shape(M)
    if rows == 0 or cols == 0:
        return 0
    if any(not isinstance(x, int) for row in M for x in row):
        A = integerize_columns(M)
    else:
        A = [list(row) for row in M]
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        prow = A[r]
        p = prow[c]
        for i in range(r + 1, rows):
            row = A[i]
            a = row[c]
            if a:
                for j in range(c + 1, cols):
                    row[j] = (p * row[j] - a * prow[j]) // prev
            else:
                for j in range(c + 1, cols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def nullspace_exact(M: Sequence[Sequence]) -> Matrix:
    """Integer basis (as a list of vectors) of the right kernel of ``M``."""
    rows, cols = shape(M)
    if cols == 0:
        return []
    A = [[Fraction(x) for x in row] for row in M]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][f]
        den = 1
        for x in v:
            den = lcm(den, x.denominator)
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        basis.append([x // g for x in ints])
    return basis


# -- polynomials (dense, lowest degree first) ---------------------------------


def poly_trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_degree(p: Sequence[int]) -> int:
    p = poly_trim(p)
    return len(p) - 1 if p else -1


def poly_eval(p: Sequence[int], x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p: Sequence[int]) -> Poly:
    return poly_trim([i * c for i, c in enumerate(p)][1:])


def poly_content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def poly_primitive(p: Sequence[int]) -> Poly:
    p = poly_trim(p)
    if not p:
        return []
    g = poly_content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def poly_prem(a: Sequence[int], b: Sequence[int]) -> Poly:
    """Pseudo-remainder of ``a`` by ``b`` (stays in the integers)."""
    a = poly_trim(a)
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r = poly_trim(r)
    return r


def poly_gcd(a: Sequence[int], b: Sequence[int]) -> Poly:
    """Primitive gcd via the primitive polynomial remainder sequence."""
    a = poly_primitive(a)
    b = poly_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = poly_prem(a, b)
        a, b = b, poly_primitive(r)
    return a


def is_squarefree(p: Sequence[int]) -> bool:
    """True iff ``p`` has no repeated complex root."""
    p = poly_trim(p)
    if not p:
        raise ValueError("the zero polynomial has no square-free factorization")
    return poly_degree(poly_gcd(p, poly_derivative(p))) == 0


def char_poly(M: Sequence[Sequence[int]]) -> Poly:
    """Coefficients of ``det(xI - M)``, lowest degree first.

    Faddeev-LeVerrier recursion in exact integer arithmetic; every division
    by the step index is exact for integer input.
    """
    n, m = shape(M)
    if n != m:
        raise ValueError(f"char_poly needs a square matrix, got {n}x{m}")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    N = zeros(n, n)
    for step in range(1, n + 1):
        c_prev = coeffs[n - step + 1]
        N = mat_mul(M, N)
        for i in range(n):
            N[i][i] += c_prev
        AN = mat_mul(M, N)
        tr = sum(AN[i][i] for i in range(n))
        if tr % step:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - step] = -tr // step
    return coeffs


# -- float symmetric eigensolver (cross-checks only) --------------------------


def _off_norm(A: np.ndarray) -> float:
    off = A - np.diag(np.diag(A))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigh(M, tol: float = 1e-10, max_sweeps: int = 100):
    """Cyclic Jacobi eigen-decomposition of a symmetric matrix.

    Returns ascending eigenvalues and the matching orthonormal eigenvectors
    as columns.  Sweeps run until the off-diagonal Frobenius norm drops
    below ``tol``.
    """
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix must be symmetric")
    n = A.shape[0]
    V = np.eye(n)
    for _ in range(max_sweeps):
        if _off_norm(A) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) < 1e-300:
                    continue
                diff = A[q, q] - A[p, p]
                if abs(apq) < 1e-18 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                colp = A[:, p].copy()
                colq = A[:, q].copy()
                A[:, p] = c * colp - s * colq
                A[:, q] = s * colp + c * colq
                rowp = A[p, :].copy()
                rowq = A[q, :].copy()
                A[p, :] = c * rowp - s * rowq
                A[q, :] = s * rowp + c * rowq
                A[p, q] = A[q, p] = 0.5 * (A[p, q] + A[q, p])
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def eig_sym_float(M, tol: float = 1e-10) -> list[float]:
    """Ascending eigenvalues of a symmetric matrix (float, Jacobi)."""
    w, _ = jacobi_eigh(M, tol)
    return [float(x) for x in w]
