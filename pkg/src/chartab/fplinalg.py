"""Exact linear algebra over the prime field F_q on numpy int64 arrays.

All arrays hold canonical representatives in [0, q).  q*q times the inner
dimension must stay below 2**63 for the fast matmul path; a Python-int
fallback covers the (never hit in practice) overflow case.
"""

from __future__ import annotations

import numpy as np


def asfield(a, q: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % q


def mat_mul(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    inner = a.shape[-1]
    if (q - 1) * (q - 1) * inner < 2 ** 63:
        return (a @ b) % q
    ao = a.astype(object)
    bo = b.astype(object)
    return np.asarray((ao @ bo) % q, dtype=np.int64)


def inv_mod(x: int, q: int) -> int:
    return pow(int(x), -1, q)


def rref(a: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot column list."""
    m = a.copy() % q
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pivot_row = r + int(nz[0])
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        m[r] = (m[r] * inv_mod(m[r, c], q)) % q
        other = np.nonzero(m[:, c])[0]
        other = other[other != r]
        if other.size:
            m[other] = (m[other] - np.outer(m[other, c], m[r])) % q
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(a: np.ndarray, q: int) -> np.ndarray:
    """Row basis of {x : a @ x = 0}, in reduced echelon form."""
    red, pivots = rref(a, q)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-red[r, fc]) % q
    if len(free) > 1:
        basis, _ = rref(basis, q)
    return basis


def det_mod(a: np.ndarray, q: int) -> int:
    """Determinant over F_q by Gaussian elimination (test oracle helper)."""
    m = a.copy() % q
    n = m.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(m[c:, c])[0]
        if nz.size == 0:
            return 0
        r = c + int(nz[0])
        if r != c:
            m[[c, r]] = m[[r, c]]
            det = (-det) % q
        det = (det * int(m[c, c])) % q
        inv = inv_mod(m[c, c], q)
        below = np.nonzero(m[c + 1:, c])[0] + c + 1
        if below.size:
            factors = (m[below, c] * inv) % q
            m[below] = (m[below] - np.outer(factors, m[c])) % q
    return det


def hessenberg(a: np.ndarray, q: int, transform: bool = False):
    """Upper Hessenberg form similar to a, by row/column elimination.

    With transform=True also returns Qinv with a = Qinv @ h @ Qinv^-1,
    so eigenvectors of h map back through Qinv.
    """
    h = a.copy() % q
    n = h.shape[0]
    qinv = np.eye(n, dtype=np.int64) if transform else None
    for c in range(n - 2):
        nz = np.nonzero(h[c + 1:, c])[0]
        if nz.size == 0:
            continue
        p = c + 1 + int(nz[0])
        if p != c + 1:
            h[[c + 1, p]] = h[[p, c + 1]]
            h[:, [c + 1, p]] = h[:, [p, c + 1]]
            if transform:
                qinv[:, [c + 1, p]] = qinv[:, [p, c + 1]]
        inv = inv_mod(h[c + 1, c], q)
        rows = np.nonzero(h[c + 2:, c])[0] + c + 2
        if rows.size:
            factors = (h[rows, c] * inv) % q
            h[rows] = (h[rows] - np.outer(factors, h[c + 1])) % q
            # inverse column operation keeps similarity
            h[:, c + 1] = (h[:, c + 1] + h[:, rows] @ factors) % q
            if transform:
                qinv[:, c + 1] = (qinv[:, c + 1] + qinv[:, rows] @ factors) % q
    if transform:
        return h, qinv
    return h


def charpoly_hessenberg(h: np.ndarray, q: int) -> np.ndarray:
    """Characteristic polynomial of an upper Hessenberg matrix, ascending."""
    n = h.shape[0]
    # p_m = (x - h[m-1,m-1]) p_{m-1} - sum_i h[i-1,m-1] (prod beta) p_{i-1}
    polys = [np.array([1], dtype=np.int64)]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = np.zeros(m + 1, dtype=np.int64)
        cur[1:m + 1] = prev
        cur[:m] = (cur[:m] - h[m - 1, m - 1] * prev) % q
        cur %= q
        beta = 1
        for i in range(m - 1, 0, -1):
            beta = (beta * int(h[i, i - 1])) % q
            coeff = (int(h[i - 1, m - 1]) * beta) % q
            if coeff:
                cur[:i] = (cur[:i] - coeff * polys[i - 1]) % q
        polys.append(cur % q)
    return polys[n]


def charpoly(a: np.ndarray, q: int) -> np.ndarray:
    """Monic characteristic polynomial det(xI - a), ascending coefficients."""
    if a.shape[0] == 0:
        return np.array([1], dtype=np.int64)
    return charpoly_hessenberg(hessenberg(a, q), q)


def poly_roots(coeffs: np.ndarray, q: int) -> list[int]:
    """All roots in F_q, ascending, by evaluation at every field point."""
    lams = np.arange(q, dtype=np.int64)
    vals = np.zeros(q, dtype=np.int64)
    for c in coeffs[::-1]:
        vals = (vals * lams + int(c)) % q
    return [int(x) for x in np.nonzero(vals == 0)[0]]


def eig_split_rows(a: np.ndarray, q: int) -> list[tuple[int, np.ndarray]]:
    """Split row space by the right action c -> c @ a.

    Returns (eigenvalue, row basis) pairs for each eigenvalue of a, sorted
    by eigenvalue; the bases are rref rows of the nullspaces of a.T - lam.
    When the Hessenberg form of a.T is unreduced (every eigenspace is then
    one-dimensional) the eigenvectors come from an O(n^2)-per-eigenvalue
    back-substitution instead of one elimination per eigenvalue.
    """
    at = a.T % q
    n = a.shape[0]
    h, qinv = hessenberg(at, q, transform=True)
    roots = poly_roots(charpoly_hessenberg(h, q), q)
    if n > 1 and roots and np.all(np.diagonal(h, -1) % q):
        return _eig_unreduced(h, qinv, roots, q)
    out = []
    for lam in roots:
        m = (at - lam * np.eye(n, dtype=np.int64)) % q
        basis = nullspace(m, q)
        if basis.shape[0]:
            out.append((lam, basis))
    return out


def _eig_unreduced(h: np.ndarray, qinv: np.ndarray, roots: list[int],
                   q: int) -> list[tuple[int, np.ndarray]]:
    n = h.shape[0]
    lams = np.array(roots, dtype=np.int64)
    v = np.zeros((n, len(roots)), dtype=np.int64)
    v[n - 1] = 1
    for m in range(n - 1, 0, -1):
        # row m of (h - lam I) v = 0 solved for v[m-1]
        acc = (mat_mul(h[m, m:], v[m:], q) - lams * v[m]) % q
        v[m - 1] = (-acc * inv_mod(h[m, m - 1], q)) % q
    top = (h[0, :] @ v - lams * v[0]) % q
    assert not np.any(top), "back-substitution produced a non-eigenvector"
    vecs = mat_mul(qinv, v, q)
    out = []
    for idx, lam in enumerate(roots):
        basis, _ = rref(vecs[:, idx].reshape(1, n), q)
        out.append((int(lam), basis))
    return out
