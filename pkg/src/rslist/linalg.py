"""Dense exact linear algebra over GF(q).

Matrices are 2-D integer arrays of canonical field elements. Row
operations are vectorised through the field's ``v*`` methods, so a
255x256 system over GF(2^8) reduces in a few milliseconds.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DimensionMismatch, SolutionSpaceTooLarge
from .field import GF


def as_matrix(A, cols: int | None = None) -> np.ndarray:
    M = np.array(A, dtype=np.int64)
    if M.ndim == 1 and M.size == 0:
        M = M.reshape(0, cols or 0)
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {M.shape}")
    return M


def rref(F: GF, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the pivot columns (leftmost-nonzero pivoting)."""
    M = as_matrix(A).copy()
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        lead = int(M[r, c])
        if lead != 1:
            M[r] = F.vmul(M[r], F.inv(lead))
        factors = M[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            M[hit] = F.vsub(M[hit], F.vmul(factors[hit, None], M[r][None, :]))
        pivots.append(c)
        r += 1
    return M, pivots


def rank(F: GF, A) -> int:
    return len(rref(F, A)[1])


def _basis_from_rref(F: GF, R: np.ndarray, pivots: list[int], cols: int) -> list[tuple[int, ...]]:
    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = F.neg(int(R[row, f]))
        basis.append(tuple(int(x) for x in v))
    return basis


def nullspace(F: GF, A) -> list[tuple[int, ...]]:
    """Basis of {x : A x = 0}: one vector per free column, in column order,
    with a 1 in its free column and 0 in the other free columns."""
    M = as_matrix(A)
    R, pivots = rref(F, M)
    return _basis_from_rref(F, R, pivots, M.shape[1])


@dataclass(frozen=True)
class AffineSolution:
    particular: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def solve_affine(F: GF, A, b) -> AffineSolution | None:
    """All solutions of A x = b as particular + span(basis), or None if inconsistent."""
    M = as_matrix(A)
    b = np.array(b, dtype=np.int64).reshape(-1)
    rows, cols = M.shape
    if b.shape[0] != rows:
        raise DimensionMismatch(f"right-hand side has length {b.shape[0]}, matrix has {rows} rows")
    R, pivots = rref(F, np.hstack([M, b[:, None]]))
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = R[row, cols]
    basis = _basis_from_rref(F, R[:, :cols], pivots, cols)
    return AffineSolution(tuple(int(v) for v in x), tuple(basis))


def enumerate_affine(F: GF, sol: AffineSolution, cap: int) -> list[tuple[int, ...]]:
    """Every point of the affine space; the first basis coefficient varies slowest."""
    d = sol.dim
    if F.q ** d > cap:
        raise SolutionSpaceTooLarge(f"solution space has {F.q}^{d} points, cap is {cap}")
    if d == 0:
        return [sol.particular]
    part = np.array(sol.particular, dtype=np.int64)
    B = np.array(sol.basis, dtype=np.int64)
    coeffs = np.array(list(product(range(F.q), repeat=d)), dtype=np.int64)
    acc = np.broadcast_to(part, (coeffs.shape[0], part.shape[0])).copy()
    for i in range(d):
        acc = F.vadd(acc, F.vmul(coeffs[:, i, None], B[i][None, :]))
    return [tuple(int(v) for v in row) for row in acc]


def matvec(F: GF, A, x) -> tuple[int, ...]:
    M = as_matrix(A)
    x = np.array(x, dtype=np.int64)
    prods = F.vmul(M, x[None, :])
    out = np.zeros(M.shape[0], dtype=np.int64)
    for j in range(M.shape[1]):
        out = F.vadd(out, prods[:, j])
    return tuple(int(v) for v in out)
