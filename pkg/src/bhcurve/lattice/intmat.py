"""Exact integer matrix invariants: determinant, inertia, Artin invariant."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import NotMinusPPower


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if A[i][k]), None)
            if piv is None:
                return 0
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1] if n else 1


def inertia(M: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric matrix.

    Symmetric Gaussian elimination over Q (congruence diagonalization); a zero
    pivot is repaired by adding a later row/column with nonzero coupling.
    """
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    for i in range(n):
        for j in range(n):
            if A[i][j] != A[j][i]:
                raise ValueError("matrix is not symmetric")
    diag = []
    active = list(range(n))
    while active:
        k = active[0]
        if A[k][k] == 0:
            j = next((j for j in active[1:] if A[j][j] != 0), None)
            if j is not None:
                _swap(A, k, j)
            else:
                j = next((j for j in active[1:] if A[k][j] != 0), None)
                if j is None:
                    diag.append(Fraction(0))
                    active.pop(0)
                    continue
                # e_k -> e_k + e_j makes the pivot 2*A[k][j] (diagonals are zero)
                for r in range(n):
                    A[r][k] += A[r][j]
                for c in range(n):
                    A[k][c] += A[j][c]
        piv = A[k][k]
        for i in active[1:]:
            f = A[i][k] / piv
            if f:
                for c in active:
                    A[i][c] -= f * A[k][c]
                for r in active:
                    A[r][i] = A[i][r] if r != i else A[i][i]
        diag.append(piv)
        active.pop(0)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, n - pos - neg


def _swap(A, i, j):
    A[i], A[j] = A[j], A[i]
    for row in A:
        row[i], row[j] = row[j], row[i]


def artin_sigma(det: int, p: int) -> int:
    """sigma with det == -p^(2 sigma), sigma >= 1."""
    if det >= 0:
        raise NotMinusPPower(f"determinant {det} is not negative")
    n, s = -det, 0
    while n % p == 0:
        n //= p
        s += 1
    if n != 1 or s % 2 or s == 0:
        raise NotMinusPPower(f"determinant {det} is not -{p}^(2 sigma)")
    return s // 2
