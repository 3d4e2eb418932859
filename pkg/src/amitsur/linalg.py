"""Small exact linear algebra over Q.

Matrices are lists of rows whose entries are ints or Fractions.  Forward
elimination is fraction-free (Bareiss) on the integer-scaled matrix, so
intermediate entries stay integral and bounded by minors.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import SingularElement


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        den = lcm(*(Fraction(v).denominator for v in row)) if row else 1
        out.append([int(Fraction(v) * den) for v in row])
    return out


def echelon(rows) -> tuple[list[list[int]], list[int]]:
    """Bareiss row echelon form; returns the integer rows and pivot columns."""
    A = _integer_rows(rows)
    n_rows = len(A)
    n_cols = len(A[0]) if A else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((k for k in range(r, n_rows) if A[k][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        for k in range(r + 1, n_rows):
            f = A[k][c]
            rowk = A[k]
            rowr = A[r]
            A[k] = [(piv * rowk[t] - f * rowr[t]) // prev for t in range(n_cols)]
        prev = piv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(rows) -> int:
    return len(echelon(rows)[1])


def nullspace(rows, n_cols: int | None = None) -> list[list[Fraction]]:
    """A basis of {v : A v = 0}, one vector per free column."""
    if n_cols is None:
        n_cols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == k)) for i in range(n_cols)] for k in range(n_cols)]
    E, pivots = echelon(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for row_idx in range(len(pivots) - 1, -1, -1):
            c = pivots[row_idx]
            row = E[row_idx]
            s = sum(row[t] * v[t] for t in range(c + 1, n_cols) if row[t])
            v[c] = Fraction(-s) / row[c]
        basis.append(v)
    return basis


def solve(A, b) -> list[Fraction]:
    """The unique solution of A x = b for square A; raises if A is singular."""
    n = len(A)
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    E, pivots = echelon(aug)
    if pivots != list(range(n)):
        raise SingularElement("matrix is singular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        row = E[i]
        s = row[n] - sum(row[t] * x[t] for t in range(i + 1, n))
        x[i] = Fraction(s) / row[i]
    return x
