"""Exact integer linear algebra: Smith normal form and lattice solving.

Used to decide integer solvability of M x = f and to describe the full
solution lattice (particular solution + kernel basis).  Matrices here are
small (tens of rows/columns), so a straightforward SNF with transformation
matrices is plenty.
"""

from __future__ import annotations

from dataclasses import dataclass


def _identity(k: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


@dataclass
class SmithForm:
    """U @ A @ V = S with U, V unimodular and S diagonal (divisibility chain
    is not needed here, only the diagonal-with-zeros shape)."""

    rows: int
    cols: int
    diag: list[int]          # nonzero diagonal entries, length = rank
    u: list[list[int]]       # rows x rows
    v: list[list[int]]       # cols x cols

    @property
    def rank(self) -> int:
        return len(self.diag)


def smith_form(a: list[list[int]]) -> SmithForm:
    """Diagonalize an integer matrix by unimodular row/column operations."""
    m = len(a)
    n = len(a[0]) if m else 0
    s = [row[:] for row in a]
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        s[dst] = [x + q * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):  # col dst += q * col src
        for row in s:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < m and t < n:
        # find a pivot
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        # clear row and column t
        while True:
            progress = False
            for i in range(t + 1, m):
                if s[i][t] != 0:
                    q = s[i][t] // s[t][t]
                    add_row(t, i, -q)
                    if s[i][t] != 0:
                        swap_rows(t, i)
                    progress = True
            for j in range(t + 1, n):
                if s[t][j] != 0:
                    q = s[t][j] // s[t][t]
                    add_col(t, j, -q)
                    if s[t][j] != 0:
                        swap_cols(t, j)
                    progress = True
            if not progress:
                break
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    diag = [s[i][i] for i in range(t) if s[i][i] != 0]
    return SmithForm(m, n, diag, u, v)


class NoSolution(Exception):
    """The integer linear system has no solution."""


def solve_lattice(sf: SmithForm, b: list[int]) -> list[int]:
    """One integer solution x of A x = b given the Smith form of A.

    Raises NoSolution if none exists.
    """
    m, n, r = sf.rows, sf.cols, sf.rank
    y = [sum(sf.u[i][k] * b[k] for k in range(m)) for i in range(m)]
    z = [0] * n
    for i in range(r):
        q, rem = divmod(y[i], sf.diag[i])
        if rem != 0:
            raise NoSolution(f"coordinate {i}: {y[i]} not divisible by {sf.diag[i]}")
        z[i] = q
    for i in range(r, m):
        if y[i] != 0:
            raise NoSolution(f"inconsistent row {i}")
    return [sum(sf.v[i][k] * z[k] for k in range(n)) for i in range(n)]


def kernel_basis(sf: SmithForm) -> list[list[int]]:
    """Integer basis of {x : A x = 0}: the last cols - rank columns of V."""
    n, r = sf.cols, sf.rank
    return [[sf.v[i][k] for i in range(n)] for k in range(r, n)]
