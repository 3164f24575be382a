"""Exact linear algebra over the integers.

Everything here works on plain lists of Python ints, so there is no overflow
anywhere: Hermite and Smith normal forms with unimodular transforms, left
kernels, lattice membership and canonical residues.  These routines realize
graded pieces of quotient rings as finitely generated abelian groups and act
as the independent cross-check for the Groebner engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if A and B and len(A[0]) != len(B):
        raise ValueError("inner dimensions disagree")
    if not B:
        return [[] for _ in A]
    ncols = len(B[0])
    out = []
    for row in A:
        acc = [0] * ncols
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def matvec_left(v: Sequence[int], A: Sequence[Sequence[int]]) -> list[int]:
    """Row vector times matrix."""
    if len(v) != len(A):
        raise ValueError("dimension mismatch")
    ncols = len(A[0]) if A else 0
    acc = [0] * ncols
    for a, row in zip(v, A):
        if a:
            for j, b in enumerate(row):
                if b:
                    acc[j] += a * b
    return acc


# -- Hermite normal form -------------------------------------------------------


@dataclass
class HermiteForm:
    """Row-style Hermite normal form H = U @ A.

    Pivots are positive, entries above each pivot lie in [0, pivot), pivot
    columns strictly increase, and zero rows sit at the bottom.  U is
    unimodular.
    """

    rows: Matrix
    transform: Matrix
    pivots: list[tuple[int, int]]

    def basis(self) -> Matrix:
        return [self.rows[r] for r, _ in self.pivots]

    def reduce(self, vector: Sequence[int]) -> list[int]:
        """Canonical residue of a vector modulo the row lattice."""
        residual = list(vector)
        for r, c in self.pivots:
            q = residual[c] // self.rows[r][c]
            if q:
                row = self.rows[r]
                residual = [x - q * y for x, y in zip(residual, row)]
        return residual

    def contains(self, vector: Sequence[int]) -> bool:
        return not any(self.reduce(vector))


def hermite_normal_form(A: Sequence[Sequence[int]], ncols: int | None = None) -> HermiteForm:
    m = len(A)
    if ncols is None:
        if not A:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(A[0])
    H = [list(row) for row in A]
    U = identity(m)
    pivots: list[tuple[int, int]] = []
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == m:
            break
        # Euclid the column entries at/below pivot_row down to one survivor.
        while True:
            nz = [i for i in range(pivot_row, m) if H[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(H[i][col]))
            if i0 != pivot_row:
                H[pivot_row], H[i0] = H[i0], H[pivot_row]
                U[pivot_row], U[i0] = U[i0], U[pivot_row]
            if len(nz) == 1:
                break
            pivot = H[pivot_row][col]
            for i in range(pivot_row + 1, m):
                if H[i][col]:
                    q = H[i][col] // pivot
                    if q:
                        H[i] = [x - q * y for x, y in zip(H[i], H[pivot_row])]
                        U[i] = [x - q * y for x, y in zip(U[i], U[pivot_row])]
        if not H[pivot_row][col]:
            continue
        if H[pivot_row][col] < 0:
            H[pivot_row] = [-x for x in H[pivot_row]]
            U[pivot_row] = [-x for x in U[pivot_row]]
        pivot = H[pivot_row][col]
        for i in range(pivot_row):
            q = H[i][col] // pivot
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[pivot_row])]
                U[i] = [x - q * y for x, y in zip(U[i], U[pivot_row])]
        pivots.append((pivot_row, col))
        pivot_row += 1
    return HermiteForm(rows=H, transform=U, pivots=pivots)


def lattice_basis(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Canonical basis (HNF, zero rows dropped) of the lattice the rows span.

    Two row sets span the same lattice exactly when these bases are equal.
    """
    if not rows:
        return []
    return hermite_normal_form(rows, ncols).basis()


def in_lattice(rows: Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    if not rows:
        return not any(vector)
    return hermite_normal_form(rows, len(vector)).contains(vector)


def _solve_against(hf: HermiteForm, nrows: int, v: Sequence[int]) -> list[int] | None:
    residual = list(v)
    coeffs = [0] * nrows
    for r, c in hf.pivots:
        q, rem = divmod(residual[c], hf.rows[r][c])
        if rem:
            return None
        if q:
            residual = [x - q * y for x, y in zip(residual, hf.rows[r])]
        coeffs[r] = q
    if any(residual):
        return None
    x = [0] * nrows
    for r, q in enumerate(coeffs):
        if q:
            x = [a + q * b for a, b in zip(x, hf.transform[r])]
    return x


def solve_left(A: Sequence[Sequence[int]], v: Sequence[int]) -> list[int] | None:
    """An integer row vector x with x @ A = v, or None if none exists."""
    if not A:
        return [] if not any(v) else None
    hf = hermite_normal_form(A)
    return _solve_against(hf, len(A), v)


def solve_left_many(
    A: Sequence[Sequence[int]], vectors: Sequence[Sequence[int]]
) -> list[list[int] | None]:
    """Like solve_left for several vectors, factoring A only once."""
    if not A:
        return [[] if not any(v) else None for v in vectors]
    hf = hermite_normal_form(A)
    return [_solve_against(hf, len(A), v) for v in vectors]


def left_kernel(A: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Basis rows of the lattice of integer vectors x with x @ A = 0."""
    if not A:
        return []
    hf = hermite_normal_form(A, ncols)
    pivot_rows = {r for r, _ in hf.pivots}
    return [hf.transform[i] for i in range(len(A)) if i not in pivot_rows]


# -- Smith normal form ---------------------------------------------------------


@dataclass
class SmithNormalForm:
    """Diagonalization U @ A @ V = D by unimodular U and V.

    ``diagonal`` lists the diagonal of D (nonnegative, each dividing the
    next among the nonzero entries).  The tracked inverses certify
    unimodularity exactly: U @ Uinv = I and V @ Vinv = I over the integers.
    """

    nrows: int
    ncols: int
    U: Matrix
    V: Matrix
    Uinv: Matrix
    Vinv: Matrix
    diagonal: list[int]

    def full_diagonal_matrix(self) -> Matrix:
        D = [[0] * self.ncols for _ in range(self.nrows)]
        for i, d in enumerate(self.diagonal):
            D[i][i] = d
        return D

    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    def verify(self, A: Sequence[Sequence[int]]) -> None:
        """Raise AssertionError unless all structural guarantees hold."""
        D = self.full_diagonal_matrix()
        if matmul(matmul(self.U, [list(r) for r in A]), self.V) != D:
            raise AssertionError("U @ A @ V != D")
        if matmul(self.U, self.Uinv) != identity(self.nrows):
            raise AssertionError("U is not unimodular")
        if matmul(self.V, self.Vinv) != identity(self.ncols):
            raise AssertionError("V is not unimodular")
        nonzero = [d for d in self.diagonal if d]
        for a, b in zip(nonzero, nonzero[1:]):
            if b % a:
                raise AssertionError("diagonal is not a divisibility chain")
        if any(d < 0 for d in self.diagonal):
            raise AssertionError("diagonal entries must be nonnegative")


def smith_normal_form(A: Sequence[Sequence[int]], ncols: int | None = None) -> SmithNormalForm:
    m = len(A)
    if ncols is None:
        if not A:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(A[0])
    n = ncols
    D = [list(row) for row in A]
    U, Uinv = identity(m), identity(m)
    V, Vinv = identity(n), identity(n)

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def row_addmul(i, j, q):
        # row_i += q * row_j; Uinv picks up the inverse column operation
        D[i] = [x + q * y for x, y in zip(D[i], D[j])]
        U[i] = [x + q * y for x, y in zip(U[i], U[j])]
        for row in Uinv:
            row[j] -= q * row[i]

    def row_negate(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    def col_swap(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def col_addmul(j, i, q):
        # col_j += q * col_i
        for row in D:
            row[j] += q * row[i]
        for row in V:
            row[j] += q * row[i]
        Vinv[i] = [x - q * y for x, y in zip(Vinv[i], Vinv[j])]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = D[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        while True:
            for i in range(t + 1, m):
                while D[i][t]:
                    q = D[i][t] // D[t][t]
                    if q:
                        row_addmul(i, t, -q)
                    if D[i][t]:
                        row_swap(t, i)
            for j in range(t + 1, n):
                while D[t][j]:
                    q = D[t][j] // D[t][t]
                    if q:
                        col_addmul(j, t, -q)
                    if D[t][j]:
                        col_swap(t, j)
            if all(D[i][t] == 0 for i in range(t + 1, m)):
                break
        # Enforce that the pivot divides every remaining entry.
        d = D[t][t]
        culprit = None
        for i in range(t + 1, m):
            if any(x % d for x in D[i][t + 1:]):
                culprit = i
                break
        if culprit is not None:
            row_addmul(t, culprit, 1)
            continue
        if d < 0:
            row_negate(t)
        t += 1

    diagonal = [D[i][i] for i in range(min(m, n))]
    return SmithNormalForm(
        nrows=m, ncols=n, U=U, V=V, Uinv=Uinv, Vinv=Vinv, diagonal=diagonal
    )


# -- generic determinant ---------------------------------------------------------


def determinant_expansion(rows: Sequence[Sequence]):
    """Determinant by Laplace expansion with memoization on column subsets.

    Works over any commutative ring whose elements support +, -, * and
    truth-testing for zero; intended for small matrices.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def minor(cols: tuple) -> object:
        i = n - len(cols)
        if not cols:
            return 1
        acc = None
        sign = 1
        for k, j in enumerate(cols):
            entry = rows[i][j]
            if entry:
                rest = cols[:k] + cols[k + 1:]
                contribution = entry * minor(rest)
                if sign < 0:
                    contribution = -contribution
                acc = contribution if acc is None else acc + contribution
            sign = -sign
        if acc is None:
            return 0
        return acc

    return minor(tuple(range(n)))
