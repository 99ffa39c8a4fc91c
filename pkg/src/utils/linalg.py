"""
Exact dense linear algebra over any field whose elements support + - * / and
``== 0`` (Fraction, CScalar). Matrices are lists of rows.
"""
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.errors import DomainError

Matrix = List[list]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def to_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[x if not isinstance(x, int) else Fraction(x) for x in row] for row in rows]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x != 0]
        out_row = []
        for col in bt:
            acc = Fraction(0)
            for k, x in nz:
                y = col[k]
                if y != 0:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def vecmat(v: Sequence, m: Matrix) -> list:
    """Row vector times matrix."""
    cols = len(m[0]) if m else 0
    out = [Fraction(0)] * cols
    for x, row in zip(v, m):
        if x == 0:
            continue
        for j, y in enumerate(row):
            if y != 0:
                out[j] = out[j] + x * y
    return out


def matvec(m: Matrix, v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v) if x != 0 and y != 0), Fraction(0)) for row in m]


def scale(m: Matrix, s) -> Matrix:
    return [[x * s for x in row] for row in m]


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero_matrix(m: Matrix) -> bool:
    return all(x == 0 for row in m for x in row)


def row_echelon(m: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    a = to_fraction_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    return len(row_echelon(m)[1])


def nullspace(m: Matrix) -> Matrix:
    """Basis (as rows) of {x : m x = 0}."""
    if not m:
        return []
    cols = len(m[0])
    rref, pivots = row_echelon(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * cols
        x[fcol] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -rref[r][fcol]
        basis.append(x)
    return basis


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    rref, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise DomainError("Matrix is singular")
    return [row[n:] for row in rref]


def det(m: Matrix):
    """Determinant by Gaussian elimination."""
    n = len(m)
    a = to_fraction_matrix(m)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        pivot = a[c][c]
        result = result * pivot
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / pivot
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def det3(m: Matrix):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def adjugate_transpose3(m: Matrix) -> Matrix:
    """c(m) = det(m) * transpose(m)^-1, computed without division."""
    cof = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != i]
            cols = [c for c in range(3) if c != j]
            minor = (m[rows[0]][cols[0]] * m[rows[1]][cols[1]]
                     - m[rows[0]][cols[1]] * m[rows[1]][cols[0]])
            cof[i][j] = minor if (i + j) % 2 == 0 else -minor
    return cof


def is_integral(m: Matrix) -> bool:
    return all(Fraction(x).denominator == 1 for row in m for x in row)
