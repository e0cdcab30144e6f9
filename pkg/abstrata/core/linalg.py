"""
有理数 (Fraction) による小規模密行列の厳密線形代数

Cartan 行列の逆行列と、調和拡張で現れる部分 Cartan 行列の連立方程式を
浮動小数点を一切使わずに解きます。ランクは高々十数程度なので、
素朴な Gauss-Jordan 消去で十分です。
"""

from collections.abc import Sequence
from fractions import Fraction

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def to_matrix(rows: Sequence[Sequence[int | Fraction]]) -> Matrix:
    """整数・有理数の二重リストを Fraction 行列に変換"""
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = range(len(b[0])) if b else range(0)
    return tuple(
        tuple(sum((row[k] * b[k][j] for k in range(len(row))), Fraction(0)) for j in cols)
        for row in a
    )


def matvec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    return tuple(sum((row[k] * v[k] for k in range(len(v))), Fraction(0)) for row in a)


def _eliminate(work: list[list[Fraction]], n: int) -> None:
    """
    拡大行列 work の左 n 列を単位行列まで Gauss-Jordan 消去する

    Raises:
        ZeroDivisionError: 左 n×n 部分が特異な場合
    """
    for i in range(n):
        # ピボット探索（行交換）
        pivot = next((j for j in range(i, n) if work[j][i] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is not invertible")
        if pivot != i:
            work[i], work[pivot] = work[pivot], work[i]

        inv = 1 / work[i][i]
        work[i] = [x * inv for x in work[i]]

        for j in range(n):
            if j != i and work[j][i] != 0:
                factor = work[j][i]
                work[j] = [x - factor * y for x, y in zip(work[j], work[i], strict=True)]


def inverse(a: Matrix) -> Matrix:
    """
    正方行列の厳密な逆行列

    Args:
        a: n×n の Fraction 行列

    Returns:
        a⁻¹

    Raises:
        ZeroDivisionError: a が特異な場合
    """
    n = len(a)
    work = [list(a[i]) + list(identity(n)[i]) for i in range(n)]
    _eliminate(work, n)
    return tuple(tuple(row[n:]) for row in work)


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return tuple(tuple(a[i][j] for j in cols) for i in rows)
