"""标量矩阵上的精确线性代数。

所有运算委托给 sympy 的 DomainMatrix（有理函数域上的无分数消元），
这里只负责把不同分母 D 的标量统一到同一个域中。
"""

from __future__ import annotations

from math import lcm
from typing import List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from ..errors import ScalarError
from .scalar import DOMAIN, Scalar

Matrix = List[List[Scalar]]


def _common_den(rows: Sequence[Sequence[Scalar]]) -> int:
    den = 1
    for row in rows:
        for x in row:
            den = lcm(den, x.den)
    return den


def to_domain_matrix(rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> Tuple[DomainMatrix, int]:
    den = _common_den(rows)
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    elements = [[x.lifted(den) for x in row] for row in rows]
    return DomainMatrix(elements, (len(rows), width), DOMAIN), den


def _from_elements(rows, den: int) -> Matrix:
    return [[Scalar._make(x, den) for x in row] for row in rows]


def rref(rows: Sequence[Sequence[Scalar]]) -> Tuple[Matrix, List[int]]:
    """行最简形与主元列。"""
    if not rows or not rows[0]:
        return [list(r) for r in rows], []
    matrix, den = to_domain_matrix(rows)
    reduced, pivots = matrix.rref()
    return _from_elements(reduced.to_list(), den), list(pivots)


def pivot_columns(rows: Sequence[Sequence[Scalar]]) -> List[int]:
    return rref(rows)[1]


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(pivot_columns(rows))


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int) -> Matrix:
    """零空间的一组基（每个元素是长度为 ncols 的向量）。"""
    if ncols == 0:
        return []
    if not rows:
        return [[Scalar.one() if j == k else Scalar.zero() for j in range(ncols)] for k in range(ncols)]
    matrix, den = to_domain_matrix(rows, ncols)
    basis = matrix.nullspace()
    if basis.shape[0] == 0:
        return []
    return _from_elements(basis.to_list(), den)


def inverse(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    if not rows:
        return []
    matrix, den = to_domain_matrix(rows)
    if matrix.shape[0] != matrix.shape[1]:
        raise ScalarError(f"只能对方阵求逆，得到 {matrix.shape}")
    return _from_elements(matrix.inv().to_list(), den)


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> List[Scalar]:
    """解可逆方阵系统 rows · x = rhs。"""
    if not rows:
        return []
    matrix, den = to_domain_matrix([list(r) + [b] for r, b in zip(rows, rhs)])
    n = len(rows)
    a = matrix.extract(list(range(n)), list(range(n)))
    b = matrix.extract(list(range(n)), [n])
    x = a.lu_solve(b)
    return [row[0] for row in _from_elements(x.to_list(), den)]


def matvec(rows: Sequence[Sequence[Scalar]], vec: Sequence[Scalar]) -> List[Scalar]:
    out = []
    for row in rows:
        acc = Scalar.zero()
        for a, b in zip(row, vec):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def dot(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    acc = Scalar.zero()
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def transpose(rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> Matrix:
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return [[rows[i][j] for i in range(len(rows))] for j in range(width)]


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], ncols: int | None = None) -> Matrix:
    """a · b；b 没有行时需要给出列数。"""
    width = ncols if ncols is not None else (len(b[0]) if b else 0)
    columns = transpose(b, width)
    return [[dot(row, col) for col in columns] for row in a]


def identity(n: int) -> Matrix:
    return [[Scalar.one() if i == j else Scalar.zero() for j in range(n)] for i in range(n)]
