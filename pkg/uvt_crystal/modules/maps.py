"""U⁻ 到 V(λ) 的投影 π_λ，以及 V(λ+μ) 与 V(λ)⊗V(μ) 之间的 Φ_{λ,μ}、Ψ_{λ,μ}。"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..cartan import CartanDatum, DominantWeight, RootVector, grades_up_to
from ..halfalg.element import HalfElt
from ..halfalg.quotient import WeightVector
from ..ratfun import Scalar, linalg
from .highest_weight import HWModule
from .tensor import TensorModule

logger = logging.getLogger(__name__)


def pi_lambda(module: HWModule, x: HalfElt, grade: Optional[RootVector] = None) -> WeightVector:
    """π_λ(P) = P y_λ。

    Args:
        module: V(λ)
        x: U⁻ 中的元素（自由单词上的组合）
        grade: x 为零时必须给出次数

    Raises:
        DepthExceededError: 次数超出不完整模的深度窗口
    """
    grade = x.grade if grade is None else grade
    if grade is None:
        raise ValueError("零元素需要显式给出次数")
    return WeightVector(module, grade, tuple(module.coords_of(grade, x.terms)))


def _star_matrix(rows: linalg.Matrix) -> linalg.Matrix:
    return [[c.star() for c in row] for row in rows]


@dataclass
class PhiPsi:
    """Φ: V(λ+μ) → V(λ)⊗V(μ) 与 Ψ: V(λ)⊗V(μ) → V(λ+μ) 的逐权矩阵。

    Φ 由 P y_{λ+μ} ↦ P(y_λ⊗y_μ) 在代表元单词上确定；Ψ 取 Φ 关于极化形式的伴随，
    (Ψx, y) = (x, Φy)。
    """

    source: HWModule
    target: TensorModule
    _phi: Dict[RootVector, linalg.Matrix] = field(default_factory=dict, repr=False)
    _psi: Dict[RootVector, linalg.Matrix] = field(default_factory=dict, repr=False)

    def phi_matrix(self, grade: RootVector) -> linalg.Matrix:
        if grade not in self._phi:
            basis = self.source.basis(grade)
            columns: List[List[Scalar]] = []
            for word in basis.reps:
                vec = self.target.highest()
                for i in reversed(word):
                    vec = self.target.apply_raise(i, vec, 1)
                columns.append(list(vec.coords))
            rows = self.target.dimension(grade)
            self._phi[grade] = linalg.transpose(columns, rows) if columns else [[] for _ in range(rows)]
        return self._phi[grade]

    def psi_matrix(self, grade: RootVector) -> linalg.Matrix:
        """Ψ = star((G_M^T)^{-1} Φ^T G_T^T)，G 为两边代表元上的双线性 Gram 矩阵。"""
        if grade not in self._psi:
            phi = self.phi_matrix(grade)
            g_m = self.source.basis(grade).gram
            g_t = self.target.basis(grade).gram
            m, n = len(g_m), len(g_t)
            if not m or not n:
                self._psi[grade] = [[Scalar.zero()] * n for _ in range(m)]
            else:
                left = linalg.inverse(linalg.transpose(g_m, m))
                middle = linalg.matmul(linalg.transpose(phi, m), linalg.transpose(g_t, n), n)
                self._psi[grade] = _star_matrix(linalg.matmul(left, middle, n))
        return self._psi[grade]

    def phi(self, vec: WeightVector) -> WeightVector:
        coords = linalg.matvec(self.phi_matrix(vec.grade), list(vec.coords))
        return WeightVector(self.target, vec.grade, tuple(coords))

    def psi(self, vec: WeightVector) -> WeightVector:
        coords = linalg.matvec(self.psi_matrix(vec.grade), list(vec.coords))
        return WeightVector(self.source, vec.grade, tuple(coords))

    def grades(self) -> List[RootVector]:
        """两边窗口都覆盖、V(λ+μ) 非零的次数。"""
        depth = min(self.source.depth, self.target.depth)
        return [g for g in grades_up_to(self.source.rank, depth) if self.source.dimension(g)]

    def inverse_defect(self, grade: RootVector) -> Optional[Tuple[int, int]]:
        """Ψ∘Φ 与单位阵第一个不同的位置；一致时返回 None。"""
        dim = self.source.dimension(grade)
        product = linalg.matmul(self.psi_matrix(grade), self.phi_matrix(grade), dim)
        ident = linalg.identity(dim)
        for r in range(dim):
            for c in range(dim):
                if product[r][c] != ident[r][c]:
                    return (r, c)
        return None


def phi_psi(
    datum: CartanDatum,
    lam: DominantWeight,
    mu: DominantWeight,
    depth: Optional[int] = None,
) -> PhiPsi:
    """构造 Φ_{λ,μ} 与 Ψ_{λ,μ}。

    Raises:
        DepthExceededError: 深度超过上限
    """
    left = HWModule(datum, lam)
    right = HWModule(datum, mu)
    source = HWModule(datum, lam + mu, depth)
    target = TensorModule(left, right)
    logger.info("Φ/Ψ：V(%s) → V(%s)⊗V(%s)，深度 %d", lam + mu, lam, mu, source.depth)
    return PhiPsi(source, target)
