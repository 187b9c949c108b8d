"""晶体格的显式 𝐀-基与 v=0 处的剩余。

𝐀 是 v=0 处的离散赋值环，剩余域为 Q(t^{1/D})。给定张成 L_ξ 的一组向量，
按赋值选主元做消元即得到 L_ξ 的一组 𝐀-基；向量在这组基下的坐标都在 𝐀
中当且仅当它属于 L_ξ，剩余就是坐标在 v=0 处的值。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..errors import LatticeError, PoleError
from ..halfalg.quotient import WeightVector
from ..ratfun import Scalar, linalg

logger = logging.getLogger(__name__)

Residue = Tuple[Scalar, ...]


def _valuation(x: Scalar) -> int:
    val = x.v_valuation()
    return val if val is not None else 1 << 30


def echelon_basis(vectors: Sequence[Sequence[Scalar]], dim: int) -> List[List[Scalar]]:
    """vectors 的 𝐀-张成的一组 𝐀-基（三角形）。

    每一列选赋值最小的行作主元，其余行减去主元的 𝐀-倍，因此张成的 𝐀-模不变。
    """
    remaining = [list(v) for v in vectors if any(v)]
    basis: List[List[Scalar]] = []
    for col in range(dim):
        live = [r for r in remaining if r[col]]
        if not live:
            continue
        pivot = min(live, key=lambda r: _valuation(r[col]))
        remaining = [r for r in remaining if r is not pivot]
        basis.append(pivot)
        reduced = []
        for row in remaining:
            if row[col]:
                factor = row[col] / pivot[col]
                row = [a - factor * b for a, b in zip(row, pivot)]
            if any(row):
                reduced.append(row)
        remaining = reduced
    return basis


@dataclass
class LatticeSlice:
    """L_ξ 的一组 𝐀-基及其坐标变换。"""

    basis: List[List[Scalar]]
    _inverse: linalg.Matrix

    @classmethod
    def from_basis(cls, basis: Sequence[Sequence[Scalar]]) -> "LatticeSlice":
        rows = [list(b) for b in basis]
        dim = len(rows)
        inverse = linalg.inverse(linalg.transpose(rows, dim)) if dim else []
        return cls(rows, inverse)

    @classmethod
    def spanned_by(cls, vectors: Sequence[Sequence[Scalar]], dim: int) -> "LatticeSlice":
        """由张成向量构造；秩不足 dim 时抛出 LatticeError。"""
        basis = echelon_basis(vectors, dim)
        if len(basis) != dim:
            raise LatticeError(f"张成向量的秩 {len(basis)} 小于权空间维数 {dim}")
        return cls.from_basis(basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, coords: Sequence[Scalar]) -> List[Scalar]:
        if not self.basis:
            return []
        return linalg.matvec(self._inverse, list(coords))

    def contains(self, coords: Sequence[Scalar]) -> bool:
        return all((c.v_valuation() or 0) >= 0 for c in self.coordinates(coords) if c)

    def residue(self, coords: Sequence[Scalar]) -> Residue:
        """v=0 处的剩余。

        Raises:
            LatticeError: 向量不在格中
        """
        out = []
        for c in self.coordinates(coords):
            try:
                out.append(c.eval_v0())
            except PoleError as exc:
                raise LatticeError(f"坐标 {c} 不在 𝐀 中") from exc
        return tuple(out)

    def residue_of(self, vec: WeightVector) -> Residue:
        return self.residue(vec.coords)


def is_zero_residue(r: Residue) -> bool:
    return not any(r)


def unit_ratio(r: Residue, base: Residue) -> Optional[Scalar]:
    """若 r = c·base 且 c 为 ±t^{k/D}，返回 c；否则返回 None。"""
    lead = next((k for k, x in enumerate(base) if x), None)
    if lead is None or not r[lead]:
        return None
    c = r[lead] / base[lead]
    if c.unit_monomial() is None:
        return None
    if any(a != c * b for a, b in zip(r, base)):
        return None
    return c


def proportional(r: Residue, base: Residue) -> Optional[Scalar]:
    """r = c·base 时返回任意非零比例 c。"""
    lead = next((k for k, x in enumerate(base) if x), None)
    if lead is None or not r[lead]:
        return None
    c = r[lead] / base[lead]
    if any(a != c * b for a, b in zip(r, base)):
        return None
    return c


def canonical_sign(r: Residue) -> int:
    """首个非零分量在 t=1 处最低 v 次项的符号。"""
    for x in r:
        if x:
            return x.leading_sign_at_t1() or 1
    return 1
