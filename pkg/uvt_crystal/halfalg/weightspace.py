"""U⁻ 的权空间：自由单词对极化形式取商。"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from ..cartan import CartanDatum, DominantWeight, RootVector
from ..cartan.oracle import half_dimension
from ..errors import DepthExceededError, OracleUnavailableError, RadicalMismatchError
from ..ratfun import Scalar, linalg
from .element import HalfElt, Word
from .operators import eprime_word, pol_words
from .quotient import GramQuotient, WeightVector, WordSpace
from .strings import istring, tilde_e, tilde_f

logger = logging.getLogger(__name__)

WeightSpaceBasis = GramQuotient


class HalfSpace(WordSpace):
    """U⁻_{v,t}(g)，深度窗口 |ξ| ≤ depth 是截断。"""

    kind = "half"
    truncates = True

    def __init__(self, datum: CartanDatum, depth: Optional[int] = None, cap: Optional[int] = None) -> None:
        cap = cap if cap is not None else datum.depth_cap
        depth = cap if depth is None else depth
        if depth > cap:
            raise DepthExceededError(depth, cap)
        super().__init__(datum, DominantWeight.zero(datum.rank), depth)

    def pair_words(self, w: Word, u: Word) -> Scalar:
        return pol_words(self.datum, w, u)

    def lower_word(self, i: int, word: Word) -> Dict[Word, Scalar]:
        return eprime_word(self.datum, i, word)

    def _check_dimension(self, grade: RootVector, basis: GramQuotient) -> None:
        if not self.datum.is_finite_type:
            return
        try:
            expected = half_dimension(self.datum, grade)
        except OracleUnavailableError:
            return
        if expected != basis.dim:
            raise RadicalMismatchError(
                f"次数 {grade} 的 Gram 商维数 {basis.dim} 与 Kostant 分拆数 {expected} 不一致"
            )

    # ------------------------------------------------------------------
    # HalfElt 与坐标的转换
    # ------------------------------------------------------------------
    def to_vector(self, x: HalfElt, grade: Optional[RootVector] = None) -> WeightVector:
        grade = x.grade if grade is None else grade
        if grade is None:
            raise ValueError("零元素需要显式给出次数")
        return WeightVector(self, grade, tuple(self.coords_of(grade, x.terms)))

    def to_elt(self, vec: WeightVector) -> HalfElt:
        return HalfElt(self.rank, self.words_of(vec.grade, vec.coords))

    def star(self, vec: WeightVector) -> WeightVector:
        return self.to_vector(self.to_elt(vec).star(), vec.grade)


def weight_basis(datum: CartanDatum, xi: RootVector, depth: Optional[int] = None) -> GramQuotient:
    """U⁻_ξ 的 Gram 商。

    Args:
        datum: Cartan 数据
        xi: 次数，必须属于 Q₋
        depth: 深度上限，默认按秩确定

    Raises:
        DepthExceededError: |ξ| 超过上限
        RadicalMismatchError: 维数与 t=1 的 Kostant 分拆数不符
    """
    if not xi.is_negative:
        raise ValueError(f"次数必须属于 Q₋，得到 {xi}")
    cap = depth if depth is not None else datum.depth_cap
    if xi.height > cap:
        raise DepthExceededError(xi.height, cap)
    return HalfSpace(datum, cap, cap=cap).basis(xi)


def kernel_contains(datum: CartanDatum, x: HalfElt) -> bool:
    """x 是否落在形式的根中（即在 U⁻ 中为零）。"""
    if x.is_zero:
        return True
    return weight_basis(datum, x.grade).is_null(x.terms)


def joint_kernel_dimension(space: HalfSpace, grade: RootVector) -> int:
    """∩_i Ker e′_i 在次数 grade 上的维数。"""
    basis = space.basis(grade)
    rows: List[List[Scalar]] = []
    for i in space.datum.indices:
        target = grade.shift(i, 1)
        if not target.is_negative:
            continue
        columns = [space.lower(i, grade, basis.unit(k)) for k in range(basis.dim)]
        rows.extend([list(r) for r in zip(*columns)] if columns else [])
    if not rows:
        return basis.dim
    return basis.dim - linalg.rank(rows)


def star_half(x: HalfElt) -> HalfElt:
    return x.star()


def bar_half(x: HalfElt) -> HalfElt:
    return x.bar()


def istring_half(space: HalfSpace, i: int, x: HalfElt) -> List[Tuple[int, HalfElt]]:
    """x = Σ f_i^{(n)} x_n，e′_i(x_n) = 0；返回 [(n, x_n)]。"""
    if x.is_zero:
        return []
    return [(c.n, space.to_elt(c.vector)) for c in istring(space, i, space.to_vector(x))]


def tilde_f_half(space: HalfSpace, i: int, x: HalfElt) -> HalfElt:
    if x.is_zero:
        return x
    return space.to_elt(tilde_f(space, i, space.to_vector(x)))


def tilde_e_half(space: HalfSpace, i: int, x: HalfElt) -> HalfElt:
    if x.is_zero:
        return x
    out = tilde_e(space, i, space.to_vector(x))
    return HalfElt.zero(space.rank) if out is None else space.to_elt(out)
