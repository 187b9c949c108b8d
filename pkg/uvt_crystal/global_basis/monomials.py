"""分次幂单项式构成的整形式基。

f_{i_1}^{(a_1)}···f_{i_r}^{(a_r)} 都是 bar 不变的；在每个次数上按贪心秩挑出一组基，
候选依次来自晶体节点的生成路径（相邻相同字母合并为分次幂）与长度-字典序枚举。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..cartan import RootVector, words_of_content
from ..crystal.graph import CrystalGraph
from ..crystal.lattice import LatticeSlice, Residue
from ..errors import LatticeError
from ..halfalg.element import Word
from ..halfalg.operators import monomial
from ..halfalg.quotient import WeightVector, WordSpace
from ..ratfun import Scalar, linalg

logger = logging.getLogger(__name__)

#: [(i, a), ...]，表示 f_i^{(a)} 的乘积
Parts = Tuple[Tuple[int, int], ...]


def collapse_word(word: Sequence[int]) -> Parts:
    """把相邻相同字母合并：(1, 1, 2) → ((1, 2), (2, 1))。"""
    parts: List[List[int]] = []
    for i in word:
        if parts and parts[-1][0] == i:
            parts[-1][1] += 1
        else:
            parts.append([i, 1])
    return tuple((i, a) for i, a in parts)


def expand_parts(parts: Parts) -> Word:
    return tuple(i for i, a in parts for _ in range(a))


def monomials_of_content(content: Sequence[int]) -> List[Parts]:
    """给定内容的全部分次幂单项式，按段数再按字典序排列。"""
    seen = {collapse_word(w) for w in words_of_content(content)}
    return sorted(seen, key=lambda p: (len(p), p))


def format_parts(parts: Parts, labels: Optional[Sequence[str]] = None) -> str:
    if not parts:
        return "1"
    out = []
    for i, a in parts:
        name = labels[i] if labels else str(i + 1)
        out.append(f"f{name}" if a == 1 else f"f{name}^({a})")
    return " ".join(out)


def monomial_coords(space: WordSpace, grade: RootVector, parts: Parts) -> List[Scalar]:
    """单项式（作用在最高权向量上）在代表元基下的坐标。"""
    return space.coords_of(grade, monomial(space.datum, parts).terms)


@dataclass
class IntegralBasisSlice:
    """一个次数上的分次幂单项式基。

    Attributes:
        monomials: 入选的单项式
        matrix: 每个单项式在代表元基下的坐标（按行）
        residues: 每个单项式在节点基下的剩余；不在格中时为 None
    """

    grade: RootVector
    monomials: List[Parts] = field(default_factory=list)
    matrix: List[List[Scalar]] = field(default_factory=list, repr=False)
    residues: List[Optional[Residue]] = field(default_factory=list, repr=False)

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def vector(self, space: WordSpace, k: int) -> WeightVector:
        return WeightVector(space, self.grade, tuple(self.matrix[k]))

    def expand(self, vec: WeightVector) -> List[Scalar]:
        """vec 在单项式基下的系数。"""
        if not self.monomials:
            return []
        return linalg.solve(linalg.transpose(self.matrix, len(vec.coords)), list(vec.coords))

    def labels(self, space: WordSpace) -> List[str]:
        names = [space.datum.label(i) for i in space.datum.indices]
        return [format_parts(p, names) for p in self.monomials]


def node_lattice(graph: CrystalGraph, grade: RootVector) -> LatticeSlice:
    """以节点代表元 u_b 为 𝐀-基的格片，顺序同 graph.by_grade。"""
    return LatticeSlice.from_basis([list(n.vector.coords) for n in graph.by_grade(grade)])


def monomial_slice(space: WordSpace, graph: CrystalGraph, grade: RootVector) -> IntegralBasisSlice:
    """按贪心秩选取次数 grade 上的单项式基。

    Raises:
        LatticeError: 全部单项式也张不满权空间
    """

    def build() -> IntegralBasisSlice:
        dim = space.dimension(grade)
        out = IntegralBasisSlice(grade)
        if dim == 0:
            return out
        seeds = [collapse_word(n.gen_word) for n in graph.by_grade(grade)]
        candidates: List[Parts] = []
        for parts in seeds + monomials_of_content(grade.content()):
            if parts not in candidates:
                candidates.append(parts)
        for parts in candidates:
            coords = monomial_coords(space, grade, parts)
            if linalg.rank(out.matrix + [coords]) > len(out.matrix):
                out.monomials.append(parts)
                out.matrix.append(coords)
            if len(out.matrix) == dim:
                break
        if len(out.matrix) != dim:
            raise LatticeError(f"次数 {grade} 上分次幂单项式的秩 {len(out.matrix)} 小于维数 {dim}")
        lattice = node_lattice(graph, grade)
        for coords in out.matrix:
            try:
                out.residues.append(lattice.residue(coords))
            except LatticeError:
                out.residues.append(None)
        logger.debug("次数 %s 的单项式基：%s", grade, out.labels(space))
        return out

    return space.memo(("monomials", grade), build)


def slices(space: WordSpace, graph: CrystalGraph) -> Dict[RootVector, IntegralBasisSlice]:
    return {grade: monomial_slice(space, graph, grade) for grade in graph.grades()}
