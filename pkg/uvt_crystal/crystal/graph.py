"""晶体图：节点是 L/vL 中的剩余线，边是 f̃_i。"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from ..cartan import CartanDatum, DominantWeight, RootVector
from ..halfalg.element import Word
from ..halfalg.quotient import WeightVector
from ..ratfun import Scalar
from .lattice import LatticeSlice, Residue


@dataclass
class CrystalNode:
    """一个晶体基元素。

    Attributes:
        id: 规范排序后的编号 "b0"、"b1"……
        grade: ξ（权为 λ+ξ）
        gen_word: 生成路径，f̃_{i_1}···f̃_{i_l} 按作用的逆序记录（首字母最后作用）
        vector: 格中的代表元
        residue: 代表元在所在格片基下的剩余
    """

    id: str
    grade: RootVector
    gen_word: Word
    vector: WeightVector = field(repr=False, compare=False)
    residue: Residue = field(repr=False, compare=False)


@dataclass(frozen=True)
class CrystalEdge:
    """source →_i target，f̃_i u_source ≡ unit · u_target (mod vL)。"""

    source: str
    target: str
    color: int
    unit: Scalar = Scalar.one()


@dataclass
class CrystalGraph:
    """B(λ) 或 B(∞) 在深度窗口内的部分。

    Attributes:
        lam: 最高权；B(∞) 时为 None
        complete: 窗口覆盖了整个晶体
        eps / phi: 节点编号 → 每个指标的 ε_i、φ_i
        lattices: 每个次数的格片
    """

    datum: CartanDatum
    lam: Optional[DominantWeight]
    depth: int
    complete: bool
    nodes: List[CrystalNode] = field(default_factory=list)
    edges: List[CrystalEdge] = field(default_factory=list)
    eps: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    phi: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    lattices: Dict[RootVector, LatticeSlice] = field(default_factory=dict, repr=False)
    _out: Dict[Tuple[str, int], CrystalEdge] = field(default_factory=dict, init=False, repr=False, compare=False)
    _in: Dict[Tuple[str, int], CrystalEdge] = field(default_factory=dict, init=False, repr=False, compare=False)
    _ids: Dict[str, CrystalNode] = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def is_binf(self) -> bool:
        return self.lam is None

    def __len__(self) -> int:
        return len(self.nodes)

    def reindex(self) -> None:
        """节点或边改动后重建 (节点, 颜色) 索引。"""
        self._out = {(e.source, e.color): e for e in self.edges}
        self._in = {(e.target, e.color): e for e in self.edges}
        self._ids = {n.id: n for n in self.nodes}

    def _fresh(self) -> None:
        if len(self._out) != len(self.edges) or len(self._ids) != len(self.nodes):
            self.reindex()

    def node(self, node_id: str) -> CrystalNode:
        self._fresh()
        return self._ids[node_id]

    def by_grade(self, grade: RootVector) -> List[CrystalNode]:
        return [n for n in self.nodes if n.grade == grade]

    def grades(self) -> List[RootVector]:
        seen: List[RootVector] = []
        for n in self.nodes:
            if n.grade not in seen:
                seen.append(n.grade)
        return seen

    def f_edge(self, node_id: str, i: int) -> Optional[CrystalEdge]:
        self._fresh()
        return self._out.get((node_id, i))

    def e_edge(self, node_id: str, i: int) -> Optional[CrystalEdge]:
        self._fresh()
        return self._in.get((node_id, i))

    def f_target(self, node_id: str, i: int) -> Optional[str]:
        edge = self.f_edge(node_id, i)
        return edge.target if edge else None

    def e_target(self, node_id: str, i: int) -> Optional[str]:
        edge = self.e_edge(node_id, i)
        return edge.source if edge else None

    def highest_nodes(self) -> Iterator[CrystalNode]:
        """所有 ẽ_i 都为 0 的节点。"""
        for n in self.nodes:
            if all(self.e_edge(n.id, i) is None for i in self.datum.indices):
                yield n

    def colored_edges(self) -> List[Tuple[str, str, int]]:
        return sorted((e.source, e.target, e.color) for e in self.edges)

    def summary(self) -> str:
        name = "B(∞)" if self.is_binf else f"B({self.lam})"
        return f"{name}：{len(self.nodes)} 个节点，{len(self.edges)} 条边，深度 {self.depth}"

    def path_unit(self, node_id: str) -> Scalar:
        """u_b = c · f̃_{i_1}···f̃_{i_l} 1 中的单位 c，沿生成路径累乘边上单位的逆。"""
        node = self.node(node_id)
        current = self.nodes[0].id
        unit = Scalar.one()
        for i in reversed(node.gen_word):
            edge = self.f_edge(current, i)
            if edge is None:
                raise KeyError(f"{node_id} 的生成路径在 {current} 处中断")
            unit = unit * edge.unit.inverse()
            current = edge.target
        return unit
