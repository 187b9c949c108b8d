"""张量积规则：B(λ)⊗B(μ) 上 f̃_i、ẽ_i 的直接计算与组合规则的比较。

直接计算在 V(λ)⊗V(μ) 中进行：格片取 u_b⊗u_b′ 的积基，Kashiwara 算子作用在
积向量上后取剩余，剩余必须是某个积基向量的单位倍或 0。组合规则为

    f̃_i(b₁⊗b₂) = f̃_i b₁ ⊗ b₂   若 φ_i(b₁) > ε_i(b₂)，否则 b₁ ⊗ f̃_i b₂
    ẽ_i(b₁⊗b₂) = ẽ_i b₁ ⊗ b₂   若 φ_i(b₁) ≥ ε_i(b₂)，否则 b₁ ⊗ ẽ_i b₂
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..cartan import CartanDatum, DominantWeight, RootVector, grades_up_to
from ..errors import CrystalInvariantError
from ..halfalg.quotient import WeightVector
from ..halfalg.strings import tilde_e, tilde_f
from ..modules.highest_weight import HWModule
from ..modules.maps import PhiPsi, phi_psi
from ..modules.tensor import TensorModule
from .closure import gen_crystal_module
from .graph import CrystalGraph
from .lattice import LatticeSlice, Residue, is_zero_residue

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]
#: (起点, 终点, 颜色)
PairEdge = Tuple[Pair, Pair, int]


def pair_name(pair: Pair) -> str:
    return f"{pair[0]}⊗{pair[1]}"


@dataclass
class TensorCrystal:
    """V(λ)⊗V(μ) 的积格片与两个分量晶体。"""

    left: CrystalGraph
    right: CrystalGraph
    module: TensorModule
    pairs: Dict[RootVector, List[Pair]] = field(default_factory=dict)
    lattices: Dict[RootVector, LatticeSlice] = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, left: CrystalGraph, right: CrystalGraph, module: TensorModule) -> "TensorCrystal":
        """按次数建立积基 u_b⊗u_b′。

        Raises:
            CrystalInvariantError: 某个次数上积的个数不等于张量权空间的维数
        """
        out = cls(left, right, module)
        for grade in grades_up_to(module.rank, module.depth):
            dim = module.dimension(grade)
            pairs = [
                (n1, n2)
                for n1 in left.nodes
                for n2 in right.nodes
                if n1.grade + n2.grade == grade
            ]
            if len(pairs) != dim:
                raise CrystalInvariantError(
                    f"张量次数 {grade}：{len(pairs)} 个积节点，权空间维数为 {dim}",
                    {"grade": list(grade.coords), "pairs": len(pairs), "dim": dim},
                )
            if not dim:
                continue
            vectors = [list(module.pure(n1.vector, n2.vector).coords) for n1, n2 in pairs]
            out.pairs[grade] = [(n1.id, n2.id) for n1, n2 in pairs]
            out.lattices[grade] = LatticeSlice.from_basis(vectors)
        return out

    def vector(self, pair: Pair) -> WeightVector:
        return self.module.pure(self.left.node(pair[0]).vector, self.right.node(pair[1]).vector)

    def grade_of(self, pair: Pair) -> RootVector:
        return self.left.node(pair[0]).grade + self.right.node(pair[1]).grade

    def all_pairs(self) -> List[Pair]:
        return [p for grade in self.pairs for p in self.pairs[grade]]

    def classify(self, vec: WeightVector) -> Optional[Pair]:
        """vec 的剩余为 0 时返回 None，是单个积基向量的单位倍时返回该积。

        Raises:
            CrystalInvariantError: 剩余不是单个积基向量的单位倍
            LatticeError: 向量不在积格中
        """
        if vec.is_zero or vec.grade not in self.lattices:
            if not vec.is_zero:
                raise CrystalInvariantError(
                    f"次数 {vec.grade} 上的非零向量落在窗口之外",
                    {"grade": list(vec.grade.coords)},
                )
            return None
        residue: Residue = self.lattices[vec.grade].residue(vec.coords)
        if is_zero_residue(residue):
            return None
        support = [k for k, x in enumerate(residue) if x]
        if len(support) != 1 or residue[support[0]].unit_monomial() is None:
            raise CrystalInvariantError(
                f"次数 {vec.grade} 上的剩余不是晶体元素：{[str(x) for x in residue]}",
                {"grade": list(vec.grade.coords), "residue": [str(x) for x in residue]},
            )
        return self.pairs[vec.grade][support[0]]

    def direct(self, i: int, pair: Pair, forward: bool) -> Optional[Pair]:
        vec = self.vector(pair)
        if forward:
            return self.classify(tilde_f(self.module, i, vec))
        out = tilde_e(self.module, i, vec)
        return None if out is None else self.classify(out)

    def rule(self, i: int, pair: Pair, forward: bool) -> Optional[Pair]:
        b1, b2 = pair
        phi1 = self.left.phi[b1][i]
        eps2 = self.right.eps[b2][i]
        if forward:
            if phi1 > eps2:
                nxt = self.left.f_target(b1, i)
                return None if nxt is None else (nxt, b2)
            nxt = self.right.f_target(b2, i)
            return None if nxt is None else (b1, nxt)
        if phi1 >= eps2:
            nxt = self.left.e_target(b1, i)
            return None if nxt is None else (nxt, b2)
        nxt = self.right.e_target(b2, i)
        return None if nxt is None else (b1, nxt)

    def rule_edges(self) -> List[PairEdge]:
        edges = []
        for pair in self.all_pairs():
            for i in self.module.datum.indices:
                nxt = self.rule(i, pair, True)
                if nxt is not None:
                    edges.append((pair, nxt, i))
        return sorted(edges)

    def highest_pairs(self) -> List[Pair]:
        """组合规则下所有 ẽ_i 都为 0 的积。"""
        indices = self.module.datum.indices
        return [p for p in self.all_pairs() if all(self.rule(i, p, False) is None for i in indices)]


@dataclass
class TensorRuleReport:
    lam: DominantWeight
    mu: DominantWeight
    checked: int = 0
    mismatches: List[Dict[str, object]] = field(default_factory=list)
    direct_edges: List[PairEdge] = field(default_factory=list, repr=False)
    rule_edges: List[PairEdge] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.direct_edges == self.rule_edges


def tensor_crystal(datum: CartanDatum, lam: DominantWeight, mu: DominantWeight) -> TensorCrystal:
    """构造 V(λ)、V(μ)、它们的晶体以及张量积的积格片。"""
    left = HWModule(datum, lam)
    right = HWModule(datum, mu)
    if not (left.complete and right.complete):
        raise ValueError(f"张量积规则需要完整的分量模，V({lam}) 或 V({mu}) 只构造到深度上限")
    module = TensorModule(left, right)
    return TensorCrystal.build(gen_crystal_module(left), gen_crystal_module(right), module)


def tensor_rule_check(datum: CartanDatum, lam: DominantWeight, mu: DominantWeight) -> TensorRuleReport:
    """逐个积节点、逐个颜色比较直接计算与组合规则。"""
    crystal = tensor_crystal(datum, lam, mu)
    report = TensorRuleReport(lam, mu)
    for pair in crystal.all_pairs():
        for i in datum.indices:
            for forward in (True, False):
                direct = crystal.direct(i, pair, forward)
                rule = crystal.rule(i, pair, forward)
                report.checked += 1
                if forward:
                    if direct is not None:
                        report.direct_edges.append((pair, direct, i))
                    if rule is not None:
                        report.rule_edges.append((pair, rule, i))
                if direct != rule:
                    report.mismatches.append({
                        "b1": pair[0],
                        "b2": pair[1],
                        "i": datum.label(i),
                        "operator": "f" if forward else "e",
                        "direct": None if direct is None else pair_name(direct),
                        "rule": None if rule is None else pair_name(rule),
                    })
    report.direct_edges.sort()
    report.rule_edges.sort()
    logger.info(
        "张量积规则 %s⊗%s：%d 次比较，%d 处不一致",
        lam, mu, report.checked, len(report.mismatches),
    )
    return report


def phi_crystal_defects(maps: PhiPsi, crystal: TensorCrystal) -> List[Dict[str, object]]:
    """Φ 与 Kashiwara 算子交换：Φ(u_b) 的剩余必须是沿同一路径从 b_λ⊗b_μ 出发的积。"""
    source_graph = gen_crystal_module(maps.source)
    top = (crystal.left.nodes[0].id, crystal.right.nodes[0].id)
    defects: List[Dict[str, object]] = []
    for node in source_graph.nodes:
        if node.grade.height > crystal.module.depth:
            continue
        expected: Optional[Pair] = top
        for i in reversed(node.gen_word):
            expected = crystal.rule(i, expected, True) if expected is not None else None
        got = crystal.classify(maps.phi(node.vector))
        if got != expected:
            defects.append({
                "node": node.id,
                "expected": None if expected is None else pair_name(expected),
                "image": None if got is None else pair_name(got),
            })
    return defects


def phi_psi_crystal(datum: CartanDatum, lam: DominantWeight, mu: DominantWeight) -> Tuple[PhiPsi, TensorCrystal]:
    maps = phi_psi(datum, lam, mu)
    target = maps.target
    crystal = TensorCrystal.build(gen_crystal_module(target.left), gen_crystal_module(target.right), target)
    return maps, crystal
