"""全局晶体基的三角 bar 修正。

对每个节点 b 从一个 bar 不变的种子 x 出发，在节点基 {u_b′} 下展开：
挑出非对角坐标里 v 赋值最小（且 ≤ 0）的一项 b′，减去 β·G(b′)，
其中 β = c v^a + c v^{-a}（a = 0 时只取 c）是 bar 不变的 Laurent 标量，
恰好消去这一项的最低次系数。全部非对角坐标落入 v𝐀 后，对角坐标
在 v=0 处必须是 ±t^{k/D}，除以它得到 G(b)。

依赖尚未求出的 G(b′) 的节点推迟到下一轮；一轮没有进展时报 ConvergenceError。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ..cartan import RootVector
from ..crystal.graph import CrystalGraph, CrystalNode
from ..crystal.lattice import LatticeSlice
from ..errors import ConvergenceError
from ..halfalg.quotient import WeightVector, WordSpace
from ..ratfun import Scalar
from .monomials import (
    IntegralBasisSlice,
    Parts,
    collapse_word,
    format_parts,
    monomial_coords,
    monomial_slice,
    node_lattice,
)

logger = logging.getLogger(__name__)


class SeedOutcome(str, Enum):
    SOLVED = "solved"
    DEFERRED = "deferred"
    BAD = "bad"


@dataclass
class GlobalBasisElement:
    """G(b) 及其两种展开。

    Attributes:
        vector: 代表元基下的坐标
        monomial_coeffs: 在该次数单项式基下的系数
        node_coords: 在节点基 {u_b′} 下的坐标，对角为 1 + v𝐀，其余在 v𝐀
        seed: 最终被接受的种子名称
    """

    node: str
    grade: RootVector
    vector: WeightVector = field(repr=False)
    monomial_coeffs: List[Scalar] = field(default_factory=list, repr=False)
    node_coords: List[Scalar] = field(default_factory=list, repr=False)
    seed: str = ""
    #: b 在 graph.by_grade(grade) 中的位置
    index: int = 0


@dataclass
class GlobalBasis:
    """一个晶体图上求出的全部 G(b)。"""

    graph: CrystalGraph
    space: WordSpace
    elements: Dict[str, GlobalBasisElement] = field(default_factory=dict)
    slices: Dict[RootVector, IntegralBasisSlice] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, node_id: str) -> GlobalBasisElement:
        return self.elements[node_id]

    def by_grade(self, grade: RootVector) -> List[GlobalBasisElement]:
        return [self.elements[n.id] for n in self.graph.by_grade(grade) if n.id in self.elements]

    def grades(self) -> List[RootVector]:
        return [g for g in self.graph.grades() if any(n.id in self.elements for n in self.graph.by_grade(g))]


def default_degree_bound(depth: int) -> int:
    return 4 * max(1, depth) ** 2


@dataclass
class _Seed:
    name: str
    coords: List[Scalar]


class _GradeSolver:
    """一个次数上的修正过程，共用节点格片与已求出的 G。"""

    def __init__(self, basis: GlobalBasis, grade: RootVector, degree_bound: int) -> None:
        self.basis = basis
        self.grade = grade
        self.degree_bound = degree_bound
        self.nodes: List[CrystalNode] = basis.graph.by_grade(grade)
        self.lattice: LatticeSlice = node_lattice(basis.graph, grade)

    def node_coords(self, coords: List[Scalar]) -> List[Scalar]:
        return self.lattice.coordinates(coords)

    def reduce(self, k: int, seed: _Seed) -> Tuple[SeedOutcome, Optional[List[Scalar]]]:
        x = list(seed.coords)
        while True:
            coords = self.node_coords(x)
            worst: Optional[Tuple[int, int]] = None
            for j, c in enumerate(coords):
                if j == k or not c:
                    continue
                val = c.v_valuation()
                if val <= 0 and (worst is None or val < worst[0]):
                    worst = (val, j)
            if worst is None:
                break
            val, j = worst
            if abs(val) > self.degree_bound:
                raise ConvergenceError(
                    f"{self.nodes[k].id} 的种子 {seed.name} 在 {self.nodes[j].id} 上出现 v^{val}，超出次数界 {self.degree_bound}",
                    {"node": self.nodes[k].id, "seed": seed.name, "valuation": val},
                )
            other = self.basis.elements.get(self.nodes[j].id)
            if other is None:
                return SeedOutcome.DEFERRED, None
            c = coords[j].laurent_coefficients(val)[val]
            beta = c * Scalar.monomial(1, val)
            if val < 0:
                beta = beta + c * Scalar.monomial(1, -val)
            x = [a - beta * b for a, b in zip(x, other.vector.coords)]
        diag = self.node_coords(x)[k]
        if diag.v_valuation() != 0:
            return SeedOutcome.BAD, None
        lead = diag.eval_v0()
        if lead.unit_monomial() is None:
            return SeedOutcome.BAD, None
        return SeedOutcome.SOLVED, [a / lead for a in x]


def _seeds(basis: GlobalBasis, node: CrystalNode, slc: IntegralBasisSlice, reverse: bool) -> List[_Seed]:
    space, graph = basis.space, basis.graph
    grade = node.grade
    first = collapse_word(node.gen_word)
    primary = [_Seed(_parts_name(space, first), monomial_coords(space, grade, first))]
    strings: List[_Seed] = []
    for i in space.datum.indices:
        e = graph.eps[node.id][i]
        if e <= 0:
            continue
        src = node.id
        for _ in range(e):
            src = graph.e_target(src, i)
        lower = basis.elements.get(src) if src is not None else None
        if lower is None:
            continue
        coords = space.raise_(i, e, lower.grade, lower.vector.coords)
        strings.append(_Seed(f"f{space.datum.label(i)}^({e}) G({src})", coords))
    ordered = strings + primary if reverse else primary + strings
    rest = [
        _Seed(_parts_name(space, p), list(row))
        for p, row in zip(slc.monomials, slc.matrix)
        if p != first
    ]
    if reverse:
        rest.reverse()
    return ordered + rest


def _parts_name(space: WordSpace, parts: Parts) -> str:
    names = [space.datum.label(i) for i in space.datum.indices]
    return format_parts(parts, names)


def solve_global_basis(
    space: WordSpace,
    graph: CrystalGraph,
    degree_bound: Optional[int] = None,
    reverse_seeds: bool = False,
) -> GlobalBasis:
    """逐个次数求出 G(b)。

    Args:
        space: U⁻ 的 HalfSpace 或 V(λ) 的 HWModule
        graph: 同一空间上闭包得到的晶体图
        degree_bound: 修正中允许的 |v 次数|，默认 4·depth²
        reverse_seeds: 反转种子优先级（用于唯一性检查）

    Raises:
        ConvergenceError: 某一轮没有进展，或修正超出次数界；partial 中带有已求出的节点
    """
    bound = degree_bound if degree_bound is not None else default_degree_bound(graph.depth)
    basis = GlobalBasis(graph, space)
    for grade in graph.grades():
        slc = monomial_slice(space, graph, grade)
        basis.slices[grade] = slc
        solver = _GradeSolver(basis, grade, bound)
        pending = list(range(len(solver.nodes)))
        logger.info("求解次数 %s 的全局基：%d 个节点", grade, len(pending))
        rounds = 0
        while pending:
            rounds += 1
            progress = False
            deferred: List[int] = []
            for k in pending:
                node = solver.nodes[k]
                outcome = SeedOutcome.BAD
                for seed in _seeds(basis, node, slc, reverse_seeds):
                    try:
                        outcome, coords = solver.reduce(k, seed)
                    except ConvergenceError as exc:
                        exc.partial = {**exc.partial, **_partial(basis)}
                        raise
                    if outcome is SeedOutcome.SOLVED:
                        _record(basis, solver, slc, node, coords, seed.name)
                        progress = True
                        break
                    if outcome is SeedOutcome.DEFERRED:
                        break
                if outcome is SeedOutcome.DEFERRED:
                    deferred.append(k)
                elif outcome is SeedOutcome.BAD:
                    raise ConvergenceError(
                        f"节点 {node.id} 的所有种子在 v=0 处都不是单位倍",
                        _partial(basis),
                    )
            if deferred and not progress:
                raise ConvergenceError(
                    f"次数 {grade} 第 {rounds} 轮没有进展，{len(deferred)} 个节点仍待求",
                    _partial(basis),
                )
            pending = deferred
    return basis


def _record(
    basis: GlobalBasis,
    solver: _GradeSolver,
    slc: IntegralBasisSlice,
    node: CrystalNode,
    coords: List[Scalar],
    seed: str,
) -> None:
    vec = WeightVector(basis.space, node.grade, tuple(coords))
    basis.elements[node.id] = GlobalBasisElement(
        node=node.id,
        grade=node.grade,
        vector=vec,
        monomial_coeffs=slc.expand(vec),
        node_coords=solver.node_coords(coords),
        seed=seed,
        index=solver.nodes.index(node),
    )
    logger.debug("G(%s) 由种子 %s 求出", node.id, seed)


def _partial(basis: GlobalBasis) -> Dict[str, object]:
    rows = [
        {
            "node": b,
            "grade": list(g.grade.coords),
            "monomial_expansion": basis.slices[g.grade].labels(basis.space),
            "coeffs": [str(c) for c in g.monomial_coeffs],
        }
        for b, g in sorted(basis.elements.items(), key=lambda kv: int(kv[0][1:]))
    ]
    return {"solved": [r["node"] for r in rows], "rows": rows}


# ----------------------------------------------------------------------
# 性质
# ----------------------------------------------------------------------
def is_bar_invariant(element: GlobalBasisElement) -> bool:
    vec = element.vector
    return vec.space.bar(vec) == vec


def congruence_ok(element: GlobalBasisElement) -> bool:
    """节点坐标：对角 ∈ 1 + v𝐀，其余 ∈ v𝐀。"""
    k = element.index
    for j, c in enumerate(element.node_coords):
        target = Scalar.one() if j == k else Scalar.zero()
        if not c and not target:
            continue
        val = (c - target).v_valuation()
        if val is not None and val <= 0:
            return False
    return True


def integral_coefficients(element: GlobalBasisElement) -> bool:
    """单项式系数是否都在 ℤ[v^±1, t^±1/D] 中。"""
    for c in element.monomial_coeffs:
        if not c:
            continue
        if not c.is_laurent():
            return False
        if any(q.denominator != 1 for q in c.laurent_terms().values()):
            return False
    return True
