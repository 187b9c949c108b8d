"""从最高权向量出发，在 f̃_i 下逐层闭包得到 B(λ) 与 B(∞)。

L_ξ 是 Σ_i f̃_i L_{ξ+α_i} 的 𝐀-张成，由上一层格片的整组 𝐀-基生成，
与节点代表元的选取无关。第 ξ 层的候选是上一层每个节点代表元的 f̃_i 像，
必须落在 L_ξ 中；比较剩余时与已有节点相差 ±t^{k/D} 的归为同一节点，
否则新建节点。每层节点数必须等于权空间维数，节点剩余构成 L_ξ/vL_ξ 的基。
全部层构造完后再验证 ẽ_i L_ξ ⊂ L_{ξ+α_i}。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..cartan import CartanDatum, DominantWeight, RootVector, grades_up_to
from ..errors import CrystalInvariantError, LatticeError
from ..halfalg.element import Word
from ..halfalg.quotient import WeightVector, WeightedSpace
from ..halfalg.strings import tilde_e, tilde_f
from ..halfalg.weightspace import HalfSpace
from ..modules.highest_weight import HWModule
from ..ratfun import Scalar, linalg
from .graph import CrystalEdge, CrystalGraph, CrystalNode
from .lattice import LatticeSlice, Residue, canonical_sign, is_zero_residue, proportional

logger = logging.getLogger(__name__)


@dataclass
class _Raw:
    grade: RootVector
    gen_word: Word
    vector: WeightVector
    residue: Residue


def match_residue(r: Residue, pool: List[Tuple[int, Residue]]) -> Optional[Tuple[int, Scalar]]:
    """在 pool 中找与 r 成比例的剩余；比例不是单位时抛出 CrystalInvariantError。"""
    for key, base in pool:
        c = proportional(r, base)
        if c is None:
            continue
        if c.unit_monomial() is None:
            raise CrystalInvariantError(
                f"剩余是已有节点的 {c} 倍，不是 ±t^(k/D)",
                {"ratio": str(c)},
            )
        return key, c
    return None


def vector_sign(vec: WeightVector) -> int:
    return canonical_sign(vec.coords)


def close_crystal(space: WeightedSpace, lam: Optional[DominantWeight]) -> CrystalGraph:
    """在 space 的深度窗口内做 f̃ 闭包。

    Raises:
        CrystalInvariantError: 节点数与维数不符、剩余不是单位倍、ẽ 与 f̃ 不互逆等
        LatticeError: 候选向量不在 L_ξ 中，或 ẽ_i 把格向量送出上一层格
    """
    datum = space.datum
    top = space.top
    raws: List[_Raw] = [_Raw(top, (), space.highest(), (Scalar.one(),))]
    lattices: Dict[RootVector, LatticeSlice] = {top: LatticeSlice.from_basis([[Scalar.one()]])}
    levels: Dict[RootVector, List[int]] = {top: [0]}
    raw_edges: List[Tuple[int, int, int, Scalar]] = []

    for grade in grades_up_to(space.rank, space.depth):
        if grade == top:
            continue
        dim = space.dimension(grade)
        if dim == 0:
            continue
        candidates: List[Tuple[int, int, WeightVector]] = []
        for i in datum.indices:
            for idx in levels.get(grade.shift(i, 1), []):
                candidates.append((i, idx, tilde_f(space, i, raws[idx].vector)))
        if not candidates:
            raise CrystalInvariantError(
                f"次数 {grade} 的权空间维数为 {dim}，但没有 f̃ 到达",
                {"grade": list(grade.coords), "dim": dim},
            )
        lattice = _lattice_slice(space, grade, dim, lattices)
        here: List[int] = []
        incoming: Dict[Tuple[int, int], int] = {}
        for i, idx, vec in candidates:
            if not lattice.contains(vec.coords):
                raise LatticeError(f"次数 {grade}：f̃_{i + 1}({raws[idx].gen_word}) 不在 L_ξ 中")
            r = lattice.residue(vec.coords)
            if is_zero_residue(r):
                logger.debug("%s：f̃_%d(%s) ≡ 0", grade, i + 1, raws[idx].gen_word)
                continue
            found = match_residue(r, [(k, raws[k].residue) for k in here])
            if found is None:
                sign = vector_sign(vec)
                if sign < 0:
                    vec = vec.scale(-1)
                    r = tuple(-x for x in r)
                raws.append(_Raw(grade, (i,) + raws[idx].gen_word, vec, r))
                target, unit = len(raws) - 1, Scalar.monomial(sign)
                here.append(target)
                logger.debug("%s：新节点 %s", grade, raws[target].gen_word)
            else:
                target, unit = found
            if (target, i) in incoming:
                raise CrystalInvariantError(
                    f"两个不同节点在 f̃_{i + 1} 下落到同一节点",
                    {"grade": list(grade.coords), "color": i + 1,
                     "sources": [list(raws[incoming[(target, i)]].gen_word), list(raws[idx].gen_word)]},
                )
            incoming[(target, i)] = idx
            raw_edges.append((idx, target, i, unit))
        if len(here) != dim:
            raise CrystalInvariantError(
                f"次数 {grade} 找到 {len(here)} 个节点，权空间维数为 {dim}",
                {"grade": list(grade.coords), "found": len(here), "dim": dim},
            )
        if linalg.rank([list(raws[k].residue) for k in here]) != dim:
            raise CrystalInvariantError(
                f"次数 {grade} 的节点剩余线性相关",
                {"grade": list(grade.coords), "nodes": [list(raws[k].gen_word) for k in here]},
            )
        levels[grade] = here
        lattices[grade] = lattice

    _check_lattice_stable(space, lattices)
    _check_tilde_e(space, raws, raw_edges, lattices)
    graph = _finish(space, lam, raws, raw_edges, lattices)
    logger.info("%s", graph.summary())
    return graph


def _lattice_slice(
    space: WeightedSpace,
    grade: RootVector,
    dim: int,
    lattices: Dict[RootVector, LatticeSlice],
) -> LatticeSlice:
    """L_ξ = Σ_i f̃_i L_{ξ+α_i}，生成元取自上一层格片的 𝐀-基。

    Raises:
        LatticeError: 生成元的秩小于权空间维数
    """
    generators: List[List[Scalar]] = []
    for i in space.datum.indices:
        up = grade.shift(i, 1)
        if up not in lattices:
            continue
        for row in lattices[up].basis:
            generators.append(list(tilde_f(space, i, space.vector(up, row)).coords))
    return LatticeSlice.spanned_by(generators, dim)


def _check_lattice_stable(space: WeightedSpace, lattices: Dict[RootVector, LatticeSlice]) -> None:
    """ẽ_i 把 L_ξ 的每个基向量送入 L_{ξ+α_i}。

    Raises:
        LatticeError: 某个 ẽ_i 像不在上一层格中
    """
    for grade, lattice in lattices.items():
        for i in space.datum.indices:
            up = grade.shift(i, 1)
            if up not in lattices:
                continue
            for row in lattice.basis:
                out = tilde_e(space, i, space.vector(grade, row))
                if out is not None and not lattices[up].contains(out.coords):
                    raise LatticeError(f"次数 {grade}：ẽ_{i + 1} 把格向量送出 L_{{ξ+α_{i + 1}}}")


def _check_tilde_e(
    space: WeightedSpace,
    raws: List[_Raw],
    raw_edges: List[Tuple[int, int, int, Scalar]],
    lattices: Dict[RootVector, LatticeSlice],
) -> None:
    """ẽ_i u_b 的剩余必须是 f̃_i 入边来源的剩余（乘以单位的逆），没有入边时为 0。"""
    into = {(dst, i): (src, unit) for src, dst, i, unit in raw_edges}
    for k, raw in enumerate(raws):
        for i in space.datum.indices:
            up = raw.grade.shift(i, 1)
            out = tilde_e(space, i, raw.vector)
            expected = into.get((k, i))
            if out is None or up not in lattices:
                if expected is not None or (out is not None and not out.is_zero):
                    raise CrystalInvariantError(
                        f"ẽ_{i + 1} 在节点 {raw.gen_word} 处与 f̃ 边不一致",
                        {"gen_word": list(raw.gen_word), "color": i + 1},
                    )
                continue
            r = lattices[up].residue(out.coords)
            if expected is None:
                ok = is_zero_residue(r)
            else:
                src, unit = expected
                ok = r == tuple(x / unit for x in raws[src].residue)
            if not ok:
                raise CrystalInvariantError(
                    f"ẽ_{i + 1} 不是 f̃_{i + 1} 的逆（节点 {raw.gen_word}）",
                    {"gen_word": list(raw.gen_word), "color": i + 1,
                     "expected": None if expected is None else list(raws[expected[0]].gen_word)},
                )


def _finish(
    space: WeightedSpace,
    lam: Optional[DominantWeight],
    raws: List[_Raw],
    raw_edges: List[Tuple[int, int, int, Scalar]],
    lattices: Dict[RootVector, LatticeSlice],
) -> CrystalGraph:
    order = sorted(range(len(raws)), key=lambda k: (raws[k].grade.height, raws[k].grade.content(), raws[k].gen_word))
    ids = {k: f"b{n}" for n, k in enumerate(order)}
    graph = CrystalGraph(space.datum, lam, space.depth, space.complete, lattices=lattices)
    for k in order:
        r = raws[k]
        graph.nodes.append(CrystalNode(ids[k], r.grade, r.gen_word, r.vector, r.residue))
    graph.edges = sorted(
        (CrystalEdge(ids[s], ids[d], i, u) for s, d, i, u in raw_edges),
        key=lambda e: (int(e.source[1:]), e.color, int(e.target[1:])),
    )
    graph.reindex()
    _fill_eps_phi(space, graph)
    return graph


def _chain(graph: CrystalGraph, node_id: str, i: int, forward: bool) -> Tuple[int, str]:
    n, current = 0, node_id
    while True:
        nxt = graph.f_target(current, i) if forward else graph.e_target(current, i)
        if nxt is None:
            return n, current
        n, current = n + 1, nxt


def _fill_eps_phi(space: WeightedSpace, graph: CrystalGraph) -> None:
    """ε 由 ẽ 链长得到；φ = ε + ⟨h_i, wt⟩。完整的模上再与 f̃ 链长核对。"""
    for node in graph.nodes:
        eps, phi = [], []
        for i in space.datum.indices:
            e = _chain(graph, node.id, i, forward=False)[0]
            p = e + space.h(i, node.grade)
            if space.complete and not space.truncates:
                walked = _chain(graph, node.id, i, forward=True)[0]
                if walked != p:
                    raise CrystalInvariantError(
                        f"节点 {node.id} 的 φ_{i + 1} = {walked}，但 ε + ⟨h, wt⟩ = {p}",
                        {"node": node.id, "color": i + 1, "phi": walked, "expected": p},
                    )
            eps.append(e)
            phi.append(p)
        graph.eps[node.id] = tuple(eps)
        graph.phi[node.id] = tuple(phi)


def gen_crystal_module(module: HWModule) -> CrystalGraph:
    """V(λ) 的晶体基 B(λ)（窗口内）。"""
    return close_crystal(module, module.lam)


def gen_crystal_binf(datum: CartanDatum, depth: Optional[int] = None) -> CrystalGraph:
    """U⁻ 的晶体基 B(∞)（|ξ| ≤ depth）。"""
    return close_crystal(HalfSpace(datum, depth), None)
