"""晶体基上的可执行性质：正交归一、star 对称、格的范数刻画、串格与串计数。

每个检查返回 CheckReport，反例以字典给出。
"""

from __future__ import annotations

import logging
import random
from typing import Dict, List, Optional, Tuple

from ..cartan import CartanDatum
from ..errors import LatticeError, PoleError
from ..halfalg.quotient import WeightVector
from ..halfalg.strings import istring
from ..halfalg.weightspace import HalfSpace
from ..modules.identities import lattice_norm_ok, power_image_dimension
from ..ratfun import Scalar, in_A
from ..schemas import CheckReport
from .closure import gen_crystal_binf, match_residue
from .graph import CrystalGraph
from .lattice import is_zero_residue

logger = logging.getLogger(__name__)


def ortho_check(graph: CrystalGraph, suite: str = "ortho") -> CheckReport:
    """同权节点的代表元满足 (u_b, u_b′)|_{v=0} = δ_{b,b′}。"""
    checked = 0
    for grade in graph.grades():
        nodes = graph.by_grade(grade)
        for a in nodes:
            for b in nodes:
                checked += 1
                value = a.vector.pair(b.vector)
                try:
                    at0 = value.eval_v0()
                except PoleError:
                    at0 = None
                want = Scalar.one() if a.id == b.id else Scalar.zero()
                if at0 != want:
                    return CheckReport(
                        suite=suite,
                        passed=False,
                        checked=checked,
                        message=f"({a.id}, {b.id}) 在 v=0 处不是 δ",
                        counterexample={"b": a.id, "b'": b.id, "form": str(value)},
                    )
    return CheckReport(suite=suite, passed=True, checked=checked, message=f"{len(graph)} 个节点正交归一")


def star_map(graph: CrystalGraph) -> Dict[str, Tuple[str, Scalar]]:
    """star(u_b) ≡ c · u_{b*} (mod vL(∞))，返回 b → (b*, c)。

    Raises:
        LatticeError: star 把代表元送出 L(∞)，或剩余不是任何节点的单位倍
    """
    space = binf_space(graph)
    out: Dict[str, Tuple[str, Scalar]] = {}
    for node in graph.nodes:
        image = space.star(node.vector)
        residue = graph.lattices[node.grade].residue(image.coords)
        if is_zero_residue(residue):
            raise LatticeError(f"star({node.id}) 的剩余为 0")
        found = match_residue(residue, [(n.id, n.residue) for n in graph.by_grade(node.grade)])
        if found is None:
            raise LatticeError(f"star({node.id}) 的剩余不是 B(∞) 节点")
        out[node.id] = found
    return out


def star_permutation(graph: CrystalGraph) -> Dict[str, str]:
    """star 在 B(∞) 节点上诱导的置换。"""
    return {b: image for b, (image, _) in star_map(graph).items()}


def star_check(datum: CartanDatum, depth: Optional[int] = None, graph: Optional[CrystalGraph] = None) -> CheckReport:
    """star 把 B(∞) 的剩余置换为 B(∞) 的剩余，且这个置换是对合。"""
    graph = graph if graph is not None else gen_crystal_binf(datum, depth)
    try:
        perm = star_permutation(graph)
    except LatticeError as exc:
        return CheckReport(suite="star", passed=False, message=str(exc))
    if len(set(perm.values())) != len(perm):
        return CheckReport(
            suite="star", passed=False, checked=len(perm),
            message="star 在节点上不是单射", counterexample={"permutation": perm},
        )
    for b, image in perm.items():
        if perm[image] != b:
            return CheckReport(
                suite="star", passed=False, checked=len(perm),
                message=f"star 不是对合：{b} → {image} → {perm[image]}",
                counterexample={"b": b, "star": image, "star2": perm[image]},
            )
    moved = sum(1 for b, image in perm.items() if b != image)
    return CheckReport(
        suite="star", passed=True, checked=len(perm),
        message=f"star 置换 {len(perm)} 个节点，移动了 {moved} 个",
    )


def _random_A_scalar(rng: random.Random) -> Scalar:
    """v 的非负次幂、整数系数与 1/(1+v²) 组合出的 𝐀 中元素。"""
    x = Scalar.monomial(rng.randint(-3, 3), rng.randint(0, 2))
    if rng.random() < 0.5:
        x = x + Scalar.monomial(rng.randint(1, 2)) / (Scalar.one() + Scalar.monomial(1, 2))
    return x


def lattice_check(graph: CrystalGraph, seed: int = 0, samples: int = 4) -> CheckReport:
    """格的范数刻画，双向抽查。

    节点代表元的随机 𝐀-组合 x 满足 (x, x) ∈ 𝐀；再加上 v^{-1} u_b 后范数离开 𝐀。
    """
    rng = random.Random(seed)
    checked = 0
    for grade in graph.grades():
        nodes = graph.by_grade(grade)
        for _ in range(samples):
            x = nodes[0].vector.scale(Scalar.zero())
            for node in nodes:
                x = x + node.vector.scale(_random_A_scalar(rng))
            checked += 1
            if not lattice_norm_ok(x):
                return CheckReport(
                    suite="lattice", passed=False, checked=checked,
                    message=f"次数 {grade} 上格向量的范数不在 𝐀 中",
                    counterexample={"grade": list(grade.coords), "norm": str(x.norm())},
                )
            pick = rng.choice(nodes)
            y = x + pick.vector.scale(Scalar.monomial(1, -1))
            checked += 1
            if in_A(y.norm()):
                return CheckReport(
                    suite="lattice", passed=False, checked=checked,
                    message=f"次数 {grade} 上含 v^-1 分量的向量范数仍在 𝐀 中",
                    counterexample={"grade": list(grade.coords), "node": pick.id, "norm": str(y.norm())},
                )
    return CheckReport(suite="lattice", passed=True, checked=checked, message="范数刻画在抽查中成立")


def _string_defect(graph: CrystalGraph, vec: WeightVector, i: int) -> Optional[str]:
    space = vec.space
    lattice = graph.lattices[vec.grade]
    surviving = 0
    for comp in istring(space, i, vec):
        x = comp.vector
        coords = space.raise_(i, comp.n, x.grade, x.coords) if comp.n else list(x.coords)
        if not lattice.contains(coords):
            return f"f_{i + 1}^({comp.n}) 分量不在格中"
        if not is_zero_residue(lattice.residue(coords)):
            surviving += 1
    if surviving != 1:
        return f"{surviving} 个 {i + 1}-串分量在 v=0 处非零"
    return None


def strings_check(graph: CrystalGraph) -> CheckReport:
    """每个节点代表元的 i-串分量都在格中，且恰有一个分量模 vL 非零。"""
    checked = 0
    for node in graph.nodes:
        for i in graph.datum.indices:
            checked += 1
            problem = _string_defect(graph, node.vector, i)
            if problem:
                return CheckReport(
                    suite="strings", passed=False, checked=checked,
                    message=f"节点 {node.id}：{problem}",
                    counterexample={"node": node.id, "i": graph.datum.label(i)},
                )
    return CheckReport(suite="strings", passed=True, checked=checked, message="串分量都在格中")


def string_count_check(graph: CrystalGraph) -> CheckReport:
    """dim (f_i^n M)_ξ = #{b ∈ B_ξ : ε_i(b) ≥ n}。"""
    space = graph.nodes[0].vector.space
    checked = 0
    for grade in graph.grades():
        nodes = graph.by_grade(grade)
        for i in graph.datum.indices:
            n = 1
            while grade.coords[i] + n <= 0:
                checked += 1
                count = sum(1 for b in nodes if graph.eps[b.id][i] >= n)
                dim = power_image_dimension(space, i, n, grade)
                if count != dim:
                    return CheckReport(
                        suite="string-count", passed=False, checked=checked,
                        message=f"次数 {grade}：dim f_{i + 1}^{n}M = {dim}，ε ≥ {n} 的节点 {count} 个",
                        counterexample={"grade": list(grade.coords), "i": graph.datum.label(i),
                                        "n": n, "dim": dim, "count": count},
                    )
                n += 1
    return CheckReport(suite="string-count", passed=True, checked=checked, message="串计数与维数一致")


def binf_space(graph: CrystalGraph) -> HalfSpace:
    space = graph.nodes[0].vector.space
    if not isinstance(space, HalfSpace):
        raise ValueError("需要 B(∞) 的晶体图")
    return space


def node_counts(graph: CrystalGraph) -> List[int]:
    """按高度统计节点数。"""
    out = [0] * (graph.depth + 1)
    for node in graph.nodes:
        out[node.grade.height] += 1
    return out
