"""投影 π̄_λ: B(∞) → B(λ) ∪ {0}。

π_λ(P) = P y_λ 把 L(∞) 映到 L(λ)，取剩余后得到晶体之间的映射；
非零纤维与 B(λ) 一一对应，并与 f̃_i、ẽ_i 交换。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..cartan import CartanDatum, DominantWeight
from ..errors import LatticeError
from ..halfalg.weightspace import HalfSpace
from ..modules.highest_weight import HWModule
from ..modules.maps import pi_lambda
from ..ratfun import Scalar
from .closure import gen_crystal_binf, gen_crystal_module, match_residue
from .graph import CrystalGraph, CrystalNode
from .lattice import is_zero_residue

logger = logging.getLogger(__name__)


@dataclass
class Projection:
    """B(∞) 节点编号 → B(λ) 节点编号（None 表示 0）。"""

    binf: CrystalGraph
    target: CrystalGraph
    depth: int
    mapping: Dict[str, Optional[str]] = field(default_factory=dict)
    #: π_λ(u_b) ≡ units[b] · u_{π̄(b)} (mod vL(λ))
    units: Dict[str, Scalar] = field(default_factory=dict)
    defects: List[Dict[str, object]] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.defects

    def image(self, node_id: Optional[str]) -> Optional[str]:
        return None if node_id is None else self.mapping.get(node_id)

    def fiber(self) -> List[str]:
        """π̄_λ 不为零的 B(∞) 节点。"""
        return [b for b, img in self.mapping.items() if img is not None]


def _project_node(space: HalfSpace, node: CrystalNode, module: HWModule, target: CrystalGraph) -> Optional[Tuple[str, Scalar]]:
    image = pi_lambda(module, space.to_elt(node.vector), node.grade)
    if image.is_zero or node.grade not in target.lattices:
        if not image.is_zero:
            raise LatticeError(f"π_λ 的像在次数 {node.grade} 上不为零，但 B(λ) 在此没有节点")
        return None
    residue = target.lattices[node.grade].residue(image.coords)
    if is_zero_residue(residue):
        return None
    pool = [(n.id, n.residue) for n in target.by_grade(node.grade)]
    found = match_residue(residue, pool)
    if found is None:
        raise LatticeError(f"{node.id} 的投影剩余不与 B(λ) 中任何节点成比例")
    return found


def project_binf(
    datum: CartanDatum,
    lam: DominantWeight,
    depth: Optional[int] = None,
) -> Projection:
    """计算 π̄_λ 并核对它与晶体结构的相容性。

    在窗口 |ξ| ≤ depth 内检查：
      1. 节点 1 映到最高权节点；
      2. 非零纤维与 B(λ) 在窗口内的节点一一对应；
      3. π̄_λ(f̃_i b) = f̃_i π̄_λ(b)；
      4. π̄_λ(b) ≠ 0 时 π̄_λ(ẽ_i b) = ẽ_i π̄_λ(b)。

    Raises:
        LatticeError: π_λ 的像离开 L(λ)
        DepthExceededError: 深度超过上限
    """
    module = HWModule(datum, lam, depth)
    window = module.depth
    binf = gen_crystal_binf(datum, window)
    target = gen_crystal_module(module)
    proj = Projection(binf, target, window)
    space = binf.nodes[0].vector.space
    for node in binf.nodes:
        found = _project_node(space, node, module, target)
        proj.mapping[node.id] = None if found is None else found[0]
        if found is not None:
            proj.units[node.id] = found[1]

    top = binf.nodes[0].id
    if proj.mapping[top] != target.nodes[0].id:
        proj.defects.append({"check": "highest", "node": top, "image": proj.mapping[top]})

    images = [img for img in proj.mapping.values() if img is not None]
    expected = sorted(n.id for n in target.nodes if n.grade.height <= window)
    if sorted(images) != expected:
        proj.defects.append({
            "check": "fiber",
            "images": sorted(images),
            "expected": expected,
        })

    for node in binf.nodes:
        img = proj.mapping[node.id]
        for i in datum.indices:
            nxt = binf.f_target(node.id, i)
            if nxt is not None:
                proj.checked += 1
                want = None if img is None else target.f_target(img, i)
                if proj.mapping[nxt] != want:
                    proj.defects.append({
                        "check": "f", "node": node.id, "i": datum.label(i),
                        "projected": proj.mapping[nxt], "expected": want,
                    })
            if img is not None:
                proj.checked += 1
                prev = binf.e_target(node.id, i)
                got = proj.image(prev)
                want = target.e_target(img, i)
                if got != want:
                    proj.defects.append({
                        "check": "e", "node": node.id, "i": datum.label(i),
                        "projected": got, "expected": want,
                    })
    logger.info("π̄_%s：%d 个 B(∞) 节点，纤维 %d 个，%d 处不一致", lam, len(binf), len(images), len(proj.defects))
    return proj
