"""全局基的可执行性质与 t=1 对照。

性质：bar 不变、模 vL 同余于节点、重新选种子后不变、与 star 相容、
分次幂理想的成员判定与 ε_i 一致、π_λ(G(b)) = c·G_λ(π̄_λ b)。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..cartan import CartanDatum, DominantWeight
from ..crystal.checks import binf_space, star_map
from ..crystal.closure import gen_crystal_binf, gen_crystal_module
from ..crystal.projection import project_binf
from ..errors import ConvergenceError, LatticeError
from ..halfalg.strings import istring
from ..modules.highest_weight import HWModule
from ..modules.maps import pi_lambda
from ..schemas import CheckReport
from .oracle import OneParamHalf, scalar_at_t1
from .solver import (
    GlobalBasis,
    GlobalBasisElement,
    congruence_ok,
    integral_coefficients,
    is_bar_invariant,
    solve_global_basis,
)

logger = logging.getLogger(__name__)


def global_basis(
    datum: CartanDatum,
    depth: Optional[int] = None,
    degree_bound: Optional[int] = None,
    reverse_seeds: bool = False,
) -> GlobalBasis:
    """U⁻ 在 |ξ| ≤ depth 内的 {G(b)}。"""
    graph = gen_crystal_binf(datum, depth)
    return solve_global_basis(binf_space(graph), graph, degree_bound, reverse_seeds)


def module_global_basis(
    datum: CartanDatum,
    lam: DominantWeight,
    depth: Optional[int] = None,
    degree_bound: Optional[int] = None,
) -> GlobalBasis:
    """V(λ) 的 {G_λ(b)}，直接在模中求解。"""
    module = HWModule(datum, lam, depth)
    return solve_global_basis(module, gen_crystal_module(module), degree_bound)


def divided_power_membership(element: GlobalBasisElement, i: int, n: int) -> bool:
    """G ∈ f_i^n U⁻ 当且仅当 i-串分解中 n 以下的分量为零。"""
    if n <= 0:
        return True
    return all(comp.n >= n for comp in istring(element.vector.space, i, element.vector))


# ----------------------------------------------------------------------
# 逐项缺陷
# ----------------------------------------------------------------------
def basic_defects(basis: GlobalBasis) -> List[Dict[str, object]]:
    """bar 不变与同余。"""
    out: List[Dict[str, object]] = []
    for b, g in basis.elements.items():
        if not is_bar_invariant(g):
            out.append({"check": "bar", "node": b})
        if not congruence_ok(g):
            out.append({"check": "congruence", "node": b, "node_coords": [str(c) for c in g.node_coords]})
    return out


def integrality_report(basis: GlobalBasis) -> Dict[str, bool]:
    """各 G(b) 的单项式系数是否为整 Laurent 多项式（只报告，不判失败）。"""
    return {b: integral_coefficients(g) for b, g in basis.elements.items()}


def uniqueness_defects(basis: GlobalBasis, degree_bound: Optional[int] = None) -> List[Dict[str, object]]:
    """反转种子优先级重新求解，结果必须逐个相同。"""
    again = solve_global_basis(basis.space, basis.graph, degree_bound, reverse_seeds=True)
    out = []
    for b, g in basis.elements.items():
        other = again.elements.get(b)
        if other is None or other.vector != g.vector:
            out.append({
                "check": "uniqueness", "node": b,
                "seed": g.seed, "reseed": None if other is None else other.seed,
            })
    return out


def star_defects(basis: GlobalBasis) -> List[Dict[str, object]]:
    """star(G(b)) = c·G(b*)，c 为 star(u_b) ≡ c·u_{b*} 中的单位。"""
    space = binf_space(basis.graph)
    out = []
    for b, (image, unit) in star_map(basis.graph).items():
        if b not in basis.elements or image not in basis.elements:
            continue
        lhs = space.star(basis[b].vector)
        rhs = basis[image].vector.scale(unit)
        if lhs != rhs:
            out.append({"check": "star", "node": b, "star": image, "unit": str(unit)})
    return out


def membership_defects(basis: GlobalBasis) -> List[Dict[str, object]]:
    """G(b) ∈ f_i^n U⁻ ⟺ ε_i(b) ≥ n。"""
    out = []
    datum = basis.graph.datum
    for b, g in basis.elements.items():
        for i in datum.indices:
            eps = basis.graph.eps[b][i]
            for n in range(1, eps + 2):
                if g.grade.coords[i] + n > 0:
                    break
                got = divided_power_membership(g, i, n)
                if got != (eps >= n):
                    out.append({"check": "membership", "node": b, "i": datum.label(i), "n": n, "eps": eps})
    return out


def projection_defects(
    datum: CartanDatum,
    lam: DominantWeight,
    depth: Optional[int] = None,
    degree_bound: Optional[int] = None,
) -> List[Dict[str, object]]:
    """π_λ(G(b)) = c·G_λ(π̄_λ b)；π̄_λ b = 0 时 π_λ(G(b)) = 0。"""
    proj = project_binf(datum, lam, depth)
    binf = solve_global_basis(binf_space(proj.binf), proj.binf, degree_bound)
    module = proj.target.nodes[0].vector.space
    lowered = solve_global_basis(module, proj.target, degree_bound)
    half = binf_space(proj.binf)
    out: List[Dict[str, object]] = [dict(d, check="projection") for d in proj.defects]
    for b, g in binf.elements.items():
        image = pi_lambda(module, half.to_elt(g.vector), g.grade)
        target = proj.mapping.get(b)
        if target is None:
            if not image.is_zero:
                out.append({"check": "projection-zero", "node": b})
            continue
        want = lowered[target].vector.scale(proj.units[b])
        if image != want:
            out.append({"check": "projection", "node": b, "image": target, "unit": str(proj.units[b])})
    return out


# ----------------------------------------------------------------------
# t=1 对照
# ----------------------------------------------------------------------
@dataclass
class T1Report:
    """G(b)|_{t=1} 与单参数规范基的匹配。"""

    matches: Dict[str, str] = field(default_factory=dict)
    defects: List[Dict[str, object]] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.defects


def t1_compare(basis: GlobalBasis, oracle: Optional[OneParamHalf] = None) -> T1Report:
    """逐个次数把 G(b) 代入 t=1，与单参数规范基逐个匹配（差一个符号）。

    Raises:
        OracleUnavailableError: 对照在某个次数上无法给出完整的规范基
    """
    space = basis.space
    oracle = oracle if oracle is not None else OneParamHalf(space.datum)
    report = T1Report()
    for grade in basis.grades():
        reference = oracle.canonical_basis(grade)
        used: Dict[int, str] = {}
        for g in basis.by_grade(grade):
            report.checked += 1
            words = {w: scalar_at_t1(c) for w, c in space.words_of(grade, g.vector.coords).items()}
            coords = oracle.coords(grade, words)
            neg = tuple(-c for c in coords)
            hits = [k for k, e in enumerate(reference.elements) if e.coords in (coords, neg)]
            if len(hits) != 1:
                report.defects.append({"node": g.node, "grade": list(grade.coords), "hits": len(hits)})
                continue
            k = hits[0]
            if k in used:
                report.defects.append({"node": g.node, "clash": used[k]})
                continue
            used[k] = g.node
            report.matches[g.node] = reference.elements[k].label
    logger.info("t=1 对照：%d 个元素，%d 处不匹配", report.checked, len(report.defects))
    return report


# ----------------------------------------------------------------------
# 套件入口
# ----------------------------------------------------------------------
def default_projection_weight(datum: CartanDatum) -> Optional[DominantWeight]:
    """ρ = Σ Λ_i；GCM 退化且没有配对值时返回 None。"""
    if not datum.has_pairings:
        return None
    return DominantWeight(tuple(1 for _ in datum.indices))


def global_check(
    datum: CartanDatum,
    depth: Optional[int] = None,
    lam: Optional[DominantWeight] = None,
    degree_bound: Optional[int] = None,
) -> CheckReport:
    """bar、同余、唯一性、star、分次幂成员与投影相容性。"""
    try:
        basis = global_basis(datum, depth, degree_bound)
    except ConvergenceError as exc:
        return CheckReport(suite="global", passed=False, message=str(exc), counterexample=exc.partial)
    defects = basic_defects(basis) + uniqueness_defects(basis, degree_bound)
    defects += star_defects(basis) + membership_defects(basis)
    lam = lam if lam is not None else default_projection_weight(datum)
    if lam is not None:
        try:
            defects += projection_defects(datum, lam, basis.graph.depth, degree_bound)
        except (ConvergenceError, LatticeError) as exc:
            defects.append({"check": "projection", "error": str(exc)})
    integral = integrality_report(basis)
    loose = sorted(b for b, ok in integral.items() if not ok)
    if defects:
        return CheckReport(
            suite="global", passed=False, checked=len(basis),
            message=f"{len(defects)} 处不成立", counterexample={"defects": defects[:10]},
        )
    message = f"{len(basis)} 个 G(b) 满足全部性质"
    if loose:
        message += f"；{len(loose)} 个的单项式系数不是整 Laurent 多项式"
    return CheckReport(suite="global", passed=True, checked=len(basis), message=message)


def t1_check(datum: CartanDatum, depth: Optional[int] = None, degree_bound: Optional[int] = None) -> CheckReport:
    try:
        basis = global_basis(datum, depth, degree_bound)
        report = t1_compare(basis)
    except ConvergenceError as exc:
        return CheckReport(suite="t1", passed=False, message=str(exc), counterexample=exc.partial)
    if not report.passed:
        return CheckReport(
            suite="t1", passed=False, checked=report.checked,
            message="t=1 特化与单参数规范基不匹配", counterexample={"defects": report.defects[:10]},
        )
    return CheckReport(suite="t1", passed=True, checked=report.checked, message=f"{report.checked} 个元素一一匹配")

