"""按名称注册的性质检查套件。"""

from __future__ import annotations

import logging
from typing import Dict, List

from ..cartan import DominantWeight, RootVector, grades_up_to, words_of_content
from ..cartan.oracle import half_dimension
from ..crystal import (
    gen_crystal_binf,
    gen_crystal_module,
    lattice_check,
    ortho_check,
    phi_crystal_defects,
    phi_psi_crystal,
    project_binf,
    star_check,
    string_count_check,
    strings_check,
    tensor_rule_check,
)
from ..crystal.graph import CrystalGraph
from ..errors import OracleUnavailableError
from ..global_basis import global_check, t1_check
from ..halfalg import (
    HalfElt,
    HalfSpace,
    ad_k_edprime,
    edprime,
    eprime,
    eprime_serre,
    joint_kernel_dimension,
    padded_relators,
    pol_form,
)
from ..modules import HWModule, congruence_holds, resolution_identity
from ..ratfun import Scalar
from ..schemas import CheckReport
from .base import CheckSuite, SuiteContext

logger = logging.getLogger(__name__)

SUITE_ALIASES: Dict[str, str] = {
    "prop42": "commutation",
    "lemma75": "resolution",
}


def _fail(suite: str, checked: int, message: str, **counterexample) -> CheckReport:
    return CheckReport(suite=suite, passed=False, checked=checked, message=message, counterexample=counterexample)


def _ok(suite: str, checked: int, message: str) -> CheckReport:
    return CheckReport(suite=suite, passed=True, checked=checked, message=message)


def _vanishes(space: HalfSpace, x: HalfElt) -> bool:
    """x 在 U⁻ 中为零（落在形式的根中）。"""
    return x.is_zero or space.to_vector(x).is_zero


def _words(ctx: SuiteContext, depth: int) -> List[tuple]:
    out = []
    for grade in grades_up_to(ctx.datum.rank, depth):
        out.extend(words_of_content(grade.content()))
    return out


def _default_lam(ctx: SuiteContext) -> DominantWeight:
    return ctx.datum.fundamental(0)


def _default_mu(ctx: SuiteContext) -> DominantWeight:
    return ctx.datum.fundamental(ctx.datum.rank - 1)


def _graph(ctx: SuiteContext) -> CrystalGraph:
    """--binf 或未给出最高权时用 B(∞)，否则用 B(λ)。"""
    if ctx.binf or ctx.hw is None:
        return gen_crystal_binf(ctx.datum, ctx.depth_or(4))
    return gen_crystal_module(HWModule(ctx.datum, ctx.lam_or(_default_lam(ctx)), ctx.depth))


def _random_elt(ctx: SuiteContext, grade: RootVector) -> HalfElt:
    words = words_of_content(grade.content())
    rng = ctx.rng
    terms = {}
    for w in rng.sample(words, min(len(words), rng.randint(1, 3))):
        terms[w] = Scalar.monomial(rng.choice((-2, -1, 1, 2)), rng.randint(-1, 1))
    return HalfElt(ctx.datum.rank, terms)


def _random_grade(ctx: SuiteContext, depth: int) -> RootVector:
    grades = [g for g in grades_up_to(ctx.datum.rank, depth) if g.height]
    return ctx.rng.choice(grades)


# ----------------------------------------------------------------------
# U⁻
# ----------------------------------------------------------------------
def run_serre(ctx: SuiteContext) -> CheckReport:
    """单词·关系子·单词都在形式的根中；商的维数与 Kostant 分拆数一致。"""
    depth = ctx.depth_or(5)
    space = HalfSpace(ctx.datum, depth)
    checked = 0
    for rel in padded_relators(ctx.datum, depth):
        checked += 1
        if not _vanishes(space, rel):
            return _fail("serre", checked, "Serre 关系子不在根中", relator=str(rel))
    for grade in grades_up_to(ctx.datum.rank, depth):
        dim = space.dimension(grade)
        if not ctx.datum.is_finite_type:
            continue
        try:
            expected = half_dimension(ctx.datum, grade)
        except OracleUnavailableError:
            continue
        checked += 1
        if dim != expected:
            return _fail("serre", checked, f"次数 {grade} 的维数 {dim} ≠ {expected}", grade=list(grade.coords))
    return _ok("serre", checked, f"深度 {depth} 内关系子与维数都一致")


def run_commutation(ctx: SuiteContext) -> CheckReport:
    """e′_i e″_j = v^{i·j} t^{−⟨i,j⟩+⟨j,i⟩} e″_j e′_i，以及 e′ 版本的 Serre 恒等式。"""
    datum = ctx.datum
    depth = ctx.depth_or(4)
    space = HalfSpace(datum, depth)
    checked = 0
    for word in _words(ctx, depth):
        x = HalfElt.word(datum.rank, word)
        for i in datum.indices:
            for j in datum.indices:
                checked += 1
                lhs = eprime(datum, i, edprime(datum, j, x))
                rhs = edprime(datum, j, eprime(datum, i, x)).scale(datum.commute_scalar(j, i, 1))
                if not _vanishes(space, lhs - rhs):
                    return _fail("commutation", checked, "e′ 与 e″ 的交换关系不成立",
                                 word=list(word), i=datum.label(i), j=datum.label(j))
                if i != j:
                    checked += 1
                    if not _vanishes(space, eprime_serre(datum, i, j, x)):
                        return _fail("commutation", checked, "e′ 的 Serre 恒等式不为零",
                                     word=list(word), i=datum.label(i), j=datum.label(j))
    return _ok("commutation", checked, f"深度 {depth} 内的全部单词")


def run_adjunction(ctx: SuiteContext, samples: int = 100) -> CheckReport:
    """(P f_i, Q) = (P, Ad(k_i)e″_i Q)，Ad(k_i)e″_i 与 e′_j 交换，(P*, Q*) = (Q, P)。"""
    datum = ctx.datum
    depth = max(2, ctx.depth_or(4))
    space = HalfSpace(datum, depth)
    checked = 0
    for _ in range(samples):
        i = ctx.rng.choice(list(datum.indices))
        j = ctx.rng.choice(list(datum.indices))
        grade = _random_grade(ctx, depth - 1)
        p = _random_elt(ctx, grade)
        q = _random_elt(ctx, grade.shift(i, -1))
        checked += 1
        if pol_form(datum, p * HalfElt.f(datum.rank, i), q) != pol_form(datum, p, ad_k_edprime(datum, i, q)):
            return _fail("adjunction", checked, "(P f_i, Q) ≠ (P, Ad(k_i)e″_i Q)", P=str(p), Q=str(q), i=datum.label(i))
        checked += 1
        lhs = ad_k_edprime(datum, i, eprime(datum, j, q))
        rhs = eprime(datum, j, ad_k_edprime(datum, i, q))
        if not _vanishes(space, lhs - rhs):
            return _fail("adjunction", checked, "Ad(k_i)e″_i 与 e′_j 不交换", Q=str(q), i=datum.label(i), j=datum.label(j))
        checked += 1
        r = _random_elt(ctx, grade)
        if pol_form(datum, p.star(), r.star()) != pol_form(datum, r, p):
            return _fail("adjunction", checked, "(P*, Q*) ≠ (Q, P)", P=str(p), Q=str(r))
    return _ok("adjunction", checked, f"{samples} 组随机齐次元素")


def run_joint_kernel(ctx: SuiteContext) -> CheckReport:
    """ξ ≠ 0 时 ∩_i Ker e′_i = 0。"""
    depth = ctx.depth_or(4)
    space = HalfSpace(ctx.datum, depth)
    checked = 0
    for grade in grades_up_to(ctx.datum.rank, depth):
        if not grade.height:
            continue
        checked += 1
        dim = joint_kernel_dimension(space, grade)
        if dim:
            return _fail("joint-kernel", checked, f"次数 {grade} 上的公共核维数为 {dim}", grade=list(grade.coords))
    return _ok("joint-kernel", checked, "公共核只在次数 0 非零")


# ----------------------------------------------------------------------
# 模
# ----------------------------------------------------------------------
def run_resolution(ctx: SuiteContext) -> CheckReport:
    """⟨h_i, wt y⟩ ∈ {−1, −2} 的权向量满足单位分解。"""
    lam = ctx.lam_or(DominantWeight((3,) + (0,) * (ctx.datum.rank - 1)))
    module = HWModule(ctx.datum, lam, ctx.depth)
    checked = 0
    for grade in grades_up_to(module.rank, module.depth):
        basis = module.basis(grade)
        for i in ctx.datum.indices:
            if module.h(i, grade) not in (-1, -2):
                continue
            for k in range(basis.dim):
                checked += 1
                vec = module.vector(grade, basis.unit(k))
                if not resolution_identity(module, i, vec):
                    return _fail("resolution", checked, f"次数 {grade} 的第 {k} 个基向量不满足单位分解",
                                 grade=list(grade.coords), i=ctx.datum.label(i))
    return _ok("resolution", checked, f"V({lam}) 中 {checked} 个权向量")


def run_congruence(ctx: SuiteContext) -> CheckReport:
    """(x y_λ, y y_λ) ≡ Π(1 − v_i²)^{−n_i}(x, y) mod v𝐀。"""
    depth = ctx.depth_or(3)
    lam = ctx.lam_or(DominantWeight((depth + 2,) * ctx.datum.rank))
    module = HWModule(ctx.datum, lam, depth)
    rank = ctx.datum.rank
    checked = 0
    for grade in grades_up_to(rank, depth):
        words = words_of_content(grade.content())
        for w in words:
            for u in words:
                checked += 1
                if not congruence_holds(module, HalfElt.word(rank, w), HalfElt.word(rank, u)):
                    return _fail("congruence", checked, "模形式与 U⁻ 形式模 v𝐀 不同余", x=list(w), y=list(u))
    return _ok("congruence", checked, f"V({lam}) 深度 {depth} 内的全部单词对")


def run_phi_psi(ctx: SuiteContext) -> CheckReport:
    """Ψ∘Φ = id，(Ψx, y) = (x, Φy)，Φ 与 Kashiwara 算子相容。"""
    lam, mu = ctx.lam_or(_default_lam(ctx)), ctx.mu_or(_default_mu(ctx))
    maps, crystal = phi_psi_crystal(ctx.datum, lam, mu)
    checked = 0
    for grade in maps.grades():
        checked += 1
        bad = maps.inverse_defect(grade)
        if bad is not None:
            return _fail("phi-psi", checked, f"次数 {grade} 上 Ψ∘Φ ≠ id", grade=list(grade.coords), entry=list(bad))
        source, target = maps.source.basis(grade), maps.target.basis(grade)
        for a in range(target.dim):
            x = maps.target.vector(grade, target.unit(a))
            for b in range(source.dim):
                y = maps.source.vector(grade, source.unit(b))
                checked += 1
                if maps.psi(x).pair(y) != x.pair(maps.phi(y)):
                    return _fail("phi-psi", checked, f"次数 {grade} 上 Ψ 不是 Φ 的伴随",
                                 grade=list(grade.coords), x=a, y=b)
    defects = phi_crystal_defects(maps, crystal)
    checked += len(crystal.all_pairs())
    if defects:
        return _fail("phi-psi", checked, "Φ 与 Kashiwara 算子不相容", defects=defects[:10])
    return _ok("phi-psi", checked, f"Φ/Ψ：V({lam + mu}) ⇄ V({lam})⊗V({mu})")


def run_tensor_rule(ctx: SuiteContext) -> CheckReport:
    lam, mu = ctx.lam_or(_default_lam(ctx)), ctx.mu_or(_default_mu(ctx))
    report = tensor_rule_check(ctx.datum, lam, mu)
    if not report.passed:
        return _fail("tensor-rule", report.checked, "直接计算与组合规则不一致", mismatches=report.mismatches[:10])
    return _ok("tensor-rule", report.checked, f"B({lam})⊗B({mu})：{len(report.rule_edges)} 条边一致")


# ----------------------------------------------------------------------
# 晶体
# ----------------------------------------------------------------------
def run_projection(ctx: SuiteContext) -> CheckReport:
    lam = ctx.lam_or(_default_lam(ctx))
    proj = project_binf(ctx.datum, lam, ctx.depth_or(3))
    if not proj.passed:
        return _fail("projection", proj.checked, "π̄_λ 与晶体结构不相容", defects=proj.defects[:10])
    return _ok("projection", proj.checked, f"π̄_{lam}：纤维 {len(proj.fiber())} 个节点")


def run_ortho(ctx: SuiteContext) -> CheckReport:
    return ortho_check(_graph(ctx))


def run_star(ctx: SuiteContext) -> CheckReport:
    return star_check(ctx.datum, ctx.depth_or(4))


def run_strings(ctx: SuiteContext) -> CheckReport:
    return strings_check(_graph(ctx))


def run_string_count(ctx: SuiteContext) -> CheckReport:
    return string_count_check(_graph(ctx))


def run_lattice(ctx: SuiteContext) -> CheckReport:
    return lattice_check(_graph(ctx), seed=ctx.seed)


def run_global(ctx: SuiteContext) -> CheckReport:
    return global_check(ctx.datum, ctx.depth_or(3), ctx.hw, ctx.degree_bound)


def run_t1(ctx: SuiteContext) -> CheckReport:
    return t1_check(ctx.datum, ctx.depth_or(3), ctx.degree_bound)


def default_suites() -> List[CheckSuite]:
    """返回全部检查套件"""
    return [
        CheckSuite("serre", "Serre 关系子落在形式的根中，Gram 商维数等于 Kostant 分拆数", run_serre),
        CheckSuite("commutation", "e′_i 与 e″_j 的交换关系与 e′ 的 Serre 恒等式", run_commutation),
        CheckSuite("adjunction", "Ad(k_i)e″_i 的伴随与交换性质，形式的 star 不变性", run_adjunction),
        CheckSuite("joint-kernel", "所有 e′_i 的公共核只在次数 0 非零", run_joint_kernel),
        CheckSuite("resolution", "e_i^{(k)} 的单位分解公式", run_resolution),
        CheckSuite("congruence", "模形式与 U⁻ 形式模 v𝐀 的同余", run_congruence),
        CheckSuite("phi-psi", "Φ/Ψ 互逆、伴随，且与 Kashiwara 算子相容", run_phi_psi),
        CheckSuite("tensor-rule", "张量积晶体：直接计算等于组合规则", run_tensor_rule),
        CheckSuite("projection", "π̄_λ: B(∞) → B(λ) ∪ {0} 的纤维与交换性", run_projection),
        CheckSuite("ortho", "同权节点在 v=0 处正交归一", run_ortho),
        CheckSuite("star", "star 是 B(∞) 上的对合置换", run_star),
        CheckSuite("strings", "节点代表元的串分量在格中且恰有一个存活", run_strings),
        CheckSuite("string-count", "dim f_i^n M 等于 ε_i ≥ n 的节点数", run_string_count),
        CheckSuite("lattice", "格的范数刻画（双向抽查）", run_lattice),
        CheckSuite("global", "全局基：bar 不变、同余、唯一、star 相容、分次幂理想与投影", run_global),
        CheckSuite("t1", "t=1 特化与单参数规范基一致", run_t1),
    ]


def resolve_suite(name: str, suites: List[CheckSuite]) -> CheckSuite:
    """按名称或别名查找套件。

    Raises:
        ValueError: 未知套件
    """
    key = SUITE_ALIASES.get(name, name)
    for suite in suites:
        if suite.name == key:
            return suite
    known = sorted([s.name for s in suites] + list(SUITE_ALIASES))
    raise ValueError(f"未知的检查套件 {name!r}，可选：{', '.join(known)}")
