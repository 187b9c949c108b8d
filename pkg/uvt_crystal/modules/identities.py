"""模上可执行的恒等式：极化形式的伴随关系、e_i^{(k)} 的分解公式、
π_λ 与 U⁻ 形式的同余，以及 f_i^n M 的维数。"""

from __future__ import annotations

import logging
from typing import List

from ..cartan import KIND_KPRIME, RootVector
from ..halfalg.element import HalfElt
from ..halfalg.operators import pol_form
from ..halfalg.quotient import WeightVector, WeightedSpace
from ..ratfun import QFlavor, Scalar, in_A, linalg, qbinom
from .highest_weight import HWModule, act

logger = logging.getLogger(__name__)


def polarization_defect(space: WeightedSpace, i: int, x: WeightVector, y: WeightVector) -> Scalar:
    """(f_i x, y) − (x, v_i^{-1} k_i′^{-1} e_i y)，y 的次数须为 x 的次数 − α_i。"""
    if y.grade != x.grade.shift(i, -1):
        raise ValueError(f"y 的次数应为 {x.grade.shift(i, -1)}，得到 {y.grade}")
    left = act(space, "f", i, x).pair(y)
    ey = act(space, "e", i, y)
    scale = (space.datum.v_i(i) * space.datum.k_scalar(i, KIND_KPRIME, ey.weight)).inverse()
    right = x.pair(ey.scale(scale))
    return left - right


def resolution_terms(module: WeightedSpace, i: int, vec: WeightVector) -> WeightVector:
    """Σ_{k≥n} (−1)^{k−n} v_i^{kn} [k−1 选 k−n]_{v_i} f_i^{(k)} e_i^{(k)} k_i′^{−k} y，其中 n = −⟨h_i, wt y⟩ ≥ 1。

    Raises:
        ValueError: ⟨h_i, wt y⟩ ≥ 0
    """
    n = -module.h(i, vec.grade)
    if n < 1:
        raise ValueError(f"要求 ⟨h_{i + 1}, wt y⟩ ≤ −1，得到 {-n}")
    d = module.datum.d(i)
    kp = module.datum.k_scalar(i, KIND_KPRIME, vec.weight).inverse()
    total = module.zero_vector(vec.grade)
    k = n
    while True:
        raised = act(module, "e_div", i, vec.scale(kp ** k), k)
        if raised.is_zero:
            break
        back = act(module, "f_div", i, raised, k)
        sign = -1 if (k - n) % 2 else 1
        coeff = Scalar.monomial(sign, d * k * n) * qbinom(k - 1, k - n, QFlavor.PLAIN, d)
        total = total + back.scale(coeff)
        k += 1
    return total


def resolution_identity(module: WeightedSpace, i: int, vec: WeightVector) -> bool:
    """y 是否等于 resolution_terms 给出的和。"""
    return resolution_terms(module, i, vec) == vec


def congruence_factor(module: HWModule, grade: RootVector) -> Scalar:
    """Π_i (1 − v_i²)^{−n_i}，grade = −Σ n_i α_i。"""
    out = Scalar.one()
    for i, n in enumerate(grade.content()):
        if n:
            out = out / (Scalar.one() - module.datum.v_i(i) ** 2) ** n
    return out


def congruence_defect(module: HWModule, x: HalfElt, y: HalfElt) -> Scalar:
    """(x y_λ, y y_λ) − Π_i (1 − v_i²)^{−n_i} (x, y)，在 ⟨h_i, λ⟩ ≥ |ξ| + 2 时应属于 v𝐀。

    两边都取单词上的双线性值，与 Gram 商使用的形式一致。

    Raises:
        ValueError: 最高权不够大或次数不一致
    """
    grade = x.grade
    if grade is None or y.grade != grade:
        raise ValueError("x 与 y 必须是同一次数的非零元素")
    if min(module.lam.coords) < grade.height + 2:
        raise ValueError(f"同余要求 ⟨h_i, λ⟩ ≥ {grade.height + 2}，得到 λ = {module.lam}")
    total = Scalar.zero()
    for w, a in x.items():
        for u, b in y.items():
            value = module.pair_words(w, u)
            if value:
                total = total + a * b * value
    return total - congruence_factor(module, grade) * pol_form(module.datum, x, y)


def congruence_holds(module: HWModule, x: HalfElt, y: HalfElt) -> bool:
    defect = congruence_defect(module, x, y)
    val = defect.v_valuation()
    return val is None or val >= 1


def power_image_dimension(space: WeightedSpace, i: int, n: int, grade: RootVector) -> int:
    """dim (f_i^n M)_{grade}。"""
    if n == 0:
        return space.dimension(grade)
    source = grade.shift(i, n)
    if not source.is_negative:
        return 0
    basis = space.basis(source)
    columns: List[List[Scalar]] = [space.raise_(i, n, source, basis.unit(k)) for k in range(basis.dim)]
    columns = [c for c in columns if any(c)]
    if not columns:
        return 0
    return linalg.rank(columns)


def lattice_norm_ok(vec: WeightVector) -> bool:
    """(x, x) ∈ 𝐀。"""
    return in_A(vec.norm())
