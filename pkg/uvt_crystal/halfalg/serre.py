"""(R4) 型 Serre 关系子及其 e′ 版本。"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Tuple

from ..cartan import CartanDatum, grades_up_to, words_of_content
from ..ratfun import QFlavor, Scalar
from .element import HalfElt
from .operators import divided_power, eprime


def serre_terms(datum: CartanDatum, i: int, j: int) -> List[Tuple[int, int, Scalar]]:
    """关系子 Σ_{p+p′=1−a_ij} (−1)^p t_i^{−p(p′ − 2⟨i,j⟩/i·i + 2⟨j,i⟩/i·i)} X_i^{[p]} X_j X_i^{[p′]} 的各项 (p, p′, 系数)。

    系数不含两参数阶乘，X_i^{[p]} 的归一化由调用方处理。
    """
    if i == j:
        raise ValueError(f"Serre 关系要求 i ≠ j，得到 i = j = {i + 1}")
    total = 1 - datum.a(i, j)
    ii = datum.dot(i, i)
    out = []
    for p in range(total + 1):
        q = total - p
        inner = q - Fraction(2 * datum.pair(i, j), ii) + Fraction(2 * datum.pair(j, i), ii)
        t_exp = -p * inner * datum.d(i)
        sign = -1 if p % 2 else 1
        out.append((p, q, Scalar.monomial(sign, 0, t_exp)))
    return out


def serre_element(datum: CartanDatum, i: int, j: int) -> HalfElt:
    """自由单词上的 Serre 关系子，f_i^{[p]} = f_i^p / [p]_{v_i,t_i}!。"""
    f_j = HalfElt.f(datum.rank, j)
    out = HalfElt.zero(datum.rank)
    for p, q, coeff in serre_terms(datum, i, j):
        left = divided_power(datum, i, p, QFlavor.TWO_PARAM)
        right = divided_power(datum, i, q, QFlavor.TWO_PARAM)
        out = out + (left * f_j * right).scale(coeff)
    return out


def eprime_serre(datum: CartanDatum, i: int, j: int, x: HalfElt) -> HalfElt:
    """把关系子中的 f 换成 e′ 后作用在 x 上（右边的因子先作用）。"""

    def power(k: int) -> Callable[[HalfElt], HalfElt]:
        scale = Scalar.one() / datum.qfact(k, i, QFlavor.TWO_PARAM)

        def run(y: HalfElt) -> HalfElt:
            for _ in range(k):
                y = eprime(datum, i, y)
            return y.scale(scale)

        return run

    out = HalfElt.zero(datum.rank)
    for p, q, coeff in serre_terms(datum, i, j):
        y = power(q)(x)
        y = eprime(datum, j, y)
        y = power(p)(y)
        out = out + y.scale(coeff)
    return out


def padded_relators(datum: CartanDatum, depth: int) -> List[HalfElt]:
    """所有 (单词)·(关系子)·(单词)，总高度不超过 depth。"""
    out: List[HalfElt] = []
    rank = datum.rank
    for i in datum.indices:
        for j in datum.indices:
            if i == j:
                continue
            rel = serre_element(datum, i, j)
            room = depth - rel.grade.height
            if room < 0:
                continue
            for left_grade in grades_up_to(rank, room):
                for left in words_of_content(left_grade.content()):
                    for right_grade in grades_up_to(rank, room - len(left)):
                        for right in words_of_content(right_grade.content()):
                            out.append(HalfElt.word(rank, left) * rel * HalfElt.word(rank, right))
    return out
