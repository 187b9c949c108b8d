"""U⁻ 上的 e′_i、e″_i、极化形式与 Ad(k_i)。

e′_i 的递推 e′_i(f_j y) = v^{−i·j} t^{⟨i,j⟩−⟨j,i⟩} f_j e′_i(y) + δ_ij y 展开后是：
删去单词中每个等于 i 的字母，前缀中每个字母 j 贡献一个因子。
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict

from ..cartan import CartanDatum, RootVector, Weight
from ..ratfun import QFlavor, Scalar
from .element import HalfElt, Word

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _lower_word(datum: CartanDatum, i: int, word: Word, sign: int) -> Dict[Word, Scalar]:
    out: Dict[Word, Scalar] = {}
    prefix = Scalar.one()
    for k, j in enumerate(word):
        if j == i:
            rest = word[:k] + word[k + 1:]
            out[rest] = out.get(rest, Scalar.zero()) + prefix
        prefix = prefix * datum.commute_scalar(i, j, sign)
    return {w: c for w, c in out.items() if c}


def eprime_word(datum: CartanDatum, i: int, word: Word) -> Dict[Word, Scalar]:
    return _lower_word(datum, i, tuple(word), -1)


def edprime_word(datum: CartanDatum, i: int, word: Word) -> Dict[Word, Scalar]:
    return _lower_word(datum, i, tuple(word), 1)


def _apply(datum: CartanDatum, i: int, x: HalfElt, sign: int) -> HalfElt:
    out: Dict[Word, Scalar] = {}
    for word, coeff in x.items():
        for rest, c in _lower_word(datum, i, word, sign).items():
            out[rest] = out.get(rest, Scalar.zero()) + coeff * c
    return HalfElt(x.rank, out)


def eprime(datum: CartanDatum, i: int, x: HalfElt) -> HalfElt:
    """e′_i(x)，次数升高 α_i。

    Examples:
        >>> a2 = CartanDatum.validate([[1, -1], [0, 1]])
        >>> str(eprime(a2, 0, HalfElt.word(2, (1, 0))))
        '(v * t^(-1)) f2'
    """
    return _apply(datum, i, x, -1)


def edprime(datum: CartanDatum, i: int, x: HalfElt) -> HalfElt:
    """e″_i(x)"""
    return _apply(datum, i, x, 1)


@lru_cache(maxsize=None)
def pol_words(datum: CartanDatum, w: Word, u: Word) -> Scalar:
    """单词间的极化形式：(1,1) = 1，(f_i w′, u) = (w′, e′_i u)。"""
    if len(w) != len(u):
        return Scalar.zero()
    if not w:
        return Scalar.one()
    if sorted(w) != sorted(u):
        return Scalar.zero()
    head, tail = w[0], w[1:]
    total = Scalar.zero()
    for rest, c in eprime_word(datum, head, u).items():
        value = pol_words(datum, tail, rest)
        if value:
            total = total + c * value
    return total


def pol_form(datum: CartanDatum, x: HalfElt, y: HalfElt) -> Scalar:
    """(x, y)；次数不同时为 0。"""
    if x.is_zero or y.is_zero or x.grade != y.grade:
        return Scalar.zero()
    total = Scalar.zero()
    for w, a in x.items():
        for u, b in y.items():
            value = pol_words(datum, w, u)
            if value:
                total = total + a * b * value
    return total


def ad_k(datum: CartanDatum, i: int, x: HalfElt) -> HalfElt:
    """Ad(k_i)x = k_i x k_i^{-1}，在 U⁻_η 上是标量 v^{i·η} t^{⟨i,η⟩−⟨η,i⟩}。"""
    if x.is_zero:
        return x
    return x.scale(datum.k_scalar(i, "k", Weight.of_root(x.grade)))


def ad_k_edprime(datum: CartanDatum, i: int, x: HalfElt) -> HalfElt:
    """(e′_i(x*))*，等于 Ad(k_i) e″_i x。"""
    return eprime(datum, i, x.star()).star()


def divided_power(
    datum: CartanDatum, i: int, n: int, flavor: QFlavor | str = QFlavor.PLAIN
) -> HalfElt:
    """f_i^{(n)}（默认 [n]_{v_i}! 归一化）或 f_i^{[n]}（flavor="two_param"）。"""
    return HalfElt.f(datum.rank, i, n).scale(Scalar.one() / datum.qfact(n, i, flavor))


def monomial(datum: CartanDatum, parts) -> HalfElt:
    """分次幂单项式 f_{i_1}^{(a_1)} ··· f_{i_r}^{(a_r)}，parts 为 [(i, a), ...]。"""
    out = HalfElt.one(datum.rank)
    for i, a in parts:
        out = out * divided_power(datum, i, a)
    return out


def grade_of(word: Word, rank: int) -> RootVector:
    return RootVector.of_word(rank, word)
