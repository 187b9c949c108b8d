"""不可约最高权模 V(λ)：单词作用在 y_λ 上，对反变形式取商。

e_i 作用在 f_{j_1}···f_{j_l} y_λ 上时从左向右与 f_i 交换，每次交换产生
(k_i − k_i′)/(v_i − v_i^{-1}) 在后缀权上的特征值；反变形式由
(f_i x, y) = (x, v_i^{-1} k_i′^{-1} e_i y) 递推得到。
"""

from __future__ import annotations

import logging
import threading
from typing import Dict, Optional, Tuple

from ..cartan import KIND_K, KIND_KPRIME, CartanDatum, DominantWeight, RootVector, grades_up_to
from ..cartan.oracle import string_bound, weight_multiplicity
from ..errors import DepthExceededError, OracleUnavailableError, RadicalMismatchError
from ..halfalg.element import Word
from ..halfalg.quotient import GramQuotient, WeightVector, WordSpace
from ..ratfun import QFlavor, Scalar

logger = logging.getLogger(__name__)

ModuleVec = WeightVector


class HWModule(WordSpace):
    """V(λ) 在 |ξ| ≤ depth 范围内的权空间。

    Attributes:
        datum: Cartan 数据
        lam: 最高权
        depth: 深度窗口
        complete: 深度窗口覆盖了全部非零权空间（有限型且 depth ≥ 最低权的高度）
    """

    kind = "module"

    def __init__(
        self,
        datum: CartanDatum,
        lam: DominantWeight,
        depth: Optional[int] = None,
        cap: Optional[int] = None,
    ) -> None:
        datum.weight(lam)
        if any(lam.coords):
            datum.require_pairings()
        cap = cap if cap is not None else datum.depth_cap
        bound: Optional[int] = None
        if datum.is_finite_type:
            try:
                bound = string_bound(datum, lam)
            except OracleUnavailableError:
                bound = None
        if depth is None:
            depth = min(bound, cap) if bound is not None else cap
        if depth > cap:
            raise DepthExceededError(depth, cap)
        super().__init__(datum, lam, depth, complete=bound is not None and depth >= bound)
        self._memo_lock = threading.Lock()
        self._pair_memo: Dict[Tuple[Word, Word], Scalar] = {}
        self._lower_memo: Dict[Tuple[int, Word], Dict[Word, Scalar]] = {}

    def cache_tag(self) -> Tuple:
        return (self.kind, self.datum, self.lam)

    def k_value(self, i: int, which: str, grade: RootVector) -> Scalar:
        return self.datum.k_scalar(i, which, self.weight(grade))

    def commutator_value(self, i: int, grade: RootVector) -> Scalar:
        """(k_i − k_i′)/(v_i − v_i^{-1}) 在 M_{λ+grade} 上的值。"""
        vi = self.datum.v_i(i)
        return (self.k_value(i, KIND_K, grade) - self.k_value(i, KIND_KPRIME, grade)) / (vi - vi.inverse())

    # ------------------------------------------------------------------
    # 单词层面的 e_i 与反变形式
    # ------------------------------------------------------------------
    def lower_word(self, i: int, word: Word) -> Dict[Word, Scalar]:
        key = (i, word)
        with self._memo_lock:
            cached = self._lower_memo.get(key)
        if cached is not None:
            return cached
        out: Dict[Word, Scalar] = {}
        for k, j in enumerate(word):
            if j != i:
                continue
            suffix = RootVector.of_word(self.rank, word[k + 1:])
            c = self.commutator_value(i, suffix)
            if c:
                rest = word[:k] + word[k + 1:]
                out[rest] = out.get(rest, Scalar.zero()) + c
        out = {w: c for w, c in out.items() if c}
        with self._memo_lock:
            self._lower_memo[key] = out
        return out

    def pair_words(self, w: Word, u: Word) -> Scalar:
        if len(w) != len(u):
            return Scalar.zero()
        if not w:
            return Scalar.one()
        if sorted(w) != sorted(u):
            return Scalar.zero()
        key = (w, u)
        with self._memo_lock:
            cached = self._pair_memo.get(key)
        if cached is not None:
            return cached
        head, tail = w[0], w[1:]
        grade = RootVector.of_word(self.rank, tail)
        scale = (self.datum.v_i(head) * self.k_value(head, KIND_KPRIME, grade)).inverse()
        total = Scalar.zero()
        for rest, c in self.lower_word(head, u).items():
            value = self.pair_words(tail, rest)
            if value:
                total = total + c * value
        total = total * scale
        with self._memo_lock:
            self._pair_memo[key] = total
        return total

    def _check_dimension(self, grade: RootVector, basis: GramQuotient) -> None:
        if not self.datum.is_finite_type:
            return
        try:
            expected = weight_multiplicity(self.datum, self.lam, grade)
        except OracleUnavailableError:
            return
        if expected != basis.dim:
            raise RadicalMismatchError(
                f"V({self.lam}) 在 {grade} 的维数 {basis.dim} 与特征标对照 {expected} 不一致"
            )

    # ------------------------------------------------------------------
    # 生成元作用
    # ------------------------------------------------------------------
    def act(self, gen: str, i: int, vec: ModuleVec, n: int = 1) -> ModuleVec:
        """生成元作用。

        Args:
            gen: "e"、"f"、"k"、"kprime"、"e_div"、"f_div"（[n]_{v_i}! 归一化）
                 或 "e_bracket"、"f_bracket"（[n]_{v_i,t_i}! 归一化）
            i: 指标
            vec: 权向量
            n: 分次幂的次数

        Raises:
            ValueError: 未知生成元
            DepthExceededError: 结果超出深度窗口
        """
        return act(self, gen, i, vec, n)

    def word_vector(self, word: Word) -> ModuleVec:
        """f_{i_1}···f_{i_l} y_λ"""
        grade = RootVector.of_word(self.rank, word)
        return WeightVector(self, grade, tuple(self.coords_of(grade, {tuple(word): Scalar.one()})))


def act(space, gen: str, i: int, vec: WeightVector, n: int = 1) -> WeightVector:
    """在 HWModule 或张量模上作用一个生成元。"""
    if gen == "k":
        return vec.scale(space.datum.k_scalar(i, KIND_K, vec.weight))
    if gen == "kprime":
        return vec.scale(space.datum.k_scalar(i, KIND_KPRIME, vec.weight))
    if gen == "f":
        return space.apply_raise(i, vec, 1)
    if gen in ("f_div", "f_bracket"):
        out = space.apply_raise(i, vec, n)
        if gen == "f_bracket":
            ratio = space.datum.qfact(n, i) / space.datum.qfact(n, i, QFlavor.TWO_PARAM)
            out = out.scale(ratio)
        return out
    if gen in ("e", "e_div", "e_bracket"):
        steps = 1 if gen == "e" else n
        out = vec
        for _ in range(steps):
            target = out.grade.shift(i, 1)
            if not target.is_negative:
                return WeightVector(space, target, ())
            out = space.apply_lower(i, out)
        if gen == "e_div":
            out = out.scale(Scalar.one() / space.datum.qfact(n, i))
        elif gen == "e_bracket":
            out = out.scale(Scalar.one() / space.datum.qfact(n, i, QFlavor.TWO_PARAM))
        return out
    raise ValueError(f"未知生成元 {gen!r}")


def build_module(datum: CartanDatum, lam: DominantWeight, depth: Optional[int] = None) -> HWModule:
    """构造 V(λ) 并预先建立所有窗口内的非零权空间。"""
    module = HWModule(datum, lam, depth)
    total = 0
    for grade in grades_up_to(datum.rank, module.depth):
        total += module.dimension(grade)
    logger.info("V(%s)：深度 %d，窗口内总维数 %d，完整=%s", lam, module.depth, total, module.complete)
    return module
