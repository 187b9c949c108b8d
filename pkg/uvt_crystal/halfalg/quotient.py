"""Gram 商：以对称形式的根为零空间的权空间表示，以及所有权空间共用的抽象基类。

U⁻、V(λ) 与张量模都实现 WeightedSpace；串分解、晶体闭包与全局基求解
只通过这里的接口访问它们。
"""

from __future__ import annotations

import logging
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Generic, Hashable, List, Mapping, Optional, Sequence, Tuple, TypeVar

from ..cache import default_cache
from ..cartan import CartanDatum, DominantWeight, RootVector, Weight, words_of_content
from ..errors import DepthExceededError
from ..ratfun import Scalar, linalg
from .element import Word

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)


class GramQuotient(Generic[K]):
    """由张成集 keys 与形式 pairing 截出的商空间。

    代表元是全 Gram 矩阵行最简形的主元列（按 keys 的顺序贪心选取），
    其 Gram 子式可逆；全 Gram 矩阵的核就是形式的根。

    Attributes:
        grade: 次数 ξ
        keys: 张成集
        reps: 代表元
        gram: 代表元上的 Gram 矩阵
    """

    def __init__(
        self,
        grade: RootVector,
        keys: Sequence[K],
        pairing: Callable[[K, K], Scalar],
        reps: Optional[Sequence[K]] = None,
    ) -> None:
        self.grade = grade
        self.keys: List[K] = list(keys)
        self._pairing = pairing
        if reps is None:
            pivots = linalg.pivot_columns(self.full_gram) if self.keys else []
            reps = [self.keys[p] for p in pivots]
        self.reps: List[K] = list(reps)
        self._rep_index = {k: n for n, k in enumerate(self.reps)}
        self.gram = [[pairing(a, b) for b in self.reps] for a in self.reps]
        self._gram_inv = linalg.inverse(self.gram) if self.reps else []

    @cached_property
    def full_gram(self) -> linalg.Matrix:
        return [[self._pairing(a, b) for b in self.keys] for a in self.keys]

    @cached_property
    def radical(self) -> List[Dict[K, Scalar]]:
        """形式的根的一组基，写成 keys 上的组合。"""
        basis = linalg.nullspace(self.full_gram, len(self.keys))
        return [{k: c for k, c in zip(self.keys, vec) if c} for vec in basis]

    @property
    def dim(self) -> int:
        return len(self.reps)

    def pairing(self, a: K, b: K) -> Scalar:
        return self._pairing(a, b)

    def pair_with_rep(self, rep: K, vec: Mapping[K, Scalar]) -> Scalar:
        total = Scalar.zero()
        for key, c in vec.items():
            if c:
                value = self._pairing(rep, key)
                if value:
                    total = total + c * value
        return total

    def coords(self, vec: Mapping[K, Scalar]) -> List[Scalar]:
        """keys 上组合在代表元基下的坐标 G^{-1}((r_k, x))_k。"""
        if not self.reps:
            return []
        rhs = [self.pair_with_rep(r, vec) for r in self.reps]
        if not any(rhs):
            return [Scalar.zero()] * self.dim
        return linalg.matvec(self._gram_inv, rhs)

    def vector(self, coords: Sequence[Scalar]) -> Dict[K, Scalar]:
        return {r: c for r, c in zip(self.reps, coords) if c}

    def unit(self, k: int) -> List[Scalar]:
        return [Scalar.one() if n == k else Scalar.zero() for n in range(self.dim)]

    def zero(self) -> List[Scalar]:
        return [Scalar.zero()] * self.dim

    def pair(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
        return linalg.dot(a, linalg.matvec(self.gram, b))

    def is_null(self, vec: Mapping[K, Scalar]) -> bool:
        """vec 是否落在根中。"""
        return all(not self.pair_with_rep(r, vec) for r in self.reps)

    def rep_index(self, key: K) -> Optional[int]:
        return self._rep_index.get(key)


def empty_quotient(grade: RootVector) -> GramQuotient:
    return GramQuotient(grade, [], lambda a, b: Scalar.zero(), reps=[])


@dataclass(frozen=True)
class WeightVector:
    """权空间中的向量：所属空间、次数与代表元坐标。"""

    space: "WeightedSpace"
    grade: RootVector
    coords: Tuple[Scalar, ...]

    @property
    def weight(self) -> Weight:
        return self.space.weight(self.grade)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def norm(self) -> Scalar:
        """(x, x)，取厄米形式，对 t ↦ t^{-1} 不变。"""
        return self.space.hform(self.grade, self.coords, self.coords)

    def pair(self, other: "WeightVector") -> Scalar:
        if other.grade != self.grade:
            return Scalar.zero()
        return self.space.hform(self.grade, self.coords, other.coords)

    def scale(self, c) -> "WeightVector":
        c = Scalar.coerce(c)
        return WeightVector(self.space, self.grade, tuple(c * x for x in self.coords))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        if other.grade != self.grade:
            raise ValueError(f"不同权的向量不能相加：{self.grade} 与 {other.grade}")
        return WeightVector(self.space, self.grade, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightVector):
            return NotImplemented
        return self.space is other.space and self.grade == other.grade and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((id(self.space), self.grade, self.coords))


class WeightedSpace(ABC):
    """带极化形式的权空间族 ⊕_ξ M_{λ+ξ}。

    子类实现 _build_basis、lower（e′_i 或 e_i）和 raise_（f_i^{(n)}）。
    """

    kind: str = "space"
    #: 为 True 时深度窗口是截断（U⁻ 无上界），越界不视为错误
    truncates: bool = False

    def __init__(self, datum: CartanDatum, lam: DominantWeight, depth: int, complete: bool = False) -> None:
        if depth < 0:
            raise ValueError(f"depth 必须 ≥ 0，得到 {depth}")
        self.datum = datum
        self.lam = lam
        self.depth = depth
        self.complete = complete
        self._lock = threading.Lock()
        self._local: Dict[Tuple, object] = {}

    # ------------------------------------------------------------------
    # 权空间
    # ------------------------------------------------------------------
    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def top(self) -> RootVector:
        return RootVector.zero(self.rank)

    def weight(self, grade: RootVector) -> Weight:
        return Weight(self.lam, grade)

    def h(self, i: int, grade: RootVector) -> int:
        return self.datum.h(i, self.weight(grade))

    def string_length(self, i: int, grade: RootVector) -> Optional[int]:
        """Ker 上 f_i^{(n)} 不为零的最大 n；U⁻ 无上界，返回 None。"""
        return None if self.truncates else self.h(i, grade)

    def in_window(self, grade: RootVector) -> bool:
        return grade.is_negative and grade.height <= self.depth

    def cache_tag(self) -> Tuple:
        return (self.kind, self.datum, self.lam)

    def basis(self, grade: RootVector) -> GramQuotient:
        """M_{λ+ξ} 的 Gram 商。

        Raises:
            DepthExceededError: 次数超出深度窗口且空间未完整构造
        """
        if not grade.is_negative:
            return empty_quotient(grade)
        if grade.height > self.depth:
            if self.complete:
                return empty_quotient(grade)
            raise DepthExceededError(grade.height, self.depth)
        return default_cache().get_or_build(self.cache_tag() + (grade,), lambda: self._build_basis(grade))

    def dimension(self, grade: RootVector) -> int:
        return self.basis(grade).dim

    def form(self, grade: RootVector, a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
        """代表元上的双线性 Gram 形式。"""
        return self.basis(grade).pair(a, b)

    def hform(self, grade: RootVector, a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
        """极化形式 (x, y)：对 x 线性，对 y 关于 t ↦ t^{-1} 半线性。

        代表元不含 t，单词上的值是双线性 Gram 值的 star，
        因而 (x, y) = star(B(star x, y))。
        """
        return self.basis(grade).pair([c.star() for c in a], b).star()

    def vector(self, grade: RootVector, coords: Sequence[Scalar]) -> WeightVector:
        return WeightVector(self, grade, tuple(coords))

    def zero_vector(self, grade: RootVector) -> WeightVector:
        return WeightVector(self, grade, tuple(self.basis(grade).zero()))

    def highest(self) -> WeightVector:
        """y_λ（或 U⁻ 中的 1）。"""
        return WeightVector(self, self.top, (Scalar.one(),))

    def memo(self, key: Tuple, builder: Callable[[], object]) -> object:
        """空间内部的小型缓存（串分解数据等）。"""
        with self._lock:
            if key in self._local:
                return self._local[key]
        value = builder()
        with self._lock:
            return self._local.setdefault(key, value)

    @abstractmethod
    def _build_basis(self, grade: RootVector) -> GramQuotient:
        """构造次数为 grade 的 Gram 商"""

    @abstractmethod
    def lower(self, i: int, grade: RootVector, coords: Sequence[Scalar]) -> List[Scalar]:
        """升高算子（U⁻ 上的 e′_i，模上的 e_i），结果在 grade+α_i。"""

    @abstractmethod
    def raise_(self, i: int, n: int, grade: RootVector, coords: Sequence[Scalar]) -> List[Scalar]:
        """f_i^{(n)}，结果在 grade−nα_i。"""

    def apply_lower(self, i: int, vec: WeightVector) -> WeightVector:
        target = vec.grade.shift(i, 1)
        return WeightVector(self, target, tuple(self.lower(i, vec.grade, vec.coords)))

    def apply_raise(self, i: int, vec: WeightVector, n: int = 1) -> WeightVector:
        target = vec.grade.shift(i, -n)
        return WeightVector(self, target, tuple(self.raise_(i, n, vec.grade, vec.coords)))


class WordSpace(WeightedSpace):
    """向量由单词 f_{i_1}···f_{i_l}（作用在最高权向量上）张成的空间。"""

    @abstractmethod
    def pair_words(self, w: Word, u: Word) -> Scalar:
        """两个单词向量的形式值"""

    @abstractmethod
    def lower_word(self, i: int, word: Word) -> Dict[Word, Scalar]:
        """升高算子作用在单词上"""

    def _persist_name(self, grade: RootVector) -> str:
        return f"{self.datum.fingerprint}|{self.kind}|{self.lam}|{grade}"

    def _build_basis(self, grade: RootVector) -> GramQuotient:
        cache = default_cache()
        name = self._persist_name(grade)
        words = words_of_content(grade.content())
        stored = cache.load_words(name)
        reps = [tuple(w) for w in stored] if stored is not None else None
        basis = GramQuotient(grade, words, self.pair_words, reps)
        if stored is None:
            cache.store_words(name, [list(r) for r in basis.reps])
        logger.info("%s 权空间 %s：%d 个单词，维数 %d", self.kind, grade, len(words), basis.dim)
        self._check_dimension(grade, basis)
        return basis

    def _check_dimension(self, grade: RootVector, basis: GramQuotient) -> None:
        """子类可与独立的维数对照比较。"""

    def coords_of(self, grade: RootVector, vec: Mapping[Word, Scalar]) -> List[Scalar]:
        return self.basis(grade).coords(vec)

    def words_of(self, grade: RootVector, coords: Sequence[Scalar]) -> Dict[Word, Scalar]:
        return self.basis(grade).vector(coords)

    def lower(self, i: int, grade: RootVector, coords: Sequence[Scalar]) -> List[Scalar]:
        target = grade.shift(i, 1)
        out: Dict[Word, Scalar] = {}
        for word, c in self.words_of(grade, coords).items():
            for rest, a in self.lower_word(i, word).items():
                out[rest] = out.get(rest, Scalar.zero()) + c * a
        return self.coords_of(target, out)

    def raise_words(self, i: int, n: int, grade: RootVector, coords: Sequence[Scalar]) -> Dict[Word, Scalar]:
        scale = Scalar.one() / self.datum.qfact(n, i)
        prefix = (i,) * n
        return {prefix + w: c * scale for w, c in self.words_of(grade, coords).items()}

    def raise_(self, i: int, n: int, grade: RootVector, coords: Sequence[Scalar]) -> List[Scalar]:
        return self.coords_of(grade.shift(i, -n), self.raise_words(i, n, grade, coords))


    def bar(self, vec: WeightVector) -> WeightVector:
        """代表元是单词（作用在 bar 不变的最高权向量上），bar 逐坐标作用。"""
        return WeightVector(self, vec.grade, tuple(c.bar() for c in vec.coords))
