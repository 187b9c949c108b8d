"""张量模 M⊗N，余乘 Δ(f_i) = f_i⊗1 + k_i⊗f_i，Δ(e_i) = e_i⊗k_i′ + 1⊗e_i，
形式取乘积 (m₁⊗n₁, m₂⊗n₂) = (m₁,m₂)(n₁,n₂)。"""

from __future__ import annotations

import logging
from typing import Dict, Iterator, List, Sequence, Tuple

from ..cartan import KIND_K, KIND_KPRIME, RootVector
from ..errors import DepthExceededError
from ..halfalg.quotient import GramQuotient, WeightVector, WeightedSpace
from ..ratfun import Scalar

logger = logging.getLogger(__name__)

#: (左分量次数, 左代表元下标, 右代表元下标)
PairKey = Tuple[RootVector, int, int]


def _splits(grade: RootVector) -> Iterator[RootVector]:
    """所有 g₁ 使得 g₁ 与 grade − g₁ 都属于 Q₋。"""

    def walk(k: int, prefix: Tuple[int, ...]) -> Iterator[RootVector]:
        if k == grade.rank:
            yield RootVector(prefix)
            return
        for n in range(0, grade.coords[k] - 1, -1):
            yield from walk(k + 1, prefix + (n,))

    yield from walk(0, ())


class TensorModule(WeightedSpace):
    """两个模的张量积，权空间用分量代表元的积作为基。"""

    kind = "tensor"

    def __init__(self, left: WeightedSpace, right: WeightedSpace) -> None:
        if left.datum != right.datum:
            raise ValueError("张量积的两个分量必须来自同一 Cartan 数据")
        complete = left.complete and right.complete
        # 分量不完整时，窗口内的每个拆分都必须落在两个分量的窗口内
        depth = left.depth + right.depth if complete else min(left.depth, right.depth)
        super().__init__(left.datum, left.lam + right.lam, depth, complete=complete)
        self.left = left
        self.right = right

    def cache_tag(self) -> Tuple:
        return (self.kind, self.left.cache_tag(), self.right.cache_tag())

    def _build_basis(self, grade: RootVector) -> GramQuotient:
        keys: List[PairKey] = []
        for g1 in _splits(grade):
            g2 = grade - g1
            d1 = self.left.dimension(g1)
            if not d1:
                continue
            d2 = self.right.dimension(g2)
            keys.extend((g1, a, b) for a in range(d1) for b in range(d2))
        basis = GramQuotient(grade, keys, lambda k1, k2: self._pair_keys(grade, k1, k2), reps=keys)
        logger.info("张量模权空间 %s：维数 %d", grade, basis.dim)
        return basis

    def _pair_keys(self, grade: RootVector, k1: PairKey, k2: PairKey) -> Scalar:
        g1, a1, b1 = k1
        h1, a2, b2 = k2
        if g1 != h1:
            return Scalar.zero()
        left = self.left.basis(g1).gram[a1][a2]
        if not left:
            return left
        g2 = grade - g1
        return left * self.right.basis(g2).gram[b1][b2]

    # ------------------------------------------------------------------
    # 向量
    # ------------------------------------------------------------------
    def pure(self, x: WeightVector, y: WeightVector) -> WeightVector:
        """x ⊗ y"""
        grade = x.grade + y.grade
        vec: Dict[PairKey, Scalar] = {}
        for a, ca in enumerate(x.coords):
            if not ca:
                continue
            for b, cb in enumerate(y.coords):
                if cb:
                    vec[(x.grade, a, b)] = ca * cb
        return WeightVector(self, grade, tuple(self._coords(grade, vec)))

    def _coords(self, grade: RootVector, vec: Dict[PairKey, Scalar]) -> List[Scalar]:
        basis = self.basis(grade)
        out = list(basis.zero())
        for key, c in vec.items():
            idx = basis.rep_index(key)
            if idx is None:
                if c:
                    raise DepthExceededError(grade.height, self.depth, "张量模")
                continue
            out[idx] = out[idx] + c
        return out

    def _items(self, grade: RootVector, coords: Sequence[Scalar]) -> Iterator[Tuple[PairKey, Scalar]]:
        basis = self.basis(grade)
        for key, c in zip(basis.reps, coords):
            if c:
                yield key, c

    def lower(self, i: int, grade: RootVector, coords: Sequence[Scalar]) -> List[Scalar]:
        target = grade.shift(i, 1)
        out: Dict[PairKey, Scalar] = {}
        for (g1, a, b), c in self._items(grade, coords):
            g2 = grade - g1
            # e_i ⊗ k_i′
            up1 = g1.shift(i, 1)
            if up1.is_negative:
                kp = self.right.datum.k_scalar(i, KIND_KPRIME, self.right.weight(g2))
                image = self.left.lower(i, g1, self.left.basis(g1).unit(a))
                for a2, x in enumerate(image):
                    if x:
                        key = (up1, a2, b)
                        out[key] = out.get(key, Scalar.zero()) + c * kp * x
            # 1 ⊗ e_i
            up2 = g2.shift(i, 1)
            if up2.is_negative:
                image = self.right.lower(i, g2, self.right.basis(g2).unit(b))
                for b2, x in enumerate(image):
                    if x:
                        key = (g1, a, b2)
                        out[key] = out.get(key, Scalar.zero()) + c * x
        if not target.is_negative:
            return []
        return self._coords(target, out)

    def _raise_once(self, i: int, grade: RootVector, coords: Sequence[Scalar]) -> List[Scalar]:
        target = grade.shift(i, -1)
        out: Dict[PairKey, Scalar] = {}
        for (g1, a, b), c in self._items(grade, coords):
            g2 = grade - g1
            # f_i ⊗ 1
            down1 = g1.shift(i, -1)
            image = self.left.raise_(i, 1, g1, self.left.basis(g1).unit(a))
            for a2, x in enumerate(image):
                if x:
                    key = (down1, a2, b)
                    out[key] = out.get(key, Scalar.zero()) + c * x
            # k_i ⊗ f_i
            k = self.left.datum.k_scalar(i, KIND_K, self.left.weight(g1))
            image = self.right.raise_(i, 1, g2, self.right.basis(g2).unit(b))
            for b2, x in enumerate(image):
                if x:
                    key = (g1, a, b2)
                    out[key] = out.get(key, Scalar.zero()) + c * k * x
        return self._coords(target, out)

    def raise_(self, i: int, n: int, grade: RootVector, coords: Sequence[Scalar]) -> List[Scalar]:
        current = list(coords)
        g = grade
        for _ in range(n):
            current = self._raise_once(i, g, current)
            g = g.shift(i, -1)
        if n > 1:
            scale = Scalar.one() / self.datum.qfact(n, i)
            current = [scale * x for x in current]
        return current
