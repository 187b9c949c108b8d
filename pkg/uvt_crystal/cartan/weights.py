"""根格与权的坐标表示。"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple


@dataclass(frozen=True, order=True)
class RootVector:
    """ξ = Σ n_i α_i ∈ Q。"""

    coords: Tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> "RootVector":
        return cls((0,) * rank)

    @classmethod
    def simple(cls, rank: int, i: int, k: int = 1) -> "RootVector":
        return cls(tuple(k if j == i else 0 for j in range(rank)))

    @classmethod
    def of_word(cls, rank: int, word: Iterable[int]) -> "RootVector":
        """单词 f_{i_1}···f_{i_l} 的次数 -Σ α_{i_k}。"""
        coords = [0] * rank
        for i in word:
            coords[i] -= 1
        return cls(tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def height(self) -> int:
        return sum(abs(n) for n in self.coords)

    @property
    def is_negative(self) -> bool:
        """是否属于 Q₋。"""
        return all(n <= 0 for n in self.coords)

    def content(self) -> Tuple[int, ...]:
        """Q₋ 中元素对应的字母重数。"""
        return tuple(-n for n in self.coords)

    def shift(self, i: int, k: int = 1) -> "RootVector":
        coords = list(self.coords)
        coords[i] += k
        return RootVector(tuple(coords))

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coords))

    def __str__(self) -> str:
        return "(" + ",".join(str(n) for n in self.coords) + ")"


@dataclass(frozen=True, order=True)
class DominantWeight:
    """λ = Σ c_i Λ_i，c_i = ⟨h_i, λ⟩ ≥ 0。"""

    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any((not isinstance(c, int)) or c < 0 for c in self.coords):
            raise ValueError(f"支配权的坐标必须是非负整数，得到 {self.coords}")

    @classmethod
    def zero(cls, rank: int) -> "DominantWeight":
        return cls((0,) * rank)

    @classmethod
    def parse(cls, text: str) -> "DominantWeight":
        """解析 "1,0" 这样的坐标串。"""
        try:
            return cls(tuple(int(part) for part in text.split(",") if part.strip() != ""))
        except ValueError as exc:
            raise ValueError(f"无法解析最高权 {text!r}：{exc}") from exc

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "DominantWeight") -> "DominantWeight":
        return DominantWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True, order=True)
class Weight:
    """λ + ξ：支配部分加根格平移。"""

    lam: DominantWeight
    xi: RootVector

    @classmethod
    def of_root(cls, xi: RootVector) -> "Weight":
        return cls(DominantWeight.zero(xi.rank), xi)

    def shift(self, i: int, k: int = 1) -> "Weight":
        return Weight(self.lam, self.xi.shift(i, k))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.lam + other.lam, self.xi + other.xi)

    def __str__(self) -> str:
        return f"{self.lam}+{self.xi}"


def grades_up_to(rank: int, depth: int) -> Iterator[RootVector]:
    """按高度递增枚举 Q₋ 中 |ξ| ≤ depth 的全部次数。"""
    for height in range(depth + 1):
        for content in _compositions(height, rank):
            yield RootVector(tuple(-n for n in content))


def _compositions(total: int, parts: int) -> List[Tuple[int, ...]]:
    if parts == 1:
        return [(total,)]
    out: List[Tuple[int, ...]] = []
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def words_of_content(content: Sequence[int]) -> List[Tuple[int, ...]]:
    """给定字母重数的全部单词，按字典序排列。"""
    out: List[Tuple[int, ...]] = []
    counts = list(content)
    total = sum(counts)
    prefix: List[int] = []

    def walk() -> None:
        if len(prefix) == total:
            out.append(tuple(prefix))
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                prefix.append(i)
                walk()
                prefix.pop()
                counts[i] += 1

    walk()
    return out
