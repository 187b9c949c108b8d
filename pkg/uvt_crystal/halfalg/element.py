"""U⁻ 中的元素：自由单词上的标量组合。"""

from __future__ import annotations

from typing import Callable, Dict, Iterator, Mapping, Optional, Tuple

from ..ratfun import Scalar
from ..ratfun.scalar import ScalarLike
from ..cartan import RootVector

Word = Tuple[int, ...]


def _content(word: Word, rank: int) -> Tuple[int, ...]:
    counts = [0] * rank
    for i in word:
        counts[i] += 1
    return tuple(counts)


class HalfElt:
    """齐次元素 Σ c_w f_w，系数为零的单词不保存。

    Attributes:
        rank: 指标个数
        terms: 单词 → 标量
    """

    __slots__ = ("_rank", "_terms", "_content")

    def __init__(self, rank: int, terms: Optional[Mapping[Word, ScalarLike]] = None) -> None:
        self._rank = rank
        self._terms: Dict[Word, Scalar] = {}
        self._content: Optional[Tuple[int, ...]] = None
        for word, coeff in (terms or {}).items():
            value = Scalar.coerce(coeff)
            if value:
                word = tuple(word)
                content = _content(word, rank)
                if self._content is None:
                    self._content = content
                elif content != self._content:
                    raise ValueError(f"非齐次元素：单词 {word} 的次数与 {self._content} 不同")
                self._terms[word] = value

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, rank: int) -> "HalfElt":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "HalfElt":
        return cls(rank, {(): 1})

    @classmethod
    def word(cls, rank: int, word: Word, coeff: ScalarLike = 1) -> "HalfElt":
        return cls(rank, {tuple(word): coeff})

    @classmethod
    def f(cls, rank: int, i: int, n: int = 1) -> "HalfElt":
        """f_i^n"""
        return cls(rank, {(i,) * n: 1})

    # ------------------------------------------------------------------
    # 访问
    # ------------------------------------------------------------------
    @property
    def rank(self) -> int:
        return self._rank

    @property
    def terms(self) -> Dict[Word, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, Scalar]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def coefficient(self, word: Word) -> Scalar:
        return self._terms.get(tuple(word), Scalar.zero())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def grade(self) -> Optional[RootVector]:
        """次数 ξ ∈ Q₋；零元素没有确定的次数。"""
        if self._content is None:
            return None
        return RootVector(tuple(-n for n in self._content))

    # ------------------------------------------------------------------
    # 运算
    # ------------------------------------------------------------------
    def _combine(self, other: "HalfElt", sign: int) -> "HalfElt":
        if self._rank != other._rank:
            raise ValueError("秩不同的元素不能相加")
        out: Dict[Word, Scalar] = dict(self._terms)
        for word, coeff in other._terms.items():
            out[word] = out.get(word, Scalar.zero()) + (coeff if sign > 0 else -coeff)
        return HalfElt(self._rank, out)

    def __add__(self, other: "HalfElt") -> "HalfElt":
        return self._combine(other, 1)

    def __sub__(self, other: "HalfElt") -> "HalfElt":
        return self._combine(other, -1)

    def __neg__(self) -> "HalfElt":
        return self.scale(-1)

    def scale(self, c: ScalarLike) -> "HalfElt":
        c = Scalar.coerce(c)
        return HalfElt(self._rank, {w: c * x for w, x in self._terms.items()})

    def __mul__(self, other) -> "HalfElt":
        """与标量相乘，或与另一元素做单词拼接乘法。"""
        if isinstance(other, HalfElt):
            out: Dict[Word, Scalar] = {}
            for w, a in self._terms.items():
                for u, b in other._terms.items():
                    key = w + u
                    out[key] = out.get(key, Scalar.zero()) + a * b
            return HalfElt(self._rank, out)
        return self.scale(other)

    def __rmul__(self, other) -> "HalfElt":
        return self.scale(other)

    def map_coefficients(self, fn: Callable[[Scalar], Scalar]) -> "HalfElt":
        return HalfElt(self._rank, {w: fn(c) for w, c in self._terms.items()})

    def bar(self) -> "HalfElt":
        """单词不动，系数取 bar。"""
        return self.map_coefficients(lambda c: c.bar())

    def star(self) -> "HalfElt":
        """反自同构：单词反转，系数取 star。"""
        return HalfElt(self._rank, {tuple(reversed(w)): c.star() for w, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HalfElt):
            return NotImplemented
        return self._rank == other._rank and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._rank, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"HalfElt({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for word, coeff in self.items():
            name = format_word(word)
            parts.append(name if coeff == Scalar.one() else f"({coeff}) {name}")
        return " + ".join(parts)


def format_word(word: Word, labels: Optional[Tuple[str, ...]] = None) -> str:
    if not word:
        return "1"
    return " ".join(f"f{labels[i] if labels else i + 1}" for i in word)
