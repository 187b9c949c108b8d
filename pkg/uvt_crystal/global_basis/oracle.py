"""t=1 的单参数规范基对照。

在 Q(v) 上独立实现 U_v⁻：单词形式由 e′_i(f_j y) = v^{-i·j} f_j e′_i(y) + δ_ij y
递推得到，分次幂 f_i^{(a)} = f_i^a / [a]_{v_i}!。规范基由以下条件刻画（差一个符号）：
bar 不变、属于整形式、范数 ∈ 1 + v𝐀。这里在分次幂单项式的 {−1, 0, 1} 组合中搜索。

与主流程不共享任何代码路径，只共享 CartanDatum 的配对数据。
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.fields import field as frac_field
from sympy.polys.matrices import DomainMatrix

from ..cartan import CartanDatum, RootVector, words_of_content
from ..errors import OracleUnavailableError
from ..ratfun import Scalar

logger = logging.getLogger(__name__)

ONE_FIELD, ONE_V = frac_field("v", QQ)
ONE_DOMAIN = ONE_FIELD.to_domain()

Word = Tuple[int, ...]
Dots = Tuple[Tuple[int, ...], ...]
#: 单项式按 (i, a) 段给出
Parts = Tuple[Tuple[int, int], ...]

#: 单项式个数不超过该值时搜索全部 {−1,0,1} 组合，否则只搜索支撑 ≤ 2 的组合
_FULL_SEARCH = 8


def _dots(datum: CartanDatum) -> Dots:
    return tuple(tuple(datum.dot(i, j) for j in datum.indices) for i in datum.indices)


def _lowest(poly) -> int:
    return min(m[0] for m in poly.monoms())


def _valuation(x) -> Optional[int]:
    if not x:
        return None
    x = ONE_FIELD(x)
    return _lowest(x.numer) - _lowest(x.denom)


@lru_cache(maxsize=None)
def _qfact(n: int, d: int):
    out = ONE_FIELD.one
    vi = ONE_V ** d
    for k in range(1, n + 1):
        out *= (vi ** k - vi ** (-k)) / (vi - 1 / vi)
    return out


@lru_cache(maxsize=None)
def pair_words_t1(dots: Dots, w: Word, u: Word):
    """(1,1) = 1，(f_i w′, u) = (w′, e′_i u)。"""
    if len(w) != len(u) or sorted(w) != sorted(u):
        return ONE_FIELD.zero
    if not w:
        return ONE_FIELD.one
    i, rest = w[0], w[1:]
    total = ONE_FIELD.zero
    shift = 0
    for k, j in enumerate(u):
        if j == i:
            total += ONE_V ** (-shift) * pair_words_t1(dots, rest, u[:k] + u[k + 1:])
        shift += dots[i][j]
    return total


def _monomial_word(parts: Parts) -> Word:
    return tuple(i for i, a in parts for _ in range(a))


def _collapse(word: Word) -> Parts:
    out: List[List[int]] = []
    for i in word:
        if out and out[-1][0] == i:
            out[-1][1] += 1
        else:
            out.append([i, 1])
    return tuple((i, a) for i, a in out)


@dataclass
class OracleElement:
    """规范基元素 Σ c_k m_k，c_k ∈ {−1, 0, 1}。"""

    combo: Tuple[Tuple[int, Parts], ...]
    coords: Tuple = field(repr=False)
    label: str = ""


@dataclass
class OracleBasis:
    grade: RootVector
    dim: int
    elements: List[OracleElement] = field(default_factory=list)


class OneParamHalf:
    """Q(v) 上的 U_v⁻，按次数给出单词商与规范基。"""

    def __init__(self, datum: CartanDatum) -> None:
        self.datum = datum
        self.dots = _dots(datum)
        self._reps: Dict[RootVector, List[Word]] = {}

    def d(self, i: int) -> int:
        return self.dots[i][i] // 2

    def pair(self, w: Word, u: Word):
        return pair_words_t1(self.dots, w, u)

    def reps(self, grade: RootVector) -> List[Word]:
        """贪心选取 Gram 秩的单词代表元。"""
        if grade not in self._reps:
            chosen: List[Word] = []
            rank = 0
            for w in words_of_content(grade.content()):
                trial = chosen + [w]
                if self._rank(trial) > rank:
                    chosen, rank = trial, rank + 1
            self._reps[grade] = chosen
        return self._reps[grade]

    def _rank(self, words: Sequence[Word]) -> int:
        rows = [[self.pair(a, b) for b in words] for a in words]
        return DomainMatrix(rows, (len(words), len(words)), ONE_DOMAIN).rank()

    def coords(self, grade: RootVector, vec: Dict[Word, object]) -> Tuple:
        """vec 模去根基后的坐标。"""
        reps = self.reps(grade)
        if not reps:
            return ()
        gram = [[self.pair(a, b) for b in reps] for a in reps]
        rhs = [[sum((c * self.pair(r, w) for w, c in vec.items()), ONE_FIELD.zero)] for r in reps]
        n = len(reps)
        sol = DomainMatrix(gram, (n, n), ONE_DOMAIN).lu_solve(DomainMatrix(rhs, (n, 1), ONE_DOMAIN))
        return tuple(row[0] for row in sol.to_list())

    def monomial_vector(self, parts: Parts) -> Dict[Word, object]:
        scale = ONE_FIELD.one
        for i, a in parts:
            scale /= _qfact(a, self.d(i))
        return {_monomial_word(parts): scale}

    def monomials(self, grade: RootVector) -> List[Parts]:
        seen = {_collapse(w) for w in words_of_content(grade.content())}
        return sorted(seen, key=lambda p: (len(p), p))

    def canonical_basis(self, grade: RootVector) -> OracleBasis:
        """搜索 bar 不变、范数 ∈ 1 + v𝐀 的单项式组合。

        Raises:
            OracleUnavailableError: 找到的元素个数与维数不符
        """
        dim = len(self.reps(grade))
        out = OracleBasis(grade, dim)
        if dim == 0:
            return out
        monos = self.monomials(grade)
        words = [_monomial_word(p) for p in monos]
        scales = [next(iter(self.monomial_vector(p).values())) for p in monos]
        gram = [[scales[a] * scales[b] * self.pair(words[a], words[b]) for b in range(len(monos))] for a in range(len(monos))]
        seen: List[Tuple] = []
        for combo in _combos(len(monos)):
            norm = ONE_FIELD.zero
            for a, ca in combo:
                for b, cb in combo:
                    norm += ca * cb * gram[a][b]
            if not norm:
                continue
            val = _valuation(norm - ONE_FIELD.one)
            if val is not None and val <= 0:
                continue
            vec: Dict[Word, object] = {}
            for a, ca in combo:
                vec[words[a]] = vec.get(words[a], ONE_FIELD.zero) + ca * scales[a]
            coords = self.coords(grade, vec)
            if not any(coords):
                continue
            neg = tuple(-c for c in coords)
            if coords in seen or neg in seen:
                continue
            seen.append(coords)
            label = " + ".join(f"{'-' if c < 0 else ''}{_format(monos[a])}" for a, c in combo)
            out.elements.append(OracleElement(tuple((c, monos[a]) for a, c in combo), coords, label))
        if len(out.elements) != dim:
            raise OracleUnavailableError(
                f"次数 {grade}：{{−1,0,1}} 组合给出 {len(out.elements)} 个规范基候选，维数为 {dim}"
            )
        logger.info("t=1 对照次数 %s：%d 个规范基元素", grade, dim)
        return out


def _combos(n: int):
    """非零 {−1,0,1} 系数组合，首个非零系数为正（符号另行去重）。"""
    if n <= _FULL_SEARCH:
        for signs in itertools.product((0, 1, -1), repeat=n):
            support = [(k, c) for k, c in enumerate(signs) if c]
            if support and support[0][1] > 0:
                yield tuple(support)
        return
    for k in range(n):
        yield ((k, 1),)
    for k, l in itertools.combinations(range(n), 2):
        yield ((k, 1), (l, 1))
        yield ((k, 1), (l, -1))


def _format(parts: Parts) -> str:
    return " ".join(f"f{i + 1}" if a == 1 else f"f{i + 1}^({a})" for i, a in parts)


def scalar_at_t1(x: Scalar):
    """主流程标量代入 t=1 后转入 Q(v)。

    Raises:
        PoleError: 在 t=1 处有极点
    """
    y = x.at_t1()
    if not y:
        return ONE_FIELD.zero
    ring = ONE_FIELD.ring
    numer = ring.from_dict({(a,): c for (a, _), c in y.frac.numer.items()})
    denom = ring.from_dict({(a,): c for (a, _), c in y.frac.denom.items()})
    return ONE_FIELD.new(numer, denom)
