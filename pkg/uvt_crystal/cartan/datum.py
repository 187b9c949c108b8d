"""带 Λ 矩阵细化的 Cartan 数据。

i·j = Λ_ij + Λ_ji 给出对称化形式，a_ij = 2 i·j / i·i 是广义 Cartan 矩阵。
基本权通过 (A^T)^{-1} 写成单根的有理组合，从而得到 ⟨i,λ⟩、⟨λ,i⟩ 与公分母 D。
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError
from sympy import Matrix

from ..errors import DatumValidationError
from ..ratfun import QFlavor, Scalar, qfact, qint
from ..schemas import DatumDocument, PairingEntry
from .weights import DominantWeight, RootVector, Weight

logger = logging.getLogger(__name__)

KIND_K = "k"
KIND_KPRIME = "kprime"


_cap_override: Optional[int] = None


def override_depth_cap(cap: Optional[int]) -> None:
    """命令行的 depth_cap 配置；None 恢复按秩的默认值。"""
    global _cap_override
    if cap is not None and cap < 0:
        raise ValueError(f"depth_cap 必须 ≥ 0，得到 {cap}")
    _cap_override = cap


def default_depth_cap(rank: int) -> int:
    """秩 ≤ 2 时 8，秩 3–4 时 5，其余 4。"""
    if _cap_override is not None:
        return _cap_override
    if rank <= 2:
        return 8
    if rank <= 4:
        return 5
    return 4


def _to_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DatumValidationError([f"无法解析配对值 {text!r}"]) from exc


@dataclass(frozen=True)
class CartanDatum:
    """经过校验的 Cartan 数据，构造后不可变。

    Attributes:
        matrix: Λ_ij
        labels: 指标名称
        fund_coords: 基本权在单根基下的坐标，GCM 退化时可能为 None
        fund_left: fund_left[j][i] = ⟨i, Λ_j⟩
        fund_right: fund_right[j][i] = ⟨Λ_j, i⟩
        den: 公分母 D
    """

    matrix: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...]
    fund_coords: Optional[Tuple[Tuple[Fraction, ...], ...]] = field(default=None, compare=False)
    fund_left: Optional[Tuple[Tuple[Fraction, ...], ...]] = None
    fund_right: Optional[Tuple[Tuple[Fraction, ...], ...]] = None
    den: int = 1

    # ------------------------------------------------------------------
    # 构造与校验
    # ------------------------------------------------------------------
    @classmethod
    def validate(
        cls,
        matrix: Sequence[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
        pairings: Optional[Dict[str, PairingEntry]] = None,
    ) -> "CartanDatum":
        """校验 Λ 矩阵并计算全部导出量。

        Args:
            matrix: 方形整数矩阵
            labels: 指标名称，默认 "1", "2", ...
            pairings: GCM 退化时的基本权配对值

        Returns:
            CartanDatum 实例

        Raises:
            DatumValidationError: 违反的条件全部列在 violations 中

        Examples:
            >>> CartanDatum.validate([[1, -1], [0, 1]]).den
            3
        """
        violations = _check_matrix(matrix)
        if violations:
            raise DatumValidationError(violations)
        n = len(matrix)
        lam = tuple(tuple(int(x) for x in row) for row in matrix)
        names = tuple(labels) if labels is not None else tuple(str(i + 1) for i in range(n))
        if len(names) != n:
            violations.append(f"labels 长度 {len(names)} 与秩 {n} 不符")
        elif len(set(names)) != n:
            violations.append("labels 中存在重复名称")
        if violations:
            raise DatumValidationError(violations)

        gcm = [[(2 * (lam[i][j] + lam[j][i])) // (2 * lam[i][i]) for j in range(n)] for i in range(n)]
        coords = _fundamental_coords(gcm)
        left: Optional[List[Tuple[Fraction, ...]]] = None
        right: Optional[List[Tuple[Fraction, ...]]] = None
        if coords is not None:
            left = [tuple(sum((c[k] * lam[i][k] for k in range(n)), Fraction(0)) for i in range(n)) for c in coords]
            right = [tuple(sum((c[k] * lam[k][i] for k in range(n)), Fraction(0)) for i in range(n)) for c in coords]

        if pairings:
            given_left, given_right = _read_pairings(pairings, names, lam)
            if left is not None and (tuple(given_left) != tuple(left) or tuple(given_right) != tuple(right)):
                raise DatumValidationError(["给出的配对值与由 Λ 求得的基本权不一致"])
            left, right = given_left, given_right

        den = 1
        for table in (left or [], right or []):
            for row in table:
                for value in row:
                    den = lcm(den, value.denominator)
        datum = cls(
            matrix=lam,
            labels=names,
            fund_coords=tuple(coords) if coords is not None else None,
            fund_left=tuple(left) if left is not None else None,
            fund_right=tuple(right) if right is not None else None,
            den=den,
        )
        logger.info("Cartan 数据校验通过：秩 %d，D = %d", n, den)
        return datum

    @classmethod
    def from_document(cls, document: DatumDocument) -> "CartanDatum":
        return cls.validate(document.Lambda, document.labels, document.pairings)

    @classmethod
    def from_file(cls, path: str | Path) -> "CartanDatum":
        """从 JSON 文件加载数据

        Raises:
            FileNotFoundError: 文件不存在
            DatumValidationError: 文档结构或条件不满足
        """
        with open(path, "r", encoding="utf-8") as f:
            raw = json.load(f)
        try:
            document = DatumDocument.model_validate(raw)
        except ValidationError as exc:
            raise DatumValidationError([err["msg"] + " @ " + ".".join(str(p) for p in err["loc"]) for err in exc.errors()]) from exc
        return cls.from_document(document)

    def to_document(self) -> DatumDocument:
        pairings = None
        if self.fund_coords is None and self.fund_left is not None:
            pairings = {
                self.labels[j]: PairingEntry(
                    left=[str(x) for x in self.fund_left[j]],
                    right=[str(x) for x in self.fund_right[j]],
                )
                for j in self.indices
            }
        return DatumDocument(Lambda=[list(row) for row in self.matrix], labels=list(self.labels), pairings=pairings)

    # ------------------------------------------------------------------
    # 导出量
    # ------------------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def indices(self) -> range:
        return range(self.rank)

    @cached_property
    def fingerprint(self) -> str:
        payload = json.dumps({"Lambda": self.matrix, "labels": self.labels, "den": self.den})
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]

    def label(self, i: int) -> str:
        return self.labels[i]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"未知指标 {label!r}，可选：{', '.join(self.labels)}") from None

    def pair(self, i: int, j: int) -> int:
        """⟨i, j⟩ = Λ_ij"""
        return self.matrix[i][j]

    def dot(self, i: int, j: int) -> int:
        """i·j = Λ_ij + Λ_ji"""
        return self.matrix[i][j] + self.matrix[j][i]

    def a(self, i: int, j: int) -> int:
        return (2 * self.dot(i, j)) // self.dot(i, i)

    @cached_property
    def gcm(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(self.a(i, j) for j in self.indices) for i in self.indices)

    def d(self, i: int) -> int:
        """i·i/2，即 v_i = v^{d_i}, t_i = t^{d_i}。"""
        return self.matrix[i][i]

    @cached_property
    def is_finite_type(self) -> bool:
        """对称化矩阵 (i·j) 是否正定。"""
        return bool(Matrix([[self.dot(i, j) for j in self.indices] for i in self.indices]).is_positive_definite)

    @property
    def has_pairings(self) -> bool:
        return self.fund_left is not None

    def require_pairings(self) -> None:
        if not self.has_pairings:
            raise DatumValidationError(["GCM 退化，非零支配权需要在 pairings 中给出配对值"])

    @property
    def depth_cap(self) -> int:
        return default_depth_cap(self.rank)

    # ------------------------------------------------------------------
    # 权的配对
    # ------------------------------------------------------------------
    def pair_left(self, i: int, weight: Weight) -> Fraction:
        """⟨i, λ+ξ⟩"""
        total = Fraction(sum(n * self.matrix[i][k] for k, n in enumerate(weight.xi.coords)))
        if any(weight.lam.coords):
            self.require_pairings()
            for j, c in enumerate(weight.lam.coords):
                if c:
                    total += c * self.fund_left[j][i]
        return total

    def pair_right(self, weight: Weight, i: int) -> Fraction:
        """⟨λ+ξ, i⟩"""
        total = Fraction(sum(n * self.matrix[k][i] for k, n in enumerate(weight.xi.coords)))
        if any(weight.lam.coords):
            self.require_pairings()
            for j, c in enumerate(weight.lam.coords):
                if c:
                    total += c * self.fund_right[j][i]
        return total

    def h(self, i: int, weight: Weight) -> int:
        """⟨h_i, λ+ξ⟩"""
        return weight.lam.coords[i] + sum(self.a(i, k) * n for k, n in enumerate(weight.xi.coords))

    def dot_weight(self, i: int, weight: Weight) -> int:
        """i·(λ+ξ) = d_i ⟨h_i, λ+ξ⟩"""
        return self.d(i) * self.h(i, weight)

    def twist(self, i: int, weight: Weight) -> Fraction:
        """⟨i, μ⟩ − ⟨μ, i⟩"""
        return self.pair_left(i, weight) - self.pair_right(weight, i)

    def k_scalar(self, i: int, which: str, weight: Weight) -> Scalar:
        """k_i（或 k_i′）在 M_{λ+ξ} 上的特征值 v^{±i·μ} t^{⟨i,μ⟩−⟨μ,i⟩}。

        Examples:
            >>> a2 = CartanDatum.validate([[1, -1], [0, 1]])
            >>> w = Weight(DominantWeight((1, 0)), RootVector((0, 0)))
            >>> str(a2.k_scalar(0, "k", w))
            'v * t^(-1/3)'
        """
        if which not in (KIND_K, KIND_KPRIME):
            raise ValueError(f"which 必须是 'k' 或 'kprime'，得到 {which!r}")
        sign = 1 if which == KIND_K else -1
        return Scalar.monomial(1, sign * self.dot_weight(i, weight), self.twist(i, weight))

    def commute_scalar(self, i: int, j: int, sign: int = -1) -> Scalar:
        """v^{sign·i·j} t^{⟨i,j⟩−⟨j,i⟩}：e′_i (sign=-1) 与 e″_i (sign=+1) 越过 f_j 的因子。"""
        return Scalar.monomial(1, sign * self.dot(i, j), self.matrix[i][j] - self.matrix[j][i])

    def v_i(self, i: int) -> Scalar:
        return Scalar.monomial(1, self.d(i))

    def t_i(self, i: int) -> Scalar:
        return Scalar.monomial(1, 0, self.d(i))

    def qint(self, n: int, i: int, flavor: QFlavor | str = QFlavor.PLAIN) -> Scalar:
        return qint(n, flavor, self.d(i))

    def qfact(self, n: int, i: int, flavor: QFlavor | str = QFlavor.PLAIN) -> Scalar:
        return qfact(n, flavor, self.d(i))

    def fundamental(self, j: int) -> DominantWeight:
        return DominantWeight(tuple(1 if k == j else 0 for k in self.indices))

    def weight(self, lam: DominantWeight, xi: Optional[RootVector] = None) -> Weight:
        if lam.rank != self.rank:
            raise ValueError(f"最高权的秩 {lam.rank} 与数据的秩 {self.rank} 不符")
        return Weight(lam, xi if xi is not None else RootVector.zero(self.rank))


def _check_matrix(matrix: Sequence[Sequence[int]]) -> List[str]:
    violations: List[str] = []
    n = len(matrix)
    if n == 0:
        return ["Λ 矩阵不能为空"]
    for row in matrix:
        if len(row) != n:
            return [f"Λ 必须是方阵，出现长度为 {len(row)} 的行"]
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                return [f"Λ 的元素必须是整数，得到 {x!r}"]
    for i in range(n):
        if matrix[i][i] <= 0:
            violations.append(f"(a) Λ_{i + 1}{i + 1} = {matrix[i][i]} 不是正整数")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if matrix[i][j] > 0:
                violations.append(f"(a) Λ_{i + 1}{j + 1} = {matrix[i][j]} 应当 ≤ 0")
            if matrix[i][i] > 0:
                q = Fraction(matrix[i][j] + matrix[j][i], matrix[i][i])
                if q.denominator != 1 or q > 0:
                    violations.append(f"(b) (Λ_{i + 1}{j + 1}+Λ_{j + 1}{i + 1})/Λ_{i + 1}{i + 1} = {q} 不是非正整数")
    diag = [matrix[i][i] for i in range(n) if matrix[i][i] > 0]
    if diag and reduce(gcd, diag) != 1:
        violations.append(f"(c) 对角元的最大公约数是 {reduce(gcd, diag)}，应当为 1")
    if not violations:
        for i in range(n):
            for j in range(n):
                a_ij = Fraction(2 * (matrix[i][j] + matrix[j][i]), 2 * matrix[i][i])
                a_ji = Fraction(2 * (matrix[j][i] + matrix[i][j]), 2 * matrix[j][j])
                if (a_ij == 0) != (a_ji == 0):
                    violations.append(f"GCM 零元不对称：a_{i + 1}{j + 1} = {a_ij}, a_{j + 1}{i + 1} = {a_ji}")
    return violations


def _fundamental_coords(gcm: Sequence[Sequence[int]]) -> Optional[List[Tuple[Fraction, ...]]]:
    """第 j 行为 Λ_j 在单根基下的坐标，即 (A^T)^{-1} 的行；A 退化时返回 None。"""
    a = Matrix(gcm)
    if a.det() == 0:
        return None
    inv = a.T.inv()
    n = a.rows
    return [tuple(Fraction(int(inv[j, k].p), int(inv[j, k].q)) for k in range(n)) for j in range(n)]


def _read_pairings(
    pairings: Dict[str, PairingEntry],
    names: Tuple[str, ...],
    lam: Tuple[Tuple[int, ...], ...],
) -> Tuple[List[Tuple[Fraction, ...]], List[Tuple[Fraction, ...]]]:
    n = len(names)
    missing = [name for name in names if name not in pairings]
    if missing:
        raise DatumValidationError([f"pairings 缺少基本权 {name}" for name in missing])
    left: List[Tuple[Fraction, ...]] = []
    right: List[Tuple[Fraction, ...]] = []
    violations: List[str] = []
    for j, name in enumerate(names):
        entry = pairings[name]
        if len(entry.left) != n or len(entry.right) != n:
            violations.append(f"pairings[{name}] 的长度应当为 {n}")
            continue
        row_l = tuple(_to_fraction(x) for x in entry.left)
        row_r = tuple(_to_fraction(x) for x in entry.right)
        for i in range(n):
            expected = lam[i][i] if i == j else 0
            if row_l[i] + row_r[i] != expected:
                violations.append(f"pairings[{name}]：⟨{names[i]},Λ⟩+⟨Λ,{names[i]}⟩ 应当为 {expected}")
        left.append(row_l)
        right.append(row_r)
    if violations:
        raise DatumValidationError(violations)
    return left, right
