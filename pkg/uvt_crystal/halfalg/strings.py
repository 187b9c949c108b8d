"""i-串分解 x = Σ f_i^{(n)} x_n（x_n 被升高算子零化）与 Kashiwara 算子。

对 U⁻ 升高算子是 e′_i，对模是 e_i；两者都通过 WeightedSpace 接口访问。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..cartan import RootVector
from ..errors import CrystalInvariantError, DepthExceededError
from ..ratfun import Scalar, linalg
from .quotient import WeightVector, WeightedSpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StringPiece:
    """f_i^{(n)} 作用在 Ker 上的一个基向量。"""

    n: int
    source: RootVector
    kernel: Tuple[Scalar, ...]


@dataclass(frozen=True)
class StringData:
    grade: RootVector
    i: int
    pieces: Tuple[StringPiece, ...]
    inverse: Tuple[Tuple[Scalar, ...], ...]


@dataclass(frozen=True)
class StringComponent:
    """分解中的一项 f_i^{(n)} x_n，x_n 位于 source = grade + nα_i。"""

    n: int
    vector: WeightVector


def _kernel(space: WeightedSpace, i: int, grade: RootVector) -> List[List[Scalar]]:
    basis = space.basis(grade)
    if basis.dim == 0:
        return []
    target = grade.shift(i, 1)
    if not target.is_negative or space.basis(target).dim == 0:
        return [basis.unit(k) for k in range(basis.dim)]
    columns = [space.lower(i, grade, basis.unit(k)) for k in range(basis.dim)]
    rows = [list(r) for r in zip(*columns)]
    return linalg.nullspace(rows, basis.dim)


def string_data(space: WeightedSpace, i: int, grade: RootVector) -> StringData:
    """次数 grade 上 i-串分解所需的核基与逆矩阵。

    Raises:
        CrystalInvariantError: 各 f_i^{(n)} Ker 的像不构成一组基
    """

    def build() -> StringData:
        dim = space.dimension(grade)
        pieces: List[StringPiece] = []
        columns: List[List[Scalar]] = []
        n = 0
        while grade.coords[i] + n <= 0:
            source = grade.shift(i, n)
            limit = space.string_length(i, source)
            if limit is not None and n > limit:
                # 模中 f_i^{(n)} 在 ⟨h_i, wt⟩ < n 的 Ker e_i 上为零
                n += 1
                continue
            for vec in _kernel(space, i, source):
                image = space.raise_(i, n, source, vec) if n else list(vec)
                pieces.append(StringPiece(n, source, tuple(vec)))
                columns.append(image)
            n += 1
        if len(columns) != dim:
            raise CrystalInvariantError(
                f"次数 {grade} 的 {i + 1}-串分解给出 {len(columns)} 个向量，权空间维数为 {dim}",
                {"grade": list(grade.coords), "i": i, "found": len(columns), "dim": dim},
            )
        inverse = linalg.inverse(linalg.transpose(columns, dim)) if dim else []
        logger.debug("次数 %s 的 %d-串数据：%d 段", grade, i + 1, len(pieces))
        return StringData(grade, i, tuple(pieces), tuple(tuple(r) for r in inverse))

    return space.memo(("string", i, grade), build)


def istring(space: WeightedSpace, i: int, vec: WeightVector) -> List[StringComponent]:
    """唯一分解 vec = Σ f_i^{(n)} x_n，按 n 升序返回非零分量。"""
    if vec.is_zero:
        return []
    data = string_data(space, i, vec.grade)
    weights = linalg.matvec([list(r) for r in data.inverse], list(vec.coords))
    by_n: dict = {}
    for piece, a in zip(data.pieces, weights):
        if not a:
            continue
        acc = by_n.get(piece.n)
        part = [a * x for x in piece.kernel]
        by_n[piece.n] = part if acc is None else [p + q for p, q in zip(acc, part)]
    out = []
    for n in sorted(by_n):
        source = vec.grade.shift(i, n)
        out.append(StringComponent(n, WeightVector(space, source, tuple(by_n[n]))))
    return out


def compose(space: WeightedSpace, i: int, grade: RootVector, components: List[Tuple[int, WeightVector]]) -> WeightVector:
    """Σ f_i^{(n)} x_n，结果位于 grade。"""
    total = space.zero_vector(grade)
    for n, x in components:
        if n < 0 or x.is_zero:
            continue
        coords = space.raise_(i, n, x.grade, x.coords) if n else list(x.coords)
        total = total + WeightVector(space, grade, tuple(coords))
    return total


def tilde_f(space: WeightedSpace, i: int, vec: WeightVector) -> WeightVector:
    """f̃_i(Σ f_i^{(n)} x_n) = Σ f_i^{(n+1)} x_n

    Raises:
        DepthExceededError: 结果次数超出深度窗口
    """
    target = vec.grade.shift(i, -1)
    parts = [(c.n + 1, c.vector) for c in istring(space, i, vec)]
    if target.height > space.depth and not space.complete:
        raise DepthExceededError(target.height, space.depth, "Kashiwara 算子")
    return compose(space, i, target, parts)


def tilde_e(space: WeightedSpace, i: int, vec: WeightVector) -> Optional[WeightVector]:
    """ẽ_i(Σ f_i^{(n)} x_n) = Σ_{n≥1} f_i^{(n−1)} x_n；次数离开 Q₋ 时返回 None（即 0）。"""
    target = vec.grade.shift(i, 1)
    if not target.is_negative:
        return None
    parts = [(c.n - 1, c.vector) for c in istring(space, i, vec) if c.n >= 1]
    return compose(space, i, target, parts)

