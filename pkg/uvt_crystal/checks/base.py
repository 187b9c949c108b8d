"""检查套件的基础定义"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..cartan import CartanDatum, DominantWeight
from ..schemas import CheckReport


@dataclass
class SuiteContext:
    """一次检查运行的参数。

    Attributes:
        hw / hw2: 最高权 λ、μ（可选，缺省时由套件自行选择）
        depth: 深度窗口；None 表示由套件决定
        seed: 随机检查的种子
        degree_bound: 全局基求解的 v 次数界
    """

    datum: CartanDatum
    hw: Optional[DominantWeight] = None
    hw2: Optional[DominantWeight] = None
    depth: Optional[int] = None
    seed: int = 0
    degree_bound: Optional[int] = None
    binf: bool = False
    _rng: Optional[random.Random] = field(default=None, repr=False)

    @property
    def rng(self) -> random.Random:
        if self._rng is None:
            self._rng = random.Random(self.seed)
        return self._rng

    def depth_or(self, default: int) -> int:
        return self.depth if self.depth is not None else min(default, self.datum.depth_cap)

    def lam_or(self, default: DominantWeight) -> DominantWeight:
        return _require_weight(self.hw if self.hw is not None else default, "hw", self.datum)

    def mu_or(self, default: DominantWeight) -> DominantWeight:
        return _require_weight(self.hw2 if self.hw2 is not None else default, "hw2", self.datum)


@dataclass
class CheckSuite:
    """一个可以从命令行按名称运行的性质检查。"""

    name: str  # 套件名称
    description: str  # 检查内容
    runner: Callable[[SuiteContext], CheckReport]

    def run(self, context: SuiteContext) -> CheckReport:
        """执行检查"""
        return self.runner(context)


def _require_weight(value: Optional[DominantWeight], key: str, datum: CartanDatum) -> DominantWeight:
    """取出必需的最高权参数并核对秩。

    Raises:
        ValueError: 缺少参数或秩不符
    """
    if value is None:
        raise ValueError(f"缺少必需的参数: {key}")
    if value.rank != datum.rank:
        raise ValueError(f"参数 {key} 得到的 {value} 的秩应为 {datum.rank}")
    return value
