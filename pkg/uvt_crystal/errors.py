"""uvt-crystal 的异常层级。"""

from __future__ import annotations

from typing import Any, Dict, List, Optional


class UVTError(RuntimeError):
    """所有计算错误的基类。"""


class ScalarError(UVTError):
    """标量域运算失败。"""


class DivisionByZeroError(ScalarError):
    """除数为零。"""


class PoleError(ScalarError):
    """在 v=0 处存在极点，无法求值。"""

    def __init__(self, valuation: int, message: Optional[str] = None) -> None:
        self.valuation = valuation
        super().__init__(message or f"在 v=0 处有极点（v-赋值 = {valuation}）")


class DatumValidationError(UVTError):
    """Cartan 数据不满足条件。"""

    def __init__(self, violations: List[str]) -> None:
        self.violations = list(violations)
        super().__init__("Cartan 数据无效：" + "；".join(self.violations))


class DepthExceededError(UVTError):
    """请求的权超出深度上限。"""

    def __init__(self, height: int, cap: int, what: str = "权空间") -> None:
        self.height = height
        self.cap = cap
        super().__init__(f"{what}高度 {height} 超出深度上限 {cap}")


class RadicalMismatchError(UVTError):
    """Gram 商空间维数与独立的 t=1 维数不一致。"""


class LatticeError(UVTError):
    """向量离开晶体格（坐标不在 A 中）。"""


class CrystalInvariantError(UVTError):
    """晶体结构不变量被破坏，附带结构化反例。"""

    def __init__(self, message: str, counterexample: Optional[Dict[str, Any]] = None) -> None:
        self.counterexample = dict(counterexample or {})
        super().__init__(message)


class ConvergenceError(UVTError):
    """整体基求解在给定 v-次数界内未收敛。"""

    def __init__(self, message: str, partial: Optional[Dict[Any, Any]] = None) -> None:
        self.partial = dict(partial or {})
        super().__init__(message)


class OracleUnavailableError(UVTError):
    """t=1 对照计算在所请求的深度不可用。"""
