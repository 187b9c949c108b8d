"""量子整数、阶乘与二项式（单参数 [n]_v 与双参数 [n]_{v,t}）。"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .scalar import Scalar, T, V


class QFlavor(str, Enum):
    PLAIN = "plain_v"
    TWO_PARAM = "two_param"


def _check(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n 必须是非负整数，得到 {n!r}")


@lru_cache(maxsize=None)
def qint(n: int, flavor: QFlavor | str = QFlavor.PLAIN, d: int = 1) -> Scalar:
    """[n]_{v_i} 或 [n]_{v_i,t_i}，其中 v_i = v^d, t_i = t^d。

    Args:
        n: 非负整数
        flavor: plain_v 或 two_param
        d: i·i/2

    Returns:
        精确标量

    Examples:
        >>> str(qint(2, "two_param"))
        'v * t + v^(-1) * t'
    """
    _check(n)
    vi, ti = V ** d, T ** d
    if QFlavor(flavor) is QFlavor.PLAIN:
        return (vi ** n - vi ** (-n)) / (vi - vi ** (-1))
    a, b = vi * ti, vi / ti
    return (a ** n - b ** (-n)) / (a - b ** (-1))


@lru_cache(maxsize=None)
def qfact(n: int, flavor: QFlavor | str = QFlavor.PLAIN, d: int = 1) -> Scalar:
    _check(n)
    out = Scalar.one()
    for k in range(1, n + 1):
        out = out * qint(k, flavor, d)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, k: int, flavor: QFlavor | str = QFlavor.PLAIN, d: int = 1) -> Scalar:
    _check(n)
    if not isinstance(k, int) or not 0 <= k <= n:
        raise ValueError(f"二项式要求 0 ≤ k ≤ n，得到 n={n}, k={k}")
    return qfact(n, flavor, d) / (qfact(k, flavor, d) * qfact(n - k, flavor, d))
