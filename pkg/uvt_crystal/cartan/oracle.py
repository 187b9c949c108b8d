"""t=1 的根系对照：正根、Kostant 分拆函数与权重数。

这些量与双参数计算完全独立，只用来核对维数。
"""

from __future__ import annotations

import logging
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sympy import Matrix

from ..errors import OracleUnavailableError
from .datum import CartanDatum
from .weights import DominantWeight, RootVector, grades_up_to

logger = logging.getLogger(__name__)

_MAX_ROOTS = 2000
_MAX_WEYL = 50000


def _require_finite(datum: CartanDatum) -> None:
    if not datum.is_finite_type:
        raise OracleUnavailableError("维数对照只支持有限型数据")


def _reflect_root(datum: CartanDatum, i: int, beta: Tuple[int, ...]) -> Tuple[int, ...]:
    """s_i(β) = β − ⟨h_i, β⟩ α_i"""
    h = sum(datum.a(i, k) * n for k, n in enumerate(beta))
    out = list(beta)
    out[i] -= h
    return tuple(out)


@lru_cache(maxsize=None)
def positive_roots(datum: CartanDatum) -> Tuple[Tuple[int, ...], ...]:
    """单根在 Weyl 群作用下的闭包中所有正根，按高度排序。"""
    _require_finite(datum)
    n = datum.rank
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            gamma = _reflect_root(datum, i, beta)
            if all(c >= 0 for c in gamma) and any(gamma) and gamma not in seen:
                seen.add(gamma)
                queue.append(gamma)
                if len(seen) > _MAX_ROOTS:
                    raise OracleUnavailableError("正根数超出上限")
    return tuple(sorted(seen, key=lambda r: (sum(r), r)))


def kostant_partition(datum: CartanDatum, beta: Tuple[int, ...]) -> int:
    """把 β ∈ Q₊ 写成正根之和的方式数。

    Examples:
        >>> a2 = CartanDatum.validate([[1, -1], [0, 1]])
        >>> kostant_partition(a2, (1, 1))
        2
    """
    if any(c < 0 for c in beta):
        return 0
    roots = positive_roots(datum)

    @lru_cache(maxsize=None)
    def count(rest: Tuple[int, ...], start: int) -> int:
        if not any(rest):
            return 1
        total = 0
        for idx in range(start, len(roots)):
            root = roots[idx]
            nxt = tuple(a - b for a, b in zip(rest, root))
            if all(c >= 0 for c in nxt):
                total += count(nxt, idx)
        return total

    return count(tuple(beta), 0)


def half_dimension(datum: CartanDatum, xi: RootVector) -> int:
    """dim U⁻_ξ（t=1）= p(−ξ)。"""
    return kostant_partition(datum, xi.content())


def _reflect_weight(datum: CartanDatum, i: int, mu: Tuple[int, ...]) -> Tuple[int, ...]:
    # α_i 的 h 坐标是 (a_ji)_j
    return tuple(m - mu[i] * datum.a(j, i) for j, m in enumerate(mu))


@lru_cache(maxsize=None)
def weyl_orbit_of_rho(datum: CartanDatum) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """ρ 的 Weyl 轨道，每项为 (w(ρ) 的 h 坐标, sign(w))；ρ 正则，轨道与 W 一一对应。"""
    return _orbit_of(datum, DominantWeight.zero(datum.rank))


def _h_to_alpha(datum: CartanDatum, h: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """h 坐标 → 单根坐标（c = A^{-1} h）；非整数时返回 None。"""
    inv = _gcm_inverse(datum)
    out = []
    for j in datum.indices:
        value = sum((inv[j][k] * h[k] for k in datum.indices), Fraction(0))
        if value.denominator != 1:
            return None
        out.append(int(value))
    return tuple(out)


@lru_cache(maxsize=None)
def _gcm_inverse(datum: CartanDatum) -> Tuple[Tuple[Fraction, ...], ...]:
    inv = Matrix(datum.gcm).inv()
    n = datum.rank
    return tuple(tuple(Fraction(int(inv[j, k].p), int(inv[j, k].q)) for k in range(n)) for j in range(n))


def weight_multiplicity(datum: CartanDatum, lam: DominantWeight, xi: RootVector) -> int:
    """Kostant 重数公式：dim V(λ)_{λ+ξ} = Σ_w sign(w) p(w(λ+ρ) − (λ+ξ+ρ))。"""
    if not xi.is_negative:
        return 0
    orbit = _orbit_of(datum, lam)
    # λ+ξ 的 h 坐标
    target = tuple(
        lam.coords[j] + 1 + sum(datum.a(j, k) * n for k, n in enumerate(xi.coords)) for j in datum.indices
    )
    total = 0
    for mu, sign in orbit:
        diff = _h_to_alpha(datum, tuple(a - b for a, b in zip(mu, target)))
        if diff is not None:
            total += sign * kostant_partition(datum, diff)
    return total


@lru_cache(maxsize=None)
def _orbit_of(datum: CartanDatum, lam: DominantWeight) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    _require_finite(datum)
    start = tuple(c + 1 for c in lam.coords)
    signs: Dict[Tuple[int, ...], int] = {start: 1}
    queue = deque([start])
    while queue:
        mu = queue.popleft()
        for i in datum.indices:
            nu = _reflect_weight(datum, i, mu)
            if nu not in signs:
                signs[nu] = -signs[mu]
                queue.append(nu)
                if len(signs) > _MAX_WEYL:
                    raise OracleUnavailableError("Weyl 群过大")
    return tuple(sorted(signs.items()))


def module_dimension(datum: CartanDatum, lam: DominantWeight) -> int:
    """Weyl 维数公式 Π_{β>0} (λ+ρ, β)/(ρ, β)。"""
    num = Fraction(1)
    for beta in positive_roots(datum):
        top = sum(c * datum.d(k) * (lam.coords[k] + 1) for k, c in enumerate(beta))
        bottom = sum(c * datum.d(k) for k, c in enumerate(beta))
        num *= Fraction(top, bottom)
    if num.denominator != 1:
        raise OracleUnavailableError(f"Weyl 维数公式得到非整数 {num}")
    return int(num)


def character(datum: CartanDatum, lam: DominantWeight, depth: int) -> Dict[RootVector, int]:
    """|ξ| ≤ depth 范围内所有非零权重数。"""
    out: Dict[RootVector, int] = {}
    for xi in grades_up_to(datum.rank, depth):
        m = weight_multiplicity(datum, lam, xi)
        if m:
            out[xi] = m
    logger.debug("λ=%s 深度 %d 的特征标：%d 个非零权", lam, depth, len(out))
    return out


def string_bound(datum: CartanDatum, lam: DominantWeight) -> int:
    """V(λ) 中 −ξ 的最大高度（最低权 w₀λ 与 λ 之差的高度）。"""
    lowest = next(mu for mu, _ in _orbit_of(datum, lam) if all(c < 0 for c in mu))
    diff = _h_to_alpha(datum, tuple(a - b for a, b in zip(tuple(c + 1 for c in lam.coords), lowest)))
    # w₀(λ+ρ) = w₀λ − ρ，所以 (λ+ρ) − w₀(λ+ρ) = (λ − w₀λ) + 2ρ
    rho2 = _h_to_alpha(datum, tuple(2 for _ in datum.indices))
    if diff is None or rho2 is None:
        raise OracleUnavailableError("无法求出最低权")
    return sum(diff) - sum(rho2)


__all__: List[str] = [
    "positive_roots",
    "kostant_partition",
    "half_dimension",
    "weight_multiplicity",
    "weyl_orbit_of_rho",
    "module_dimension",
    "character",
    "string_bound",
]
