"""子环成员判定：A（v=0 无极点）、Ā（v=∞ 无极点）、A_Z 与 K_Z。"""

from __future__ import annotations

import logging
from enum import Enum
from typing import List, Optional

from .scalar import RING, Scalar

logger = logging.getLogger(__name__)


class SubRing(str, Enum):
    A = "A"
    ABAR = "Abar"
    AZ = "AZ"
    KZ = "KZ"


def in_A(x: Scalar) -> bool:
    val = x.v_valuation()
    return val is None or val >= 0


def in_Abar(x: Scalar) -> bool:
    deg = x.v_degree_at_infinity()
    return deg is None or deg <= 0


def _cyclotomic_split(denom) -> Optional[List[int]]:
    """把仅含 v 的分母拆成若干 (1 - v^{2n}) 的因子，返回用到的 n；失败返回 None。"""
    rest = denom
    degree = max(a for a, _ in rest.keys())
    used: List[int] = []
    v = RING.gens[0]
    for n in range(1, degree + 2):
        target = RING.one - v ** (2 * n)
        while max(a for a, _ in rest.keys()) > 0:
            g = rest.gcd(target)
            if max(a for a, _ in g.keys()) == 0:
                break
            rest = rest.exquo(g)
            used.append(n)
        if max(a for a, _ in rest.keys()) == 0:
            return used
    return None


def in_AZ(x: Scalar) -> Optional[bool]:
    """A_Z 成员判定（保守）：True / False / None（无法判定）。

    分母必须是 ±t^{k/D} 乘以若干 (1 - v^{2n}) 的因子，且清去这些因子后
    分子系数为整数。
    """
    if x.is_zero:
        return True
    if not in_A(x):
        return False
    denom = x.frac.denom
    min_b = min(b for _, b in denom.keys())
    if any(b != min_b for _, b in denom.keys()):
        return False
    v_only = RING.from_dict({(a, 0): c for (a, _), c in denom.items()})
    used = _cyclotomic_split(v_only)
    if used is None:
        logger.debug("A_Z 判定无结论：%s", x)
        return None
    cleared = x
    for n in used:
        cleared = cleared * (Scalar.one() - Scalar.monomial(1, 2 * n))
    if not cleared.is_laurent():
        return None
    return all(c.denominator == 1 for c in cleared.laurent_terms().values())


def in_KZ(x: Scalar) -> Optional[bool]:
    val = x.v_valuation()
    if val is None or val >= 0:
        return in_AZ(x)
    return in_AZ(x * Scalar.monomial(1, -val))


def membership(x: Scalar, ring: SubRing | str) -> Optional[bool]:
    """x 是否属于给定子环；A_Z、K_Z 可能返回 None 表示无法判定。

    Examples:
        >>> membership(Scalar.one() / (1 + Scalar.monomial(1, 2)), "A")
        True
    """
    ring = SubRing(ring)
    if ring is SubRing.A:
        return in_A(x)
    if ring is SubRing.ABAR:
        return in_Abar(x)
    if ring is SubRing.AZ:
        return in_AZ(x)
    return in_KZ(x)
