"""系数域 Q(v, t^{1/D}) 的精确算术、q-组合数与线性代数。"""

from .scalar import Scalar, T, V
from .qnumbers import QFlavor, qbinom, qfact, qint
from .rings import SubRing, in_A, in_Abar, in_AZ, in_KZ, membership
from . import linalg

__all__ = [
    "Scalar",
    "V",
    "T",
    "QFlavor",
    "qint",
    "qfact",
    "qbinom",
    "SubRing",
    "membership",
    "in_A",
    "in_Abar",
    "in_AZ",
    "in_KZ",
    "linalg",
]
