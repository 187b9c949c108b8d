"""Cartan 数据、权与 t=1 维数对照"""

from .datum import KIND_K, KIND_KPRIME, CartanDatum, default_depth_cap, override_depth_cap
from .weights import DominantWeight, RootVector, Weight, grades_up_to, words_of_content

__all__ = [
    "CartanDatum",
    "default_depth_cap",
    "override_depth_cap",
    "KIND_K",
    "KIND_KPRIME",
    "RootVector",
    "DominantWeight",
    "Weight",
    "grades_up_to",
    "words_of_content",
]
