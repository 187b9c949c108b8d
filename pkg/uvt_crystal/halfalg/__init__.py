"""U⁻_{v,t}(g)：自由单词、e′/e″、极化形式与 Gram 商"""

from .element import HalfElt, Word, format_word
from .operators import (
    ad_k,
    ad_k_edprime,
    divided_power,
    edprime,
    eprime,
    monomial,
    pol_form,
    pol_words,
)
from .quotient import GramQuotient, WeightedSpace, WeightVector, WordSpace
from .serre import eprime_serre, padded_relators, serre_element
from .strings import StringComponent, istring, tilde_e, tilde_f
from .weightspace import (
    HalfSpace,
    WeightSpaceBasis,
    bar_half,
    istring_half,
    joint_kernel_dimension,
    kernel_contains,
    star_half,
    tilde_e_half,
    tilde_f_half,
    weight_basis,
)

__all__ = [
    "HalfElt",
    "Word",
    "format_word",
    "eprime",
    "edprime",
    "pol_form",
    "pol_words",
    "ad_k",
    "ad_k_edprime",
    "divided_power",
    "monomial",
    "GramQuotient",
    "WeightedSpace",
    "WeightVector",
    "WordSpace",
    "serre_element",
    "eprime_serre",
    "padded_relators",
    "StringComponent",
    "istring",
    "tilde_e",
    "tilde_f",
    "HalfSpace",
    "WeightSpaceBasis",
    "weight_basis",
    "kernel_contains",
    "joint_kernel_dimension",
    "star_half",
    "bar_half",
    "istring_half",
    "tilde_e_half",
    "tilde_f_half",
]
