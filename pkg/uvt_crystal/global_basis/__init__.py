"""整形式与全局晶体基：单项式基、三角 bar 修正与 t=1 对照"""

from .compare import (
    T1Report,
    divided_power_membership,
    global_basis,
    global_check,
    module_global_basis,
    projection_defects,
    star_defects,
    t1_check,
    t1_compare,
    uniqueness_defects,
)
from .monomials import IntegralBasisSlice, collapse_word, monomial_slice, monomials_of_content
from .oracle import OneParamHalf
from .solver import GlobalBasis, GlobalBasisElement, solve_global_basis
from .table import basis_document, partial_document, render_table, to_tsv, write_table

__all__ = [
    "IntegralBasisSlice",
    "collapse_word",
    "monomials_of_content",
    "monomial_slice",
    "GlobalBasis",
    "GlobalBasisElement",
    "solve_global_basis",
    "global_basis",
    "module_global_basis",
    "divided_power_membership",
    "uniqueness_defects",
    "star_defects",
    "projection_defects",
    "T1Report",
    "t1_compare",
    "OneParamHalf",
    "global_check",
    "t1_check",
    "basis_document",
    "partial_document",
    "to_tsv",
    "render_table",
    "write_table",
]
