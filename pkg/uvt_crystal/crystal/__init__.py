"""晶体格与晶体基：闭包、张量积规则、投影、性质检查与导出"""

from .checks import (
    binf_space,
    node_counts,
    lattice_check,
    ortho_check,
    star_check,
    star_map,
    star_permutation,
    string_count_check,
    strings_check,
)
from .closure import close_crystal, gen_crystal_binf, gen_crystal_module
from .export import export, from_json, graph_document, render, to_dot, to_json, write_graph
from .graph import CrystalEdge, CrystalGraph, CrystalNode
from .lattice import LatticeSlice, canonical_sign, echelon_basis
from .projection import Projection, project_binf
from .tensor_rule import (
    TensorCrystal,
    TensorRuleReport,
    phi_crystal_defects,
    phi_psi_crystal,
    tensor_crystal,
    tensor_rule_check,
)

__all__ = [
    "CrystalNode",
    "CrystalEdge",
    "CrystalGraph",
    "LatticeSlice",
    "echelon_basis",
    "canonical_sign",
    "close_crystal",
    "gen_crystal_module",
    "gen_crystal_binf",
    "TensorCrystal",
    "TensorRuleReport",
    "tensor_crystal",
    "tensor_rule_check",
    "phi_crystal_defects",
    "phi_psi_crystal",
    "Projection",
    "project_binf",
    "binf_space",
    "node_counts",
    "ortho_check",
    "star_check",
    "star_map",
    "star_permutation",
    "lattice_check",
    "strings_check",
    "string_count_check",
    "export",
    "render",
    "graph_document",
    "to_json",
    "from_json",
    "to_dot",
    "write_graph",
]
