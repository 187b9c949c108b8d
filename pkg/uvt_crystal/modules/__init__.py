"""最高权模 V(λ)、张量模与模之间的映射"""

from .highest_weight import HWModule, ModuleVec, act, build_module
from .identities import (
    congruence_defect,
    congruence_holds,
    lattice_norm_ok,
    polarization_defect,
    power_image_dimension,
    resolution_identity,
    resolution_terms,
)
from .maps import PhiPsi, phi_psi, pi_lambda
from .tensor import TensorModule

__all__ = [
    "HWModule",
    "ModuleVec",
    "act",
    "build_module",
    "TensorModule",
    "pi_lambda",
    "PhiPsi",
    "phi_psi",
    "polarization_defect",
    "resolution_terms",
    "resolution_identity",
    "congruence_defect",
    "congruence_holds",
    "power_image_dimension",
    "lattice_norm_ok",
]
