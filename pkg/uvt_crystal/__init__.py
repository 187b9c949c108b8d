"""uvt-crystal - 双参数量子代数 U_{v,t}(g) 的晶体基与全局基

精确算术构造 U⁻、最高权模与张量积，计算 B(λ)、B(∞) 的晶体图，
把结构性质作为可执行检查运行，并用 bar 不变的三角求解得到全局晶体基。
"""

from .ratfun import Scalar
from .cartan import CartanDatum, DominantWeight, RootVector, Weight
from .halfalg import HalfElt, HalfSpace, eprime, edprime, pol_form
from .modules import HWModule, TensorModule, phi_psi, pi_lambda
from .crystal import CrystalGraph, gen_crystal_binf, gen_crystal_module, tensor_rule_check
from .global_basis import GlobalBasis, global_basis, t1_compare
from .checks import CheckSuite, default_suites
from .errors import UVTError

__version__ = "1.0.0"

__all__ = [
    # Scalars
    "Scalar",
    # Cartan data
    "CartanDatum",
    "DominantWeight",
    "RootVector",
    "Weight",
    # U⁻
    "HalfElt",
    "HalfSpace",
    "eprime",
    "edprime",
    "pol_form",
    # Modules
    "HWModule",
    "TensorModule",
    "phi_psi",
    "pi_lambda",
    # Crystals
    "CrystalGraph",
    "gen_crystal_binf",
    "gen_crystal_module",
    "tensor_rule_check",
    # Global bases
    "GlobalBasis",
    "global_basis",
    "t1_compare",
    # Checks
    "CheckSuite",
    "default_suites",
    "UVTError",
]
