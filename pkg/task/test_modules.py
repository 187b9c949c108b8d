#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
模测试
覆盖 V(λ) 的维数、生成元作用、张量积、Φ/Ψ 与模上的恒等式
"""

import unittest

from uvt_crystal.cartan import CartanDatum, DominantWeight, RootVector, grades_up_to
from uvt_crystal.errors import DepthExceededError
from uvt_crystal.halfalg import HalfElt, HalfSpace
from uvt_crystal.halfalg.strings import string_data
from uvt_crystal.modules import (
    HWModule,
    TensorModule,
    act,
    build_module,
    congruence_holds,
    phi_psi,
    pi_lambda,
    polarization_defect,
    power_image_dimension,
    resolution_identity,
)
from uvt_crystal.ratfun import Scalar, V

A1 = CartanDatum.validate([[1]])
A2 = CartanDatum.validate([[1, -1], [0, 1]])


def g(*coords):
    return RootVector(tuple(coords))


class TestHighestWeightModule(unittest.TestCase):
    """最高权模测试类"""

    def test_sl2_dimensions(self):
        """测试 V(2) 的权空间维数"""
        module = HWModule(A1, DominantWeight((2,)))
        self.assertTrue(module.complete)
        self.assertEqual([module.dimension(g(-n)) for n in range(4)], [1, 1, 1, 0])

    def test_a2_total_dimension(self):
        """测试 A₂ 上 V(Λ₁) 与伴随表示的总维数"""
        for lam, total in (((1, 0), 3), ((1, 1), 8)):
            module = build_module(A2, DominantWeight(lam))
            dims = [module.dimension(x) for x in grades_up_to(2, module.depth)]
            self.assertEqual(sum(dims), total)
        adjoint = HWModule(A2, DominantWeight((1, 1)))
        self.assertEqual(adjoint.dimension(g(-1, -1)), 2)

    def test_depth_above_cap(self):
        """测试超出上限的深度"""
        with self.assertRaises(DepthExceededError):
            HWModule(A2, DominantWeight((1, 1)), depth=20)

    def test_e_inverts_f_on_highest(self):
        """测试 e f y_λ = y_λ（λ = Λ₁，sl₂）"""
        module = HWModule(A1, DominantWeight((1,)))
        y = module.highest()
        fy = act(module, "f", 0, y)
        self.assertFalse(fy.is_zero)
        self.assertTrue(act(module, "f", 0, fy).is_zero)
        self.assertEqual(act(module, "e", 0, fy), y)
        self.assertTrue(act(module, "e", 0, y).is_zero)

    def test_unknown_generator(self):
        """测试未知生成元"""
        module = HWModule(A1, DominantWeight((1,)))
        with self.assertRaises(ValueError):
            act(module, "x", 0, module.highest())

    def test_pi_lambda(self):
        """测试 π_λ(f) = f y_λ"""
        module = HWModule(A1, DominantWeight((2,)))
        self.assertEqual(pi_lambda(module, HalfElt.f(1, 0)), module.word_vector((0,)))
        with self.assertRaises(ValueError):
            pi_lambda(module, HalfElt.zero(1))


class TestTensorModule(unittest.TestCase):
    """张量模测试类"""

    def setUp(self):
        self.left = HWModule(A1, DominantWeight((1,)))
        self.right = HWModule(A1, DominantWeight((1,)))
        self.tensor = TensorModule(self.left, self.right)

    def test_dimensions(self):
        """测试 V(1)⊗V(1) 的维数 1, 2, 1"""
        self.assertEqual([self.tensor.dimension(g(-n)) for n in range(4)], [1, 2, 1, 0])

    def test_coproduct_of_f(self):
        """测试 Δ(f)(y⊗y) = f y⊗y + k y⊗f y"""
        top = self.tensor.pure(self.left.highest(), self.right.highest())
        self.assertEqual(top, self.tensor.highest())
        image = act(self.tensor, "f", 0, top)
        self.assertCountEqual(list(image.coords), [V, Scalar.one()])

    def test_different_data(self):
        """测试不同 Cartan 数据的张量积"""
        with self.assertRaises(ValueError):
            TensorModule(self.left, HWModule(A2, DominantWeight((1, 0))))


class TestStringDecomposition(unittest.TestCase):
    """模上 i-串分解测试类"""

    def test_string_length(self):
        """测试模上串长为 ⟨h_i, wt⟩，U⁻ 上无上界"""
        module = HWModule(A2, DominantWeight((1, 1)))
        self.assertEqual(module.string_length(0, g(0, -1)), 2)
        self.assertEqual(module.string_length(0, g(-1, -1)), 0)
        self.assertIsNone(HalfSpace(A2, 3).string_length(0, g(0, -1)))

    def test_multiplicity_two(self):
        """测试 V(Λ₁+Λ₂) 中 f_1^{(n)} 越过串长的核向量不计入分解"""
        module = HWModule(A2, DominantWeight((1, 1)))
        data = string_data(module, 0, g(-2, -1))
        self.assertEqual([(p.n, p.source) for p in data.pieces], [(2, g(0, -1))])
        data = string_data(module, 0, g(-1, -1))
        self.assertEqual(len(data.pieces), module.dimension(g(-1, -1)))

    def test_tensor_lowest_weight(self):
        """测试 V(1)⊗V(1) 最低权空间只由 f^{(2)}(y⊗y) 张成"""
        tensor = TensorModule(HWModule(A1, DominantWeight((1,))), HWModule(A1, DominantWeight((1,))))
        data = string_data(tensor, 0, g(-2))
        self.assertEqual([(p.n, p.source) for p in data.pieces], [(2, g(0))])

    def test_tensor_cache_key(self):
        """测试内容相同的张量模共用同一缓存键"""
        make = lambda: TensorModule(HWModule(A1, DominantWeight((1,))), HWModule(A1, DominantWeight((2,))))
        self.assertEqual(make().cache_tag(), make().cache_tag())
        other = TensorModule(HWModule(A1, DominantWeight((2,))), HWModule(A1, DominantWeight((1,))))
        self.assertNotEqual(make().cache_tag(), other.cache_tag())


class TestPhiPsi(unittest.TestCase):
    """Φ 与 Ψ 测试类"""

    def test_psi_inverts_phi(self):
        """测试 Ψ∘Φ = id"""
        maps = phi_psi(A1, DominantWeight((1,)), DominantWeight((1,)))
        grades = maps.grades()
        self.assertEqual(grades, [g(0), g(-1), g(-2)])
        for grade in grades:
            self.assertIsNone(maps.inverse_defect(grade))


class TestIdentities(unittest.TestCase):
    """模上恒等式测试类"""

    def test_polarization(self):
        """测试 (f_i x, y) = (x, v_i^{-1} k_i′^{-1} e_i y)"""
        module = HWModule(A1, DominantWeight((3,)))
        x = module.word_vector((0,))
        y = module.word_vector((0, 0))
        self.assertEqual(polarization_defect(module, 0, x, y), Scalar.zero())
        with self.assertRaises(ValueError):
            polarization_defect(module, 0, x, x)

    def test_resolution(self):
        """测试 e_i^{(k)} 分解公式"""
        module = HWModule(A1, DominantWeight((3,)))
        self.assertTrue(resolution_identity(module, 0, module.word_vector((0, 0))))
        self.assertTrue(resolution_identity(module, 0, module.word_vector((0, 0, 0))))
        with self.assertRaises(ValueError):
            resolution_identity(module, 0, module.highest())

    def test_congruence(self):
        """测试 λ 足够大时模形式与 U⁻ 形式的同余"""
        module = HWModule(A1, DominantWeight((5,)))
        x = HalfElt.f(1, 0, 2)
        self.assertTrue(congruence_holds(module, x, x))
        small = HWModule(A1, DominantWeight((2,)))
        with self.assertRaises(ValueError):
            congruence_holds(small, x, x)

    def test_power_image_dimension(self):
        """测试 f^n M 的维数"""
        module = HWModule(A1, DominantWeight((2,)))
        self.assertEqual(power_image_dimension(module, 0, 1, g(-1)), 1)
        self.assertEqual(power_image_dimension(module, 0, 2, g(-2)), 1)
        self.assertEqual(power_image_dimension(module, 0, 0, g(-1)), 1)


if __name__ == "__main__":
    unittest.main(verbosity=2)
