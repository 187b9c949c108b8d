#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
U⁻ 测试
覆盖 e′/e″、极化形式、Serre 关系子、Gram 商与 U⁻ 上的 Kashiwara 算子
"""

import unittest

from uvt_crystal.cartan import CartanDatum, RootVector
from uvt_crystal.errors import DepthExceededError
from uvt_crystal.halfalg import (
    HalfElt,
    HalfSpace,
    ad_k_edprime,
    divided_power,
    edprime,
    eprime,
    eprime_serre,
    joint_kernel_dimension,
    kernel_contains,
    padded_relators,
    pol_form,
    pol_words,
    serre_element,
    star_half,
    tilde_e_half,
    tilde_f_half,
    weight_basis,
)
from uvt_crystal.ratfun import Scalar, V

A1 = CartanDatum.validate([[1]])
A2 = CartanDatum.validate([[1, -1], [0, 1]])


def word(*letters):
    return HalfElt.word(A2.rank, letters)


class TestElements(unittest.TestCase):
    """齐次元素测试类"""

    def test_grade_and_product(self):
        """测试次数与单词拼接"""
        x = word(0) * word(1)
        self.assertEqual(x, word(0, 1))
        self.assertEqual(x.grade, RootVector((-1, -1)))
        self.assertIsNone(HalfElt.zero(2).grade)

    def test_inhomogeneous(self):
        """测试非齐次元素被拒绝"""
        with self.assertRaises(ValueError):
            HalfElt(2, {(0,): 1, (1, 1): 1})

    def test_star_reverses_words(self):
        """测试 star 反转单词"""
        self.assertEqual(star_half(word(0, 1)), word(1, 0))
        self.assertEqual(word(0).scale(V).bar(), word(0).scale(V ** -1))


class TestOperators(unittest.TestCase):
    """e′ 与 e″ 测试类"""

    def test_eprime_on_word(self):
        """测试 e′_1(f2 f1) = v t^{-1} f2"""
        result = eprime(A2, 0, word(1, 0))
        self.assertEqual(result, HalfElt.word(2, (1,), Scalar.monomial(1, 1, -1)))
        self.assertEqual(str(result), "(v * t^(-1)) f2")

    def test_edprime_on_word(self):
        """测试 e″_1(f2 f1)"""
        self.assertEqual(edprime(A2, 0, word(1, 0)), HalfElt.word(2, (1,), Scalar.monomial(1, -1, -1)))

    def test_commutation(self):
        """测试 e′_i e″_j 与 e″_j e′_i 相差一个单项式因子"""
        for w in [(0, 1), (1, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)]:
            x = word(*w)
            for i in A2.indices:
                for j in A2.indices:
                    lhs = eprime(A2, i, edprime(A2, j, x))
                    rhs = edprime(A2, j, eprime(A2, i, x)).scale(A2.commute_scalar(j, i, 1))
                    self.assertEqual(lhs, rhs, f"word={w} i={i} j={j}")

    def test_sl2_commutation(self):
        """测试 sl₂ 上的交换因子 v²"""
        x = HalfElt.f(1, 0, 2)
        lhs = eprime(A1, 0, edprime(A1, 0, x))
        rhs = edprime(A1, 0, eprime(A1, 0, x)).scale(V ** 2)
        self.assertEqual(lhs, rhs)


class TestPolarization(unittest.TestCase):
    """极化形式测试类"""

    def test_divided_power_norm(self):
        """测试 (f^{(2)}, f^{(2)}) = 1/(1+v²)"""
        f2 = divided_power(A1, 0, 2)
        self.assertEqual(pol_form(A1, f2, f2), Scalar.one() / (1 + V ** 2))

    def test_star_symmetry(self):
        """测试 (w, u) = star((u, w))"""
        self.assertEqual(pol_words(A2, (0, 1), (1, 0)), Scalar.monomial(1, 1, -1))
        self.assertEqual(pol_words(A2, (1, 0), (0, 1)), Scalar.monomial(1, 1, 1))
        for w in [(0, 0, 1), (0, 1, 0), (1, 0, 0)]:
            for u in [(0, 0, 1), (0, 1, 0), (1, 0, 0)]:
                self.assertEqual(pol_words(A2, w, u), pol_words(A2, u, w).star())

    def test_star_invariance(self):
        """测试 (P*, Q*) = (Q, P)"""
        p = word(0, 0, 1) + word(0, 1, 0).scale(V)
        q = word(1, 0, 0).scale(-1) + word(0, 1, 0)
        self.assertEqual(pol_form(A2, p.star(), q.star()), pol_form(A2, q, p))

    def test_adjoint_of_right_multiplication(self):
        """测试 (P f_i, Q) = (P, Ad(k_i)e″_i Q)"""
        p = word(0)
        for q in (word(0, 1), word(1, 0), word(0, 1) + word(1, 0).scale(V)):
            self.assertEqual(pol_form(A2, p * word(1), q), pol_form(A2, p, ad_k_edprime(A2, 1, q)))

    def test_different_grades(self):
        """测试次数不同的元素正交"""
        self.assertEqual(pol_form(A2, word(0), word(1)), Scalar.zero())


class TestSerre(unittest.TestCase):
    """Serre 关系子测试类"""

    def test_relator_in_radical(self):
        """测试关系子落在形式的根中"""
        self.assertTrue(kernel_contains(A2, serre_element(A2, 0, 1)))
        self.assertTrue(kernel_contains(A2, serre_element(A2, 1, 0)))
        self.assertFalse(kernel_contains(A2, word(0, 0, 1)))

    def test_padded_relators(self):
        """测试补齐后的关系子"""
        relators = padded_relators(A2, 4)
        self.assertTrue(relators)
        for rel in relators:
            self.assertLessEqual(rel.grade.height, 4)
            self.assertTrue(kernel_contains(A2, rel))

    def test_eprime_serre(self):
        """测试 e′ 版本的 Serre 组合为零"""
        self.assertTrue(eprime_serre(A2, 0, 1, word(0, 0, 1)).is_zero)
        with self.assertRaises(ValueError):
            eprime_serre(A2, 0, 0, word(0, 0, 1))


class TestHalfSpace(unittest.TestCase):
    """Gram 商与 Kashiwara 算子测试类"""

    def test_dimensions(self):
        """测试 Gram 商维数等于 Kostant 分拆数"""
        space = HalfSpace(A2, 4)
        self.assertEqual(space.dimension(RootVector((-1, -1))), 2)
        self.assertEqual(space.dimension(RootVector((-2, -1))), 2)
        self.assertEqual(space.dimension(RootVector((-2, -2))), 3)
        self.assertEqual(HalfSpace(A1, 4).dimension(RootVector((-3,))), 1)

    def test_depth_cap(self):
        """测试深度上限"""
        with self.assertRaises(DepthExceededError):
            HalfSpace(A1, 9)
        with self.assertRaises(ValueError):
            weight_basis(A2, RootVector((1, 0)))

    def test_joint_kernel(self):
        """测试所有 e′_i 的公共核为零"""
        space = HalfSpace(A2, 3)
        self.assertEqual(joint_kernel_dimension(space, RootVector((-1, -1))), 0)
        self.assertEqual(joint_kernel_dimension(space, RootVector((-2, -1))), 0)
        self.assertEqual(joint_kernel_dimension(space, RootVector((0, 0))), 1)

    def test_star_on_vectors(self):
        """测试坐标上的 star"""
        space = HalfSpace(A2, 3)
        self.assertEqual(space.star(space.to_vector(word(0, 1))), space.to_vector(word(1, 0)))

    def test_kashiwara_operators(self):
        """测试 U⁻ 上的 f̃ 与 ẽ"""
        space = HalfSpace(A1, 4)
        one = HalfElt.one(1)
        f = tilde_f_half(space, 0, one)
        self.assertEqual(f, HalfElt.f(1, 0))
        self.assertEqual(tilde_f_half(space, 0, f), divided_power(A1, 0, 2))
        self.assertEqual(tilde_e_half(space, 0, f), one)
        self.assertTrue(tilde_e_half(space, 0, one).is_zero)


if __name__ == "__main__":
    unittest.main(verbosity=2)
