#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
系数域测试
覆盖标量运算、对合、v 进结构、q-数与子环判定
"""

import unittest
from fractions import Fraction

from uvt_crystal.errors import DivisionByZeroError, PoleError
from uvt_crystal.ratfun import Scalar, T, V, in_A, in_Abar, in_AZ, linalg, membership, qbinom, qint


class TestScalarArithmetic(unittest.TestCase):
    """标量算术测试类"""

    def test_field_operations(self):
        """测试乘法与除法的精确性"""
        self.assertEqual((V + V ** -1) * (V - V ** -1), V ** 2 - V ** -2)
        self.assertEqual((V ** 2 - 1) / (V - 1), V + 1)
        self.assertEqual(Scalar(3) - 3, Scalar.zero())

    def test_canonical_string(self):
        """测试规范字符串形式"""
        self.assertEqual(str(Scalar.monomial(-1, 2, Fraction(1, 3))), "(-1) * v^2 * t^(1/3)")
        self.assertEqual(str(T ** -1), "t^(-1)")
        self.assertEqual(str(Scalar.monomial(1, -1)), "v^(-1)")
        self.assertEqual(str(Scalar.zero()), "0")

    def test_denominator_reduction(self):
        """测试 t 的分数指数约化到最小公分母"""
        x = Scalar.monomial(1, 0, Fraction(2, 3)) * Scalar.monomial(1, 0, Fraction(1, 3))
        self.assertEqual(x, T)
        self.assertEqual(x.den, 1)
        self.assertEqual(Scalar.monomial(1, 0, Fraction(1, 3)).den, 3)

    def test_division_by_zero(self):
        """测试除以零"""
        with self.assertRaises(DivisionByZeroError):
            V / Scalar.zero()


class TestInvolutions(unittest.TestCase):
    """bar 与 star 测试类"""

    def test_bar_inverts_v_only(self):
        """测试 bar 只作用于 v"""
        self.assertEqual((V * T).bar(), V ** -1 * T)

    def test_star_inverts_t_only(self):
        """测试 star 只作用于 t"""
        self.assertEqual((V * T).star(), V * T ** -1)
        x = (V + T) / (1 + V * T)
        self.assertEqual(x.star().star(), x)


class TestValuation(unittest.TestCase):
    """v=0 处的展开测试类"""

    def test_valuation(self):
        """测试 v-赋值"""
        self.assertEqual((V ** 2 / (1 + V ** 2)).v_valuation(), 2)
        self.assertIsNone(Scalar.zero().v_valuation())

    def test_eval_v0(self):
        """测试 v=0 处求值"""
        self.assertEqual(((T + V) / (1 + V)).eval_v0(), T)
        self.assertEqual((V / (1 + V)).eval_v0(), Scalar.zero())
        with self.assertRaises(PoleError):
            (V ** -1).eval_v0()

    def test_laurent_coefficients(self):
        """测试 1/(1-v²) 的展开"""
        coeffs = (Scalar.one() / (1 - V ** 2)).laurent_coefficients(4)
        self.assertEqual(coeffs, {0: Scalar.one(), 2: Scalar.one(), 4: Scalar.one()})

    def test_unit_monomial(self):
        """测试 ±t^{k/D} 的识别"""
        self.assertEqual(Scalar.monomial(-1, 0, Fraction(1, 3)).unit_monomial(), (-1, Fraction(1, 3)))
        self.assertIsNone(V.unit_monomial())
        self.assertIsNone((1 + T).unit_monomial())

    def test_at_t1(self):
        """测试代入 t=1"""
        self.assertEqual(qint(2, "two_param").at_t1(), V + V ** -1)


class TestQNumbers(unittest.TestCase):
    """q-数测试类"""

    def test_qint(self):
        """测试量子整数"""
        self.assertEqual(qint(3), V ** 2 + 1 + V ** -2)
        self.assertEqual(str(qint(2, "two_param")), "v * t + v^(-1) * t")
        self.assertEqual(qint(0), Scalar.zero())

    def test_qbinom_bar_invariant(self):
        """测试单参数二项式 bar 不变"""
        self.assertEqual(qbinom(4, 2).bar(), qbinom(4, 2))
        self.assertEqual(qbinom(5, 0), Scalar.one())

    def test_invalid_arguments(self):
        """测试非法参数"""
        with self.assertRaises(ValueError):
            qint(-1)
        with self.assertRaises(ValueError):
            qbinom(2, 3)


class TestSubRings(unittest.TestCase):
    """子环判定测试类"""

    def test_local_ring(self):
        """测试 A 与 Ā"""
        self.assertTrue(in_A(Scalar.one() / (1 + V ** 2)))
        self.assertFalse(in_A(V ** -1))
        self.assertTrue(in_Abar(V ** -1))
        self.assertTrue(membership(Scalar.one() / (1 + V ** 2), "A"))

    def test_integral_form(self):
        """测试 A_Z 的三值判定"""
        self.assertTrue(in_AZ(Scalar.one() / (1 - V ** 2)))
        self.assertFalse(in_AZ(Scalar(Fraction(1, 2))))
        self.assertFalse(in_AZ(V ** -1))
        self.assertTrue(in_AZ(Scalar.zero()))


class TestLinearAlgebra(unittest.TestCase):
    """精确线性代数测试类"""

    def test_solve(self):
        """测试方阵求解"""
        one = Scalar.one()
        x = linalg.solve([[one, one], [one, -one]], [V, one])
        self.assertEqual(x, [(V + 1) / 2, (V - 1) / 2])

    def test_rank_and_inverse(self):
        """测试秩与逆矩阵"""
        one, zero = Scalar.one(), Scalar.zero()
        self.assertEqual(linalg.rank([[one, V], [V, V ** 2]]), 1)
        self.assertEqual(linalg.inverse([[one, V], [zero, one]]), [[one, -V], [zero, one]])

    def test_nullspace(self):
        """测试零空间"""
        basis = linalg.nullspace([[Scalar.one(), V]], 2)
        self.assertEqual(len(basis), 1)
        self.assertEqual(linalg.matvec([[Scalar.one(), V]], basis[0]), [Scalar.zero()])


if __name__ == "__main__":
    unittest.main(verbosity=2)
