#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Cartan 数据测试
覆盖 Λ 矩阵校验、导出量、权与 t=1 维数对照
"""

import json
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

from uvt_crystal.cartan import (
    CartanDatum,
    DominantWeight,
    RootVector,
    Weight,
    default_depth_cap,
    grades_up_to,
    override_depth_cap,
    words_of_content,
)
from uvt_crystal.cartan.oracle import (
    half_dimension,
    kostant_partition,
    module_dimension,
    positive_roots,
    string_bound,
    weight_multiplicity,
)
from uvt_crystal.errors import DatumValidationError, OracleUnavailableError
from uvt_crystal.ratfun import Scalar

A1 = [[1]]
A2 = [[1, -1], [0, 1]]
B2 = [[1, -1], [-1, 2]]
AFFINE_A1 = [[1, -2], [0, 1]]


class TestValidation(unittest.TestCase):
    """Λ 矩阵校验测试类"""

    def test_a2_derived_data(self):
        """测试 A₂ 的 GCM、D 与基本权配对"""
        a2 = CartanDatum.validate(A2)
        self.assertEqual(a2.gcm, ((2, -1), (-1, 2)))
        self.assertEqual(a2.den, 3)
        self.assertEqual(a2.fund_left[0], (Fraction(1, 3), Fraction(1, 3)))
        self.assertEqual(a2.fund_right[0], (Fraction(2, 3), Fraction(-1, 3)))
        self.assertTrue(a2.is_finite_type)

    def test_sl2_denominator(self):
        """测试 sl₂ 的 D 取 2"""
        self.assertEqual(CartanDatum.validate(A1).den, 2)

    def test_diagonal_gcd(self):
        """测试对角元公约数不为 1 时报错"""
        with self.assertRaises(DatumValidationError) as ctx:
            CartanDatum.validate([[2, 0], [0, 2]])
        self.assertTrue(any("(c)" in v for v in ctx.exception.violations))

    def test_positive_off_diagonal(self):
        """测试非对角元为正时报错"""
        with self.assertRaises(DatumValidationError):
            CartanDatum.validate([[1, 1], [0, 1]])

    def test_labels(self):
        """测试指标名称"""
        a2 = CartanDatum.validate(A2, labels=["a", "b"])
        self.assertEqual(a2.index_of("b"), 1)
        with self.assertRaises(DatumValidationError):
            CartanDatum.validate(A2, labels=["a", "a"])
        with self.assertRaises(ValueError):
            a2.index_of("c")

    def test_degenerate_gcm_has_no_pairings(self):
        """测试 GCM 退化时没有基本权配对"""
        affine = CartanDatum.validate(AFFINE_A1)
        self.assertFalse(affine.has_pairings)
        self.assertFalse(affine.is_finite_type)
        with self.assertRaises(DatumValidationError):
            affine.require_pairings()

    def test_from_file_round_trip(self):
        """测试从 JSON 文件加载"""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "b2.json"
            path.write_text(json.dumps({"Lambda": B2, "labels": ["1", "2"]}), encoding="utf-8")
            b2 = CartanDatum.from_file(path)
        self.assertEqual(b2.gcm, ((2, -2), (-1, 2)))
        self.assertEqual(CartanDatum.from_document(b2.to_document()), b2)

    def test_unknown_document_field(self):
        """测试文档中的未知字段"""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.json"
            path.write_text(json.dumps({"Lambda": A1, "extra": 1}), encoding="utf-8")
            with self.assertRaises(DatumValidationError):
                CartanDatum.from_file(path)


class TestScalars(unittest.TestCase):
    """k 的特征值与交换因子测试类"""

    def test_k_eigenvalue(self):
        """测试 k_1 在 Λ₁ 上的特征值"""
        a2 = CartanDatum.validate(A2)
        w = Weight(DominantWeight((1, 0)), RootVector((0, 0)))
        self.assertEqual(str(a2.k_scalar(0, "k", w)), "v * t^(-1/3)")
        self.assertEqual(a2.k_scalar(0, "kprime", w), Scalar.monomial(1, -1, Fraction(-1, 3)))
        with self.assertRaises(ValueError):
            a2.k_scalar(0, "x", w)

    def test_commute_scalar(self):
        """测试 e′ 越过 f_j 的因子"""
        a2 = CartanDatum.validate(A2)
        self.assertEqual(a2.commute_scalar(0, 1, -1), Scalar.monomial(1, 1, -1))
        self.assertEqual(a2.commute_scalar(1, 0, 1), Scalar.monomial(1, -1, 1))


class TestWeights(unittest.TestCase):
    """权与次数测试类"""

    def test_grades_by_height(self):
        """测试次数按高度枚举"""
        grades = list(grades_up_to(2, 2))
        self.assertEqual(len(grades), 6)
        self.assertEqual(grades[0], RootVector((0, 0)))
        self.assertEqual([g.height for g in grades], [0, 1, 1, 2, 2, 2])

    def test_words_of_content(self):
        """测试给定重数的单词"""
        self.assertEqual(words_of_content((1, 1)), [(0, 1), (1, 0)])
        self.assertEqual(len(words_of_content((2, 1))), 3)

    def test_parse_weight(self):
        """测试最高权解析"""
        self.assertEqual(DominantWeight.parse("1,0"), DominantWeight((1, 0)))
        with self.assertRaises(ValueError):
            DominantWeight.parse("a,b")

    def test_depth_cap(self):
        """测试按秩的深度上限与覆盖"""
        self.assertEqual(default_depth_cap(2), 8)
        self.assertEqual(default_depth_cap(3), 5)
        self.assertEqual(default_depth_cap(5), 4)
        override_depth_cap(3)
        try:
            self.assertEqual(default_depth_cap(2), 3)
        finally:
            override_depth_cap(None)
        self.assertEqual(default_depth_cap(2), 8)


class TestOracle(unittest.TestCase):
    """t=1 维数对照测试类"""

    def test_positive_roots(self):
        """测试正根个数"""
        self.assertEqual(len(positive_roots(CartanDatum.validate(A2))), 3)
        self.assertEqual(len(positive_roots(CartanDatum.validate(B2))), 4)

    def test_kostant_partition(self):
        """测试 Kostant 分拆函数"""
        a2 = CartanDatum.validate(A2)
        self.assertEqual(kostant_partition(a2, (1, 1)), 2)
        self.assertEqual(half_dimension(a2, RootVector((-2, -1))), 2)
        self.assertEqual(half_dimension(a2, RootVector((-2, -2))), 3)

    def test_module_dimensions(self):
        """测试 Weyl 维数公式与重数"""
        a2 = CartanDatum.validate(A2)
        self.assertEqual(module_dimension(a2, DominantWeight((1, 0))), 3)
        self.assertEqual(module_dimension(a2, DominantWeight((1, 1))), 8)
        self.assertEqual(weight_multiplicity(a2, DominantWeight((1, 1)), RootVector((-1, -1))), 2)
        b2 = CartanDatum.validate(B2)
        dims = sorted(module_dimension(b2, b2.fundamental(j)) for j in b2.indices)
        self.assertEqual(dims, [4, 5])

    def test_string_bound(self):
        """测试最低权的高度"""
        self.assertEqual(string_bound(CartanDatum.validate(A1), DominantWeight((3,))), 3)
        self.assertEqual(string_bound(CartanDatum.validate(A2), DominantWeight((1, 0))), 2)

    def test_affine_unavailable(self):
        """测试非有限型数据没有维数对照"""
        with self.assertRaises(OracleUnavailableError):
            positive_roots(CartanDatum.validate(AFFINE_A1))


if __name__ == "__main__":
    unittest.main(verbosity=2)
