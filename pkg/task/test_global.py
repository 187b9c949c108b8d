#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
全局基测试
覆盖单项式基、bar 修正求解、全局基的性质、t=1 对照与表格输出
"""

import unittest

from uvt_crystal.cartan import CartanDatum, DominantWeight, RootVector
from uvt_crystal.global_basis import (
    OneParamHalf,
    basis_document,
    collapse_word,
    divided_power_membership,
    global_basis,
    global_check,
    module_global_basis,
    monomials_of_content,
    partial_document,
    projection_defects,
    render_table,
    star_defects,
    t1_compare,
    to_tsv,
    uniqueness_defects,
)
from uvt_crystal.global_basis.solver import congruence_ok, is_bar_invariant
from uvt_crystal.halfalg import divided_power
from uvt_crystal.ratfun import Scalar

A1 = CartanDatum.validate([[1]])
A2 = CartanDatum.validate([[1, -1], [0, 1]])


class TestMonomials(unittest.TestCase):
    """分次幂单项式测试类"""

    def test_collapse_word(self):
        """测试相邻相同字母合并"""
        self.assertEqual(collapse_word((0, 0, 1)), ((0, 2), (1, 1)))
        self.assertEqual(collapse_word(()), ())

    def test_monomials_of_content(self):
        """测试给定内容的单项式"""
        self.assertEqual(monomials_of_content((2, 1)), [((0, 2), (1, 1)), ((1, 1), (0, 2)), ((0, 1), (1, 1), (0, 1))])


class TestSl2GlobalBasis(unittest.TestCase):
    """sl₂ 全局基测试类"""

    @classmethod
    def setUpClass(cls):
        cls.basis = global_basis(A1, 3)

    def test_divided_powers(self):
        """测试 G(b_n) = f^{(n)}"""
        space = self.basis.space
        self.assertEqual(len(self.basis), 4)
        for n in range(1, 4):
            (g,) = self.basis.by_grade(RootVector((-n,)))
            self.assertEqual(g.vector, space.to_vector(divided_power(A1, 0, n)))
            self.assertEqual(g.monomial_coeffs, [Scalar.one()])

    def test_membership(self):
        """测试分次幂理想的成员判定"""
        (g,) = self.basis.by_grade(RootVector((-2,)))
        self.assertTrue(divided_power_membership(g, 0, 2))
        self.assertFalse(divided_power_membership(g, 0, 3))

    def test_table(self):
        """测试 TSV 表格"""
        text = to_tsv(basis_document(self.basis))
        lines = text.splitlines()
        self.assertEqual(lines[0], "grade\tnode\tmonomial\tcoeff\tt1_match")
        self.assertEqual(len(lines), 5)
        self.assertIn("-2\tb2\tf1^(2)\t1\t", lines)

    def test_module_basis(self):
        """测试 V(2) 的全局基"""
        self.assertEqual(len(module_global_basis(A1, DominantWeight((2,)))), 3)

    def test_check_suite(self):
        """测试全局基检查套件"""
        report = global_check(A1, 3)
        self.assertTrue(report.passed, report.message)


class TestSl2DividedPowers(unittest.TestCase):
    """sl₂ 深度 6 的全局基测试类"""

    def test_divided_powers_to_depth_six(self):
        """测试 n ≤ 6 时 G(b_n) = f^{(n)}"""
        basis = global_basis(A1, 6)
        self.assertEqual(len(basis), 7)
        for n in range(1, 7):
            (g,) = basis.by_grade(RootVector((-n,)))
            self.assertEqual(g.vector, basis.space.to_vector(divided_power(A1, 0, n)))


class TestOneParamOracle(unittest.TestCase):
    """t=1 单参数规范基测试类"""

    def test_serre_combination_skipped(self):
        """测试组合中出现 Serre 关系子（范数为零）时仍给出完整规范基"""
        oracle = OneParamHalf(A2)
        basis = oracle.canonical_basis(RootVector((-2, -1)))
        self.assertEqual(basis.dim, 2)
        self.assertEqual(len(basis.elements), 2)

    def test_grade_one_one(self):
        """测试次数 (−1,−1) 的规范基是两个单项式"""
        basis = OneParamHalf(A2).canonical_basis(RootVector((-1, -1)))
        self.assertCountEqual([e.label for e in basis.elements], ["f1 f2", "f2 f1"])


class TestA2GlobalBasis(unittest.TestCase):
    """A₂ 全局基测试类"""

    @classmethod
    def setUpClass(cls):
        cls.basis = global_basis(A2, 3)

    def test_grade_one_one(self):
        """测试次数 (−1,−1) 的单项式基与 G(b)"""
        grade = RootVector((-1, -1))
        labels = self.basis.slices[grade].labels(self.basis.space)
        self.assertCountEqual(labels, ["f1 f2", "f2 f1"])
        elements = self.basis.by_grade(grade)
        self.assertEqual(len(elements), 2)
        for g in elements:
            self.assertTrue(is_bar_invariant(g))
            self.assertTrue(congruence_ok(g))

    def test_all_elements(self):
        """测试 bar 不变与同余"""
        self.assertEqual(len(self.basis), 13)
        for g in self.basis.elements.values():
            self.assertTrue(is_bar_invariant(g), g.node)
            self.assertTrue(congruence_ok(g), g.node)

    def test_uniqueness_and_star(self):
        """测试换种子后不变，且与 star 相容"""
        self.assertEqual(uniqueness_defects(self.basis), [])
        self.assertEqual(star_defects(self.basis), [])

    def test_t1(self):
        """测试 t=1 特化与单参数规范基一一对应"""
        report = t1_compare(self.basis)
        self.assertTrue(report.passed, report.defects)
        self.assertEqual(report.checked, len(self.basis))
        self.assertEqual(len(set(report.matches.values())), len(self.basis))

    def test_projection_to_adjoint(self):
        """测试 G(b)y_λ = G_λ(π̄_λ b)，λ = Λ₁+Λ₂"""
        self.assertEqual(projection_defects(A2, DominantWeight((1, 1)), 3), [])


class TestTables(unittest.TestCase):
    """表格输出测试类"""

    def test_partial_document(self):
        """测试未收敛时的不完整表格"""
        partial = {"rows": [{"node": "b0", "grade": [0], "monomial_expansion": ["1"], "coeffs": ["1"]}]}
        doc = partial_document(A1, partial)
        self.assertFalse(doc.complete)
        self.assertTrue(to_tsv(doc).endswith("# incomplete\n"))

    def test_unknown_format(self):
        """测试不支持的表格格式"""
        doc = partial_document(A1, {})
        with self.assertRaises(ValueError):
            render_table(doc, "csv")
        self.assertIn("\"complete\": false", render_table(doc, "json"))


if __name__ == "__main__":
    unittest.main(verbosity=2)
