#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
晶体测试
覆盖 B(λ) 与 B(∞) 的闭包、导出、张量积规则、投影与晶体性质检查
"""

import tempfile
import unittest
from pathlib import Path

from uvt_crystal.cartan import CartanDatum, DominantWeight, RootVector
from uvt_crystal.crystal import (
    export,
    from_json,
    gen_crystal_binf,
    gen_crystal_module,
    graph_document,
    lattice_check,
    node_counts,
    ortho_check,
    project_binf,
    render,
    star_check,
    string_count_check,
    strings_check,
    tensor_crystal,
    tensor_rule_check,
    to_json,
    write_graph,
)
from uvt_crystal.crystal.closure import _check_lattice_stable
from uvt_crystal.crystal.graph import CrystalEdge
from uvt_crystal.crystal.lattice import LatticeSlice
from uvt_crystal.errors import LatticeError
from uvt_crystal.modules import HWModule
from uvt_crystal.ratfun import V, linalg

A1 = CartanDatum.validate([[1]])
A2 = CartanDatum.validate([[1, -1], [0, 1]])


def module_crystal(datum, *lam):
    return gen_crystal_module(HWModule(datum, DominantWeight(lam)))


class TestModuleCrystal(unittest.TestCase):
    """B(λ) 测试类"""

    def test_sl2_chain(self):
        """测试 sl₂ 的 B(2) 是一条链"""
        graph = module_crystal(A1, 2)
        self.assertEqual(len(graph), 3)
        self.assertTrue(graph.complete)
        self.assertEqual(graph.colored_edges(), [("b0", "b1", 0), ("b1", "b2", 0)])
        self.assertEqual(graph.eps["b0"], (0,))
        self.assertEqual(graph.phi["b0"], (2,))
        self.assertEqual(graph.eps["b2"], (2,))
        self.assertEqual(graph.phi["b2"], (0,))

    def test_edge_lookup(self):
        """测试按 (节点, 颜色) 查找边，改动边后索引随之更新"""
        graph = module_crystal(A1, 2)
        self.assertEqual(graph.f_target("b0", 0), "b1")
        self.assertEqual(graph.e_target("b1", 0), "b0")
        self.assertIsNone(graph.f_target("b2", 0))
        self.assertIsNone(graph.e_target("b0", 0))
        graph.edges.append(CrystalEdge("b2", "b0", 0))
        self.assertEqual(graph.f_target("b2", 0), "b0")

    def test_a2_node_counts(self):
        """测试 A₂ 上 B(Λ₁)、B(Λ₂)、B(Λ₁+Λ₂) 的节点数"""
        self.assertEqual(len(module_crystal(A2, 1, 0)), 3)
        self.assertEqual(len(module_crystal(A2, 0, 1)), 3)
        adjoint = module_crystal(A2, 1, 1)
        self.assertEqual(len(adjoint), 8)
        self.assertEqual(node_counts(adjoint), [1, 2, 2, 2, 1])

    def test_single_highest_node(self):
        """测试 B(λ) 只有一个最高权节点"""
        graph = module_crystal(A2, 1, 1)
        self.assertEqual([n.id for n in graph.highest_nodes()], ["b0"])

    def test_ortho(self):
        """测试代表元在 v=0 处正交归一"""
        report = ortho_check(module_crystal(A1, 3))
        self.assertTrue(report.passed, report.message)
        self.assertEqual(report.checked, 4)
        self.assertTrue(ortho_check(module_crystal(A2, 1, 1)).passed)

    def test_strings(self):
        """测试串格与串计数"""
        graph = module_crystal(A2, 1, 1)
        self.assertTrue(strings_check(graph).passed)
        self.assertTrue(string_count_check(graph).passed)

    def test_lattice(self):
        """测试格的范数刻画"""
        report = lattice_check(module_crystal(A2, 1, 0), seed=3)
        self.assertTrue(report.passed, report.message)


class TestCrystalLattice(unittest.TestCase):
    """晶体格测试类"""

    def test_node_residues_form_basis(self):
        """测试每个次数的节点剩余构成 L/vL 的基"""
        graph = module_crystal(A2, 1, 1)
        for grade in graph.grades():
            nodes = graph.by_grade(grade)
            lattice = graph.lattices[grade]
            for node in nodes:
                self.assertTrue(lattice.contains(node.vector.coords), node.id)
            self.assertEqual(linalg.rank([list(n.residue) for n in nodes]), len(nodes))

    def test_tilde_e_leaves_shrunk_lattice(self):
        """测试 ẽ 把 L 送出被缩小的格时报错"""
        graph = gen_crystal_binf(A1, 2)
        space = graph.nodes[0].vector.space
        _check_lattice_stable(space, graph.lattices)
        shrunk = dict(graph.lattices)
        shrunk[RootVector((-1,))] = LatticeSlice.from_basis([[V]])
        with self.assertRaises(LatticeError):
            _check_lattice_stable(space, shrunk)


class TestBinfCrystal(unittest.TestCase):
    """B(∞) 测试类"""

    def test_node_counts(self):
        """测试 B(∞) 每层节点数等于 Kostant 分拆数之和"""
        self.assertEqual(node_counts(gen_crystal_binf(A1, 3)), [1, 1, 1, 1])
        self.assertEqual(node_counts(gen_crystal_binf(A2, 3)), [1, 2, 4, 6])

    def test_star(self):
        """测试 star 诱导 B(∞) 上的对合"""
        report = star_check(A2, 3)
        self.assertTrue(report.passed, report.message)
        self.assertEqual(report.checked, 13)

    def test_projection(self):
        """测试 π̄_λ 的非零纤维与 B(λ) 一一对应"""
        proj = project_binf(A2, DominantWeight((1, 0)))
        self.assertTrue(proj.passed, proj.defects)
        self.assertEqual(len(proj.fiber()), 3)
        self.assertEqual(proj.image(proj.binf.nodes[0].id), proj.target.nodes[0].id)


class TestTensorRule(unittest.TestCase):
    """张量积规则测试类"""

    def test_sl2(self):
        """测试 B(1)⊗B(1)"""
        report = tensor_rule_check(A1, DominantWeight((1,)), DominantWeight((1,)))
        self.assertTrue(report.passed, report.mismatches)
        self.assertEqual(len(report.rule_edges), 2)

    def test_a2(self):
        """测试 B(Λ₁)⊗B(Λ₂) 分解为两个分量"""
        lam, mu = DominantWeight((1, 0)), DominantWeight((0, 1))
        self.assertTrue(tensor_rule_check(A2, lam, mu).passed)
        crystal = tensor_crystal(A2, lam, mu)
        self.assertEqual(len(crystal.all_pairs()), 9)
        self.assertEqual(len(crystal.highest_pairs()), 2)


class TestExport(unittest.TestCase):
    """导出测试类"""

    def test_dot(self):
        """测试 DOT 输出"""
        text = export(module_crystal(A1, 2), "dot")
        self.assertIn("digraph", text)
        self.assertEqual(text.count("->"), 2)
        for node in ("b0", "b1", "b2"):
            self.assertIn(node, text)

    def test_json_round_trip(self):
        """测试 JSON 导入后原样再导出"""
        doc = graph_document(module_crystal(A2, 1, 0))
        text = to_json(doc)
        again = from_json(text)
        self.assertEqual(again, doc)
        self.assertEqual(render(again, "json"), text)
        self.assertEqual(again.highest_weight, [1, 0])
        self.assertEqual(len(again.edges), 2)

    def test_binf_document(self):
        """测试 B(∞) 文档的最高权字段"""
        doc = graph_document(gen_crystal_binf(A1, 2))
        self.assertEqual(doc.highest_weight, "binf")

    def test_unknown_format(self):
        """测试不支持的格式"""
        with self.assertRaises(ValueError):
            export(module_crystal(A1, 1), "svg")

    def test_write_graph(self):
        """测试写入文件"""
        with tempfile.TemporaryDirectory() as tmp:
            path = write_graph(module_crystal(A1, 1), "json", Path(tmp) / "b1.json")
            doc = from_json(path.read_text(encoding="utf-8"))
        self.assertEqual([n.id for n in doc.nodes], ["b0", "b1"])


if __name__ == "__main__":
    unittest.main(verbosity=2)
