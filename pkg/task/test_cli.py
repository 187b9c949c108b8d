#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行测试
覆盖运行配置、检查套件注册表、子命令输出与退出码
"""

import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest import mock

from pydantic import ValidationError

import main
from uvt_crystal.checks import SUITE_ALIASES, SuiteContext, default_suites, resolve_suite
from uvt_crystal.cartan import CartanDatum, DominantWeight
from uvt_crystal.cli import (
    EXIT_CONVERGENCE,
    EXIT_FAILED,
    EXIT_INVALID,
    EXIT_INVARIANT,
    EXIT_OK,
    exit_code_for,
    run,
)
from uvt_crystal.cli.console import print_fail, print_header, print_ok
from uvt_crystal.config import RunConfig
from uvt_crystal.errors import (
    ConvergenceError,
    CrystalInvariantError,
    DepthExceededError,
    OracleUnavailableError,
    RadicalMismatchError,
)

DATA = Path(__file__).resolve().parent.parent / "data"


def run_quiet(**kwargs):
    """运行一个子命令，返回 (退出码, 标准输出内容)"""
    out = io.StringIO()
    with redirect_stderr(io.StringIO()):
        code = run(RunConfig(**kwargs), out)
    return code, out.getvalue()


class TestRunConfig(unittest.TestCase):
    """运行配置测试类"""

    def test_defaults(self):
        """测试默认值"""
        config = RunConfig(command="check")
        self.assertEqual(config.seed, 0)
        self.assertEqual(config.suites, [])
        self.assertIsNone(config.lam())

    def test_weights(self):
        """测试最高权解析"""
        config = RunConfig(command="check", hw="1,0", hw2="0,1")
        self.assertEqual(config.lam().coords, (1, 0))
        self.assertEqual(config.mu().coords, (0, 1))

    def test_invalid_values(self):
        """测试非法命令、格式与深度"""
        with self.assertRaises(ValidationError):
            RunConfig(command="bogus")
        with self.assertRaises(ValidationError):
            RunConfig(format="svg")
        with self.assertRaises(ValidationError):
            RunConfig(depth=-1)

    def test_format_for_command(self):
        """测试格式与命令不匹配"""
        with self.assertRaises(ValueError):
            RunConfig(command="crystal", format="tsv").format_or("json", ("dot", "json"))


class TestSuiteRegistry(unittest.TestCase):
    """检查套件注册表测试类"""

    def test_names(self):
        """测试套件名称唯一且包含核心套件"""
        names = [s.name for s in default_suites()]
        self.assertEqual(len(names), len(set(names)))
        for name in ("serre", "tensor-rule", "ortho", "star", "global", "t1"):
            self.assertIn(name, names)

    def test_aliases(self):
        """测试别名解析"""
        suites = default_suites()
        for alias, name in SUITE_ALIASES.items():
            self.assertEqual(resolve_suite(alias, suites).name, name)
        with self.assertRaises(ValueError):
            resolve_suite("nope", suites)

    def test_serre_suite(self):
        """测试在 A₂ 上运行 serre 套件"""
        a2 = CartanDatum.validate([[1, -1], [0, 1]])
        report = resolve_suite("serre", default_suites()).run(SuiteContext(datum=a2, depth=3))
        self.assertTrue(report.passed, report.message)
        self.assertGreater(report.checked, 0)

    def test_b2_suites(self):
        """测试 B₂ 上深度 5 的 Serre 与维数、交换关系"""
        b2 = CartanDatum.from_file(DATA / "b2.json")
        suites = default_suites()
        for name in ("serre", "commutation"):
            report = resolve_suite(name, suites).run(SuiteContext(datum=b2, depth=5))
            self.assertTrue(report.passed, f"{name}: {report.message}")

    def test_adjunction_random_pairs(self):
        """测试伴随性质在至少 100 组随机元素上成立"""
        b2 = CartanDatum.from_file(DATA / "b2.json")
        report = resolve_suite("adjunction", default_suites()).run(SuiteContext(datum=b2, seed=7))
        self.assertTrue(report.passed, report.message)
        self.assertGreaterEqual(report.checked, 300)

    def test_congruence_large_weight(self):
        """测试 A₂ 上 λ = (6,6) 的同余"""
        a2 = CartanDatum.from_file(DATA / "a2.json")
        context = SuiteContext(datum=a2, hw=DominantWeight((6, 6)), depth=3)
        report = resolve_suite("congruence", default_suites()).run(context)
        self.assertTrue(report.passed, report.message)


class TestExitCodes(unittest.TestCase):
    """异常到退出码的映射测试类"""

    def test_mapping(self):
        """测试各类异常的退出码"""
        self.assertEqual(exit_code_for(ConvergenceError("x")), EXIT_CONVERGENCE)
        self.assertEqual(exit_code_for(CrystalInvariantError("x")), EXIT_INVARIANT)
        self.assertEqual(exit_code_for(RadicalMismatchError("x")), EXIT_INVARIANT)
        self.assertEqual(exit_code_for(DepthExceededError(9, 8)), EXIT_INVALID)
        self.assertEqual(exit_code_for(FileNotFoundError("x")), EXIT_INVALID)
        self.assertEqual(exit_code_for(OracleUnavailableError("x")), EXIT_FAILED)

    def test_unexpected_error(self):
        """测试未知异常原样抛出"""
        with self.assertRaises(KeyError):
            exit_code_for(KeyError("x"))


class TestCommands(unittest.TestCase):
    """子命令测试类"""

    def test_datum_json(self):
        """测试 datum 命令的 JSON 输出"""
        code, text = run_quiet(command="datum", datum=DATA / "a2.json", format="json")
        self.assertEqual(code, EXIT_OK)
        summary = json.loads(text)
        self.assertEqual(summary["D"], 3)
        self.assertEqual(summary["gcm"], [[2, -1], [-1, 2]])
        self.assertEqual(summary["fundamental_weights"]["1"]["k"][0], "v * t^(-1/3)")

    def test_crystal_dot(self):
        """测试 crystal 命令输出 DOT"""
        code, text = run_quiet(command="crystal", datum=DATA / "a1.json", hw="2", format="dot")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text.count("->"), 2)

    def test_crystal_to_file(self):
        """测试 crystal 命令写入文件"""
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "b.json"
            code, text = run_quiet(command="crystal", datum=DATA / "a2.json", hw="1,0", output=target)
            self.assertEqual(code, EXIT_OK)
            doc = json.loads(target.read_text(encoding="utf-8"))
        self.assertEqual(len(doc["nodes"]), 3)

    def test_check_suite(self):
        """测试 check 命令运行单个套件"""
        code, _ = run_quiet(command="check", datum=DATA / "a1.json", suites=["serre"], depth=3)
        self.assertEqual(code, EXIT_OK)

    def test_global_tsv(self):
        """测试 global 命令输出 TSV"""
        code, text = run_quiet(command="global", datum=DATA / "a1.json", depth=2)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(text.startswith("grade\tnode"))

    def test_global_not_converged(self):
        """测试全局基不收敛时写出不完整表格并以 4 退出"""
        partial = {"rows": [{"node": "b0", "grade": [0], "monomial_expansion": ["1"], "coeffs": ["1"]}]}
        failure = ConvergenceError("次数 (-2) 第 1 轮没有进展", partial)
        with mock.patch("uvt_crystal.cli.commands.global_basis", side_effect=failure):
            code, text = run_quiet(command="global", datum=DATA / "a1.json", depth=2)
        self.assertEqual(code, EXIT_CONVERGENCE)
        self.assertTrue(text.startswith("grade\tnode"))
        self.assertTrue(text.endswith("# incomplete\n"))

    def test_missing_file(self):
        """测试数据文件不存在"""
        code, _ = run_quiet(command="datum", datum=DATA / "missing.json")
        self.assertEqual(code, EXIT_INVALID)

    def test_unknown_suite(self):
        """测试未知套件名称"""
        code, _ = run_quiet(command="check", datum=DATA / "a1.json", suites=["nope"])
        self.assertEqual(code, EXIT_INVALID)

    def test_depth_above_cap(self):
        """测试深度超出上限，覆盖上限后不再报错"""
        code, _ = run_quiet(command="crystal", datum=DATA / "a1.json", depth=20)
        self.assertEqual(code, EXIT_INVALID)
        code, _ = run_quiet(command="crystal", datum=DATA / "a1.json", hw="1", depth=2, depth_cap=2)
        self.assertEqual(code, EXIT_OK)


class TestConsole(unittest.TestCase):
    """控制台输出测试类"""

    def test_plain_when_not_a_terminal(self):
        """测试输出到非终端时不带颜色控制符"""
        stream = io.StringIO()
        print_header("uvt-crystal", stream)
        print_ok("通过", stream)
        print_fail("失败", stream)
        text = stream.getvalue()
        self.assertNotIn("\x1b[", text)
        self.assertIn("✓ 通过\n", text)
        self.assertIn("✗ 失败\n", text)


class TestMain(unittest.TestCase):
    """入口测试类"""

    def test_no_command(self):
        """测试缺少子命令"""
        with redirect_stdout(io.StringIO()):
            self.assertEqual(main.main([]), EXIT_INVALID)

    def test_parse_args_drops_unset(self):
        """测试未给出的选项不出现在参数中"""
        args = main.parse_args(["crystal", "--datum", "x.json"])
        self.assertEqual(args, {"command": "crystal", "datum": "x.json"})

    def test_bad_format_choice(self):
        """测试非法格式被 argparse 拒绝"""
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                main.parse_args(["crystal", "--format", "svg"])


if __name__ == "__main__":
    unittest.main(verbosity=2)
