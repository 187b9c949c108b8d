"""双参数量子代数晶体基计算的 CLI 入口点。"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from uvt_crystal import __version__
from uvt_crystal.checks import SUITE_ALIASES, default_suites
from uvt_crystal.cli import EXIT_INVALID, run
from uvt_crystal.cli.console import print_error, print_header
from uvt_crystal.config import COMMANDS, FORMATS, RunConfig


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--datum", help="Cartan 数据 JSON 文件。")
    parser.add_argument("--depth", type=int, help="深度窗口 |ξ| ≤ depth（默认按秩取上限）。")
    parser.add_argument("--depth-cap", dest="depth_cap", type=int, help="覆盖按秩的深度上限。")
    parser.add_argument("--format", choices=FORMATS, help="输出格式。")
    parser.add_argument("--output", "-o", help="输出文件（默认写到标准输出）。")
    parser.add_argument("--cache-dir", dest="cache_dir", help="权空间代表元的持久化目录。")
    parser.add_argument("--verbose", "-v", action="store_true", default=None, help="输出 DEBUG 日志。")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="计算 U_{v,t}(g) 的晶体基 B(λ)、B(∞) 与全局基，并运行结构性质检查。",
    )
    parser.add_argument("--version", action="version", version=f"uvt-crystal {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="{" + ",".join(COMMANDS) + "}")

    crystal = sub.add_parser("crystal", help="构造晶体图并导出为 DOT/JSON。")
    _add_common(crystal)
    crystal.add_argument("--hw", help="最高权 λ，如 1,0；缺省时计算 B(∞)。")
    crystal.add_argument("--binf", action="store_true", default=None, help="计算 B(∞)。")

    names = [s.name for s in default_suites()] + sorted(SUITE_ALIASES)
    check = sub.add_parser("check", help="运行性质检查套件。")
    _add_common(check)
    check.add_argument(
        "--suite", dest="suites", action="append",
        help=f"套件名称，可重复（默认全部）：{', '.join(names)}。",
    )
    check.add_argument("--hw", help="最高权 λ。")
    check.add_argument("--hw2", help="张量积的第二个最高权 μ。")
    check.add_argument("--seed", type=int, help="随机检查的种子（默认：0）。")
    check.add_argument("--degree-bound", dest="degree_bound", type=int, help="全局基求解的 v 次数界。")
    check.add_argument("--binf", action="store_true", default=None, help="在 B(∞) 上运行晶体检查。")

    global_ = sub.add_parser("global", help="计算全局基并输出 TSV/JSON 表格。")
    _add_common(global_)
    global_.add_argument("--hw", help="最高权 λ；缺省时计算 U⁻ 的全局基。")
    global_.add_argument("--degree-bound", dest="degree_bound", type=int, help="v 次数界（默认 4·depth²）。")
    global_.add_argument("--t1-compare", dest="t1_compare", action="store_true", default=None,
                         help="与 t=1 的单参数规范基对照。")

    datum = sub.add_parser("datum", help="校验 Cartan 数据并打印导出量。")
    _add_common(datum)
    return parser


def parse_args(argv: Optional[List[str]]) -> Dict[str, Any]:
    """命令行参数；未给出的选项不覆盖环境变量与配置文件。"""
    args = vars(build_parser().parse_args(argv))
    return {key: value for key, value in args.items() if value is not None}


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    args = parse_args(argv)
    if "command" not in args:
        print_header(f"uvt-crystal {__version__}")
        build_parser().print_help()
        return EXIT_INVALID
    try:
        config = RunConfig(**args)
    except ValidationError as exc:
        print_error(f"参数无效：{exc}")
        return EXIT_INVALID
    setup_logging(config.verbose)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
