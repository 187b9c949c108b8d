"""命令行子命令：crystal、check、global、datum。

每个命令返回退出码；异常由 run() 统一映射：
0 成功，1 检查失败，2 参数或数据无效，3 不变量被破坏，4 全局基求解不收敛。
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO

from pydantic import ValidationError

from ..cache import configure_cache
from ..cartan import KIND_K, KIND_KPRIME, CartanDatum, override_depth_cap
from ..checks import SuiteContext, default_suites, resolve_suite
from ..config import RunConfig
from ..crystal import export, gen_crystal_binf, gen_crystal_module, write_graph
from ..errors import (
    ConvergenceError,
    CrystalInvariantError,
    DatumValidationError,
    DepthExceededError,
    LatticeError,
    OracleUnavailableError,
    RadicalMismatchError,
    UVTError,
)
from ..global_basis import (
    basis_document,
    global_basis,
    module_global_basis,
    partial_document,
    render_table,
    t1_compare,
    write_table,
)
from ..modules import HWModule
from ..schemas import CheckReport
from .console import print_error, print_fail, print_info, print_ok

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_INVARIANT = 3
EXIT_CONVERGENCE = 4


def exit_code_for(exc: BaseException) -> int:
    """异常 → 退出码"""
    if isinstance(exc, ConvergenceError):
        return EXIT_CONVERGENCE
    if isinstance(exc, (CrystalInvariantError, LatticeError, RadicalMismatchError)):
        return EXIT_INVARIANT
    if isinstance(exc, (DatumValidationError, DepthExceededError, FileNotFoundError, ValueError, ValidationError)):
        return EXIT_INVALID
    if isinstance(exc, OracleUnavailableError):
        return EXIT_FAILED
    if isinstance(exc, UVTError):
        return EXIT_INVARIANT
    raise exc


def load_datum(config: RunConfig) -> CartanDatum:
    path = config.require_datum()
    if not path.exists():
        raise FileNotFoundError(f"找不到 Cartan 数据文件: {path}")
    return CartanDatum.from_file(path)


def _emit(text: str, output: Optional[Path], out: TextIO) -> None:
    if output is None:
        out.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _summary_stream(config: RunConfig, out: TextIO) -> TextIO:
    """产物写到标准输出时，摘要改写到标准错误。"""
    return out if config.output is not None else sys.stderr


# ----------------------------------------------------------------------
# crystal
# ----------------------------------------------------------------------
def cmd_crystal(config: RunConfig, out: TextIO = sys.stdout) -> int:
    """构造 B(λ) 或 B(∞) 并导出为 DOT/JSON。"""
    fmt = config.format_or("json", ("dot", "json"))
    datum = load_datum(config)
    lam = config.lam()
    if config.binf or lam is None:
        graph = gen_crystal_binf(datum, config.depth)
        what = "B(∞)"
    else:
        graph = gen_crystal_module(HWModule(datum, lam, config.depth))
        what = f"B({lam})"
    if config.output is not None:
        write_graph(graph, fmt, config.output)
    else:
        out.write(export(graph, fmt))
    print_ok(f"{what}：{len(graph.nodes)} 个节点，{len(graph.edges)} 条边（深度 {graph.depth}）",
             _summary_stream(config, out))
    return EXIT_OK


# ----------------------------------------------------------------------
# check
# ----------------------------------------------------------------------
def _run_suite(suite, context: SuiteContext) -> CheckReport:
    try:
        return suite.run(context)
    except OracleUnavailableError as exc:
        return CheckReport(suite=suite.name, passed=False, message=f"对照不可用：{exc}")


def cmd_check(config: RunConfig, out: TextIO = sys.stdout) -> int:
    """按名称运行检查套件，全部通过时退出码为 0。"""
    registry = default_suites()
    selected = [resolve_suite(name, registry) for name in config.suites] if config.suites else registry
    datum = load_datum(config)
    context = SuiteContext(
        datum=datum,
        hw=config.lam(),
        hw2=config.mu(),
        depth=config.depth,
        seed=config.seed,
        degree_bound=config.degree_bound,
        binf=config.binf,
    )
    stream = _summary_stream(config, out) if config.format == "json" else out
    reports: List[CheckReport] = []
    for suite in selected:
        logger.info("运行检查套件 %s", suite.name)
        report = _run_suite(suite, context)
        reports.append(report)
        line = f"{report.suite}: {report.message}（检查 {report.checked} 项）"
        if report.passed:
            print_ok(line, stream)
        else:
            print_fail(line, stream)
            if report.counterexample:
                print(json.dumps(report.counterexample, ensure_ascii=False, indent=2, default=str), file=stream)
    if config.format == "json" or config.output is not None:
        payload = json.dumps([r.model_dump() for r in reports], ensure_ascii=False, indent=2, default=str) + "\n"
        _emit(payload, config.output, out)
    failed = [r.suite for r in reports if not r.passed]
    if failed:
        print_fail(f"{len(failed)}/{len(reports)} 个套件未通过：{', '.join(failed)}", stream)
        return EXIT_FAILED
    print_info(f"{len(reports)} 个套件全部通过", stream)
    return EXIT_OK


# ----------------------------------------------------------------------
# global
# ----------------------------------------------------------------------
def cmd_global(config: RunConfig, out: TextIO = sys.stdout) -> int:
    """求解全局基并输出 TSV/JSON 表格；不收敛时写出不完整表格并以 4 退出。"""
    fmt = config.format_or("tsv", ("tsv", "json"))
    datum = load_datum(config)
    lam = config.lam()
    try:
        if lam is not None and not config.binf:
            basis = module_global_basis(datum, lam, config.depth, config.degree_bound)
        else:
            basis = global_basis(datum, config.depth, config.degree_bound)
    except ConvergenceError as exc:
        doc = partial_document(datum, exc.partial)
        if config.output is not None:
            write_table(doc, fmt, config.output)
        else:
            out.write(render_table(doc, fmt))
        raise
    matches = None
    status = EXIT_OK
    stream = _summary_stream(config, out)
    if config.t1_compare:
        if basis.graph.is_binf:
            report = t1_compare(basis)
            matches = report.matches
            if not report.passed:
                print_fail(f"t=1 对照：{len(report.defects)} 个元素未匹配", stream)
                status = EXIT_FAILED
            else:
                print_ok(f"t=1 对照：{report.checked} 个元素一一匹配", stream)
        else:
            print_info("t=1 对照只适用于 U⁻ 的全局基，已跳过", stream)
    doc = basis_document(basis, matches)
    if config.output is not None:
        write_table(doc, fmt, config.output)
    else:
        out.write(render_table(doc, fmt))
    print_ok(f"{len(basis)} 个全局基元素，{len(doc.grades)} 个次数", stream)
    return status


# ----------------------------------------------------------------------
# datum
# ----------------------------------------------------------------------
def datum_summary(datum: CartanDatum) -> Dict[str, object]:
    """配对值、GCM、D、基本权配对与 k 在基本权上的特征值。"""
    summary: Dict[str, object] = {
        "labels": list(datum.labels),
        "Lambda": [list(row) for row in datum.matrix],
        "gcm": [list(row) for row in datum.gcm],
        "symmetrized": [[datum.dot(i, j) for j in datum.indices] for i in datum.indices],
        "D": datum.den,
        "finite_type": datum.is_finite_type,
    }
    if datum.has_pairings:
        fundamentals = {}
        for j in datum.indices:
            weight = datum.weight(datum.fundamental(j))
            fundamentals[datum.label(j)] = {
                "left": [str(x) for x in datum.fund_left[j]],
                "right": [str(x) for x in datum.fund_right[j]],
                "k": [str(datum.k_scalar(i, KIND_K, weight)) for i in datum.indices],
                "kprime": [str(datum.k_scalar(i, KIND_KPRIME, weight)) for i in datum.indices],
            }
        summary["fundamental_weights"] = fundamentals
    return summary


def cmd_datum(config: RunConfig, out: TextIO = sys.stdout) -> int:
    """校验数据文档并打印导出量。"""
    datum = load_datum(config)
    summary = datum_summary(datum)
    if config.format == "json":
        _emit(json.dumps(summary, ensure_ascii=False, indent=2) + "\n", config.output, out)
        return EXIT_OK
    lines = [f"labels: {', '.join(datum.labels)}", f"D = {datum.den}", "GCM:"]
    lines += ["  " + " ".join(f"{a:>3}" for a in row) for row in datum.gcm]
    lines.append(f"finite type: {datum.is_finite_type}")
    for label, entry in summary.get("fundamental_weights", {}).items():
        lines.append(f"Λ_{label}: ⟨i,Λ⟩ = {entry['left']}  ⟨Λ,i⟩ = {entry['right']}")
        lines.append(f"  k_i = {entry['k']}")
    _emit("\n".join(lines) + "\n", config.output, out)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig, TextIO], int]] = {
    "crystal": cmd_crystal,
    "check": cmd_check,
    "global": cmd_global,
    "datum": cmd_datum,
}


def run(config: RunConfig, out: TextIO = sys.stdout) -> int:
    """执行一个子命令，把异常映射为退出码并把错误写到标准错误。"""
    override_depth_cap(config.depth_cap)
    if config.cache_dir is not None:
        configure_cache(config.cache_dir)
    try:
        return COMMANDS[config.command](config, out)
    except ConvergenceError as exc:
        print_error(f"全局基求解不收敛：{exc}")
        return EXIT_CONVERGENCE
    except Exception as exc:
        code = exit_code_for(exc)
        print_error(str(exc))
        if isinstance(exc, CrystalInvariantError) and exc.counterexample:
            print(json.dumps(exc.counterexample, ensure_ascii=False, default=str), file=sys.stderr)
        return code
    finally:
        override_depth_cap(None)
