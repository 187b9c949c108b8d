"""终端输出：彩色摘要与没有 colorama 时的退化。"""

from __future__ import annotations

import sys
from typing import TextIO

# 尝试导入 colorama 用于彩色输出
try:
    from colorama import Fore, Style, init as colorama_init
    colorama_init(autoreset=True)
    COLORS_AVAILABLE = True
except ImportError:
    COLORS_AVAILABLE = False

    # 如果没有 colorama，定义空的颜色常量
    class Fore:
        GREEN = ""
        YELLOW = ""
        RED = ""
        CYAN = ""

    class Style:
        BRIGHT = ""
        RESET_ALL = ""


def _paint(stream: TextIO, text: str, *codes: str) -> str:
    """只有 colorama 可用且输出到终端时才加颜色"""
    isatty = getattr(stream, "isatty", None)
    if not COLORS_AVAILABLE or isatty is None or not isatty():
        return text
    return f"{''.join(codes)}{text}{Style.RESET_ALL}"


def print_separator(char: str = "=", length: int = 70, stream: TextIO = sys.stdout) -> None:
    """打印分隔线"""
    print(_paint(stream, char * length, Fore.CYAN), file=stream)


def print_header(text: str, stream: TextIO = sys.stdout) -> None:
    """打印标题"""
    print_separator(stream=stream)
    print(_paint(stream, text.center(70), Fore.GREEN, Style.BRIGHT), file=stream)
    print_separator(stream=stream)


def print_ok(text: str, stream: TextIO = sys.stdout) -> None:
    print(_paint(stream, f"✓ {text}", Fore.GREEN), file=stream)


def print_fail(text: str, stream: TextIO = sys.stdout) -> None:
    print(_paint(stream, f"✗ {text}", Fore.RED), file=stream)


def print_info(text: str, stream: TextIO = sys.stdout) -> None:
    print(_paint(stream, f"ℹ {text}", Fore.CYAN), file=stream)


def print_error(text: str) -> None:
    """错误信息一律写到标准错误。"""
    print(_paint(sys.stderr, f"✗ {text}", Fore.RED), file=sys.stderr)
