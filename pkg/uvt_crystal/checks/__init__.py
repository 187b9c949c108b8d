"""按名称运行的可执行性质检查"""

from .base import CheckSuite, SuiteContext
from .suites import SUITE_ALIASES, default_suites, resolve_suite

__all__ = [
    "CheckSuite",
    "SuiteContext",
    "SUITE_ALIASES",
    "default_suites",
    "resolve_suite",
]
