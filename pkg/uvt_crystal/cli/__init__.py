"""命令行子命令与退出码"""

from .commands import (
    COMMANDS,
    EXIT_CONVERGENCE,
    EXIT_FAILED,
    EXIT_INVALID,
    EXIT_INVARIANT,
    EXIT_OK,
    cmd_check,
    cmd_crystal,
    cmd_datum,
    cmd_global,
    datum_summary,
    exit_code_for,
    run,
)

__all__ = [
    "COMMANDS",
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_INVALID",
    "EXIT_INVARIANT",
    "EXIT_CONVERGENCE",
    "cmd_crystal",
    "cmd_check",
    "cmd_global",
    "cmd_datum",
    "datum_summary",
    "exit_code_for",
    "run",
]
