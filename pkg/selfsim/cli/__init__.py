from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from ..config import get_env_bool, reload_basis_cap
from ..logs import clear_logs, get_recent_logs, setup_runtime_logging
from . import counting, groups, rep, verify


LOGGER = logging.getLogger(__name__)

__all__ = ["build_parser", "run"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selfsim",
        description="Exact arithmetic and self-similar actions of free nilpotent groups.",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default="WARNING",
        help="logging threshold for stderr (default WARNING)",
    )
    parser.add_argument(
        "--show-logs",
        action="store_true",
        default=get_env_bool("SELFSIM_SHOW_LOGS"),
        help="dump buffered log records to stderr on exit (env SELFSIM_SHOW_LOGS)",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    subparsers = parser.add_subparsers(dest="command", required=True)
    counting.register(subparsers, common)
    groups.register(subparsers, common)
    rep.register(subparsers, common)
    verify.register(subparsers, common)
    return parser


def _dump_logs() -> None:
    for entry in get_recent_logs(limit=1000):
        sys.stderr.write(json.dumps(entry, ensure_ascii=False) + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    setup_runtime_logging(args.log_level, stream=True)
    clear_logs()
    reload_basis_cap()
    try:
        return args.handler(args)
    except ValueError as exc:
        LOGGER.debug("Command %s rejected its input", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        LOGGER.exception("Command %s failed", args.command)
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    finally:
        if args.show_logs:
            _dump_logs()
        setup_runtime_logging(args.log_level)
