from __future__ import annotations

import argparse
import logging

from ..nilpotent.element import generator
from ..selfsimilar.example import EXPECTED_RECURSION, example_rep, format_greek, parse_greek
from ..schemas import ExampleCheckModel, ExampleReportModel
from .output import emit_json


LOGGER = logging.getLogger(__name__)


def _tuple_text(values) -> str:
    return "(" + ",".join(values) + ")"


def _example(args: argparse.Namespace) -> int:
    rep = example_rep()
    presentation = rep.presentation
    lines: list[str] = []
    report: list[ExampleCheckModel] = []
    failures = 0
    for position, expected in enumerate(EXPECTED_RECURSION, start=1):
        decomposition = rep.decompose(generator(presentation, position))
        computed_states = tuple(format_greek(s) for s in decomposition.states)
        expected_states = tuple(parse_greek(presentation, text) for text in expected.states)
        perm_ok = decomposition.cycles == expected.cycles
        states_ok = decomposition.states == expected_states
        failures += (not perm_ok) + (not states_ok)

        lines.append(
            f"{expected.name} perm {decomposition.cycles} expected {expected.cycles} {'PASS' if perm_ok else 'FAIL'}"
        )
        lines.append(
            f"{expected.name} states {_tuple_text(computed_states)} expected {_tuple_text(expected.states)} "
            f"{'PASS' if states_ok else 'FAIL'}"
        )
        for letter in expected.discrepancies:
            lines.append(
                f"{expected.name} note: reference lists {expected.reference_states[letter - 1]} at position {letter}; "
                f"the recursion forces {expected.states[letter - 1]}"
            )
        report.append(
            ExampleCheckModel(
                generator=expected.name,
                cycles=decomposition.cycles,
                expected_cycles=expected.cycles,
                states=list(computed_states),
                expected_states=list(expected.states),
                reference_states=list(expected.reference_states),
                perm_ok=perm_ok,
                states_ok=states_ok,
            )
        )

    if failures:
        LOGGER.error("Worked example check failed in %d places", failures)
    lines.append("PASS" if not failures else f"FAIL ({failures})")
    if args.format == "json":
        emit_json(ExampleReportModel(checks=report, passed=not failures))
    else:
        for line in lines:
            print(line)
    return 0 if not failures else 1


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    verify_parser = subparsers.add_parser("verify", help="reproduce reference computations")
    commands = verify_parser.add_subparsers(dest="verify_command", required=True)
    parser = commands.add_parser("example", parents=[common], help="the rank-3 class-2 worked example")
    parser.set_defaults(handler=_example)
