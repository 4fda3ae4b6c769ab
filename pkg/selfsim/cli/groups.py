from __future__ import annotations

import argparse

from ..nilpotent.element import format_element
from ..nilpotent.subgroup import induced_sequence
from ..nilpotent.words import evaluate
from ..schemas import SubgroupModel
from .output import element_model, emit, exponent_text, group_from_args, positive_int


def _collect(args: argparse.Namespace) -> int:
    presentation = group_from_args(args)
    a = evaluate(presentation, args.expr)
    emit(args, f"{exponent_text(a.exponents)} {format_element(a)}", element_model(a))
    return 0


def _subgroup(args: argparse.Namespace) -> int:
    presentation = group_from_args(args)
    generators = [evaluate(presentation, text) for text in args.gens]
    subgroup = induced_sequence(presentation, generators)
    index = subgroup.index
    lines = [
        f"pivots {exponent_text(subgroup.pivots)}",
        f"index {index if index is not None else 'infinite'}",
    ]
    model = SubgroupModel(
        rank=presentation.rank,
        nilpotency_class=presentation.nilpotency_class,
        generators=[element_model(g) for g in subgroup.sequence_elements()],
        pivots=list(subgroup.pivots),
        index=index,
    )
    emit(args, lines, model)
    return 0


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("collect", parents=[common], help="normal form of a group expression")
    parser.add_argument("--rank", type=positive_int, required=True)
    parser.add_argument("--class", dest="nilpotency_class", type=positive_int, required=True)
    parser.add_argument("--expr", required=True)
    parser.set_defaults(handler=_collect)

    parser = subparsers.add_parser("subgroup", parents=[common], help="induced sequence and index of a subgroup")
    parser.add_argument("--rank", type=positive_int, required=True)
    parser.add_argument("--class", dest="nilpotency_class", type=positive_int, required=True)
    parser.add_argument("--gens", nargs="+", required=True)
    parser.set_defaults(handler=_subgroup)
