from __future__ import annotations

import argparse
import logging
import random

from ..calculus import (
    arn,
    format_commutator,
    hall_basis,
    index_exponent,
    subgroup_index_formula,
    weight_distribution,
    witt_multirank,
    witt_rank,
)
from ..nilpotent.element import random_derived_element
from ..nilpotent.presentation import get_presentation
from ..nilpotent.subgroup import isomorphic_subgroup
from ..schemas import BasisEntryModel, CountModel, IndexModel, IndexTrialModel
from .output import emit, int_list, positive_int


LOGGER = logging.getLogger(__name__)


def _witt(args: argparse.Namespace) -> int:
    value = witt_rank(args.rank, args.weight)
    emit(args, str(value), CountModel(quantity="witt", value=value, rank=args.rank, weight=args.weight))
    return 0


def _multirank(args: argparse.Namespace) -> int:
    value = witt_multirank(args.parts)
    emit(args, str(value), CountModel(quantity="multirank", value=value, parts=list(args.parts)))
    return 0


def _hall(args: argparse.Namespace) -> int:
    basis = hall_basis(args.rank, args.nilpotency_class)
    entries = [
        BasisEntryModel(
            id=entry.id,
            weight=entry.weight,
            multiweight=list(entry.multiweight),
            generator=entry.generator,
            left=entry.left,
            right=entry.right,
            label=format_commutator(basis, entry.id),
        )
        for entry in basis.entries
    ]
    lines = [
        f"{e.id} {e.weight} ({','.join(str(m) for m in e.multiweight)}) {e.label}" for e in entries
    ]
    emit(args, lines, [e.model_dump() for e in entries])
    return 0


def _arn(args: argparse.Namespace) -> int:
    value = arn(args.rank, args.weight)
    emit(args, str(value), CountModel(quantity="arn", value=value, rank=args.rank, weight=args.weight))
    return 0


def _distribution(args: argparse.Namespace) -> int:
    value = weight_distribution(args.rank, args.weight, args.degree)
    model = CountModel(quantity="distribution", value=value, rank=args.rank, weight=args.weight, degree=args.degree)
    emit(args, str(value), model)
    return 0


def _index_exponent(args: argparse.Namespace) -> int:
    value = index_exponent(args.rank, args.nilpotency_class)
    model = CountModel(quantity="index_exponent", value=value, rank=args.rank, nilpotency_class=args.nilpotency_class)
    emit(args, str(value), model)
    return 0


def _index(args: argparse.Namespace) -> int:
    formula = subgroup_index_formula(args.rank, args.nilpotency_class, args.exponents)
    lines = [str(formula)]
    trials: list[IndexTrialModel] = []
    if args.random_tails:
        presentation = get_presentation(args.rank, args.nilpotency_class)
        rng = random.Random(args.seed)
        for trial in range(1, args.random_tails + 1):
            tails = [random_derived_element(presentation, rng) for _ in range(args.rank)]
            index = isomorphic_subgroup(presentation, args.exponents, tails).index
            match = index == formula
            trials.append(IndexTrialModel(trial=trial, index=index, match=match))
            lines.append(f"trial {trial}: {index} {'ok' if match else 'MISMATCH'}")
            if not match:
                LOGGER.error("Coset index %s differs from formula %d", index, formula)
    emit(args, lines, IndexModel(formula=formula, trials=trials))
    return 0 if all(t.match for t in trials) else 1


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("witt", parents=[common], help="rank of a free Lie ring layer")
    parser.add_argument("--rank", type=positive_int, required=True)
    parser.add_argument("--weight", type=positive_int, required=True)
    parser.set_defaults(handler=_witt)

    parser = subparsers.add_parser("multirank", parents=[common], help="rank of a multihomogeneous component")
    parser.add_argument("--parts", type=int_list, required=True)
    parser.set_defaults(handler=_multirank)

    parser = subparsers.add_parser("hall", parents=[common], help="list the Hall basis")
    parser.add_argument("--rank", type=positive_int, required=True)
    parser.add_argument("--class", dest="nilpotency_class", type=positive_int, required=True)
    parser.set_defaults(handler=_hall)

    parser = subparsers.add_parser("arn", parents=[common], help="first-generator degree sum of a layer")
    parser.add_argument("--rank", type=positive_int, required=True)
    parser.add_argument("--weight", type=positive_int, required=True)
    parser.set_defaults(handler=_arn)

    parser = subparsers.add_parser(
        "distribution", parents=[common], help="basic commutators with a given first-generator degree"
    )
    parser.add_argument("--rank", type=positive_int, required=True)
    parser.add_argument("--weight", type=positive_int, required=True)
    parser.add_argument("--degree", type=int, required=True)
    parser.set_defaults(handler=_distribution)

    parser = subparsers.add_parser("index-exponent", parents=[common], help="exponent of the subgroup index")
    parser.add_argument("--rank", type=positive_int, required=True)
    parser.add_argument("--class", dest="nilpotency_class", type=positive_int, required=True)
    parser.set_defaults(handler=_index_exponent)

    parser = subparsers.add_parser("index", parents=[common], help="index of <g_i^{n_i} z_i>")
    parser.add_argument("--rank", type=positive_int, required=True)
    parser.add_argument("--class", dest="nilpotency_class", type=positive_int, required=True)
    parser.add_argument("--exponents", type=int_list, required=True)
    parser.add_argument("--random-tails", type=int, default=0, help="also sift K subgroups with random tails")
    parser.add_argument("--seed", type=int, default=0)
    parser.set_defaults(handler=_index)
