from __future__ import annotations

import argparse
import logging

from ..nilpotent.element import format_element, generator
from ..nilpotent.words import evaluate
from ..schemas import (
    ActionModel,
    AutomatonModel,
    AutomatonStateModel,
    RepresentationModel,
    SpectralModel,
    StatesModel,
    TransitivityModel,
    WitnessModel,
)
from ..selfsimilar.automaton import (
    automaton_from_closure,
    faithfulness_witness,
    is_level1_transitive,
    state_closure,
)
from ..selfsimilar.endomorphism import cyclic_endomorphism
from ..selfsimilar.example import EXAMPLE_CLASS, EXAMPLE_EXPONENTS, EXAMPLE_RANK, bracket_transversal
from ..selfsimilar.representation import Portrait, SelfSimilarRep, act, portrait
from ..selfsimilar.spectral import spectral_report
from .output import decomposition_model, element_model, emit, int_list, portrait_model, positive_int


LOGGER = logging.getLogger(__name__)


def build_rep(args: argparse.Namespace) -> SelfSimilarRep:
    if args.exponents is not None:
        exponents = tuple(args.exponents)
    else:
        exponents = (2,) + (1,) * (args.rank - 1)
    if len(exponents) != args.rank:
        raise ValueError(f"expected {args.rank} exponents, got {len(exponents)}")
    choice = args.transversal
    if choice is None:
        is_example = (args.rank, args.nilpotency_class, exponents) == (EXAMPLE_RANK, EXAMPLE_CLASS, EXAMPLE_EXPONENTS)
        choice = "paper-example" if is_example else "canonical"
    LOGGER.debug("Using the %s transversal for exponents %s", choice, exponents)
    endomorphism = cyclic_endomorphism(args.rank, args.nilpotency_class, exponents)
    representatives = None
    if choice in ("paper-example", "brackets"):
        representatives = bracket_transversal(endomorphism.presentation)
    return SelfSimilarRep(endomorphism, representatives)


def _element(rep: SelfSimilarRep, text: str):
    return evaluate(rep.presentation, text)


def _build(args: argparse.Namespace) -> int:
    rep = build_rep(args)
    gens = [generator(rep.presentation, i) for i in range(1, rep.presentation.rank + 1)]
    decompositions = [rep.decompose(g) for g in gens]
    lines = [f"alphabet {rep.degree}"]
    lines += [f"t{letter} {format_element(t)}" for letter, t in enumerate(rep.transversal, start=1)]
    lines += [f"{format_element(g)} {d.cycles}" for g, d in zip(gens, decompositions)]
    model = RepresentationModel(
        alphabet=rep.degree,
        transversal=[element_model(t) for t in rep.transversal],
        generators=[decomposition_model(g, d) for g, d in zip(gens, decompositions)],
    )
    emit(args, lines, model)
    return 0


def _decompose(args: argparse.Namespace) -> int:
    rep = build_rep(args)
    g = _element(rep, args.elem)
    decomposition = rep.decompose(g)
    lines = [f"perm {decomposition.cycles}", "states"]
    lines += [f"  {letter}: {format_element(s)}" for letter, s in enumerate(decomposition.states, start=1)]
    emit(args, lines, decomposition_model(g, decomposition))
    return 0


def _act(args: argparse.Namespace) -> int:
    rep = build_rep(args)
    image = act(rep, _element(rep, args.elem), args.word)
    emit(args, ",".join(str(letter) for letter in image), ActionModel(word=list(args.word), image=list(image)))
    return 0


def _portrait_lines(node: Portrait, path: str) -> list[str]:
    lines = [f"{path or 'root'} {node.cycles}"]
    for letter, child in enumerate(node.children, start=1):
        lines += _portrait_lines(child, f"{path}.{letter}" if path else str(letter))
    return lines


def _portrait(args: argparse.Namespace) -> int:
    rep = build_rep(args)
    tree = portrait(rep, _element(rep, args.elem), args.depth)
    emit(args, _portrait_lines(tree, ""), portrait_model(tree))
    return 0


def _seeds(rep: SelfSimilarRep, args: argparse.Namespace):
    if args.seeds:
        return [_element(rep, text) for text in args.seeds]
    return [generator(rep.presentation, i) for i in range(1, rep.presentation.rank + 1)]


def _states(args: argparse.Namespace) -> int:
    rep = build_rep(args)
    closure = state_closure(rep, _seeds(rep, args), args.cutoff)
    if closure.elements is None:
        model = StatesModel(cutoff_exceeded=True, cutoff=closure.cutoff)
        emit(args, f"cutoff exceeded ({closure.cutoff} states)", model)
        return 0
    lines = [f"states {len(closure.elements)}"] + [format_element(s) for s in closure.elements]
    emit(args, lines, StatesModel(cutoff=closure.cutoff, states=[element_model(s) for s in closure.elements]))
    return 0


def _automaton(args: argparse.Namespace) -> int:
    rep = build_rep(args)
    seeds = _seeds(rep, args)
    closure = state_closure(rep, seeds, args.cutoff)
    if closure.elements is None:
        emit(args, f"cutoff exceeded ({closure.cutoff} states)", AutomatonModel(alphabet=rep.degree, complete=False))
        return 0
    automaton = automaton_from_closure(rep, closure)
    model = AutomatonModel(
        alphabet=automaton.alphabet,
        initial=[automaton.state_id(seed) for seed in seeds],
        states=[
            AutomatonStateModel(
                id=position,
                element=element_model(state.element),
                perm=list(state.perm),
                children=list(state.transitions),
            )
            for position, state in enumerate(automaton.states)
        ],
    )
    lines = [
        f"{position} {format_element(state.element)} {list(state.perm)} {list(state.transitions)}"
        for position, state in enumerate(automaton.states)
    ]
    emit(args, lines, model)
    return 0


def _polynomial_text(report) -> str:
    return str(report.polynomial.as_expr()).replace("**", "^")


def _spectral(args: argparse.Namespace) -> int:
    rep = build_rep(args)
    report = spectral_report(rep.endomorphism)
    matrix = [[str(value) for value in row] for row in report.matrix.tolist()]
    lines = [
        "matrix " + " ; ".join(" ".join(row) for row in matrix),
        f"charpoly {_polynomial_text(report)}",
        f"radius {report.radius:.12g}",
        f"classification {report.classification}",
    ]
    model = SpectralModel(
        matrix=matrix,
        characteristic_polynomial=_polynomial_text(report),
        coefficients=[str(c) for c in report.coefficients],
        spectral_radius=report.radius,
        exact=report.exact,
        classification=report.classification,
    )
    emit(args, lines, model)
    return 0


def _witness(args: argparse.Namespace) -> int:
    rep = build_rep(args)
    word = faithfulness_witness(rep, _element(rep, args.elem), args.max_depth)
    text = "none" if word is None else ",".join(str(letter) for letter in word)
    emit(args, text, WitnessModel(witness=None if word is None else list(word)))
    return 0


def _transitive(args: argparse.Namespace) -> int:
    rep = build_rep(args)
    elements = [_element(rep, text) for text in args.elems] if args.elems else None
    value = is_level1_transitive(rep, elements)
    emit(args, "true" if value else "false", TransitivityModel(transitive=value))
    return 0


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    group = argparse.ArgumentParser(add_help=False)
    group.add_argument("--rank", type=positive_int, default=EXAMPLE_RANK)
    group.add_argument("--class", dest="nilpotency_class", type=positive_int, default=EXAMPLE_CLASS)
    group.add_argument("--exponents", type=int_list, default=None)
    group.add_argument(
        "--transversal",
        choices=["paper-example", "canonical", "brackets"],
        default=None,
        help="paper-example (alias brackets) uses g1^a * prod [g1,gj]; class 2 only",
    )

    rep_parser = subparsers.add_parser("rep", help="self-similar representation of N_{r,c}")
    commands = rep_parser.add_subparsers(dest="rep_command", required=True)
    parents = [common, group]

    parser = commands.add_parser("build", parents=parents, help="alphabet, transversal and generator permutations")
    parser.set_defaults(handler=_build)

    parser = commands.add_parser("decompose", parents=parents, help="first-level permutation and states")
    parser.add_argument("--elem", required=True)
    parser.set_defaults(handler=_decompose)

    parser = commands.add_parser("act", parents=parents, help="image of a word")
    parser.add_argument("--elem", required=True)
    parser.add_argument("--word", type=int_list, required=True)
    parser.set_defaults(handler=_act)

    parser = commands.add_parser("portrait", parents=parents, help="permutations down to a depth")
    parser.add_argument("--elem", required=True)
    parser.add_argument("--depth", type=int, default=1)
    parser.set_defaults(handler=_portrait)

    for name, handler, help_text in (
        ("states", _states, "closure of the states of the seeds"),
        ("automaton", _automaton, "finite automaton on the state closure"),
    ):
        parser = commands.add_parser(name, parents=parents, help=help_text)
        parser.add_argument("--seeds", nargs="+", default=None)
        parser.add_argument("--cutoff", type=positive_int, default=None)
        parser.set_defaults(handler=handler)

    parser = commands.add_parser("spectral", parents=parents, help="abelianized matrix and spectral radius")
    parser.set_defaults(handler=_spectral)

    parser = commands.add_parser("witness", parents=parents, help="shortest word moved by an element")
    parser.add_argument("--elem", required=True)
    parser.add_argument("--max-depth", type=positive_int, default=8)
    parser.set_defaults(handler=_witness)

    parser = commands.add_parser("transitive", parents=parents, help="first-level transitivity")
    parser.add_argument("--elems", nargs="+", default=None)
    parser.set_defaults(handler=_transitive)
