from __future__ import annotations

import argparse
import json
from typing import Any, Sequence

from pydantic import BaseModel

from ..nilpotent.element import GroupElement, element, format_element
from ..nilpotent.presentation import get_presentation
from ..schemas import DecompositionModel, ElementModel, PortraitModel
from ..selfsimilar.representation import Decomposition, Portrait


def int_list(text: str) -> tuple[int, ...]:
    """argparse type for ``2,1,1``."""
    try:
        values = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def group_from_args(args: argparse.Namespace):
    return get_presentation(args.rank, args.nilpotency_class)


def element_model(a: GroupElement) -> ElementModel:
    return ElementModel(
        rank=a.presentation.rank,
        nilpotency_class=a.presentation.nilpotency_class,
        exponents=list(a.exponents),
        normal_form=format_element(a),
    )


def element_from_model(model: ElementModel) -> GroupElement:
    """Inverse of element_model; the normal form text is not consulted."""
    return element(get_presentation(model.rank, model.nilpotency_class), model.exponents)


def decomposition_model(g: GroupElement, decomposition: Decomposition) -> DecompositionModel:
    return DecompositionModel(
        element=element_model(g),
        perm=list(decomposition.perm),
        cycles=decomposition.cycles,
        states=[element_model(s) for s in decomposition.states],
    )


def portrait_model(node: Portrait) -> PortraitModel:
    return PortraitModel(
        depth=node.depth,
        perm=list(node.perm),
        children=[portrait_model(child) for child in node.children],
    )


def portrait_from_model(model: PortraitModel) -> Portrait:
    return Portrait(
        depth=model.depth,
        perm=tuple(model.perm),
        children=tuple(portrait_from_model(child) for child in model.children),
    )


def exponent_text(values: Sequence[int | None]) -> str:
    return "(" + ",".join("-" if v is None else str(v) for v in values) + ")"


def emit_json(payload: BaseModel | Any) -> None:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(by_alias=True)
    print(json.dumps(payload, ensure_ascii=False, indent=2))


def emit(args: argparse.Namespace, text: str | Sequence[str], payload: BaseModel | Any) -> None:
    if getattr(args, "format", "text") == "json":
        emit_json(payload)
        return
    if isinstance(text, str):
        print(text)
    else:
        for line in text:
            print(line)
