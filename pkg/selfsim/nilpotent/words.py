"""Group words and the expression syntax used by the CLI.

Accepted forms: ``g1 g2^-1``, ``g1*g2^{-1}``, ``[g1,[g2,g1]]^2``, ``(g1 g2)^3``,
``e`` or ``1`` for the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .element import GroupElement
from .presentation import Presentation


class ExpressionSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorLetter:
    index: int
    exponent: int


@dataclass(frozen=True)
class CommutatorLetter:
    left: "Word"
    right: "Word"
    exponent: int = 1


@dataclass(frozen=True)
class GroupLetter:
    word: "Word"
    exponent: int = 1


Letter = Union[GeneratorLetter, CommutatorLetter, GroupLetter]


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    @classmethod
    def from_pairs(cls, pairs: list[tuple[int, int]] | tuple[tuple[int, int], ...]) -> "Word":
        return cls(tuple(GeneratorLetter(int(g), int(e)) for g, e in pairs if e))


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z]\w*)|(?P<int>-?\d+)|(?P<punct>[\[\](),*^{}]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None or match.end() == position:
            raise ExpressionSyntaxError(f"unexpected character {stripped[position:].strip()[:1]!r} in {text!r}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.position = 0

    def _peek(self) -> tuple[str, str] | None:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def _take(self, value: str | None = None) -> tuple[str, str]:
        token = self._peek()
        if token is None:
            raise ExpressionSyntaxError(f"unexpected end of expression in {self.text!r}")
        if value is not None and token[1] != value:
            raise ExpressionSyntaxError(f"expected {value!r}, found {token[1]!r} in {self.text!r}")
        self.position += 1
        return token

    def parse(self) -> Word:
        word = self._word(stop=())
        if self._peek() is not None:
            raise ExpressionSyntaxError(f"unexpected {self._peek()[1]!r} in {self.text!r}")
        return word

    def _word(self, stop: tuple[str, ...]) -> Word:
        letters: list[Letter] = []
        while True:
            token = self._peek()
            if token is None or token[1] in stop:
                break
            if token[1] == "*":
                self._take()
                continue
            letter = self._factor()
            if letter is not None:
                letters.append(letter)
        return Word(tuple(letters))

    def _exponent(self) -> int:
        token = self._peek()
        if token is None or token[1] != "^":
            return 1
        self._take("^")
        token = self._peek()
        if token is not None and token[1] in ("{", "("):
            closing = "}" if token[1] == "{" else ")"
            self._take()
            value = self._integer()
            self._take(closing)
            return value
        return self._integer()

    def _integer(self) -> int:
        kind, value = self._take()
        if kind != "int":
            raise ExpressionSyntaxError(f"expected an integer exponent, found {value!r} in {self.text!r}")
        return int(value)

    def _factor(self) -> Letter | None:
        kind, value = self._take()
        if kind == "name":
            if value == "e":
                self._exponent()
                return None
            match = re.fullmatch(r"g(\d+)", value)
            if match is None:
                raise ExpressionSyntaxError(f"unknown symbol {value!r} in {self.text!r}")
            exponent = self._exponent()
            return GeneratorLetter(int(match.group(1)), exponent) if exponent else None
        if kind == "int":
            if value != "1":
                raise ExpressionSyntaxError(f"unexpected number {value!r} in {self.text!r}")
            self._exponent()
            return None
        if value == "[":
            left = self._word(stop=(",",))
            self._take(",")
            right = self._word(stop=("]",))
            self._take("]")
            exponent = self._exponent()
            return CommutatorLetter(left, right, exponent) if exponent else None
        if value == "(":
            inner = self._word(stop=(")",))
            self._take(")")
            exponent = self._exponent()
            return GroupLetter(inner, exponent) if exponent else None
        raise ExpressionSyntaxError(f"unexpected {value!r} in {self.text!r}")


def parse_word(text: str) -> Word:
    if not text or not text.strip():
        raise ExpressionSyntaxError("empty expression")
    return _Parser(text).parse()


def collect(presentation: Presentation, word: Word) -> GroupElement:
    """Normal form of the product of a word's letters."""
    vector = presentation.identity
    for letter in word.letters:
        if isinstance(letter, GeneratorLetter):
            if letter.index < 1 or letter.index > presentation.rank:
                raise ExpressionSyntaxError(
                    f"generator g{letter.index} out of range for rank {presentation.rank}"
                )
            vector = presentation.multiply_generator(vector, letter.index - 1, letter.exponent)
            continue
        if isinstance(letter, CommutatorLetter):
            value = collect(presentation, letter.left).commutator(collect(presentation, letter.right))
        else:
            value = collect(presentation, letter.word)
        vector = presentation.multiply(vector, presentation.power(value.exponents, letter.exponent))
    return GroupElement(presentation, vector)


def evaluate(presentation: Presentation, text: str) -> GroupElement:
    return collect(presentation, parse_word(text))
