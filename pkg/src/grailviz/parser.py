"""Reading and writing the Grail+ instruction-list format.

Each non-blank line holds three whitespace-separated fields: either a
transition ``source label sink`` or one of the pseudo-instructions
``(START) |- state`` and ``state -| (FINAL)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Union

from grailviz.model import (
    FINAL,
    FINAL_ARROW,
    RESERVED_LABELS,
    RESERVED_STATES,
    START,
    START_ARROW,
    Automaton,
    StateKind,
    Transition,
)

RESERVED = RESERVED_STATES | RESERVED_LABELS


class ParseErrorKind(enum.Enum):
    WRONG_FIELD_COUNT = "wrong field count"
    RESERVED_TOKEN_MISUSE = "reserved token misuse"
    MALFORMED_PSEUDO = "malformed pseudo-instruction"


class ParseError(ValueError):
    def __init__(self, line_number: int, kind: ParseErrorKind, detail: str, column: int = 1):
        self.line_number = line_number
        self.kind = kind
        self.detail = detail
        self.column = column
        super().__init__(f"line {line_number}, column {column}: {kind.value}: {detail}")


@dataclass(frozen=True)
class StartPseudo:
    state: str
    line_number: int


@dataclass(frozen=True)
class FinalPseudo:
    state: str
    line_number: int


@dataclass(frozen=True)
class Edge:
    transition: Transition
    line_number: int


Instruction = Union[StartPseudo, FinalPseudo, Edge]


def _fields(line: str) -> list[tuple[int, str]]:
    """Split ``line`` on whitespace, keeping the 1-based column of each field."""
    fields = []
    col = 0
    n = len(line)
    while col < n:
        while col < n and line[col].isspace():
            col += 1
        start = col
        while col < n and not line[col].isspace():
            col += 1
        if col > start:
            fields.append((start + 1, line[start:col]))
    return fields


def parse_line(line: str, line_number: int) -> Instruction | None:
    fields = _fields(line)
    if not fields:
        return None
    if len(fields) != 3:
        raise ParseError(
            line_number,
            ParseErrorKind.WRONG_FIELD_COUNT,
            f"expected 3 fields, found {len(fields)}",
            fields[0][0],
        )
    (_, a), (_, b), (_, c) = fields

    if a == START and b == START_ARROW and c not in RESERVED:
        return StartPseudo(c, line_number)
    if b == FINAL_ARROW and c == FINAL and a not in RESERVED:
        return FinalPseudo(a, line_number)

    for col, token in fields:
        if token in RESERVED_LABELS:
            shape = f"{START} {START_ARROW} state" if token == START_ARROW else f"state {FINAL_ARROW} {FINAL}"
            raise ParseError(
                line_number,
                ParseErrorKind.MALFORMED_PSEUDO,
                f"{token!r} must appear as {shape!r}",
                col,
            )
    for col, token in fields:
        if token in RESERVED_STATES:
            raise ParseError(
                line_number,
                ParseErrorKind.RESERVED_TOKEN_MISUSE,
                f"{token!r} is only allowed in a pseudo-instruction",
                col,
            )
    return Edge(Transition(a, b, c), line_number)


def iter_instructions(text: str) -> Iterator[Instruction]:
    # split on "\n" only; str.splitlines() also breaks on form feeds etc. and would skew line numbers
    for number, line in enumerate(text.split("\n"), start=1):
        instruction = parse_line(line, number)
        if instruction is not None:
            yield instruction


def parse(text: str) -> Automaton:
    """Parse instruction-list text into an :class:`Automaton`.

    States are ordered by first appearance, scanning lines top to bottom and
    fields left to right, pseudo-instructions included.

    Raises:
        ParseError: on the first malformed line.
    """
    order: dict[str, None] = {}
    initial: set[str] = set()
    final: set[str] = set()
    transitions: list[Transition] = []

    for ins in iter_instructions(text):
        if isinstance(ins, StartPseudo):
            order.setdefault(ins.state)
            initial.add(ins.state)
        elif isinstance(ins, FinalPseudo):
            order.setdefault(ins.state)
            final.add(ins.state)
        else:
            t = ins.transition
            order.setdefault(t.source)
            order.setdefault(t.sink)
            transitions.append(t)

    states = tuple(
        (label, StateKind.from_flags(label in initial, label in final)) for label in order
    )
    return Automaton(states, tuple(transitions))


def serialize(a: Automaton) -> str:
    """Write ``a`` as canonical instruction-list text.

    Start pseudo-instructions come first, then transitions, then final
    pseudo-instructions. Empty automata serialize to the empty string.
    """
    lines = [f"{START} {START_ARROW} {label}" for label, kind in a.states if kind.is_initial]
    lines += [f"{t.source} {t.label} {t.sink}" for t in a.transitions]
    lines += [f"{label} {FINAL_ARROW} {FINAL}" for label, kind in a.states if kind.is_final]
    return "".join(line + "\n" for line in lines)
