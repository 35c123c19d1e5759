"""Automaton value types shared by the parser, layout and emitter."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

START = "(START)"
FINAL = "(FINAL)"
START_ARROW = "|-"
FINAL_ARROW = "-|"

RESERVED_STATES = frozenset({START, FINAL})
RESERVED_LABELS = frozenset({START_ARROW, FINAL_ARROW})


class UnknownStateError(KeyError):
    pass


class StateKind(enum.Enum):
    START = "S"
    FINAL = "F"
    BOTH = "B"
    PLAIN = "-"

    @property
    def is_initial(self) -> bool:
        return self in (StateKind.START, StateKind.BOTH)

    @property
    def is_final(self) -> bool:
        return self in (StateKind.FINAL, StateKind.BOTH)

    @classmethod
    def from_flags(cls, initial: bool, final: bool) -> StateKind:
        if initial and final:
            return cls.BOTH
        if initial:
            return cls.START
        if final:
            return cls.FINAL
        return cls.PLAIN


def _check_token(token: str, what: str) -> None:
    if not isinstance(token, str) or not token:
        raise ValueError(f"{what} must be a non-empty string, got {token!r}")
    if any(ch.isspace() for ch in token):
        raise ValueError(f"{what} {token!r} contains whitespace")


def check_state_label(label: str) -> None:
    _check_token(label, "state label")
    if label in RESERVED_STATES:
        raise ValueError(f"{label!r} is reserved and cannot name a state")


@dataclass(frozen=True)
class Transition:
    source: str
    label: str
    sink: str

    def __post_init__(self) -> None:
        check_state_label(self.source)
        check_state_label(self.sink)
        _check_token(self.label, "transition label")
        if self.label in RESERVED_LABELS:
            raise ValueError(f"{self.label!r} is reserved and cannot label a transition")

    @property
    def is_loop(self) -> bool:
        return self.source == self.sink


@dataclass(frozen=True)
class Automaton:
    """States in first-seen order with their kinds, plus transitions.

    Exact duplicate transitions are dropped at construction, keeping the
    first occurrence, so two automata built from lists that differ only in
    repeated triples compare equal.
    """

    states: tuple[tuple[str, StateKind], ...] = ()
    transitions: tuple[Transition, ...] = ()

    def __post_init__(self) -> None:
        states = tuple((label, StateKind(kind)) for label, kind in self.states)
        seen: set[str] = set()
        for label, _ in states:
            check_state_label(label)
            if label in seen:
                raise ValueError(f"duplicate state label {label!r}")
            seen.add(label)

        transitions = tuple(dict.fromkeys(self.transitions))
        for t in transitions:
            if not isinstance(t, Transition):
                raise TypeError(f"expected Transition, got {type(t).__name__}")
            for end in (t.source, t.sink):
                if end not in seen:
                    raise ValueError(f"transition {t} refers to undeclared state {end!r}")

        object.__setattr__(self, "states", states)
        object.__setattr__(self, "transitions", transitions)

    @classmethod
    def from_instructions(
        cls,
        transitions: Iterable[Transition] = (),
        initial: Iterable[str] = (),
        final: Iterable[str] = (),
    ) -> Automaton:
        """Build an automaton, ordering states as transitions, then initial, then final states mention them."""
        transitions = list(transitions)
        initial = set(initial)
        final = set(final)
        order: dict[str, None] = {}
        for t in transitions:
            order.setdefault(t.source)
            order.setdefault(t.sink)
        for label in (*sorted(initial), *sorted(final)):
            order.setdefault(label)
        states = tuple(
            (label, StateKind.from_flags(label in initial, label in final)) for label in order
        )
        return cls(states, tuple(transitions))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.states)

    def __len__(self) -> int:
        return len(self.states)


def state_count(a: Automaton) -> int:
    return len(a.states)


def kind_of(a: Automaton, state: str) -> StateKind:
    for label, kind in a.states:
        if label == state:
            return kind
    raise UnknownStateError(state)


def transition_triples(a: Automaton) -> tuple[list[str], list[str], list[str]]:
    """Return the sources, labels and sinks of ``a`` as three aligned lists."""
    return (
        [t.source for t in a.transitions],
        [t.label for t in a.transitions],
        [t.sink for t in a.transitions],
    )
