"""Render Grail+ finite automata as TikZ pictures."""

from grailviz.layout import Placement, assign_x, assign_y, layout
from grailviz.model import (
    Automaton,
    StateKind,
    Transition,
    UnknownStateError,
    kind_of,
    state_count,
    transition_triples,
)
from grailviz.parser import ParseError, ParseErrorKind, parse, serialize
from grailviz.tikz import (
    EdgePlan,
    EdgeStyle,
    MissingPlacementError,
    RenderMode,
    RenderOptions,
    emit_document,
    emit_edge,
    emit_node,
    plan_edges,
)

__all__ = [
    "Automaton",
    "EdgePlan",
    "EdgeStyle",
    "MissingPlacementError",
    "ParseError",
    "ParseErrorKind",
    "Placement",
    "RenderMode",
    "RenderOptions",
    "StateKind",
    "Transition",
    "UnknownStateError",
    "assign_x",
    "assign_y",
    "emit_document",
    "emit_edge",
    "emit_node",
    "kind_of",
    "layout",
    "parse",
    "plan_edges",
    "serialize",
    "state_count",
    "transition_triples",
]
