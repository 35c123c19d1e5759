"""TikZ code generation for automata laid out on a grid."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from grailviz.layout import Placement
from grailviz.model import Automaton, StateKind

Number = Union[int, float, Fraction]

EDGE_LABEL_OPTIONS = "align=center, anchor=center, above, sloped"
LABEL_SEPARATOR = ", "

STANDALONE_PREAMBLE = (
    "\\documentclass[tikz]{standalone}\n"
    "\\usetikzlibrary{automata,positioning}\n"
    "\\begin{document}\n"
)
STANDALONE_END = "\\end{document}\n"

_LENGTH = re.compile(r"(\d+(?:\.\d*)?|\.\d+)\s*(pt|mm|cm|in|ex|em|bp|pc|dd|cc|sp)")

_ESCAPES = {
    "\\": r"\mbox{\textbackslash}",
    "{": r"\{",
    "}": r"\}",
    "#": r"\#",
    "%": r"\%",
    "&": r"\&",
    "_": r"\_",
    "$": r"\$",
    "~": r"\mbox{\textasciitilde}",
    "^": r"\mbox{\textasciicircum}",
}

# characters TikZ accepts inside a node name without ambiguity
_SAFE_NAME = re.compile(r"[A-Za-z0-9_-]+")


class MissingPlacementError(KeyError):
    pass


class EdgeStyle(enum.Enum):
    STRAIGHT = ""
    LOOP_ABOVE = "loop above"
    BEND_LEFT = "bend left"


class RenderMode(enum.Enum):
    STANDALONE = "standalone"
    FRAGMENT = "fragment"


@dataclass(frozen=True)
class RenderOptions:
    mode: RenderMode = RenderMode.STANDALONE
    node_distance: str = "2cm"
    coordinate_scale: Number = 1

    def __post_init__(self) -> None:
        m = _LENGTH.fullmatch(self.node_distance.strip())
        if m is None:
            raise ValueError(f"node distance {self.node_distance!r} is not a TeX length")
        if float(m.group(1)) <= 0:
            raise ValueError(f"node distance {self.node_distance!r} must be positive")
        scale = Fraction(self.coordinate_scale)
        if scale <= 0:
            raise ValueError(f"coordinate scale must be positive, got {self.coordinate_scale!r}")
        object.__setattr__(self, "mode", RenderMode(self.mode))
        object.__setattr__(self, "coordinate_scale", scale)


@dataclass(frozen=True)
class EdgePlan:
    source: str
    sink: str
    labels: tuple[str, ...]
    style: EdgeStyle = EdgeStyle.STRAIGHT


def escape(text: str) -> str:
    """Escape characters that TeX would otherwise interpret."""
    return "".join(_ESCAPES.get(ch, ch) for ch in text)


def format_number(value: Number) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return repr(float(value))


def node_names(labels: Iterable[str]) -> dict[str, str]:
    """Map state labels to TikZ node names.

    Labels made of safe characters are used verbatim; anything else gets a
    generated ``state-N`` name that does not clash with a verbatim one.
    """
    labels = list(labels)
    taken = {label for label in labels if _SAFE_NAME.fullmatch(label)}
    names = {}
    for i, label in enumerate(labels):
        if label in taken:
            names[label] = label
            continue
        name = f"state-{i}"
        suffix = 0
        while name in taken:
            suffix += 1
            name = f"state-{i}-{suffix}"
        taken.add(name)
        names[label] = name
    return names


def plan_edges(a: Automaton) -> list[EdgePlan]:
    """Group transitions into one plan per ordered (source, sink) pair.

    Plans follow the order in which each pair first appears. Self-loops are
    drawn above their state; pairs whose reverse pair also has a transition
    bend left so the two edges do not overlap.
    """
    grouped: dict[tuple[str, str], list[str]] = {}
    for t in a.transitions:
        labels = grouped.setdefault((t.source, t.sink), [])
        if t.label not in labels:
            labels.append(t.label)

    plans = []
    for (source, sink), labels in grouped.items():
        if source == sink:
            style = EdgeStyle.LOOP_ABOVE
        elif (sink, source) in grouped:
            style = EdgeStyle.BEND_LEFT
        else:
            style = EdgeStyle.STRAIGHT
        plans.append(EdgePlan(source, sink, tuple(labels), style))
    return plans


def emit_node(
    label: str,
    kind: StateKind,
    coord: tuple[Number, Number],
    name: str | None = None,
) -> str:
    options = "state"
    if kind.is_initial:
        options += ",initial"
    if kind.is_final:
        options += ",accepting"
    x, y = coord
    return (
        f"\\node[{options}] ({name or label}) at ({format_number(x)},{format_number(y)}) "
        f"{{${escape(label)}$}};"
    )


def emit_edge(plan: EdgePlan, names: dict[str, str] | None = None) -> str:
    names = names or {}
    source = names.get(plan.source, plan.source)
    sink = names.get(plan.sink, plan.sink)
    text = LABEL_SEPARATOR.join(escape(label) for label in plan.labels)
    return (
        f"\\path[->] ({source}) edge[{plan.style.value}] "
        f"node[{EDGE_LABEL_OPTIONS}] {{{text}}} ({sink});"
    )


def emit_fragment(a: Automaton, p: Placement, opts: RenderOptions = RenderOptions()) -> str:
    missing = [label for label in a.labels if label not in p]
    if missing:
        raise MissingPlacementError(f"no coordinate for state(s): {', '.join(missing)}")

    names = node_names(a.labels)
    scale = opts.coordinate_scale
    lines = [f"\\begin{{tikzpicture}}[node distance={opts.node_distance.strip()}]", ""]
    for label, kind in a.states:
        x, y = p[label]
        lines.append(emit_node(label, kind, (x * scale, y * scale), names[label]))
    lines.extend(emit_edge(plan, names) for plan in plan_edges(a))
    lines += ["", "\\end{tikzpicture}"]
    return "\n".join(lines) + "\n"


def emit_document(a: Automaton, p: Placement, opts: RenderOptions = RenderOptions()) -> str:
    """Render ``a`` at the coordinates in ``p``.

    Fragment mode yields a bare ``tikzpicture`` environment; standalone mode
    wraps it in a document that compiles on its own.

    Raises:
        MissingPlacementError: if some state has no coordinate in ``p``.
    """
    fragment = emit_fragment(a, p, opts)
    if opts.mode is RenderMode.FRAGMENT:
        return fragment
    return STANDALONE_PREAMBLE + fragment + STANDALONE_END
