"""Grid placement of states.

States sit on an integer grid. The x-coordinate is a state's position in
first-seen order. The y-coordinates live in an array indexed by x, start at
zero, and are raised transition by transition: the two endpoints of each
transition are lifted to one more than the highest state strictly between
them, or kept at their own height if that is already higher.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from grailviz.model import Automaton, Transition


@dataclass(frozen=True)
class Placement:
    coords: Mapping[str, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        coords = {}
        for label, (x, y) in self.coords.items():
            if x < 0 or y < 0:
                raise ValueError(f"negative coordinate for state {label!r}: {(x, y)}")
            coords[label] = (x, y)
        object.__setattr__(self, "coords", coords)

    def __getitem__(self, label: str) -> tuple[int, int]:
        return self.coords[label]

    def __contains__(self, label: object) -> bool:
        return label in self.coords

    def __len__(self) -> int:
        return len(self.coords)


def assign_x(a: Automaton) -> dict[str, int]:
    return {label: i for i, (label, _) in enumerate(a.states)}


def assign_y(
    a: Automaton,
    x: Mapping[str, int] | None = None,
    on_step: Callable[[Transition, list[int]], None] | None = None,
) -> list[int]:
    """Return the y-coordinate of every state, indexed by x-coordinate.

    Transitions are processed in stored order and self-loops are skipped.
    ``on_step``, if given, is called after each processed transition with a
    copy of the array.
    """
    if x is None:
        x = assign_x(a)
    ys = [0] * len(a.states)
    for t in a.transitions:
        if t.is_loop:
            continue
        i, j = sorted((x[t.source], x[t.sink]))
        top = 1 + max(ys[i + 1 : j], default=0)
        ys[i] = ys[j] = max(top, ys[i], ys[j])
        if on_step is not None:
            on_step(t, list(ys))
    return ys


def layout(a: Automaton) -> Placement:
    x = assign_x(a)
    ys = assign_y(a, x)
    return Placement({label: (i, ys[i]) for label, i in x.items()})
