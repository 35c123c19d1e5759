"""Command-line front end: Grail+ instruction list in, TikZ out.

Meant to sit at the end of a pipe of Grail+ filters::

    retofm < re.txt | fmdeterm | grailviz -o automaton.tex --compile
"""

from __future__ import annotations

import argparse
import os
import shutil
import subprocess
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import TextIO

from grailviz.layout import layout
from grailviz.parser import ParseError, parse
from grailviz.tikz import RenderMode, RenderOptions, emit_document

PROG = "grailviz"
TYPESETTER = "pdflatex"

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_IO = 2


@dataclass(frozen=True)
class CliConfig:
    input: str | None = None  # None means standard input
    output: str | None = None  # None means standard output
    mode: RenderMode = RenderMode.STANDALONE
    node_distance: str = "2cm"
    coordinate_scale: Fraction = Fraction(1)
    compile: bool = False

    def __post_init__(self) -> None:
        if self.coordinate_scale <= 0:
            raise ValueError("coordinate scale must be positive")


def _warn(stderr: TextIO, message: str) -> None:
    print(f"{PROG}: {message}", file=stderr)


def render(text: str, config: CliConfig) -> str:
    opts = RenderOptions(config.mode, config.node_distance, config.coordinate_scale)
    automaton = parse(text)
    return emit_document(automaton, layout(automaton), opts)


def typeset(path: str, stderr: TextIO) -> None:
    exe = shutil.which(TYPESETTER)
    if exe is None:
        _warn(stderr, f"warning: {TYPESETTER} not found; skipping compilation")
        return
    directory = os.path.dirname(os.path.abspath(path))
    try:
        proc = subprocess.run(
            [exe, "-interaction=nonstopmode", "-halt-on-error", os.path.basename(path)],
            cwd=directory,
            stdin=subprocess.DEVNULL,
            capture_output=True,
            text=True,
            errors="replace",
        )
    except OSError as exc:
        _warn(stderr, f"warning: could not run {TYPESETTER}: {exc}")
        return
    if proc.returncode != 0:
        _warn(stderr, f"warning: {TYPESETTER} exited with status {proc.returncode}")


def run(
    config: CliConfig,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """Convert one instruction list and return the process exit status."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        if config.input is None:
            text = stdin.read()
        else:
            with open(config.input, encoding="utf-8") as f:
                text = f.read()
    except (OSError, UnicodeDecodeError) as exc:
        _warn(stderr, f"cannot read {config.input or '<stdin>'}: {exc}")
        return EXIT_IO

    try:
        document = render(text, config)
    except ParseError as exc:
        source = config.input or "<stdin>"
        _warn(stderr, f"{source}:{exc.line_number}:{exc.column}: {exc.kind.value}: {exc.detail}")
        return EXIT_PARSE

    try:
        if config.output is None:
            stdout.write(document)
            stdout.flush()
        else:
            with open(config.output, "w", encoding="utf-8", newline="\n") as f:
                f.write(document)
    except OSError as exc:
        _warn(stderr, f"cannot write {config.output or '<stdout>'}: {exc}")
        return EXIT_IO

    if config.compile:
        if config.output is None:
            _warn(stderr, "warning: --compile needs -o/--output; skipping compilation")
        elif config.mode is RenderMode.FRAGMENT:
            _warn(stderr, "warning: fragments cannot be compiled on their own; skipping compilation")
        else:
            typeset(config.output, stderr)
    return EXIT_OK


def _scale(value: str) -> Fraction:
    try:
        scale = Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid scale {value!r}") from None
    if scale <= 0:
        raise argparse.ArgumentTypeError(f"scale must be positive, got {value!r}")
    return scale


def _length(value: str) -> str:
    try:
        RenderOptions(node_distance=value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Draw a Grail+ finite automaton as TikZ code.",
    )
    parser.add_argument("input", nargs="?", help="instruction list to read (default: standard input)")
    parser.add_argument("-o", "--output", metavar="PATH", help="write here instead of standard output")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument(
        "--fragment",
        dest="mode",
        action="store_const",
        const=RenderMode.FRAGMENT,
        help="emit only the tikzpicture environment",
    )
    mode.add_argument(
        "--standalone",
        dest="mode",
        action="store_const",
        const=RenderMode.STANDALONE,
        help="emit a complete document (default)",
    )
    parser.add_argument(
        "--node-distance", metavar="LEN", type=_length, default="2cm", help="TikZ node distance (default: 2cm)"
    )
    parser.add_argument(
        "--scale", metavar="R", type=_scale, default=Fraction(1), help="multiply grid coordinates by R (default: 1)"
    )
    parser.add_argument("--compile", action="store_true", help=f"run {TYPESETTER} on the output file")
    parser.set_defaults(mode=RenderMode.STANDALONE)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = CliConfig(
        input=None if args.input in (None, "-") else args.input,
        output=None if args.output in (None, "-") else args.output,
        mode=args.mode,
        node_distance=args.node_distance,
        coordinate_scale=args.scale,
        compile=args.compile,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
