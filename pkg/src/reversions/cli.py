"""Command-line front end: configuration files, subcommands, SVG output.

Configuration files are plain text, one item per line:

    circle <cx> <cy> <r2>      center and squared radius
    point <x> <y>              interior points, in index order (1 to 3)
    base <x> <y>               optional rational point on the circle
    # comment

All numbers are exact rationals written as p/q (or a plain integer).

Exit codes: 0 success, 2 validation or construction failure, 3 inconclusive
answer under --strict, 64 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import List, Optional

from .action import Config, is_cycle, orbit
from .classify import (
    ConfigValidationError,
    NoCycleUpTo,
    classify,
    default_base_point,
    format_label,
    realize_by_bisection,
    search_closing_config,
    validate_config,
)
from .geometry import (
    Circle,
    GeometryError,
    Point,
    format_fraction,
    format_point,
    parse_fraction,
)
from .iso import ConditionallyIsomorphic, decide_iso, format_verdict
from .svg import UnverifiedCycle, cycle_polygon, render_svg
from .words import Word, normal_form, signature_of, word_from_str, word_to_str

__all__ = ["main", "parse_config", "serialize_config", "ConfigParseError"]

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64


class ConfigParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Vector and point values like -1,2,-1 start with a dash; widen the
        # stock negative-number heuristic so they parse as values, not flags.
        self._negative_number_matcher = re.compile(r"^-\d")

    def error(self, message):
        raise _UsageError(message)


def parse_config(text: str) -> Config:
    """Parse and validate a configuration file; diagnostics carry the line
    number of the offending line."""
    circle: Optional[Circle] = None
    circle_line = 0
    points: List[Point] = []
    base: Optional[Point] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind, args = fields[0], fields[1:]
        try:
            values = [parse_fraction(a) for a in args]
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigParseError(lineno, f"malformed rational: {exc}") from exc
        if kind == "circle":
            if circle is not None:
                raise ConfigParseError(lineno, "second circle line")
            if len(values) != 3:
                raise ConfigParseError(lineno, "circle needs cx cy r2")
            try:
                circle = Circle(Point(values[0], values[1]), values[2])
            except GeometryError as exc:
                raise ConfigParseError(lineno, str(exc)) from exc
            circle_line = lineno
        elif kind == "point":
            if len(values) != 2:
                raise ConfigParseError(lineno, "point needs x y")
            points.append(Point(values[0], values[1]))
        elif kind == "base":
            if len(values) != 2:
                raise ConfigParseError(lineno, "base needs x y")
            base = Point(values[0], values[1])
        else:
            raise ConfigParseError(lineno, f"unknown directive {kind!r}")
    if circle is None:
        raise ConfigParseError(1, "missing circle line")
    if not 1 <= len(points) <= 3:
        raise ConfigParseError(circle_line, f"need 1 to 3 point lines, got {len(points)}")
    return validate_config(circle, tuple(points), base)


def serialize_config(config: Config) -> str:
    """Canonical text for a configuration; the base line is kept only when
    it differs from the derived default."""
    lines = ["circle {} {} {}".format(
        format_fraction(config.circle.center.x),
        format_fraction(config.circle.center.y),
        format_fraction(config.circle.radius_sq))]
    for p in config.points:
        lines.append(f"point {format_point(p)}")
    try:
        derived = default_base_point(config.circle)
    except ConfigValidationError:
        derived = None
    if config.base_point != derived:
        lines.append(f"base {format_point(config.base_point)}")
    return "\n".join(lines) + "\n"


def _load_config(path: str) -> Config:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def _parse_vector(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected v1,v2,v3, got {text!r}")
    return tuple(int(p) for p in parts)


def _parse_cli_point(text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected x,y, got {text!r}")
    return Point(parse_fraction(parts[0]), parse_fraction(parts[1]))


def _parse_word_arg(text: str, alphabet: Optional[int]) -> Word:
    if alphabet is None:
        letters = [] if text.strip() in ("e", "") else [
            int(p) for p in text.split(",")]
        alphabet = max(letters, default=3)
    return word_from_str(text, alphabet)


def _build_parser() -> _Parser:
    parser = _Parser(prog="reversions", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="class label of a three-point configuration")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=8, help="largest middle entry searched")
    p.add_argument("--strict", action="store_true",
                   help="exit 3 when the search is inconclusive")

    p = sub.add_parser("is-cycle", help="exact cycle test for one vector")
    p.add_argument("file")
    p.add_argument("--v", required=True, help="v1,v2,v3")

    p = sub.add_parser("realize", help="construct a configuration with a given cycle")
    p.add_argument("--v", required=True, help="v1,v2,v3")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--closing", action="store_true",
                       help="exact chord-closing construction (v3 = -1)")
    group.add_argument("--bisect", action="store_true",
                       help="certified interval for the middle point")
    p.add_argument("--width", default="1/1048576",
                   help="interval width bound for --bisect")

    p = sub.add_parser("iso", help="betweenness isomorphism verdict for two files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("orbit", help="orbit of a circle point up to a word length")
    p.add_argument("file")
    p.add_argument("--point", required=True, help="x,y on the circle")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--svg", help="write a picture to this file")

    p = sub.add_parser("word", help="word algebra utilities")
    p.add_argument("operation", choices=["reduce", "signature", "normal"])
    p.add_argument("letters", help="comma-separated letters, or e for the empty word")
    p.add_argument("--alphabet", type=int,
                   help="alphabet size (default: largest letter)")

    p = sub.add_parser("render", help="draw a configuration")
    p.add_argument("file")
    p.add_argument("--svg", required=True)
    p.add_argument("--cycle", help="draw the closed polygon of this verified cycle")
    p.add_argument("--orbit-depth", type=int,
                   help="overlay the orbit of --point up to this word length")
    p.add_argument("--point", help="x,y for --orbit-depth")
    return parser


def _cmd_classify(args) -> int:
    label = classify(_load_config(args.file), args.bound)
    print(format_label(label))
    if args.strict and isinstance(label, NoCycleUpTo):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_is_cycle(args) -> int:
    config = _load_config(args.file)
    print("true" if is_cycle(config, _parse_vector(args.v)) else "false")
    return EXIT_OK


def _cmd_realize(args) -> int:
    v = _parse_vector(args.v)
    if args.closing:
        config = search_closing_config(v)
        if config is None:
            print("closing construction failed on the search grid", file=sys.stderr)
            return EXIT_INVALID
        sys.stdout.write(serialize_config(config))
        return EXIT_OK
    interval = realize_by_bisection(v, parse_fraction(args.width))
    print("{} {} {} {} {}".format(*interval.vector,
                                  format_fraction(interval.a_lo),
                                  format_fraction(interval.a_hi)))
    return EXIT_OK


def _cmd_iso(args) -> int:
    verdict = decide_iso(_load_config(args.file_a), _load_config(args.file_b),
                         args.bound)
    print(format_verdict(verdict))
    if args.strict and isinstance(verdict, ConditionallyIsomorphic):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_orbit(args) -> int:
    config = _load_config(args.file)
    start = _parse_cli_point(args.point)
    points = orbit(config, start, args.depth)
    for p in sorted(points, key=lambda q: (q.x, q.y)):
        print(format_point(p))
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(config, orbit_points=points))
    return EXIT_OK


def _cmd_word(args) -> int:
    word = _parse_word_arg(args.letters, args.alphabet)
    if args.operation == "reduce":
        print(word_to_str(word))
    elif args.operation == "signature":
        print(" ".join(str(x) for x in signature_of(word)))
    else:
        print(word_to_str(normal_form(word)))
    return EXIT_OK


def _cmd_render(args) -> int:
    config = _load_config(args.file)
    cycle_points = None
    orbit_points = None
    if args.cycle:
        cycle_points = cycle_polygon(config, _parse_vector(args.cycle))
    if args.orbit_depth is not None:
        if not args.point:
            raise ValueError("--orbit-depth needs --point")
        orbit_points = orbit(config, _parse_cli_point(args.point), args.orbit_depth)
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(render_svg(config, orbit_points=orbit_points,
                            cycle_points=cycle_points))
    return EXIT_OK


_COMMANDS = {
    "classify": _cmd_classify,
    "is-cycle": _cmd_is_cycle,
    "realize": _cmd_realize,
    "iso": _cmd_iso,
    "orbit": _cmd_orbit,
    "word": _cmd_word,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (ConfigParseError, ConfigValidationError, GeometryError,
            UnverifiedCycle, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
