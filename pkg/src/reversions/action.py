"""The right action of words on a circle through reversions.

A configuration is a circle with an ordered tuple of distinct interior
points; letter i of a word acts by the reversion through the i-th point,
applied in reading order.  For collinear interior points the interesting
structure lives off the interior line: odd-length words swap the two open
half-circle arcs, even-length ones preserve them, and whether a balanced
signature vector fixes one off-line point (and then, by the porism, every
off-line point) is exactly the cycle test driving the classification.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .geometry import (
    Circle,
    Point,
    TangentDirection,
    on_circle,
    rational_circle_point,
    reversion,
)
from .words import Signature, Word, is_balanced, word_from_signature

__all__ = [
    "Config",
    "Side",
    "ActionError",
    "NoOffLinePoint",
    "act",
    "stab_contains",
    "orbit",
    "halfplane_side",
    "is_cycle",
    "offline_test_point",
    "offline_test_points",
]


class ActionError(ValueError):
    pass


class NoOffLinePoint(ActionError):
    """The deterministic test-point sequence never left the interior line
    (bounded retry exhausted; cannot happen for valid configurations)."""


class Side(enum.Enum):
    PLUS = 1
    MINUS = -1
    ON_LINE = 0


@dataclass(frozen=True)
class Config:
    """A circle with ordered interior points and a rational seed point on
    the circle.

    `is_collinear` means all interior points lie on one line (vacuously true
    for a single point, in which case there is no line); `is_ordered` means
    the points are additionally monotone along that line, i.e. the tuple is
    a valid code with each middle point between its neighbours.
    """

    circle: Circle
    points: tuple
    base_point: Point
    is_collinear: bool
    is_ordered: bool

    @property
    def alphabet(self) -> int:
        return len(self.points)

    def line(self) -> tuple:
        """Two distinct points spanning the interior line (stored order)."""
        if not self.is_collinear or len(self.points) < 2:
            raise ActionError("configuration has no interior line")
        return (self.points[0], self.points[1])


def act(config: Config, c: Point, g: Word) -> Point:
    """Apply the reversions named by g, first letter first; the empty word
    is the identity and act(act(c, g), h) = act(c, g*h)."""
    if g.alphabet != config.alphabet:
        raise ActionError(
            f"word alphabet {g.alphabet} != {config.alphabet} interior points")
    if not on_circle(config.circle, c):
        raise ActionError(f"{c} is not on the configuration circle")
    for letter in g.letters:
        c = reversion(config.circle, config.points[letter - 1], c)
    return c


def stab_contains(config: Config, c: Point, g: Word) -> bool:
    """Exact fixed-point test: act(c, g) == c."""
    return act(config, c, g) == c


def orbit(config: Config, c: Point, max_word_length: int) -> set:
    """All images of c under irreducible words of length <= the bound,
    breadth-first by word length, deduplicated exactly.

    Orbits are infinite in general, so the enumeration is truncated by word
    length rather than by point count.
    """
    if max_word_length < 0:
        raise ActionError(f"negative word-length bound {max_word_length}")
    if not on_circle(config.circle, c):
        raise ActionError(f"{c} is not on the configuration circle")
    seen = {c}
    frontier = {(c, 0)}
    for _ in range(max_word_length):
        nxt = set()
        for p, last in frontier:
            for letter in range(1, config.alphabet + 1):
                if letter == last:
                    continue
                q = reversion(config.circle, config.points[letter - 1], p)
                seen.add(q)
                nxt.add((q, letter))
        frontier = nxt
    return seen


def halfplane_side(config: Config, p: Point) -> Side:
    """Which side of the interior line p lies on; the sign is the exact
    cross product against the stored point order."""
    a, b = config.line()
    s = (b - a).cross(p - a)
    if s > 0:
        return Side.PLUS
    if s < 0:
        return Side.MINUS
    return Side.ON_LINE


def _off_line_filter(config: Config):
    """Predicate rejecting points on the interior line; with a single
    interior point there is no line and nothing to avoid."""
    if len(config.points) < 2:
        return lambda p: True
    a, b = config.line()
    direction = b - a
    return lambda p: direction.cross(p - a) != 0


def offline_test_points(config: Config) -> Iterator[Point]:
    """Deterministic rational circle points off the interior line: chords
    through the base point with slopes 1, 1/2, 1/3, ...  Rational points are
    dense on the circle, so on-line hits are skipped and the stream is
    effectively inexhaustible."""
    keep = _off_line_filter(config)
    k = 0
    while True:
        k += 1
        try:
            p = rational_circle_point(config.circle, config.base_point, Fraction(1, k))
        except TangentDirection:
            continue
        if keep(p):
            yield p


def offline_test_point(config: Config, max_tries: int = 64) -> Point:
    keep = _off_line_filter(config)
    for k in range(1, max_tries + 1):
        try:
            p = rational_circle_point(config.circle, config.base_point, Fraction(1, k))
        except TangentDirection:
            continue
        if keep(p):
            return p
    raise NoOffLinePoint(f"no off-line rational point in {max_tries} tries")


def is_cycle(config: Config, v: Signature) -> bool:
    """Does every word of signature v fix every off-line circle point?

    Evaluated at a single deterministic off-line rational point with the
    normal-form word of signature v; by the porism this single exact test
    decides the question for all off-line points and all words of that
    signature.  Non-balanced vectors are rejected without evaluation: a
    fixing word must have even length, hence a balanced signature.
    """
    if not (config.is_collinear and config.is_ordered):
        raise ActionError("cycle test needs collinear, monotone interior points")
    if len(v) != config.alphabet:
        raise ActionError(f"vector length {len(v)} != alphabet {config.alphabet}")
    if not is_balanced(v):
        return False
    g = word_from_signature(tuple(v))
    p = offline_test_point(config)
    return act(config, p, g) == p
