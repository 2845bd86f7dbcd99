"""Exact rational plane primitives: points, circles, chords, reversions.

Everything here is computed over Fraction coordinates with no epsilon
anywhere; predicates are exact sign tests and the chord-through-a-point map
(the reversion) stays rational because one root of the line-circle
quadratic is already known.  Circles carry the squared radius so that
circles with irrational radius still have all-rational data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Union[Fraction, int]

__all__ = [
    "Point",
    "Circle",
    "GeometryError",
    "NotOnCircle",
    "NotInterior",
    "TangentDirection",
    "DegenerateLine",
    "on_circle",
    "in_open_disk",
    "collinear",
    "is_between",
    "reversion",
    "rational_circle_point",
    "line_line_intersection",
    "format_fraction",
    "parse_fraction",
    "format_point",
    "parse_point",
]


class GeometryError(ValueError):
    pass


class NotOnCircle(GeometryError):
    """A point required to lie on the circle does not."""


class NotInterior(GeometryError):
    """A point required to lie strictly inside the circle does not."""


class TangentDirection(GeometryError):
    """The requested chord direction is tangent, so the second intersection
    coincides with the base point."""


class DegenerateLine(GeometryError):
    """A line was specified by two equal points."""


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x: Rational, y: Rational) -> "Point":
        return Point(Fraction(x), Fraction(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k: Rational) -> "Point":
        return Point(self.x * k, self.y * k)

    def dot(self, other: "Point") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> Fraction:
        return self.x * other.y - self.y * other.x

    def norm_sq(self) -> Fraction:
        return self.x * self.x + self.y * self.y


@dataclass(frozen=True)
class Circle:
    center: Point
    radius_sq: Fraction

    def __post_init__(self):
        if self.radius_sq <= 0:
            raise GeometryError(f"squared radius must be positive, got {self.radius_sq}")

    @staticmethod
    def of(cx: Rational, cy: Rational, radius_sq: Rational) -> "Circle":
        return Circle(Point.of(cx, cy), Fraction(radius_sq))


UNIT_CIRCLE = Circle.of(0, 0, 1)


def on_circle(circle: Circle, p: Point) -> bool:
    return (p - circle.center).norm_sq() == circle.radius_sq


def in_open_disk(circle: Circle, p: Point) -> bool:
    return (p - circle.center).norm_sq() < circle.radius_sq


def collinear(a: Point, b: Point, c: Point) -> bool:
    """Exact determinant test; degenerate triples (repeated points) count
    as collinear."""
    return (b - a).cross(c - a) == 0


def is_between(a: Point, x: Point, b: Point) -> bool:
    """x lies strictly inside the open segment (a, b).

    False whenever a == b (the open segment is empty), x coincides with an
    endpoint, or the three points are not collinear.
    """
    if a == b:
        return False
    d = b - a
    r = x - a
    if d.cross(r) != 0:
        return False
    t = r.dot(d)
    return 0 < t < d.norm_sq()


def reversion(circle: Circle, center: Point, p: Point) -> Point:
    """The second endpoint of the chord of `circle` through `center` from `p`.

    With d = center - p and w = p - circle center, the chord parameter of
    the far endpoint is t = -2<w,d>/<d,d> (the root t = 0 is p itself), so
    the result is p + t d.  Because `center` is strictly interior it is
    distinct from p, t > 1, and `center` lies strictly between p and the
    result; applying the map twice gives p back.
    """
    if not on_circle(circle, p):
        raise NotOnCircle(f"{p} is not on {circle}")
    if not in_open_disk(circle, center):
        raise NotInterior(f"reversion center {center} is not interior to {circle}")
    d = center - p
    w = p - circle.center
    t = Fraction(-2) * w.dot(d) / d.norm_sq()
    return p + d.scale(t)


def rational_circle_point(circle: Circle, base: Point, t: Rational) -> Point:
    """The second intersection of `circle` with the line through `base` of
    direction (1, t).

    Same known-root computation as `reversion`.  Raises if (1, t) is the
    tangent direction at `base`, since then the two intersections coincide.
    """
    if not on_circle(circle, base):
        raise NotOnCircle(f"{base} is not on {circle}")
    d = Point.of(1, Fraction(t))
    w = base - circle.center
    wd = w.dot(d)
    if wd == 0:
        raise TangentDirection(f"direction (1, {t}) is tangent at {base}")
    s = Fraction(-2) * wd / d.norm_sq()
    return base + d.scale(s)


def line_line_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Optional[Point]:
    """Intersection of line(p1,p2) with line(q1,q2); None when parallel or
    coincident."""
    if p1 == p2 or q1 == q2:
        raise DegenerateLine("line endpoints coincide")
    dp = p2 - p1
    dq = q2 - q1
    denom = dp.cross(dq)
    if denom == 0:
        return None
    t = (q1 - p1).cross(dq) / denom
    return p1 + dp.scale(t)


def format_fraction(x: Fraction) -> str:
    """p/q with the denominator omitted when it is 1."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        d = int(den)
        if d == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), d)
    return Fraction(int(text))


def format_point(p: Point) -> str:
    return f"{format_fraction(p.x)} {format_fraction(p.y)}"


def parse_point(text: str) -> Point:
    parts = text.split()
    if len(parts) != 2:
        raise ValueError(f"expected two coordinates, got {text!r}")
    return Point(parse_fraction(parts[0]), parse_fraction(parts[1]))
