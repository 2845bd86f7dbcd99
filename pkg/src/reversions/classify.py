"""Classification of a circle with three collinear interior points.

The cycle vectors of a configuration form a cyclic subgroup of Z^3: either
only the zero vector (one single shared class for all such configurations),
or all integer multiples of one primitive balanced vector v with v2 >= 1,
v1 <= v3 <= -1 and gcd 1, which is then a complete class label.  The
search enumerates candidate primitives by ascending middle entry, testing
each exactly at one off-line rational point; the two constructors go the
other way and produce a configuration realizing a prescribed vector, one by
exact chord closing, one by certified bisection on the middle point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple, Union

from .action import Config, act, is_cycle, offline_test_point
from .geometry import (
    Circle,
    DegenerateLine,
    Point,
    UNIT_CIRCLE,
    collinear,
    in_open_disk,
    is_between,
    line_line_intersection,
    on_circle,
    rational_circle_point,
    reversion,
)
from .words import (
    Signature,
    Word,
    canonical_word,
    gcd_vec,
    is_balanced,
    pi13,
    signature_of,
    word_from_signature,
)

__all__ = [
    "CycleLabel",
    "NoCycleUpTo",
    "ClassLabel",
    "RealizationInterval",
    "ConfigValidationError",
    "RealizationError",
    "SignChangeError",
    "SamplingExhausted",
    "validate_config",
    "default_base_point",
    "primitive_candidates",
    "find_primitive_cycle",
    "classify",
    "verify_label",
    "format_label",
    "realize_by_closing",
    "search_closing_config",
    "realize_by_bisection",
    "middle_point_residual",
    "third_point_residual",
    "count_sign_changes",
    "avoid_all_cycles",
]


class ConfigValidationError(ValueError):
    """A configuration failed validation; `check` names the failed test."""

    def __init__(self, check: str, message: str):
        super().__init__(message)
        self.check = check


class RealizationError(ValueError):
    """A constructor was called outside its precondition."""


class SignChangeError(RuntimeError):
    """The certified sign pattern failed; indicates a bug, not bad input."""


class SamplingExhausted(RuntimeError):
    """The random search budget ran out."""


@dataclass(frozen=True)
class CycleLabel:
    """A verified nonzero cycle class: `vector` is the canonical primitive
    (balanced, v2 >= 1, v1 <= v3 <= -1, gcd 1); the witness word fixes the
    witness point exactly and its signature is the cycle in the stored
    point order (the canonical vector or its 1<->3 swap)."""

    vector: tuple
    witness_word: Word
    witness_point: Point


@dataclass(frozen=True)
class NoCycleUpTo:
    """No nonzero cycle with middle entry up to the bound; an honest search
    bound, not a certificate of the cycle-free class."""

    v2_bound: int


ClassLabel = Union[CycleLabel, NoCycleUpTo]


@dataclass(frozen=True)
class RealizationInterval:
    """Bisection output: the middle interior point abscissa realizing the
    vector lies in (a_lo, a_hi), certified by exact endpoint signs (residual
    positive at a_lo, negative at a_hi)."""

    vector: tuple
    a_lo: Fraction
    a_hi: Fraction
    residual_sign_change: bool


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def default_base_point(circle: Circle) -> Point:
    """Easternmost point when the radius is rational; a rational point on a
    rational circle need not exist in general, so otherwise the caller must
    supply a base point explicitly."""
    r = _rational_sqrt(circle.radius_sq)
    if r is None:
        raise ConfigValidationError(
            "base_point",
            f"radius^2 = {circle.radius_sq} is not a rational square; "
            "supply an explicit rational base point on the circle")
    return Point(circle.center.x + r, circle.center.y)


def validate_config(circle: Circle, points, base_point: Optional[Point] = None) -> Config:
    """Check distinctness, interiority and (for three or more points)
    collinearity and monotone order, and attach a rational seed point on
    the circle.  Each failed check is reported under its own name."""
    points = tuple(points)
    if not points:
        raise ConfigValidationError("count", "need at least one interior point")
    for i, p in enumerate(points):
        for q in points[i + 1:]:
            if p == q:
                raise ConfigValidationError(
                    "distinctness", f"interior point {p} repeated")
    for p in points:
        if not in_open_disk(circle, p):
            raise ConfigValidationError(
                "interiority", f"{p} is not strictly inside the circle")
    is_coll = True
    if len(points) >= 3:
        a, b = points[0], points[1]
        for p in points[2:]:
            if not collinear(a, b, p):
                raise ConfigValidationError(
                    "collinearity", f"{p} is off the line of the first two points")
        for left, mid, right in zip(points, points[1:], points[2:]):
            if not is_between(left, mid, right):
                raise ConfigValidationError(
                    "ordering", f"{mid} is not between its neighbours")
    if base_point is None:
        base_point = default_base_point(circle)
    elif not on_circle(circle, base_point):
        raise ConfigValidationError(
            "base_point", f"{base_point} is not on the circle")
    return Config(circle, points, base_point, is_coll, True)


def primitive_candidates(v2_max: int) -> Iterator[tuple]:
    """Canonical candidate vectors (v1, v2, v3), balanced, v1 <= v3 <= -1,
    gcd 1, ascending in v2 then in v1."""
    for v2 in range(1, v2_max + 1):
        for v1 in range(-(v2 - 1), -((v2 + 1) // 2) + 1):
            v3 = -v2 - v1
            v = (v1, v2, v3)
            if gcd_vec(v) == 1:
                yield v


def _search_cycle(config: Config, v2_max: int) -> Optional[Tuple[tuple, tuple]]:
    """First (canonical, stored-order) cycle pair, or None; both point
    orderings are covered by also testing the 1<->3 swap of each candidate."""
    if len(config.points) != 3:
        raise ConfigValidationError("count", "cycle search needs three points")
    if v2_max < 1:
        raise ValueError(f"v2_max must be >= 1, got {v2_max}")
    for v in primitive_candidates(v2_max):
        if is_cycle(config, v):
            return v, v
        w = pi13(v)
        if w != v and is_cycle(config, w):
            return v, w
    return None


def find_primitive_cycle(config: Config, v2_max: int) -> Optional[tuple]:
    """The primitive cycle vector in canonical form, or None up to the
    bound.  The first hit in ascending v2 is automatically primitive: all
    cycles are integer multiples of one vector, so the smallest realized
    middle entry belongs to the generator."""
    found = _search_cycle(config, v2_max)
    return found[0] if found else None


def classify(config: Config, v2_max: int) -> ClassLabel:
    """Class label of the configuration: the canonical primitive cycle with
    an exactly verified witness, or the bounded no-cycle result."""
    found = _search_cycle(config, v2_max)
    if found is None:
        return NoCycleUpTo(v2_max)
    canonical, stored = found
    witness_word = word_from_signature(stored)
    witness_point = offline_test_point(config)
    label = CycleLabel(canonical, witness_word, witness_point)
    if not verify_label(config, label):
        raise SignChangeError(f"witness for {canonical} failed re-verification")
    return label


def verify_label(config: Config, label: ClassLabel) -> bool:
    """Re-check everything a label claims; True also for bounded no-cycle
    labels (they claim only the search result)."""
    if isinstance(label, NoCycleUpTo):
        return label.v2_bound >= 1
    v = label.vector
    shape_ok = (
        is_balanced(v)
        and v[0] * v[1] * v[2] != 0
        and abs(v[1]) == abs(v[0]) + abs(v[2])
        and v[1] >= 1
        and v[0] <= v[2] <= -1
        and gcd_vec(v) == 1
    )
    if not shape_ok:
        return False
    stored = signature_of(label.witness_word)
    if stored not in (v, pi13(v)):
        return False
    return act(config, label.witness_point, label.witness_word) == label.witness_point


def format_label(label: ClassLabel) -> str:
    if isinstance(label, CycleLabel):
        return "cycle {} {} {}".format(*label.vector)
    return f"no-cycle-upto {label.v2_bound}"


_X_AXIS = (Point.of(0, 0), Point.of(1, 0))


def realize_by_closing(v: Signature, c1x: Fraction, c2x: Fraction,
                       p0: Point) -> Optional[Config]:
    """Construct an exact configuration with cycle v by closing the chord.

    For v = (v1, v2, -1) the word (2,1)^|v1| (2,3) uses the third point
    once, as its final reversion.  Apply every reversion but that last one
    to p0, giving q; the final reversion must send q back to p0, so the
    third point is forced: the crossing of chord [q, p0] with the axis.
    When that crossing is interior, ordered after the second point, and the
    full word then fixes p0 exactly, the configuration is returned;
    otherwise None (the forced point can land outside the disk or out of
    order for particular choices).
    """
    v = tuple(v)
    if len(v) != 3 or not is_balanced(v) or v[2] != -1 or v[0] > -1:
        raise RealizationError(
            f"{v} must be balanced with v3 = -1 and v1 <= -1")
    if not (-1 < c1x < c2x < 1):
        raise RealizationError(f"need -1 < c1x < c2x < 1, got {c1x}, {c2x}")
    if not on_circle(UNIT_CIRCLE, p0):
        raise RealizationError(f"{p0} is not on the unit circle")
    if p0.y == 0:
        raise RealizationError("p0 must be off the x-axis")
    c1 = Point(Fraction(c1x), Fraction(0))
    c2 = Point(Fraction(c2x), Fraction(0))
    word = canonical_word(v)
    q = p0
    for letter in word.letters[:-1]:
        q = reversion(UNIT_CIRCLE, (c1, c2)[letter - 1], q)
    if q == p0:
        return None
    try:
        c3 = line_line_intersection(q, p0, *_X_AXIS)
    except DegenerateLine:
        return None
    if c3 is None or not in_open_disk(UNIT_CIRCLE, c3) or c3.x <= c2x:
        return None
    config = validate_config(UNIT_CIRCLE, (c1, c2, c3))
    if act(config, p0, word) != p0:
        return None
    return config


def search_closing_config(v: Signature) -> Optional[Config]:
    """Deterministic grid retry over (c1x, c2x, start chord slope) until the
    closing construction succeeds."""
    west = Point.of(-1, 0)
    starts = []
    for t in (1, Fraction(1, 2), Fraction(1, 3), 2, Fraction(2, 3), 3):
        p = rational_circle_point(UNIT_CIRCLE, west, t)
        if p.y != 0:
            starts.append(p)
    c1_grid = [Fraction(-1, 2), Fraction(-3, 5), Fraction(-2, 5),
               Fraction(-7, 10), Fraction(-3, 10), Fraction(-2, 3)]
    c2_grid = [Fraction(0), Fraction(1, 8), Fraction(-1, 8),
               Fraction(1, 5), Fraction(-1, 5), Fraction(1, 4)]
    for c1x in c1_grid:
        for c2x in c2_grid:
            if c1x >= c2x:
                continue
            for p0 in starts:
                config = realize_by_closing(v, c1x, c2x, p0)
                if config is not None:
                    return config
    return None


def _vertical_start_config(a: Fraction) -> Config:
    pts = (Point.of(Fraction(-1, 2), 0), Point(Fraction(a), Fraction(0)),
           Point.of(Fraction(1, 2), 0))
    return Config(UNIT_CIRCLE, pts, Point.of(1, 0), True, True)


def middle_point_residual(v: Signature, a: Fraction) -> Fraction:
    """First coordinate of the canonical word of v acting on (0, 1), with
    interior points (-1/2, 0), (a, 0), (1/2, 0); zero exactly when the
    configuration realizes v."""
    config = _vertical_start_config(Fraction(a))
    return act(config, Point.of(0, 1), canonical_word(tuple(v))).x


def third_point_residual(v: Signature, a: Fraction) -> Fraction:
    """Same residual for the family with interior points (-1/2, 0), (0, 0)
    and a moving third point (a, 0), a in (0, 1)."""
    pts = (Point.of(Fraction(-1, 2), 0), Point.of(0, 0),
           Point(Fraction(a), Fraction(0)))
    config = Config(UNIT_CIRCLE, pts, Point.of(1, 0), True, True)
    return act(config, Point.of(0, 1), canonical_word(tuple(v))).x


def count_sign_changes(values) -> int:
    """Strict sign alternations in a sequence, ignoring exact zeros."""
    signs = [1 if x > 0 else -1 for x in values if x != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def realize_by_bisection(v: Signature, width_bound: Fraction,
                         delta: Fraction = Fraction(1, 1024)) -> RealizationInterval:
    """Isolate the middle-point abscissa realizing v between (-1/2, 0) and
    (1/2, 0) by exact bisection.

    The residual is positive just right of -1/2 and negative just left of
    1/2 (the configuration degenerates at the exact endpoints, so they are
    shifted inward by delta, halving delta if the sign pattern is not yet
    visible).  There is at most one root in the family, so the certified
    enclosure is unique.  An exact root hit ends with a recentred interval
    whose endpoint signs are still verified.
    """
    v = tuple(v)
    if len(v) != 3 or not is_balanced(v):
        raise RealizationError(f"{v} must be a balanced 3-vector")
    if v[1] < 0:
        v = (-v[0], -v[1], -v[2])
    if v[1] < 1 or v[0] > -1 or v[2] > -1:
        raise RealizationError(
            f"{v} must satisfy v2 >= 1 and v1, v3 <= -1 (up to negation)")
    width_bound = Fraction(width_bound)
    if width_bound <= 0:
        raise RealizationError(f"width bound must be positive, got {width_bound}")
    half = Fraction(1, 2)
    delta = Fraction(delta)
    for _ in range(24):
        lo, hi = -half + delta, half - delta
        flo, fhi = middle_point_residual(v, lo), middle_point_residual(v, hi)
        if flo > 0 and fhi < 0:
            break
        delta /= 2
    else:
        raise SignChangeError(
            f"no certified sign change near the endpoints for {v}")
    while hi - lo > width_bound:
        mid = (lo + hi) / 2
        fmid = middle_point_residual(v, mid)
        if fmid > 0:
            lo = mid
        elif fmid < 0:
            hi = mid
        else:
            lo = mid - width_bound / 2
            hi = mid + width_bound / 2
            if middle_point_residual(v, lo) <= 0 or middle_point_residual(v, hi) >= 0:
                raise SignChangeError(
                    f"endpoint signs failed around the exact root {mid} for {v}")
            break
    return RealizationInterval(v, lo, hi, True)


def avoid_all_cycles(v2_max: int, seed: int, budget: int = 100) -> Config:
    """A configuration with no nonzero cycle up to the bound: points
    (-1/2, 0), (0, 0) and a seeded random rational third point.  Each
    candidate vector excludes at most one third-point abscissa, so nearly
    every sample succeeds."""
    if v2_max < 1:
        raise ValueError(f"v2_max must be >= 1, got {v2_max}")
    rng = random.Random(seed)
    q = 1048583  # prime, so every sampled abscissa is in lowest terms
    for _ in range(budget):
        a = Fraction(rng.randrange(1, q), q)
        config = validate_config(
            UNIT_CIRCLE,
            (Point.of(Fraction(-1, 2), 0), Point.of(0, 0), Point(a, Fraction(0))))
        if find_primitive_cycle(config, v2_max) is None:
            return config
    raise SamplingExhausted(f"no cycle-free sample in {budget} tries")
