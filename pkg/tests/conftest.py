import random
from fractions import Fraction

import pytest

from reversions.action import Config
from reversions.classify import validate_config
from reversions.geometry import Circle, Point, UNIT_CIRCLE, rational_circle_point
from reversions.words import Word


def fr(a, b=1):
    return Fraction(a, b)


def pt(x, y):
    return Point(Fraction(x), Fraction(y))


def symmetric_config() -> Config:
    return validate_config(
        UNIT_CIRCLE, (pt("-1/2", 0), pt(0, 0), pt("1/2", 0)))


@pytest.fixture
def sym() -> Config:
    return symmetric_config()


def rand_fraction(rng: random.Random, span: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_interior_point(rng: random.Random, circle: Circle) -> Point:
    """Random rational point strictly inside the circle, by rejection on a
    box scaled slightly inside the radius."""
    while True:
        num = 2 * rng.randint(0, 48) - 48
        x = circle.center.x + circle.radius_sq * Fraction(num, 100)
        num = 2 * rng.randint(0, 48) - 48
        y = circle.center.y + circle.radius_sq * Fraction(num, 100)
        p = Point(x, y)
        if (p - circle.center).norm_sq() < circle.radius_sq:
            return p


def rand_unit_circle_point(rng: random.Random) -> Point:
    t = Fraction(rng.randint(-60, 60), rng.randint(1, 20))
    return rational_circle_point(UNIT_CIRCLE, Point(Fraction(-1), Fraction(0)), t)


def rand_raw_letters(rng: random.Random, alphabet: int, max_len: int) -> tuple:
    return tuple(rng.randint(1, alphabet) for _ in range(rng.randint(0, max_len)))


def rand_word(rng: random.Random, alphabet: int, length: int) -> Word:
    letters = []
    for _ in range(length):
        choices = [x for x in range(1, alphabet + 1)
                   if not letters or x != letters[-1]]
        letters.append(rng.choice(choices))
    return Word(tuple(letters), alphabet)
