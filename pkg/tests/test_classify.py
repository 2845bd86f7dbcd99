from fractions import Fraction

import pytest

from conftest import pt
from reversions.action import act, is_cycle
from reversions.classify import (
    ConfigValidationError,
    CycleLabel,
    NoCycleUpTo,
    RealizationError,
    avoid_all_cycles,
    classify,
    count_sign_changes,
    default_base_point,
    find_primitive_cycle,
    format_label,
    middle_point_residual,
    primitive_candidates,
    realize_by_bisection,
    realize_by_closing,
    search_closing_config,
    third_point_residual,
    validate_config,
    verify_label,
)
from reversions.geometry import Circle, Point, UNIT_CIRCLE
from reversions.words import gcd_vec, is_balanced, pi13, signature_of


def check_of(excinfo):
    return excinfo.value.check


def test_validate_config_accepts_symmetric():
    config = validate_config(
        UNIT_CIRCLE, (pt("-1/2", 0), pt(0, 0), pt("1/2", 0)))
    assert config.is_collinear and config.is_ordered
    assert config.base_point == pt(1, 0)


def test_validate_config_order_error():
    with pytest.raises(ConfigValidationError) as err:
        validate_config(UNIT_CIRCLE, (pt("-1/2", 0), pt("1/2", 0), pt(0, 0)))
    assert check_of(err) == "ordering"


def test_validate_config_interiority_error():
    with pytest.raises(ConfigValidationError) as err:
        validate_config(UNIT_CIRCLE, (pt(0, 1), pt(0, 0), pt("1/2", 0)))
    assert check_of(err) == "interiority"


def test_validate_config_distinctness_error():
    with pytest.raises(ConfigValidationError) as err:
        validate_config(UNIT_CIRCLE, (pt(0, 0), pt(0, 0)))
    assert check_of(err) == "distinctness"


def test_validate_config_collinearity_error():
    with pytest.raises(ConfigValidationError) as err:
        validate_config(UNIT_CIRCLE, (pt("-1/2", 0), pt(0, "1/4"), pt("1/2", "1/8")))
    assert check_of(err) == "collinearity"


def test_validate_config_empty():
    with pytest.raises(ConfigValidationError) as err:
        validate_config(UNIT_CIRCLE, ())
    assert check_of(err) == "count"


def test_base_point_handling():
    surd = Circle.of(0, 0, 3)  # no rational point exists on x^2 + y^2 = 3
    with pytest.raises(ConfigValidationError) as err:
        validate_config(surd, (pt(0, 0),))
    assert check_of(err) == "base_point"
    explicit = validate_config(UNIT_CIRCLE, (pt(0, 0),), base_point=pt("3/5", "4/5"))
    assert explicit.base_point == pt("3/5", "4/5")
    with pytest.raises(ConfigValidationError):
        validate_config(UNIT_CIRCLE, (pt(0, 0),), base_point=pt("1/2", "1/2"))
    assert default_base_point(Circle.of(1, 2, Fraction(9, 4))) == pt("5/2", 2)


def test_primitive_candidates_shape():
    for v in primitive_candidates(8):
        assert is_balanced(v)
        assert v[1] >= 1 and v[0] <= v[2] <= -1
        assert gcd_vec(v) == 1
    listed = list(primitive_candidates(4))
    assert listed == [(-1, 2, -1), (-2, 3, -1), (-3, 4, -1)]


def test_find_primitive_cycle_symmetric(sym):
    assert find_primitive_cycle(sym, 8) == (-1, 2, -1)


def test_find_primitive_cycle_requires_bound(sym):
    with pytest.raises(ValueError):
        find_primitive_cycle(sym, 0)


def test_classify_symmetric(sym):
    label = classify(sym, 8)
    assert isinstance(label, CycleLabel)
    assert label.vector == (-1, 2, -1)
    assert act(sym, label.witness_point, label.witness_word) == label.witness_point
    assert verify_label(sym, label)
    assert format_label(label) == "cycle -1 2 -1"


def test_classify_scaled_copy(sym):
    scaled = validate_config(
        Circle.of(0, 0, 4), (pt(-1, 0), pt(0, 0), pt(1, 0)))
    label = classify(scaled, 8)
    assert isinstance(label, CycleLabel) and label.vector == (-1, 2, -1)


def test_classify_reversed_storage():
    closing = search_closing_config((-2, 3, -1))
    reversed_cfg = validate_config(closing.circle, closing.points[::-1])
    label = classify(reversed_cfg, 8)
    assert label.vector == (-2, 3, -1)
    # the stored-order cycle is the mirrored vector
    assert signature_of(label.witness_word) == (-1, 3, -2)
    assert verify_label(reversed_cfg, label)


def test_no_cycle_label(sym):
    candidate = avoid_all_cycles(6, seed=1)
    label = classify(candidate, 6)
    assert label == NoCycleUpTo(6)
    assert format_label(label) == "no-cycle-upto 6"
    assert verify_label(candidate, label)


def test_avoid_all_cycles_minimal_bound():
    # no candidate vector has middle entry 1, so the first sample wins
    config = avoid_all_cycles(1, seed=5)
    assert find_primitive_cycle(config, 1) is None


def test_detected_cycles_linearly_dependent():
    config = search_closing_config((-2, 3, -1))
    detected = []
    for v in primitive_candidates(8):
        for u in (v, pi13(v)):
            for k in (1, 2):
                scaled = tuple(k * x for x in u)
                if is_cycle(config, scaled):
                    detected.append(scaled)
    assert detected
    v0 = detected[0]
    for u in detected:
        assert v0[0] * u[1] == v0[1] * u[0] and v0[1] * u[2] == v0[2] * u[1]


def test_canonical_label_unique(sym):
    # pi13-related hits collapse onto one canonical label
    mirrored = validate_config(sym.circle, sym.points[::-1])
    assert classify(sym, 8).vector == classify(mirrored, 8).vector


def test_realize_by_closing_example():
    config = realize_by_closing((-1, 2, -1), Fraction(-1, 2), Fraction(0), pt(0, 1))
    assert config is not None
    assert config.points[2] == pt("1/2", 0)
    assert is_cycle(config, (-1, 2, -1))


def test_realize_by_closing_preconditions():
    with pytest.raises(RealizationError):
        realize_by_closing((-1, 2, -1), Fraction(-1, 2), Fraction(0), pt(1, 0))
    with pytest.raises(RealizationError):
        realize_by_closing((-1, 2, -2), Fraction(-1, 2), Fraction(0), pt(0, 1))
    with pytest.raises(RealizationError):
        realize_by_closing((-1, 2, -1), Fraction(1, 2), Fraction(0), pt(0, 1))


def test_search_closing_corpus():
    for v in [(-1, 2, -1), (-2, 3, -1), (-3, 4, -1), (-4, 5, -1)]:
        config = search_closing_config(v)
        assert config is not None
        assert classify(config, 8).vector == v


def test_bisection_symmetric_root():
    interval = realize_by_bisection((-1, 2, -1), Fraction(1, 2**20))
    assert interval.a_lo < 0 < interval.a_hi
    assert middle_point_residual((-1, 2, -1), Fraction(0)) == 0
    assert interval.residual_sign_change


def test_bisection_certificates():
    width = Fraction(1, 2**20)
    interval = realize_by_bisection((-2, 3, -1), width)
    assert interval.a_hi - interval.a_lo <= width
    assert middle_point_residual((-2, 3, -1), interval.a_lo) > 0
    assert middle_point_residual((-2, 3, -1), interval.a_hi) < 0
    # the enclosed abscissa realizes the vector approximately: the residual
    # at the midpoint is tiny but generally nonzero; exact realization is
    # the irrational root
    assert interval.a_lo > Fraction(-1, 2) and interval.a_hi < Fraction(1, 2)


def test_bisection_accepts_negated_vector():
    a = realize_by_bisection((-2, 3, -1), Fraction(1, 1024))
    b = realize_by_bisection((2, -3, 1), Fraction(1, 1024))
    assert (a.a_lo, a.a_hi) == (b.a_lo, b.a_hi)


def test_bisection_preconditions():
    with pytest.raises(RealizationError):
        realize_by_bisection((0, 1, -1), Fraction(1, 1024))
    with pytest.raises(RealizationError):
        realize_by_bisection((-1, 2, -1), Fraction(0))


def test_third_point_scan_at_most_one_sign_change():
    for v in [(-1, 2, -1), (-2, 3, -1), (-1, 3, -2)]:
        values = [third_point_residual(v, Fraction(k, 200)) for k in range(1, 200)]
        assert count_sign_changes(values) <= 1


def test_count_sign_changes():
    assert count_sign_changes([1, 2, -1, -3]) == 1
    assert count_sign_changes([1, 0, -1]) == 1
    assert count_sign_changes([1, 0, 1]) == 0
    assert count_sign_changes([-1, 1, -1]) == 2
    assert count_sign_changes([]) == 0


def test_similarity_invariance(sym):
    # translate, rotate by a rational-cosine rotation, and scale
    cos, sin = Fraction(3, 5), Fraction(4, 5)
    scale = Fraction(7, 2)
    shift = pt("11/3", "-5/7")

    def transform(p):
        x = cos * p.x - sin * p.y
        y = sin * p.x + cos * p.y
        return Point(scale * x + shift.x, scale * y + shift.y)

    for base in (sym, search_closing_config((-2, 3, -1))):
        circle = Circle(transform(base.circle.center),
                        base.circle.radius_sq * scale * scale)
        moved = validate_config(circle, tuple(transform(p) for p in base.points))
        assert classify(moved, 8).vector == classify(base, 8).vector
