"""Betweenness isomorphism classes of circles with interior points.

Exact rational machinery for the reversion group action on a circle:
word algebra with signatures and normal forms, exact plane geometry, the
cycle test behind the porism, classification of three collinear interior
points, isomorphism decisions with finite verified tables, and a CLI with
SVG output.
"""

from .action import Config, Side, act, halfplane_side, is_cycle, orbit, stab_contains
from .classify import (
    ClassLabel,
    CycleLabel,
    NoCycleUpTo,
    RealizationInterval,
    avoid_all_cycles,
    classify,
    find_primitive_cycle,
    realize_by_bisection,
    realize_by_closing,
    search_closing_config,
    validate_config,
)
from .geometry import (
    Circle,
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
from .hull import OrdinalHull, brute_force_iso, collinear_hull, hull_isomorphism
from .iso import (
    ConditionallyIsomorphic,
    Isomorphic,
    IsoVerdict,
    NotIsomorphic,
    PartialIsoTable,
    build_partial_iso,
    decide_iso,
)
from .words import (
    Word,
    canonical_word,
    gcd_vec,
    is_balanced,
    normal_form,
    pi13,
    signature_of,
    word_from_signature,
)

__version__ = "0.1.0"
