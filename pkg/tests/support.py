"""Shared generators and tag groups for the test suite."""

import random
from fractions import Fraction

from bachflow import DiagonalMetric

#: geometries with a closed-form Bach evaluation (the oracle pair)
CLOSED_TAGS = ("r_x_nil", "r_x_solv", "r_x_e2", "r_x_sl2r", "r_x_su2")

#: all group-factor geometries (curvature engine applies)
GROUP_TAGS = CLOSED_TAGS + ("r_x_r3", "r_x_h3")

SURFACE_TAGS = ("r2_x_r2", "r2_x_s2", "r2_x_h2", "r_x_rs2", "r_x_rh2")


def rational(rng: random.Random, lo: int = 1, hi: int = 40) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))


def random_metric(rng: random.Random, lo: int = 1, hi: int = 40) -> DiagonalMetric:
    return DiagonalMetric(*(rational(rng, lo, hi) for _ in range(4)))


def random_surface_metric(rng: random.Random) -> DiagonalMetric:
    # surface-factor entries require g22 == g33
    s = rational(rng)
    return DiagonalMetric(rational(rng), rational(rng), s, s)
