"""Bach tensor routes, tensor identities, and frozen component values."""

import random
from fractions import Fraction

import pytest

from bachflow import (
    DiagonalMetric,
    bach_closed_form,
    bach_from_curvature,
    bach_ratios,
    bach_tensor,
    beta_factor,
    closed_form_pq,
)
from bachflow.bach import COMPONENT_POLYS
from bachflow.curvature import divergence, embed_product, levi_civita
from bachflow.geometry import entry

from support import CLOSED_TAGS, GROUP_TAGS, random_metric, random_surface_metric, rational


def test_routes_agree_exact_sample():
    # the full 25-per-tag sweep lives in the acceptance suite
    rng = random.Random(101)
    for tag in CLOSED_TAGS:
        for _ in range(8):
            m = random_metric(rng)
            assert bach_from_curvature(tag, m).components == \
                bach_closed_form(tag, m).components, (tag, m)


def test_routes_close_in_float_mode():
    rng = random.Random(103)
    for tag in CLOSED_TAGS:
        m = random_metric(rng).to_float()
        a = bach_from_curvature(tag, m).components
        b = bach_closed_form(tag, m).components
        scale = max(abs(v) for v in a)
        assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-12 * scale


def test_trace_free():
    rng = random.Random(107)
    for tag in CLOSED_TAGS:
        m = random_metric(rng)
        assert bach_tensor(tag, m).trace(m) == 0


def test_conformal_weight():
    rng = random.Random(109)
    for tag in CLOSED_TAGS:
        m = random_metric(rng)
        B = bach_tensor(tag, m).components
        for _ in range(3):
            lam = rational(rng)
            Bs = bach_tensor(tag, m.scaled(lam)).components
            assert Bs == tuple(v / lam for v in B), (tag, lam)


def test_ratios_independent_of_g00():
    rng = random.Random(113)
    for tag in CLOSED_TAGS:
        m = random_metric(rng)
        m2 = DiagonalMetric(Fraction(7, 3), *m.n_part)
        assert bach_ratios(tag, m) == bach_ratios(tag, m2)


def test_divergence_free_in_four_dimensions():
    rng = random.Random(127)
    for tag in GROUP_TAGS:
        for _ in range(3):
            m = random_metric(rng, 1, 15)
            B = bach_tensor(tag, m).components
            sc4 = embed_product(entry(tag).structure)
            gamma4 = levi_civita(sc4, m.components)
            bmat = tuple(tuple(B[i] if i == j else 0 for j in range(4)) for i in range(4))
            assert divergence(bmat, gamma4, m.components) == (0, 0, 0, 0), tag


# ---------------------------------------------------------------------------
# frozen values


def test_su2_berger_values():
    m = DiagonalMetric(1, 4, 4, 1)
    B = bach_tensor("r_x_su2", m)
    assert B.components == (Fraction(-3, 512), Fraction(1, 128),
                            Fraction(1, 128), Fraction(1, 512))
    assert B.ratios(m) == (Fraction(-3, 512), Fraction(1, 512),
                           Fraction(1, 512), Fraction(1, 512))
    m2 = DiagonalMetric(1, 1, 1, Fraction(1, 4))
    assert bach_ratios("r_x_su2", m2) == (
        Fraction(-3, 32), Fraction(1, 32), Fraction(1, 32), Fraction(1, 32))


def test_su2_round_is_bach_flat():
    for s in (1, 2, Fraction(5, 3)):
        m = DiagonalMetric(1, s, s, s)
        assert bach_tensor("r_x_su2", m).is_zero()


def test_nil_unit_components():
    B = bach_tensor("r_x_nil", DiagonalMetric(1, 1, 1, 1))
    assert B.components == (Fraction(-1, 6), Fraction(-5, 6),
                            Fraction(1, 2), Fraction(1, 2))


def test_solv_sample_ratio():
    m = DiagonalMetric(1, 1, 2, 3)
    assert bach_ratios("r_x_solv", m)[3] == Fraction(3, 8)


def test_flat_and_hyperbolic_vanish():
    rng = random.Random(131)
    for tag in ("r_x_r3", "r_x_h3"):
        m = random_metric(rng)
        assert bach_tensor(tag, m).is_zero(), tag


def test_beta_factor_values():
    assert beta_factor(DiagonalMetric(1, 4, 4, 1)) == Fraction(1, 1536)
    assert beta_factor(DiagonalMetric(1, 1, 1, Fraction(1, 4))) == Fraction(8, 3)


def test_surface_product_components():
    # unit round sphere factor: B = (1/12, 1/12, -1/12, -1/12)
    B = bach_tensor("r2_x_s2", DiagonalMetric(1, 1, 1, 1))
    twelfth = Fraction(1, 12)
    assert B.components == (twelfth, twelfth, -twelfth, -twelfth)
    rng = random.Random(137)
    for tag in ("r2_x_s2", "r2_x_h2", "r_x_rs2", "r_x_rh2"):
        m = random_surface_metric(rng)
        ref = entry(tag).structure.scalar_curvature_ref
        k = (ref / m.g22) ** 2 / 12
        B = bach_tensor(tag, m)
        assert B.components == (k * m.g00, k * m.g11, -k * m.g22, -k * m.g33)
        assert B.trace(m) == 0


def test_surface_product_requires_equal_slots():
    with pytest.raises(ValueError):
        bach_tensor("r2_x_s2", DiagonalMetric(1, 1, 2, 3))


def test_flat_products_vanish():
    rng = random.Random(139)
    assert bach_tensor("r2_x_r2", random_surface_metric(rng)).is_zero()
    assert bach_tensor("r4", random_metric(rng)).is_zero()
    assert bach_tensor("r3_x_n1", random_metric(rng)).is_zero()


# ---------------------------------------------------------------------------
# closed-form polynomial data


def test_component_poly_pins():
    p, q1, q2, q3 = COMPONENT_POLYS["r_x_su2"]
    assert q1(4, 4, 1) == -3
    assert p(4, 4, 1) == 9
    assert q1(Fraction(1), Fraction(1), Fraction(1, 4)) == Fraction(-3, 256)
    assert p + q1 + q2 + q3 == type(p)(3)  # trace-free as polynomials


def test_closed_form_pq_display():
    cf = closed_form_pq("r_x_solv")
    # q(x,y) = 5x^4 + 3x^3 y - x y^3 - 3y^4
    assert cf.q(1, 2) == 5 + 6 - 8 - 48
    assert cf.p(1, 2) == 1 + 2 + 8 + 16
    cf3 = closed_form_pq("r_x_su2")
    assert cf3.q(4, 4, 1) == -3
    with pytest.raises(ValueError):
        closed_form_pq("r2_x_s2")


def test_closed_route_rejects_unsupported_tags():
    with pytest.raises(ValueError):
        bach_tensor("r2_x_s2", DiagonalMetric(1, 1, 1, 1), route="closed")
    with pytest.raises(ValueError):
        bach_tensor("r_x_su2", DiagonalMetric(1, 1, 1, 1), route="nope")
