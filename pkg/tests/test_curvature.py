"""Frame curvature of diagonal metrics, pinned by closed-form values."""

import itertools
import random
from fractions import Fraction

import pytest

from bachflow.curvature import (
    DiagonalMetric,
    curvature,
    divergence,
    embed_product,
    levi_civita,
    nabla_rank2,
    riemann_tensor,
)
from bachflow.geometry import entry

from support import GROUP_TAGS, random_metric, rational


# ---------------------------------------------------------------------------
# DiagonalMetric


def test_metric_modes():
    m = DiagonalMetric(1, 2, Fraction(3, 4), 5)
    assert m.mode == "exact"
    assert all(isinstance(v, Fraction) for v in m.components)
    f = DiagonalMetric(1, 2.0, 3, 4)
    assert f.mode == "float"
    assert all(isinstance(v, float) for v in f.components)


def test_metric_positivity():
    with pytest.raises(ValueError):
        DiagonalMetric(1, -1, 1, 1)
    with pytest.raises(ValueError):
        DiagonalMetric(0, 1, 1, 1)


def test_metric_parse():
    m = DiagonalMetric.parse("1,4,4,1", exact=True)
    assert m.components == (1, 4, 4, 1)
    assert m.mode == "exact"
    m = DiagonalMetric.parse("1/2,3/4,1,7", exact=True)
    assert m.g00 == Fraction(1, 2)
    f = DiagonalMetric.parse("1.5,1,1,1")
    assert f.mode == "float" and f.g00 == 1.5
    with pytest.raises(ValueError):
        DiagonalMetric.parse("1.5,1,1,1", exact=True)
    with pytest.raises(ValueError):
        DiagonalMetric.parse("1,2,3", exact=True)
    with pytest.raises(ValueError):
        DiagonalMetric.parse("1,x,3,4")


def test_metric_helpers():
    m = DiagonalMetric(1, 2, 3, 4)
    assert m.n_part == (2, 3, 4)
    assert m.det == 24
    assert m.scaled(Fraction(1, 2)).components == (Fraction(1, 2), 1, Fraction(3, 2), 2)
    assert m.to_float().mode == "float"


# ---------------------------------------------------------------------------
# connection and curvature pins


def test_su2_unit_biinvariant():
    sc = entry("r_x_su2").structure
    g = (Fraction(1), Fraction(1), Fraction(1))
    gamma = levi_civita(sc, g)
    # bi-invariant metric: Gamma^k_ij = c^k_ij / 2
    for k, i, j in itertools.product(range(3), repeat=3):
        assert gamma[k][i][j] == Fraction(sc.c[k][i][j], 2)
    data = curvature(sc, g)
    assert data.scalar == Fraction(3, 2)
    for j in range(3):
        assert data.ricci[j][j] == Fraction(1, 2)


def test_nil_unit_ricci_signs():
    data = curvature(entry("r_x_nil").structure, (1, 1, 1))
    diag = tuple(data.ricci[j][j] for j in range(3))
    assert diag == (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2))


def test_h3_einstein_at_every_metric():
    sc = entry("r_x_h3").structure
    for g in ((1, 2, 3), (4, 5, 6), (Fraction(1, 3), 7, Fraction(2, 5))):
        g = tuple(Fraction(v) for v in g)
        data = curvature(sc, g)
        kappa = Fraction(-2) / g[0]  # e1 sets the curvature scale
        for j in range(3):
            for k in range(3):
                expected = kappa * g[j] if j == k else 0
                assert data.ricci[j][k] == expected


def test_metric_compatibility_and_torsion():
    rng = random.Random(31)
    for tag in GROUP_TAGS:
        sc = entry(tag).structure
        g = tuple(rational(rng, 1, 12) for _ in range(3))
        gamma = levi_civita(sc, g)
        gmat = tuple(tuple(g[i] if i == j else 0 for j in range(3)) for i in range(3))
        ng = nabla_rank2(gmat, gamma)
        assert all(ng[i][j][k] == 0 for i, j, k in itertools.product(range(3), repeat=3))
        for k, i, j in itertools.product(range(3), repeat=3):
            assert gamma[k][i][j] - gamma[k][j][i] == sc.c[k][i][j]


def test_riemann_symmetries_and_first_bianchi_sample():
    rng = random.Random(37)
    for n in range(50):
        tag = GROUP_TAGS[n % len(GROUP_TAGS)]
        sc = entry(tag).structure
        g = tuple(rational(rng, 1, 12) for _ in range(3))
        R = riemann_tensor(sc, g, levi_civita(sc, g))
        for i, j, k, l in itertools.product(range(3), repeat=4):
            assert R[i][j][k][l] == -R[j][i][k][l]
            assert R[i][j][k][l] == -R[i][j][l][k]
            assert R[i][j][k][l] == R[k][l][i][j]
            assert R[i][j][k][l] + R[j][k][i][l] + R[k][i][j][l] == 0


def test_scaling_behavior():
    rng = random.Random(41)
    sc = entry("r_x_su2").structure
    g = tuple(rational(rng) for _ in range(3))
    lam = Fraction(7, 3)
    a = curvature(sc, g)
    b = curvature(sc, tuple(lam * v for v in g))
    assert b.gamma == a.gamma
    assert b.ricci == a.ricci                 # Ricci is scale invariant
    assert b.scalar == a.scalar / lam
    for i, j, k, l in itertools.product(range(3), repeat=4):
        assert b.riemann[i][j][k][l] == lam * a.riemann[i][j][k][l]


def test_contracted_bianchi():
    # homogeneous: div Ric = dS/2 = 0, exactly
    rng = random.Random(43)
    for tag in GROUP_TAGS:
        sc = entry(tag).structure
        g = tuple(rational(rng, 1, 15) for _ in range(3))
        data = curvature(sc, g)
        assert divergence(data.ricci, data.gamma, g) == (0, 0, 0)


def test_embed_product():
    sc = entry("r_x_su2").structure
    sc4 = embed_product(sc)
    assert sc4.dim == 4
    for k, j in itertools.product(range(4), repeat=2):
        assert sc4.c[k][0][j] == 0
        assert sc4.c[k][j][0] == 0
    assert sc4.c[3][1][2] == 1  # 3D [e1,e2] = e3, shifted up one slot
    data = curvature(sc4, (Fraction(5), Fraction(1), Fraction(1), Fraction(1)))
    assert data.scalar == Fraction(3, 2)
    assert data.ricci[0][0] == 0


def test_nil_delta_ricci_closed_value():
    # (Delta Ric)_11 = -g11^3/(g22 g33)^2 on the nil factor
    sc = entry("r_x_nil").structure
    x, y, z = Fraction(3, 2), Fraction(5, 7), Fraction(2)
    data = curvature(sc, (x, y, z))
    assert data.delta_ricci[0][0] == -(x**3) / (y * z) ** 2
