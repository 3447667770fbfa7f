"""Bach tensors of diagonal metrics on the product geometries.

Two independent routes are kept side by side on purpose:

* ``bach_from_curvature`` assembles the Bach diagonal from the curvature
  package of the three-dimensional factor (or from the constant surface
  curvatures for the 2x2 products). Nothing here knows the per-geometry
  polynomial shapes.
* ``bach_closed_form`` evaluates the per-geometry quartic polynomial
  displays for the five non-abelian group factors.

Their exact agreement on random rational metrics is the correctness
anchor of the whole package; any disagreement is a build-stopping defect,
never something to smooth over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .curvature import CurvatureData, DiagonalMetric, curvature
from .geometry import FlatSpace, GeometryEntry, StructureConstants, SurfaceProduct, entry
from .polynomials import Poly

# ---------------------------------------------------------------------------
# displayed polynomial records

#: p(x,y) = x^4 + x^3 y + x y^3 + y^4
P2 = Poly(2, {(4, 0): 1, (3, 1): 1, (1, 3): 1, (0, 4): 1})

#: q(x,y) = 5x^4 + 3x^3 y - x y^3 - 3y^4
Q2 = Poly(2, {(4, 0): 5, (3, 1): 3, (1, 3): -1, (0, 4): -3})

#: p(x,y,z) = x^4 - x^3(y+z) + x^2 yz + x(-y^3 + y^2 z + y z^2 - z^3)
#:            + y^4 - y^3 z - y z^3 + z^4
P3 = Poly(3, {
    (4, 0, 0): 1,
    (3, 1, 0): -1,
    (3, 0, 1): -1,
    (2, 1, 1): 1,
    (1, 3, 0): -1,
    (1, 2, 1): 1,
    (1, 1, 2): 1,
    (1, 0, 3): -1,
    (0, 4, 0): 1,
    (0, 3, 1): -1,
    (0, 1, 3): -1,
    (0, 0, 4): 1,
})

#: q(x,y,z) = 5x^4 - 3x^3(y+z) + x^2 yz + x(y^3 - y^2 z - y z^2 + z^3)
#:            - 3y^4 + 3y^3 z + 3y z^3 - 3z^4
Q3 = Poly(3, {
    (4, 0, 0): 5,
    (3, 1, 0): -3,
    (3, 0, 1): -3,
    (2, 1, 1): 1,
    (1, 3, 0): 1,
    (1, 2, 1): -1,
    (1, 1, 2): -1,
    (1, 0, 3): 1,
    (0, 4, 0): -3,
    (0, 3, 1): 3,
    (0, 1, 3): 3,
    (0, 0, 4): -3,
})


@dataclass(frozen=True)
class ClosedFormPQ:
    """The displayed polynomial pair backing one geometry's closed form."""

    geometry: str
    p: Poly
    q: Poly


_PQ = {
    "r_x_solv": ClosedFormPQ("r_x_solv", P2, Q2),
    "r_x_e2": ClosedFormPQ("r_x_e2", P2, Q2),
    "r_x_sl2r": ClosedFormPQ("r_x_sl2r", P3, Q3),
    "r_x_su2": ClosedFormPQ("r_x_su2", P3, Q3),
}


def closed_form_pq(tag: str) -> ClosedFormPQ:
    entry(tag)
    try:
        return _PQ[tag]
    except KeyError:
        raise ValueError(f"no displayed p/q record for {tag!r}; "
                         f"available: {', '.join(sorted(_PQ))}") from None


def _component_polys() -> dict:
    """Per-geometry component polynomials over the N-part variables (x, y, z).

    Uniform shape: B00 = -beta * P * g00^3 and B_ii = -beta * Q_i * g00^2 * g_ii
    with beta = 1/(6 det(g)^2). The argument substitutions mirror the
    closed-form displays exactly (nil is all monomials).
    """
    x4 = Poly(3, {(4, 0, 0): 1})

    # 2-variable displays embedded into (x, y, z); z never appears.
    id2 = [(1, 0), (1, 1)]        # (x, y)
    neg2 = [(-1, 0), (1, 1)]      # (-x, y)
    swap2 = [(1, 1), (1, 0)]      # (y, x)
    swapneg2 = [(1, 1), (-1, 0)]  # (y, -x)

    # 3-variable argument orders.
    id3 = [(1, 0), (1, 1), (1, 2)]            # (x, y, z)
    cyc2 = [(1, 1), (1, 2), (1, 0)]           # (y, z, x)
    cyc3 = [(1, 2), (1, 0), (1, 1)]           # (z, x, y)
    neg_id3 = [(-1, 0), (1, 1), (1, 2)]       # (-x, y, z)
    neg_b22 = [(1, 1), (-1, 0), (1, 2)]       # (y, -x, z)
    neg_b33 = [(1, 2), (-1, 0), (1, 1)]       # (z, -x, y)

    return {
        "r_x_nil": (x4, 5 * x4, -3 * x4, -3 * x4),
        "r_x_solv": (
            P2.signed_remap(id2, 3),
            Q2.signed_remap(id2, 3),
            Q2.signed_remap(swap2, 3),
            -3 * P2.signed_remap(id2, 3),
        ),
        "r_x_e2": (
            P2.signed_remap(neg2, 3),
            Q2.signed_remap(neg2, 3),
            Q2.signed_remap(swapneg2, 3),
            -3 * P2.signed_remap(neg2, 3),
        ),
        "r_x_sl2r": (
            P3.signed_remap(neg_id3, 3),
            Q3.signed_remap(neg_id3, 3),
            Q3.signed_remap(neg_b22, 3),
            Q3.signed_remap(neg_b33, 3),
        ),
        "r_x_su2": (
            P3.signed_remap(id3, 3),
            Q3.signed_remap(id3, 3),
            Q3.signed_remap(cyc2, 3),
            Q3.signed_remap(cyc3, 3),
        ),
    }


COMPONENT_POLYS = _component_polys()

CLOSED_FORM_TAGS = tuple(sorted(COMPONENT_POLYS))


# ---------------------------------------------------------------------------
# Bach diagonal


@dataclass(frozen=True)
class BachDiagonal:
    """Diagonal frame components (B00, B11, B22, B33)."""

    components: Tuple

    def ratios(self, metric: DiagonalMetric) -> Tuple:
        """(B00/g00, B11/g11, B22/g22, B33/g33), the soliton test data."""
        return tuple(b / g for b, g in zip(self.components, metric.components))

    def trace(self, metric: DiagonalMetric):
        """g^ii B_ii; identically zero for a genuine Bach tensor."""
        return sum(self.ratios(metric))

    def is_zero(self) -> bool:
        return all(b == 0 for b in self.components)


def beta_factor(metric: DiagonalMetric):
    """beta = 1/(6 det(g)^2) with the full 4-metric determinant."""
    d = metric.det
    return Fraction(1, 6) / (d * d)


def bach_closed_form(tag: str, metric: DiagonalMetric) -> BachDiagonal:
    """Per-geometry closed-form Bach diagonal.

    Only the five non-abelian unimodular group factors have displayed
    closed forms; other tags raise ValueError.
    """
    entry(tag)
    try:
        polys = COMPONENT_POLYS[tag]
    except KeyError:
        raise ValueError(f"no closed form for {tag!r}; "
                         f"available: {', '.join(CLOSED_FORM_TAGS)}") from None
    p, q1, q2, q3 = polys
    g00 = metric.g00
    x, y, z = metric.n_part
    beta = beta_factor(metric)
    b00 = -beta * p(x, y, z) * g00**3
    sq = -beta * g00**2
    return BachDiagonal((
        b00,
        sq * q1(x, y, z) * metric.g11,
        sq * q2(x, y, z) * metric.g22,
        sq * q3(x, y, z) * metric.g33,
    ))


def bach_from_curvature(tag: str, metric: DiagonalMetric) -> BachDiagonal:
    """First-principles Bach diagonal of the product metric.

    Group factors go through the full curvature package of the
    3-dimensional factor; surface products use the constant-curvature
    reduction. Flat entries are identically zero.
    """
    geo = entry(tag)
    structure = geo.structure
    if isinstance(structure, FlatSpace):
        zero = metric.g00 * 0
        return BachDiagonal((zero, zero, zero, zero))
    if isinstance(structure, SurfaceProduct):
        return _bach_surface_product(structure, metric)
    return _bach_group_factor(structure, metric)


def _bach_surface_product(surface: SurfaceProduct, metric: DiagonalMetric) -> BachDiagonal:
    # Homogeneous metrics on a constant-curvature surface are isotropic.
    if metric.g22 != metric.g33:
        raise ValueError(
            f"surface factor requires g22 == g33, got {metric.g22} and {metric.g33}")
    s_n = surface.scalar_curvature(metric.g22)
    k = Fraction(1, 12) * s_n * s_n
    return BachDiagonal((
        k * metric.g00,
        k * metric.g11,
        -k * metric.g22,
        -k * metric.g33,
    ))


def _bach_group_factor(sc: StructureConstants, metric: DiagonalMetric) -> BachDiagonal:
    g_n = metric.n_part
    curv = curvature(sc, g_n)
    s = curv.scalar
    ric = curv.ricci
    ric_sq = curv.ricci_sq
    delta = curv.delta_ricci
    norm_sq = curv.ricci_norm_sq

    # Flat-slot component; the scalar curvature is frame-constant, so its
    # Laplacian contributes nothing on a homogeneous factor.
    b00 = Fraction(-1, 4) * (norm_sq - Fraction(1, 3) * s * s) * metric.g00

    b_n = [[0] * 3 for _ in range(3)]
    for j in range(3):
        for k in range(3):
            g_jk = g_n[j] if j == k else 0
            b_n[j][k] = (
                Fraction(1, 2) * delta[j][k]
                - 2 * ric_sq[j][k]
                + Fraction(7, 6) * s * ric[j][k]
                + Fraction(3, 4) * norm_sq * g_jk
                - Fraction(5, 12) * s * s * g_jk
            )

    _require_diagonal(b_n, curv, metric)
    return BachDiagonal((b00, b_n[0][0], b_n[1][1], b_n[2][2]))


def _require_diagonal(b_n, curv: CurvatureData, metric: DiagonalMetric) -> None:
    off = max(abs(b_n[j][k]) for j in range(3) for k in range(3) if j != k)
    if metric.mode == "exact":
        if off != 0:
            raise RuntimeError(f"Bach tensor not diagonal: off-diagonal magnitude {off}")
        return
    scale = max(
        1.0,
        max(abs(b_n[j][j]) for j in range(3)),
        abs(curv.scalar) ** 2,
        abs(curv.ricci_norm_sq),
        max(abs(curv.delta_ricci[j][k]) for j in range(3) for k in range(3)),
    )
    if off > 1e-9 * scale:
        raise RuntimeError(f"Bach tensor not diagonal: off-diagonal magnitude {off}")


def bach_tensor(tag: str, metric: DiagonalMetric, route: str = "curvature") -> BachDiagonal:
    """Dispatch between the two routes by name ('curvature' or 'closed')."""
    if route == "curvature":
        return bach_from_curvature(tag, metric)
    if route == "closed":
        return bach_closed_form(tag, metric)
    raise ValueError(f"unknown route {route!r}; use 'curvature' or 'closed'")


def bach_ratios(tag: str, metric: DiagonalMetric, route: str = "curvature") -> Tuple:
    return bach_tensor(tag, metric, route).ratios(metric)
