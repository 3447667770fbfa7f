"""Frame curvature of left-invariant diagonal metrics.

All tensors are expressed in the invariant frame, where the metric is
diagonal and the connection coefficients are constant. The computations
run unchanged over exact rationals (Fraction) and over floats; the scalar
type of the metric decides the mode.

Conventions
-----------
Connection:   Gamma^k_ij from the Koszul formula,
              2 g_kk Gamma^k_ij = c^k_ij g_kk - c^i_jk g_ii + c^j_ki g_jj.
Curvature:    R(e_i,e_j) e_k = nabla_i nabla_j e_k - nabla_j nabla_i e_k
              - nabla_[e_i,e_j] e_k, lowered as R_ijkl = <R(e_i,e_j)e_k, e_l>.
Ricci:        Ric_jk = sum_i g^ii R_ijki; the round unit sphere frame on
              su2 comes out with S = 3/2 in this convention.
Laplacian:    rough (trace) Laplacian, Delta T = + g^ii (nabla^2 T)_ii.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .geometry import StructureConstants


# ---------------------------------------------------------------------------
# diagonal metrics


def _coerce_components(values):
    """Normalize to all-Fraction (exact mode) or all-float (float mode)."""
    if any(isinstance(v, float) for v in values):
        return tuple(float(v) for v in values), "float"
    return tuple(Fraction(v) for v in values), "exact"


@dataclass(frozen=True)
class DiagonalMetric:
    """Positive diagonal metric components (g00, g11, g22, g33).

    Slot 0 sits on the first flat direction; slots 1..3 carry the
    three-dimensional factor (or the second flat direction plus a surface
    factor for the 2x2 products). Integer and Fraction inputs give an
    exact-mode metric; any float input switches the whole metric to float.
    """

    g00: object
    g11: object
    g22: object
    g33: object

    def __post_init__(self):
        comps, mode = _coerce_components((self.g00, self.g11, self.g22, self.g33))
        for name, v in zip(("g00", "g11", "g22", "g33"), comps):
            if not v > 0:
                raise ValueError(f"metric component {name} = {v} must be positive")
            object.__setattr__(self, name, v)
        object.__setattr__(self, "_mode", mode)

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def components(self) -> Tuple:
        return (self.g00, self.g11, self.g22, self.g33)

    @property
    def n_part(self) -> Tuple:
        """Components on slots 1..3."""
        return (self.g11, self.g22, self.g33)

    @property
    def det(self):
        return self.g00 * self.g11 * self.g22 * self.g33

    def scaled(self, lam) -> "DiagonalMetric":
        return DiagonalMetric(*(lam * v for v in self.components))

    def to_float(self) -> "DiagonalMetric":
        return DiagonalMetric(*(float(v) for v in self.components))

    @classmethod
    def parse(cls, text: str, exact: bool = False) -> "DiagonalMetric":
        """Parse 'g00,g11,g22,g33' where each entry is an integer, a p/q
        rational literal, or (float mode only) a decimal."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"need 4 comma-separated components, got {len(parts)}")
        values = []
        for p in parts:
            if "/" in p or _is_int(p):
                values.append(Fraction(p))
            elif exact:
                raise ValueError(f"decimal literal {p!r} not allowed in exact mode; use p/q")
            else:
                values.append(float(p))
        if not exact:
            values = [float(v) for v in values]
        return cls(*values)


def _is_int(text: str) -> bool:
    t = text.lstrip("+-")
    return t.isdigit()


# ---------------------------------------------------------------------------
# connection and curvature


def levi_civita(sc: StructureConstants, g: Tuple) -> Tuple:
    """Connection coefficients Gamma^k_ij of the Levi-Civita connection.

    Parameters
    ----------
    sc : bracket table of the factor (any dimension)
    g : diagonal metric components of the factor, one scalar per frame leg

    Returns
    -------
    Nested tuple indexed [k][i][j]. Constant on the group, so plain scalars.
    """
    n = len(g)
    c = sc.c
    if len(c) != n:
        raise ValueError(f"bracket table dimension {len(c)} does not match metric dimension {n}")
    half = Fraction(1, 2)
    gamma = [
        [
            [half * (c[k][i][j] * g[k] - c[i][j][k] * g[i] + c[j][k][i] * g[j]) / g[k] for j in range(n)]
            for i in range(n)
        ]
        for k in range(n)
    ]
    return _freeze3(gamma)


def riemann_tensor(sc: StructureConstants, g: Tuple, gamma: Tuple) -> Tuple:
    """Lowered curvature R_ijkl = <R(e_i,e_j)e_k, e_l> in the frame."""
    n = len(g)
    c = sc.c
    riem = [[[[0] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    total = 0
                    for m in range(n):
                        total += (
                            gamma[m][j][k] * gamma[l][i][m]
                            - gamma[m][i][k] * gamma[l][j][m]
                            - c[m][i][j] * gamma[l][m][k]
                        )
                    riem[i][j][k][l] = total * g[l]
    return _freeze4(riem)


def nabla_rank2(t: Tuple, gamma: Tuple) -> Tuple:
    """Covariant derivative of a frame-constant rank-2 tensor.

    Returns (nabla T)_{i;jk}, derivative slot first. The frame components
    are constant, so only the connection correction terms survive.
    """
    n = len(gamma)
    out = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                total = 0
                for m in range(n):
                    total -= gamma[m][i][j] * t[m][k] + gamma[m][i][k] * t[j][m]
                out[i][j][k] = total
    return _freeze3(out)


def nabla_rank3(t: Tuple, gamma: Tuple) -> Tuple:
    """Covariant derivative of a frame-constant rank-3 tensor, new slot first."""
    n = len(gamma)
    out = [[[[0] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for a in range(n):
            for b in range(n):
                for c_ in range(n):
                    total = 0
                    for m in range(n):
                        total -= (
                            gamma[m][i][a] * t[m][b][c_]
                            + gamma[m][i][b] * t[a][m][c_]
                            + gamma[m][i][c_] * t[a][b][m]
                        )
                    out[i][a][b][c_] = total
    return _freeze4(out)


def divergence(t: Tuple, gamma: Tuple, g: Tuple) -> Tuple:
    """(div T)_j = g^ii (nabla T)_{i;ij} for a symmetric rank-2 tensor."""
    n = len(g)
    nt = nabla_rank2(t, gamma)
    return tuple(sum(nt[i][i][j] / g[i] for i in range(n)) for j in range(n))


@dataclass(frozen=True)
class CurvatureData:
    """Curvature package of one factor, everything the Bach assembly consumes."""

    gamma: Tuple        # Gamma^k_ij
    riemann: Tuple      # R_ijkl
    ricci: Tuple        # Ric_ij
    scalar: object      # S
    nabla_ricci: Tuple  # (nabla Ric)_{i;jk}
    delta_ricci: Tuple  # rough Laplacian (Delta Ric)_jk
    ricci_sq: Tuple     # (Ric . Ric)_jk, one metric contraction
    ricci_norm_sq: object  # |Ric|^2


def curvature(sc: StructureConstants, g: Tuple) -> CurvatureData:
    """Full curvature package of a factor with bracket table sc and diagonal metric g."""
    n = len(g)
    gamma = levi_civita(sc, g)
    riem = riemann_tensor(sc, g, gamma)

    ricci = [[0] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            ricci[j][k] = sum(riem[i][j][k][i] / g[i] for i in range(n))
    ricci = tuple(tuple(row) for row in ricci)

    scalar = sum(ricci[j][j] / g[j] for j in range(n))

    ricci_sq = tuple(
        tuple(sum(ricci[j][m] * ricci[m][k] / g[m] for m in range(n)) for k in range(n))
        for j in range(n)
    )
    ricci_norm_sq = sum(ricci[j][k] * ricci[j][k] / (g[j] * g[k]) for j in range(n) for k in range(n))

    nr = nabla_rank2(ricci, gamma)
    nnr = nabla_rank3(nr, gamma)
    delta = tuple(
        tuple(sum(nnr[i][i][k][l] / g[i] for i in range(n)) for l in range(n)) for k in range(n)
    )

    return CurvatureData(gamma, riem, ricci, scalar, nr, delta, ricci_sq, ricci_norm_sq)


def embed_product(sc: StructureConstants) -> StructureConstants:
    """Bracket table of R x G in the 4-frame: leg 0 is central and flat."""
    n = sc.dim
    m = n + 1
    c = [[[0] * m for _ in range(m)] for _ in range(m)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                c[k + 1][i + 1][j + 1] = sc.c[k][i][j]
    return StructureConstants(
        f"r_x_{sc.name}", tuple(tuple(tuple(r) for r in plane) for plane in c), None
    )


def _freeze3(t):
    return tuple(tuple(tuple(r) for r in plane) for plane in t)


def _freeze4(t):
    return tuple(tuple(tuple(tuple(r) for r in cube) for cube in plane) for plane in t)
