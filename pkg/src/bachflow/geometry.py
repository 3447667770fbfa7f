"""Catalog of homogeneous product 4-manifolds R^k x N^(4-k).

Each catalog entry fixes the algebraic data the curvature and Bach
machinery consumes: a left-invariant frame bracket table for the
three-dimensional group factors, a constant-curvature surface record for
the surface factors, or a flat marker.

Bracket conventions for the unimodular classes follow the cyclic Milnor
frame, [e1,e2] = L3*e3, [e2,e3] = L1*e1, [e3,e1] = L2*e2. The tuple for
sl2r is (-1, 1, 1); with that choice the first-principles Bach diagonal
agrees component for component with the closed-form polynomial route for
every diagonal metric, which is the convention anchor used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple


@dataclass(frozen=True)
class StructureConstants:
    """Bracket table c^k_ij of a 3-dimensional Lie algebra, [e_i,e_j] = c^k_ij e_k."""

    name: str
    c: Tuple[Tuple[Tuple[int, ...], ...], ...]  # indexed [k][i][j]
    milnor: Tuple[int, int, int] | None = None  # cyclic coefficients when unimodular

    @property
    def dim(self) -> int:
        return len(self.c)

    def bracket(self, i: int, j: int) -> Tuple[int, ...]:
        """Components of [e_i, e_j] in the frame."""
        return tuple(self.c[k][i][j] for k in range(self.dim))

    def antisymmetry_defect(self):
        return max(
            abs(self.c[k][i][j] + self.c[k][j][i])
            for k in range(self.dim)
            for i in range(self.dim)
            for j in range(self.dim)
        )

    def jacobi_defect(self):
        """Max component of [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] over all triples."""
        n = self.dim
        worst = 0
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        total = 0
                        for m in range(n):
                            total += (
                                self.c[m][i][j] * self.c[l][m][k]
                                + self.c[m][j][k] * self.c[l][m][i]
                                + self.c[m][k][i] * self.c[l][m][j]
                            )
                        worst = max(worst, abs(total))
        return worst

    def ad_traces(self) -> Tuple[int, ...]:
        """tr(ad_{e_i}); all zero exactly when the algebra is unimodular."""
        return tuple(sum(self.c[j][i][j] for j in range(self.dim)) for i in range(self.dim))

    @property
    def unimodular(self) -> bool:
        return all(t == 0 for t in self.ad_traces())

    def describe(self) -> dict:
        """JSON-ready summary of the bracket table."""
        relations = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                comps = self.bracket(i, j)
                if not any(comps):
                    continue
                terms = []
                for k, v in enumerate(comps):
                    if v:
                        coeff = {1: "", -1: "-"}.get(v, f"{v}*")
                        terms.append(f"{coeff}e{k + 1}")
                relations.append(f"[e{i + 1},e{j + 1}] = " + " + ".join(terms))
        return {
            "kind": "group",
            "name": self.name,
            "brackets": relations,
            "unimodular": self.unimodular,
        }


def milnor_brackets(name: str, l1: int, l2: int, l3: int) -> StructureConstants:
    """Cyclic bracket table [e1,e2]=l3*e3, [e2,e3]=l1*e1, [e3,e1]=l2*e2."""
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    c[2][0][1], c[2][1][0] = l3, -l3
    c[0][1][2], c[0][2][1] = l1, -l1
    c[1][2][0], c[1][0][2] = l2, -l2
    return StructureConstants(name, tuple(tuple(tuple(r) for r in plane) for plane in c), (l1, l2, l3))


def _h3_brackets() -> StructureConstants:
    # Solvable non-unimodular algebra: [e1,e2] = e2, [e1,e3] = e3.
    # Every diagonal left-invariant metric on it is hyperbolic, hence Einstein.
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    c[1][0][1], c[1][1][0] = 1, -1
    c[2][0][2], c[2][2][0] = 1, -1
    return StructureConstants("h3", tuple(tuple(tuple(r) for r in plane) for plane in c), None)


@dataclass(frozen=True)
class SurfaceProduct:
    """Product with a constant-curvature surface factor on slots 2 and 3.

    scalar_curvature_ref is the scalar curvature of the surface at unit
    metric scale; at scale s (g22 = g33 = s) the curvature is ref/s.
    """

    name: str
    scalar_curvature_ref: Fraction

    def scalar_curvature(self, g22):
        return self.scalar_curvature_ref / g22

    def describe(self) -> dict:
        return {
            "kind": "surface",
            "name": self.name,
            "reference_scalar_curvature": str(self.scalar_curvature_ref),
        }


@dataclass(frozen=True)
class FlatSpace:
    """Marker for fully flat entries with no assigned group structure."""

    name: str

    def describe(self) -> dict:
        return {"kind": "flat", "name": self.name}


@dataclass(frozen=True)
class GeometryEntry:
    tag: str
    label: str
    split: str  # "1x3", "2x2" or "flat": where a soliton potential may live
    structure: StructureConstants | SurfaceProduct | FlatSpace
    note: str = ""


_S2 = SurfaceProduct("s2", Fraction(1))
_H2 = SurfaceProduct("h2", Fraction(-1))
_R2 = SurfaceProduct("r2", Fraction(0))

_ENTRIES = (
    GeometryEntry("r4", "R^4", "flat", FlatSpace("r4"),
                  note="non-split flat model; quadratic potentials admit every c"),
    GeometryEntry("r3_x_n1", "R^3 x N^1", "flat", FlatSpace("r3_x_n1"),
                  note="flat with a compact direction; potentials are linear on the R^3 factor"),
    GeometryEntry("r2_x_r2", "R^2 x R^2", "2x2", _R2),
    GeometryEntry("r2_x_s2", "R^2 x S^2", "2x2", _S2),
    GeometryEntry("r2_x_h2", "R^2 x H^2", "2x2", _H2),
    GeometryEntry("r_x_r3", "R x R^3", "1x3", milnor_brackets("r3", 0, 0, 0)),
    GeometryEntry("r_x_nil", "R x Nil", "1x3", milnor_brackets("nil", 1, 0, 0)),
    GeometryEntry("r_x_solv", "R x Solv", "1x3", milnor_brackets("solv", 1, -1, 0)),
    GeometryEntry("r_x_e2", "R x E(2)", "1x3", milnor_brackets("e2", 1, 1, 0)),
    GeometryEntry("r_x_sl2r", "R x SL(2,R)", "1x3", milnor_brackets("sl2r", -1, 1, 1)),
    GeometryEntry("r_x_su2", "R x SU(2)", "1x3", milnor_brackets("su2", 1, 1, 1)),
    GeometryEntry("r_x_h3", "R x H^3", "1x3", _h3_brackets()),
    GeometryEntry("r_x_rs2", "R x (R x S^2)", "1x3", _S2,
                  note="same metrics as r2_x_s2; the potential is confined to a single flat direction"),
    GeometryEntry("r_x_rh2", "R x (R x H^2)", "1x3", _H2,
                  note="same metrics as r2_x_h2; the potential is confined to a single flat direction"),
)

_BY_TAG = {e.tag: e for e in _ENTRIES}

GEOMETRY_TAGS = tuple(e.tag for e in _ENTRIES)


def catalog() -> Tuple[GeometryEntry, ...]:
    """All entries in canonical report order."""
    return _ENTRIES


def entry(tag: str) -> GeometryEntry:
    try:
        return _BY_TAG[tag]
    except KeyError:
        known = ", ".join(GEOMETRY_TAGS)
        raise ValueError(f"unknown geometry tag {tag!r}; known tags: {known}") from None


def bracket_table(tag: str) -> StructureConstants | SurfaceProduct | FlatSpace:
    """Structure record for a tag; raises ValueError for unknown tags."""
    return entry(tag).structure
