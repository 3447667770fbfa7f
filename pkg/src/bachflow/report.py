"""Classification table assembly, delimited writers, and figures.

``build_table1`` recomputes the full per-geometry soliton classification
from scratch (exact identities, grid scans, representative certificates)
and compares the outcome against the frozen reference rows below. The
renderers emit an aligned text table, CSV, and JSON; the figure helpers
draw the certification landscape and flow comparisons to PNG files.
"""

from __future__ import annotations

import csv
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Tuple

import numpy as np

from .curvature import DiagonalMetric
from .geometry import catalog
from .solitons import classify, verify_soliton
from .flow import FlowTrajectory, ScaleLaw, run_flow, scale_law, self_similarity_check


def thread_cap(n_items: int) -> int:
    """Worker count for catalog fan-out, capped by BACHFLOW_THREADS."""
    env = os.environ.get("BACHFLOW_THREADS")
    cap = int(env) if env else (os.cpu_count() or 1)
    return max(1, min(cap, n_items))


def ordered_map(fn: Callable, items: Sequence, threads: int | None = None) -> list:
    """Apply fn across items concurrently, results in input order."""
    n = thread_cap(len(items)) if threads is None else max(1, min(threads, len(items)))
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# frozen reference rows: (tag, soliton summary, c summary)

REFERENCE_ROWS: Tuple[Tuple[str, str, str], ...] = (
    ("r4", "gaussian (every metric)", "any c"),
    ("r3_x_n1", "steady (every metric)", "c = 0"),
    ("r2_x_r2", "steady (every metric)", "c = 0"),
    ("r2_x_s2", "shrinking (every metric)", "c = S_N^2/24 > 0"),
    ("r2_x_h2", "shrinking (every metric)", "c = S_N^2/24 > 0"),
    ("r_x_r3", "steady (every metric)", "c = 0"),
    ("r_x_nil", "none", "-"),
    ("r_x_solv", "none", "-"),
    ("r_x_e2", "steady (g11 = g22)", "c = 0"),
    ("r_x_sl2r", "none", "-"),
    ("r_x_su2", "steady (round), expanding (berger 4:4:1)",
     "c = 0 or c = -1/(1024*s^2)"),
    ("r_x_h3", "steady (every metric)", "c = 0"),
    ("r_x_rs2", "none", "-"),
    ("r_x_rh2", "none", "-"),
)

# probe metrics expected to fail certification (negative controls)
_NONE_PROBES = {
    "r_x_nil": (DiagonalMetric(1, 1, 1, 1),),
    "r_x_solv": (DiagonalMetric(1, 1, 2, 3),),
    "r_x_sl2r": (DiagonalMetric(1, 2, 3, 4),),
    "r_x_rs2": (DiagonalMetric(1, 1, 2, 2),),
    "r_x_rh2": (DiagonalMetric(1, 1, 3, 3),),
    "r_x_su2": (DiagonalMetric(1, 2, 3, 4),),
    "r_x_e2": (DiagonalMetric(1, 2, 3, 5),),
}


def _summary(entry_) -> Tuple[str, str]:
    """(soliton summary, c summary) for a classification entry."""
    fams = entry_.families
    if not fams:
        return "none", "-"
    if entry_.tag == "r4":
        return "gaussian (every metric)", "any c"
    if entry_.tag == "r_x_su2":
        return ("steady (round), expanding (berger 4:4:1)",
                "c = 0 or c = -1/(1024*s^2)")
    f = fams[0]
    if f.verdict == "shrinking":
        return "shrinking (every metric)", "c = S_N^2/24 > 0"
    where = "every metric" if f.kind == "any" else f.constraint.split(" (")[0]
    return f"steady ({where})", "c = 0"


@dataclass(frozen=True)
class Table1Row:
    tag: str
    label: str
    split: str
    soliton: str
    c_text: str
    certified: bool
    checks: Tuple[Tuple[str, bool], ...]
    expected_soliton: str
    expected_c: str

    @property
    def ok(self) -> bool:
        return (self.certified
                and self.soliton == self.expected_soliton
                and self.c_text == self.expected_c)


@dataclass(frozen=True)
class Table1Result:
    rows: Tuple[Table1Row, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def mismatches(self) -> list[str]:
        out = []
        for r in self.rows:
            if r.soliton != r.expected_soliton:
                out.append(f"{r.tag}: soliton {r.soliton!r} != expected "
                           f"{r.expected_soliton!r}")
            if r.c_text != r.expected_c:
                out.append(f"{r.tag}: c {r.c_text!r} != expected {r.expected_c!r}")
            if not r.certified:
                bad = [name for name, ok in r.checks if not ok]
                out.append(f"{r.tag}: certification failed ({', '.join(bad) or 'scan'})")
        return out


def _build_row(args) -> Table1Row:
    tag, expected_soliton, expected_c, scan = args
    e = classify(tag, scan=scan)
    checks = list(e.identity_checks)
    if e.grid is not None:
        checks.append(("grid_scan", e.grid.ok))
    for fam in e.families:
        reps = [fam.representative()]
        if fam.c_rule == "berger":
            reps.append(fam.representative(scale=Fraction(1, 4)))
        want = "steady" if fam.verdict == "gaussian" else fam.verdict
        for rep in reps:
            cert = verify_soliton(tag, rep)
            ok = cert.verdict == want
            c_ref = fam.c_for(rep)
            if c_ref is not None:
                ok = ok and cert.c == c_ref
            checks.append((f"{fam.label} at {tuple(rep.components)}", ok))
    for probe in _NONE_PROBES.get(tag, ()):
        cert = verify_soliton(tag, probe)
        checks.append((f"probe {tuple(probe.components)} rejected",
                       cert.verdict == "none"))
    soliton, c_text = _summary(e)
    certified = all(ok for _, ok in checks)
    return Table1Row(
        tag=tag, label=e.label, split=e.split,
        soliton=soliton, c_text=c_text,
        certified=certified, checks=tuple(checks),
        expected_soliton=expected_soliton, expected_c=expected_c,
    )


def build_table1(threads: int | None = None, scan: bool = True) -> Table1Result:
    """Recompute the classification table and verify it row by row."""
    tags = [e.tag for e in catalog()]
    ref = {t: (s, c) for t, s, c in REFERENCE_ROWS}
    missing = [t for t in tags if t not in ref]
    if missing or len(ref) != len(tags):
        raise RuntimeError(f"reference rows out of sync with catalog: {missing}")
    work = [(t, ref[t][0], ref[t][1], scan) for t in tags]
    rows = ordered_map(_build_row, work, threads=threads)
    return Table1Result(tuple(rows))


# ---------------------------------------------------------------------------
# renderers

_COLUMNS = ("tag", "geometry", "split", "soliton", "c", "status")


def _row_cells(r: Table1Row) -> Tuple[str, ...]:
    return (r.tag, r.label, r.split, r.soliton, r.c_text,
            "OK" if r.ok else "FAIL")


def render_text(result: Table1Result) -> str:
    cells = [_COLUMNS] + [_row_cells(r) for r in result.rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(_COLUMNS))]
    lines = []
    for k, row in enumerate(cells):
        lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    if not result.ok:
        lines.append("")
        lines += [f"MISMATCH: {m}" for m in result.mismatches()]
    return "\n".join(lines)


def write_table1_csv(result: Table1Result, path: str) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(_COLUMNS)
        for r in result.rows:
            w.writerow(_row_cells(r))


def table1_json_payload(result: Table1Result) -> dict:
    return {
        "ok": result.ok,
        "rows": [
            {
                "tag": r.tag,
                "geometry": r.label,
                "split": r.split,
                "soliton": r.soliton,
                "c": r.c_text,
                "certified": r.certified,
                "ok": r.ok,
                "checks": {name: ok for name, ok in r.checks},
            }
            for r in result.rows
        ],
    }


def write_table1_json(result: Table1Result, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(table1_json_payload(result), fh, indent=2)
        fh.write("\n")


# ---------------------------------------------------------------------------
# figures


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def figure_residual_landscape(path: str, cells: int = 60) -> str:
    """Soliton residual of normalized su2 metrics over [1/8, 8]^2.

    Plots log10 of max_i |b_i + 2c| at (1, x, y, 1); the four wells are
    the round point, the doubled round point and the two 4:4:1 metrics.
    """
    plt = _plt()
    lo, hi = 0.125, 8.0
    xs = np.exp(np.linspace(np.log(lo), np.log(hi), cells))
    z = np.empty((cells, cells))
    for i, y in enumerate(xs):
        for j, x in enumerate(xs):
            cert = verify_soliton("r_x_su2", DiagonalMetric(1.0, float(x), float(y), 1.0))
            z[i, j] = np.log10(max(float(cert.residual), 1e-18))
    fig, ax = plt.subplots(figsize=(6.4, 5.2))
    im = ax.pcolormesh(xs, xs, z, shading="auto", cmap="viridis")
    fig.colorbar(im, ax=ax, label="log10 max residual")
    for px, py in ((1, 1), (4, 4), (1, 0.25), (0.25, 1)):
        ax.plot(px, py, "r*", markersize=12)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("g11 / g33")
    ax.set_ylabel("g22 / g33")
    ax.set_title("soliton residual, normalized su(2) metrics")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def figure_self_similarity(path: str) -> str:
    """Expanding soliton flow against its predicted power laws."""
    plt = _plt()
    g0 = DiagonalMetric(1.0, 4.0, 4.0, 1.0)
    res = self_similarity_check("r_x_su2", g0, -1 / 1024, 768.0)
    traj, law = res.trajectory, res.law
    t = traj.t
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6.4, 6.4), sharex=True)
    labels = ("g00", "g11", "g22", "g33")
    g0f = [float(v) for v in g0.components]
    for i in (0, 1, 3):
        ax1.plot(t, traj.g[:, i], lw=1.6, label=f"{labels[i]} (flow)")
        pred = [g0f[i] * law.base(float(s)) ** law.exponents[i] for s in t]
        ax1.plot(t, pred, "k--", lw=0.9)
    ax1.set_yscale("log")
    ax1.set_ylabel("metric component")
    ax1.legend(loc="best", fontsize=8)
    ax1.set_title("expanding soliton flow vs (1 - 4ct)^kappa (dashed)")
    rel = np.empty_like(t)
    for i, s in enumerate(t):
        pred = g0f * np.power(law.base(float(s)), np.array(law.exponents))
        rel[i] = np.max(np.abs(traj.g[i] / pred - 1.0))
    ax2.semilogy(t, np.maximum(rel, 1e-17), lw=1.4)
    ax2.set_xlabel("t")
    ax2.set_ylabel("max relative deviation")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def figure_collapse(path: str) -> str:
    """Round-sphere factor collapsing in finite time under the flow."""
    plt = _plt()
    traj = run_flow("r2_x_s2", DiagonalMetric(1.0, 1.0, 1.0, 1.0), 8.0)
    t = traj.t
    fig, ax = plt.subplots(figsize=(6.4, 4.6))
    ax.plot(t, traj.g[:, 2], lw=1.6, label="g22 (flow)")
    ax.plot(t, np.sqrt(np.maximum(1 - t / 6, 0.0)), "k--", lw=1.0,
            label="sqrt(1 - t/6)")
    ax.plot(t, traj.g[:, 0], lw=1.6, label="g00 (flow)")
    ax.set_ylim(0, 3)
    ax.axvline(6.0, color="gray", lw=0.8, ls=":")
    ax.set_xlabel("t")
    ax.set_ylabel("metric component")
    ax.set_title("unit sphere-factor collapse at t* = 6")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def write_figures(out_dir: str) -> list[str]:
    """Render the three report figures into out_dir."""
    os.makedirs(out_dir, exist_ok=True)
    return [
        figure_residual_landscape(os.path.join(out_dir, "su2_residual_landscape.png")),
        figure_self_similarity(os.path.join(out_dir, "flow_self_similarity.png")),
        figure_collapse(os.path.join(out_dir, "flow_collapse.png")),
    ]


def plot_trajectory(traj: FlowTrajectory, path: str,
                    law: ScaleLaw | None = None) -> str:
    """Plot one trajectory's components (and a scale-law overlay if given)."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(6.4, 4.6))
    labels = ("g00", "g11", "g22", "g33")
    for i in range(4):
        ax.plot(traj.t, traj.g[:, i], lw=1.5, label=labels[i])
    if law is not None:
        g0 = traj.g[0]
        for i in range(4):
            pred = [g0[i] * law.base(float(s)) ** law.exponents[i] for s in traj.t]
            ax.plot(traj.t, pred, "k--", lw=0.8)
    ax.set_yscale("log")
    ax.set_xlabel("t")
    ax.set_ylabel("metric component")
    ax.set_title(f"{traj.geometry} flow ({traj.method}, {traj.status})")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path
