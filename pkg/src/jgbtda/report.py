"""End-to-end pipeline and file exports.

``analyze_score`` runs parse output through network, distances,
persistence, cycles and overlap, producing an :class:`AnalysisReport`;
``write_report`` turns it into the JSON/CSV/SVG/text files.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import svg
from .config import CONFIG_SCHEMA_VERSION, AnalysisConfig
from .cycles import Cycle, extract_cycles, summarize_cycles
from .homology import PersistenceInterval, build_filtration, compute_persistence
from .network import (DissimilarityMatrix, MusicGraph, build_network, cycles_per_node,
                      distance_matrix, frequency_table)
from .notation import Score, total_duration
from .overlap import OccurrenceEvent, OverlapMatrix, find_full_occurrences, overlap_matrix, overlap_stats

__all__ = [
    "SCHEMA_VERSION",
    "COMPARISON_COLUMNS",
    "AnalysisReport",
    "AnalysisError",
    "analyze_score",
    "analyze_matrix",
    "read_matrix",
    "write_report",
    "barcode_text",
    "comparison_csv",
    "comparison_text",
]

SCHEMA_VERSION = "1.0"
COMPARISON_COLUMNS = ("# of cycles", "Average node #", "Average weight", "Occurrence/Cycle",
                      "Denseness", "Overlap (%)")


class AnalysisError(ValueError):
    """A pipeline stage failed; ``stage`` names the module that raised."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause


class _Stage:
    def __init__(self, name: str):
        self.name = name

    def __enter__(self):
        return self

    def __exit__(self, kind, exc, tb):
        if isinstance(exc, ValueError) and not isinstance(exc, AnalysisError):
            raise AnalysisError(self.name, exc) from exc
        return False


@dataclass
class AnalysisReport:
    config: AnalysisConfig
    kind: str  # "score" or "matrix"
    intervals: list[PersistenceInterval]
    title: str = ""
    score: Score | None = None
    graph: MusicGraph | None = None
    distances: DissimilarityMatrix | None = None
    matrix: np.ndarray | None = None
    cycles: list[Cycle] = field(default_factory=list)
    occurrences: list[OccurrenceEvent] = field(default_factory=list)
    overlap: OverlapMatrix | None = None

    def comparison_row(self) -> tuple:
        """Cycle count, mean node count, mean weight, occurrences per cycle, denseness, overlap %."""
        if self.kind != "score":
            raise ValueError("comparison statistics need a score")
        n = len(self.cycles)
        stats = overlap_stats(self.overlap)
        strict = [e for e in self.occurrences if e.kind != "set-run"]
        if n:
            summary = summarize_cycles(self.cycles)
            avg_nodes, avg_weight = summary.average_node_number, summary.average_weight
        else:
            avg_nodes = avg_weight = 0.0
        return (n, avg_nodes, avg_weight, len(strict) / n if n else 0.0,
                stats.denseness, stats.overlap_percent[self.config.ns_mode])

    def to_dict(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "title": self.title,
            "config": self.config.to_dict(),
            "barcode": _barcode_dict(self.intervals),
        }
        if self.kind == "matrix":
            out["matrix"] = {"size": int(self.matrix.shape[0]),
                             "values": [[float(x) for x in row] for row in self.matrix]}
            return out
        stats = overlap_stats(self.overlap)
        out.update({
            "score": {
                "title": self.score.title,
                "jeonggan_per_column": self.score.jeonggan_per_column,
                "event_count": len(self.score.events),
                "total_duration": str(total_duration(self.score)),
            },
            "nodes": node_catalog(self.graph),
            "frequency": [
                {"rank": r, "node": n, "count": c, "log10_count": lc}
                for (r, n, c), (_, lc) in zip(frequency_table(self.graph).rows,
                                              frequency_table(self.graph).log_points())
            ],
            "edges": [{"u": i, "v": j, "weight": w} for i, j, w in self.graph.edges()],
            "distance": distance_dict(self.distances),
            "cycles": [cycle_dict(c, self.graph) for c in self.cycles],
            "cycles_per_node": {str(k): v for k, v in cycles_per_node(self.graph, self.cycles).items()},
            "occurrences": [
                {"cycle": e.cycle_number, "start": e.start_position, "length": e.length, "kind": e.kind}
                for e in self.occurrences
            ],
            "overlap": {
                "s": self.overlap.s,
                "cycle_numbers": list(self.overlap.cycle_numbers),
                "matrix": self.overlap.m.astype(int).tolist(),
                "stats": stats_dict(stats),
            },
            "comparison": {"columns": list(COMPARISON_COLUMNS), "row": list(self.comparison_row())},
        })
        return out


def analyze_score(score: Score, config: AnalysisConfig = AnalysisConfig()) -> AnalysisReport:
    with _Stage("network"):
        graph = build_network(score)
        dist = distance_matrix(graph, config.metric_mode)
    with _Stage("homology"):
        filtration = build_filtration(dist, config.max_dim, config.max_filtration)
        intervals = compute_persistence(filtration)
    with _Stage("cycles"):
        cycles = extract_cycles(intervals, graph, dist)
    with _Stage("overlap"):
        occurrences = []
        for c in cycles:
            occurrences.extend(find_full_occurrences(c, graph, loose=config.loose_occurrences))
        occurrences.sort(key=lambda e: (e.start_position, e.cycle_number, e.length))
        om = overlap_matrix(cycles, graph, config.overlap_scale)
    return AnalysisReport(config, "score", intervals, score.title, score, graph, dist,
                          cycles=cycles, occurrences=occurrences, overlap=om)


def analyze_matrix(matrix, config: AnalysisConfig = AnalysisConfig(), title: str = "") -> AnalysisReport:
    with _Stage("homology"):
        m = np.asarray(matrix, dtype=float)
        filtration = build_filtration(m, config.max_dim, config.max_filtration)
        intervals = compute_persistence(filtration)
    return AnalysisReport(config, "matrix", intervals, title, matrix=m)


def read_matrix(text: str) -> np.ndarray:
    """Parse a CSV dissimilarity matrix; ``#`` starts a comment line."""
    rows = [r for r in csv.reader(line for line in text.splitlines()
                                  if line.strip() and not line.lstrip().startswith("#"))]
    try:
        return np.array([[float(x) for x in r] for r in rows], dtype=float)
    except ValueError as exc:
        raise ValueError(f"bad matrix entry: {exc}") from None


def _fmt_death(x: float) -> str:
    return "inf" if math.isinf(x) else repr(float(x))


def _barcode_dict(intervals: Sequence[PersistenceInterval]) -> dict:
    out: dict[str, list] = {}
    for iv in intervals:
        out.setdefault(str(iv.dimension), []).append(
            [iv.birth, None if iv.is_essential else iv.death])
    return out


def barcode_text(intervals: Sequence[PersistenceInterval]) -> str:
    return "".join(f"{iv.dimension} {float(iv.birth)!r} {_fmt_death(iv.death)}\n" for iv in intervals)


def node_catalog(graph: MusicGraph) -> list[dict]:
    return [{"id": i, "name": n.pitch.name, "token": n.pitch.token, "pitch": n.pitch.scientific,
             "length": str(n.length)} for i, n in enumerate(graph.nodes)]


def distance_dict(dist: DissimilarityMatrix) -> dict:
    n = len(dist)
    return {
        "mode": dist.mode,
        "nodes": list(range(n)),
        "values": [[float(x) for x in row] for row in dist.values],
        "exact": [[str(x) for x in row] for row in dist.values],
    }


def cycle_dict(c: Cycle, graph: MusicGraph) -> dict:
    def node(i):
        n = graph.nodes[i]
        return {"id": i, "name": n.pitch.name, "pitch": n.pitch.scientific, "length": str(n.length)}

    return {
        "number": c.number,
        "interval": [c.birth, None if math.isinf(c.death) else c.death],
        "node_loop": [node(i) for i in c.node_loop],
        "edges": [{"u": e.u, "v": e.v, "weight": e.weight, "distance": float(e.distance),
                   "distance_exact": str(e.distance)} for e in c.edges],
        "node_count": c.node_count,
        "average_weight": c.average_weight,
    }


def stats_dict(stats) -> dict:
    return {"A_c": stats.A_c, "A_f": stats.A_f, "denseness": stats.denseness, "N_c": stats.N_c,
            "N_s": dict(stats.N_s), "overlap_percent": dict(stats.overlap_percent)}


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False, allow_nan=False) + "\n"


def comparison_csv(rows: Sequence[tuple[str, tuple]]) -> str:
    return _csv([("piece", *COMPARISON_COLUMNS)] + [(name, *vals) for name, vals in rows])


def comparison_text(rows: Sequence[tuple[str, tuple]]) -> str:
    header = ("piece", *COMPARISON_COLUMNS)
    body = [(name, str(v[0]), f"{v[1]:.5g}", f"{v[2]:.6g}", f"{v[3]:.5g}", f"{v[4]:.5f}", f"{v[5]:.5f}")
            for name, v in rows]
    widths = [max(len(r[k]) for r in [header, *body]) for k in range(len(header))]
    lines = ["  ".join(cell.ljust(widths[k]) if k == 0 else cell.rjust(widths[k])
                       for k, cell in enumerate(row)).rstrip() for row in [header, *body]]
    return "\n".join(lines) + "\n"


def render_files(report: AnalysisReport) -> dict[str, str]:
    """Every export of a report, keyed by file name, filtered by configured formats."""
    fmts = set(report.config.formats)
    files: dict[str, tuple[str, str]] = {}
    title = report.title or "untitled"
    reported = list(report.intervals)

    files["report.json"] = ("json", _json(report.to_dict()))
    files["config.json"] = ("json", _json({"schema_version": CONFIG_SCHEMA_VERSION,
                                           **report.config.to_dict()}))
    files["barcode.txt"] = ("text", barcode_text(reported))
    files["diagram.csv"] = ("csv", _csv([("dim", "birth", "death")] + [
        (iv.dimension, repr(float(iv.birth)), _fmt_death(iv.death)) for iv in reported]))
    files["barcode.svg"] = ("svg", svg.barcode_svg(reported, f"Barcode: {title}"))

    if report.kind == "score":
        g = report.graph
        catalog = node_catalog(g)
        files["nodes.json"] = ("json", _json({"schema_version": SCHEMA_VERSION, "nodes": catalog}))
        files["nodes.csv"] = ("csv", _csv([("node", "name", "pitch", "length")] + [
            (f"n{n['id']}", n["name"], n["pitch"], n["length"]) for n in catalog]))
        ft = frequency_table(g)
        files["frequency.csv"] = ("csv", _csv([("rank", "node", "count")] + [
            (r, f"n{n}", c) for r, n, c in ft.rows]))
        files["frequency.svg"] = ("svg", svg.frequency_svg(ft.log_points(), f"Frequency vs rank: {title}"))
        dd = distance_dict(report.distances)
        files["distance.json"] = ("json", _json({"schema_version": SCHEMA_VERSION, **dd}))
        files["distance.csv"] = ("csv", _csv([("", *[f"n{i}" for i in dd["nodes"]])] + [
            (f"n{i}", *[repr(x) for x in row]) for i, row in enumerate(dd["values"])]))
        files["cycles.json"] = ("json", _json({
            "schema_version": SCHEMA_VERSION,
            "cycles": [cycle_dict(c, g) for c in report.cycles],
            "summary": _summary_dict(report.cycles),
        }))
        files["occurrences.csv"] = ("csv", _csv([("cycle", "start", "length", "kind")] + [
            (e.cycle_number, e.start_position, e.length, e.kind) for e in report.occurrences]))
        numbers = [c.number for c in report.cycles]
        files["occurrences.svg"] = ("svg", svg.timeline_svg(report.occurrences, numbers,
                                                            len(g.node_sequence), f"Full occurrences: {title}"))
        om = report.overlap
        files["overlap.csv"] = ("csv", _csv([("cycle", *range(om.m.shape[1]))] + [
            (n, *row) for n, row in zip(om.cycle_numbers, om.m.astype(int).tolist())]))
        files["overlap_stats.json"] = ("json", _json({
            "schema_version": SCHEMA_VERSION, "s": om.s, **stats_dict(overlap_stats(om))}))
        files["overlap.svg"] = ("svg", svg.overlap_svg(om, f"Overlap matrix on {om.s}-scale: {title}"))
        rows = [(title, report.comparison_row())]
        files["comparison.csv"] = ("csv", comparison_csv(rows))
        files["comparison.txt"] = ("text", comparison_text(rows))
    return {name: body for name, (fmt, body) in files.items() if fmt in fmts}


def _summary_dict(cycles: Sequence[Cycle]) -> dict | None:
    if not cycles:
        return None
    s = summarize_cycles(cycles)
    return {"cycle_count": s.cycle_count, "average_node_number": s.average_node_number,
            "average_weight": s.average_weight}


def write_report(report: AnalysisReport, output_dir=None) -> list[Path]:
    out = Path(output_dir if output_dir is not None else report.config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, body in sorted(render_files(report).items()):
        path = out / name
        path.write_text(body, encoding="utf-8", newline="\n")
        written.append(path)
    return written
