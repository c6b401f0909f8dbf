"""
End-to-end reports and the comparison table
===========================================

``analyze_score`` runs every stage with one configuration;
``write_report`` renders JSON, CSV, SVG and text files.  The same is
available from the shell as ``jgbtda analyze`` and ``jgbtda compare``.
"""

import tempfile
from importlib.resources import files
from pathlib import Path

from jgbtda.config import AnalysisConfig
from jgbtda.notation import parse_score
from jgbtda.report import analyze_score, comparison_text, write_report

data = files("jgbtda") / "data"
config = AnalysisConfig(overlap_scale=4)

rows = []
with tempfile.TemporaryDirectory() as tmp:
    for name in ("sample_dodeuri.jgb", "sample_taryong.jgb"):
        report = analyze_score(parse_score((data / name).read_text()), config)
        written = write_report(report, Path(tmp) / name)
        print(name, "->", ", ".join(p.name for p in written))
        rows.append((report.title, report.comparison_row()))

# %%
print(comparison_text(rows))
