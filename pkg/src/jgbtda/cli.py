"""Command-line driver: ``jgbtda parse|analyze|compare|barcode``.

Exit codes: 0 success, 1 usage, 2 parse error, 3 analysis error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .config import FORMATS, AnalysisConfig
from .network import METRIC_MODES, build_network
from .notation import ParseError, parse_score, total_duration
from .overlap import NS_MODES
from .report import (analyze_matrix, analyze_score, barcode_text, comparison_csv, comparison_text,
                     node_catalog, read_matrix, write_report)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_ANALYSIS = 0, 1, 2, 3
MATRIX_SUFFIXES = (".dist", ".csv")

log = logging.getLogger("jgbtda")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _formats(value: str) -> tuple[str, ...]:
    items = tuple(x for x in value.replace(",", " ").split() if x)
    bad = [x for x in items if x not in FORMATS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown formats {bad}; choose from {list(FORMATS)}")
    return items


def _add_analysis_options(p: argparse.ArgumentParser):
    p.add_argument("--config", type=Path, help="JSON config file; flags override it")
    p.add_argument("--s", dest="overlap_scale", type=int, help="overlap matrix scale (default 4)")
    p.add_argument("--metric", dest="metric_mode", choices=METRIC_MODES)
    p.add_argument("--max-dim", dest="max_dim", type=int, choices=range(0, 4))
    p.add_argument("--max-filtration", dest="max_filtration", type=float)
    p.add_argument("--ingeojil", dest="ingeojil_short", type=Fraction,
                   help="short-note length of ingeojil, e.g. 1/6")
    p.add_argument("--ns-mode", dest="ns_mode", choices=NS_MODES)
    p.add_argument("--loose", dest="loose_occurrences", action="store_true", default=None,
                   help="also report set-run occurrences (same notes, any order)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jgbtda", description="Persistent-homology cycle analysis of Jeongganbo scores.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("parse", help="print the resolved note events and node catalog")
    p.add_argument("file", type=Path)
    p.add_argument("--ingeojil", dest="ingeojil_short", type=Fraction, default=Fraction(1, 6))

    p = sub.add_parser("analyze", help="run the full pipeline and write all reports")
    p.add_argument("file", type=Path)
    p.add_argument("--matrix", action="store_true", help="input is a CSV dissimilarity matrix")
    p.add_argument("--out", dest="output_dir", type=str)
    p.add_argument("--formats", type=_formats, help=f"subset of {','.join(FORMATS)}")
    _add_analysis_options(p)

    p = sub.add_parser("compare", help="one row of cycle statistics per piece")
    p.add_argument("files", type=Path, nargs="+")
    p.add_argument("--csv", action="store_true", help="emit CSV instead of aligned text")
    _add_analysis_options(p)

    p = sub.add_parser("barcode", help="print intervals as 'dim birth death' lines")
    p.add_argument("file", type=Path)
    p.add_argument("--matrix", action="store_true")
    _add_analysis_options(p)
    return parser


def _config(args) -> AnalysisConfig:
    base = AnalysisConfig.load(args.config) if getattr(args, "config", None) else AnalysisConfig()
    keys = ("overlap_scale", "metric_mode", "max_dim", "max_filtration", "ingeojil_short", "ns_mode",
            "loose_occurrences", "output_dir", "formats")
    return base.with_overrides(**{k: getattr(args, k, None) for k in keys})


def _read(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def _is_matrix(args) -> bool:
    return getattr(args, "matrix", False) or args.file.suffix in MATRIX_SUFFIXES


def _analyze(path: Path, config: AnalysisConfig, matrix: bool):
    if matrix:
        return analyze_matrix(read_matrix(_read(path)), config, title=path.stem)
    score = parse_score(_read(path), config.ingeojil_short)
    report = analyze_score(score, config)
    report.title = score.title or path.stem
    return report


def cmd_parse(args) -> int:
    score = parse_score(_read(args.file), args.ingeojil_short)
    out = sys.stdout
    out.write(f"# title: {score.title}\n# jeonggan-per-column: {score.jeonggan_per_column}\n")
    out.write(f"# events: {len(score.events)}\n# total duration: {total_duration(score)}\n")
    out.write("onset\tname\tpitch\tlength\n")
    for e in score.events:
        out.write(f"{e.start_jeonggan}\t{e.pitch.name}\t{e.pitch.scientific}\t{e.duration}\n")
    if score.events:
        out.write("# nodes\nnode\tname\tpitch\tlength\n")
        for n in node_catalog(build_network(score)):
            out.write(f"n{n['id']}\t{n['name']}\t{n['pitch']}\t{n['length']}\n")
    return EXIT_OK


def cmd_analyze(args) -> int:
    config = _config(args)
    report = _analyze(args.file, config, _is_matrix(args))
    for path in write_report(report):
        log.info("wrote %s", path)
    print(f"wrote {len(config.formats)} format(s) to {config.output_dir}")
    return EXIT_OK


def cmd_barcode(args) -> int:
    report = _analyze(args.file, _config(args), _is_matrix(args))
    sys.stdout.write(barcode_text(report.intervals))
    return EXIT_OK


def cmd_compare(args) -> int:
    config = _config(args)
    rows = []
    status = EXIT_OK
    for path in args.files:
        try:
            report = _analyze(path, config, matrix=False)
            rows.append((report.title, report.comparison_row()))
        except ParseError as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            status = status or EXIT_PARSE
        except (OSError, ValueError) as exc:
            print(f"{path}: analysis error: {exc}", file=sys.stderr)
            status = status or EXIT_ANALYSIS
    sys.stdout.write(comparison_csv(rows) if args.csv else comparison_text(rows))
    return status


COMMANDS = {"parse": cmd_parse, "analyze": cmd_analyze, "compare": cmd_compare, "barcode": cmd_barcode}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"{getattr(args, 'file', '')}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS


if __name__ == "__main__":
    sys.exit(main())
