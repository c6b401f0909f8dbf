"""Cycle structure of Jeongganbo music via persistent homology."""

from .config import AnalysisConfig
from .cycles import Cycle, CycleSetSummary, extract_cycles, summarize_cycles
from .homology import (BettiCurve, Filtration, PersistenceInterval, Simplex, betti_curve,
                       build_filtration, compute_persistence, euler_characteristic_check)
from .network import (DissimilarityMatrix, MusicGraph, Node, build_network, cycles_per_node,
                      distance_matrix, frequency_table)
from .notation import NoteEvent, ParseError, Pitch, Score, parse_score, resolve_symbol, serialize_score, total_duration
from .overlap import (OccurrenceEvent, OverlapMatrix, OverlapStats, find_full_occurrences, overlap_matrix,
                      overlap_stats)
from .report import AnalysisError, AnalysisReport, analyze_matrix, analyze_score, write_report

__version__ = "0.1.0"
