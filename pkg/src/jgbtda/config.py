"""Analysis configuration, serializable to a single JSON file."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, fields, replace
from fractions import Fraction
from pathlib import Path

from .network import METRIC_MODES
from .notation import DEFAULT_INGEOJIL_SHORT, on_sixth_grid
from .overlap import NS_MODES

__all__ = ["AnalysisConfig", "FORMATS"]

FORMATS = ("json", "csv", "svg", "text")
CONFIG_SCHEMA_VERSION = "1.0"


@dataclass(frozen=True)
class AnalysisConfig:
    metric_mode: str = "min-hop"
    max_dim: int = 3
    max_filtration: float = 2.0
    overlap_scale: int = 4
    ingeojil_short: Fraction = DEFAULT_INGEOJIL_SHORT
    ns_mode: str = "run-pairs"
    output_dir: str = "out"
    formats: tuple[str, ...] = FORMATS
    loose_occurrences: bool = False

    def __post_init__(self):
        object.__setattr__(self, "ingeojil_short", Fraction(self.ingeojil_short))
        object.__setattr__(self, "formats", tuple(self.formats))
        if self.metric_mode not in METRIC_MODES:
            raise ValueError(f"metric_mode must be one of {METRIC_MODES}")
        if not 0 <= self.max_dim <= 3:
            raise ValueError("max_dim must be in [0, 3]")
        if not self.max_filtration > 0:
            raise ValueError("max_filtration must be positive")
        if self.overlap_scale < 1:
            raise ValueError("overlap_scale must be >= 1")
        if self.ingeojil_short <= 0 or not on_sixth_grid(self.ingeojil_short):
            raise ValueError("ingeojil_short must be a positive multiple of 1/6")
        if self.ns_mode not in NS_MODES:
            raise ValueError(f"ns_mode must be one of {NS_MODES}")
        bad = set(self.formats) - set(FORMATS)
        if bad:
            raise ValueError(f"unknown formats {sorted(bad)}; choose from {FORMATS}")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ingeojil_short"] = str(self.ingeojil_short)
        d["formats"] = list(self.formats)
        if math.isinf(self.max_filtration):
            d["max_filtration"] = None  # JSON has no infinity
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisConfig":
        known = {f.name for f in fields(cls)} | {"schema_version"}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys {sorted(unknown)}")
        data = {k: v for k, v in data.items() if k != "schema_version"}
        if data.get("max_filtration", 0) is None:
            data["max_filtration"] = math.inf
        if "ingeojil_short" in data:
            data["ingeojil_short"] = Fraction(str(data["ingeojil_short"]))
        return cls(**data)

    @classmethod
    def load(cls, path) -> "AnalysisConfig":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))

    def save(self, path):
        data = {"schema_version": CONFIG_SCHEMA_VERSION, **self.to_dict()}
        Path(path).write_text(json.dumps(data, indent=2) + "\n",
                              encoding="utf-8")

    def with_overrides(self, **changes) -> "AnalysisConfig":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
