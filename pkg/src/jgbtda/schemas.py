"""JSON Schemas (draft 2020-12) for every JSON file ``write_report`` emits.

Plain dicts, so any validator can consume them; the test-suite uses
``jsonschema``.
"""

from __future__ import annotations

__all__ = ["SCHEMAS", "REPORT_SCHEMA", "CONFIG_SCHEMA"]

_num = {"type": "number"}
_int = {"type": "integer", "minimum": 0}
_str = {"type": "string"}
_ratio = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_version = {"type": "string", "const": "1.0"}

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["metric_mode", "max_dim", "max_filtration", "overlap_scale", "ingeojil_short",
                 "ns_mode", "output_dir", "formats", "loose_occurrences"],
    "additionalProperties": False,
    "properties": {
        "schema_version": _version,
        "metric_mode": {"enum": ["min-hop", "min-cost"]},
        "max_dim": {"type": "integer", "minimum": 0, "maximum": 3},
        "max_filtration": {"type": ["number", "null"], "exclusiveMinimum": 0},
        "overlap_scale": {"type": "integer", "minimum": 1},
        "ingeojil_short": _ratio,
        "ns_mode": {"enum": ["run-pairs", "column-intervals"]},
        "output_dir": _str,
        "formats": {"type": "array", "items": {"enum": ["json", "csv", "svg", "text"]}, "uniqueItems": True},
        "loose_occurrences": {"type": "boolean"},
    },
}

_node = {
    "type": "object",
    "required": ["id", "name", "token", "pitch", "length"],
    "properties": {"id": _int, "name": _str, "token": _str, "pitch": _str, "length": _ratio},
}

_barcode = {
    "type": "object",
    "propertyNames": {"pattern": "^[0-3]$"},
    "additionalProperties": {
        "type": "array",
        "items": {"type": "array", "prefixItems": [_num, {"type": ["number", "null"]}],
                  "minItems": 2, "maxItems": 2},
    },
}

_distance = {
    "type": "object",
    "required": ["mode", "nodes", "values", "exact"],
    "properties": {
        "schema_version": _version,
        "mode": {"enum": ["min-hop", "min-cost"]},
        "nodes": {"type": "array", "items": _int},
        "values": {"type": "array", "items": {"type": "array", "items": _num}},
        "exact": {"type": "array", "items": {"type": "array", "items": _ratio}},
    },
}

_cycle = {
    "type": "object",
    "required": ["number", "interval", "node_loop", "edges", "node_count", "average_weight"],
    "properties": {
        "number": {"type": "integer", "minimum": 1},
        "interval": {"type": "array", "prefixItems": [_num, {"type": ["number", "null"]}],
                     "minItems": 2, "maxItems": 2},
        "node_loop": {"type": "array", "minItems": 3, "items": {
            "type": "object", "required": ["id", "name", "pitch", "length"]}},
        "edges": {"type": "array", "minItems": 3, "items": {
            "type": "object",
            "required": ["u", "v", "weight", "distance", "distance_exact"],
            "properties": {"u": _int, "v": _int, "weight": _int, "distance": _num,
                           "distance_exact": _ratio},
        }},
        "node_count": {"type": "integer", "minimum": 3},
        "average_weight": _num,
    },
}

_stats = {
    "type": "object",
    "required": ["A_c", "A_f", "denseness", "N_c", "N_s", "overlap_percent"],
    "properties": {
        "A_c": _int, "A_f": _int, "N_c": _int,
        "denseness": {"type": "number", "minimum": 0, "maximum": 1},
        "N_s": {"type": "object", "required": ["run-pairs", "column-intervals"]},
        "overlap_percent": {"type": "object", "required": ["run-pairs", "column-intervals"]},
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "kind", "title", "config", "barcode"],
    "properties": {
        "schema_version": _version,
        "kind": {"enum": ["score", "matrix"]},
        "title": _str,
        "config": CONFIG_SCHEMA,
        "barcode": _barcode,
        "matrix": {"type": "object", "required": ["size", "values"]},
        "score": {"type": "object",
                  "required": ["title", "jeonggan_per_column", "event_count", "total_duration"],
                  "properties": {"jeonggan_per_column": {"enum": [6, 12]}, "event_count": _int,
                                 "total_duration": _ratio}},
        "nodes": {"type": "array", "items": _node},
        "frequency": {"type": "array", "items": {
            "type": "object", "required": ["rank", "node", "count", "log10_count"]}},
        "edges": {"type": "array", "items": {
            "type": "object", "required": ["u", "v", "weight"],
            "properties": {"weight": {"type": "integer", "minimum": 1}}}},
        "distance": _distance,
        "cycles": {"type": "array", "items": _cycle},
        "cycles_per_node": {"type": "object", "additionalProperties": {"type": "array", "items": _int}},
        "occurrences": {"type": "array", "items": {
            "type": "object", "required": ["cycle", "start", "length", "kind"],
            "properties": {"kind": {"enum": ["closed", "open-chain", "set-run"]}}}},
        "overlap": {"type": "object", "required": ["s", "cycle_numbers", "matrix", "stats"],
                    "properties": {"stats": _stats}},
        "comparison": {"type": "object", "required": ["columns", "row"],
                       "properties": {"row": {"type": "array", "minItems": 6, "maxItems": 6}}},
    },
    "if": {"properties": {"kind": {"const": "score"}}},
    "then": {"required": ["score", "nodes", "frequency", "edges", "distance", "cycles", "cycles_per_node",
                          "occurrences", "overlap", "comparison"]},
    "else": {"required": ["matrix"]},
}

SCHEMAS = {
    "report.json": REPORT_SCHEMA,
    "config.json": {**CONFIG_SCHEMA, "required": ["schema_version", *CONFIG_SCHEMA["required"]]},
    "nodes.json": {"type": "object", "required": ["schema_version", "nodes"],
                   "properties": {"schema_version": _version, "nodes": {"type": "array", "items": _node}}},
    "distance.json": {**_distance, "required": ["schema_version", *_distance["required"]]},
    "cycles.json": {
        "type": "object", "required": ["schema_version", "cycles", "summary"],
        "properties": {
            "schema_version": _version,
            "cycles": {"type": "array", "items": _cycle},
            "summary": {"type": ["object", "null"],
                        "required": ["cycle_count", "average_node_number", "average_weight"]},
        },
    },
    "overlap_stats.json": {**_stats, "required": ["schema_version", "s", *_stats["required"]],
                           "properties": {**_stats["properties"], "schema_version": _version,
                                          "s": {"type": "integer", "minimum": 1}}},
}
