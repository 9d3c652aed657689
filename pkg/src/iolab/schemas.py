"""JSON Schema documents for everything the command line emits."""

from __future__ import annotations

_INTERVAL = {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2}
_LABELS = {"type": "array", "items": {"type": ["string", "integer"]}}

AMCHAIN = {
    "type": "object",
    "required": ["antichains", "membership"],
    "additionalProperties": False,
    "properties": {
        "antichains": {"type": "array", "items": _LABELS},
        "membership": {"type": "object", "additionalProperties": _INTERVAL},
    },
}

REPRESENTATION = {
    "type": "object",
    "required": ["chain_length", "intervals"],
    "additionalProperties": False,
    "properties": {
        "chain_length": {"type": "integer", "minimum": 0},
        "intervals": {"type": "object", "additionalProperties": _INTERVAL},
    },
}

DECOMPOSITION = {
    "type": "object",
    "required": ["index_kind", "index_size", "components", "singular_indices"],
    "properties": {
        "index_kind": {"enum": ["chain", "antichain", "prime"]},
        "index_size": {"type": "integer", "minimum": 2},
        "components": {"type": "array", "items": _LABELS},
        "singular_indices": {"type": "array", "items": {"type": "integer"}},
    },
}

MODULE_TREE = {
    "$defs": {
        "node": {
            "type": "object",
            "required": ["vertices", "kind", "children"],
            "properties": {
                "vertices": _LABELS,
                "kind": {"enum": ["prime", "chain", "antichain", "complete", "leaf"]},
                "children": {"type": "array", "items": {"$ref": "#/$defs/node"}},
                "decomposition": DECOMPOSITION,
            },
        }
    },
    "$ref": "#/$defs/node",
}

CHECK = {
    "type": "object",
    "required": ["interval_order", "witness"],
    "properties": {
        "interval_order": {"type": "boolean"},
        "witness": {"oneOf": [{"type": "null"}, {"type": "array", "items": {"type": "string"}, "minItems": 4, "maxItems": 4}]},
    },
}

SINGULARS = {
    "type": "object",
    "required": ["singular"],
    "properties": {"singular": _LABELS},
}

ORACLE = {
    "type": "object",
    "required": ["property", "sets"],
    "properties": {
        "property": {"enum": ["modules", "strong_modules", "maximal_antichains"]},
        "sets": {"type": "array", "items": _LABELS},
        "strong": {"type": "array", "items": _LABELS},
        "prime": {"type": "boolean"},
    },
}

VERIFY = {
    "type": "object",
    "required": ["ok", "checks"],
    "properties": {
        "ok": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status"],
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "skip"]},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}
