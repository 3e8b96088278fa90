"""JSON Schemas (draft 2020-12) for the ``--format json`` output of each CLI subcommand.

The package does not validate its own output at run time; these documents
are the published contract that consumers and the test suite check against.
"""

_INT_LIST = {"type": "array", "items": {"type": "integer", "minimum": 1}}

LAURENT = {
    "type": "object",
    "propertyNames": {"pattern": "^-?[0-9]+$"},
    "additionalProperties": {"type": "integer", "not": {"const": 0}},
}

MINOR = {
    "type": "object",
    "required": ["rows", "cols"],
    "properties": {"rows": _INT_LIST, "cols": _INT_LIST},
    "additionalProperties": False,
}

_TERM = {
    "type": "object",
    "required": ["coeff", "factors"],
    "properties": {"coeff": LAURENT, "factors": {"type": "array", "items": MINOR, "minItems": 1}},
    "additionalProperties": False,
}

NORMALFORM = {
    "type": "object",
    "required": ["n", "terms", "text"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["word", "coeff"],
                "properties": {
                    "word": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}},
                    "coeff": LAURENT,
                },
                "additionalProperties": False,
            },
        },
        "text": {"type": "string"},
    },
    "additionalProperties": False,
}

RFORM = {
    "type": "object",
    "required": ["method", "left", "right", "value", "text"],
    "properties": {
        "method": {"enum": ["closed", "oracle"]},
        "left": MINOR,
        "right": MINOR,
        "value": LAURENT,
        "text": {"type": "string"},
        "factored": {
            "type": "object",
            "required": ["q", "qhat", "neg_q", "xi", "text"],
            "properties": {
                "q": {"type": "integer"},
                "qhat": {"type": "integer", "minimum": 0},
                "neg_q": {"type": "integer"},
                "xi": LAURENT,
                "text": {"type": "string"},
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

RELATION = {
    "type": "object",
    "required": ["kind", "n", "inputs", "lhs", "rhs"],
    "properties": {
        "kind": {"enum": ["T5_2", "C5_4", "T5_6", "C5_7", "T6_3", "C6_4", "E3_2", "E3_3", "E3_10", "E3_12"]},
        "n": {"type": "integer", "minimum": 1},
        "inputs": {
            "type": "object",
            "properties": {k: _INT_LIST for k in "IJMN"} | {"i": {"type": "integer"}, "j": {"type": "integer"}},
            "additionalProperties": False,
        },
        "lhs": {"type": "array", "items": _TERM},
        "rhs": {"type": "array", "items": _TERM},
        "verified": {"type": "boolean"},
    },
    "additionalProperties": False,
}

QUASI = {
    "type": "object",
    "required": ["exponent", "condition"],
    "properties": {
        "exponent": {"type": ["integer", "null"]},
        "condition": {"type": ["string", "null"]},
        "verified": {"type": "boolean"},
    },
    "additionalProperties": False,
}

_COUNTS = {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}}

VERIFY = {
    "type": "object",
    "required": ["n", "max_size", "mode", "seed", "passed", "failed", "ok", "first_failure"],
    "properties": {
        "n": {"type": "integer"},
        "max_size": {"type": "integer"},
        "mode": {"type": "string"},
        "seed": {"type": ["integer", "null"]},
        "passed": _COUNTS,
        "failed": _COUNTS,
        "ok": {"type": "boolean"},
        "first_failure": {"type": ["object", "null"]},
    },
    "additionalProperties": False,
}

POISSON = {
    "type": "object",
    "required": ["method", "terms", "text"],
    "properties": {
        "method": {"enum": ["semiclassical", "leibniz", "T7_3", "T7_4", "C7_5"]},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["monomial", "coeff"],
                "properties": {
                    "monomial": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3}},
                    "coeff": {"type": "integer", "not": {"const": 0}},
                },
                "additionalProperties": False,
            },
        },
        "text": {"type": "string"},
    },
    "additionalProperties": False,
}

SCHEMAS = {
    "normalform": NORMALFORM,
    "rform": RFORM,
    "relation": RELATION,
    "quasi": QUASI,
    "verify": VERIFY,
    "poisson": POISSON,
}
