#pragma once

// JSON Schema of the reports printed with --json. docs/report.schema.json
// is a copy of this text and is checked against it by the test suite.

namespace hfs::cli {

inline constexpr const char* report_schema = R"json({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "$id": "hfseifert/report",
  "title": "hfseifert report",
  "description": "Rationals and big integers are strings of the form \"p/q\" or \"n\".",
  "type": "object",
  "required": ["schema_version", "command", "input"],
  "properties": {
    "schema_version": {"const": "1.0"},
    "command": {"enum": ["lspace", "dinv", "tight", "d3", "alexander", "torus", "critical", "classify"]},
    "input": {"type": "string"},
    "exit_code": {"type": "integer", "description": "present in --batch output only"},
    "error": {
      "type": "object",
      "required": ["kind", "message"],
      "properties": {
        "kind": {"enum": ["parse", "domain", "unsupported", "invariant", "internal"]},
        "message": {"type": "string"}
      }
    },
    "normalized": {"$ref": "#/$defs/seifert"},
    "e": {"$ref": "#/$defs/rational"},
    "h1": {"$ref": "#/$defs/integer"}
  },
  "allOf": [
    {"if": {"properties": {"command": {"const": "lspace"}}, "not": {"required": ["error"]}},
     "then": {"required": ["normalized", "e", "h1", "verdict", "is_lspace", "reason", "witnesses"],
              "properties": {"verdict": {"type": "boolean"}, "is_lspace": {"type": "boolean"},
                             "reason": {"$ref": "#/$defs/reason"},
                             "witnesses": {"$ref": "#/$defs/witnesses"},
                             "transverse_contact": {"type": ["object", "null"]},
                             "transverse_foliation": {"type": ["boolean", "null"]}}}},
    {"if": {"properties": {"command": {"const": "dinv"}}, "not": {"required": ["error"]}},
     "then": {"required": ["normalized", "table"], "properties": {"table": {"$ref": "#/$defs/dtable"}}}},
    {"if": {"properties": {"command": {"const": "tight"}}, "not": {"required": ["error"]}},
     "then": {"required": ["normalized", "candidate_count", "verdict_counts", "candidates"],
              "properties": {"candidates": {"type": "array", "items": {"$ref": "#/$defs/certificate"}}}}},
    {"if": {"properties": {"command": {"const": "d3"}}, "not": {"required": ["error"]}},
     "then": {"required": ["components", "c2", "signature", "det", "b2", "q", "d3"],
              "properties": {"d3": {"$ref": "#/$defs/rational"}, "c2": {"$ref": "#/$defs/rational"}}}},
    {"if": {"properties": {"command": {"const": "alexander"}}, "not": {"required": ["error"]}},
     "then": {"required": ["p", "q", "n", "coefficients", "delta_at_one", "torsion"]}},
    {"if": {"properties": {"command": {"const": "torus"}}, "not": {"required": ["error"]}},
     "then": {"required": ["normalized", "torus_route", "plumbing_route", "multiset_match"]}},
    {"if": {"properties": {"command": {"const": "critical"}}, "not": {"required": ["error"]}},
     "then": {"required": ["p", "n", "spin_d", "torus_route", "plumbing_route", "multiset_match",
                           "classification", "nonzero_candidates", "spin_label_excluded"],
              "properties": {"plumbing_route": {"$ref": "#/$defs/dtable"},
                             "classification": {"$ref": "#/$defs/classification"}}}},
    {"if": {"properties": {"command": {"const": "classify"}}, "not": {"required": ["error"]}},
     "then": {"$ref": "#/$defs/classification"}}
  ],
  "$defs": {
    "rational": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
    "integer": {"type": "string", "pattern": "^-?[0-9]+$"},
    "label": {"type": "string", "pattern": "^\\(([0-9]+(,[0-9]+)*)?\\)$"},
    "reason": {"enum": ["E0Shortcut", "LensSpace", "TransverseBothSides",
                        "NoTransverseOnSide(+)", "NoTransverseOnSide(-)"]},
    "seifert": {
      "type": "object",
      "required": ["text", "e0", "r"],
      "properties": {"text": {"type": "string"}, "e0": {"$ref": "#/$defs/integer"},
                     "r": {"type": "array", "items": {"$ref": "#/$defs/rational"}}}
    },
    "witness": {"type": ["object", "null"], "required": ["m", "a"]},
    "witnesses": {"type": "object", "required": ["positive", "negative"],
                  "properties": {"positive": {"$ref": "#/$defs/witness"},
                                 "negative": {"$ref": "#/$defs/witness"}}},
    "dtable": {
      "type": "object",
      "required": ["orientation", "plumbing_boundary", "plumbing", "group", "size", "values"],
      "properties": {
        "orientation": {"enum": ["boundary", "reversed"]},
        "group": {"type": "array", "items": {"type": "integer"}},
        "values": {"type": "array", "items": {
          "type": "object",
          "required": ["label", "d", "conjugate", "self_conjugate", "maximizer"],
          "properties": {"label": {"$ref": "#/$defs/label"}, "d": {"$ref": "#/$defs/rational"},
                         "conjugate": {"$ref": "#/$defs/label"}, "self_conjugate": {"type": "boolean"},
                         "maximizer": {"type": "array", "items": {"$ref": "#/$defs/integer"}}}}}
      }
    },
    "certificate": {
      "type": "object",
      "required": ["id", "conjugate_id", "choice", "d3", "verdict"],
      "properties": {
        "d3": {"$ref": "#/$defs/rational"},
        "verdict": {"enum": ["Nonzero", "Inconclusive", "Ambiguous", "NotApplicable"]},
        "orbit": {"type": "array", "items": {"$ref": "#/$defs/label"}},
        "orbit_d": {"type": "array", "items": {"$ref": "#/$defs/rational"}},
        "orbit_has_spin": {"type": "boolean"}
      }
    },
    "classification": {
      "type": "object",
      "required": ["normalized", "e", "h1", "lspace", "zero_twisting", "family_exhaustive",
                   "candidates_enumerated", "candidate_count", "verdict_counts", "candidates",
                   "summary", "planarity", "notes"],
      "properties": {
        "candidates": {"type": "array", "items": {"$ref": "#/$defs/certificate"}},
        "planarity": {"type": "object",
                      "required": ["zero_twisting_tight_planar", "all_planar_on_M", "all_planar_on_minus_M"]}
      }
    }
  }
})json";

}  // namespace hfs::cli
