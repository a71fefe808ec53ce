#pragma once

#include <string>

#include "mtutte/constructors.hpp"
#include "mtutte/poly.hpp"

namespace mtutte {

// A parsed matroid spec file. The description is one of
//   {"type": "rank_table", "n": ..., "rank": [...]}
//   {"type": "uniform", "r": ..., "n": ...}
//   {"type": "graphic", "vertices": ..., "edges": [[u, v], ...]}
//   {"type": "integer_matrix", "matrix": [["2", "3"], ...]}
// with an optional multiplicity, one of
//   {"type": "trivial"}
//   {"type": "table", "values": ["1", "2", ...]}   (2^n decimal strings)
//   {"type": "from_matrix"}                        (integer_matrix only)
// Unknown fields are rejected. All tables are indexed by bitmask: element e
// contributes bit 2^e.
struct ParsedSpec {
  MultiplicityMatroid instance;
  std::string description_type;
  // True when every multiplicity value is 1; gates the engines that are
  // defined for plain matroids only.
  bool trivial_multiplicity = true;
};

// max_n raises or lowers the enumeration guards; it may never exceed 24.
ParsedSpec parse_spec(const std::string& json_text, int max_n = kEnumGuard);
ParsedSpec load_spec_file(const std::string& path, int max_n = kEnumGuard);

// {"terms": [{"x": i, "y": j, "c": "<decimal>"}, ...]}, ascending by (x, y).
// Coefficients travel as decimal strings: gcd-of-minors values exceed what
// native JSON numbers can carry.
std::string poly_to_json(const BivarPoly& p);
BivarPoly poly_from_json(const std::string& json_text);

}  // namespace mtutte
