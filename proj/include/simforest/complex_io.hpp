#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "simforest/complex.hpp"

namespace simforest {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex file format (JSON, one object per file):
//
//   {"type": "simplicial", "facets": [[1,2,3], [1,3,4], ...]}
//
//   {"type": "cell",
//    "dimension": 2,
//    "faces": {"0": ["v00", ...], "1": [...], "2": [...]},
//    "incidence": {"1": [[row, col, value], ...], "2": [...]}}
//
// Cell incidence is given as integer triplets indexing the per-grade id
// lists (row: grade k-1, col: grade k).  Parsing validates the structure
// and, for cell complexes, that consecutive incidence matrices compose to
// zero; violations raise ParseError.
Complex parse_complex_json(const std::string& text);
Complex read_complex(std::istream& in);

// Path "-" reads standard input.
Complex read_complex_file(const std::string& path);

// Canonical serialization (stable key and element order); parse followed by
// serialize is idempotent.
std::string complex_to_json(const Complex& g);
void write_complex(std::ostream& out, const Complex& g);

}  // namespace simforest
