#pragma once

#include <string>

#include <json.hpp>

#include "aralg/ar.hpp"
#include "aralg/repetitive.hpp"

namespace aralg::io {

using json = nlohmann::ordered_json;

// Matrices are row-major arrays of scalar strings ("3/2", "4").
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols);

// Two accepted forms:
//   {"field": "Q", "quiver": {"vertices": [...], "arrows": [{"name","source","target"}]},
//    "relations": [[{"coefficient": "1", "path": ["a","b"]}, ...], ...], "nilpotency_bound": 3}
//   {"field": "Fp:5", "structure": {"labels", "vertices", "idempotents", "left", "right",
//    "table": [[[...]]], "unit", "radical"}}
// Throws ParseError on malformed input and InvalidAlgebra when the data fail validation.
AlgebraPtr algebra_from_json(const json& j);
AlgebraPtr load_algebra(const std::string& path);
// Structure-constant form; algebra_from_json(algebra_to_json(a)) reproduces the constants.
json algebra_to_json(const Algebra& a);

// Module descriptors: a curated name ("S1", "radP1"), "S:v" / "P:v" / "I:v" with a vertex
// name, "A" / "DA", or an object {"dims": [...], "arrows": {"a": [[...]]}} or
// {"dim": n, "actions": [[[...]]]} (one matrix per basis element).
Module module_from_json(const json& j, const AlgebraPtr& a);
json module_to_json(const Module& m, bool matrices);

json ses_to_json(const ShortExactSequence& s, bool matrices);
json certificate_to_json(const AlmostSplitCertificate& c, bool matrices);
json complex_to_json(const Complex& x, bool matrices);
json triangle_to_json(const Triangle& t, bool matrices);
json happel_to_json(const HappelReport& r);
json six_term_to_json(const SixTermReport& r);

// Nodes labelled by dimension vectors.
std::string quiver_to_dot(const QuiverFragment& q);

}  // namespace aralg::io
