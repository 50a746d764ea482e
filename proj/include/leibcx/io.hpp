#pragma once

// JSON formats: AlgebraFile, cocycle files, and report fragments. Every
// index in a file or report is 1-based; rationals are "p" or "p/q" strings.

#include <string>

#include <json.hpp>

#include "leibcx/algebra.hpp"
#include "leibcx/cochain.hpp"
#include "leibcx/sparse.hpp"
#include "leibcx/word.hpp"

namespace leibcx {

using Json = nlohmann::json;

/// Strict AlgebraFile parser. Errors are InputError messages carrying the
/// JSON pointer (or byte offset for syntax errors) of the offending value.
/// `fallback_name` is used when the document has no "name".
LeibnizAlgebra parse_algebra(const std::string& text, const std::string& fallback_name = "algebra");
/// "catalog:NAME" selects a built-in; anything else is read as a file.
LeibnizAlgebra load_algebra(const std::string& source);
Json algebra_to_json(const LeibnizAlgebra& a);

/// {"degree": 2, "coefficients": [[[i,j,k], "p/q"], ...]}; omitted words are zero.
Cochain parse_cochain(const std::string& text, int alphabet);
Cochain load_cochain(const std::string& path, int alphabet);
Json cochain_to_json(const Cochain& c);

Json tensor_to_json(const TensorElement& t);
/// {"rows", "cols", "entries": [[row, col, "p/q"], ...]}
Json matrix_to_json(const SparseMatrix& m);
Json vector_to_json(const Vector& v);

std::string read_file(const std::string& path);
std::string sha256_hex(const std::string& bytes);

}  // namespace leibcx
