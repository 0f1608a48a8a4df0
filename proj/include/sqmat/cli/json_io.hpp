#pragma once

// JSON wire format.
//   scalar:  [q0, q1, q2, q3]
//   matrix:  {"rows": m, "cols": n, "entries": [[q0, q1, q2, q3], ...]}  (row-major, m*n entries)
//   problem: {"A": matrix, "B": matrix, "C": matrix}
// Schema violations throw Error(ErrorKind::Parse).

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sqmat/densemat.hpp"
#include "sqmat/stein.hpp"

namespace sqmat::io {

using Json = nlohmann::ordered_json;

Json load_json(const std::filesystem::path& path);

SplitQuaternion scalar_from_json(const Json& j);
SQMatrix matrix_from_json(const Json& j);
stein::SteinProblem problem_from_json(const Json& j);

Json to_json(const SplitQuaternion& q);
Json to_json(const SQMatrix& a);
Json to_json(const RealMatrix& a);

/// Pretty printer: two-space indent, arrays of scalars kept on one line,
/// doubles with 12 significant digits and "-0" written as "0".
std::string dump(const Json& j);
std::string format_number(double v);

}  // namespace sqmat::io
