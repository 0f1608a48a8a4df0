#pragma once

#include <string>

#include "sqmat/cli/json_io.hpp"

namespace sqmat::io {

/// "q0 + q1 i + q2 j + q3 k" with signed terms, e.g. "2 - 1 i - 1 j - 1 k".
std::string quaternion_text(const SplitQuaternion& q);

/// Human-readable rendering of a JSON report: one "key: value" line per
/// field; quaternion arrays and matrices are expanded.
std::string render_text(const Json& report);

}  // namespace sqmat::io
