#include "sqmat/cli/format.hpp"

#include <cmath>

namespace sqmat::io {

namespace {

bool is_quaternion(const Json& j) {
  if (!j.is_array() || j.size() != 4) return false;
  for (const auto& e : j)
    if (!e.is_number()) return false;
  return true;
}

bool is_matrix(const Json& j) {
  return j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries");
}

std::string scalar_text(const Json& j) {
  if (j.is_number_float()) return format_number(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(const Json& j, const std::string& label, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (is_matrix(j)) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    out += pad + label + " (" + std::to_string(rows) + "x" + std::to_string(cols) + "):\n";
    const Json& e = j.at("entries");
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t c = 0; c < cols; ++c)
        out += pad + "  [" + std::to_string(i) + "," + std::to_string(c) + "] " +
               quaternion_text(scalar_from_json(e[i * cols + c])) + "\n";
    return;
  }
  if (label == "matrix" && j.is_array()) {
    out += pad + label + ":\n";
    for (const auto& row : j) {
      std::string line;
      for (const auto& e : row) line += (line.empty() ? "" : " ") + scalar_text(e);
      out += pad + "  " + line + "\n";
    }
    return;
  }
  if (is_quaternion(j)) {
    out += pad + label + ": " + quaternion_text(scalar_from_json(j)) + "\n";
    return;
  }
  if (j.is_object()) {
    if (!label.empty()) out += pad + label + ":\n";
    const int next = label.empty() ? depth : depth + 1;
    for (const auto& [key, value] : j.items()) render(value, key, next, out);
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& e : j) flat = flat && e.is_primitive();
    if (flat) {
      std::string line;
      for (const auto& e : j) line += (line.empty() ? "" : " ") + scalar_text(e);
      out += pad + label + ": " + line + "\n";
      return;
    }
    out += pad + label + ":\n";
    for (std::size_t t = 0; t < j.size(); ++t) render(j[t], "[" + std::to_string(t) + "]", depth + 1, out);
    return;
  }
  out += pad + label + ": " + scalar_text(j) + "\n";
}

}  // namespace

std::string quaternion_text(const SplitQuaternion& q) {
  std::string s = format_number(q.q0);
  const std::pair<double, const char*> terms[] = {{q.q1, "i"}, {q.q2, "j"}, {q.q3, "k"}};
  for (const auto& [v, unit] : terms) {
    const std::string mag = format_number(std::abs(v));
    s += (v < 0.0 && mag != "0") ? " - " : " + ";
    s += mag + " " + unit;
  }
  return s;
}

std::string render_text(const Json& report) {
  std::string out;
  render(report, "", 0, out);
  return out;
}

}  // namespace sqmat::io
