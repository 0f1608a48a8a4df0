#include "sqmat/cli/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sqmat::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

double number_at(const Json& j, const char* where) {
  if (!j.is_number()) schema_error(std::string(where) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_error(std::string(where) + ": non-finite number");
  return v;
}

std::size_t dimension_at(const Json& j, const char* key) {
  if (!j.contains(key)) schema_error(std::string("matrix: missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    schema_error(std::string("matrix: \"") + key + "\" must be a positive integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

bool scalar_array(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j)
    if (!e.is_primitive() || e.is_string()) return false;
  return true;
}

void dump_into(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(key).dump() + ": ";
        dump_into(value, indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (scalar_array(j)) {
        out += "[";
        for (std::size_t t = 0; t < j.size(); ++t) {
          if (t) out += ", ";
          dump_into(j[t], indent + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t t = 0; t < j.size(); ++t) {
        if (t) out += ",\n";
        out += inner;
        dump_into(j[t], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(path.string() + ": " + e.what());
  }
}

SplitQuaternion scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) schema_error("scalar: expected an array of four numbers");
  return {number_at(j[0], "scalar"), number_at(j[1], "scalar"), number_at(j[2], "scalar"),
          number_at(j[3], "scalar")};
}

SQMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) schema_error("matrix: expected an object");
  const std::size_t rows = dimension_at(j, "rows");
  const std::size_t cols = dimension_at(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array()) schema_error("matrix: missing \"entries\" array");
  const Json& entries = j.at("entries");
  if (entries.size() != rows * cols) {
    schema_error("matrix: expected " + std::to_string(rows * cols) + " entries, got " +
                 std::to_string(entries.size()));
  }
  std::vector<SplitQuaternion> values;
  values.reserve(entries.size());
  for (const auto& e : entries) values.push_back(scalar_from_json(e));
  return SQMatrix(rows, cols, std::move(values));
}

stein::SteinProblem problem_from_json(const Json& j) {
  if (!j.is_object()) schema_error("problem: expected an object");
  for (const char* key : {"A", "B", "C"})
    if (!j.contains(key)) schema_error(std::string("problem: missing \"") + key + "\"");
  return {matrix_from_json(j.at("A")), matrix_from_json(j.at("B")), matrix_from_json(j.at("C"))};
}

Json to_json(const SplitQuaternion& q) { return Json::array({q.q0, q.q1, q.q2, q.q3}); }

Json to_json(const SQMatrix& a) {
  Json entries = Json::array();
  for (const auto& q : a.entries()) entries.push_back(to_json(q));
  Json out;
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const RealMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") return "0";
  return s;
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += "\n";
  return out;
}

}  // namespace sqmat::io
