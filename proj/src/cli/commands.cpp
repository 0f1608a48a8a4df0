#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "sqmat/cli/cli.hpp"
#include "sqmat/cli/format.hpp"
#include "sqmat/cli/json_io.hpp"
#include "sqmat/densemat.hpp"
#include "sqmat/realrep.hpp"
#include "sqmat/spectral.hpp"
#include "sqmat/stein.hpp"

namespace sqmat::cli {

namespace {

using io::Json;

struct Options {
  std::string format;
  std::string output;
  std::optional<double> tol_residual;
  std::optional<double> tol_rank;
  double null_tol = 0.0;
};

/// Signals a clean non-zero exit that is not an Error (e.g. no solution).
struct ExitWith {
  int code;
  std::string message;
};

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format (json or text); default from SQMAT_FORMAT, else json")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("-o,--output", opt.output, "Write the report to this file instead of standard output");
  cmd->add_option("--tol-residual", opt.tol_residual, "Residual tolerance override")->check(CLI::PositiveNumber);
  cmd->add_option("--tol-rank", opt.tol_rank, "Rank (pivot) tolerance override")->check(CLI::PositiveNumber);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return kParseError;
    case ErrorKind::ShapeMismatch:
    case ErrorKind::NotSquare:
    case ErrorKind::ProblemTooLarge:
      return kShapeError;
    case ErrorKind::Singular:
    case ErrorKind::NullDivisor:
      return kSingular;
    default:
      return kNumericFailure;
  }
}

Json cmd_solve(const std::string& file, const Options& opt) {
  const auto prob = io::problem_from_json(io::load_json(file));
  const auto sol = stein::solve(prob, opt.tol_rank.value_or(stein::kDefaultRankTol),
                                opt.tol_residual.value_or(stein::kDefaultResidualTol));
  if (sol.uniqueness == stein::Uniqueness::NoSolution) {
    throw ExitWith{kNoSolution,
                   "no solution: inconsistent real system (Y - phi_A Y phi_B = phi_C has no solution)"};
  }
  Json report;
  report["X"] = io::to_json(*sol.x);
  report["uniqueness"] = stein::to_string(sol.uniqueness);
  report["residual"] = sol.residual;
  report["nullity"] = sol.nullity;
  return report;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

// Eigenvalue components below this (relative) level are printed as zero.
Complex chop(Complex z, double scale) {
  const double eps = 1e-13 * scale;
  return {std::abs(z.real()) <= eps ? 0.0 : z.real(), std::abs(z.imag()) <= eps ? 0.0 : z.imag()};
}

SQMatrix chop(const SQMatrix& x) {
  SQMatrix out = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      auto& q = out(i, j);
      for (double* c : {&q.q0, &q.q1, &q.q2, &q.q3})
        if (std::abs(*c) <= 1e-13) *c = 0.0;
    }
  return out;
}

Json cmd_coneig(const std::string& file, const Options& opt) {
  const SQMatrix a = io::matrix_from_json(io::load_json(file));
  const auto report = spectral::analyze(a, opt.tol_rank.value_or(spectral::kDefaultRankTol),
                                        opt.tol_residual.value_or(spectral::kDefaultVerifyTol));
  double scale = 1.0;
  for (const Complex& z : report.spectrum.values) scale = std::max(scale, std::abs(z));

  Json values = Json::array();
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    for (std::size_t t = 0; t < e.multiplicity; ++t) values.push_back(complex_json(chop(e.lambda, scale)));
    Json entry;
    entry["lambda"] = complex_json(chop(e.lambda, scale));
    entry["multiplicity"] = e.multiplicity;
    entry["status"] = e.empty_null_space ? "empty-null-space" : "verified";
    Json vectors = Json::array();
    Json residuals = Json::array();
    for (const auto& pair : e.pairs) {
      vectors.push_back(io::to_json(chop(pair.x)));
      residuals.push_back(pair.residual);
    }
    entry["coneigenvectors"] = std::move(vectors);
    entry["residuals"] = std::move(residuals);
    entries.push_back(std::move(entry));
  }
  Json out;
  out["coneigenvalues"] = std::move(values);
  out["entries"] = std::move(entries);
  out["empty_null_space_count"] = report.empty_count();
  return out;
}

Json cmd_inverse(const std::string& file) {
  const SQMatrix a = io::matrix_from_json(io::load_json(file));
  const SQMatrix inv = inverse(a);
  Json report;
  report["inverse"] = io::to_json(inv);
  report["residual"] = (a * inv - SQMatrix::identity(a.rows())).frobenius();
  return report;
}

Json classify_entry(const SplitQuaternion& q, double null_tol) {
  Json e;
  e["value"] = io::to_json(q);
  e["quadratic_form"] = quadratic_form(q);
  e["norm"] = norm(q);
  e["character"] = to_string(classify(q, null_tol));
  return e;
}

Json cmd_classify(const std::string& file, const Options& opt) {
  const Json input = io::load_json(file);
  if (input.is_array()) return classify_entry(io::scalar_from_json(input), opt.null_tol);
  const SQMatrix a = io::matrix_from_json(input);
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Json e;
      e["row"] = i;
      e["col"] = j;
      const Json c = classify_entry(a(i, j), opt.null_tol);
      for (const auto& [k, v] : c.items()) e[k] = v;
      entries.push_back(std::move(e));
    }
  Json report;
  report["entries"] = std::move(entries);
  return report;
}

Json cmd_consim_check(const std::string& fa, const std::string& fb, const std::string& fp, const Options& opt) {
  const SQMatrix a = io::matrix_from_json(io::load_json(fa));
  const SQMatrix b = io::matrix_from_json(io::load_json(fb));
  const SQMatrix p = io::matrix_from_json(io::load_json(fp));
  const double tol = opt.tol_residual.value_or(1e-10);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "A and B differ in shape");
  const double residual = (consim_transform(a, p) - b).frobenius();
  Json report;
  report["consimilar"] = residual <= tol;
  report["residual"] = residual;
  report["tolerance"] = tol;
  return report;
}

SplitQuaternion take_scalar(const std::vector<double>& v, std::size_t offset) {
  return {v[offset], v[offset + 1], v[offset + 2], v[offset + 3]};
}

Json cmd_scalar(const std::string& op, const std::vector<double>& args, const Options& opt) {
  const bool binary = op == "mul" || op == "consim";
  const std::size_t expected = binary ? 8 : 4;
  if (args.size() != expected) {
    throw Error(ErrorKind::Parse, "scalar " + op + " takes " + std::to_string(expected) + " numbers, got " +
                                      std::to_string(args.size()));
  }
  const SplitQuaternion a = take_scalar(args, 0);
  Json report;
  report["op"] = op;
  if (op == "mul") {
    report["result"] = io::to_json(a * take_scalar(args, 4));
  } else if (op == "conj") {
    report["result"] = io::to_json(conjugate(a));
  } else if (op == "jconj") {
    report["result"] = io::to_json(j_conjugate(a));
  } else if (op == "inverse") {
    report["result"] = io::to_json(inverse(a));
  } else if (op == "classify" || op == "norm") {
    const Json c = classify_entry(a, opt.null_tol);
    for (const auto& [k, v] : c.items()) report[k] = v;
  } else if (op == "sqrt") {
    const auto [x, y] = sqrt(a);
    report["roots"] = Json::array({io::to_json(x), io::to_json(y)});
    report["residual"] = coeff_norm(x * x - a);
  } else if (op == "consim") {
    const SplitQuaternion b = take_scalar(args, 4);
    const auto family = solve_consimilarity(a, b);
    report["kind"] = to_string(family.kind);
    if (family.kind == ConsimSolutionFamily::Kind::Slice) report["generator"] = io::to_json(family.generator);
    if (family.kind == ConsimSolutionFamily::Kind::Hyperplane) {
      report["constraint"] = Json::array({family.constraint[0], family.constraint[1], family.constraint[2],
                                          family.constraint[3]});
    }
    if (family.kind != ConsimSolutionFamily::Kind::Empty) {
      const SplitQuaternion x = family.witness();
      report["witness"] = io::to_json(x);
      report["residual"] = coeff_norm(a * x - conjugate(x) * b);
    }
  } else if (op == "witness") {
    const SplitQuaternion p = canonical_witness(a);
    report["p"] = io::to_json(p);
    report["residual"] = coeff_norm(conjugate(p) * SplitQuaternion(norm(a)) * inverse(p) - a);
  } else if (op == "left-rep") {
    report["matrix"] = io::to_json(left_rep(a));
  } else if (op == "right-rep") {
    report["matrix"] = io::to_json(right_rep(a));
  } else {
    throw Error(ErrorKind::Parse, "unknown scalar operation '" + op + "'");
  }
  return report;
}

void emit(const Json& report, const Options& opt, std::ostream& out) {
  std::string format = opt.format;
  if (format.empty()) {
    const char* env = std::getenv("SQMAT_FORMAT");
    format = (env != nullptr && std::string(env) == "text") ? "text" : "json";
  }
  const std::string text = format == "text" ? io::render_text(report) : io::dump(report);
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw Error(ErrorKind::Parse, "cannot write " + opt.output);
  file << text;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Split quaternion matrix toolkit", "sqmat"};
  app.require_subcommand(1);
  Options opt;

  std::string file_a, file_b, file_p, scalar_op;
  std::vector<double> scalar_args;

  auto* solve = app.add_subcommand("solve", "Solve X - A X~ B = C from a problem file");
  solve->add_option("problem", file_a, "JSON file with A, B, C")->required();
  add_common_options(solve, opt);

  auto* coneig = app.add_subcommand("coneig", "Complex right coneigenvalues and coneigenvectors");
  coneig->add_option("matrix", file_a, "JSON matrix file")->required();
  add_common_options(coneig, opt);

  auto* inv = app.add_subcommand("inverse", "Matrix inverse through the real representation");
  inv->add_option("matrix", file_a, "JSON matrix file")->required();
  add_common_options(inv, opt);

  auto* cls = app.add_subcommand("classify", "Causal character of a scalar or of every matrix entry");
  cls->add_option("input", file_a, "JSON scalar or matrix file")->required();
  cls->add_option("--null-tol", opt.null_tol, "Treat |I_q| <= tol as null")->check(CLI::NonNegativeNumber);
  add_common_options(cls, opt);

  auto* consim = app.add_subcommand("consim-check", "Check j_conjugate(P) A P^-1 = B");
  consim->add_option("A", file_a, "JSON matrix file")->required();
  consim->add_option("B", file_b, "JSON matrix file")->required();
  consim->add_option("P", file_p, "JSON matrix file")->required();
  add_common_options(consim, opt);

  auto* scalar = app.add_subcommand("scalar", "Scalar operations: mul conj jconj inverse classify norm sqrt "
                                              "consim witness left-rep right-rep");
  scalar->add_option("op", scalar_op, "Operation")->required();
  scalar->add_option("values", scalar_args, "Coefficients q0 q1 q2 q3 [p0 p1 p2 p3]")->required();
  scalar->add_option("--null-tol", opt.null_tol, "Treat |I_q| <= tol as null")->check(CLI::NonNegativeNumber);
  add_common_options(scalar, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kOk : kParseError;
  }

  try {
    Json report;
    if (solve->parsed()) {
      report = cmd_solve(file_a, opt);
    } else if (coneig->parsed()) {
      report = cmd_coneig(file_a, opt);
    } else if (inv->parsed()) {
      report = cmd_inverse(file_a);
    } else if (cls->parsed()) {
      report = cmd_classify(file_a, opt);
    } else if (consim->parsed()) {
      report = cmd_consim_check(file_a, file_b, file_p, opt);
    } else {
      report = cmd_scalar(scalar_op, scalar_args, opt);
    }
    emit(report, opt, out);
    return kOk;
  } catch (const ExitWith& e) {
    err << "sqmat: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "sqmat: error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace sqmat::cli
