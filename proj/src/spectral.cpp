#include "sqmat/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "sqmat/realrep.hpp"

namespace sqmat::spectral {

namespace {

SplitQuaternion as_quaternion(Complex z) { return {z.real(), z.imag(), 0.0, 0.0}; }

bool is_zero(const SQMatrix& x) { return x.max_abs() == 0.0; }

}  // namespace

double coneigen_residual(const SQMatrix& a, const SQMatrix& x, const SplitQuaternion& lambda) {
  return (a * j_conjugate(x) - right_scale(x, lambda)).frobenius();
}

numkernel::Spectrum coneigenvalues(const SQMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::NotSquare, "coneigenvalues need a square matrix");
  return numkernel::eigenvalues(realrep::phi(a));
}

std::vector<SQMatrix> coneigenvectors(const SQMatrix& a, Complex lambda, double rank_tol, double verify_tol) {
  if (!a.square()) throw Error(ErrorKind::NotSquare, "coneigenvectors need a square matrix");
  const std::size_t n = a.rows();
  const SplitQuaternion lam = as_quaternion(lambda);
  const RealMatrix system = realrep::phi(a) - realrep::rho(lam, n);
  const std::vector<double> zero(4 * n, 0.0);
  const auto outcome = numkernel::solve_general(system, zero, rank_tol);

  const double bound = verify_tol * (1.0 + a.frobenius());
  std::vector<SQMatrix> basis;
  for (const auto& v : outcome.null_basis) {
    SQMatrix x = realrep::unstack(RealMatrix(4 * n, 1, v));
    x = scale(1.0 / x.frobenius(), x);
    if (coneigen_residual(a, x, lam) <= bound) basis.push_back(std::move(x));
  }
  if (basis.empty()) {
    throw Error(ErrorKind::EmptyNullSpace,
                "no coneigenvector for lambda = " + std::to_string(lambda.real()) + " + " +
                    std::to_string(lambda.imag()) + " i although it is an eigenvalue of phi_A");
  }
  return basis;
}

bool verify_coneigenpair(const SQMatrix& a, const SQMatrix& x, const SplitQuaternion& lambda, double tol) {
  if (is_zero(x)) throw Error(ErrorKind::ZeroVector, "coneigenvector must be nonzero");
  return coneigen_residual(a, x, lambda) <= tol;
}

Coneigenpair transform_coneigenpair(const SQMatrix& a, const Coneigenpair& pair, const SplitQuaternion& beta) {
  const SplitQuaternion beta_t = j_conjugate(beta);
  const SplitQuaternion inv_beta_t = inverse(beta_t);
  Coneigenpair out;
  out.x = right_scale(pair.x, beta_t);
  out.lambda = inv_beta_t * pair.lambda * beta;
  out.residual = coneigen_residual(a, out.x, out.lambda);
  return out;
}

bool eigen_shift_check(const SQMatrix& a, const SQMatrix& x, const SplitQuaternion& lambda, double tol) {
  const SplitQuaternion j = SplitQuaternion::j();
  const SQMatrix xt = j_conjugate(x);
  const double first = (right_scale(a, j) * x - right_scale(x, lambda * j)).frobenius();
  const double second = (left_scale(j, a) * xt - right_scale(xt, j * lambda)).frobenius();
  return first <= tol && second <= tol;
}

bool adjoint_coneigen_check(const SQMatrix& a, const SQMatrix& x, const SplitQuaternion& lambda, double tol) {
  if (!lambda.is_complex()) throw Error(ErrorKind::NonComplexLambda, "lambda must have zero j and k parts");
  const auto [x1, x2] = complex_decompose(x);
  const std::size_t n = x.rows();
  ComplexMatrix y(2 * n, 1);
  y.set_block(0, 0, x1);
  y.set_block(n, 0, conj(x2));
  const Complex lam(lambda.q0, lambda.q1);
  return (complex_adjoint(a) * conj(y) - lam * y).frobenius() <= tol;
}

std::size_t ConeigenReport::empty_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const ConeigenEntry& e) { return e.empty_null_space; }));
}

ConeigenReport analyze(const SQMatrix& a, double rank_tol, double verify_tol) {
  ConeigenReport report;
  report.spectrum = coneigenvalues(a);

  double scale = 1.0;
  for (const Complex& z : report.spectrum.values) scale = std::max(scale, std::abs(z));
  const double cluster_tol = 1e-6 * scale;

  std::vector<Complex> remaining = report.spectrum.values;
  while (!remaining.empty()) {
    const Complex seed = remaining.front();
    Complex sum = 0.0;
    std::size_t count = 0;
    std::vector<Complex> rest;
    for (const Complex& z : remaining) {
      if (std::abs(z - seed) <= cluster_tol) {
        sum += z;
        ++count;
      } else {
        rest.push_back(z);
      }
    }
    Complex mean = sum / static_cast<double>(count);
    if (std::abs(mean.imag()) <= cluster_tol) mean = Complex(mean.real(), 0.0);
    ConeigenEntry entry;
    entry.lambda = mean;
    entry.multiplicity = count;
    report.entries.push_back(std::move(entry));
    remaining = std::move(rest);
  }
  std::sort(report.entries.begin(), report.entries.end(), [](const ConeigenEntry& l, const ConeigenEntry& r) {
    if (l.lambda.real() != r.lambda.real()) return l.lambda.real() > r.lambda.real();
    return l.lambda.imag() > r.lambda.imag();
  });

  for (auto& entry : report.entries) {
    try {
      for (auto& x : coneigenvectors(a, entry.lambda, rank_tol, verify_tol)) {
        const SplitQuaternion lam = as_quaternion(entry.lambda);
        const double r = coneigen_residual(a, x, lam);
        entry.pairs.push_back({lam, std::move(x), r});
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptyNullSpace) throw;
      entry.empty_null_space = true;
    }
  }
  return report;
}

}  // namespace sqmat::spectral
