#pragma once

// Right coneigenvalues: A x~ = x lambda with x != 0.
//
// Complex candidates come from the spectrum of phi_A; coneigenvectors for a
// candidate are recovered from the real null space of phi_A - rho(lambda),
// which is equivalent to the defining equation in stacked coordinates. A
// candidate whose null space is empty is reported, never dropped.

#include <cstddef>
#include <vector>

#include "sqmat/densemat.hpp"
#include "sqmat/numkernel.hpp"

namespace sqmat::spectral {

inline constexpr double kDefaultRankTol = 1e-8;
inline constexpr double kDefaultVerifyTol = 1e-7;

struct Coneigenpair {
  SplitQuaternion lambda;
  SQMatrix x;
  double residual = 0.0;
};

/// ||A x~ - x lambda||_F.
double coneigen_residual(const SQMatrix& a, const SQMatrix& x, const SplitQuaternion& lambda);

/// sigma(phi_A) as a multiset.
numkernel::Spectrum coneigenvalues(const SQMatrix& a);

/// Null-space basis of phi_A - rho(lambda), each vector scaled to unit
/// Frobenius norm and checked against ||A x~ - x lambda||_F <= verify_tol * (1 + ||A||_F).
/// Throws EmptyNullSpace when nothing survives.
std::vector<SQMatrix> coneigenvectors(const SQMatrix& a, Complex lambda, double rank_tol = kDefaultRankTol,
                                      double verify_tol = kDefaultVerifyTol);

/// ||A x~ - x lambda||_F <= tol. Throws ZeroVector for x = 0.
bool verify_coneigenpair(const SQMatrix& a, const SQMatrix& x, const SplitQuaternion& lambda, double tol);

/// (x, lambda) -> (x beta~, (beta~)^-1 lambda beta). Throws NullDivisor.
Coneigenpair transform_coneigenpair(const SQMatrix& a, const Coneigenpair& pair, const SplitQuaternion& beta);

/// (A j) x = x (lambda j) and (j A) x~ = x~ (j lambda), both within tol.
bool eigen_shift_check(const SQMatrix& a, const SQMatrix& x, const SplitQuaternion& lambda, double tol);

/// With x = x1 + x2 j and y = (x1; conj(x2)): ||chi_A conj(y) - lambda y|| <= tol.
/// Throws NonComplexLambda when lambda has j or k parts.
bool adjoint_coneigen_check(const SQMatrix& a, const SQMatrix& x, const SplitQuaternion& lambda, double tol);

struct ConeigenEntry {
  Complex lambda;
  std::size_t multiplicity = 0;
  std::vector<Coneigenpair> pairs;
  /// Set when the null space of phi_A - rho(lambda) came back empty.
  bool empty_null_space = false;
};

struct ConeigenReport {
  numkernel::Spectrum spectrum;
  std::vector<ConeigenEntry> entries;
  std::size_t empty_count() const;
};

/// Clusters sigma(phi_A) and attempts coneigenvector recovery for each
/// distinct value. Entries are ordered by descending real part, then
/// descending imaginary part.
ConeigenReport analyze(const SQMatrix& a, double rank_tol = kDefaultRankTol, double verify_tol = kDefaultVerifyTol);

}  // namespace sqmat::spectral
