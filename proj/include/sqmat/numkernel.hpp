#pragma once

// Dense real/complex kernels: LU solves, rank-revealing elimination,
// Kronecker products and a nonsymmetric real eigensolver.
//
// Vectorization is column-major everywhere: vec(Y) stacks the columns of Y,
// so that vec(M Y N) = kron(N^T, M) vec(Y).

#include <complex>
#include <cstddef>
#include <vector>

#include "sqmat/dense.hpp"

namespace sqmat::numkernel {

/// Relative pivot threshold used by the LU solvers: |pivot| < 1e-10 * ||M||_inf is singular.
inline constexpr double kSingularThreshold = 1e-10;

RealMatrix lu_solve(const RealMatrix& m, const RealMatrix& k);
ComplexMatrix complex_lu_solve(const ComplexMatrix& m, const ComplexMatrix& k);

/// Inverse through lu_solve against the identity.
RealMatrix inverse(const RealMatrix& m);
ComplexMatrix inverse(const ComplexMatrix& m);

double determinant(const RealMatrix& m);

enum class SolveKind { Unique, Underdetermined, Inconsistent };

struct LinearSolveOutcome {
  SolveKind kind = SolveKind::Inconsistent;
  /// Free variables set to zero. Empty when Inconsistent.
  std::vector<double> particular;
  /// One column per free variable; each has a 1 in its free slot.
  std::vector<std::vector<double>> null_basis;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination with partial pivoting. Columns whose best pivot
/// falls below tol * ||M||_inf are free.
LinearSolveOutcome solve_general(const RealMatrix& m, std::span<const double> k, double tol);

RealMatrix kron(const RealMatrix& a, const RealMatrix& b);

std::vector<double> vec(const RealMatrix& y);
RealMatrix unvec(std::span<const double> v, std::size_t rows, std::size_t cols);

/// Multiset of eigenvalues, one per dimension.
struct Spectrum {
  std::vector<Complex> values;
};

/// Householder reduction to upper Hessenberg form, then Francis double-shift
/// QR. Throws NoConvergence after 100 * n iterations.
Spectrum eigenvalues(const RealMatrix& m);

/// Greedy nearest-pair matching; returns the largest matched distance, or
/// +inf when the multisets have different sizes.
double spectrum_distance(const Spectrum& a, const Spectrum& b);

}  // namespace sqmat::numkernel
