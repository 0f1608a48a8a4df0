#pragma once

// X - A X~ B = C for A (m x m), B (n x n), C (m x n).
//
// Pipeline: phi turns the equation into Y - phi_A Y phi_B = phi_C, which is
// linearized as (I - kron(phi_B^T, phi_A)) vec(Y) = vec(phi_C) and solved
// densely. Any real solution Y is averaged with its images under the Q, R
// and S symmetries, which yields a phi-structured solution Y'; X is read off
// its blocks.

#include <cstddef>
#include <optional>

#include "sqmat/densemat.hpp"

namespace sqmat::stein {

/// Largest m * n accepted by solve (system size 16 m n).
inline constexpr std::size_t kMaxBlockProduct = 64;
inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kDefaultResidualTol = 1e-8;

struct SteinProblem {
  SQMatrix a;
  SQMatrix b;
  SQMatrix c;
};

enum class Uniqueness { Unique, NonUnique, NoSolution };
const char* to_string(Uniqueness u);

struct SteinSolution {
  std::optional<SQMatrix> x;
  Uniqueness uniqueness = Uniqueness::NoSolution;
  /// ||X - A X~ B - C||_F.
  double residual = 0.0;
  /// Dimension of the real null space of the linearized system.
  std::size_t nullity = 0;
};

struct RealEquation {
  RealMatrix m;  // phi_A
  RealMatrix n;  // phi_B
  RealMatrix k;  // phi_C
};

/// Throws ShapeMismatch / NotSquare on nonconforming shapes.
void check_shapes(const SteinProblem& prob);

RealEquation build_real_equation(const SteinProblem& prob);

struct RealSolveResult {
  std::optional<RealMatrix> y;
  Uniqueness uniqueness = Uniqueness::NoSolution;
  std::size_t nullity = 0;
};

/// Solves Y - M Y N = K. Non-unique systems give the particular solution
/// with free variables at zero.
RealSolveResult solve_real_stein(const RealMatrix& m, const RealMatrix& n, const RealMatrix& k,
                                 double rank_tol = kDefaultRankTol);

/// Y' = (Y - Q^-1 Y Q + R^-1 Y R - S^-1 Y S) / 4.
RealMatrix project_solution(const RealMatrix& y);

/// X = Y'0 + Y'1 i + Y'2 j + Y'3 k from the block formulas
///   Y'0 = (Y11 - Y22 + Y33 - Y44)/4    Y'1 = (Y12 + Y21 + Y34 + Y43)/4
///   Y'2 = (Y13 + Y24 + Y31 + Y42)/4    Y'3 = (-Y14 + Y23 - Y32 + Y41)/4
/// Throws NotStructured unless phi(X) reproduces the input.
SQMatrix extract_solution(const RealMatrix& yp);

/// ||X - A X~ B - C||_F.
double residual(const SteinProblem& prob, const SQMatrix& x);

/// Full pipeline. Throws ProblemTooLarge when m * n > kMaxBlockProduct and
/// InternalResidualFailure when a consistent real system yields an X whose
/// residual exceeds residual_tol * (1 + ||C||_F).
SteinSolution solve(const SteinProblem& prob, double rank_tol = kDefaultRankTol,
                    double residual_tol = kDefaultResidualTol);

}  // namespace sqmat::stein
