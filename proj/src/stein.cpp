#include "sqmat/stein.hpp"

#include <string>

#include "sqmat/numkernel.hpp"
#include "sqmat/realrep.hpp"

namespace sqmat::stein {

const char* to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::Unique: return "unique";
    case Uniqueness::NonUnique: return "non-unique";
    case Uniqueness::NoSolution: return "no-solution";
  }
  return "?";
}

void check_shapes(const SteinProblem& prob) {
  if (!prob.a.square()) throw Error(ErrorKind::NotSquare, "A must be square");
  if (!prob.b.square()) throw Error(ErrorKind::NotSquare, "B must be square");
  if (prob.c.rows() != prob.a.rows() || prob.c.cols() != prob.b.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "C must be " + std::to_string(prob.a.rows()) + "x" +
                                              std::to_string(prob.b.rows()) + ", got " +
                                              std::to_string(prob.c.rows()) + "x" + std::to_string(prob.c.cols()));
  }
}

RealEquation build_real_equation(const SteinProblem& prob) {
  check_shapes(prob);
  return {realrep::phi(prob.a), realrep::phi(prob.b), realrep::phi(prob.c)};
}

RealSolveResult solve_real_stein(const RealMatrix& m, const RealMatrix& n, const RealMatrix& k, double rank_tol) {
  if (!m.square() || !n.square()) throw Error(ErrorKind::NotSquare, "M and N must be square");
  if (k.rows() != m.rows() || k.cols() != n.rows()) throw Error(ErrorKind::ShapeMismatch, "K must be rows(M) x rows(N)");
  const std::size_t size = k.rows() * k.cols();
  const RealMatrix system = RealMatrix::identity(size) - numkernel::kron(n.transpose(), m);
  const auto outcome = numkernel::solve_general(system, numkernel::vec(k), rank_tol);

  RealSolveResult result;
  switch (outcome.kind) {
    case numkernel::SolveKind::Inconsistent:
      result.uniqueness = Uniqueness::NoSolution;
      return result;
    case numkernel::SolveKind::Unique:
      result.uniqueness = Uniqueness::Unique;
      break;
    case numkernel::SolveKind::Underdetermined:
      result.uniqueness = Uniqueness::NonUnique;
      break;
  }
  result.nullity = outcome.null_basis.size();
  result.y = numkernel::unvec(outcome.particular, k.rows(), k.cols());
  return result;
}

RealMatrix project_solution(const RealMatrix& y) {
  if (y.rows() % 4 != 0 || y.cols() % 4 != 0) throw Error(ErrorKind::ShapeMismatch, "Y must be 4m x 4n");
  const std::size_t m = y.rows() / 4;
  const std::size_t n = y.cols() / 4;
  const auto sm = realrep::structure_matrices(m);
  const auto sn = realrep::structure_matrices(n);
  // The structure matrices are signed permutations, so inverse = transpose.
  RealMatrix sum = y;
  sum -= sm.q.transpose() * y * sn.q;
  sum += sm.r.transpose() * y * sn.r;
  sum -= sm.s.transpose() * y * sn.s;
  return 0.25 * sum;
}

SQMatrix extract_solution(const RealMatrix& yp) {
  if (yp.rows() % 4 != 0 || yp.cols() % 4 != 0) throw Error(ErrorKind::NotStructured, "Y' must be 4m x 4n");
  const std::size_t m = yp.rows() / 4;
  const std::size_t n = yp.cols() / 4;
  auto blk = [&](std::size_t u, std::size_t v) { return yp.block((u - 1) * m, (v - 1) * n, m, n); };
  const RealMatrix x0 = 0.25 * (blk(1, 1) - blk(2, 2) + blk(3, 3) - blk(4, 4));
  const RealMatrix x1 = 0.25 * (blk(1, 2) + blk(2, 1) + blk(3, 4) + blk(4, 3));
  const RealMatrix x2 = 0.25 * (blk(1, 3) + blk(2, 4) + blk(3, 1) + blk(4, 2));
  const RealMatrix x3 = 0.25 * (blk(2, 3) - blk(1, 4) - blk(3, 2) + blk(4, 1));
  SQMatrix x = SQMatrix::from_components(x0, x1, x2, x3);
  if ((realrep::phi(x) - yp).norm_inf() > 1e-9 * (1.0 + yp.norm_inf())) {
    throw Error(ErrorKind::NotStructured, "Y' does not carry the real-representation block pattern");
  }
  return x;
}

double residual(const SteinProblem& prob, const SQMatrix& x) {
  return (x - prob.a * j_conjugate(x) * prob.b - prob.c).frobenius();
}

SteinSolution solve(const SteinProblem& prob, double rank_tol, double residual_tol) {
  check_shapes(prob);
  const std::size_t blocks = prob.a.rows() * prob.b.rows();
  if (blocks > kMaxBlockProduct) {
    throw Error(ErrorKind::ProblemTooLarge, "m*n = " + std::to_string(blocks) + " exceeds the dense limit of " +
                                                std::to_string(kMaxBlockProduct));
  }
  const RealEquation eq = build_real_equation(prob);
  const RealSolveResult real = solve_real_stein(eq.m, eq.n, eq.k, rank_tol);

  SteinSolution sol;
  sol.uniqueness = real.uniqueness;
  sol.nullity = real.nullity;
  if (!real.y) return sol;

  SQMatrix x = extract_solution(project_solution(*real.y));
  sol.residual = residual(prob, x);
  const double bound = residual_tol * (1.0 + prob.c.frobenius());
  if (sol.residual > bound) {
    throw Error(ErrorKind::InternalResidualFailure, "extracted X has residual " + std::to_string(sol.residual) +
                                                        " above " + std::to_string(bound));
  }
  sol.x = std::move(x);
  return sol;
}

}  // namespace sqmat::stein
