#pragma once

// Real representation of split quaternion matrices.
//
// phi_A is the 4m x 4n real matrix of X -> A X~ in stacked coordinates
// stack(X) = (X0; X1; X2; X3):
//
//         [ A0   A1   A2  -A3 ]
//   phi = [ A1  -A0   A3   A2 ]
//         [ A2  -A3   A0   A1 ]
//         [ A3   A2   A1  -A0 ]
//
// so that stack(A * j_conjugate(B)) = phi_A * stack(B).
//
// rho(q, m) is the matching operator for right multiplication by a scalar:
// stack(x * q) = rho(q, m) * stack(x). Since (x q)_s = sum_t R(q)_st x_t for
// the 4x4 right representation R(q), rho(q, m) = kron(R(q), I_m). For real q
// it reduces to q * I. Coneigenvectors A x~ = x lambda are therefore exactly
// the null space of phi_A - rho(lambda, m).

#include <cstddef>

#include "sqmat/dense.hpp"
#include "sqmat/densemat.hpp"

namespace sqmat::realrep {

RealMatrix phi(const SQMatrix& a);

/// Inverse of phi. Reads the first block column and checks the rebuilt phi
/// against the input; throws NotStructured on mismatch.
SQMatrix phi_extract(const RealMatrix& m);

/// 4m x n vertical stack of the real components.
RealMatrix stack(const SQMatrix& a);
/// Throws ShapeMismatch unless rows are divisible by 4.
SQMatrix unstack(const RealMatrix& v);

struct StructureSet {
  RealMatrix p;
  RealMatrix q;
  RealMatrix r;
  RealMatrix s;
  RealMatrix eps2;
};

/// Signed block permutations with I_m blocks:
///   P = diag(I, -I, I, -I)       Q = [0 -I 0 0; I 0 0 0; 0 0 0 I; 0 0 -I 0]
///   R = [0 0 -I 0; 0 0 0 -I; -I 0 0 0; 0 -I 0 0]
///   S = [0 0 0 I; 0 0 -I 0; 0 -I 0 0; I 0 0 0]
///   eps2 = diag(I, -I, -I, I)
StructureSet structure_matrices(std::size_t m);

RealMatrix structure_p(std::size_t m);
RealMatrix structure_q(std::size_t m);
RealMatrix structure_r(std::size_t m);
RealMatrix structure_s(std::size_t m);
RealMatrix structure_eps2(std::size_t m);

RealMatrix rho(const SplitQuaternion& q, std::size_t m);

}  // namespace sqmat::realrep
