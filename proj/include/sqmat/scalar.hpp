#pragma once

// Split quaternions q = q0 + q1 i + q2 j + q3 k with
//   i^2 = -1,  j^2 = k^2 = 1,  ij = -ji = k,  jk = -kj = -i,  ki = -ik = j.
// Unlike Hamilton quaternions these contain zero divisors: q is invertible
// exactly when I_q = q0^2 + q1^2 - q2^2 - q3^2 is nonzero.

#include <array>
#include <utility>

#include "sqmat/dense.hpp"

namespace sqmat {

struct SplitQuaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  constexpr SplitQuaternion() = default;
  constexpr SplitQuaternion(double a0, double a1 = 0.0, double a2 = 0.0, double a3 = 0.0)
      : q0(a0), q1(a1), q2(a2), q3(a3) {}

  static constexpr SplitQuaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr SplitQuaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr SplitQuaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr std::array<double, 4> coords() const { return {q0, q1, q2, q3}; }
  constexpr bool is_real() const { return q1 == 0.0 && q2 == 0.0 && q3 == 0.0; }
  constexpr bool is_complex() const { return q2 == 0.0 && q3 == 0.0; }
  double max_abs_coeff() const;
  bool finite() const;

  constexpr SplitQuaternion& operator+=(const SplitQuaternion& o) {
    q0 += o.q0;
    q1 += o.q1;
    q2 += o.q2;
    q3 += o.q3;
    return *this;
  }
  constexpr SplitQuaternion& operator-=(const SplitQuaternion& o) {
    q0 -= o.q0;
    q1 -= o.q1;
    q2 -= o.q2;
    q3 -= o.q3;
    return *this;
  }

  friend constexpr bool operator==(const SplitQuaternion&, const SplitQuaternion&) = default;
};

constexpr SplitQuaternion operator+(SplitQuaternion a, const SplitQuaternion& b) { return a += b; }
constexpr SplitQuaternion operator-(SplitQuaternion a, const SplitQuaternion& b) { return a -= b; }
constexpr SplitQuaternion operator-(const SplitQuaternion& a) { return {-a.q0, -a.q1, -a.q2, -a.q3}; }
constexpr SplitQuaternion operator*(double s, const SplitQuaternion& a) {
  return {s * a.q0, s * a.q1, s * a.q2, s * a.q3};
}

constexpr SplitQuaternion mul(const SplitQuaternion& a, const SplitQuaternion& b) {
  return {
      a.q0 * b.q0 - a.q1 * b.q1 + a.q2 * b.q2 + a.q3 * b.q3,
      a.q0 * b.q1 + a.q1 * b.q0 - a.q2 * b.q3 + a.q3 * b.q2,
      a.q0 * b.q2 + a.q2 * b.q0 - a.q1 * b.q3 + a.q3 * b.q1,
      a.q0 * b.q3 + a.q3 * b.q0 + a.q1 * b.q2 - a.q2 * b.q1,
  };
}
constexpr SplitQuaternion operator*(const SplitQuaternion& a, const SplitQuaternion& b) { return mul(a, b); }

constexpr SplitQuaternion conjugate(const SplitQuaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }

/// j q j: negates the i and k parts.
constexpr SplitQuaternion j_conjugate(const SplitQuaternion& q) { return {q.q0, -q.q1, q.q2, -q.q3}; }

/// I_q = q0^2 + q1^2 - q2^2 - q3^2, the scalar part of q * conj(q).
constexpr double quadratic_form(const SplitQuaternion& q) {
  return q.q0 * q.q0 + q.q1 * q.q1 - q.q2 * q.q2 - q.q3 * q.q3;
}

/// sqrt(|I_q|). Zero for null (and zero) quaternions.
double norm(const SplitQuaternion& q);

/// Euclidean length of the coefficient vector, used for residuals.
double coeff_norm(const SplitQuaternion& q);

enum class CausalCharacter { Timelike, Spacelike, Null };

CausalCharacter classify(const SplitQuaternion& q);
/// Same trichotomy with |I_q| <= null_tol treated as null.
CausalCharacter classify(const SplitQuaternion& q, double null_tol);
const char* to_string(CausalCharacter c);

/// Zero-divisor threshold: |I_q| <= 1e-12 * (1 + max|coeff|)^2.
double inverse_tolerance(const SplitQuaternion& q);
bool invertible(const SplitQuaternion& q);

/// conj(q) / I_q. Throws NullDivisor when q is a zero divisor.
SplitQuaternion inverse(const SplitQuaternion& q);

/// Matrix of x -> q x acting on coords (x0, x1, x2, x3).
RealMatrix left_rep(const SplitQuaternion& q);
/// Matrix of x -> x q acting on coords (x0, x1, x2, x3).
RealMatrix right_rep(const SplitQuaternion& q);

struct ConsimSolutionFamily {
  enum class Kind { Slice, Hyperplane, Empty };
  Kind kind = Kind::Empty;
  /// Slice: every x = t * generator (t real, nonzero) solves a x = conj(x) b.
  SplitQuaternion generator;
  /// Hyperplane: solutions satisfy dot(constraint, (x0, x1, x2, x3)) = 0.
  std::array<double, 4> constraint{};

  /// A solution with nonzero norm (the generator, or a non-null point of the hyperplane).
  SplitQuaternion witness() const;
};

const char* to_string(ConsimSolutionFamily::Kind k);

/// Solutions of a x = conj(x) b for a, b of the same (non-null) causal character.
/// Throws MixedCharacter when the characters differ or either is null.
ConsimSolutionFamily solve_consimilarity(const SplitQuaternion& a, const SplitQuaternion& b);

/// p = ||a|| + conj(a), so that conj(p) ||a|| p^-1 = a. The identity is
/// checked before returning; spacelike inputs generally fail it
/// (FormulaInapplicable).
SplitQuaternion canonical_witness(const SplitQuaternion& a);

/// The two roots +-(lambda0 + lambda1 a), lambda0 = ||a||^(3/2) / ||(||a|| + a)||,
/// lambda1 = ||a||^(1/2) / ||(||a|| + a)||. Both roots are squared and compared
/// with a before being returned; a mismatch throws FormulaInapplicable.
std::pair<SplitQuaternion, SplitQuaternion> sqrt(const SplitQuaternion& a);

}  // namespace sqmat
