#include "sqmat/scalar.hpp"

#include <algorithm>
#include <cmath>

namespace sqmat {

double SplitQuaternion::max_abs_coeff() const {
  return std::max({std::abs(q0), std::abs(q1), std::abs(q2), std::abs(q3)});
}

bool SplitQuaternion::finite() const {
  return std::isfinite(q0) && std::isfinite(q1) && std::isfinite(q2) && std::isfinite(q3);
}

double norm(const SplitQuaternion& q) { return std::sqrt(std::abs(quadratic_form(q))); }

double coeff_norm(const SplitQuaternion& q) {
  return std::sqrt(q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3);
}

CausalCharacter classify(const SplitQuaternion& q) {
  const double iq = quadratic_form(q);
  if (iq > 0.0) return CausalCharacter::Timelike;
  if (iq < 0.0) return CausalCharacter::Spacelike;
  return CausalCharacter::Null;
}

CausalCharacter classify(const SplitQuaternion& q, double null_tol) {
  const double iq = quadratic_form(q);
  if (std::abs(iq) <= null_tol) return CausalCharacter::Null;
  return iq > 0.0 ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
}

const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Null: return "null";
  }
  return "?";
}

double inverse_tolerance(const SplitQuaternion& q) {
  const double s = 1.0 + q.max_abs_coeff();
  return 1e-12 * s * s;
}

bool invertible(const SplitQuaternion& q) { return std::abs(quadratic_form(q)) > inverse_tolerance(q); }

SplitQuaternion inverse(const SplitQuaternion& q) {
  if (!invertible(q)) throw Error(ErrorKind::NullDivisor, "quadratic form vanishes; element is a zero divisor");
  return (1.0 / quadratic_form(q)) * conjugate(q);
}

RealMatrix left_rep(const SplitQuaternion& q) {
  return {
      {q.q0, -q.q1, q.q2, q.q3},
      {q.q1, q.q0, q.q3, -q.q2},
      {q.q2, q.q3, q.q0, -q.q1},
      {q.q3, -q.q2, q.q1, q.q0},
  };
}

RealMatrix right_rep(const SplitQuaternion& q) {
  return {
      {q.q0, -q.q1, q.q2, q.q3},
      {q.q1, q.q0, -q.q3, q.q2},
      {q.q2, -q.q3, q.q0, q.q1},
      {q.q3, q.q2, -q.q1, q.q0},
  };
}

const char* to_string(ConsimSolutionFamily::Kind k) {
  switch (k) {
    case ConsimSolutionFamily::Kind::Slice: return "slice";
    case ConsimSolutionFamily::Kind::Hyperplane: return "hyperplane";
    case ConsimSolutionFamily::Kind::Empty: return "empty";
  }
  return "?";
}

SplitQuaternion ConsimSolutionFamily::witness() const {
  switch (kind) {
    case Kind::Slice:
      return generator;
    case Kind::Hyperplane: {
      // The quadratic form cannot vanish on a 3-dimensional subspace, so some
      // projected basis vector or pairwise sum of them is non-null.
      const auto& c = constraint;
      const double cc = c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
      std::array<SplitQuaternion, 4> proj;
      for (int e = 0; e < 4; ++e) {
        std::array<double, 4> v{};
        v[e] = 1.0;
        const double f = c[e] / cc;
        for (int t = 0; t < 4; ++t) v[t] -= f * c[t];
        proj[e] = {v[0], v[1], v[2], v[3]};
      }
      SplitQuaternion best;
      double best_q = 0.0;
      auto consider = [&](const SplitQuaternion& x) {
        const double scale = coeff_norm(x);
        if (scale == 0.0) return;
        const double q = std::abs(quadratic_form(x)) / (scale * scale);
        if (q > best_q) {
          best_q = q;
          best = (1.0 / scale) * x;
        }
      };
      for (int e = 0; e < 4; ++e) consider(proj[e]);
      for (int e = 0; e < 4; ++e)
        for (int f = e + 1; f < 4; ++f) consider(proj[e] + proj[f]);
      return best;
    }
    case Kind::Empty:
      break;
  }
  throw Error(ErrorKind::ZeroVector, "empty solution family has no witness");
}

ConsimSolutionFamily solve_consimilarity(const SplitQuaternion& a, const SplitQuaternion& b) {
  const CausalCharacter ca = classify(a);
  const CausalCharacter cb = classify(b);
  if (ca == CausalCharacter::Null || cb == CausalCharacter::Null) {
    throw Error(ErrorKind::MixedCharacter, "null input; the construction needs timelike or spacelike elements");
  }
  if (ca != cb) throw Error(ErrorKind::MixedCharacter, "inputs have different causal characters");

  ConsimSolutionFamily family;
  const double na = norm(a);
  const double nb = norm(b);
  if (std::abs(na - nb) > 1e-12 * (1.0 + std::max(na, nb))) {
    family.kind = ConsimSolutionFamily::Kind::Empty;
    return family;
  }
  const SplitQuaternion s = a + conjugate(b);
  if (s.max_abs_coeff() > 1e-12 * (1.0 + std::max(a.max_abs_coeff(), b.max_abs_coeff()))) {
    family.kind = ConsimSolutionFamily::Kind::Slice;
    family.generator = conjugate(a) + b;
    return family;
  }
  family.kind = ConsimSolutionFamily::Kind::Hyperplane;
  family.constraint = {a.q0, -a.q1, a.q2, a.q3};
  return family;
}

SplitQuaternion canonical_witness(const SplitQuaternion& a) {
  const double na = norm(a);
  if (a.is_real()) throw Error(ErrorKind::RealInput, "input is real");
  if (na == 0.0 || std::abs(quadratic_form(a)) <= inverse_tolerance(a)) {
    throw Error(ErrorKind::ZeroNorm, "input has zero norm");
  }
  const SplitQuaternion p = SplitQuaternion(na) + conjugate(a);
  const SplitQuaternion check = conjugate(p) * SplitQuaternion(na) * inverse(p);
  if (coeff_norm(check - a) > 1e-10 * (1.0 + coeff_norm(a))) {
    throw Error(ErrorKind::FormulaInapplicable, "conj(p) ||a|| p^-1 does not reproduce a");
  }
  return p;
}

std::pair<SplitQuaternion, SplitQuaternion> sqrt(const SplitQuaternion& a) {
  if (a.is_real()) throw Error(ErrorKind::RealInput, "input is real");
  const double na = norm(a);
  if (na == 0.0 || std::abs(quadratic_form(a)) <= inverse_tolerance(a)) {
    throw Error(ErrorKind::ZeroNorm, "input has zero norm");
  }
  const SplitQuaternion shifted = SplitQuaternion(na) + a;
  const double denom = norm(shifted);
  if (std::abs(quadratic_form(shifted)) <= inverse_tolerance(shifted)) {
    throw Error(ErrorKind::DegenerateDenominator, "||(||a|| + a)|| vanishes");
  }
  const double lambda0 = std::pow(na, 1.5) / denom;
  const double lambda1 = std::sqrt(na) / denom;
  const SplitQuaternion x = SplitQuaternion(lambda0) + lambda1 * a;
  const double tol = 1e-9 * (1.0 + na);
  if (coeff_norm(x * x - a) > tol) {
    throw Error(ErrorKind::FormulaInapplicable, "candidate root does not square to the input");
  }
  return {x, -x};
}

}  // namespace sqmat
