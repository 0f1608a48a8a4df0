#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "sqmat/dense.hpp"
#include "sqmat/scalar.hpp"

namespace sqmat {

/// Dense m x n split quaternion matrix, row-major.
class SQMatrix {
 public:
  SQMatrix() = default;
  SQMatrix(std::size_t rows, std::size_t cols);
  SQMatrix(std::size_t rows, std::size_t cols, std::vector<SplitQuaternion> entries);
  SQMatrix(std::initializer_list<std::initializer_list<SplitQuaternion>> rows);

  static SQMatrix identity(std::size_t n);
  /// Assembles A0 + A1 i + A2 j + A3 k from real component matrices.
  static SQMatrix from_components(const RealMatrix& a0, const RealMatrix& a1, const RealMatrix& a2,
                                  const RealMatrix& a3);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  SplitQuaternion& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const SplitQuaternion& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const SplitQuaternion> entries() const noexcept { return entries_; }

  /// Real component matrix: 0 -> A0, 1 -> A1 (i), 2 -> A2 (j), 3 -> A3 (k).
  RealMatrix component(int which) const;

  /// Frobenius norm over the 4mn real coefficients.
  double frobenius() const;
  double max_abs() const;

  friend bool operator==(const SQMatrix&, const SQMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SplitQuaternion> entries_;
};

SQMatrix add(const SQMatrix& a, const SQMatrix& b);
SQMatrix sub(const SQMatrix& a, const SQMatrix& b);
SQMatrix scale(double c, const SQMatrix& a);
/// Entries multiply left-to-right: (AB)_ij = sum_l A_il * B_lj.
SQMatrix matmul(const SQMatrix& a, const SQMatrix& b);
/// Every entry multiplied on the right by q.
SQMatrix right_scale(const SQMatrix& a, const SplitQuaternion& q);
/// Every entry multiplied on the left by q.
SQMatrix left_scale(const SplitQuaternion& q, const SQMatrix& a);

inline SQMatrix operator+(const SQMatrix& a, const SQMatrix& b) { return add(a, b); }
inline SQMatrix operator-(const SQMatrix& a, const SQMatrix& b) { return sub(a, b); }
inline SQMatrix operator*(const SQMatrix& a, const SQMatrix& b) { return matmul(a, b); }

SQMatrix transpose(const SQMatrix& a);
SQMatrix conjugate(const SQMatrix& a);
SQMatrix conj_transpose(const SQMatrix& a);
/// j A j, entrywise on rectangular matrices.
SQMatrix j_conjugate(const SQMatrix& a);

/// A = A1 + A2 j with A1 = A0 + A1 i and A2 = A2 + A3 i (since k = i j).
std::pair<ComplexMatrix, ComplexMatrix> complex_decompose(const SQMatrix& a);
SQMatrix complex_compose(const ComplexMatrix& a1, const ComplexMatrix& a2);

/// chi_A = [[A1, A2], [conj(A2), conj(A1)]]. Throws NotSquare.
ComplexMatrix complex_adjoint(const SQMatrix& a);

/// (A1; A2), a 2m x n complex matrix.
ComplexMatrix complex_stack(const SQMatrix& a);
SQMatrix complex_unstack(const ComplexMatrix& s);

/// Product through the complex adjoint: (chi_B)^T stack(A^T) = stack((AB)^T),
/// with chi_B built blockwise (rectangular B allowed). Used as a differential
/// check against matmul.
SQMatrix mul_via_adjoint(const SQMatrix& a, const SQMatrix& b);

/// Inverse through the real representation. Throws NotSquare or Singular.
SQMatrix inverse(const SQMatrix& a);

/// j_conjugate(P) * A * inverse(P).
SQMatrix consim_transform(const SQMatrix& a, const SQMatrix& p);
/// ||j_conjugate(P) A P^-1 - B||_F <= tol.
bool verify_consimilar(const SQMatrix& a, const SQMatrix& b, const SQMatrix& p, double tol);

}  // namespace sqmat
