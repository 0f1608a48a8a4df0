#include "sqmat/densemat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqmat/numkernel.hpp"
#include "sqmat/realrep.hpp"

namespace sqmat {

namespace {

void require_same_shape(const SQMatrix& a, const SQMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": operand shapes differ");
  }
}

template <typename F>
SQMatrix map_entries(const SQMatrix& a, F f) {
  SQMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f(a(i, j));
  return out;
}

ComplexMatrix block_adjoint(const SQMatrix& a) {
  const auto [a1, a2] = complex_decompose(a);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ComplexMatrix chi(2 * m, 2 * n);
  chi.set_block(0, 0, a1);
  chi.set_block(0, n, a2);
  chi.set_block(m, 0, conj(a2));
  chi.set_block(m, n, conj(a1));
  return chi;
}

}  // namespace

SQMatrix::SQMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

SQMatrix::SQMatrix(std::size_t rows, std::size_t cols, std::vector<SplitQuaternion> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw Error(ErrorKind::ShapeMismatch, "entry count does not match shape");
  for (const auto& q : entries_)
    if (!q.finite()) throw Error(ErrorKind::Parse, "non-finite matrix entry");
}

SQMatrix::SQMatrix(std::initializer_list<std::initializer_list<SplitQuaternion>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  for (const auto& q : entries_)
    if (!q.finite()) throw Error(ErrorKind::Parse, "non-finite matrix entry");
}

SQMatrix SQMatrix::identity(std::size_t n) {
  SQMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = SplitQuaternion(1.0);
  return out;
}

SQMatrix SQMatrix::from_components(const RealMatrix& a0, const RealMatrix& a1, const RealMatrix& a2,
                                   const RealMatrix& a3) {
  const std::size_t m = a0.rows();
  const std::size_t n = a0.cols();
  for (const RealMatrix* c : {&a1, &a2, &a3})
    if (c->rows() != m || c->cols() != n) throw Error(ErrorKind::ShapeMismatch, "component shapes differ");
  SQMatrix out(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = {a0(i, j), a1(i, j), a2(i, j), a3(i, j)};
  return out;
}

RealMatrix SQMatrix::component(int which) const {
  RealMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).coords()[static_cast<std::size_t>(which)];
  return out;
}

double SQMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& q : entries_) s += q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
  return std::sqrt(s);
}

double SQMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& q : entries_) m = std::max(m, q.max_abs_coeff());
  return m;
}

SQMatrix add(const SQMatrix& a, const SQMatrix& b) {
  require_same_shape(a, b, "add");
  SQMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

SQMatrix sub(const SQMatrix& a, const SQMatrix& b) {
  require_same_shape(a, b, "sub");
  SQMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

SQMatrix scale(double c, const SQMatrix& a) {
  return map_entries(a, [c](const SplitQuaternion& q) { return c * q; });
}

SQMatrix matmul(const SQMatrix& a, const SQMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matmul: inner dimensions differ");
  SQMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SplitQuaternion s;
      for (std::size_t l = 0; l < a.cols(); ++l) s += a(i, l) * b(l, j);
      out(i, j) = s;
    }
  return out;
}

SQMatrix right_scale(const SQMatrix& a, const SplitQuaternion& q) {
  return map_entries(a, [&q](const SplitQuaternion& x) { return x * q; });
}

SQMatrix left_scale(const SplitQuaternion& q, const SQMatrix& a) {
  return map_entries(a, [&q](const SplitQuaternion& x) { return q * x; });
}

SQMatrix transpose(const SQMatrix& a) {
  SQMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

SQMatrix conjugate(const SQMatrix& a) {
  return map_entries(a, [](const SplitQuaternion& q) { return conjugate(q); });
}

SQMatrix conj_transpose(const SQMatrix& a) { return transpose(conjugate(a)); }

SQMatrix j_conjugate(const SQMatrix& a) {
  return map_entries(a, [](const SplitQuaternion& q) { return j_conjugate(q); });
}

std::pair<ComplexMatrix, ComplexMatrix> complex_decompose(const SQMatrix& a) {
  ComplexMatrix a1(a.rows(), a.cols());
  ComplexMatrix a2(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& q = a(i, j);
      a1(i, j) = Complex(q.q0, q.q1);
      a2(i, j) = Complex(q.q2, q.q3);
    }
  return {a1, a2};
}

SQMatrix complex_compose(const ComplexMatrix& a1, const ComplexMatrix& a2) {
  if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "complex parts differ in shape");
  }
  SQMatrix out(a1.rows(), a1.cols());
  for (std::size_t i = 0; i < a1.rows(); ++i)
    for (std::size_t j = 0; j < a1.cols(); ++j)
      out(i, j) = {a1(i, j).real(), a1(i, j).imag(), a2(i, j).real(), a2(i, j).imag()};
  return out;
}

ComplexMatrix complex_adjoint(const SQMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::NotSquare, "complex adjoint needs a square matrix");
  return block_adjoint(a);
}

ComplexMatrix complex_stack(const SQMatrix& a) {
  const auto [a1, a2] = complex_decompose(a);
  ComplexMatrix s(2 * a.rows(), a.cols());
  s.set_block(0, 0, a1);
  s.set_block(a.rows(), 0, a2);
  return s;
}

SQMatrix complex_unstack(const ComplexMatrix& s) {
  if (s.rows() % 2 != 0) throw Error(ErrorKind::ShapeMismatch, "complex stack needs an even row count");
  const std::size_t m = s.rows() / 2;
  return complex_compose(s.block(0, 0, m, s.cols()), s.block(m, 0, m, s.cols()));
}

SQMatrix mul_via_adjoint(const SQMatrix& a, const SQMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "mul_via_adjoint: inner dimensions differ");
  const ComplexMatrix product = block_adjoint(b).transpose() * complex_stack(transpose(a));
  return transpose(complex_unstack(product));
}

SQMatrix inverse(const SQMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::NotSquare, "inverse needs a square matrix");
  const std::size_t n = a.rows();
  const RealMatrix phi_a = realrep::phi(a);
  const RealMatrix phi_inv = numkernel::inverse(phi_a);
  const RealMatrix p = realrep::structure_p(n);
  const SQMatrix inv = realrep::phi_extract(p * phi_inv * p);

  const double cond = phi_a.norm_inf() * phi_inv.norm_inf();
  const double err = (matmul(a, inv) - SQMatrix::identity(n)).max_abs();
  if (err > 1e-9 * std::max(1.0, cond)) {
    throw Error(ErrorKind::Singular, "inverse fails A A^-1 = I check (error " + std::to_string(err) + ")");
  }
  return inv;
}

SQMatrix consim_transform(const SQMatrix& a, const SQMatrix& p) {
  if (!a.square() || !p.square()) throw Error(ErrorKind::NotSquare, "consimilarity needs square matrices");
  if (a.rows() != p.rows()) throw Error(ErrorKind::ShapeMismatch, "A and P differ in size");
  return j_conjugate(p) * a * inverse(p);
}

bool verify_consimilar(const SQMatrix& a, const SQMatrix& b, const SQMatrix& p, double tol) {
  require_same_shape(a, b, "verify_consimilar");
  return (consim_transform(a, p) - b).frobenius() <= tol;
}

}  // namespace sqmat
