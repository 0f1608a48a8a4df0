#include "sqmat/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sqmat::numkernel {

namespace {

template <typename T>
struct LuFactors {
  Dense<T> lu;
  std::vector<std::size_t> perm;
  int swaps = 0;
};

template <typename T>
LuFactors<T> lu_factor(const Dense<T>& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "LU needs a square matrix");
  const std::size_t n = m.rows();
  LuFactors<T> f{m, std::vector<std::size_t>(n), 0};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  const double threshold = kSingularThreshold * m.norm_inf();
  auto& a = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (std::abs(a(p, k)) < threshold || a(p, k) == T{}) {
      throw Error(ErrorKind::Singular, "pivot below threshold at column " + std::to_string(k));
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(f.perm[k], f.perm[p]);
      ++f.swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const T factor = a(i, k) / a(k, k);
      a(i, k) = factor;
      if (factor == T{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return f;
}

template <typename T>
Dense<T> lu_apply(const LuFactors<T>& f, const Dense<T>& k) {
  const std::size_t n = f.lu.rows();
  if (k.rows() != n) throw Error(ErrorKind::ShapeMismatch, "right-hand side rows differ from system size");
  Dense<T> x(n, k.cols());
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<T> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      T s = k(f.perm[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * y[j];
      y[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      T s = y[ii];
      for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * x(j, c);
      x(ii, c) = s / f.lu(ii, ii);
    }
  }
  return x;
}

}  // namespace

RealMatrix lu_solve(const RealMatrix& m, const RealMatrix& k) { return lu_apply(lu_factor(m), k); }

ComplexMatrix complex_lu_solve(const ComplexMatrix& m, const ComplexMatrix& k) {
  return lu_apply(lu_factor(m), k);
}

RealMatrix inverse(const RealMatrix& m) { return lu_solve(m, RealMatrix::identity(m.rows())); }

ComplexMatrix inverse(const ComplexMatrix& m) { return complex_lu_solve(m, ComplexMatrix::identity(m.rows())); }

double determinant(const RealMatrix& m) {
  LuFactors<double> f;
  try {
    f = lu_factor(m);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular) return 0.0;
    throw;
  }
  double d = (f.swaps % 2 == 0) ? 1.0 : -1.0;
  for (std::size_t i = 0; i < m.rows(); ++i) d *= f.lu(i, i);
  return d;
}

LinearSolveOutcome solve_general(const RealMatrix& m, std::span<const double> k, double tol) {
  const std::size_t p = m.rows();
  const std::size_t q = m.cols();
  if (k.size() != p) throw Error(ErrorKind::ShapeMismatch, "right-hand side length differs from row count");

  RealMatrix a = m;
  std::vector<double> rhs(k.begin(), k.end());
  const double scale = m.norm_inf();
  const double threshold = tol * scale;
  double rhs_norm = 0.0;
  for (double v : rhs) rhs_norm = std::max(rhs_norm, std::abs(v));

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < q && r < p; ++c) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < p; ++i)
      if (std::abs(a(i, c)) > std::abs(a(best, c))) best = i;
    if (std::abs(a(best, c)) <= threshold || a(best, c) == 0.0) continue;
    if (best != r) {
      for (std::size_t j = 0; j < q; ++j) std::swap(a(r, j), a(best, j));
      std::swap(rhs[r], rhs[best]);
    }
    const double inv = 1.0 / a(r, c);
    for (std::size_t j = c; j < q; ++j) a(r, j) *= inv;
    rhs[r] *= inv;
    a(r, c) = 1.0;
    for (std::size_t i = 0; i < p; ++i) {
      if (i == r) continue;
      const double f = a(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = c; j < q; ++j) a(i, j) -= f * a(r, j);
      a(i, c) = 0.0;
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  LinearSolveOutcome out;
  out.rank = r;
  for (std::size_t i = r; i < p; ++i) {
    if (std::abs(rhs[i]) > tol * std::max(1.0, scale) * (1.0 + rhs_norm)) {
      out.kind = SolveKind::Inconsistent;
      return out;
    }
  }

  out.particular.assign(q, 0.0);
  for (std::size_t t = 0; t < r; ++t) out.particular[pivot_cols[t]] = rhs[t];

  std::vector<bool> is_pivot(q, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < q; ++f) {
    if (is_pivot[f]) continue;
    std::vector<double> v(q, 0.0);
    v[f] = 1.0;
    for (std::size_t t = 0; t < r; ++t) v[pivot_cols[t]] = -a(t, f);
    out.null_basis.push_back(std::move(v));
  }
  out.kind = out.null_basis.empty() ? SolveKind::Unique : SolveKind::Underdetermined;
  return out;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double f = a(i, j);
      if (f == 0.0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(i * b.rows() + r, j * b.cols() + c) = f * b(r, c);
    }
  return out;
}

std::vector<double> vec(const RealMatrix& y) {
  std::vector<double> v;
  v.reserve(y.rows() * y.cols());
  for (std::size_t j = 0; j < y.cols(); ++j)
    for (std::size_t i = 0; i < y.rows(); ++i) v.push_back(y(i, j));
  return v;
}

RealMatrix unvec(std::span<const double> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "vector length differs from rows*cols");
  RealMatrix y(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) y(i, j) = v[j * rows + i];
  return y;
}

namespace {

void reduce_to_hessenberg(RealMatrix& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  std::vector<double> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += a(i, k) * a(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (a(k + 1, k) > 0) alpha = -alpha;
    // v = x - alpha e1 over rows k+1..n-1
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    // A <- H A
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += v[i] * a(i, j);
      s = 2.0 * s / vnorm2;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= s * v[i];
    }
    // A <- A H
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      s = 2.0 * s / vnorm2;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * v[j];
    }
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

constexpr double kDeflationTol = 1e-12;

}  // namespace

Spectrum eigenvalues(const RealMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "eigenvalues need a square matrix");
  const int n = static_cast<int>(m.rows());
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "empty matrix");
  RealMatrix a = m;
  reduce_to_hessenberg(a);

  std::vector<Complex> w(static_cast<std::size_t>(n));
  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));

  const double eps = std::numeric_limits<double>::epsilon();
  const long max_iterations = 100L * n;
  long total_iterations = 0;
  auto sign = [](double mag, double s) { return s >= 0.0 ? std::abs(mag) : -std::abs(mag); };

  int nn = n - 1;
  double t = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l > 0; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= kDeflationTol * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        w[nn] = Complex(x + t, 0.0);
        --nn;
        continue;
      }
      double y = a(nn - 1, nn - 1);
      double ww = a(nn, nn - 1) * a(nn - 1, nn);
      if (l == nn - 1) {
        const double p = 0.5 * (y - x);
        const double q = p * p + ww;
        double z = std::sqrt(std::abs(q));
        x += t;
        if (q >= 0.0) {
          z = p + sign(z, p);
          w[nn - 1] = w[nn] = Complex(x + z, 0.0);
          if (z != 0.0) w[nn] = Complex(x - ww / z, 0.0);
        } else {
          w[nn - 1] = Complex(x + p, z);
          w[nn] = Complex(x + p, -z);
        }
        nn -= 2;
        continue;
      }

      if (++total_iterations > max_iterations) {
        throw Error(ErrorKind::NoConvergence, "QR iteration exceeded " + std::to_string(max_iterations) + " sweeps");
      }
      if (its > 0 && its % 10 == 0) {
        // Exceptional shift.
        t += x;
        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
        const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
        y = x = 0.75 * s;
        ww = -0.4375 * s * s;
      }
      ++its;

      int mm = nn - 2;
      double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
      for (; mm >= l; --mm) {
        z = a(mm, mm);
        r = x - z;
        double s = y - z;
        p = (r * s - ww) / a(mm + 1, mm) + a(mm, mm + 1);
        q = a(mm + 1, mm + 1) - z - r - s;
        r = a(mm + 2, mm + 1);
        s = std::abs(p) + std::abs(q) + std::abs(r);
        p /= s;
        q /= s;
        r /= s;
        if (mm == l) break;
        const double u = std::abs(a(mm, mm - 1)) * (std::abs(q) + std::abs(r));
        const double v = std::abs(p) * (std::abs(a(mm - 1, mm - 1)) + std::abs(z) + std::abs(a(mm + 1, mm + 1)));
        if (u <= eps * v) break;
      }
      for (int i = mm; i < nn - 1; ++i) {
        a(i + 2, i) = 0.0;
        if (i != mm) a(i + 2, i - 1) = 0.0;
      }
      for (int k = mm; k < nn; ++k) {
        if (k != mm) {
          p = a(k, k - 1);
          q = a(k + 1, k - 1);
          r = 0.0;
          if (k + 1 != nn) r = a(k + 2, k - 1);
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x != 0.0) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        const double s = sign(std::sqrt(p * p + q * q + r * r), p);
        if (s == 0.0) continue;
        if (k == mm) {
          if (l != mm) a(k, k - 1) = -a(k, k - 1);
        } else {
          a(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= nn; ++j) {
          p = a(k, j) + q * a(k + 1, j);
          if (k + 1 != nn) {
            p += r * a(k + 2, j);
            a(k + 2, j) -= p * z;
          }
          a(k + 1, j) -= p * y;
          a(k, j) -= p * x;
        }
        const int upper = std::min(nn, k + 3);
        for (int i = l; i <= upper; ++i) {
          p = x * a(i, k) + y * a(i, k + 1);
          if (k + 1 != nn) {
            p += z * a(i, k + 2);
            a(i, k + 2) -= p * r;
          }
          a(i, k + 1) -= p * q;
          a(i, k) -= p;
        }
      }
    } while (l + 1 < nn);
  }
  return Spectrum{std::move(w)};
}

double spectrum_distance(const Spectrum& a, const Spectrum& b) {
  if (a.values.size() != b.values.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.values.size(), false);
  double worst = 0.0;
  for (const Complex& x : a.values) {
    std::size_t best = b.values.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.values.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b.values[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

}  // namespace sqmat::numkernel
