#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "sqmat/numkernel.hpp"

using namespace sqmat;
using namespace sqmat::numkernel;

namespace {

RealMatrix column(std::initializer_list<double> v) { return RealMatrix(v.size(), 1, std::vector<double>(v)); }

double vec_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> times(const RealMatrix& m, std::span<const double> v) {
  std::vector<double> out(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

bool has_eigenvalue(const Spectrum& s, Complex z, double tol) {
  return std::any_of(s.values.begin(), s.values.end(), [&](Complex v) { return std::abs(v - z) < tol; });
}

}  // namespace

TEST_CASE("lu_solve") {
  oracle::Rng rng(21);
  const RealMatrix k = rng.real_matrix(3, 2);
  CHECK(lu_solve(RealMatrix::identity(3), k) == k);
  CHECK(max_abs_diff(lu_solve(RealMatrix{{2, 0}, {0, 4}}, column({2, 8})), column({1, 2})) < 1e-15);
  CHECK_THROWS_AS(lu_solve(RealMatrix{{1, 1}, {1, 1}}, column({1, 1})), Error);
  try {
    (void)lu_solve(RealMatrix{{1, 1}, {1, 1}}, column({1, 1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
  CHECK_THROWS_AS(lu_solve(RealMatrix(2, 3), column({1, 1})), Error);

  SUBCASE("well-conditioned 50x50") {
    RealMatrix m = RealMatrix::identity(50);
    m *= 5.0;
    m += rng.real_matrix(50, 50);
    const RealMatrix rhs = rng.real_matrix(50, 3);
    const RealMatrix x = lu_solve(m, rhs);
    CHECK((m * x - rhs).frobenius() < 1e-10 * (1 + rhs.frobenius()));
  }
}

TEST_CASE("complex_lu_solve") {
  const Complex i{0.0, 1.0};
  const ComplexMatrix k{{Complex{1, 2}}, {Complex{3, -1}}};
  CHECK(complex_lu_solve(ComplexMatrix::identity(2), k) == k);
  const ComplexMatrix x = complex_lu_solve(ComplexMatrix{{i}}, ComplexMatrix{{Complex{2, 3}}});
  CHECK(std::abs(x(0, 0) - (-i) * Complex{2, 3}) < 1e-15);
  try {
    (void)complex_lu_solve(ComplexMatrix{{Complex{1}, i}, {Complex{2}, 2.0 * i}}, k);
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

TEST_CASE("inverse and determinant") {
  const RealMatrix m{{4, 7}, {2, 6}};
  CHECK(max_abs_diff(inverse(m), RealMatrix{{0.6, -0.7}, {-0.2, 0.4}}) < 1e-15);
  CHECK(determinant(m) == doctest::Approx(10.0));
  CHECK(determinant(RealMatrix{{1, 2}, {2, 4}}) == 0.0);
  CHECK(determinant(RealMatrix{{0, 1}, {1, 0}}) == doctest::Approx(-1.0));
}

TEST_CASE("solve_general") {
  SUBCASE("identity is unique") {
    const std::vector<double> k{3, -1, 2};
    const auto r = solve_general(RealMatrix::identity(3), k, 1e-12);
    CHECK(r.kind == SolveKind::Unique);
    CHECK(r.particular == k);
    CHECK(r.null_basis.empty());
    CHECK(r.rank == 3);
  }
  SUBCASE("underdetermined") {
    const std::vector<double> k{1, -1};
    const auto r = solve_general(RealMatrix{{1, -1}, {-1, 1}}, k, 1e-12);
    CHECK(r.kind == SolveKind::Underdetermined);
    CHECK(r.particular == std::vector<double>{1, 0});
    REQUIRE(r.null_basis.size() == 1);
    CHECK(r.null_basis[0] == std::vector<double>{1, 1});
    CHECK(r.rank == 1);
  }
  SUBCASE("inconsistent") {
    const std::vector<double> k{1, 1};
    const auto r = solve_general(RealMatrix{{1, -1}, {-1, 1}}, k, 1e-12);
    CHECK(r.kind == SolveKind::Inconsistent);
    CHECK(r.particular.empty());
  }
  SUBCASE("rectangular and random rank-deficient") {
    oracle::Rng rng(22);
    for (int t = 0; t < 50; ++t) {
      // 6x7 of rank 4.
      const RealMatrix m = rng.real_matrix(6, 4) * rng.real_matrix(4, 7);
      const RealMatrix xm = rng.real_matrix(7, 1);
      const std::vector<double> x(xm.data().begin(), xm.data().end());
      const std::vector<double> k = times(m, x);
      const double tol = 1e-10;
      const auto r = solve_general(m, k, tol);
      REQUIRE(r.kind == SolveKind::Underdetermined);
      CHECK(r.rank == 4);
      CHECK(r.null_basis.size() == 3);
      auto res = times(m, r.particular);
      for (std::size_t i = 0; i < res.size(); ++i) res[i] -= k[i];
      CHECK(vec_norm(res) <= 1e-9 * (1 + vec_norm(k)));
      for (const auto& v : r.null_basis) CHECK(vec_norm(times(m, v)) <= 1e-9 * m.norm_inf() * vec_norm(v));
    }
  }
}

TEST_CASE("kron and vec") {
  oracle::Rng rng(23);
  const RealMatrix m = rng.real_matrix(2, 3);
  RealMatrix blockdiag(4, 6);
  blockdiag.set_block(0, 0, m);
  blockdiag.set_block(2, 3, m);
  CHECK(kron(RealMatrix::identity(2), m) == blockdiag);
  CHECK(kron(RealMatrix{{2}}, m) == 2.0 * m);

  const RealMatrix y{{1, 2, 3}, {4, 5, 6}};
  CHECK(vec(y) == std::vector<double>{1, 4, 2, 5, 3, 6});
  CHECK(unvec(vec(y), 2, 3) == y);

  for (int t = 0; t < 20; ++t) {
    const RealMatrix a = rng.real_matrix(2, 2);
    const RealMatrix b = rng.real_matrix(2, 2);
    const RealMatrix x = rng.real_matrix(2, 2);
    const auto lhs = times(kron(b.transpose(), a), vec(x));
    const auto rhs = vec(a * x * b);
    for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(std::abs(lhs[i] - rhs[i]) < 1e-12);
  }
}

TEST_CASE("eigenvalues: small exact cases") {
  const auto d = eigenvalues(RealMatrix{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
  REQUIRE(d.values.size() == 4);
  CHECK(spectrum_distance(d, Spectrum{{1, 1, -1, -1}}) < 1e-14);

  CHECK(spectrum_distance(eigenvalues(RealMatrix{{0, 1}, {1, 0}}), Spectrum{{1, -1}}) < 1e-14);

  const auto rot = eigenvalues(RealMatrix{{0, -1}, {1, 0}});
  CHECK(spectrum_distance(rot, Spectrum{{Complex{0, 1}, Complex{0, -1}}}) < 1e-14);

  CHECK(eigenvalues(RealMatrix{{7}}).values == std::vector<Complex>{7});
  CHECK(spectrum_distance(eigenvalues(RealMatrix(3, 3)), Spectrum{{0, 0, 0}}) == 0.0);
  CHECK(spectrum_distance(Spectrum{{1}}, Spectrum{{1, 2}}) == INFINITY);
}

TEST_CASE("eigenvalues: trace, determinant and residual on random 12x12") {
  oracle::Rng rng(24);
  for (int t = 0; t < 30; ++t) {
    const RealMatrix m = rng.real_matrix(12, 12);
    const auto s = eigenvalues(m);
    REQUIRE(s.values.size() == 12);

    Complex sum{0.0};
    Complex prod{1.0};
    for (auto v : s.values) {
      sum += v;
      prod *= v;
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < 12; ++i) trace += m(i, i);
    CHECK(std::abs(sum - trace) < 1e-7 * m.frobenius());
    const double det = determinant(m);
    CHECK(std::abs(prod - det) <= 1e-6 * std::abs(det));

    // Conjugate-pair closure.
    for (auto v : s.values) CHECK(has_eigenvalue(s, std::conj(v), 1e-8));

    // det(M - lambda I) ~ 0 in the complex sense: M - lambda I is nearly singular.
    for (auto v : s.values) {
      ComplexMatrix shifted(12, 12);
      for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) shifted(i, j) = m(i, j) - (i == j ? v : Complex{0.0});
      bool singular = false;
      try {
        const ComplexMatrix inv = inverse(shifted);
        singular = inv.max_abs() > 1e6;
      } catch (const Error&) {
        singular = true;
      }
      CHECK(singular);
    }
  }
}

TEST_CASE("eigenvalues: repeated and defective") {
  // Jordan block: eigenvalue 2 of multiplicity 3.
  const auto s = eigenvalues(RealMatrix{{2, 1, 0}, {0, 2, 1}, {0, 0, 2}});
  CHECK(spectrum_distance(s, Spectrum{{2, 2, 2}}) < 1e-12);
  // Companion of (x^2 + 1)^2: +-i, each twice.
  const auto c = eigenvalues(RealMatrix{{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, -2}, {0, 0, 1, 0}});
  CHECK(spectrum_distance(c, Spectrum{{Complex{0, 1}, Complex{0, 1}, Complex{0, -1}, Complex{0, -1}}}) < 1e-6);
}
