#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sqmat/numkernel.hpp"
#include "sqmat/scalar.hpp"

using namespace sqmat;
using oracle::diff;

namespace {

const SplitQuaternion kOne{1.0};
const SplitQuaternion kI = SplitQuaternion::i();
const SplitQuaternion kJ = SplitQuaternion::j();
const SplitQuaternion kK = SplitQuaternion::k();

RealMatrix coords_column(const SplitQuaternion& q) {
  const auto c = q.coords();
  return RealMatrix(4, 1, {c[0], c[1], c[2], c[3]});
}

void check_throws_kind(auto&& f, ErrorKind kind) {
  try {
    f();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

}  // namespace

TEST_CASE("mul matches the basis table") {
  CHECK(kJ * kK == -kI);
  CHECK(kOne * SplitQuaternion(2, 3, 4, 5) == SplitQuaternion(2, 3, 4, 5));
  CHECK((kOne + kI) * (kOne + kJ) == SplitQuaternion(1, 1, 1, 1));
  CHECK(kI * kI == SplitQuaternion(-1));
  CHECK(kJ * kJ == kOne);
  CHECK(kK * kK == kOne);
  CHECK(kI * kJ == kK);
  CHECK(kK * kI == kJ);

  oracle::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = rng.quaternion();
    const auto b = rng.quaternion();
    CHECK(diff(a * b, oracle::table_mul(a, b)) < 1e-15);
  }
}

TEST_CASE("conjugates") {
  CHECK(conjugate(kOne) == kOne);
  CHECK(conjugate(kI) == -kI);
  CHECK(conjugate(SplitQuaternion(2, 1, 1, 1)) == SplitQuaternion(2, -1, -1, -1));

  CHECK(j_conjugate(kI) == -kI);
  CHECK(j_conjugate(kJ) == kJ);
  CHECK(j_conjugate(SplitQuaternion(1, 0, 2, 0)) == SplitQuaternion(1, 0, 2, 0));

  oracle::Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto q = rng.quaternion();
    const auto p = rng.quaternion();
    CHECK(j_conjugate(j_conjugate(q)) == q);
    // j q j computed with the basis table.
    CHECK(diff(j_conjugate(q), oracle::table_mul(oracle::table_mul(kJ, q), kJ)) < 1e-15);
    CHECK(diff(j_conjugate(q * p), j_conjugate(q) * j_conjugate(p)) < 1e-12);
  }
}

TEST_CASE("quadratic form, norm and causal character") {
  CHECK(quadratic_form(SplitQuaternion(1, 0, 2, 0)) == -3.0);
  CHECK(quadratic_form(kI) == 1.0);
  CHECK(quadratic_form(SplitQuaternion(1, 0, 1, 0)) == 0.0);

  CHECK(norm(SplitQuaternion(2, 1, 1, 1)) == doctest::Approx(std::sqrt(3.0)));
  CHECK(classify(SplitQuaternion(2, 1, 1, 1)) == CausalCharacter::Timelike);
  CHECK(norm(SplitQuaternion(1, 0, 2, 0)) == doctest::Approx(std::sqrt(3.0)));
  CHECK(classify(SplitQuaternion(1, 0, 2, 0)) == CausalCharacter::Spacelike);
  CHECK(norm(SplitQuaternion(1, 0, 1, 0)) == 0.0);
  CHECK(classify(SplitQuaternion(1, 0, 1, 0)) == CausalCharacter::Null);

  // Exact sign, no dead zone; the tolerant overload widens the null band.
  const SplitQuaternion tiny{1.0, 1e-5, 1.0, 0.0};
  CHECK(classify(tiny) == CausalCharacter::Timelike);
  CHECK(classify(tiny, 1e-9) == CausalCharacter::Null);

  oracle::Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto q = rng.small_integer_quaternion();
    CHECK(quadratic_form(q) == (q * conjugate(q)).q0);
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(kJ) == kJ);
  CHECK(diff(inverse(SplitQuaternion(2, 1)), 0.2 * SplitQuaternion(2, -1)) < 1e-15);
  check_throws_kind([] { (void)inverse(SplitQuaternion(1, 0, 1, 0)); }, ErrorKind::NullDivisor);
  check_throws_kind([] { (void)inverse(SplitQuaternion(0.0)); }, ErrorKind::NullDivisor);

  oracle::Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const auto q = rng.quaternion();
    if (!invertible(q) || std::abs(quadratic_form(q)) < 1e-3) continue;
    CHECK(diff(q * inverse(q), kOne) < 1e-10);
  }
}

TEST_CASE("left and right representations") {
  CHECK(left_rep(kOne) == RealMatrix::identity(4));
  CHECK(left_rep(kI) == RealMatrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  CHECK(right_rep(kI) == RealMatrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});

  oracle::Rng rng(15);
  for (int t = 0; t < 300; ++t) {
    const auto q = rng.quaternion();
    const auto p = rng.quaternion();
    const auto x = rng.quaternion();
    // Columns are images of the basis under x -> q x and x -> x q.
    CHECK(max_abs_diff(left_rep(q), oracle::matrix_of([&](const SplitQuaternion& e) { return oracle::table_mul(q, e); })) < 1e-15);
    CHECK(max_abs_diff(right_rep(q), oracle::matrix_of([&](const SplitQuaternion& e) { return oracle::table_mul(e, q); })) < 1e-15);
    CHECK(max_abs_diff(left_rep(q) * coords_column(x), coords_column(q * x)) < 1e-12);
    CHECK(max_abs_diff(right_rep(q) * coords_column(x), coords_column(x * q)) < 1e-12);

    CHECK(left_rep(q + p) == left_rep(q) + left_rep(p));
    CHECK(right_rep(q + p) == right_rep(q) + right_rep(p));
    CHECK(max_abs_diff(left_rep(q * p), left_rep(q) * left_rep(p)) < 1e-10);
    // x -> x q p is "apply q, then p", so the right representation reverses order.
    CHECK(max_abs_diff(right_rep(q * p), right_rep(p) * right_rep(q)) < 1e-10);
    CHECK(max_abs_diff(left_rep(q) * right_rep(p), right_rep(p) * left_rep(q)) < 1e-10);

    const double iq = quadratic_form(q);
    CHECK(numkernel::determinant(left_rep(q)) == doctest::Approx(iq * iq).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("right representation is not multiplicative in the stated order") {
  // R(ij) = R(k) while R(i) R(j) = R(j i) = R(-k).
  CHECK(right_rep(kI * kJ) == right_rep(kK));
  CHECK(max_abs_diff(right_rep(kI) * right_rep(kJ), right_rep(-kK)) == 0.0);
  CHECK(max_abs_diff(right_rep(kI * kJ), right_rep(kI) * right_rep(kJ)) == 2.0);
}

TEST_CASE("scalar consimilarity") {
  SUBCASE("slice") {
    const auto f = solve_consimilarity(kI, -kI);
    REQUIRE(f.kind == ConsimSolutionFamily::Kind::Slice);
    CHECK(f.generator == SplitQuaternion(0, -2, 0, 0));
    const auto x = f.generator;
    CHECK(kI * x == SplitQuaternion(2.0));
    CHECK(conjugate(x) * -kI == SplitQuaternion(2.0));
  }
  SUBCASE("hyperplane") {
    const auto f = solve_consimilarity(kI, kI);
    REQUIRE(f.kind == ConsimSolutionFamily::Kind::Hyperplane);
    CHECK(f.constraint == std::array<double, 4>{0, -1, 0, 0});
    CHECK(kI * kOne == conjugate(kOne) * kI);
    const auto w = f.witness();
    CHECK(norm(w) > 0.1);
    CHECK(diff(kI * w, conjugate(w) * kI) < 1e-12);
  }
  SUBCASE("empty") { CHECK(solve_consimilarity(kI, 2.0 * kI).kind == ConsimSolutionFamily::Kind::Empty); }
  SUBCASE("mixed or null characters are rejected") {
    check_throws_kind([] { (void)solve_consimilarity(kI, kJ); }, ErrorKind::MixedCharacter);
    check_throws_kind([] { (void)solve_consimilarity(SplitQuaternion(1, 0, 1, 0), kI); }, ErrorKind::MixedCharacter);
  }
  SUBCASE("random transported pairs, unit scale") {
    oracle::Rng rng(16);
    int checked = 0;
    while (checked < 200) {
      const auto a = rng.quaternion();
      const auto p = rng.quaternion();
      if (std::abs(quadratic_form(a)) < 1e-2 || std::abs(quadratic_form(p)) < 1e-2) continue;
      const auto b = inverse(conjugate(p)) * a * p;
      const auto f = solve_consimilarity(a, b);
      REQUIRE(f.kind == ConsimSolutionFamily::Kind::Slice);
      const auto x = f.generator;
      CHECK(coeff_norm(a * x - conjugate(x) * b) < 1e-9 * (1 + norm(a)) * (1 + coeff_norm(x)));
      ++checked;
    }
  }
}

TEST_CASE("canonical witness") {
  const auto p = canonical_witness(2.0 * kI);
  CHECK(diff(p, SplitQuaternion(2, -2)) < 1e-15);
  CHECK(diff(conjugate(p) * SplitQuaternion(2.0) * inverse(p), 2.0 * kI) < 1e-12);
  check_throws_kind([] { (void)canonical_witness(SplitQuaternion(3.0)); }, ErrorKind::RealInput);
  check_throws_kind([] { (void)canonical_witness(SplitQuaternion(1, 0, 1, 0)); }, ErrorKind::ZeroNorm);
  // Spacelike: conj(p) ||a|| p^-1 = (||a||^2 + a (||a|| + a0)) / a0, not a.
  check_throws_kind([] { (void)canonical_witness(SplitQuaternion(1, 0, 2, 0)); }, ErrorKind::FormulaInapplicable);
}

TEST_CASE("square roots") {
  const auto [x, y] = sqrt(2.0 * kI);
  CHECK(diff(x, SplitQuaternion(1, 1)) < 1e-12);
  CHECK(diff(y, SplitQuaternion(-1, -1)) < 1e-12);
  CHECK(diff(x * x, 2.0 * kI) < 1e-12);

  check_throws_kind([] { (void)sqrt(SplitQuaternion(4.0)); }, ErrorKind::RealInput);
  check_throws_kind([] { (void)sqrt(SplitQuaternion(1, 0, 1, 0)); }, ErrorKind::ZeroNorm);
  // Timelike with a0 < -||a||: no split quaternion squares to it, and the
  // formula yields a root of -a instead.
  check_throws_kind([] { (void)sqrt(SplitQuaternion(-5, 0, 3, 0)); }, ErrorKind::FormulaInapplicable);
  // a0 = -||a|| makes ||(||a|| + a)|| vanish.
  check_throws_kind([] { (void)sqrt(SplitQuaternion(-1, 1, 1, 0)); }, ErrorKind::DegenerateDenominator);

  oracle::Rng rng(17);
  int checked = 0;
  while (checked < 200) {
    const auto a = rng.quaternion();
    if (quadratic_form(a) < 1e-2 || a.q0 < 0.0) continue;
    const auto [r1, r2] = sqrt(a);
    CHECK(coeff_norm(r1 * r1 - a) < 1e-9 * (1 + norm(a)));
    CHECK(r2 == -r1);
    ++checked;
  }
}
