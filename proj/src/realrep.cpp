#include "sqmat/realrep.hpp"

#include <array>

#include "sqmat/numkernel.hpp"

namespace sqmat::realrep {

namespace {

using SignTable = std::array<std::array<int, 4>, 4>;

// phi block layout: entry {component, sign} for block (row, col).
struct BlockRef {
  int component;
  int sign;
};
constexpr std::array<std::array<BlockRef, 4>, 4> kPhiLayout{{
    {{{0, 1}, {1, 1}, {2, 1}, {3, -1}}},
    {{{1, 1}, {0, -1}, {3, 1}, {2, 1}}},
    {{{2, 1}, {3, -1}, {0, 1}, {1, 1}}},
    {{{3, 1}, {2, 1}, {1, 1}, {0, -1}}},
}};

constexpr SignTable kP{{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}};
constexpr SignTable kQ{{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}};
constexpr SignTable kR{{{0, 0, -1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}};
constexpr SignTable kS{{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}};
constexpr SignTable kEps2{{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}}};

RealMatrix expand(const SignTable& t, std::size_t m) {
  RealMatrix out(4 * m, 4 * m);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) {
      const int s = t[u][v];
      if (s == 0) continue;
      for (std::size_t i = 0; i < m; ++i) out(u * m + i, v * m + i) = s;
    }
  return out;
}

}  // namespace

RealMatrix phi(const SQMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::array<RealMatrix, 4> comps{a.component(0), a.component(1), a.component(2), a.component(3)};
  RealMatrix out(4 * m, 4 * n);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) {
      const BlockRef ref = kPhiLayout[u][v];
      out.set_block(u * m, v * n, comps[static_cast<std::size_t>(ref.component)], ref.sign);
    }
  return out;
}

SQMatrix phi_extract(const RealMatrix& m) {
  if (m.rows() % 4 != 0 || m.cols() % 4 != 0) {
    throw Error(ErrorKind::NotStructured, "dimensions are not multiples of 4");
  }
  const std::size_t r = m.rows() / 4;
  const std::size_t c = m.cols() / 4;
  SQMatrix a = SQMatrix::from_components(m.block(0, 0, r, c), m.block(r, 0, r, c), m.block(2 * r, 0, r, c),
                                         m.block(3 * r, 0, r, c));
  const double mismatch = (phi(a) - m).norm_inf();
  if (mismatch > 1e-9 * (1.0 + m.norm_inf())) {
    throw Error(ErrorKind::NotStructured, "matrix does not carry the real-representation block pattern");
  }
  return a;
}

RealMatrix stack(const SQMatrix& a) {
  const std::size_t m = a.rows();
  RealMatrix out(4 * m, a.cols());
  for (int s = 0; s < 4; ++s) out.set_block(static_cast<std::size_t>(s) * m, 0, a.component(s));
  return out;
}

SQMatrix unstack(const RealMatrix& v) {
  if (v.rows() % 4 != 0) throw Error(ErrorKind::ShapeMismatch, "stacked rows must be divisible by 4");
  const std::size_t m = v.rows() / 4;
  const std::size_t n = v.cols();
  return SQMatrix::from_components(v.block(0, 0, m, n), v.block(m, 0, m, n), v.block(2 * m, 0, m, n),
                                   v.block(3 * m, 0, m, n));
}

RealMatrix structure_p(std::size_t m) { return expand(kP, m); }
RealMatrix structure_q(std::size_t m) { return expand(kQ, m); }
RealMatrix structure_r(std::size_t m) { return expand(kR, m); }
RealMatrix structure_s(std::size_t m) { return expand(kS, m); }
RealMatrix structure_eps2(std::size_t m) { return expand(kEps2, m); }

StructureSet structure_matrices(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::ShapeMismatch, "structure matrices need m >= 1");
  return {structure_p(m), structure_q(m), structure_r(m), structure_s(m), structure_eps2(m)};
}

RealMatrix rho(const SplitQuaternion& q, std::size_t m) {
  return numkernel::kron(right_rep(q), RealMatrix::identity(m));
}

}  // namespace sqmat::realrep
