#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "matchlat/linalg.hpp"
#include "support.hpp"

using namespace matchlat;

namespace {

oracle::Mat random_mat(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  oracle::Mat m(static_cast<std::size_t>(rows), std::vector<std::int64_t>(static_cast<std::size_t>(cols)));
  for (auto& row : m)
    for (auto& x : row) x = dist(rng);
  return m;
}

IntMatrix ints(const oracle::Mat& m) { return support::from_mat(m, m.empty() ? 0 : m[0].size()); }

}  // namespace

TEST_CASE("rank agrees with fraction-free elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    auto m = random_mat(rng, rows, cols, -2, 2);
    if (trial % 3 == 0 && rows > 1) m[1] = m[0];  // force dependence
    CHECK(rank(ints(m)) == static_cast<std::size_t>(oracle::bareiss_rank(m)));
  }
}

TEST_CASE("RowSpace adds only independent rows") {
  RowSpace s(3);
  CHECK(s.add(IntVector{1, 2, 3}));
  CHECK_FALSE(s.add(IntVector{2, 4, 6}));
  CHECK(s.add(IntVector{0, 1, 1}));
  CHECK(s.contains(IntVector{1, 3, 4}));
  CHECK_FALSE(s.contains(IntVector{0, 0, 1}));
  CHECK(s.rank() == 2);
}

TEST_CASE("solve finds exact rational solutions") {
  const RatMatrix m = RatMatrix::from_rows({{2, 1}, {1, 3}}, 2);
  const auto x = solve(m, RatVector{Rational(1), Rational(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1, 5));
  CHECK((*x)[1] == Rational(3, 5));
  const RatMatrix singular = RatMatrix::from_rows({{1, 1}, {2, 2}}, 2);
  CHECK_FALSE(solve(singular, RatVector{Rational(1), Rational(3)}).has_value());
}

TEST_CASE("HNF is canonical: different generators of one lattice agree") {
  const IntMatrix a = IntMatrix::from_rows({{2, 0, 4}, {0, 3, 3}}, 3);
  const IntMatrix b = IntMatrix::from_rows({{2, 3, 7}, {4, 3, 11}, {2, 6, 10}}, 3);
  CHECK(hnf(a) == hnf(b));
  const Lattice l = hnf(b);
  CHECK(l.rank() == 2);
  for (std::size_t r = 0; r < l.rank(); ++r) {
    const std::size_t p = l.pivots()[r];
    CHECK(l.basis()(r, p) > 0);
    for (std::size_t above = 0; above < r; ++above) {
      CHECK(l.basis()(above, p) >= 0);
      CHECK(l.basis()(above, p) < l.basis()(r, p));
    }
  }
}

TEST_CASE("Smith form matches determinantal divisors and U·M·V = D") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 4);
    const auto m = random_mat(rng, rows, cols, -4, 4);
    const IntMatrix mi = ints(m);
    const SmithForm s = smith(mi);
    const auto expected = oracle::smith_divisors(m);
    REQUIRE(s.divisors.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(s.divisors[i] == Integer(static_cast<long>(expected[i])));
    CHECK(multiply(multiply(s.u, mi), s.v) == s.d);
    CHECK(multiply(s.v, s.v_inverse) == identity_matrix(static_cast<std::size_t>(cols)));
  }
}

TEST_CASE("saturation, membership and index") {
  // 2·Z ⊕ Z inside Z²: index 2.
  const IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 1}}, 2);
  const Lattice l = hnf(m);
  const Lattice sat = saturation(m);
  CHECK(sat == hnf(identity_matrix(2)));
  CHECK(lattice_index(l, sat) == Integer(2));
  CHECK(lattice_member(l, IntVector{4, -3}).has_value());
  CHECK_FALSE(lattice_member(l, IntVector{1, 0}).has_value());
  const auto c = lattice_member(l, IntVector{4, -3});
  CHECK(combine(l.basis(), *c) == IntVector{4, -3});

  // A rank-deficient case: the line through (2, 4) saturates to (1, 2).
  const IntMatrix line = IntMatrix::from_rows({{2, 4}, {3, 6}}, 2);
  CHECK(saturation(line) == hnf(IntMatrix::from_rows({{1, 2}}, 2)));
  CHECK(lattice_index(hnf(IntMatrix::from_rows({{2, 4}}, 2)), saturation(line)) == Integer(2));
  CHECK(lattice_equal(hnf(line), saturation(line)));
}

TEST_CASE("index equals the gcd of maximal minors") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_mat(rng, 3, 5, -3, 3);
    if (oracle::bareiss_rank(m) != 3) continue;
    const IntMatrix mi = ints(m);
    const auto index = lattice_index(hnf(mi), saturation(mi));
    REQUIRE(index.has_value());
    CHECK(*index == Integer(static_cast<long>(oracle::minor_gcd(m, 3))));
  }
}

TEST_CASE("integer kernel is a saturated basis of the null space") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_mat(rng, 2, 5, -3, 3);
    const IntMatrix mi = ints(m);
    const IntMatrix k = integer_kernel(mi);
    CHECK(k.rows() == 5 - rank(mi));
    const IntMatrix prod = multiply(mi, k.transpose());
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c) CHECK(prod(r, c) == 0);
    if (k.rows() > 0) CHECK(lattice_equal(hnf(k), saturation(k)));
  }
}
