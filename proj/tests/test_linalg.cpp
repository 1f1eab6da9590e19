#include <catch_amalgamated.hpp>

#include <random>

#include "burnside/linalg.hpp"
#include "burnside/scalar.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {
  IntegerMatrix multiply(IntegerMatrix const& M, std::vector<Integer> const& v) {
    IntegerMatrix out;
    for (auto const& row : M) {
      Integer s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        s += row[j] * v[j];
      }
      out.push_back({s});
    }
    return out;
  }
}  // namespace

TEST_CASE("rank", "[linalg]") {
  CHECK(rank(RationalMatrix{}) == 0);
  CHECK(rank(RationalMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntegerMatrix{{6, 3, 2, 1}, {0, 3, 0, 1}, {0, 0, 2, 1}}) == 3);
}

TEST_CASE("integer kernel fixtures", "[linalg]") {
  IntegerMatrix const M = {{6, 3, 2, 1}, {0, 3, 0, 1}, {0, 0, 2, 1}};
  CHECK(integer_kernel(M, 4) == IntegerMatrix{{1, -2, -3, 6}});
  CHECK(integer_kernel(IntegerMatrix{{2, 4}}, 2) == IntegerMatrix{{2, -1}});
  CHECK(integer_kernel(IntegerMatrix{{1, 0}, {0, 1}}, 2).empty());
  // the kernel lattice is saturated: 2x = 0 has only the zero solution
  CHECK(integer_kernel(IntegerMatrix{{2}}, 1).empty());
}

TEST_CASE("random integer kernels", "[linalg][property]") {
  std::mt19937                       rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const m = dim(rng), n = dim(rng);
    IntegerMatrix     M(m, std::vector<Integer>(n));
    for (auto& row : M) {
      for (auto& x : row) {
        x = entry(rng);
      }
    }
    auto const K = integer_kernel(M, n);
    std::vector<std::vector<Rational>> q;
    for (auto const& row : M) {
      q.emplace_back(row.begin(), row.end());
    }
    CHECK(static_cast<int>(K.size()) == oracle::nullity(q, n));
    for (auto const& v : K) {
      for (auto const& r : multiply(M, v)) {
        CHECK(r[0] == 0);
      }
    }
    CHECK(rank(K) == K.size());
    // canonical: leading entries positive
    for (auto const& v : K) {
      for (auto const& x : v) {
        if (x != 0) {
          CHECK(x > 0);
          break;
        }
      }
    }
  }
}

TEST_CASE("forward substitution", "[linalg]") {
  auto const a = forward_substitute({{1, 0}, {3, 6}}, {1, 1});
  CHECK(a == std::vector<Rational>{1, Rational(-1, 3)});
}

TEST_CASE("p-adic rendering", "[scalar]") {
  CHECK(p_adic_residue(Rational(-1, 3), 2, 8) == 85);
  CHECK(p_adic_digits(Rational(-1, 3), 2, 8) == "...01010101");
  CHECK(p_adic_digits(Rational(1, 2), 3, 4) == "...1112");
  CHECK(p_adic_residue(Rational(5), 7, 2) == 5);
  CHECK_THROWS_AS(p_adic_residue(Rational(1, 2), 2, 8), Error);
  CHECK_THROWS_AS(PLocalScalar(Rational(1, 4), 2), Error);
  CHECK(PLocalScalar(Rational(1, 3), 2).value() == Rational(1, 3));
}
