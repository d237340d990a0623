#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "oracle.hpp"
#include "weylalt/partition.hpp"
#include "weylalt/qpoly.hpp"
#include "weylalt/rootsys.hpp"

using namespace weylalt;

namespace {
EpsVector iv(std::vector<std::int64_t> coords) { return EpsVector(std::move(coords)); }

QPoly poly_from_graded(const std::map<unsigned, std::uint64_t>& graded) {
  std::vector<Bigint> coeffs;
  for (const auto& [degree, ways] : graded) {
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, Bigint(0));
    coeffs[degree] = Bigint(static_cast<unsigned long>(ways));
  }
  return QPoly::from_coeffs(std::move(coeffs));
}
}  // namespace

TEST_CASE("hand-checked small values") {
  RankContext ctx1(1);
  CHECK(kostant(ctx1, iv({0, 0})) == 1);
  CHECK(kostant(ctx1, iv({1, -1})) == 1);
  CHECK(kostant(ctx1, iv({5, -5})) == 1);
  CHECK(kostant_q(ctx1, iv({5, -5})) == QPoly::monomial(5));
  CHECK(kostant(ctx1, iv({-1, 1})) == 0);

  RankContext ctx2(2);
  CHECK(kostant(ctx2, EpsVector::zero(3)) == 1);
  CHECK(kostant_q(ctx2, EpsVector::zero(3)) == QPoly(1L));
  CHECK(kostant(ctx2, iv({1, 0, -1})) == 2);
  CHECK(kostant_q(ctx2, iv({1, 0, -1})) == QPoly::geometric(1, 2));
  CHECK(kostant(ctx2, iv({1, -1, 0})) == 1);

  // (2, 1, -3) = c1*a1 + c2*a2 + c3*(a1+a2) needs c1+c3 = 2, c2+c3 = 3:
  // three solutions, using 5, 4, and 3 roots.
  CHECK(kostant(ctx2, iv({2, 1, -3})) == 3);
  CHECK(kostant_q(ctx2, iv({2, 1, -3})) == QPoly::geometric(3, 5));

  SUBCASE("simple roots have a unique expression in every rank") {
    for (int r = 1; r <= 5; ++r) {
      RankContext ctx(r);
      for (const auto& alpha : ctx.simple_roots()) {
        CHECK(kostant(ctx, alpha) == 1);
        CHECK(kostant_q(ctx, alpha) == QPoly::monomial(1));
      }
    }
  }
}

TEST_CASE("highest root closed forms") {
  for (int r = 1; r <= 8; ++r) {
    RankContext ctx(r);
    CHECK(kostant(ctx, ctx.highest_root()) ==
          pow2(static_cast<unsigned long>(r - 1)));
    CHECK(kostant_q(ctx, ctx.highest_root()) ==
          QPoly::monomial(1) *
              QPoly::one_plus_q_to(static_cast<unsigned>(r - 1)));
  }
}

TEST_CASE("inputs off the sum-zero slice count zero without erroring") {
  RankContext ctx2(2);
  CHECK(kostant(ctx2, iv({1, 0, 0})) == 0);
  CHECK(kostant_q(ctx2, iv({1, 0, 0})).is_zero());
  CHECK(kostant(ctx2, iv({-2, 1, 0})) == 0);
}

TEST_CASE("invalid inputs") {
  RankContext ctx2(2);
  CHECK_THROWS_AS(kostant(ctx2, EpsVector({1, -1, 0}, 2)), InvalidInputError);
  CHECK_THROWS_AS(kostant_q(ctx2, EpsVector({1, -1, 0}, 2)), InvalidInputError);
  CHECK_THROWS_AS(kostant(ctx2, iv({1, -1})), InvalidInputError);
  CHECK_THROWS_AS(is_positive(ctx2, EpsVector({1, -1, 0}, 2)), InvalidInputError);
}

TEST_CASE("positivity test") {
  RankContext ctx2(2);
  CHECK(is_positive(ctx2, iv({1, 0, -1})));
  CHECK_FALSE(is_positive(ctx2, iv({-1, 1, 0})));
  CHECK_FALSE(is_positive(ctx2, iv({1, 0, 0})));
  CHECK(is_positive(ctx2, EpsVector::zero(3)));

  SUBCASE("agrees with kostant > 0 on a grid") {
    for (int n = 2; n <= 4; ++n) {
      RankContext ctx(n - 1);
      PartitionCache cache;
      oracle::for_each_sum_zero_vector(
          n, 3, [&](const std::vector<std::int64_t>& v) {
            EpsVector xi(v);
            CHECK(is_positive(ctx, xi) == (kostant(ctx, xi, cache) > 0));
          });
    }
  }
}

TEST_CASE("engine matches the naive box-enumeration oracle") {
  for (int n = 2; n <= 4; ++n) {
    RankContext ctx(n - 1);
    PartitionCache cache;
    oracle::for_each_sum_zero_vector(
        n, 3, [&](const std::vector<std::int64_t>& v) {
          EpsVector xi(v);
          const auto graded = oracle::graded_count(ctx, xi);
          CHECK(kostant(ctx, xi, cache) ==
                Bigint(static_cast<unsigned long>(oracle::count(ctx, xi))));
          CHECK(kostant_q(ctx, xi, cache) == poly_from_graded(graded));
        });
  }
}

TEST_CASE("q-analog evaluates to the plain count at q = 1") {
  for (int n = 2; n <= 4; ++n) {
    RankContext ctx(n - 1);
    PartitionCache cache;
    oracle::for_each_sum_zero_vector(
        n, 2, [&](const std::vector<std::int64_t>& v) {
          EpsVector xi(v);
          const QPoly p = kostant_q(ctx, xi, cache);
          CHECK(p.eval_at_one() == kostant(ctx, xi, cache));
          for (const auto& c : p.coeffs()) CHECK(c >= 0);
        });
  }
}

TEST_CASE("shared cache returns identical values and accumulates entries") {
  RankContext ctx(3);
  PartitionCache cache;
  const EpsVector target = iv({2, 1, -1, -2});
  const Bigint first = kostant(ctx, target, cache);
  const std::size_t after_first = cache.entries();
  CHECK(after_first > 0);
  CHECK(kostant(ctx, target, cache) == first);
  CHECK(kostant(ctx, target) == first);
  CHECK(kostant_q(ctx, target, cache).eval_at_one() == first);
  CHECK(cache.entries() >= after_first);
}
