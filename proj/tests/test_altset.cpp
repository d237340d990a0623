#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <map>
#include <vector>

#include "weylalt/altset.hpp"
#include "weylalt/bigint.hpp"
#include "weylalt/partition.hpp"

using namespace weylalt;

namespace {
EpsVector iv(std::vector<std::int64_t> coords) { return EpsVector(std::move(coords)); }

Permutation refl_product(int n, std::vector<int> indices) {
  return product_of_simple_reflections(n, indices);
}
}  // namespace

TEST_CASE("zero-weight set, small ranks, element by element") {
  SUBCASE("rank 1 and 2 hold only the identity") {
    for (int r : {1, 2}) {
      RankContext ctx(r);
      AltSet set = alternation_set(ctx, ctx.highest_root(), EpsVector::zero(ctx.n()));
      REQUIRE(set.cardinality() == 1);
      CHECK(set.elements()[0].sigma.is_identity());
    }
  }

  SUBCASE("rank 4") {
    RankContext ctx(4);
    AltSet set = alternation_set(ctx, ctx.highest_root(), EpsVector::zero(5));
    CHECK(set.cardinality() == 3);
    CHECK(set.contains(Permutation::identity(5)));
    CHECK(set.contains(Permutation::simple_reflection(5, 2)));
    CHECK(set.contains(Permutation::simple_reflection(5, 3)));
    CHECK_FALSE(set.contains(Permutation::simple_reflection(5, 1)));
    CHECK_FALSE(set.contains(Permutation::simple_reflection(5, 4)));
  }

  SUBCASE("rank 5") {
    RankContext ctx(5);
    AltSet set = alternation_set(ctx, ctx.highest_root(), EpsVector::zero(6));
    CHECK(set.cardinality() == 5);
    CHECK(set.contains(Permutation::identity(6)));
    CHECK(set.contains(refl_product(6, {2})));
    CHECK(set.contains(refl_product(6, {3})));
    CHECK(set.contains(refl_product(6, {4})));
    CHECK(set.contains(refl_product(6, {2, 4})));
    CHECK_FALSE(set.contains(refl_product(6, {2, 3})));

    std::map<int, std::uint64_t> expect{{0, 1}, {1, 3}, {2, 1}};
    CHECK(set.level_counts() == expect);
    CHECK(set.max_observed_length() == 2);
    CHECK(max_alternation_length(ctx) == 2);
  }
}

TEST_CASE("closed construction equals brute force") {
  for (int r = 1; r <= 7; ++r) {
    RankContext ctx(r);
    AltSet brute = alternation_set(ctx, ctx.highest_root(), EpsVector::zero(ctx.n()));
    AltSet closed = zero_weight_alternation_set(ctx);
    CHECK(brute == closed);
    CHECK(Bigint(static_cast<unsigned long>(closed.cardinality())) ==
          fibonacci(static_cast<unsigned long>(r)));
  }
}

TEST_CASE("closed construction alone reaches higher ranks") {
  for (int r = 8; r <= 16; ++r) {
    RankContext ctx(r);
    AltSet set = zero_weight_alternation_set(ctx);
    CHECK(Bigint(static_cast<unsigned long>(set.cardinality())) ==
          fibonacci(static_cast<unsigned long>(r)));
    CHECK(set.max_observed_length() == max_alternation_length(ctx));
    CHECK(set.max_observed_length() == (r - 1) / 2);
  }
}

TEST_CASE("element metadata") {
  RankContext ctx(6);
  AltSet set = zero_weight_alternation_set(ctx);
  const EpsVector shifted = ctx.highest_root() + ctx.rho();

  for (const auto& el : set.elements()) {
    CHECK(el.length == el.sigma.length());
    CHECK(el.sign == el.sigma.sign());
    CHECK(el.translate == act(el.sigma, shifted) - ctx.rho());
    CHECK(kostant(ctx, el.translate) > 0);

    // Every member is a product of commuting reflections s_i with
    // i in 2..r-1; its translate is the highest root minus the alphas
    // at exactly the swapped positions.
    CHECK(el.sigma.image(1) == 1);
    CHECK(el.sigma.image(ctx.n()) == ctx.n());
    EpsVector expect = ctx.highest_root();
    for (int i = 1; i < ctx.n(); ++i)
      if (el.sigma.image(i) == i + 1)
        expect = expect - ctx.simple_roots()[static_cast<std::size_t>(i - 1)];
    CHECK(el.translate == expect);

    for (int i = 1; i <= ctx.rank(); ++i) {
      auto pairing = fundamental_pairing(ctx, i, el.translate);
      CHECK((pairing == 0 || pairing == 1));
    }
  }
}

TEST_CASE("elements are stored in lexicographic one-line order") {
  RankContext ctx(6);
  AltSet set = zero_weight_alternation_set(ctx);
  REQUIRE(set.cardinality() == 8);
  for (std::size_t k = 1; k < set.cardinality(); ++k)
    CHECK(set.elements()[k - 1].sigma < set.elements()[k].sigma);
  CHECK(set.elements()[0].sigma.is_identity());
}

TEST_CASE("nonzero dominant targets") {
  SUBCASE("mu equal to the highest root keeps only the identity") {
    for (int r = 1; r <= 5; ++r) {
      RankContext ctx(r);
      AltSet brute = alternation_set(ctx, ctx.highest_root(), ctx.highest_root());
      AltSet closed = nonzero_weight_alternation_set(ctx, ctx.highest_root());
      CHECK(brute == closed);
      REQUIRE(brute.cardinality() == 1);
      CHECK(brute.elements()[0].sigma.is_identity());
      CHECK(brute.elements()[0].translate.is_zero());
    }
  }

  SUBCASE("other dominant mu give the empty set") {
    RankContext ctx(3);
    const EpsVector mu = iv({2, 0, -1, -1});
    AltSet brute = alternation_set(ctx, ctx.highest_root(), mu);
    CHECK(brute.cardinality() == 0);
    CHECK(brute == nonzero_weight_alternation_set(ctx, mu));
    CHECK(brute.max_observed_length() == -1);

    for (int r = 2; r <= 4; ++r) {
      RankContext c(r);
      EpsVector twice = c.highest_root() + c.highest_root();
      CHECK(alternation_set(c, c.highest_root(), twice).cardinality() == 0);
      CHECK(nonzero_weight_alternation_set(c, twice).cardinality() == 0);
    }
  }

  SUBCASE("mu outside the root lattice short-circuits to empty") {
    RankContext ctx(3);
    EpsVector mu = from_fundamental_coeffs(ctx, {1, 1, 0});
    REQUIRE_FALSE((ctx.highest_root() - mu).is_integral());
    AltSet set = alternation_set(ctx, ctx.highest_root(), mu);
    CHECK(set.cardinality() == 0);
    CHECK(nonzero_weight_alternation_set(ctx, mu).cardinality() == 0);
  }
}

TEST_CASE("unchecked variant accepts non-dominant mu") {
  RankContext ctx(2);
  const EpsVector mu = iv({0, 1, -1});
  CHECK_THROWS_AS(alternation_set(ctx, ctx.highest_root(), mu),
                  InvalidWeightError);
  AltSet set = alternation_set_unchecked(ctx, ctx.highest_root(), mu);
  REQUIRE(set.cardinality() == 1);
  CHECK(set.elements()[0].sigma.is_identity());
  CHECK(set.elements()[0].translate == iv({1, -1, 0}));

  SUBCASE("agrees with the checked variant on dominant pairs") {
    RankContext c4(4);
    AltSet a = alternation_set(c4, c4.highest_root(), EpsVector::zero(5));
    AltSet b = alternation_set_unchecked(c4, c4.highest_root(), EpsVector::zero(5));
    CHECK(a == b);
  }
}

TEST_CASE("options and errors") {
  RankContext big(10);
  CHECK_THROWS_AS(
      alternation_set(big, big.highest_root(), EpsVector::zero(11)),
      ResourceLimitError);
  AltSetOptions raised;
  raised.max_n = 11;
  CHECK_NOTHROW(alternation_set(RankContext(4), RankContext(4).highest_root(),
                                EpsVector::zero(5), raised));

  RankContext ctx(2);
  CHECK_THROWS_AS(
      alternation_set(ctx, iv({0, 1, -1}), EpsVector::zero(3)),
      InvalidWeightError);
  CHECK_THROWS_AS(
      nonzero_weight_alternation_set(ctx, EpsVector::zero(3)),
      InvalidInputError);
  CHECK_THROWS_AS(nonzero_weight_alternation_set(ctx, iv({0, 1, -1})),
                  InvalidWeightError);
  CHECK_THROWS_AS(zero_weight_alternation_set(RankContext(27)),
                  ResourceLimitError);

  SUBCASE("wrong sizes are rejected") {
    CHECK_THROWS_AS(alternation_set(ctx, iv({1, -1}), EpsVector::zero(3)),
                    InvalidInputError);
    CHECK_THROWS_AS(alternation_set(ctx, ctx.highest_root(), iv({0, 0})),
                    InvalidInputError);
  }

  SUBCASE("audit mode reproduces the plain result") {
    RankContext c4(4);
    AltSetOptions audit;
    audit.audit_with_partition_count = true;
    AltSet audited = alternation_set(c4, c4.highest_root(), EpsVector::zero(5), audit);
    AltSet plain = alternation_set(c4, c4.highest_root(), EpsVector::zero(5));
    CHECK(audited == plain);
  }

  SUBCASE("thread count never changes the result") {
    RankContext c5(5);
    AltSetOptions threaded;
    threaded.threads = 3;
    AltSet multi = alternation_set(c5, c5.highest_root(), EpsVector::zero(6), threaded);
    AltSet single = alternation_set(c5, c5.highest_root(), EpsVector::zero(6));
    CHECK(multi == single);
  }
}
