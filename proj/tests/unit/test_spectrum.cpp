#include "doctest.h"

#include <map>

#include "bluescheme/models.hpp"
#include "bluescheme/spectrum.hpp"
#include "support/test_support.hpp"

using namespace bluescheme;

TEST_CASE("the free plane has four primes") {
  const auto poset = specialization_order(enumerate_primes(affine_space(2)));
  CHECK(poset.size() == 4);
  CHECK(poset.rank_histogram() == std::vector<std::size_t>{1, 2, 1});
  CHECK(poset.closed_points().size() == 1);
  CHECK(poset.generic_points().size() == 1);
}

TEST_CASE("the gr24 cone has 37 primes matching the characterization") {
  const auto primes = enumerate_primes(grassmannian_presentation());
  CHECK(primes.size() == 37);
  CHECK(testing::gr24_characterization_agreement() == 64);
}

TEST_CASE("enumeration is deterministic and guarded") {
  const auto first = enumerate_primes(affine_space(3));
  const auto second = enumerate_primes(affine_space(3));
  REQUIRE(first.size() == second.size());
  CHECK(first.size() == 8);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].ideal.bitmask() == second[i].ideal.bitmask());
  }

  std::vector<std::string> names;
  for (int i = 0; i < 25; ++i) names.push_back("g" + std::to_string(i));
  const auto big = make_free_blueprint(names);
  CHECK_THROWS_AS(enumerate_primes(big), EnumerationGuardError);
}

TEST_CASE("specialization order on the affine line") {
  const auto poset = specialization_order(enumerate_primes(affine_space(1)));
  REQUIRE(poset.size() == 2);
  CHECK(poset.cover_edges().size() == 1);
  const auto generic = poset.generic_points();
  const auto closed = poset.closed_points();
  REQUIRE(generic.size() == 1);
  REQUIRE(closed.size() == 1);
  CHECK(poset.less_equal(generic.front(), closed.front()));
  CHECK(rank(poset, generic.front()) == 1);
  CHECK(rank(poset, closed.front()) == 0);
}

TEST_CASE("gr24 ranks and census") {
  const auto gr = grassmannian_2_4();
  const auto& poset = gr.points();
  CHECK(poset.size() == 36);
  CHECK(poset.rank_histogram() ==
        std::vector<std::size_t>{6, 12, 11, 6, 1});

  const auto& pres = gr.presentation();
  auto rank_of_subset = [&](std::initializer_list<const char*> names) {
    std::uint64_t mask = 0;
    for (const char* name : names) {
      mask |= std::uint64_t{1} << *pres.find_generator(name);
    }
    return rank(poset, *poset.find_by_bitmask(mask));
  };

  CHECK(rank_of_subset({}) == 4);  // the generic point
  CHECK(rank_of_subset({"x12", "x34"}) == 2);
  CHECK(rank_of_subset({"x12", "x14", "x13"}) == 2);
  CHECK(rank_of_subset({"x12", "x13", "x14", "x23", "x24"}) == 0);

  // a maximal chain of length 4 through {x12} and {x12,x34}
  CHECK(rank_of_subset({"x12"}) == 3);
  CHECK(rank_of_subset({"x12", "x34", "x14", "x13"}) == 1);

  CHECK(poset.closed_points().size() == 6);
  CHECK(poset.generic_points().size() == 1);
}

TEST_CASE("rank rejects out-of-range points") {
  const auto poset = specialization_order(enumerate_primes(affine_space(1)));
  CHECK_THROWS_AS(rank(poset, 99), std::out_of_range);
}

TEST_CASE("points are sorted rank-descending then bitmask-ascending") {
  const auto gr = grassmannian_2_4();
  const auto& points = gr.points().points();
  for (std::size_t i = 1; i < points.size(); ++i) {
    const bool ordered =
        points[i - 1].rank > points[i].rank ||
        (points[i - 1].rank == points[i].rank &&
         points[i - 1].bitmask < points[i].bitmask);
    CHECK(ordered);
  }
}
