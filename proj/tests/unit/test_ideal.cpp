#include "doctest.h"

#include "bluescheme/ideal.hpp"
#include "bluescheme/models.hpp"

using namespace bluescheme;

namespace {

std::vector<GenIndex> subset_of(const BlueprintPresentation& pres,
                                std::initializer_list<const char*> names) {
  std::vector<GenIndex> subset;
  for (const char* name : names) {
    subset.push_back(*pres.find_generator(name));
  }
  return subset;
}

}  // namespace

TEST_CASE("forcing completes the Pluecker triple") {
  const auto gr = grassmannian_presentation();
  const auto ideal = ideal_from_generators(gr, subset_of(gr, {"x12", "x14"}));
  REQUIRE(ideal.forced().size() == 1);
  CHECK(ideal.forced().front() == gr.var("x13") * gr.var("x24"));
  CHECK(ideal.contains(gr.var("x13") * gr.var("x24") * gr.var("x34")));
  CHECK(!ideal.contains(gr.var("x13")));
}

TEST_CASE("the empty subset generates the zero ideal") {
  const auto gr = grassmannian_presentation();
  const auto ideal = ideal_from_generators(gr, {});
  CHECK(ideal.forced().empty());
  CHECK(ideal.contains(Monomial::zero()));
  CHECK(!ideal.contains(Monomial::one()));
  CHECK(!ideal.contains(gr.var("x12")));
}

TEST_CASE("free blueprints force nothing") {
  const auto a2 = affine_space(2);
  const auto ideal = ideal_from_generators(a2, {0});
  CHECK(ideal.forced().empty());
  CHECK(ideal.contains(a2.var("T1") * a2.var("T2")));
  CHECK(!ideal.contains(a2.var("T2")));
}

TEST_CASE("primality of the Gr(2,4) subset ideals") {
  const auto gr = grassmannian_presentation();

  // inside one Pluecker pair
  CHECK(is_prime(ideal_from_generators(gr, subset_of(gr, {"x12", "x34"}))));

  // meets two pairs, misses the third: forcing breaks primality
  CHECK(!is_prime(ideal_from_generators(gr, subset_of(gr, {"x12", "x13"}))));
  CHECK(!is_prime(ideal_from_generators(gr, subset_of(gr, {"x12", "x14"}))));

  // meets all three pairs
  CHECK(is_prime(
      ideal_from_generators(gr, subset_of(gr, {"x12", "x14", "x13"}))));
}

TEST_CASE("ideals with a unit are not prime") {
  auto pres = make_free_blueprint({"x", "y"});
  pres = quotient(pres, {Relation(FormalSum{pres.var("x")},
                                  FormalSum{Monomial::one(),
                                            pres.var("y")})});
  // x == 1 + y forces 1 into the ideal generated by {x, y}
  const auto ideal = ideal_from_generators(pres, {0, 1});
  CHECK(ideal.contains(Monomial::one()));
  CHECK(!is_prime(ideal));
}

TEST_CASE("bitmasks follow generator indices") {
  const auto gr = grassmannian_presentation();
  const auto ideal = ideal_from_generators(gr, subset_of(gr, {"x12", "x34"}));
  CHECK(ideal.bitmask() == ((1u << 0) | (1u << 5)));
}
