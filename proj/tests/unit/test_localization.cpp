#include "doctest.h"

#include "bluescheme/localization.hpp"
#include "bluescheme/models.hpp"
#include "bluescheme/printer.hpp"

using namespace bluescheme;

TEST_CASE("fractions normalize to a unique form") {
  const auto p1 = projective_space_presentation(1);
  const auto loc = localize(p1, p1.var("T0"));

  // T1 * T0^2 / T0^3 == T1 / T0
  const auto f =
      loc.normalize(p1.var("T1") * p1.var("T0") * p1.var("T0"), -3);
  CHECK(f.numerator == p1.var("T1"));
  CHECK(f.h_exponent == -1);

  // products renormalize
  const auto g = loc.multiply(f, loc.normalize(p1.var("T0"), 0));
  CHECK(g.numerator == p1.var("T1"));
  CHECK(g.h_exponent == 0);

  CHECK_THROWS_AS(localize(p1, Monomial::zero()), BlueprintError);
}

TEST_CASE("localization at 1 is the identity") {
  const auto a2 = affine_space(2);
  const auto loc = localize(a2, Monomial::one());
  const auto f = loc.normalize(a2.var("T1"), 2);
  CHECK(f.numerator == a2.var("T1"));
  CHECK(f.h_exponent == 2);
}

TEST_CASE("degree-zero chart of the projective line is free") {
  const auto p1 = projective_space_presentation(1);
  const auto chart = degree_zero_part(localize(p1, p1.var("T0")));
  CHECK(chart.presentation.generator_count() == 1);
  CHECK(chart.presentation.relations().empty());
  CHECK(!chart.presentation.is_graded());
  CHECK(chart.generators.front().fraction == "T1/T0");
  CHECK(chart.inverted == "T0");
}

TEST_CASE("gr24 chart at x12 is the 2x2-matrix presentation") {
  const auto gr = grassmannian_presentation();
  const auto chart = degree_zero_part(localize(gr, gr.var("x12")));
  const auto& pres = chart.presentation;
  REQUIRE(pres.generator_count() == 5);
  CHECK(pres.generator_names() ==
        std::vector<std::string>{"a", "b", "c", "d", "D"});
  CHECK(chart.generators[0].fraction == "x13/x12");
  CHECK(chart.generators[4].fraction == "x34/x12");
  REQUIRE(pres.relations().size() == 1);
  CHECK(format_relation(pres, pres.relations().front()) ==
        "a*d == b*c + D");
}

TEST_CASE("gr24 chart at x13 is the twisted presentation") {
  const auto gr = grassmannian_presentation();
  const auto chart = degree_zero_part(localize(gr, gr.var("x13")));
  const auto& pres = chart.presentation;
  REQUIRE(pres.relations().size() == 1);
  CHECK(format_relation(pres, pres.relations().front()) ==
        "d == a*D + b*c");
  CHECK(chart.generators[0].fraction == "x12/x13");
}

TEST_CASE("degree_zero_part error paths") {
  const auto a2 = affine_space(2);
  CHECK_THROWS_AS(degree_zero_part(localize(a2, a2.var("T1"))),
                  UngradedError);

  const auto gr = grassmannian_presentation();
  // composite h is unsupported
  CHECK_THROWS_AS(
      degree_zero_part(localize(gr, gr.var("x12") * gr.var("x13"))),
      UnsupportedDegreeError);

  // degree-2 generators are out of scope for charts
  auto weighted = make_free_blueprint({"u", "v"},
                                      std::vector<std::uint32_t>{1, 2});
  CHECK_THROWS_AS(degree_zero_part(localize(weighted, weighted.var("u"))),
                  UnsupportedDegreeError);
}
