#include "bluescheme/localization.hpp"

#include <utility>

namespace bluescheme {
namespace {

// Positional short names for chart generators, following the five-letter
// convention of the 2x2-matrix presentations.
std::string chart_letter(std::size_t i) {
  static const char* kLetters[] = {"a", "b", "c", "d", "D"};
  if (i < 5) return kLetters[i];
  return "g" + std::to_string(i);
}

}  // namespace

LocalizedPresentation::LocalizedPresentation(BlueprintPresentation base,
                                             Monomial h)
    : base_(std::move(base)), inverted_(std::move(h)) {
  if (inverted_.is_zero()) {
    throw BlueprintError("cannot localize at the zero element");
  }
}

LocalizedFraction LocalizedPresentation::normalize(const Monomial& numerator,
                                                   std::int64_t power) const {
  LocalizedFraction f{numerator, power};
  if (numerator.is_zero()) {
    return {Monomial::zero(), 0};
  }
  if (inverted_.is_one()) {
    return f;  // identity localization: nothing to cancel
  }
  while (true) {
    auto q = f.numerator.divided_by(inverted_);
    if (!q) break;
    f.numerator = *q;
    ++f.h_exponent;
  }
  return f;
}

LocalizedFraction LocalizedPresentation::multiply(
    const LocalizedFraction& a, const LocalizedFraction& b) const {
  return normalize(a.numerator * b.numerator, a.h_exponent + b.h_exponent);
}

LocalizedPresentation localize(const BlueprintPresentation& pres,
                               const Monomial& h) {
  return LocalizedPresentation(pres, h);
}

DegreeZeroChart degree_zero_part(const LocalizedPresentation& loc) {
  const BlueprintPresentation& base = loc.base();
  if (!base.is_graded()) {
    throw UngradedError("degree_zero_part requires a graded base");
  }

  const Monomial& h = loc.inverted();
  const auto& h_factors = h.factors();
  if (h_factors.size() != 1 || h_factors.front().second != 1 ||
      base.generator_degree(h_factors.front().first) != 1) {
    throw UnsupportedDegreeError(
        "degree_zero_part supports only a single degree-1 generator");
  }
  const GenIndex h_index = h_factors.front().first;
  const std::string& h_name = base.generator_name(h_index);

  for (GenIndex g = 0; g < base.generator_count(); ++g) {
    if (base.generator_degree(g) > 1) {
      throw UnsupportedDegreeError(
          "degree_zero_part supports generators of degree at most 1");
    }
  }

  // Chart generators: every base generator except h, in base order. A
  // degree-1 generator x becomes the fraction x/h; a degree-0 generator is
  // carried over unchanged.
  DegreeZeroChart chart;
  std::vector<std::int64_t> to_chart(base.generator_count(), -1);
  std::vector<std::string> names;
  for (GenIndex g = 0; g < base.generator_count(); ++g) {
    if (g == h_index) continue;
    ChartGenerator cg;
    cg.name = chart_letter(names.size());
    cg.source = g;
    cg.fraction = base.generator_degree(g) == 1
                      ? base.generator_name(g) + "/" + h_name
                      : base.generator_name(g);
    to_chart[g] = static_cast<std::int64_t>(names.size());
    names.push_back(cg.name);
    chart.generators.push_back(std::move(cg));
  }

  auto map_term = [&](const Monomial& t) {
    // t / h^deg(t): drop h factors, send x^e to (x/h)^e.
    Monomial::Factors factors;
    for (const auto& [idx, exp] : t.factors()) {
      if (idx == h_index) continue;
      factors.emplace_back(static_cast<GenIndex>(to_chart[idx]), exp);
    }
    return Monomial::from_factors(std::move(factors));
  };
  auto map_sum = [&](const FormalSum& s) {
    FormalSum out;
    for (const Monomial& t : s.terms()) out.add_term(map_term(t));
    return out;
  };

  std::vector<Relation> relations;
  relations.reserve(base.relations().size());
  for (const Relation& rel : base.relations()) {
    relations.emplace_back(map_sum(rel.first()), map_sum(rel.second()));
  }

  BlueprintPresentation pres = make_free_blueprint(
      names, std::nullopt, base.name() + "_" + h_name);
  chart.presentation = quotient(pres, std::move(relations));
  chart.inverted = h_name;
  return chart;
}

}  // namespace bluescheme
