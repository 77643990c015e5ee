#include "bluescheme/proj.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bluescheme {
namespace {

bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  for (GenIndex g : inner.generator_subset()) {
    if (!outer.contains(Monomial::var(g))) return false;
  }
  for (const Monomial& f : inner.forced()) {
    if (!outer.contains(f)) return false;
  }
  return true;
}

}  // namespace

const DegreeZeroChart& ProjSpace::chart(std::string_view h) const {
  const auto it = charts_.find(h);
  if (it == charts_.end()) {
    throw UnknownGeneratorError("no degree-1 generator '" + std::string(h) +
                                "' in presentation '" + pres_->name() + "'");
  }
  return it->second;
}

const DegreeZeroChart& ProjSpace::stalk_chart(std::size_t point_index) const {
  if (point_index >= points_.size()) {
    throw std::out_of_range("point index outside Proj");
  }
  const MonomialIdeal& ideal = points_.points()[point_index].prime.ideal;
  for (const std::string& h : chart_generators_) {
    if (!ideal.contains(pres_->var(h))) return chart(h);
  }
  // Unreachable for Proj points: every point misses some positive-degree
  // generator when the irrelevant ideal is generated in degree 1.
  throw BlueprintError("point contains every degree-1 generator");
}

ProjSpace make_proj(BlueprintPresentation pres, std::uint32_t budget) {
  if (!pres.is_graded()) {
    throw UngradedError("Proj requires a graded presentation");
  }
  const auto violations = validate_grading(pres);
  if (!violations.empty()) {
    throw InhomogeneousRelationError(violations.front().message);
  }

  ProjSpace proj;
  proj.pres_ = std::make_shared<const BlueprintPresentation>(std::move(pres));
  proj.budget_ = budget;
  proj.points_ = proj_points(*proj.pres_, budget);

  for (GenIndex g = 0; g < proj.pres_->generator_count(); ++g) {
    if (proj.pres_->generator_degree(g) != 1) continue;
    const std::string& name = proj.pres_->generator_name(g);
    proj.chart_generators_.push_back(name);
    proj.charts_.emplace(
        name, degree_zero_part(localize(*proj.pres_, Monomial::var(g))));
  }
  return proj;
}

MonomialIdeal irrelevant_ideal(
    std::shared_ptr<const BlueprintPresentation> pres, std::uint32_t budget) {
  if (!pres->is_graded()) {
    throw UngradedError("the irrelevant ideal requires a graded presentation");
  }
  std::vector<GenIndex> positive;
  for (GenIndex g = 0; g < pres->generator_count(); ++g) {
    if (pres->generator_degree(g) > 0) positive.push_back(g);
  }
  return ideal_from_generators(std::move(pres), std::move(positive), budget);
}

MonomialIdeal irrelevant_ideal(const BlueprintPresentation& pres,
                               std::uint32_t budget) {
  return irrelevant_ideal(std::make_shared<const BlueprintPresentation>(pres),
                          budget);
}

SpectrumPoset proj_points(const BlueprintPresentation& pres,
                          std::uint32_t budget) {
  auto shared = std::make_shared<const BlueprintPresentation>(pres);
  const MonomialIdeal irrelevant = irrelevant_ideal(shared, budget);
  std::vector<PrimeIdeal> primes =
      enumerate_primes(shared, /*homogeneous_only=*/true, budget);
  std::erase_if(primes, [&](const PrimeIdeal& p) {
    return contains_ideal(p.ideal, irrelevant);
  });
  return specialization_order(std::move(primes));
}

std::vector<std::size_t> basic_open(const ProjSpace& proj, const Monomial& h) {
  if (h.is_zero()) {
    throw BlueprintError("basic open of the zero element is empty by fiat");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < proj.points().size(); ++i) {
    if (!proj.points().points()[i].prime.ideal.contains(h)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> structural_fiber(const ProjSpace& proj,
                                          std::size_t point_index) {
  if (point_index >= proj.points().size()) {
    throw std::out_of_range("point index outside Proj");
  }
  const auto& pres = proj.presentation();
  const MonomialIdeal& ideal =
      proj.points().points()[point_index].prime.ideal;
  std::vector<std::string> trace;
  for (GenIndex g : ideal.generator_subset()) {
    if (pres.generator_degree(g) == 0) {
      trace.push_back(pres.generator_name(g));
    }
  }
  return trace;
}

bool is_homogeneous_ideal(const BlueprintPresentation& pres,
                          const MonomialIdeal& ideal) {
  if (!pres.is_graded()) {
    throw UngradedError("homogeneity needs a graded presentation");
  }
  for (GenIndex g : ideal.generator_subset()) {
    if (degree_of(pres, Monomial::var(g)) == std::nullopt) return false;
  }
  for (const Monomial& f : ideal.forced()) {
    if (degree_of(pres, f) == std::nullopt) return false;
  }
  return true;  // monomials of a graded monomial blueprint are homogeneous
}

}  // namespace bluescheme
