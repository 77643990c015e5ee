#include "bluescheme/presentation.hpp"

#include <algorithm>
#include <unordered_set>

namespace bluescheme {
namespace {

// Degrees of all terms on both sides must agree. An empty side constrains
// nothing. Returns the common degree when the relation is homogeneous.
std::optional<std::uint64_t> homogeneous_degree(
    const BlueprintPresentation& pres, const Relation& rel, bool& ok) {
  ok = true;
  std::optional<std::uint64_t> common;
  for (const FormalSum* side : {&rel.first(), &rel.second()}) {
    for (const Monomial& t : side->terms()) {
      const auto d = degree_of(pres, t);
      if (!d) continue;  // zero terms never occur in sums
      if (!common) {
        common = d;
      } else if (*common != *d) {
        ok = false;
        return std::nullopt;
      }
    }
  }
  return common;
}

}  // namespace

std::optional<GenIndex> BlueprintPresentation::find_generator(
    std::string_view name) const {
  for (GenIndex i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return i;
  }
  return std::nullopt;
}

std::uint32_t BlueprintPresentation::generator_degree(GenIndex g) const {
  if (!degrees_) {
    throw UngradedError("presentation '" + name_ + "' carries no grading");
  }
  return degrees_->at(g);
}

Monomial BlueprintPresentation::var(std::string_view name) const {
  const auto idx = find_generator(name);
  if (!idx) {
    throw UnknownGeneratorError("unknown generator '" + std::string(name) +
                                "' in presentation '" + name_ + "'");
  }
  return Monomial::var(*idx);
}

BlueprintPresentation make_free_blueprint(
    std::vector<std::string> names,
    std::optional<std::vector<std::uint32_t>> degrees, std::string name) {
  std::unordered_set<std::string_view> seen;
  for (const std::string& n : names) {
    if (!seen.insert(n).second) {
      throw DuplicateGeneratorError("duplicate generator name '" + n + "'");
    }
  }
  if (degrees && degrees->size() != names.size()) {
    throw BlueprintError("degree list does not match generator count");
  }
  BlueprintPresentation pres;
  pres.name_ = std::move(name);
  pres.generators_ = std::move(names);
  pres.degrees_ = std::move(degrees);
  return pres;
}

BlueprintPresentation quotient(const BlueprintPresentation& pres,
                               std::vector<Relation> rels) {
  BlueprintPresentation out = pres;
  for (const Relation& rel : rels) {
    if (out.is_graded()) {
      bool ok = true;
      homogeneous_degree(out, rel, ok);
      if (!ok) {
        throw InhomogeneousRelationError(
            "relation is not homogeneous for the given grading");
      }
    }
    out.relations_.push_back(rel);
  }
  return out;
}

std::optional<std::uint64_t> degree_of(const BlueprintPresentation& pres,
                                       const Monomial& m) {
  if (!pres.is_graded()) {
    throw UngradedError("degree_of requires a graded presentation");
  }
  if (m.is_zero()) return std::nullopt;
  std::uint64_t sum = 0;
  for (const auto& [idx, exp] : m.factors()) {
    sum += static_cast<std::uint64_t>(exp) * pres.generator_degree(idx);
  }
  return sum;
}

std::vector<GradingViolation> validate_grading(
    const BlueprintPresentation& pres) {
  if (!pres.is_graded()) {
    throw UngradedError("validate_grading requires a graded presentation");
  }
  std::vector<GradingViolation> violations;
  for (std::size_t i = 0; i < pres.relations().size(); ++i) {
    bool ok = true;
    homogeneous_degree(pres, pres.relations()[i], ok);
    if (!ok) {
      violations.push_back(
          {i, "terms of relation " + std::to_string(i) + " mix degrees"});
    }
  }
  return violations;
}

std::uint64_t max_relation_degree(const BlueprintPresentation& pres) {
  std::uint64_t best = 0;
  for (const Relation& rel : pres.relations()) {
    for (const FormalSum* side : {&rel.first(), &rel.second()}) {
      for (const Monomial& t : side->terms()) {
        best = std::max(best, t.total_degree());
      }
    }
  }
  return best;
}

}  // namespace bluescheme
