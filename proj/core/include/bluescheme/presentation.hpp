#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bluescheme/errors.hpp"
#include "bluescheme/formal_sum.hpp"
#include "bluescheme/monomial.hpp"

namespace bluescheme {

struct GradingViolation {
  std::size_t relation_index;
  std::string message;
};

/// A finite presentation B = F1[x_1,...,x_n] // R of a monomial blueprint:
/// named generators, an optional grading (one natural degree per generator),
/// and the generating relations of the pre-addition R.
///
/// Instances are immutable after construction; all operations on them are
/// pure, so presentations may be shared freely across threads.
class BlueprintPresentation {
 public:
  BlueprintPresentation() = default;  // F1 itself: no generators, no relations

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<std::string>& generator_names() const {
    return generators_;
  }
  std::size_t generator_count() const { return generators_.size(); }
  const std::string& generator_name(GenIndex g) const {
    return generators_.at(g);
  }

  std::optional<GenIndex> find_generator(std::string_view name) const;

  bool is_graded() const { return degrees_.has_value(); }

  /// Degree of a single generator; requires a graded presentation.
  std::uint32_t generator_degree(GenIndex g) const;

  const std::vector<Relation>& relations() const { return relations_; }

  /// The variable monomial for a declared generator name.
  /// Throws UnknownGeneratorError.
  Monomial var(std::string_view name) const;

  friend BlueprintPresentation make_free_blueprint(
      std::vector<std::string> names,
      std::optional<std::vector<std::uint32_t>> degrees, std::string name);
  friend BlueprintPresentation quotient(const BlueprintPresentation& pres,
                                        std::vector<Relation> rels);

 private:
  std::string name_;
  std::vector<std::string> generators_;
  std::optional<std::vector<std::uint32_t>> degrees_;
  std::vector<Relation> relations_;
};

/// The free blueprint on distinct generator names, optionally graded.
/// Throws DuplicateGeneratorError; a degree vector must match the name count.
BlueprintPresentation make_free_blueprint(
    std::vector<std::string> names,
    std::optional<std::vector<std::uint32_t>> degrees = std::nullopt,
    std::string name = "");

/// Appends generating relations. On graded presentations every relation must
/// be homogeneous (all terms of both sides of equal weighted degree);
/// violations raise InhomogeneousRelationError.
BlueprintPresentation quotient(const BlueprintPresentation& pres,
                               std::vector<Relation> rels);

/// Weighted degree of a monomial; nullopt for the zero element, which is a
/// member of every degree layer. Throws UngradedError.
std::optional<std::uint64_t> degree_of(const BlueprintPresentation& pres,
                                       const Monomial& m);

/// Checks that every generating relation is homogeneous, which is what keeps
/// monomial degrees well defined in the quotient. Returns the offenders.
/// Throws UngradedError when the presentation carries no degrees.
std::vector<GradingViolation> validate_grading(
    const BlueprintPresentation& pres);

/// Largest unweighted total degree of any term in any generating relation;
/// zero when there are no relations. Bounds the forcing machinery.
std::uint64_t max_relation_degree(const BlueprintPresentation& pres);

}  // namespace bluescheme
