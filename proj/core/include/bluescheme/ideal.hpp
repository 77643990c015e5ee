#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bluescheme/congruence.hpp"
#include "bluescheme/monomial.hpp"
#include "bluescheme/presentation.hpp"

namespace bluescheme {

/// An ideal of a monomial blueprint presented by a subset of the generators,
/// saturated under the ideal forcing rule: whenever all terms but one of a
/// monomial multiple of a generating relation lie in the ideal, the missing
/// term is forced in. Membership is structural: a monomial belongs to the
/// ideal when a generating variable divides it or a forced monomial does.
///
/// Forced monomials are recorded minimally; by construction they never carry
/// a variable factor from the generator subset.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  const BlueprintPresentation& presentation() const { return *pres_; }
  std::shared_ptr<const BlueprintPresentation> presentation_ptr() const {
    return pres_;
  }

  const std::vector<GenIndex>& generator_subset() const { return subset_; }
  const std::vector<Monomial>& forced() const { return forced_; }

  /// Subset encoded as a bitmask over generator indices.
  std::uint64_t bitmask() const;

  bool contains(const Monomial& m) const;
  bool is_proper() const { return !contains(Monomial::one()); }

  bool operator==(const MonomialIdeal& other) const {
    return subset_ == other.subset_ && forced_ == other.forced_;
  }

  friend MonomialIdeal ideal_from_generators(
      std::shared_ptr<const BlueprintPresentation> pres,
      std::vector<GenIndex> subset, std::uint32_t budget);

 private:
  std::shared_ptr<const BlueprintPresentation> pres_;
  std::vector<GenIndex> subset_;    // sorted, unique
  std::vector<Monomial> forced_;    // minimal, sorted
};

/// Builds the ideal generated by a subset of the generators: the monoid
/// ideal of the subset saturated to a forcing fixpoint. `budget` bounds the
/// number of saturation rounds; the shipped models stabilize within one.
MonomialIdeal ideal_from_generators(
    std::shared_ptr<const BlueprintPresentation> pres,
    std::vector<GenIndex> subset,
    std::uint32_t budget = kDefaultSaturationDepth);

MonomialIdeal ideal_from_generators(
    const BlueprintPresentation& pres, std::vector<GenIndex> subset,
    std::uint32_t budget = kDefaultSaturationDepth);

/// Primality of the recorded presentation: the ideal is proper and the
/// forcing added nothing beyond the generator subset's own multiples. An
/// ideal whose forcing escaped its subset is rejected even when its closure
/// happens to coincide with a prime of a larger trace; that prime is the one
/// presented by the larger subset.
bool is_prime(const MonomialIdeal& ideal);

}  // namespace bluescheme
