#pragma once

#include <cstdint>
#include <vector>

#include "bluescheme/formal_sum.hpp"
#include "bluescheme/monomial.hpp"
#include "bluescheme/presentation.hpp"

namespace bluescheme {

/// Outcome of a bounded congruence query. Unknown is a legitimate answer:
/// the word problem for pre-additions is not assumed decidable.
enum class Decision { kProved, kRefuted, kUnknown };

/// Default saturation depth for all bounded congruence searches.
inline constexpr std::uint32_t kDefaultSaturationDepth = 3;

/// Decides, within `budget` elementary rewrite steps, whether lhs and rhs
/// are identified by the congruence generated by the presentation's
/// relations.
///
/// An elementary step replaces a monomial multiple of one side of a
/// generating relation, occurring as a sub-multiset, by the matching
/// multiple of the other side. Chains of such steps are exactly the
/// congruence closure under reflexivity, symmetry, transitivity, term-wise
/// addition and monomial multiples, so kProved answers are sound at every
/// budget.
///
/// kRefuted is returned only on sound obstructions: distinct multisets over
/// a free presentation, or a grading obstruction (per-degree components must
/// stay congruent degree by degree; components below every relation degree
/// are rigid and must be equal).
Decision relation_holds(const BlueprintPresentation& pres,
                        const FormalSum& lhs, const FormalSum& rhs,
                        std::uint32_t budget = kDefaultSaturationDepth);

/// A monoid ideal given by finitely many monomial generators, standing for
/// the set of all their monomial multiples together with zero.
struct MonoidIdealView {
  std::vector<Monomial> generators;

  bool contains(const Monomial& m) const {
    if (m.is_zero()) return true;
    for (const Monomial& g : generators) {
      if (g.divides(m)) return true;
    }
    return false;
  }
};

/// Additive closure of a finite set of monomials: the least superset of
/// M ∪ {0} closed under the forcing rule "b ≡ a_1 + ... + a_k with all a_i
/// in M forces b into M", restricted to derivations of length <= budget.
/// Extensive, monotone in the budget, and idempotent at a fixed budget.
/// Over a free presentation it returns exactly M ∪ {0}.
std::vector<Monomial> additive_closure(const BlueprintPresentation& pres,
                                       const std::vector<Monomial>& base,
                                       std::uint32_t budget =
                                           kDefaultSaturationDepth);

/// Additive closure of an upward-closed set (a monoid ideal). Membership of
/// the input is by divisibility; the return value lists the minimal new
/// monomials forced in, so the closed set is view ∪ multiples(result).
std::vector<Monomial> additive_closure(const BlueprintPresentation& pres,
                                       const MonoidIdealView& view,
                                       std::uint32_t budget =
                                           kDefaultSaturationDepth);

/// All monomials in the presentation's generators of total degree <= bound,
/// in ascending monomial order. The multiplier pool for bounded forcing.
std::vector<Monomial> monomials_up_to_degree(const BlueprintPresentation& pres,
                                             std::uint64_t bound);

}  // namespace bluescheme
