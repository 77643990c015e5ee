#include "bluescheme/ideal.hpp"

#include <algorithm>
#include <set>

namespace bluescheme {

std::uint64_t MonomialIdeal::bitmask() const {
  std::uint64_t mask = 0;
  for (GenIndex g : subset_) mask |= std::uint64_t{1} << g;
  return mask;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.is_zero()) return true;
  for (const auto& [idx, exp] : m.factors()) {
    if (std::binary_search(subset_.begin(), subset_.end(), idx)) return true;
  }
  for (const Monomial& f : forced_) {
    if (f.divides(m)) return true;
  }
  return false;
}

MonomialIdeal ideal_from_generators(
    std::shared_ptr<const BlueprintPresentation> pres,
    std::vector<GenIndex> subset, std::uint32_t budget) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());

  MonomialIdeal ideal;
  ideal.pres_ = std::move(pres);
  ideal.subset_ = std::move(subset);

  const BlueprintPresentation& p = *ideal.pres_;
  if (p.relations().empty()) return ideal;

  // Ideal forcing: in any monomial multiple of a generating relation, if
  // exactly one term occurrence is missing from the ideal, that term is
  // forced in (the relation then has the shape  sum a_i*p_i + c == sum
  // b_j*q_j  with all p_i, q_j already members). Multipliers are bounded by
  // the maximal relation degree; rounds repeat to a fixpoint.
  const auto multipliers = monomials_up_to_degree(p, max_relation_degree(p));
  const std::uint32_t rounds = std::max<std::uint32_t>(budget, 1);
  for (std::uint32_t round = 0; round < rounds; ++round) {
    bool changed = false;
    for (const Relation& rel : p.relations()) {
      for (const Monomial& m : multipliers) {
        // Count missing term occurrences; two or more (even of the same
        // monomial) leave nothing forcible, since only a single completed
        // term may stand outside the ideal.
        const Monomial* missing = nullptr;
        std::size_t missing_count = 0;
        for (const FormalSum* side : {&rel.first(), &rel.second()}) {
          for (const Monomial& t : side->terms()) {
            if (!ideal.contains(m * t)) {
              missing = &t;
              if (++missing_count > 1) break;
            }
          }
          if (missing_count > 1) break;
        }
        if (missing_count == 1) {
          const Monomial forced_monomial = m * *missing;
          std::erase_if(ideal.forced_, [&](const Monomial& f) {
            return forced_monomial.divides(f);
          });
          ideal.forced_.push_back(forced_monomial);
          std::sort(ideal.forced_.begin(), ideal.forced_.end());
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return ideal;
}

MonomialIdeal ideal_from_generators(const BlueprintPresentation& pres,
                                    std::vector<GenIndex> subset,
                                    std::uint32_t budget) {
  return ideal_from_generators(
      std::make_shared<const BlueprintPresentation>(pres), std::move(subset),
      budget);
}

bool is_prime(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) return false;
  // Forced monomials never carry a generator-subset variable, so each one
  // factors into variables outside the ideal and witnesses a failure of
  // primality for the recorded trace.
  return ideal.forced().empty();
}

}  // namespace bluescheme
