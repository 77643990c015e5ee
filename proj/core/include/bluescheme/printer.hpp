#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bluescheme/presentation.hpp"

namespace bluescheme {

/// "x12*x34", "x12^2", "1", "0". Parseable by parse_formal_sum.
std::string format_monomial(const BlueprintPresentation& pres,
                            const Monomial& m);

/// Terms joined by " + " in descending monomial order; "0" for the empty
/// sum.
std::string format_sum(const BlueprintPresentation& pres, const FormalSum& s);

/// "lhs == rhs" with the canonical side first.
std::string format_relation(const BlueprintPresentation& pres,
                            const Relation& rel);

/// "{x12,x34}" for a generator subset given as a bitmask; "{}" when empty.
std::string format_subset(const BlueprintPresentation& pres,
                          std::uint64_t bitmask);

/// The presentation as a DSL block that parse_blueprint accepts, with one
/// `gens` line per run of equal degree.
std::string print_blueprint(const BlueprintPresentation& pres);

}  // namespace bluescheme
