#pragma once

#include <string_view>

#include "bluescheme/presentation.hpp"

namespace bluescheme {

/// Parses the blueprint DSL:
///
///   blueprint gr24 {
///     gens x12 x13 x14 x23 x24 x34 : deg 1;
///     rel x12*x34 + x14*x23 == x13*x24;
///   }
///
/// Generators are whitespace-separated, with an optional `: deg k` per
/// group; mixing graded and ungraded groups is an error. Relations are
/// `+`-separated monomial products joined with `*` (powers may be written
/// `x^2`, and `1` denotes the empty product), with `==` between the sides.
/// `#` starts a comment running to the end of the line.
///
/// Throws ParseError with a 1-based line/column on malformed input, and the
/// presentation-level errors (duplicate generators, inhomogeneous relations)
/// from construction.
BlueprintPresentation parse_blueprint(std::string_view text);

/// Parses a formal sum such as "x12*x34 + x14*x23" against a presentation's
/// generators. "0" denotes the empty sum.
FormalSum parse_formal_sum(const BlueprintPresentation& pres,
                           std::string_view text);

/// Parses "lhs == rhs" into a relation.
Relation parse_relation(const BlueprintPresentation& pres,
                        std::string_view text);

}  // namespace bluescheme
