#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bluescheme/errors.hpp"
#include "bluescheme/monomial.hpp"
#include "bluescheme/presentation.hpp"

namespace bluescheme {

/// An element of B[h^-1] in normal form: numerator * h^exponent where the
/// numerator is not divisible by h (all full powers of h have been pulled
/// into the exponent). The normal form is unique.
struct LocalizedFraction {
  Monomial numerator;
  std::int64_t h_exponent = 0;

  bool operator==(const LocalizedFraction&) const = default;
};

/// The localization B[h^-1] of a presentation at a nonzero monomial h.
/// h * h^-1 = 1 is implemented by exponent cancellation, not as a relation.
class LocalizedPresentation {
 public:
  LocalizedPresentation(BlueprintPresentation base, Monomial h);

  const BlueprintPresentation& base() const { return base_; }
  const Monomial& inverted() const { return inverted_; }

  /// Puts numerator * h^power into normal form.
  LocalizedFraction normalize(const Monomial& numerator,
                              std::int64_t power = 0) const;

  LocalizedFraction multiply(const LocalizedFraction& a,
                             const LocalizedFraction& b) const;

 private:
  BlueprintPresentation base_;
  Monomial inverted_;
};

/// Localizes at h; throws BlueprintError when h is zero.
LocalizedPresentation localize(const BlueprintPresentation& pres,
                               const Monomial& h);

/// One generator of a degree-0 chart together with its provenance: the
/// fraction of base generators it stands for, e.g. a = x13/x12.
struct ChartGenerator {
  std::string name;
  std::string fraction;
  GenIndex source = 0;  // index of the base generator in the numerator
};

/// The degree-0 part of a localization at a degree-1 generator: an ungraded
/// presentation on the fractions x_k/h, with every generating relation of
/// degree d divided through by h^d.
struct DegreeZeroChart {
  BlueprintPresentation presentation;
  std::vector<ChartGenerator> generators;
  std::string inverted;  // name of h in the base presentation
};

/// Computes B[h^-1]_0. Requires a graded base whose generators all have
/// degree <= 1 and h a single generator of degree 1; anything else raises
/// UnsupportedDegreeError (UngradedError when no grading is present).
DegreeZeroChart degree_zero_part(const LocalizedPresentation& loc);

}  // namespace bluescheme
