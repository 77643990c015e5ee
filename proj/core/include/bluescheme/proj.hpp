#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bluescheme/localization.hpp"
#include "bluescheme/spectrum.hpp"

namespace bluescheme {

/// The Proj of a graded presentation: the homogeneous primes avoiding the
/// irrelevant ideal, with their specialization poset, and the affine charts
/// on the basic opens of the degree-1 generators.
///
/// Charts are built eagerly at construction (write-once), so a constructed
/// ProjSpace is immutable and safe to share across threads.
class ProjSpace {
 public:
  const BlueprintPresentation& presentation() const { return *pres_; }
  std::shared_ptr<const BlueprintPresentation> presentation_ptr() const {
    return pres_;
  }

  const SpectrumPoset& points() const { return points_; }
  std::uint32_t budget() const { return budget_; }

  /// Names of the degree-1 generators, in presentation order.
  const std::vector<std::string>& chart_generators() const {
    return chart_generators_;
  }

  /// The chart U_h ≅ Spec B[h^-1]_0 for a degree-1 generator h.
  /// Throws UnknownGeneratorError for anything else.
  const DegreeZeroChart& chart(std::string_view h) const;

  /// Chart presenting the stalk at a point: the chart at the first degree-1
  /// generator outside the point's ideal.
  const DegreeZeroChart& stalk_chart(std::size_t point_index) const;

  friend ProjSpace make_proj(BlueprintPresentation pres, std::uint32_t budget);

 private:
  std::shared_ptr<const BlueprintPresentation> pres_;
  SpectrumPoset points_;
  std::vector<std::string> chart_generators_;
  std::map<std::string, DegreeZeroChart, std::less<>> charts_;
  std::uint32_t budget_ = kDefaultSaturationDepth;
};

/// Validates the grading and computes Proj. Throws UngradedError for an
/// ungraded presentation and InhomogeneousRelationError when the grading is
/// broken; propagates the enumeration guard.
ProjSpace make_proj(BlueprintPresentation pres,
                    std::uint32_t budget = kDefaultSaturationDepth);

/// The irrelevant ideal: generated by all positive-degree generators.
/// Throws UngradedError.
MonomialIdeal irrelevant_ideal(
    std::shared_ptr<const BlueprintPresentation> pres,
    std::uint32_t budget = kDefaultSaturationDepth);
MonomialIdeal irrelevant_ideal(const BlueprintPresentation& pres,
                               std::uint32_t budget = kDefaultSaturationDepth);

/// The point set of Proj as a poset: homogeneous primes that do not contain
/// the irrelevant ideal. For a trivially graded presentation the irrelevant
/// ideal is {0}, which every prime contains, so the result is empty.
SpectrumPoset proj_points(const BlueprintPresentation& pres,
                          std::uint32_t budget = kDefaultSaturationDepth);

/// Indices of the points whose ideal misses h. Throws BlueprintError for
/// the zero monomial. (Every monomial of a graded presentation is
/// homogeneous, so no separate homogeneity check arises.)
std::vector<std::size_t> basic_open(const ProjSpace& proj, const Monomial& h);

/// The trace of a point on the degree-0 subblueprint: the degree-0
/// generators lying in the prime. Empty means the zero ideal of B_0; over
/// an F1 base this is always the whole answer (the base is a single point).
std::vector<std::string> structural_fiber(const ProjSpace& proj,
                                          std::size_t point_index);

/// Whether the ideal is generated by homogeneous elements. Monomials of a
/// graded monomial blueprint are all homogeneous, so this holds for every
/// MonomialIdeal; the error path (ungraded input) is the nontrivial part.
bool is_homogeneous_ideal(const BlueprintPresentation& pres,
                          const MonomialIdeal& ideal);

}  // namespace bluescheme
