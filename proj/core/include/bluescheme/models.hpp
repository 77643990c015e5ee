#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bluescheme/proj.hpp"

namespace bluescheme {

/// The blue affine n-space presentation F1[T1,...,Tn] (ungraded, free).
BlueprintPresentation affine_space(unsigned n);

/// The graded free presentation F1[T0,...,Tn] with all degrees 1.
BlueprintPresentation projective_space_presentation(unsigned n);

/// Projective n-space as a Proj: 2^(n+1) - 1 points.
ProjSpace projective_space(unsigned n,
                           std::uint32_t budget = kDefaultSaturationDepth);

/// The homogeneous coordinate blueprint of Gr(2,4): six degree-1 Pluecker
/// generators x12 < x13 < x14 < x23 < x24 < x34 and the single relation
/// x12*x34 + x14*x23 == x13*x24.
BlueprintPresentation grassmannian_presentation(std::string name = "gr24");

/// The blue-scheme model of Gr(2,4): Proj of the Pluecker presentation,
/// 36 points with rank counts 6/12/11/6/1.
ProjSpace grassmannian_2_4(std::uint32_t budget = kDefaultSaturationDepth);

/// The 2x2-matrix models of affine 4-space: F1[a,b,c,d,D] with
/// ad == bc + D, or ad + bc == D for the twisted variant.
BlueprintPresentation matrices_2x2(bool twisted);

struct ChartMatch {
  bool matched = false;
  bool twisted = false;
  /// chart generator name -> model generator name, when matched.
  std::vector<std::pair<std::string, std::string>> bijection;
};

/// Searches the generator bijections between a Gr(2,4) chart and the 2x2
/// matrix models for an exact relation match. Expects h to be one of the six
/// Pluecker generators (UnknownGeneratorError otherwise); the charts at x12,
/// x34, x14, x23 match the untwisted model and x13, x24 the twisted one.
ChartMatch chart_matches_model(const ProjSpace& proj, std::string_view h);

/// A counting polynomial in the (q-1) basis: N(q) = sum c_i (q-1)^i.
class CountingPolynomial {
 public:
  explicit CountingPolynomial(std::vector<std::uint64_t> coefficients)
      : coefficients_(std::move(coefficients)) {}

  const std::vector<std::uint64_t>& coefficients() const {
    return coefficients_;
  }
  std::size_t degree() const {
    return coefficients_.empty() ? 0 : coefficients_.size() - 1;
  }

  std::uint64_t evaluate(std::uint64_t q) const;

 private:
  std::vector<std::uint64_t> coefficients_;
};

/// The counting polynomial of Gr(2,4):
/// N(q) = 6 + 12(q-1) + 11(q-1)^2 + 5(q-1)^3 + (q-1)^4.
CountingPolynomial grassmannian_counting_polynomial();

std::uint64_t eval_counting_polynomial(const CountingPolynomial& poly,
                                       std::uint64_t q);

/// Counts the k-dimensional subspaces of F_q^n by enumerating reduced
/// row-echelon forms over F_q, one matrix at a time. Desk-scale oracle:
/// requires q prime <= 7 (NonPrimeModulusError / BlueprintError) and
/// k <= n <= 5.
std::uint64_t count_subspaces_bruteforce(unsigned k, unsigned n, unsigned q);

/// Built-in presentations by CLI name: a1..a4, p0..p5, gr24, gr24-cone,
/// m2, m2t. Returns nullopt for unknown names.
std::optional<BlueprintPresentation> builtin_presentation(
    std::string_view name);

std::vector<std::string> builtin_names();

}  // namespace bluescheme
