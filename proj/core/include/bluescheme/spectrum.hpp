#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "bluescheme/ideal.hpp"

namespace bluescheme {

/// Generator-count ceiling for the subset enumeration (a 2^n loop).
inline constexpr GenIndex kEnumerationGuard = 24;

struct PrimeIdeal {
  MonomialIdeal ideal;
  bool homogeneous = true;
};

/// Enumerates the prime ideals of a monomial blueprint presentation.
///
/// Every prime of a monomial blueprint is determined by its trace on the
/// generators (a prime containing a monomial contains one of its variable
/// factors), so the search runs over all 2^n generator subsets in ascending
/// bitmask order and keeps those whose forcing saturation adds nothing.
/// Generator-subset ideals of a graded presentation are automatically
/// homogeneous, so `homogeneous_only` never filters anything there; it is
/// part of the contract for callers that request Proj-style input.
///
/// Throws EnumerationGuardError when the presentation has more than `guard`
/// generators.
std::vector<PrimeIdeal> enumerate_primes(
    std::shared_ptr<const BlueprintPresentation> pres,
    bool homogeneous_only = false,
    std::uint32_t budget = kDefaultSaturationDepth,
    GenIndex guard = kEnumerationGuard);

std::vector<PrimeIdeal> enumerate_primes(
    const BlueprintPresentation& pres, bool homogeneous_only = false,
    std::uint32_t budget = kDefaultSaturationDepth,
    GenIndex guard = kEnumerationGuard);

/// A finite spectrum with its specialization order q <= p iff q ⊆ p,
/// ranks, and the transitive reduction of the order.
///
/// Points are stored in canonical output order: rank descending (generic
/// points first), then bitmask ascending.
class SpectrumPoset {
 public:
  struct Point {
    PrimeIdeal prime;
    std::uint64_t bitmask = 0;
    std::uint32_t rank = 0;
    bool closed = false;
    bool generic = false;
  };

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Cover relations (q, p) with q ⊊ p, as indices into points().
  const std::vector<std::pair<std::size_t, std::size_t>>& cover_edges() const {
    return covers_;
  }

  /// Containment order on point indices.
  bool less_equal(std::size_t a, std::size_t b) const;

  std::optional<std::size_t> find_by_bitmask(std::uint64_t mask) const;

  std::vector<std::size_t> closed_points() const;
  std::vector<std::size_t> generic_points() const;

  /// Point counts indexed by rank, 0 .. max rank. Empty for an empty poset.
  std::vector<std::size_t> rank_histogram() const;

  std::uint32_t max_rank() const;

  friend SpectrumPoset specialization_order(std::vector<PrimeIdeal> primes);

 private:
  std::vector<Point> points_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Builds the specialization poset of a set of primes: containment order,
/// ranks via longest chains, closed (maximal) and generic (minimal) flags,
/// and cover edges.
SpectrumPoset specialization_order(std::vector<PrimeIdeal> primes);

/// Rank of a point: the length of the longest strictly increasing chain of
/// primes starting at it inside the point set. Closed points have rank 0.
/// Throws std::out_of_range for an invalid index.
std::uint32_t rank(const SpectrumPoset& poset, std::size_t point_index);

}  // namespace bluescheme
