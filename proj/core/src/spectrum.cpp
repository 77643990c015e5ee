#include "bluescheme/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace bluescheme {

std::vector<PrimeIdeal> enumerate_primes(
    std::shared_ptr<const BlueprintPresentation> pres, bool homogeneous_only,
    std::uint32_t budget, GenIndex guard) {
  const std::size_t n = pres->generator_count();
  if (n > guard) {
    throw EnumerationGuardError(
        "refusing to enumerate 2^" + std::to_string(n) +
        " generator subsets (guard at " + std::to_string(guard) + ")");
  }

  std::vector<PrimeIdeal> primes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<GenIndex> subset;
    for (GenIndex g = 0; g < n; ++g) {
      if (mask & (std::uint64_t{1} << g)) subset.push_back(g);
    }
    MonomialIdeal ideal = ideal_from_generators(pres, std::move(subset),
                                                budget);
    if (!is_prime(ideal)) continue;
    // Generator-subset ideals are generated by homogeneous elements whenever
    // the presentation is graded.
    const bool homogeneous = pres->is_graded();
    if (homogeneous_only && !homogeneous) continue;
    primes.push_back({std::move(ideal), homogeneous});
  }
  return primes;
}

std::vector<PrimeIdeal> enumerate_primes(const BlueprintPresentation& pres,
                                         bool homogeneous_only,
                                         std::uint32_t budget,
                                         GenIndex guard) {
  return enumerate_primes(std::make_shared<const BlueprintPresentation>(pres),
                          homogeneous_only, budget, guard);
}

bool SpectrumPoset::less_equal(std::size_t a, std::size_t b) const {
  const std::uint64_t ma = points_.at(a).bitmask;
  const std::uint64_t mb = points_.at(b).bitmask;
  return (ma & ~mb) == 0;
}

std::optional<std::size_t> SpectrumPoset::find_by_bitmask(
    std::uint64_t mask) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].bitmask == mask) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> SpectrumPoset::closed_points() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].closed) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> SpectrumPoset::generic_points() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].generic) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> SpectrumPoset::rank_histogram() const {
  if (points_.empty()) return {};
  std::vector<std::size_t> histogram(max_rank() + 1, 0);
  for (const Point& p : points_) ++histogram[p.rank];
  return histogram;
}

std::uint32_t SpectrumPoset::max_rank() const {
  std::uint32_t best = 0;
  for (const Point& p : points_) best = std::max(best, p.rank);
  return best;
}

SpectrumPoset specialization_order(std::vector<PrimeIdeal> primes) {
  SpectrumPoset poset;
  auto& points = poset.points_;
  points.reserve(primes.size());
  for (PrimeIdeal& prime : primes) {
    SpectrumPoset::Point point;
    point.bitmask = prime.ideal.bitmask();
    point.prime = std::move(prime);
    points.push_back(std::move(point));
  }

  const std::size_t n = points.size();
  auto strictly_below = [&](std::size_t a, std::size_t b) {
    const std::uint64_t ma = points[a].bitmask;
    const std::uint64_t mb = points[b].bitmask;
    return ma != mb && (ma & ~mb) == 0;
  };

  // Rank by longest chain upward: process points by descending popcount so
  // every strict superset is ranked first.
  std::vector<std::size_t> by_size(n);
  for (std::size_t i = 0; i < n; ++i) by_size[i] = i;
  std::sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(points[a].bitmask) > std::popcount(points[b].bitmask);
  });
  for (std::size_t i : by_size) {
    std::uint32_t r = 0;
    bool maximal = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (strictly_below(i, j)) {
        maximal = false;
        r = std::max(r, points[j].rank + 1);
      }
    }
    points[i].rank = r;
    points[i].closed = maximal;
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (strictly_below(j, i)) {
        minimal = false;
        break;
      }
    }
    points[i].generic = minimal;
  }

  // Canonical output order: rank descending, then bitmask ascending.
  std::sort(points.begin(), points.end(),
            [](const SpectrumPoset::Point& a, const SpectrumPoset::Point& b) {
              if (a.rank != b.rank) return a.rank > b.rank;
              return a.bitmask < b.bitmask;
            });

  // Cover edges = transitive reduction of the containment order.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!strictly_below(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n; ++c) {
        if (strictly_below(a, c) && strictly_below(c, b)) {
          direct = false;
          break;
        }
      }
      if (direct) poset.covers_.emplace_back(a, b);
    }
  }
  std::sort(poset.covers_.begin(), poset.covers_.end());
  return poset;
}

std::uint32_t rank(const SpectrumPoset& poset, std::size_t point_index) {
  if (point_index >= poset.size()) {
    throw std::out_of_range("point index outside the spectrum poset");
  }
  return poset.points()[point_index].rank;
}

}  // namespace bluescheme
