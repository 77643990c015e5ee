#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bluescheme/printer.hpp"
#include "bluescheme/spectrum.hpp"

namespace bluescheme::cli {

/// Serializable view of a spectrum poset. Point ids follow the canonical
/// point order (rank descending, then bitmask ascending); edges are the
/// cover relations (q, p) with q strictly contained in p, i.e. the
/// transitive reduction of containment.
struct PosetDocument {
  struct Point {
    std::uint64_t id = 0;
    std::vector<std::string> subset;
    std::uint64_t bitmask = 0;
    std::uint32_t rank = 0;
    bool closed = false;
    bool generic = false;

    bool operator==(const Point&) const = default;
  };

  std::string model;
  std::string kind;  // "spec" or "proj"
  std::vector<std::size_t> counts_by_rank;
  std::vector<Point> points;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

  bool operator==(const PosetDocument&) const = default;

  static PosetDocument from_poset(const BlueprintPresentation& pres,
                                  const SpectrumPoset& poset,
                                  std::string model, std::string kind);

  std::string to_json() const;
  static PosetDocument from_json(std::string_view text);  // throws on junk

  std::string to_dot() const;
};

}  // namespace bluescheme::cli
