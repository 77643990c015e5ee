#include "bluescheme/printer.hpp"

#include <algorithm>
#include <sstream>

namespace bluescheme {

std::string format_monomial(const BlueprintPresentation& pres,
                            const Monomial& m) {
  if (m.is_zero()) return "0";
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [idx, exp] : m.factors()) {
    if (!out.empty()) out += "*";
    out += pres.generator_name(idx);
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

std::string format_sum(const BlueprintPresentation& pres, const FormalSum& s) {
  if (s.is_zero()) return "0";
  std::string out;
  const auto& terms = s.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += format_monomial(pres, *it);
  }
  return out;
}

std::string format_relation(const BlueprintPresentation& pres,
                            const Relation& rel) {
  return format_sum(pres, rel.first()) + " == " +
         format_sum(pres, rel.second());
}

std::string format_subset(const BlueprintPresentation& pres,
                          std::uint64_t bitmask) {
  std::string out = "{";
  bool first = true;
  for (GenIndex g = 0; g < pres.generator_count(); ++g) {
    if (!(bitmask & (std::uint64_t{1} << g))) continue;
    if (!first) out += ",";
    out += pres.generator_name(g);
    first = false;
  }
  return out + "}";
}

std::string print_blueprint(const BlueprintPresentation& pres) {
  std::ostringstream out;
  out << "blueprint " << (pres.name().empty() ? "b" : pres.name()) << " {\n";
  const std::size_t n = pres.generator_count();
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    if (pres.is_graded()) {
      while (stop < n && pres.generator_degree(static_cast<GenIndex>(stop)) ==
                             pres.generator_degree(
                                 static_cast<GenIndex>(start))) {
        ++stop;
      }
    } else {
      stop = n;
    }
    out << "  gens";
    for (std::size_t g = start; g < stop; ++g) {
      out << " " << pres.generator_name(static_cast<GenIndex>(g));
    }
    if (pres.is_graded()) {
      out << " : deg "
          << pres.generator_degree(static_cast<GenIndex>(start));
    }
    out << ";\n";
    start = stop;
  }
  for (const Relation& rel : pres.relations()) {
    out << "  rel " << format_relation(pres, rel) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bluescheme
