#include "poset_document.hpp"

#include <map>
#include <sstream>

#include "bluescheme/errors.hpp"
#include "json.hpp"

namespace bluescheme::cli {

PosetDocument PosetDocument::from_poset(const BlueprintPresentation& pres,
                                        const SpectrumPoset& poset,
                                        std::string model, std::string kind) {
  PosetDocument doc;
  doc.model = std::move(model);
  doc.kind = std::move(kind);
  doc.counts_by_rank = poset.rank_histogram();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& p = poset.points()[i];
    Point point;
    point.id = i;
    for (GenIndex g : p.prime.ideal.generator_subset()) {
      point.subset.push_back(pres.generator_name(g));
    }
    point.bitmask = p.bitmask;
    point.rank = p.rank;
    point.closed = p.closed;
    point.generic = p.generic;
    doc.points.push_back(std::move(point));
  }
  for (const auto& [q, p] : poset.cover_edges()) {
    doc.edges.emplace_back(q, p);
  }
  return doc;
}

std::string PosetDocument::to_json() const {
  nlohmann::ordered_json j;
  j["model"] = model;
  j["kind"] = kind;
  j["counts_by_rank"] = counts_by_rank;
  j["points"] = nlohmann::ordered_json::array();
  for (const Point& p : points) {
    nlohmann::ordered_json jp;
    jp["id"] = p.id;
    jp["subset"] = p.subset;
    jp["bitmask"] = p.bitmask;
    jp["rank"] = p.rank;
    jp["closed"] = p.closed;
    jp["generic"] = p.generic;
    j["points"].push_back(std::move(jp));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [q, p] : edges) {
    j["edges"].push_back(nlohmann::ordered_json::array({q, p}));
  }
  return j.dump(2) + "\n";
}

PosetDocument PosetDocument::from_json(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BlueprintError(std::string("malformed poset document: ") + e.what());
  }
  try {
    PosetDocument doc;
    doc.model = j.at("model").get<std::string>();
    doc.kind = j.at("kind").get<std::string>();
    doc.counts_by_rank =
        j.at("counts_by_rank").get<std::vector<std::size_t>>();
    for (const auto& jp : j.at("points")) {
      Point p;
      p.id = jp.at("id").get<std::uint64_t>();
      p.subset = jp.at("subset").get<std::vector<std::string>>();
      p.bitmask = jp.at("bitmask").get<std::uint64_t>();
      p.rank = jp.at("rank").get<std::uint32_t>();
      p.closed = jp.at("closed").get<bool>();
      p.generic = jp.at("generic").get<bool>();
      doc.points.push_back(std::move(p));
    }
    for (const auto& je : j.at("edges")) {
      doc.edges.emplace_back(je.at(0).get<std::uint64_t>(),
                             je.at(1).get<std::uint64_t>());
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw BlueprintError(std::string("malformed poset document: ") + e.what());
  }
}

std::string PosetDocument::to_dot() const {
  std::ostringstream out;
  out << "digraph \"" << model << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (const Point& p : points) {
    out << "  n" << p.id << " [label=\"{";
    for (std::size_t i = 0; i < p.subset.size(); ++i) {
      if (i > 0) out << ",";
      out << p.subset[i];
    }
    out << "}\"];\n";
  }
  // one layer per rank, top rank (generic points) first
  std::map<std::uint32_t, std::vector<std::uint64_t>, std::greater<>> layers;
  for (const Point& p : points) layers[p.rank].push_back(p.id);
  for (const auto& [r, ids] : layers) {
    out << "  { rank=same;";
    for (std::uint64_t id : ids) out << " n" << id << ";";
    out << " }\n";
  }
  for (const auto& [q, p] : edges) {
    out << "  n" << q << " -> n" << p << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bluescheme::cli
