#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "holgraph/normgraph.hpp"

namespace holgraph {

namespace {

std::vector<CliqueFamily> families_or_empty(u64 p, unsigned n) {
  try {
    return clique_families(p, n);
  } catch (const Unsupported&) {
    return {};
  }
}

std::string_view color_of(CliqueKind kind) {
  switch (kind) {
    case CliqueKind::Normals4: return "red";
    case CliqueKind::SD4: return "orange";
    case CliqueKind::H: return "blue";
    case CliqueKind::A: return "darkgreen";
    case CliqueKind::S: return "purple";
  }
  return "black";
}

bool contains(const CliqueFamily& f, const SubgroupLabel& l) {
  return std::binary_search(f.members.begin(), f.members.end(), l);
}

}  // namespace

std::string to_dot(const NormalizingGraph& graph) {
  const auto families = families_or_empty(graph.p, graph.n);
  std::ostringstream out;
  out << "graph \"Z_" << graph.p << "^" << graph.n << "\" {\n";
  out << "  node [shape=box];\n";
  for (const auto& v : graph.vertices) {
    out << "  \"" << v.label.to_string() << "\" [iso=\"" << to_string(v.iso.tag)
        << "\", period=" << v.gamma.period() << "];\n";
  }
  for (const auto& f : families) {
    out << "  // " << f.name() << ":";
    for (const auto& l : f.members) out << ' ' << l.to_string();
    out << '\n';
  }
  for (const auto& [i, j] : graph.edges) {
    const auto& a = graph.vertices[i].label;
    const auto& b = graph.vertices[j].label;
    std::string_view color = "black";
    for (const auto& f : families) {
      if (contains(f, a) && contains(f, b)) {
        color = color_of(f.kind);
        break;
      }
    }
    out << "  \"" << a.to_string() << "\" -- \"" << b.to_string() << "\" [color=" << color
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const NormalizingGraph& graph) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["p"] = graph.p;
  doc["n"] = graph.n;
  doc["engine"] = std::string(to_string(graph.provenance));
  ordered_json vertices = ordered_json::array();
  std::map<IsoTag, u64> by_class;
  for (const auto& v : graph.vertices) {
    vertices.push_back({{"label", v.label.to_string()},
                        {"iso", std::string(to_string(v.iso.tag))},
                        {"period", v.gamma.period()}});
    ++by_class[v.iso.tag];
  }
  doc["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (const auto& [i, j] : graph.edges) {
    edges.push_back({graph.vertices[i].label.to_string(), graph.vertices[j].label.to_string()});
  }
  doc["edges"] = std::move(edges);
  ordered_json cliques = ordered_json::array();
  for (const auto& f : families_or_empty(graph.p, graph.n)) {
    ordered_json members = ordered_json::array();
    for (const auto& l : f.members) members.push_back(l.to_string());
    cliques.push_back({{"kind", f.name()}, {"members", std::move(members)}});
  }
  doc["cliques"] = std::move(cliques);
  ordered_json counts;
  counts["vertices"] = graph.vertices.size();
  counts["edges"] = graph.edges.size();
  for (IsoTag tag : kAllIsoTags) {
    if (by_class.count(tag)) counts[std::string(to_string(tag))] = by_class[tag];
  }
  doc["counts"] = std::move(counts);
  return doc.dump(2) + "\n";
}

NormalizingGraph graph_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  NormalizingGraph graph;
  graph.p = doc.at("p").get<u64>();
  graph.n = doc.at("n").get<unsigned>();
  const auto provenance = provenance_from_string(doc.at("engine").get<std::string>());
  if (!provenance) throw std::invalid_argument("graph JSON: unknown engine tag");
  graph.provenance = *provenance;
  const Modulus mod(graph.p, graph.n);
  for (const auto& v : doc.at("vertices")) {
    const auto label = SubgroupLabel::parse(v.at("label").get<std::string>(), graph.p, graph.n);
    const auto tag = iso_tag_from_string(v.at("iso").get<std::string>());
    if (!tag) throw std::invalid_argument("graph JSON: unknown isomorphism class");
    GammaFunction gamma = labeled_gamma(label);
    if (gamma.period() != v.at("period").get<u64>()) {
      throw std::invalid_argument("graph JSON: period mismatch for " + label.to_string());
    }
    graph.vertices.push_back({label, std::move(gamma), IsoClass{*tag, mod.value()}});
  }
  std::sort(graph.vertices.begin(), graph.vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.label < b.label; });
  for (const auto& e : doc.at("edges")) {
    const auto a = graph.index_of(SubgroupLabel::parse(e.at(0).get<std::string>(), graph.p, graph.n));
    const auto b = graph.index_of(SubgroupLabel::parse(e.at(1).get<std::string>(), graph.p, graph.n));
    if (!a || !b || *a == *b) throw std::invalid_argument("graph JSON: bad edge");
    graph.edges.emplace(std::min(*a, *b), std::max(*a, *b));
  }
  graph.check_invariants();
  return graph;
}

}  // namespace holgraph
