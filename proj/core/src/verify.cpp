#include "holgraph/verify.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

#include "holgraph/oracle.hpp"

namespace holgraph {

namespace {

std::string describe_divergence(const NormalizingGraph& built, const NormalizingGraph& oracle) {
  const auto a = built.edge_labels();
  const auto b = oracle.edge_labels();
  std::vector<std::pair<SubgroupLabel, SubgroupLabel>> extra, missing;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(extra));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(missing));
  const bool spurious = !extra.empty() && (missing.empty() || extra.front() < missing.front());
  const auto& [x, y] = spurious ? extra.front() : missing.front();
  std::ostringstream out;
  out << (spurious ? "extra edge " : "missing edge ") << x.to_string() << " -- " << y.to_string();
  const auto gx = labeled_gamma(x);
  const auto gy = labeled_gamma(y);
  if (auto w = find_general_violation(gx, gy)) {
    out << " (general criterion fails at g=" << w->g << ", h=" << w->h << ")";
  }
  if (auto w = find_modular_violation(gx, gy)) {
    out << " (modular criterion fails at x=" << w->g << ", y=" << w->h << ")";
  }
  return out.str();
}

}  // namespace

bool VerificationReport::vertices_match() const {
  return missing_from_oracle.empty() && missing_from_catalog.empty() &&
         catalog_vertices == oracle_vertices;
}

bool VerificationReport::passed() const {
  bool modular = false, general = false;
  for (const auto& e : engines) {
    if (e.ran && !e.equal) return false;
    modular |= e.ran && e.engine == Engine::Modular;
    general |= e.ran && e.engine == Engine::General;
  }
  return counts_match() && vertices_match() && modular && general;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "verify p=" << p << " n=" << n << '\n';
  out << "counts:";
  for (IsoTag tag : kAllIsoTags) {
    if (expected.count(tag) || oracle.count(tag)) {
      out << ' ' << to_string(tag) << ' ' << oracle.count(tag) << '/' << expected.count(tag);
    }
  }
  out << " total " << oracle.total << '/' << expected.total << " (oracle/expected) "
      << (counts_match() ? "OK" : "MISMATCH") << '\n';
  out << "vertices: catalog " << catalog_vertices << ", oracle " << oracle_vertices << ' '
      << (vertices_match() ? "OK" : "MISMATCH") << '\n';
  for (const auto& l : missing_from_oracle) out << "  not found by oracle: " << l << '\n';
  for (const auto& l : missing_from_catalog) out << "  not in catalog: " << l << '\n';
  out << "oracle edges: " << oracle_edges << '\n';
  for (const auto& e : engines) {
    out << "engine " << to_string(e.engine) << ": ";
    if (!e.ran) {
      out << "skipped (" << e.skipped << ")\n";
      continue;
    }
    out << e.edges << " edges " << (e.equal ? "OK" : "MISMATCH") << '\n';
    if (!e.equal) out << "  first divergence: " << e.first_divergence << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

VerificationReport verify(u64 p, unsigned n, unsigned jobs) {
  VerificationReport report;
  report.p = p;
  report.n = n;
  report.expected = expected_counts(p, n);

  const auto subgroups = enumerate_regular_subgroups(p, n, 2, jobs);
  report.oracle = count_by_iso(subgroups, p, n);

  const auto catalog = catalog_labels(p, n);
  report.catalog_vertices = catalog.size();
  const NormalizingGraph oracle = oracle_graph(subgroups, p, n, jobs);
  report.oracle_vertices = oracle.vertices.size();
  report.oracle_edges = oracle.edges.size();
  std::vector<SubgroupLabel> found;
  for (const auto& v : oracle.vertices) found.push_back(v.label);
  for (const auto& l : catalog) {
    if (!std::binary_search(found.begin(), found.end(), l)) report.missing_from_oracle.push_back(l.to_string());
  }
  for (const auto& l : found) {
    if (!std::binary_search(catalog.begin(), catalog.end(), l)) report.missing_from_catalog.push_back(l.to_string());
  }

  for (Engine engine : {Engine::ClosedForm, Engine::Modular, Engine::General}) {
    EngineCheck check;
    check.engine = engine;
    if (engine == Engine::ClosedForm && p == 2 && n == 3) {
      check.skipped = "closed form disabled at p=2, n=3";
      report.engines.push_back(check);
      continue;
    }
    const NormalizingGraph built = build_graph(p, n, engine, jobs);
    check.ran = true;
    check.edges = built.edges.size();
    check.equal = built.edge_labels() == oracle.edge_labels();
    if (!check.equal) check.first_divergence = describe_divergence(built, oracle);
    report.engines.push_back(check);
  }
  return report;
}

}  // namespace holgraph
