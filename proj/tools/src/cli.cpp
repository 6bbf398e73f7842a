#include "holgraph_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "holgraph/catalog.hpp"
#include "holgraph/normgraph.hpp"
#include "holgraph/oracle.hpp"
#include "holgraph/verify.hpp"
#include "json.hpp"

namespace holgraph::cli {

namespace {

struct RunConfig {
  u64 p = 2;
  unsigned n = 4;
  std::string engine = "closed";
  std::string format;
  std::string output;
  unsigned jobs = 0;
  bool oracle = false;
};

// A failed check that should exit with status 1 after the artifact is written.
struct Outcome {
  std::string text;
  bool ok = true;
};

Outcome catalog_command(const RunConfig& cfg) {
  const auto entries = full_catalog(cfg.p, cfg.n);
  if (cfg.format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
      doc.push_back({{"label", e.label.to_string()},
                     {"family", std::string(to_string(e.label.family))},
                     {"period", e.gamma.period()},
                     {"iso", std::string(to_string(e.iso.tag))},
                     {"normal", declared_normal(e.label)}});
    }
    return {doc.dump(2) + "\n"};
  }
  return {"# p n family u k c period isoclass\n" + serialize_catalog(entries)};
}

std::string graph_text(const NormalizingGraph& g) {
  std::ostringstream out;
  out << "# p=" << g.p << " n=" << g.n << " vertices=" << g.vertices.size()
      << " edges=" << g.edges.size() << " provenance=" << to_string(g.provenance) << '\n';
  for (const auto& v : g.vertices) {
    out << "vertex " << v.label.to_string() << ' ' << to_string(v.iso.tag) << ' '
        << v.gamma.period() << '\n';
  }
  for (const auto& [a, b] : g.edge_labels()) {
    out << "edge " << a.to_string() << ' ' << b.to_string() << '\n';
  }
  return out.str();
}

Outcome graph_command(const RunConfig& cfg) {
  const auto graph = build_graph(cfg.p, cfg.n, *engine_from_string(cfg.engine), cfg.jobs);
  if (cfg.format == "json") return {to_json(graph)};
  if (cfg.format == "text") return {graph_text(graph)};
  return {to_dot(graph)};
}

Outcome verify_command(const RunConfig& cfg) {
  const auto report = verify(cfg.p, cfg.n, cfg.jobs);
  return {report.to_text(), report.passed()};
}

Outcome lemmas_command(const RunConfig& cfg) {
  Outcome result;
  const unsigned first = cfg.p == 2 ? 4 : 1;
  if (cfg.n < first) throw Unsupported("lemmas need n >= " + std::to_string(first));
  if (Modulus(cfg.p, cfg.n).value() > kLemmaModulusLimit) {
    throw FeasibilityError("lemmas: p^n exceeds 2^24");
  }
  for (unsigned e = first; e <= cfg.n; ++e) {
    const auto report = verify_arith_lemmas(Modulus(cfg.p, e));
    result.text += report.to_text();
    result.ok = result.ok && report.passed();
  }
  return result;
}

Outcome counts_command(const RunConfig& cfg) {
  const auto expected = expected_counts(cfg.p, cfg.n);
  std::optional<CountRecord> oracle;
  if (cfg.oracle) oracle = count_by_iso(cfg.p, cfg.n, cfg.jobs);
  std::ostringstream out;
  out << "# p=" << cfg.p << " n=" << cfg.n << '\n';
  out << "class expected" << (oracle ? " oracle" : "") << '\n';
  for (IsoTag tag : kAllIsoTags) {
    if (!iso_class_exists(tag, cfg.p, cfg.n)) continue;
    out << to_string(tag) << ' ' << expected.count(tag);
    if (oracle) out << ' ' << oracle->count(tag);
    out << '\n';
  }
  out << "total " << expected.total;
  if (oracle) out << ' ' << oracle->total;
  out << '\n';
  for (const auto& o : expected.orbits) {
    out << "orbit " << to_string(o.family);
    if (o.family == Family::C || o.family == Family::U) out << '[' << o.u << ']';
    out << ' ' << o.orbit_size << ' ' << to_string(o.iso) << '\n';
  }
  const bool ok = !oracle || *oracle == expected;
  if (oracle) out << (ok ? "MATCH" : "MISMATCH") << '\n';
  return {out.str(), ok};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Regular subgroups of Hol(Z/p^n) and their normalizing graph", "holgraph"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("-p", cfg.p, "prime p")->required();
    sub->add_option("-n", cfg.n, "exponent n")->required()->check(CLI::Range(1u, 62u));
    sub->add_option("-o,--output", cfg.output, "write the artifact to this path");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
  };
  auto* catalog = app.add_subcommand("catalog", "list the gamma-function catalog");
  common(catalog);
  catalog->add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* graph = app.add_subcommand("graph", "build the normalizing graph");
  common(graph);
  graph->add_option("--engine", cfg.engine, "closed | modular | general")
      ->check(CLI::IsMember({"closed", "modular", "general"}));
  graph->add_option("--format", cfg.format, "dot | json | text")
      ->check(CLI::IsMember({"dot", "json", "text"}));

  auto* verify_cmd = app.add_subcommand("verify", "cross-check catalog and engines against the oracle");
  common(verify_cmd);

  auto* lemmas = app.add_subcommand("lemmas", "check the arithmetic lemmas for exponents up to n");
  common(lemmas);

  auto* counts = app.add_subcommand("counts", "print per-class counts");
  common(counts);
  counts->add_flag("--oracle", cfg.oracle, "also count with the brute-force oracle");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "holgraph: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kUsage;
  }
  if (!is_prime(cfg.p)) {
    err << "holgraph: -p must be prime, got " << cfg.p << '\n';
    return kUsage;
  }

  Outcome outcome;
  try {
    if (catalog->parsed()) outcome = catalog_command(cfg);
    else if (graph->parsed()) outcome = graph_command(cfg);
    else if (verify_cmd->parsed()) outcome = verify_command(cfg);
    else if (lemmas->parsed()) outcome = lemmas_command(cfg);
    else outcome = counts_command(cfg);
  } catch (const FeasibilityError& e) {
    err << "holgraph: infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Unsupported& e) {
    err << "holgraph: unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "holgraph: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.output.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    file << outcome.text;
    if (!file) {
      err << "holgraph: cannot write " << cfg.output << '\n';
      return kUsage;
    }
  }
  if (!outcome.ok) {
    err << "holgraph: check failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace holgraph::cli
