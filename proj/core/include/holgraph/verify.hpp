// Cross-check of the catalog and the three graph engines against the oracle.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holgraph/catalog.hpp"
#include "holgraph/normgraph.hpp"

namespace holgraph {

struct EngineCheck {
  Engine engine = Engine::Modular;
  bool ran = false;
  std::string skipped;  // reason when !ran
  bool equal = false;
  std::size_t edges = 0;
  std::string first_divergence;  // empty when equal
};

struct VerificationReport {
  u64 p = 2;
  unsigned n = 3;
  CountRecord expected;
  CountRecord oracle;
  std::size_t catalog_vertices = 0;
  std::size_t oracle_vertices = 0;
  std::vector<std::string> missing_from_oracle;
  std::vector<std::string> missing_from_catalog;
  std::size_t oracle_edges = 0;
  std::vector<EngineCheck> engines;

  bool counts_match() const { return expected == oracle; }
  bool vertices_match() const;
  // Requires counts, vertices, and every engine that ran to agree, with the
  // modular and general engines always among those run.
  bool passed() const;
  std::string to_text() const;
};

VerificationReport verify(u64 p, unsigned n, unsigned jobs = 0);

}  // namespace holgraph
