// Mutual normalization between regular subgroups of Hol(Z/p^n), decided three
// ways, and the graph it induces on the catalog.
//
// With g o h the circle product of gamma and g . h the one of delta, the
// subgroups of gamma and delta normalize each other iff for all g, h
//     gamma(h) = gamma(h - (g o h) + (h . g))
//     delta(h) = delta(h - (g . h) + (h o g)).
// Since Aut(G) is abelian this reduces to two congruences modulo the periods
// q of gamma and r of delta:
//     x = delta(y) x + y - gamma(x) y   (mod q)
//     x = gamma(y) x + y - delta(x) y   (mod r).

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holgraph/catalog.hpp"

namespace holgraph {

enum class Engine { ClosedForm, Modular, General };
enum class EdgeProvenance { ClosedForm, ModularCriterion, GeneralCriterion, Oracle };

std::string_view to_string(Engine engine);
std::optional<Engine> engine_from_string(std::string_view name);  // closed|modular|general
std::string_view to_string(EdgeProvenance provenance);
std::optional<EdgeProvenance> provenance_from_string(std::string_view name);
EdgeProvenance provenance_of(Engine engine);

// First (g, h) breaking one of the two general conditions.
std::optional<PairWitness> find_general_violation(const GammaFunction& gamma,
                                                  const GammaFunction& delta);
// First (x, y) breaking one of the two congruences.
std::optional<PairWitness> find_modular_violation(const GammaFunction& gamma,
                                                  const GammaFunction& delta);
bool mutually_normalize_general(const GammaFunction& gamma, const GammaFunction& delta);
bool mutually_normalize_mod(const GammaFunction& gamma, const GammaFunction& delta);

// Closed-form decision on canonical labels of the same (p, n). Throws
// Unsupported for p = 2, n = 3.
bool predicted_edge(const SubgroupLabel& a, const SubgroupLabel& b);

struct Vertex {
  SubgroupLabel label;
  GammaFunction gamma;
  IsoClass iso;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct NormalizingGraph {
  u64 p = 2;
  unsigned n = 3;
  std::vector<Vertex> vertices;                       // sorted by label
  std::set<std::pair<std::size_t, std::size_t>> edges;  // (i, j) with i < j
  // Every edge of one graph comes from the same decision procedure.
  EdgeProvenance provenance = EdgeProvenance::ModularCriterion;

  std::optional<std::size_t> index_of(const SubgroupLabel& label) const;
  bool has_edge(std::size_t i, std::size_t j) const;
  bool has_edge(const SubgroupLabel& a, const SubgroupLabel& b) const;
  EdgeProvenance edge_provenance(std::size_t i, std::size_t j) const;
  std::set<std::pair<SubgroupLabel, SubgroupLabel>> edge_labels() const;
  // Throws std::logic_error on self-loops, unsorted or duplicate vertices.
  void check_invariants() const;

  friend bool operator==(const NormalizingGraph&, const NormalizingGraph&) = default;
};

// Largest p^n accepted by the table-based engines.
inline constexpr u64 kEngineModulusLimit = 4096;

// Graph over full_catalog(p, n). The closed-form engine falls back to the
// modular criterion at p = 2, n = 3. jobs = 0 uses all hardware threads.
NormalizingGraph build_graph(u64 p, unsigned n, Engine engine, unsigned jobs = 0);

enum class CliqueKind { Normals4, SD4, H, A, S };
std::string_view to_string(CliqueKind kind);

struct CliqueFamily {
  CliqueKind kind = CliqueKind::H;
  unsigned u = 0;  // A
  u64 t = 0;       // A; k for S
  u64 c = 0;       // A, odd p
  std::vector<SubgroupLabel> members;  // sorted

  // "Normals4", "SD4", "H", "A[u,t]", "A[u,t,c]", "S[k]".
  std::string name() const;
};

// Throws Unsupported for p = 2, n < 4.
std::vector<CliqueFamily> clique_families(u64 p, unsigned n);

// Closed forms for the family sizes and counts.
u64 h_size(u64 p, unsigned n);
u64 a_family_count(u64 p, unsigned n);      // closed form
u64 a_family_count_sum(u64 p, unsigned n);  // direct sum over (u, t[, c])
u64 s_family_count(unsigned n);             // p = 2

// DOT and JSON renderings; both byte-stable.
std::string to_dot(const NormalizingGraph& graph);
std::string to_json(const NormalizingGraph& graph);
// Inverse of to_json; gamma tables are rebuilt from the labels.
NormalizingGraph graph_from_json(std::string_view text);

}  // namespace holgraph
