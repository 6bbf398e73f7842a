#include "holgraph/normgraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"

namespace holgraph {

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::ClosedForm: return "closed";
    case Engine::Modular: return "modular";
    case Engine::General: return "general";
  }
  return "?";
}

std::optional<Engine> engine_from_string(std::string_view name) {
  for (Engine e : {Engine::ClosedForm, Engine::Modular, Engine::General}) {
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

std::string_view to_string(EdgeProvenance provenance) {
  switch (provenance) {
    case EdgeProvenance::ClosedForm: return "closed_form";
    case EdgeProvenance::ModularCriterion: return "modular_criterion";
    case EdgeProvenance::GeneralCriterion: return "general_criterion";
    case EdgeProvenance::Oracle: return "oracle";
  }
  return "?";
}

std::optional<EdgeProvenance> provenance_from_string(std::string_view name) {
  for (EdgeProvenance e : {EdgeProvenance::ClosedForm, EdgeProvenance::ModularCriterion,
                           EdgeProvenance::GeneralCriterion, EdgeProvenance::Oracle}) {
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

EdgeProvenance provenance_of(Engine engine) {
  switch (engine) {
    case Engine::ClosedForm: return EdgeProvenance::ClosedForm;
    case Engine::Modular: return EdgeProvenance::ModularCriterion;
    case Engine::General: return EdgeProvenance::GeneralCriterion;
  }
  return EdgeProvenance::ModularCriterion;
}

namespace {

void require_same_modulus(const GammaFunction& a, const GammaFunction& b) {
  if (!(a.modulus() == b.modulus())) throw ModulusMismatch("gamma functions on different moduli");
}

}  // namespace

std::optional<PairWitness> find_general_violation(const GammaFunction& gamma,
                                                  const GammaFunction& delta) {
  require_same_modulus(gamma, delta);
  const Modulus& mod = gamma.modulus();
  const u64 m = mod.value();
  for (u64 g = 0; g < m; ++g) {
    for (u64 h = 0; h < m; ++h) {
      const u64 lhs = mod.add(mod.sub(h, circle_raw(gamma, g, h)), circle_raw(delta, h, g));
      if (gamma.at(h) != gamma.at(lhs)) return PairWitness{g, h};
      const u64 rhs = mod.add(mod.sub(h, circle_raw(delta, g, h)), circle_raw(gamma, h, g));
      if (delta.at(h) != delta.at(rhs)) return PairWitness{g, h};
    }
  }
  return std::nullopt;
}

std::optional<PairWitness> find_modular_violation(const GammaFunction& gamma,
                                                  const GammaFunction& delta) {
  require_same_modulus(gamma, delta);
  const Modulus& mod = gamma.modulus();
  const u64 m = mod.value();
  const u64 q = gamma.period();
  const u64 r = delta.period();
  for (u64 x = 0; x < m; ++x) {
    for (u64 y = 0; y < m; ++y) {
      // delta(y) x + y - gamma(x) y - x
      u64 d = mod.sub(mod.add(mod.mul(delta.at(y), x), y), mod.add(mod.mul(gamma.at(x), y), x));
      if (d % q != 0) return PairWitness{x, y};
      d = mod.sub(mod.add(mod.mul(gamma.at(y), x), y), mod.add(mod.mul(delta.at(x), y), x));
      if (d % r != 0) return PairWitness{x, y};
    }
  }
  return std::nullopt;
}

bool mutually_normalize_general(const GammaFunction& gamma, const GammaFunction& delta) {
  return !find_general_violation(gamma, delta).has_value();
}

bool mutually_normalize_mod(const GammaFunction& gamma, const GammaFunction& delta) {
  return !find_modular_violation(gamma, delta).has_value();
}

namespace {

unsigned ceil_half(unsigned n) { return (n + 1) / 2; }

u64 ipow(u64 base, unsigned e) {
  u64 r = 1;
  while (e--) r *= base;
  return r;
}

// (u, w) with the label's table x -> sigma_{p^u w x + 1}; G1 and G2 are the
// u = n and u = n - 1 members of the C family.
std::optional<std::pair<unsigned, u64>> cyclic_coordinates(const SubgroupLabel& l) {
  switch (l.family) {
    case Family::G1: return std::pair{l.n, u64{1}};
    case Family::G2: return std::pair{l.n - 1, u64{1}};
    case Family::C:
    case Family::U: return std::pair{l.u, conjugating_unit(l)};
    default: return std::nullopt;
  }
}

bool in(Family f, std::initializer_list<Family> set) {
  return std::find(set.begin(), set.end(), f) != set.end();
}

}  // namespace

bool predicted_edge(const SubgroupLabel& a, const SubgroupLabel& b) {
  if (a.p != b.p || a.n != b.n) throw std::invalid_argument("predicted_edge: labels of different (p, n)");
  if (!is_canonical(a) || !is_canonical(b)) throw NonCanonicalLabel("predicted_edge: non-canonical label");
  const u64 p = a.p;
  const unsigned n = a.n;
  if (p == 2 && n < 4) throw Unsupported("closed-form edge rules need n >= 4 for p = 2");

  if (p == 2) {
    using F = Family;
    if (in(a.family, {F::G1, F::G2, F::G3, F::G4}) && in(b.family, {F::G1, F::G2, F::G3, F::G4})) {
      return true;
    }
    if (in(a.family, {F::G3, F::G4, F::G5, F::G6}) && in(b.family, {F::G3, F::G4, F::G5, F::G6})) {
      return true;
    }
    const bool a_pm = a.family == F::P || a.family == F::M;
    const bool b_pm = b.family == F::P || b.family == F::M;
    if (a_pm && b_pm) {
      const u64 period = u64{1} << (n - 3);
      if (a.family == b.family) return (a.k + period * 4 - b.k) % period == 0;
      const u64 k = a.family == F::P ? a.k : b.k;
      const u64 h = a.family == F::P ? b.k : a.k;
      // k - h = 2^{n-4} mod 2^{n-3}; n = 4 makes this k - h odd.
      return (k + period * 4 - h) % period == (u64{1} << (n - 4)) % period;
    }
  }

  const auto ca = cyclic_coordinates(a);
  const auto cb = cyclic_coordinates(b);
  if (!ca || !cb) return false;
  const Modulus mod(p, n);
  const auto [u, w] = *ca;
  const auto [v, z] = *cb;
  const u64 d = mod.sub(mod.mul(mod.pow(p, u), w), mod.mul(mod.pow(p, v), z));
  return d % ipow(p, n - u) == 0 && d % ipow(p, n - v) == 0;
}

std::optional<std::size_t> NormalizingGraph::index_of(const SubgroupLabel& label) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), label,
                             [](const Vertex& v, const SubgroupLabel& l) { return v.label < l; });
  if (it == vertices.end() || !(it->label == label)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

bool NormalizingGraph::has_edge(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return edges.count({i, j}) != 0;
}

bool NormalizingGraph::has_edge(const SubgroupLabel& a, const SubgroupLabel& b) const {
  const auto i = index_of(a);
  const auto j = index_of(b);
  return i && j && has_edge(*i, *j);
}

EdgeProvenance NormalizingGraph::edge_provenance(std::size_t i, std::size_t j) const {
  if (!has_edge(i, j)) throw std::out_of_range("no such edge");
  return provenance;
}

std::set<std::pair<SubgroupLabel, SubgroupLabel>> NormalizingGraph::edge_labels() const {
  std::set<std::pair<SubgroupLabel, SubgroupLabel>> out;
  for (const auto& [i, j] : edges) out.emplace(vertices[i].label, vertices[j].label);
  return out;
}

void NormalizingGraph::check_invariants() const {
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (!(vertices[i - 1].label < vertices[i].label)) {
      throw std::logic_error("graph vertices not strictly sorted");
    }
  }
  for (const auto& v : vertices) {
    if (v.label.p != p || v.label.n != n || !is_canonical(v.label)) {
      throw std::logic_error("graph vertex " + v.label.to_string() + " is not canonical");
    }
  }
  for (const auto& [i, j] : edges) {
    if (i >= j || j >= vertices.size()) throw std::logic_error("malformed edge");
  }
}

NormalizingGraph build_graph(u64 p, unsigned n, Engine engine, unsigned jobs) {
  if (engine == Engine::ClosedForm && p == 2 && n == 3) engine = Engine::Modular;
  const Modulus mod(p, n);
  if (engine != Engine::ClosedForm && mod.value() > kEngineModulusLimit) {
    throw FeasibilityError("the " + std::string(to_string(engine)) + " engine supports p^n <= " +
                           std::to_string(kEngineModulusLimit));
  }

  NormalizingGraph graph;
  graph.p = p;
  graph.n = n;
  graph.provenance = provenance_of(engine);
  for (auto& e : full_catalog(p, n)) {
    graph.vertices.push_back({std::move(e.label), std::move(e.gamma), e.iso});
  }

  const std::size_t count = graph.vertices.size();
  std::vector<std::vector<char>> rows(count);
  detail::parallel_for(count, jobs, [&](unsigned, std::size_t i) {
    std::vector<char>& row = rows[i];
    row.assign(count, 0);
    for (std::size_t j = i + 1; j < count; ++j) {
      const Vertex& a = graph.vertices[i];
      const Vertex& b = graph.vertices[j];
      switch (engine) {
        case Engine::ClosedForm: row[j] = predicted_edge(a.label, b.label); break;
        case Engine::Modular: row[j] = mutually_normalize_mod(a.gamma, b.gamma); break;
        case Engine::General: row[j] = mutually_normalize_general(a.gamma, b.gamma); break;
      }
    }
  });
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (rows[i][j]) graph.edges.emplace(i, j);
    }
  }
  return graph;
}

std::string_view to_string(CliqueKind kind) {
  switch (kind) {
    case CliqueKind::Normals4: return "Normals4";
    case CliqueKind::SD4: return "SD4";
    case CliqueKind::H: return "H";
    case CliqueKind::A: return "A";
    case CliqueKind::S: return "S";
  }
  return "?";
}

std::string CliqueFamily::name() const {
  switch (kind) {
    case CliqueKind::A: {
      std::string out = "A[" + std::to_string(u) + "," + std::to_string(t);
      if (c != 0) out += "," + std::to_string(c);
      return out + "]";
    }
    case CliqueKind::S: return "S[" + std::to_string(t) + "]";
    default: return std::string(to_string(kind));
  }
}

u64 h_size(u64 p, unsigned n) { return ipow(p, n - ceil_half(n)); }

u64 a_family_count(u64 p, unsigned n) {
  const unsigned e = n + 1 - 2 * ceil_half(n);  // 0 or 1
  if (p == 2) return ((u64{1} << (n - 3)) - (u64{1} << e)) / 3;
  return (ipow(p, n - 1) - ipow(p, e)) / (p + 1);
}

u64 a_family_count_sum(u64 p, unsigned n) {
  u64 total = 0;
  const unsigned lo = p == 2 ? 2 : 1;
  for (unsigned u = lo; u < ceil_half(n); ++u) {
    total += ipow(p, n - 2 * u - 1) * (p == 2 ? 1 : p - 1);
  }
  return total;
}

u64 s_family_count(unsigned n) { return u64{1} << (n - 3); }

std::vector<CliqueFamily> clique_families(u64 p, unsigned n) {
  if (p == 2 && n < 4) throw Unsupported("clique families need n >= 4 for p = 2");
  if (!is_prime(p) || n < 1) throw std::invalid_argument("clique_families: bad (p, n)");
  const unsigned half = ceil_half(n);
  std::vector<CliqueFamily> out;
  auto finish = [&](CliqueFamily f) {
    std::sort(f.members.begin(), f.members.end());
    out.push_back(std::move(f));
  };

  if (p == 2) {
    using F = Family;
    finish({CliqueKind::Normals4, 0, 0, 0,
            {make_label(p, n, F::G1), make_label(p, n, F::G2), make_label(p, n, F::G3),
             make_label(p, n, F::G4)}});
    finish({CliqueKind::SD4, 0, 0, 0,
            {make_label(p, n, F::G3), make_label(p, n, F::G4), make_label(p, n, F::G5),
             make_label(p, n, F::G6)}});
    CliqueFamily h{CliqueKind::H, 0, 0, 0, {make_label(p, n, F::G1), make_label(p, n, F::G2)}};
    for (unsigned u = half; u + 2 <= n; ++u) {
      for (u64 k = 0; k < (u64{1} << (n - u - 1)); ++k) h.members.push_back(make_label(p, n, F::C, u, k));
    }
    finish(std::move(h));
    for (unsigned u = 2; u < half; ++u) {
      const u64 step = u64{1} << (n - 2 * u - 1);
      for (u64 t = 0; t < step; ++t) {
        CliqueFamily a{CliqueKind::A, u, t, 0, {}};
        for (u64 k = t; k < (u64{1} << (n - u - 1)); k += step) {
          a.members.push_back(make_label(p, n, F::C, u, k));
        }
        finish(std::move(a));
      }
    }
    const u64 range = u64{1} << (n - 2);
    const u64 eighth = u64{1} << (n - 3);
    const u64 sixteenth = u64{1} << (n - 4);
    for (u64 k = 0; k < eighth; ++k) {
      finish({CliqueKind::S, 0, k, 0,
              {make_label(p, n, F::P, 0, k), make_label(p, n, F::M, 0, (k + sixteenth) % range),
               make_label(p, n, F::P, 0, (k + eighth) % range),
               make_label(p, n, F::M, 0, (k + eighth + sixteenth) % range)}});
    }
    return out;
  }

  CliqueFamily h{CliqueKind::H, 0, 0, 0, {make_label(p, n, Family::U, n, 0, 1)}};
  for (unsigned u = half; u < n; ++u) {
    for (u64 k = 0; k < ipow(p, n - u - 1); ++k) {
      for (u64 c = 1; c < p; ++c) h.members.push_back(make_label(p, n, Family::U, u, k, c));
    }
  }
  finish(std::move(h));
  for (unsigned u = 1; u < half; ++u) {
    const u64 step = ipow(p, n - 2 * u - 1);
    for (u64 t = 0; t < step; ++t) {
      for (u64 c = 1; c < p; ++c) {
        CliqueFamily a{CliqueKind::A, u, t, c, {}};
        for (u64 k = t; k < ipow(p, n - u - 1); k += step) {
          a.members.push_back(make_label(p, n, Family::U, u, k, c));
        }
        finish(std::move(a));
      }
    }
  }
  return out;
}

}  // namespace holgraph
