#include "holgraph/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "parallel.hpp"

namespace holgraph {

AffineMap hol_mul(const Modulus& mod, const AffineMap& x, const AffineMap& y) {
  return {mod.mul(x.aut, y.aut), mod.add(mod.mul(y.aut, x.trans), y.trans)};
}

AffineMap hol_inverse(const Modulus& mod, const AffineMap& x) {
  const u64 inv = mod.inverse(x.aut);
  return {inv, mod.neg(mod.mul(inv, x.trans))};
}

bool PermSubgroup::contains(const AffineMap& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool PermSubgroup::is_subgroup() const {
  const Modulus mod(p, n);
  if (!contains(AffineMap{1, 0})) return false;
  for (const auto& x : elements) {
    if (!contains(hol_inverse(mod, x))) return false;
    for (const auto& y : elements) {
      if (!contains(hol_mul(mod, x, y))) return false;
    }
  }
  return true;
}

bool PermSubgroup::is_regular() const {
  const Modulus mod(p, n);
  if (elements.size() != mod.value()) return false;
  std::vector<char> hit(mod.value(), 0);
  for (const auto& x : elements) {
    const u64 image = x.trans;  // 0 * aut + trans
    if (hit[image]) return false;
    hit[image] = 1;
  }
  return true;
}

namespace {

// Affine maps are indexed as unit_rank * m + trans, so index order is
// lexicographic (aut, trans) order.
struct HolIndex {
  Modulus mod;
  std::vector<u64> units;
  std::vector<std::uint32_t> rank;  // unit -> position in `units`

  explicit HolIndex(const Modulus& m) : mod(m), units(m.units()), rank(m.value(), 0) {
    for (std::size_t i = 0; i < units.size(); ++i) rank[units[i]] = static_cast<std::uint32_t>(i);
  }
  std::size_t size() const { return units.size() * mod.value(); }
  AffineMap at(std::uint32_t idx) const { return {units[idx / mod.value()], idx % mod.value()}; }
  std::uint32_t index(const AffineMap& x) const {
    return static_cast<std::uint32_t>(rank[x.aut] * mod.value() + x.trans);
  }
};

constexpr std::uint32_t kNone = UINT32_MAX;

// Closure of `gens` as long as distinct elements move 0 to distinct points;
// empty if two elements collide. The result then has at most p^n elements.
std::vector<std::uint32_t> semiregular_closure(const HolIndex& hol,
                                               const std::vector<std::uint32_t>& gens,
                                               std::vector<std::uint32_t>& at_trans) {
  std::fill(at_trans.begin(), at_trans.end(), kNone);
  const std::uint32_t identity = hol.index({1, 0});
  std::vector<std::uint32_t> members{identity};
  at_trans[0] = identity;
  std::vector<AffineMap> gen_maps;
  for (auto g : gens) gen_maps.push_back(hol.at(g));
  for (std::size_t i = 0; i < members.size(); ++i) {
    const AffineMap x = hol.at(members[i]);
    for (const auto& g : gen_maps) {
      const AffineMap y = hol_mul(hol.mod, x, g);
      const std::uint32_t idx = hol.index(y);
      const std::uint32_t seen = at_trans[y.trans];
      if (seen == idx) continue;
      if (seen != kNone) return {};
      at_trans[y.trans] = idx;
      members.push_back(idx);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

PermSubgroup to_subgroup(const HolIndex& hol, const std::vector<std::uint32_t>& members,
                         const std::vector<std::uint32_t>& gens) {
  PermSubgroup out;
  out.p = hol.mod.prime();
  out.n = hol.mod.exponent();
  for (auto idx : members) out.elements.push_back(hol.at(idx));
  for (auto idx : gens) out.generators.push_back(hol.at(idx));
  return out;
}

}  // namespace

std::vector<PermSubgroup> enumerate_regular_subgroups(u64 p, unsigned n, unsigned max_generators,
                                                      unsigned jobs) {
  const Modulus mod(p, n);
  if (static_cast<u128>(mod.value()) * mod.totient() > kOracleHolomorphLimit) {
    throw FeasibilityError("oracle needs |Hol| = p^n phi(p^n) <= " +
                           std::to_string(kOracleHolomorphLimit) + " (p=" + std::to_string(p) +
                           ", n=" + std::to_string(n) + ")");
  }
  if (max_generators < 1 || max_generators > 3) {
    throw std::invalid_argument("max_generators must be 1, 2 or 3");
  }
  const HolIndex hol(mod);
  const u64 m = mod.value();

  // Elements whose cyclic subgroup already collides can lie in no regular subgroup.
  std::vector<std::uint32_t> candidates;
  std::vector<std::vector<std::uint32_t>> cyclic;
  {
    std::vector<std::uint32_t> scratch(m);
    for (std::uint32_t idx = 0; idx < hol.size(); ++idx) {
      auto c = semiregular_closure(hol, {idx}, scratch);
      if (c.empty()) continue;
      candidates.push_back(idx);
      cyclic.push_back(std::move(c));
    }
  }

  using Found = std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
  const unsigned workers = detail::worker_count(jobs, candidates.size());
  std::vector<Found> found(workers);
  std::vector<std::vector<std::uint32_t>> scratch(workers, std::vector<std::uint32_t>(m));

  // Keeps the least generator list per subgroup so the output does not
  // depend on scheduling.
  auto keep = [](Found& into, std::vector<std::uint32_t> members, std::vector<std::uint32_t> gens) {
    auto [it, fresh] = into.try_emplace(std::move(members), gens);
    if (!fresh && gens < it->second) it->second = std::move(gens);
  };
  auto record = [&](unsigned w, std::vector<std::uint32_t> members, std::vector<std::uint32_t> gens) {
    if (members.size() == m) keep(found[w], std::move(members), std::move(gens));
  };

  detail::parallel_for(candidates.size(), workers, [&](unsigned w, std::size_t i) {
    record(w, cyclic[i], {candidates[i]});
    if (max_generators < 2) return;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (std::binary_search(cyclic[i].begin(), cyclic[i].end(), candidates[j])) continue;
      std::vector<std::uint32_t> gens{candidates[i], candidates[j]};
      auto pair = semiregular_closure(hol, gens, scratch[w]);
      if (pair.empty()) continue;
      if (max_generators >= 3) {
        for (std::size_t k = j + 1; k < candidates.size(); ++k) {
          if (std::binary_search(pair.begin(), pair.end(), candidates[k])) continue;
          std::vector<std::uint32_t> triple{candidates[i], candidates[j], candidates[k]};
          record(w, semiregular_closure(hol, triple, scratch[w]), triple);
        }
      }
      record(w, std::move(pair), std::move(gens));
    }
  });

  Found merged;
  for (auto& f : found) {
    for (auto& [members, gens] : f) keep(merged, members, gens);
  }
  std::vector<PermSubgroup> out;
  for (const auto& [members, gens] : merged) out.push_back(to_subgroup(hol, members, gens));
  return out;
}

bool mutually_normalize_perm(const PermSubgroup& N, const PermSubgroup& M) {
  if (N.p != M.p || N.n != M.n) throw ModulusMismatch("mutually_normalize_perm: different (p, n)");
  const Modulus mod(N.p, N.n);
  auto conj = [&](const AffineMap& by, const AffineMap& x) {
    return hol_mul(mod, hol_mul(mod, hol_inverse(mod, by), x), by);
  };
  for (const auto& a : N.generators) {
    for (const auto& b : M.generators) {
      if (!M.contains(conj(a, b)) || !N.contains(conj(b, a))) return false;
    }
  }
  return true;
}

GammaFunction reconstruct_gamma(const PermSubgroup& N) {
  if (!N.is_regular()) throw std::invalid_argument("reconstruct_gamma: subgroup is not regular");
  const Modulus mod(N.p, N.n);
  std::vector<u64> table(mod.value());
  for (const auto& x : N.elements) table[x.trans] = x.aut;
  return GammaFunction::from_table(mod, std::move(table));
}

PermSubgroup nu_image(const GammaFunction& gamma) {
  PermSubgroup out;
  out.p = gamma.modulus().prime();
  out.n = gamma.modulus().exponent();
  for (u64 g = 0; g < gamma.size(); ++g) out.elements.push_back({gamma.at(g), g});
  std::sort(out.elements.begin(), out.elements.end());
  out.generators = out.elements;
  return out;
}

GroupInvariants perm_invariants(const PermSubgroup& N) {
  const Modulus mod(N.p, N.n);
  GroupInvariants inv{N.p, N.n, true, 1, 0};
  const AffineMap one{1, 0};
  for (const auto& x : N.elements) {
    u64 order = 1;
    for (AffineMap y = x; !(y == one); y = hol_mul(mod, y, x)) ++order;
    inv.max_element_order = std::max(inv.max_element_order, order);
    if (order == 2) ++inv.involutions;
  }
  for (std::size_t i = 0; i < N.elements.size() && inv.abelian; ++i) {
    for (std::size_t j = i + 1; j < N.elements.size(); ++j) {
      if (!(hol_mul(mod, N.elements[i], N.elements[j]) == hol_mul(mod, N.elements[j], N.elements[i]))) {
        inv.abelian = false;
        break;
      }
    }
  }
  return inv;
}

bool is_normal_in_holomorph(const PermSubgroup& N) {
  const Modulus mod(N.p, N.n);
  for (u64 a : mod.units()) {
    for (u64 b = 0; b < mod.value(); ++b) {
      const AffineMap h{a, b};
      const AffineMap h_inv = hol_inverse(mod, h);
      for (const auto& g : N.generators) {
        if (!N.contains(hol_mul(mod, hol_mul(mod, h_inv, g), h))) return false;
      }
    }
  }
  return true;
}

NormalizingGraph oracle_graph(const std::vector<PermSubgroup>& subgroups, u64 p, unsigned n,
                              unsigned jobs) {
  std::map<std::vector<u64>, SubgroupLabel> by_table;
  for (const auto& e : full_catalog(p, n)) {
    by_table.emplace(std::vector<u64>(e.gamma.table().begin(), e.gamma.table().end()), e.label);
  }
  const Modulus mod(p, n);

  struct Matched {
    Vertex vertex;
    const PermSubgroup* group;
  };
  std::vector<Matched> matched;
  for (const auto& N : subgroups) {
    GammaFunction gamma = reconstruct_gamma(N);
    auto it = by_table.find(std::vector<u64>(gamma.table().begin(), gamma.table().end()));
    if (it == by_table.end()) {
      throw std::logic_error("oracle subgroup of order " + std::to_string(N.order()) +
                             " matches no catalog label");
    }
    const IsoClass iso = classify_invariants(perm_invariants(N));
    matched.push_back({Vertex{it->second, std::move(gamma), iso}, &N});
  }
  std::sort(matched.begin(), matched.end(),
            [](const Matched& a, const Matched& b) { return a.vertex.label < b.vertex.label; });
  for (std::size_t i = 1; i < matched.size(); ++i) {
    if (matched[i - 1].vertex.label == matched[i].vertex.label) {
      throw std::logic_error("two oracle subgroups share label " + matched[i].vertex.label.to_string());
    }
  }

  NormalizingGraph graph;
  graph.p = p;
  graph.n = n;
  graph.provenance = EdgeProvenance::Oracle;
  for (const auto& m : matched) graph.vertices.push_back(m.vertex);
  const std::size_t count = matched.size();
  std::vector<std::vector<char>> rows(count);
  detail::parallel_for(count, jobs, [&](unsigned, std::size_t i) {
    rows[i].assign(count, 0);
    for (std::size_t j = i + 1; j < count; ++j) {
      rows[i][j] = mutually_normalize_perm(*matched[i].group, *matched[j].group);
    }
  });
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (rows[i][j]) graph.edges.emplace(i, j);
    }
  }
  return graph;
}

NormalizingGraph oracle_graph(u64 p, unsigned n, unsigned jobs) {
  return oracle_graph(enumerate_regular_subgroups(p, n, 2, jobs), p, n, jobs);
}

CountRecord count_by_iso(const std::vector<PermSubgroup>& subgroups, u64 p, unsigned n) {
  CountRecord r = empty_count_record(p, n);
  for (const auto& N : subgroups) {
    ++r.by_class[classify_invariants(perm_invariants(N)).tag];
    ++r.total;
  }
  return r;
}

CountRecord count_by_iso(u64 p, unsigned n, unsigned jobs) {
  return count_by_iso(enumerate_regular_subgroups(p, n, 2, jobs), p, n);
}

}  // namespace holgraph
