#include "holgraph/group_id.hpp"

#include <algorithm>
#include <string>

namespace holgraph {

std::string_view to_string(IsoTag tag) {
  switch (tag) {
    case IsoTag::Cyclic: return "Cyclic";
    case IsoTag::DirectProduct: return "DirectProduct";
    case IsoTag::Quaternion: return "Quaternion";
    case IsoTag::Dihedral: return "Dihedral";
    case IsoTag::Semidihedral: return "Semidihedral";
    case IsoTag::Modular: return "Modular";
    case IsoTag::OddSemidirect: return "OddSemidirect";
  }
  return "?";
}

std::optional<IsoTag> iso_tag_from_string(std::string_view name) {
  for (IsoTag tag : kAllIsoTags) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

bool iso_class_exists(IsoTag tag, u64 p, unsigned n) {
  switch (tag) {
    case IsoTag::Cyclic: return true;
    case IsoTag::DirectProduct: return n >= 2;
    case IsoTag::Quaternion:
    case IsoTag::Dihedral: return p == 2 && n >= 3;
    case IsoTag::Semidihedral:
    case IsoTag::Modular: return p == 2 && n >= 4;
    case IsoTag::OddSemidirect: return p != 2 && n >= 3;
  }
  return false;
}

u64 involution_count(IsoTag tag, unsigned n) {
  const u64 half = u64{1} << (n - 1);
  switch (tag) {
    case IsoTag::Cyclic: return 1;
    case IsoTag::DirectProduct: return 3;
    case IsoTag::Quaternion: return 1;
    case IsoTag::Dihedral: return half + 1;
    case IsoTag::Semidihedral: return half / 2 + 1;
    case IsoTag::Modular: return 3;
    case IsoTag::OddSemidirect: return 0;
  }
  return 0;
}

IsoClass classify_invariants(const GroupInvariants& inv) {
  u64 order = 1;
  for (unsigned i = 0; i < inv.n; ++i) order *= inv.p;
  const u64 maximal = order / inv.p;
  auto fail = [&](const char* why) {
    return Unclassifiable(std::string("unclassifiable circle group of order ") +
                          std::to_string(order) + ": " + why);
  };

  if (inv.max_element_order == order) return {IsoTag::Cyclic, order};
  if (inv.max_element_order != maximal) throw fail("no cyclic maximal subgroup");
  if (inv.abelian) return {IsoTag::DirectProduct, order};

  if (inv.p != 2) {
    if (inv.n < 3) throw fail("nonabelian group of order p^2");
    return {IsoTag::OddSemidirect, order};
  }
  if (inv.n < 3) throw fail("nonabelian group of order <= 4");
  // At order 8 only Q_8 and D_8 are nonabelian; the counts for SD and M
  // would collide with D_8 / each other there.
  for (IsoTag tag : {IsoTag::Quaternion, IsoTag::Dihedral, IsoTag::Semidihedral, IsoTag::Modular}) {
    if (iso_class_exists(tag, 2, inv.n) && involution_count(tag, inv.n) == inv.involutions) {
      return {tag, order};
    }
  }
  throw fail("involution count matches no type");
}

GroupInvariants circle_invariants(const GammaFunction& gamma) {
  const Modulus& mod = gamma.modulus();
  const u64 m = mod.value();
  GroupInvariants inv{mod.prime(), mod.exponent(), true, 1, 0};
  for (u64 g = 0; g < m; ++g) {
    const u64 ord = circle_order(gamma, g);
    inv.max_element_order = std::max(inv.max_element_order, ord);
    if (ord == 2) ++inv.involutions;
  }
  for (u64 x = 0; x < m && inv.abelian; ++x) {
    for (u64 y = x + 1; y < m; ++y) {
      if (circle_raw(gamma, x, y) != circle_raw(gamma, y, x)) {
        inv.abelian = false;
        break;
      }
    }
  }
  return inv;
}

IsoClass classify(const GammaFunction& gamma) {
  return classify_invariants(circle_invariants(gamma));
}

namespace {

std::vector<u64> circle_powers(const GammaFunction& gamma, u64 g) {
  std::vector<u64> out{0};
  for (u64 x = g; x != 0; x = circle_raw(gamma, x, g)) out.push_back(x);
  return out;
}

}  // namespace

u64 circle_span_size(const GammaFunction& gamma, const std::vector<Residue>& gens) {
  const u64 m = gamma.size();
  std::vector<char> in(m, 0);
  std::vector<u64> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const Residue& g : gens) {
      const u64 next = circle_raw(gamma, members[i], g.value());
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
      }
    }
  }
  return members.size();
}

std::vector<Residue> generators_witness(const GammaFunction& gamma) {
  const Modulus& mod = gamma.modulus();
  const u64 m = mod.value();
  std::vector<u64> orders(m);
  for (u64 g = 0; g < m; ++g) orders[g] = circle_order(gamma, g);
  const u64 top = *std::max_element(orders.begin(), orders.end());
  const u64 r = static_cast<u64>(std::find(orders.begin(), orders.end(), top) - orders.begin());
  if (top == m) return {Residue(mod, r)};

  std::vector<char> in_r(m, 0);
  for (u64 x : circle_powers(gamma, r)) in_r[x] = 1;
  u64 s = m;
  for (u64 g = 0; g < m; ++g) {
    if (!in_r[g] && (s == m || orders[g] < orders[s])) s = g;
  }
  if (s == m) throw Unclassifiable("generators_witness: <r> is the whole group but r is not cyclic");
  std::vector<Residue> gens{Residue(mod, r), Residue(mod, s)};
  if (circle_span_size(gamma, gens) != m) {
    throw Unclassifiable("generators_witness: witness does not generate the circle group");
  }
  return gens;
}

}  // namespace holgraph
