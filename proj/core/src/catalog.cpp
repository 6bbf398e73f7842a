#include "holgraph/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace holgraph {

namespace {

constexpr Family kFamilies[] = {Family::G1, Family::G2, Family::G3, Family::G4, Family::G5,
                                Family::G6, Family::P,  Family::M,  Family::C,  Family::U};

u64 ipow(u64 base, unsigned e) {
  u64 r = 1;
  while (e--) r *= base;
  return r;
}

bool family_exists(u64 p, unsigned n, Family f) {
  if (p == 2) {
    if (n < 3) return false;
    switch (f) {
      case Family::G5:
      case Family::G6:
      case Family::M: return n >= 4;
      case Family::U: return false;
      default: return true;
    }
  }
  return f == Family::U && n >= 1;
}

// Number of k values in the reduced range.
u64 k_range(u64 p, unsigned n, Family f, unsigned u) {
  switch (f) {
    case Family::P:
    case Family::M: return u64{1} << (n - 2);
    case Family::C: return u >= n ? 1 : u64{1} << (n - u - 1);
    case Family::U: return u >= n ? 1 : ipow(p, n - u - 1);
    default: return 1;
  }
}

void require_exists(u64 p, unsigned n, Family f, unsigned u) {
  if (!family_exists(p, n, f)) {
    throw Unsupported("family " + std::string(to_string(f)) + " does not exist for p=" +
                      std::to_string(p) + " n=" + std::to_string(n));
  }
  if (f == Family::C && (u < 2 || u > n)) {
    throw Unsupported("family C needs 2 <= u <= n, got u=" + std::to_string(u));
  }
  if (f == Family::U && (u < 1 || u > n)) {
    throw Unsupported("family U needs 1 <= u <= n, got u=" + std::to_string(u));
  }
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::G3: return "G3";
    case Family::G4: return "G4";
    case Family::G5: return "G5";
    case Family::G6: return "G6";
    case Family::P: return "P";
    case Family::M: return "M";
    case Family::C: return "C";
    case Family::U: return "U";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : kFamilies) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

bool family_has_u(Family f) { return f == Family::C || f == Family::U; }
bool family_has_k(Family f) {
  return f == Family::P || f == Family::M || f == Family::C || f == Family::U;
}
bool family_has_c(Family f) { return f == Family::U; }

std::string SubgroupLabel::to_string() const {
  std::string out(holgraph::to_string(family));
  if (!family_has_k(family)) return out;
  out += '[';
  if (family_has_u(family)) out += std::to_string(u) + ',';
  out += std::to_string(k);
  if (family_has_c(family)) out += ',' + std::to_string(c);
  out += ']';
  return out;
}

SubgroupLabel SubgroupLabel::parse(std::string_view text, u64 p, unsigned n) {
  auto bad = [&] { return std::invalid_argument("malformed label '" + std::string(text) + "'"); };
  const auto bracket = text.find('[');
  const auto family = family_from_string(text.substr(0, bracket));
  if (!family) throw bad();
  SubgroupLabel label{p, n, *family, 0, 0, 0};
  if (!family_has_k(*family)) {
    if (bracket != std::string_view::npos) throw bad();
    return label;
  }
  if (bracket == std::string_view::npos || text.back() != ']') throw bad();
  std::vector<u64> fields;
  std::string_view body = text.substr(bracket + 1, text.size() - bracket - 2);
  while (true) {
    const auto comma = body.find(',');
    std::string_view piece = body.substr(0, comma);
    u64 value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty()) throw bad();
    fields.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  const std::size_t expected =
      1 + (family_has_u(*family) ? 1 : 0) + (family_has_c(*family) ? 1 : 0);
  if (fields.size() != expected) throw bad();
  std::size_t i = 0;
  if (family_has_u(*family)) label.u = static_cast<unsigned>(fields[i++]);
  label.k = fields[i++];
  if (family_has_c(*family)) label.c = fields[i++];
  return label;
}

SubgroupLabel make_label(u64 p, unsigned n, Family family, unsigned u, u64 k, u64 c) {
  return SubgroupLabel{p, n, family, u, k, c};
}

u64 conjugating_unit(const SubgroupLabel& l) {
  const u64 m = ipow(l.p, l.n);
  if (!family_has_k(l.family)) return 1 % m;
  if (l.p == 2) return (2 * (l.k % m) + 1) % m;
  return (l.k % m * l.p + l.c) % m;
}

u64 family_orbit_size(u64 p, unsigned n, Family family, unsigned u) {
  require_exists(p, n, family, family == Family::C || family == Family::U ? u : 0);
  if (family == Family::G5 || family == Family::G6) return 2;
  const u64 ks = k_range(p, n, family, u);
  if (family == Family::U && u < n) return ks * (p - 1);
  return ks;
}

bool is_canonical(const SubgroupLabel& l) {
  if (!family_exists(l.p, l.n, l.family)) return false;
  if (family_has_u(l.family)) {
    const unsigned lo = l.family == Family::C ? 2 : 1;
    if (l.u < lo || l.u > l.n) return false;
  } else if (l.u != 0) {
    return false;
  }
  if (!family_has_k(l.family)) return l.k == 0 && l.c == 0;
  if (l.k >= k_range(l.p, l.n, l.family, l.u)) return false;
  if (family_has_c(l.family)) {
    if (l.u == l.n) return l.c == 1;
    return l.c >= 1 && l.c < l.p;
  }
  return l.c == 0;
}

SubgroupLabel canonicalize(SubgroupLabel l) {
  require_exists(l.p, l.n, l.family, l.u);
  if (family_has_k(l.family)) l.k %= k_range(l.p, l.n, l.family, l.u);
  if (l.family == Family::U && l.u == l.n) {
    l.k = 0;
    l.c = 1;
  }
  if (!is_canonical(l)) throw NonCanonicalLabel("cannot canonicalize " + l.to_string());
  return l;
}

SubgroupLabel catalog_label(const SubgroupLabel& l) {
  if (l.p == 2 && l.family == Family::C) {
    if (l.u == l.n) return make_label(l.p, l.n, Family::G1);
    if (l.u + 1 == l.n) return make_label(l.p, l.n, Family::G2);
  }
  return l;
}

GammaFunction base_gamma(u64 p, unsigned n, Family family, unsigned u) {
  require_exists(p, n, family, family_has_u(family) ? u : 0);
  const Modulus mod(p, n);
  const u64 m = mod.value();
  if (p != 2) {
    const u64 scale = mod.reduce(mod.pow(p, u));
    return GammaFunction::from_rule(mod, [&](u64 x) { return mod.add(mod.mul(scale, x), 1); });
  }
  const u64 half = m / 2;
  const u64 quarter = m / 4;
  switch (family) {
    case Family::G1: return GammaFunction::trivial(mod);
    case Family::G2: return GammaFunction::from_rule(mod, [&](u64 x) { return mod.pow(half + 1, x); });
    case Family::G3: return GammaFunction::from_rule(mod, [&](u64 x) { return mod.pow(half - 1, x); });
    case Family::G4: return GammaFunction::from_rule(mod, [&](u64 x) { return mod.pow(m - 1, x); });
    case Family::G5: {
      const u64 cases[4] = {1, half - 1, half + 1, m - 1};
      return GammaFunction::from_rule(mod, [&](u64 x) { return cases[x % 4]; });
    }
    case Family::G6: {
      const u64 cases[4] = {1, m - 1, half + 1, half - 1};
      return GammaFunction::from_rule(mod, [&](u64 x) { return cases[x % 4]; });
    }
    case Family::P: return GammaFunction::from_rule(mod, [&](u64 x) { return mod.add(mod.mul(2, x), 1); });
    case Family::M:
      return GammaFunction::from_rule(mod, [&](u64 x) {
        return mod.add(mod.add(mod.mul(2, x), 1), x % 2 ? quarter : 0);
      });
    case Family::C: {
      const u64 scale = mod.pow(2, u);
      return GammaFunction::from_rule(mod, [&](u64 x) { return mod.add(mod.mul(scale, x), 1); });
    }
    case Family::U: break;
  }
  throw Unsupported("base_gamma: unknown family");
}

GammaFunction base_gamma(const SubgroupLabel& label) {
  return base_gamma(label.p, label.n, label.family, label.u);
}

GammaFunction labeled_gamma(const SubgroupLabel& label) {
  if (!is_canonical(label)) throw NonCanonicalLabel("non-canonical label " + label.to_string());
  GammaFunction base = base_gamma(label);
  const u64 w = conjugating_unit(label);
  if (w == 1) return base;
  // gamma^{sigma_w^{-1}}(x) = base(w x).
  return conjugate(base, UnitAut(base.modulus(), w).inverse());
}

u64 declared_period(const SubgroupLabel& l) {
  switch (l.family) {
    case Family::G1: return 1;
    case Family::G2:
    case Family::G3:
    case Family::G4: return 2;
    case Family::G5:
    case Family::G6: return 4;
    case Family::P:
    case Family::M: return u64{1} << (l.n - 1);
    case Family::C: return u64{1} << (l.n - l.u);
    case Family::U: return ipow(l.p, l.n - l.u);
  }
  return 0;
}

IsoTag declared_class(const SubgroupLabel& l) {
  switch (l.family) {
    case Family::G3: return IsoTag::Quaternion;
    case Family::G4: return IsoTag::Dihedral;
    case Family::G5:
    case Family::G6: return IsoTag::Semidihedral;
    case Family::P: return IsoTag::DirectProduct;
    case Family::M: return IsoTag::Modular;
    default: return IsoTag::Cyclic;
  }
}

bool declared_normal(const SubgroupLabel& l) {
  switch (l.family) {
    case Family::G1:
    case Family::G2:
    case Family::G3:
    case Family::G4: return true;
    case Family::C: return l.u + 1 >= l.n;
    case Family::U: return l.u == l.n;
    default: return false;
  }
}

std::vector<SubgroupLabel> catalog_labels(u64 p, unsigned n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if ((p == 2 && n < 3) || n < 1) {
    throw Unsupported("catalog needs n >= 3 for p = 2 and n >= 1 for odd p");
  }
  std::vector<SubgroupLabel> out;
  if (p == 2) {
    for (Family f : {Family::G1, Family::G2, Family::G3, Family::G4, Family::G5, Family::G6}) {
      if (family_exists(p, n, f)) out.push_back(make_label(p, n, f));
    }
    for (Family f : {Family::P, Family::M}) {
      if (!family_exists(p, n, f)) continue;
      for (u64 k = 0; k < k_range(p, n, f, 0); ++k) out.push_back(make_label(p, n, f, 0, k));
    }
    // C[n-1,0] and C[n,0] are G2 and G1.
    for (unsigned u = 2; u + 2 <= n; ++u) {
      for (u64 k = 0; k < k_range(p, n, Family::C, u); ++k) {
        out.push_back(make_label(p, n, Family::C, u, k));
      }
    }
  } else {
    for (unsigned u = 1; u < n; ++u) {
      for (u64 k = 0; k < k_range(p, n, Family::U, u); ++k) {
        for (u64 c = 1; c < p; ++c) out.push_back(make_label(p, n, Family::U, u, k, c));
      }
    }
    out.push_back(make_label(p, n, Family::U, n, 0, 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CatalogEntry> full_catalog(u64 p, unsigned n) {
  std::vector<SubgroupLabel> labels = catalog_labels(p, n);
  const Modulus mod(p, n);
  if (static_cast<u128>(labels.size()) * mod.value() > (u128{1} << 24)) {
    throw FeasibilityError("catalog for p=" + std::to_string(p) + " n=" + std::to_string(n) +
                           " exceeds the table budget");
  }
  std::vector<CatalogEntry> out;
  out.reserve(labels.size());
  for (const auto& label : labels) {
    out.push_back({label, labeled_gamma(label), IsoClass{declared_class(label), mod.value()}});
  }
  return out;
}

u64 CountRecord::count(IsoTag tag) const {
  auto it = by_class.find(tag);
  return it == by_class.end() ? 0 : it->second;
}

std::string CountRecord::to_text() const {
  std::ostringstream out;
  out << "p=" << p << " n=" << n << " total=" << total << '\n';
  for (IsoTag tag : kAllIsoTags) out << "  " << to_string(tag) << ' ' << count(tag) << '\n';
  return out.str();
}

CountRecord empty_count_record(u64 p, unsigned n) {
  CountRecord r;
  r.p = p;
  r.n = n;
  for (IsoTag tag : kAllIsoTags) r.by_class[tag] = 0;
  return r;
}

CountRecord expected_counts(u64 p, unsigned n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if ((p == 2 && n < 3) || n < 1) {
    throw Unsupported("counts need n >= 3 for p = 2 and n >= 1 for odd p");
  }
  CountRecord r = empty_count_record(p, n);
  if (p == 2) {
    const u64 quarter = u64{1} << (n - 2);
    r.by_class[IsoTag::Cyclic] = quarter;
    r.by_class[IsoTag::DirectProduct] = quarter;
    r.by_class[IsoTag::Quaternion] = 1;
    r.by_class[IsoTag::Dihedral] = 1;
    for (Family f : {Family::G1, Family::G2, Family::G3, Family::G4}) {
      r.orbits.push_back({f, 0, 1, declared_class(make_label(p, n, f))});
    }
    r.orbits.push_back({Family::P, 0, quarter, IsoTag::DirectProduct});
    if (n >= 4) {
      r.by_class[IsoTag::Modular] = quarter;
      r.by_class[IsoTag::Semidihedral] = 2;
      r.orbits.push_back({Family::G5, 0, 2, IsoTag::Semidihedral});
      r.orbits.push_back({Family::M, 0, quarter, IsoTag::Modular});
    }
    for (unsigned u = 2; u + 2 <= n; ++u) {
      r.orbits.push_back({Family::C, u, u64{1} << (n - u - 1), IsoTag::Cyclic});
    }
  } else {
    r.by_class[IsoTag::Cyclic] = ipow(p, n - 1);
    r.orbits.push_back({Family::U, n, 1, IsoTag::Cyclic});
    for (unsigned u = 1; u < n; ++u) {
      r.orbits.push_back({Family::U, u, ipow(p, n - u) - ipow(p, n - u - 1), IsoTag::Cyclic});
    }
  }
  for (const auto& [tag, count] : r.by_class) r.total += count;
  return r;
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    const auto& l = e.label;
    out << l.p << ' ' << l.n << ' ' << to_string(l.family) << ' ';
    out << (family_has_u(l.family) ? std::to_string(l.u) : "-") << ' ';
    out << (family_has_k(l.family) ? std::to_string(l.k) : "-") << ' ';
    out << (family_has_c(l.family) ? std::to_string(l.c) : "-") << ' ';
    out << e.gamma.period() << ' ' << to_string(e.iso.tag) << '\n';
  }
  return out.str();
}

}  // namespace holgraph
