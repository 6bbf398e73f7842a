// The explicit gamma-function families on Z/p^n and their conjugation orbits.
//
// p = 2 (n >= 3):
//   G1  x -> sigma_1                      G2  x -> sigma_{2^(n-1)+1}^x
//   G3  x -> sigma_{2^(n-1)-1}^x          G4  x -> sigma_{2^n-1}^x
//   G5, G6  four-case tables on x mod 4   (n >= 4)
//   P   x -> sigma_{2x+1}                 M   two-case table on x mod 2 (n >= 4)
//   C_u x -> sigma_{2^u x + 1},  2 <= u <= n
// p odd (n >= 1):
//   U_u x -> sigma_{p^u x + 1},  1 <= u <= n
//
// A label with parameter k (and c) denotes the conjugate of the base function
// under sigma_{2k+1}^{-1} (sigma_{kp+c}^{-1} for odd p), i.e. the table
// x -> base((2k+1) x).

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holgraph/gamma.hpp"
#include "holgraph/group_id.hpp"

namespace holgraph {

enum class Family { G1, G2, G3, G4, G5, G6, P, M, C, U };

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);
bool family_has_u(Family family);
bool family_has_k(Family family);
bool family_has_c(Family family);

class NonCanonicalLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SubgroupLabel {
  u64 p = 2;
  unsigned n = 3;
  Family family = Family::G1;
  unsigned u = 0;  // C and U only
  u64 k = 0;       // P, M, C and U
  u64 c = 0;       // U only

  // "G1", "P[k]", "M[k]", "C[u,k]", "U[u,k,c]".
  std::string to_string() const;
  // Inverse of to_string for the given (p, n); throws std::invalid_argument.
  static SubgroupLabel parse(std::string_view text, u64 p, unsigned n);

  friend auto operator<=>(const SubgroupLabel&, const SubgroupLabel&) = default;
  friend bool operator==(const SubgroupLabel&, const SubgroupLabel&) = default;
};

SubgroupLabel make_label(u64 p, unsigned n, Family family, unsigned u = 0, u64 k = 0, u64 c = 0);

// The unit w such that the label's table is x -> base(w x).
u64 conjugating_unit(const SubgroupLabel& label);
// Number of distinct k (or (k, c)) values in the family's conjugation orbit.
u64 family_orbit_size(u64 p, unsigned n, Family family, unsigned u = 0);
// True when k (and c) lie in the reduced range for the family's orbit.
bool is_canonical(const SubgroupLabel& label);
// Reduces k modulo the orbit period (c is left alone); throws Unsupported for
// families that do not exist at (p, n).
SubgroupLabel canonicalize(SubgroupLabel label);
// Maps C[n,0] -> G1 and C[n-1,0] -> G2 (p = 2), the catalog's names for
// those tables; other labels are returned unchanged.
SubgroupLabel catalog_label(const SubgroupLabel& label);

// Unconjugated family member (k and c ignored). Throws Unsupported for
// combinations that do not exist at (p, n).
GammaFunction base_gamma(u64 p, unsigned n, Family family, unsigned u = 0);
GammaFunction base_gamma(const SubgroupLabel& label);
// Throws NonCanonicalLabel for labels outside the reduced range.
GammaFunction labeled_gamma(const SubgroupLabel& label);

// Declared column data for a family.
u64 declared_period(const SubgroupLabel& label);
IsoTag declared_class(const SubgroupLabel& label);
bool declared_normal(const SubgroupLabel& label);

struct CatalogEntry {
  SubgroupLabel label;
  GammaFunction gamma;
  IsoClass iso;
};

// Sorted by label. Supported: p = 2 with n >= 3, odd p with n >= 1. Tables
// are materialised, so entries * p^n is capped at 2^24 (FeasibilityError).
std::vector<CatalogEntry> full_catalog(u64 p, unsigned n);
// Labels only; no table construction.
std::vector<SubgroupLabel> catalog_labels(u64 p, unsigned n);

struct OrbitCount {
  Family family;
  unsigned u = 0;
  u64 orbit_size = 1;
  IsoTag iso = IsoTag::Cyclic;
};

struct CountRecord {
  u64 p = 2;
  unsigned n = 3;
  std::map<IsoTag, u64> by_class;  // every tag present, zero if absent
  u64 total = 0;
  std::vector<OrbitCount> orbits;  // empty for records built from data

  u64 count(IsoTag tag) const;
  std::string to_text() const;
  friend bool operator==(const CountRecord& a, const CountRecord& b) {
    return a.p == b.p && a.n == b.n && a.by_class == b.by_class && a.total == b.total;
  }
};

CountRecord empty_count_record(u64 p, unsigned n);
// Closed-form counts per type and per conjugation orbit.
CountRecord expected_counts(u64 p, unsigned n);

// One line per vertex: `p n family u k c period isoclass`, '-' for fields the
// family does not carry.
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

}  // namespace holgraph
