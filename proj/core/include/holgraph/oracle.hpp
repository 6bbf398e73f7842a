// Brute-force enumeration of the regular subgroups of Hol(Z/p^n), working on
// affine maps directly and using no gamma-function theory.

#pragma once

#include <compare>
#include <vector>

#include "holgraph/catalog.hpp"
#include "holgraph/normgraph.hpp"

namespace holgraph {

// The affine map x -> aut*x + trans, as raw residues.
struct AffineMap {
  u64 aut = 1;
  u64 trans = 0;

  friend auto operator<=>(const AffineMap&, const AffineMap&) = default;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// Left factor first: x -> (x a1 + b1) a2 + b2.
AffineMap hol_mul(const Modulus& mod, const AffineMap& x, const AffineMap& y);
AffineMap hol_inverse(const Modulus& mod, const AffineMap& x);

struct PermSubgroup {
  u64 p = 2;
  unsigned n = 1;
  std::vector<AffineMap> elements;    // sorted
  std::vector<AffineMap> generators;  // generates `elements`

  u64 order() const { return elements.size(); }
  bool contains(const AffineMap& x) const;
  // Closed under products and inverses, contains the identity.
  bool is_subgroup() const;
  // The orbit map x -> 0^x is a bijection onto Z/p^n.
  bool is_regular() const;

  friend bool operator==(const PermSubgroup& a, const PermSubgroup& b) {
    return a.p == b.p && a.n == b.n && a.elements == b.elements;
  }
};

// Largest |Hol| = p^n phi(p^n) accepted by the enumeration.
inline constexpr u64 kOracleHolomorphLimit = 4096;

// All regular subgroups, found by closing every generator set of size up to
// max_generators (2 is enough; 3 exists as a cross-check). Sorted by element
// list. Throws FeasibilityError beyond the bound.
std::vector<PermSubgroup> enumerate_regular_subgroups(u64 p, unsigned n, unsigned max_generators = 2,
                                                      unsigned jobs = 0);

// For all generators a of N and b of M: a^-1 b a in M and b^-1 a b in N.
bool mutually_normalize_perm(const PermSubgroup& N, const PermSubgroup& M);

// gamma(b) = a for the unique element (a, b) of N moving 0 to b.
GammaFunction reconstruct_gamma(const PermSubgroup& N);
// {(gamma(g), g)} as a subgroup.
PermSubgroup nu_image(const GammaFunction& gamma);

// Invariants of N computed from the affine composition law.
GroupInvariants perm_invariants(const PermSubgroup& N);
// Conjugation by every affine map keeps N (normal in Hol).
bool is_normal_in_holomorph(const PermSubgroup& N);

// Graph over the oracle subgroups, each matched to its catalog label by
// table equality. Throws std::logic_error if a subgroup matches no label.
NormalizingGraph oracle_graph(u64 p, unsigned n, unsigned jobs = 0);
NormalizingGraph oracle_graph(const std::vector<PermSubgroup>& subgroups, u64 p, unsigned n,
                              unsigned jobs = 0);

CountRecord count_by_iso(u64 p, unsigned n, unsigned jobs = 0);
CountRecord count_by_iso(const std::vector<PermSubgroup>& subgroups, u64 p, unsigned n);

}  // namespace holgraph
