// Isomorphism type of a group of order p^n with a cyclic maximal subgroup.
//
// For p = 2 there are six types, for odd p three. Every circle group (G, o)
// of a gamma function on Z/p^n lands in one of them, so a handful of
// invariants is enough to tell them apart: commutativity, the largest element
// order and, for nonabelian 2-groups, the number of involutions.

#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "holgraph/gamma.hpp"

namespace holgraph {

enum class IsoTag {
  Cyclic,
  DirectProduct,   // C_p x C_{p^(n-1)}
  Quaternion,      // Q_{2^n}
  Dihedral,        // D_{2^n}
  Semidihedral,    // SD_{2^n}
  Modular,         // M_{2^n}
  OddSemidirect,   // C_p x| C_{p^(n-1)}, p odd
};

inline constexpr IsoTag kAllIsoTags[] = {IsoTag::Cyclic,       IsoTag::DirectProduct,
                                         IsoTag::Quaternion,   IsoTag::Dihedral,
                                         IsoTag::Semidihedral, IsoTag::Modular,
                                         IsoTag::OddSemidirect};

std::string_view to_string(IsoTag tag);
std::optional<IsoTag> iso_tag_from_string(std::string_view name);

struct IsoClass {
  IsoTag tag = IsoTag::Cyclic;
  u64 order = 1;

  friend bool operator==(const IsoClass&, const IsoClass&) = default;
};

// Whether a group of this type exists with order p^n.
bool iso_class_exists(IsoTag tag, u64 p, unsigned n);

class Unclassifiable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct GroupInvariants {
  u64 p = 2;
  unsigned n = 1;
  bool abelian = true;
  u64 max_element_order = 1;
  u64 involutions = 0;
};

// Number of elements of order 2 in the given type (p = 2).
u64 involution_count(IsoTag tag, unsigned n);

// Throws Unclassifiable when the invariants match no type.
IsoClass classify_invariants(const GroupInvariants& inv);

GroupInvariants circle_invariants(const GammaFunction& gamma);
IsoClass classify(const GammaFunction& gamma);

// Elements generating (G, o): {g} for a cyclic circle group, otherwise
// {r, s} with r the least element of maximal order and s the least element of
// minimal order outside <r>.
std::vector<Residue> generators_witness(const GammaFunction& gamma);

// Size of the circle subgroup generated by `gens`.
u64 circle_span_size(const GammaFunction& gamma, const std::vector<Residue>& gens);

}  // namespace holgraph
