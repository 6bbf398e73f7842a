// Gamma functions on a cyclic p-group G = Z/p^n.
//
// A gamma function is a map G -> Aut(G) satisfying
//     gamma(gamma(h)(g) + h) = gamma(g) gamma(h)      for all g, h.
// It determines the regular subgroup { nu(g) = (gamma(g), g) } of Hol(G), and
// the transported group law  g o h = gamma(h)(g) + h  on G.
//
// Holomorph elements are affine maps x -> a*x + b written (a, b). Products
// apply the left factor first:  (a1, b1)(a2, b2) = (a1 a2, a2 b1 + b2).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "holgraph/modring.hpp"

namespace holgraph {

class GammaFunction {
 public:
  // `units[x]` is the unit a with gamma(x) = sigma_a. Size must be p^n and
  // every entry a unit; throws std::invalid_argument otherwise.
  static GammaFunction from_table(const Modulus& modulus, std::vector<u64> units);

  template <typename Rule>
  static GammaFunction from_rule(const Modulus& modulus, Rule&& rule) {
    std::vector<u64> units(modulus.value());
    for (u64 x = 0; x < modulus.value(); ++x) units[x] = modulus.reduce(rule(x));
    return from_table(modulus, std::move(units));
  }

  static GammaFunction trivial(const Modulus& modulus);

  const Modulus& modulus() const noexcept { return modulus_; }
  u64 size() const noexcept { return modulus_.value(); }
  // Raw unit gamma(x) for a raw residue x < p^n.
  u64 at(u64 x) const noexcept { return table_[x]; }
  UnitAut operator()(const Residue& x) const;
  std::span<const u64> table() const noexcept { return table_; }

  // Least q dividing p^n such that the table only depends on x mod q.
  u64 period() const noexcept { return period_; }
  // Number of distinct units in the table, |gamma(G)|.
  u64 image_size() const;

  friend bool operator==(const GammaFunction& a, const GammaFunction& b) noexcept {
    return a.modulus_ == b.modulus_ && a.table_ == b.table_;
  }
  friend bool operator<(const GammaFunction& a, const GammaFunction& b) noexcept {
    return a.table_ < b.table_;
  }

 private:
  GammaFunction(const Modulus& modulus, std::vector<u64> table);

  Modulus modulus_;
  std::vector<u64> table_;
  u64 period_ = 1;
};

struct HolomorphElement {
  UnitAut aut;
  Residue trans;

  static HolomorphElement identity(const Modulus& modulus) {
    return {UnitAut::identity(modulus), Residue(modulus, 0)};
  }
  Residue act(const Residue& x) const;
  HolomorphElement then(const HolomorphElement& next) const;
  HolomorphElement inverse() const;

  friend bool operator==(const HolomorphElement& a, const HolomorphElement& b) noexcept {
    return a.aut == b.aut && a.trans == b.trans;
  }
};

struct PairWitness {
  u64 g = 0;
  u64 h = 0;
};

// Exhaustive check of the functional equation; O(m^2).
bool validate_exhaustive(const GammaFunction& gamma);
std::optional<PairWitness> find_gfe_violation(const GammaFunction& gamma);
// Checks `samples` pseudo-random pairs drawn from a fixed seed.
bool validate_sampled(const GammaFunction& gamma, u64 samples = 10'000, u64 seed = 0x5eed);
inline constexpr u64 kExhaustiveValidationLimit = 4096;
// Exhaustive for p^n <= 4096, sampled above.
bool validate(const GammaFunction& gamma);

// Raw circle product on residues < p^n.
inline u64 circle_raw(const GammaFunction& gamma, u64 g, u64 h) noexcept {
  return gamma.modulus().add(gamma.modulus().mul(gamma.at(h), g), h);
}
Residue circle(const GammaFunction& gamma, const Residue& g, const Residue& h);
// Least t >= 1 with g^{o t} = 0.
u64 circle_order(const GammaFunction& gamma, const Residue& g);
u64 circle_order(const GammaFunction& gamma, u64 g);
// Circle inverse of g.
u64 circle_inverse_raw(const GammaFunction& gamma, u64 g);

// gamma^alpha(g) = gamma(alpha^{-1} g); the gamma function of N^alpha.
GammaFunction conjugate(const GammaFunction& gamma, const UnitAut& alpha);
// gamma_bar(g) = gamma(-g); the gamma function of N^inv.
GammaFunction inversion_conjugate(const GammaFunction& gamma);

// Number of units w with gamma(w x) = gamma(x) for all x.
u64 stabilizer_size(const GammaFunction& gamma);
// phi(p^n) / stabilizer_size.
u64 orbit_size(const GammaFunction& gamma);
// All distinct conjugates gamma^alpha, sorted by table.
std::vector<GammaFunction> conjugation_orbit(const GammaFunction& gamma);

// gamma(x + y) = gamma(x) gamma(y).
bool is_homomorphism(const GammaFunction& gamma);
// gamma(x + y) = gamma(y) gamma(x); bi-skew brace / normalized by rho(G).
bool is_antihomomorphism(const GammaFunction& gamma);
// gamma(a x) = gamma(x) for every unit a; regular subgroup normal in Hol(G).
bool is_aut_equivariant(const GammaFunction& gamma);
// gamma([x, gamma(y)]) = id for all x, y, where [x, sigma_a] = (a - 1) x.
bool kills_commutators(const GammaFunction& gamma);

// o is associative and (x + y) o z = (x o z) - z + (y o z) for all x, y, z; O(m^3).
bool verify_skew_brace(const GammaFunction& gamma);

HolomorphElement nu(const GammaFunction& gamma, const Residue& g);

}  // namespace holgraph
