#include "holgraph/gamma.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace holgraph {

GammaFunction::GammaFunction(const Modulus& modulus, std::vector<u64> table)
    : modulus_(modulus), table_(std::move(table)) {
  const u64 m = modulus_.value();
  // Periods are divisors of p^n, hence powers of p.
  for (u64 q = 1; q <= m; q *= modulus_.prime()) {
    bool periodic = true;
    for (u64 x = q; x < m && periodic; ++x) periodic = table_[x] == table_[x - q];
    if (periodic) {
      period_ = q;
      break;
    }
  }
}

GammaFunction GammaFunction::from_table(const Modulus& modulus, std::vector<u64> units) {
  if (units.size() != modulus.value()) {
    throw std::invalid_argument("gamma table must have p^n entries");
  }
  for (u64 a : units) {
    if (a >= modulus.value() || !modulus.is_unit(a)) {
      throw std::invalid_argument("gamma table entry " + std::to_string(a) + " is not a unit");
    }
  }
  return GammaFunction(modulus, std::move(units));
}

GammaFunction GammaFunction::trivial(const Modulus& modulus) {
  return GammaFunction(modulus, std::vector<u64>(modulus.value(), 1));
}

UnitAut GammaFunction::operator()(const Residue& x) const {
  if (!(x.modulus() == modulus_)) throw ModulusMismatch("gamma evaluated at foreign residue");
  return {modulus_, table_[x.value()]};
}

u64 GammaFunction::image_size() const {
  std::vector<u64> sorted(table_);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<u64>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Residue HolomorphElement::act(const Residue& x) const {
  return apply(aut, x) + trans;
}

HolomorphElement HolomorphElement::then(const HolomorphElement& next) const {
  return {compose(aut, next.aut), apply(next.aut, trans) + next.trans};
}

HolomorphElement HolomorphElement::inverse() const {
  UnitAut inv = aut.inverse();
  return {inv, -apply(inv, trans)};
}

std::optional<PairWitness> find_gfe_violation(const GammaFunction& gamma) {
  const Modulus& mod = gamma.modulus();
  const u64 m = mod.value();
  for (u64 h = 0; h < m; ++h) {
    const u64 gh = gamma.at(h);
    for (u64 g = 0; g < m; ++g) {
      if (gamma.at(mod.add(mod.mul(gh, g), h)) != mod.mul(gamma.at(g), gh)) {
        return PairWitness{g, h};
      }
    }
  }
  return std::nullopt;
}

bool validate_exhaustive(const GammaFunction& gamma) {
  return !find_gfe_violation(gamma).has_value();
}

bool validate_sampled(const GammaFunction& gamma, u64 samples, u64 seed) {
  const Modulus& mod = gamma.modulus();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> pick(0, mod.value() - 1);
  if (gamma.at(0) != 1) return false;
  for (u64 i = 0; i < samples; ++i) {
    u64 g = pick(rng);
    u64 h = pick(rng);
    if (gamma.at(circle_raw(gamma, g, h)) != mod.mul(gamma.at(g), gamma.at(h))) return false;
  }
  return true;
}

bool validate(const GammaFunction& gamma) {
  return gamma.size() <= kExhaustiveValidationLimit ? validate_exhaustive(gamma)
                                                     : validate_sampled(gamma);
}

Residue circle(const GammaFunction& gamma, const Residue& g, const Residue& h) {
  if (!(g.modulus() == gamma.modulus()) || !(h.modulus() == gamma.modulus())) {
    throw ModulusMismatch("circle: residues from a different modulus");
  }
  return {gamma.modulus(), circle_raw(gamma, g.value(), h.value())};
}

u64 circle_order(const GammaFunction& gamma, u64 g) {
  const u64 m = gamma.size();
  u64 x = g;
  u64 t = 1;
  while (x != 0) {
    x = circle_raw(gamma, x, g);
    if (++t > m) throw std::logic_error("circle_order: not a gamma function");
  }
  return t;
}

u64 circle_order(const GammaFunction& gamma, const Residue& g) {
  if (!(g.modulus() == gamma.modulus())) throw ModulusMismatch("circle_order");
  return circle_order(gamma, g.value());
}

u64 circle_inverse_raw(const GammaFunction& gamma, u64 g) {
  // g o y = 0  <=>  gamma(y) g = -y; gamma(g^-1) = gamma(g)^-1.
  const Modulus& mod = gamma.modulus();
  u64 inv = mod.inverse(gamma.at(g));
  return mod.neg(mod.mul(inv, g));
}

GammaFunction conjugate(const GammaFunction& gamma, const UnitAut& alpha) {
  const Modulus& mod = gamma.modulus();
  if (!(alpha.modulus() == mod)) throw ModulusMismatch("conjugate: automorphism modulus");
  const u64 inv = mod.inverse(alpha.unit());
  return GammaFunction::from_rule(mod, [&](u64 g) { return gamma.at(mod.mul(inv, g)); });
}

GammaFunction inversion_conjugate(const GammaFunction& gamma) {
  const Modulus& mod = gamma.modulus();
  return GammaFunction::from_rule(mod, [&](u64 g) { return gamma.at(mod.neg(g)); });
}

namespace {

bool stabilizes(const GammaFunction& gamma, u64 w) {
  const Modulus& mod = gamma.modulus();
  for (u64 x = 0; x < gamma.period(); ++x) {
    if (gamma.at(mod.mul(w, x)) != gamma.at(x)) return false;
  }
  return true;
}

}  // namespace

u64 stabilizer_size(const GammaFunction& gamma) {
  u64 count = 0;
  for (u64 w : gamma.modulus().units()) count += stabilizes(gamma, w) ? 1 : 0;
  return count;
}

u64 orbit_size(const GammaFunction& gamma) {
  return gamma.modulus().totient() / stabilizer_size(gamma);
}

std::vector<GammaFunction> conjugation_orbit(const GammaFunction& gamma) {
  std::set<GammaFunction> seen;
  for (u64 w : gamma.modulus().units()) seen.insert(conjugate(gamma, UnitAut(gamma.modulus(), w)));
  return {seen.begin(), seen.end()};
}

bool is_homomorphism(const GammaFunction& gamma) {
  const Modulus& mod = gamma.modulus();
  const u64 m = mod.value();
  for (u64 x = 0; x < m; ++x) {
    for (u64 y = 0; y < m; ++y) {
      if (gamma.at(mod.add(x, y)) != mod.mul(gamma.at(x), gamma.at(y))) return false;
    }
  }
  return true;
}

bool is_antihomomorphism(const GammaFunction& gamma) {
  const Modulus& mod = gamma.modulus();
  const u64 m = mod.value();
  for (u64 x = 0; x < m; ++x) {
    for (u64 y = 0; y < m; ++y) {
      if (gamma.at(mod.add(x, y)) != mod.mul(gamma.at(y), gamma.at(x))) return false;
    }
  }
  return true;
}

bool is_aut_equivariant(const GammaFunction& gamma) {
  for (u64 w : gamma.modulus().units()) {
    if (!stabilizes(gamma, w)) return false;
  }
  return true;
}

bool kills_commutators(const GammaFunction& gamma) {
  const Modulus& mod = gamma.modulus();
  std::vector<u64> image(gamma.table().begin(), gamma.table().end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  for (u64 a : image) {
    const u64 a_minus_1 = mod.sub(a, 1);
    for (u64 x = 0; x < mod.value(); ++x) {
      if (gamma.at(mod.mul(a_minus_1, x)) != 1) return false;
    }
  }
  return true;
}

bool verify_skew_brace(const GammaFunction& gamma) {
  const Modulus& mod = gamma.modulus();
  const u64 m = mod.value();
  for (u64 z = 0; z < m; ++z) {
    for (u64 x = 0; x < m; ++x) {
      const u64 xz = circle_raw(gamma, x, z);
      for (u64 y = 0; y < m; ++y) {
        const u64 lhs = circle_raw(gamma, mod.add(x, y), z);
        const u64 rhs = mod.add(mod.sub(xz, z), circle_raw(gamma, y, z));
        if (lhs != rhs) return false;
        if (circle_raw(gamma, circle_raw(gamma, y, x), z) != circle_raw(gamma, y, xz)) return false;
      }
    }
  }
  return true;
}

HolomorphElement nu(const GammaFunction& gamma, const Residue& g) {
  if (!(g.modulus() == gamma.modulus())) throw ModulusMismatch("nu");
  return {gamma(g), g};
}

}  // namespace holgraph
