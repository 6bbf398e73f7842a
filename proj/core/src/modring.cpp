#include "holgraph/modring.hpp"

#include <bit>
#include <sstream>

namespace holgraph {

bool is_prime(u64 value) {
  if (value < 2) return false;
  for (u64 d = 2; d <= value / d; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(u64 prime, unsigned exponent) : p_(prime), n_(exponent), m_(1) {
  if (!is_prime(prime)) {
    throw std::invalid_argument("modulus base " + std::to_string(prime) + " is not prime");
  }
  if (exponent < 1) throw std::invalid_argument("modulus exponent must be >= 1");
  for (unsigned i = 0; i < exponent; ++i) {
    if (m_ > (u64{1} << 62) / p_) {
      throw std::invalid_argument("p^n exceeds 2^62");
    }
    m_ *= p_;
  }
}

u64 Modulus::pow(u64 base, u64 e) const noexcept {
  u64 result = 1 % m_;
  base %= m_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

u64 Modulus::inverse(u64 unit) const {
  unit %= m_;
  if (!is_unit(unit)) {
    throw std::invalid_argument(std::to_string(unit) + " is not a unit mod " + to_string());
  }
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 r0 = m_, r1 = unit, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  __int128 inv = s0 % static_cast<__int128>(m_);
  if (inv < 0) inv += m_;
  return static_cast<u64>(inv);
}

std::vector<u64> Modulus::units() const {
  std::vector<u64> out;
  out.reserve(totient());
  for (u64 a = 1; a < m_; ++a) {
    if (is_unit(a)) out.push_back(a);
  }
  if (m_ == 1) out.push_back(0);
  return out;
}

std::string Modulus::to_string() const {
  return std::to_string(p_) + "^" + std::to_string(n_);
}

namespace {

void require_same(const Modulus& a, const Modulus& b) {
  if (!(a == b)) {
    throw ModulusMismatch("modulus mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

Residue Residue::operator+(const Residue& other) const {
  require_same(modulus_, other.modulus_);
  return {modulus_, modulus_.add(value_, other.value_)};
}

Residue Residue::operator-(const Residue& other) const {
  require_same(modulus_, other.modulus_);
  return {modulus_, modulus_.sub(value_, other.value_)};
}

UnitAut::UnitAut(const Modulus& modulus, u64 unit) : modulus_(modulus), a_(modulus.reduce(unit)) {
  if (!modulus_.is_unit(a_)) {
    throw std::invalid_argument(std::to_string(unit) + " is not a unit mod " + modulus_.to_string());
  }
}

u64 UnitAut::order() const {
  // The order divides phi(p^n) = p^(n-1) (p-1).
  u64 x = a_;
  u64 k = 1;
  while (x != 1) {
    x = modulus_.mul(x, a_);
    ++k;
  }
  return k;
}

Residue apply(const UnitAut& a, const Residue& x) {
  require_same(a.modulus(), x.modulus());
  return {x.modulus(), x.modulus().mul(a.unit(), x.value())};
}

UnitAut compose(const UnitAut& a, const UnitAut& b) {
  require_same(a.modulus(), b.modulus());
  return {a.modulus(), a.modulus().mul(a.unit(), b.unit())};
}

u64 geometric_sum(const Modulus& mod, u64 a, u64 t) {
  // Walk the bits of t from the top, keeping S = sum_{i<s} a^i and P = a^s.
  //   S(2s)   = S(s) (1 + a^s)
  //   S(s+1)  = S(s) + a^s
  u64 sum = 0;
  u64 power = 1;
  a = mod.reduce(a);
  for (int bit = 63 - std::countl_zero(t | 1); bit >= 0; --bit) {
    sum = mod.mul(sum, mod.add(1, power));
    power = mod.mul(power, power);
    if ((t >> bit) & 1) {
      sum = mod.add(sum, power);
      power = mod.mul(power, a);
    }
  }
  return sum;
}

Residue geometric_sum(const UnitAut& a, u64 t) {
  return {a.modulus(), geometric_sum(a.modulus(), a.unit(), t)};
}

bool LemmaReport::passed() const {
  for (const auto& l : lemmas) {
    if (!l.passed) return false;
  }
  return true;
}

std::string LemmaReport::to_text() const {
  std::ostringstream out;
  for (const auto& l : lemmas) {
    out << "p=" << prime << " n=" << exponent << ' ' << l.name << ' '
        << (l.passed ? "PASS" : "FAIL") << " cases=" << l.cases;
    if (l.counterexample) {
      out << " counterexample u=" << l.counterexample->u << " k=" << l.counterexample->k;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// For a = base (unit) scans k = 1..k_max with the running sum S_k = sum_{i<k} a^i
// scaled by `scale`, and checks  scale*S_k == 0 (mod m)  <=>  k == k_zero.
void scan_zero_iff(const Modulus& mod, u64 base, u64 scale, u64 k_max, u64 k_zero, u64 u,
                   LemmaResult& result) {
  u64 sum = 0;
  u64 power = 1;
  for (u64 k = 1; k <= k_max; ++k) {
    sum = mod.add(sum, power);
    power = mod.mul(power, base);
    bool zero = mod.mul(sum, scale) == 0;
    ++result.cases;
    if (zero != (k == k_zero)) {
      result.passed = false;
      result.counterexample = LemmaCounterexample{u, k};
      return;
    }
  }
}

}  // namespace

LemmaReport verify_arith_lemmas(const Modulus& mod) {
  const u64 p = mod.prime();
  const unsigned n = mod.exponent();
  const u64 m = mod.value();
  if (m > kLemmaModulusLimit) {
    throw FeasibilityError("verify_arith_lemmas: p^n = " + std::to_string(m) + " exceeds 2^24");
  }
  LemmaReport report{p, n, {}};

  if (p == 2) {
    if (n < 4) throw Unsupported("the p = 2 arithmetic lemmas require n >= 4");
    // (5^k - 1)/2 = 2 * sum_{i<k} 5^i.
    LemmaResult one{"five_mod_1", true, 0, std::nullopt};
    scan_zero_iff(mod, 5, 2, m / 2, m / 2, 0, one);
    report.lemmas.push_back(one);

    LemmaResult two{"five_mod_2", true, 1, std::nullopt};
    const u64 k = (m >> 2) + 1;
    if (mod.mul(2, geometric_sum(mod, 5, k)) != mod.add(m / 2, 2)) {
      two.passed = false;
      two.counterexample = LemmaCounterexample{0, k};
    }
    report.lemmas.push_back(two);

    // ((2^u+1)^k - 1)/2^u = sum_{i<k} (2^u+1)^i.
    LemmaResult three{"five_mod_3", true, 0, std::nullopt};
    for (unsigned u = 2; u < n && three.passed; ++u) {
      scan_zero_iff(mod, (u64{1} << u) + 1, 1, m, m, u, three);
    }
    report.lemmas.push_back(three);
  } else {
    LemmaResult puk{"puk_mod", true, 0, std::nullopt};
    u64 pu = 1;
    for (unsigned u = 1; u < n && puk.passed; ++u) {
      pu *= p;
      scan_zero_iff(mod, pu + 1, 1, m, m, u, puk);
    }
    report.lemmas.push_back(puk);
  }
  return report;
}

}  // namespace holgraph
