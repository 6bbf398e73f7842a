// Exact arithmetic in Z/p^n and its unit group.
//
// Every residue is kept as its least nonnegative representative. Products go
// through 128-bit intermediates, so moduli up to 2^62 are safe.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace holgraph {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a (p, n, family) combination has no meaning for an operation.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a request exceeds the sizes the exhaustive algorithms accept.
class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(u64 value);

// The ambient cyclic group Z/p^n.
class Modulus {
 public:
  Modulus(u64 prime, unsigned exponent);

  u64 prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return n_; }
  u64 value() const noexcept { return m_; }
  // |Aut(Z/p^n)| = p^n - p^(n-1).
  u64 totient() const noexcept { return m_ - m_ / p_; }

  u64 reduce(u64 x) const noexcept { return x % m_; }
  u64 add(u64 x, u64 y) const noexcept {
    u64 s = x + y;  // both < 2^62
    return s >= m_ ? s - m_ : s;
  }
  u64 sub(u64 x, u64 y) const noexcept { return x >= y ? x - y : x + m_ - y; }
  u64 neg(u64 x) const noexcept { return x == 0 ? 0 : m_ - x; }
  u64 mul(u64 x, u64 y) const noexcept {
    return static_cast<u64>(static_cast<u128>(x) * y % m_);
  }
  u64 pow(u64 base, u64 e) const noexcept;
  bool is_unit(u64 x) const noexcept { return x % p_ != 0; }
  // Inverse of a unit via extended gcd; throws std::invalid_argument otherwise.
  u64 inverse(u64 unit) const;

  // Units in increasing order.
  std::vector<u64> units() const;

  std::string to_string() const;

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  u64 p_;
  unsigned n_;
  u64 m_;
};

// An element of Z/p^n.
class Residue {
 public:
  Residue(const Modulus& modulus, u64 value)
      : modulus_(modulus), value_(modulus.reduce(value)) {}

  u64 value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return modulus_; }

  Residue operator+(const Residue& other) const;
  Residue operator-(const Residue& other) const;
  Residue operator-() const { return {modulus_, modulus_.neg(value_)}; }

  friend bool operator==(const Residue& a, const Residue& b) noexcept {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  Modulus modulus_;
  u64 value_;
};

// The automorphism x -> a*x of Z/p^n, stored as the unit a.
class UnitAut {
 public:
  UnitAut(const Modulus& modulus, u64 unit);
  static UnitAut identity(const Modulus& modulus) { return {modulus, 1}; }

  u64 unit() const noexcept { return a_; }
  const Modulus& modulus() const noexcept { return modulus_; }

  UnitAut inverse() const { return {modulus_, modulus_.inverse(a_)}; }
  UnitAut pow(u64 e) const { return {modulus_, modulus_.pow(a_, e)}; }
  // Multiplicative order in Aut(Z/p^n).
  u64 order() const;

  friend bool operator==(const UnitAut& a, const UnitAut& b) noexcept {
    return a.modulus_ == b.modulus_ && a.a_ == b.a_;
  }

 private:
  Modulus modulus_;
  u64 a_;
};

Residue apply(const UnitAut& a, const Residue& x);
// Apply a first, then b. Aut(Z/p^n) is abelian so the order only matters
// for documentation.
UnitAut compose(const UnitAut& a, const UnitAut& b);

// sum_{i=0}^{t-1} a^i mod m, by binary doubling. No division is involved, so
// it is valid when a - 1 is a zero divisor.
Residue geometric_sum(const UnitAut& a, u64 t);
// Same quantity on raw values; m must be the modulus value.
u64 geometric_sum(const Modulus& modulus, u64 a, u64 t);

struct LemmaCounterexample {
  u64 u = 0;  // 0 when the lemma has no u parameter
  u64 k = 0;
};

struct LemmaResult {
  std::string name;
  bool passed = true;
  u64 cases = 0;
  std::optional<LemmaCounterexample> counterexample;
};

struct LemmaReport {
  u64 prime = 0;
  unsigned exponent = 0;
  std::vector<LemmaResult> lemmas;

  bool passed() const;
  std::string to_text() const;
};

// Exhaustively checks the arithmetic lemmas that fix circle-group orders:
//   p = 2 (n >= 4):
//     five_mod_1  (5^k-1)/2 = 0 mod 2^n      iff k = 2^(n-1),  1 <= k <= 2^(n-1)
//     five_mod_2  (5^(2^(n-2)+1)-1)/2 = 2^(n-1)+2 mod 2^n
//     five_mod_3  ((2^u+1)^k-1)/2^u = 0 mod 2^n iff k = 2^n, 2 <= u < n, 1 <= k <= 2^n
//   p odd (n >= 1):
//     puk_mod     ((p^u+1)^k-1)/p^u = 0 mod p^n iff k = p^n, 1 <= u < n, 1 <= k <= p^n
// Throws Unsupported for p = 2, n < 4, and FeasibilityError when p^n > kLemmaModulusLimit.
inline constexpr u64 kLemmaModulusLimit = u64{1} << 24;
LemmaReport verify_arith_lemmas(const Modulus& modulus);

}  // namespace holgraph
