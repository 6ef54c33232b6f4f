#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace frobsat {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with inline storage. Unused slots stay zero, so equality and
/// hashing never need to know how many variables the ring has.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  Exponent operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);

  bool is_one() const {
    for (auto e : exp_)
      if (e) return false;
    return true;
  }

  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i]) m |= 1u << i;
    return m;
  }

  long total_degree() const {
    long d = 0;
    for (auto e : exp_) d += e;
    return d;
  }

  long weighted_degree(std::span<const int> weights) const {
    long d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += static_cast<long>(exp_[i]) * weights[i];
    return d;
  }

  /// True iff this divides other.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  /// Throws Overflow when an exponent leaves the 16-bit range.
  Monomial operator*(const Monomial& o) const;
  /// Requires o to divide *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] - o.exp_[i]);
    return r;
  }
  Monomial pow(unsigned k) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = a.exp_[i] < b.exp_[i] ? a.exp_[i] : b.exp_[i];
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.exp_[i] && b.exp_[i]) return false;
    return true;
  }

  bool operator==(const Monomial&) const = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

  static Monomial variable(std::size_t i, unsigned e = 1) {
    Monomial m;
    m.set(i, e);
    return m;
  }

 private:
  std::array<Exponent, kMaxVars> exp_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace frobsat
