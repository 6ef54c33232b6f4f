#pragma once

#include <cstdint>

#include "frobsat/error.hpp"

namespace frobsat {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a word-sized prime p. Elements are kept in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;  // p < 2^31, no wraparound
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff inv(Coeff a) const;

  /// Reduces an arbitrary signed integer into [0, p).
  Coeff from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_symmetric(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace frobsat
