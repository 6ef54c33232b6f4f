#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobsat/ring.hpp"

namespace frobsat {

struct Term {
  Monomial mono;
  Coeff coeff;
  bool operator==(const Term&) const = default;
};

/// Sparse distributed polynomial. Terms are kept strictly descending under the
/// ring's order with nonzero coefficients, so the leading term is terms()[0].
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(PolyRingPtr ring, std::int64_t c);
  static Polynomial variable(PolyRingPtr ring, std::size_t i);
  static Polynomial monomial(PolyRingPtr ring, const Monomial& m, Coeff c = 1);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_homogeneous() const;
  /// Weighted degree when homogeneous and nonzero.
  std::optional<long> degree() const;
  long max_degree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  Polynomial monic() const;

  /// Same polynomial viewed in a ring with the same variables but another order.
  Polynomial in_ring(PolyRingPtr target) const;
  /// Sends variable i to variable index_map[i] of target.
  Polynomial map_variables(PolyRingPtr target, const std::vector<std::size_t>& index_map) const;

  /// this -= c * m * g, merging in place. g must live in the same order.
  void sub_scaled(const Polynomial& g, const Monomial& m, Coeff c);

  bool operator==(const Polynomial& o) const;

 private:
  void check_compatible(const Polynomial& o) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// f^n by repeated squaring.
Polynomial pow(const Polynomial& f, unsigned n);

/// True when q = p^e for some e >= 0.
bool is_power_of(std::uint64_t q, std::uint32_t p);

/// f^q for q a power of the characteristic; uses additivity of Frobenius so
/// the result is computed termwise. Throws InvalidQ otherwise.
Polynomial frobenius_pow(const Polynomial& f, std::uint64_t q);

std::map<long, Polynomial> homogeneous_components(const Polynomial& f);

/// Exact division; requires d to divide f. Throws InvalidArgument otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& d);

std::string to_string(const Polynomial& f);

/// Parses the polynomial text syntax: terms joined by + or -, each term an
/// optional decimal coefficient followed by variable powers separated by an
/// optional '*'. Whitespace is ignored.
Polynomial parse_polynomial(const std::string& text, const PolyRingPtr& ring);

}  // namespace frobsat
