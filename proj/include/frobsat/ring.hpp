#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobsat/field.hpp"
#include "frobsat/monomial.hpp"

namespace frobsat {

/// grevlex and lex use the ring weights; block(k) compares the first k
/// variables by graded reverse lex, then the rest. Inside block orders a zero
/// weight counts as one so that an auxiliary weight-0 variable is still
/// eliminated.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder eliminate(std::size_t k) { return {Kind::Block, k}; }

  bool operator==(const MonomialOrder&) const = default;
};

std::string to_string(const MonomialOrder& order);

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Weighted polynomial ring S = F_p[x_1..x_n] together with the active
/// monomial order. Immutable; shared through PolyRingPtr.
class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::string> names, std::vector<int> weights,
           MonomialOrder order = MonomialOrder::grevlex());

  static PolyRingPtr make(std::uint32_t p, std::vector<std::string> names,
                          std::vector<int> weights = {},
                          MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }

  long degree(const Monomial& m) const { return m.weighted_degree(weights_); }

  /// Three-way comparison under the active order: negative, zero, positive.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Same characteristic, variable names and weights (orders may differ).
  bool same_variables(const PolyRing& other) const;

  PolyRingPtr with_order(MonomialOrder order) const;

  /// Index of a variable by name, or -1.
  int index_of(const std::string& name) const;

 private:
  int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                      bool unit_zero_weights) const;

  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

}  // namespace frobsat
