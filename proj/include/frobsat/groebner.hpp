#pragma once

#include <vector>

#include "frobsat/presentation.hpp"

namespace frobsat {

/// Reduced Gröbner basis: monic, no term of any element divisible by another
/// element's leading monomial, sorted ascending by leading monomial. Unique
/// for a given (ideal, order).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(PolyRingPtr ring, std::vector<Polynomial> basis)
      : ring_(std::move(ring)), basis_(std::move(basis)) {}

  const PolyRingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }

  bool is_zero_ideal() const { return basis_.empty(); }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

  std::vector<Monomial> leading_monomials() const;

  /// Unique remainder of f; f is converted into this basis' order first.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  /// True iff m lies in the initial ideal.
  bool in_initial_ideal(const Monomial& m) const;

  bool operator==(const GroebnerBasis& o) const;

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> basis_;
};

/// Buchberger's algorithm with the Gebauer–Möller criteria and the normal
/// selection strategy (least lcm degree, ties by pair index). Generators are
/// moved into `ring`, whose order is used; zero generators are dropped.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const PolyRingPtr& ring);
/// Same, with the order given explicitly over the generators' variables.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// f ∈ (gens) + K, deciding in S with the ring's relations adjoined.
bool gb_membership(const RingPresentation& ring, const Polynomial& f, const std::vector<Polynomial>& gens);

}  // namespace frobsat
