#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobsat/polynomial.hpp"

namespace frobsat {

class RingPresentation;
using RingHandle = std::shared_ptr<const RingPresentation>;

/// R = S/K with S = F_p[x_1..x_n] weighted and K generated by homogeneous
/// relations. The polynomial ring carries grevlex; other orders are derived on
/// demand.
class RingPresentation {
 public:
  struct Variable {
    std::string name;
    int weight = 1;
  };

  /// Validates primality, names, positive weights and homogeneity of relations.
  static RingHandle make(std::uint32_t p, const std::vector<Variable>& vars,
                         const std::vector<std::string>& relations = {});
  static RingHandle make(PolyRingPtr poly_ring, std::vector<Polynomial> relations);

  /// F_p[names] with all weights one.
  static RingHandle polynomial_ring(std::uint32_t p, const std::vector<std::string>& names);

  const PolyRingPtr& poly_ring() const { return ring_; }
  std::uint32_t characteristic() const { return ring_->characteristic(); }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  bool is_polynomial_ring() const { return relations_.empty(); }

  Polynomial parse(const std::string& text) const { return parse_polynomial(text, ring_); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(ring_, i); }
  Polynomial variable(const std::string& name) const;
  Polynomial one() const { return Polynomial::constant(ring_, 1); }

  /// The irrelevant ideal's generators: all variables.
  std::vector<Polynomial> variables() const;

  bool same_as(const RingPresentation& other) const;

 private:
  RingPresentation(PolyRingPtr ring, std::vector<Polynomial> relations)
      : ring_(std::move(ring)), relations_(std::move(relations)) {}

  PolyRingPtr ring_;
  std::vector<Polynomial> relations_;
};

bool valid_variable_name(const std::string& name);

/// Throws Inhomogeneous naming the degrees present when f is not homogeneous.
void require_homogeneous(const Polynomial& f, const std::string& what);

}  // namespace frobsat
