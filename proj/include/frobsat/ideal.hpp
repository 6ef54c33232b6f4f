#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "frobsat/groebner.hpp"

namespace frobsat {

/// Homogeneous ideal of R = S/K given by generators in S. Everything that
/// decides equality or membership goes through the reduced grevlex basis of
/// gens + K, computed once and shared between copies.
class Ideal {
 public:
  Ideal(RingHandle ring, std::vector<Polynomial> gens);

  static Ideal zero(RingHandle ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingHandle ring);
  /// m = (all variables).
  static Ideal irrelevant(RingHandle ring);

  const RingHandle& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  /// Reduced grevlex Gröbner basis of gens + K.
  const GroebnerBasis& groebner() const;

  bool contains(const Polynomial& f) const { return groebner().contains(f); }
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner().is_unit(); }
  /// Zero in R, i.e. all generators lie in K.
  bool is_zero() const;

  bool operator==(const Ideal& other) const;

 private:
  struct Cache;
  RingHandle ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

enum class CombineOp { Sum, Product };

Ideal ideal_combine(const Ideal& a, const Ideal& b, CombineOp op);
inline Ideal operator+(const Ideal& a, const Ideal& b) { return ideal_combine(a, b, CombineOp::Sum); }
inline Ideal operator*(const Ideal& a, const Ideal& b) { return ideal_combine(a, b, CombineOp::Product); }

/// I^[q] generated by the q-th powers of the generators of I.
Ideal frobenius_power(const Ideal& ideal, std::uint64_t q);

/// A : b for a single form, computed in S as (A + K) : b.
Ideal colon(const Ideal& a, const Polynomial& b);
/// A : B = ∩ over generators b of B of A : b. Throws InvalidArgument when B = 0.
Ideal colon(const Ideal& a, const Ideal& b);
/// Colon by one element through intersection with (b) and exact division,
/// regardless of the shape of b. Kept as the reference route.
Ideal colon_by_elimination(const Ideal& a, const Polynomial& b);

/// A : f^∞.
Ideal saturate_wrt(const Ideal& a, const Polynomial& f);
/// A : m^∞.
Ideal saturate_irrelevant(const Ideal& a);

/// A ∩ B by eliminating t from t·A + (1 - t)·B.
Ideal intersection(const Ideal& a, const Ideal& b);

/// Krull dimension of R/A; nullopt for the unit ideal.
std::optional<long> dimension(const Ideal& a);
/// dim R - dim R/A. Throws UnitIdeal for A = (1).
long height(const Ideal& a);

/// Standard monomials of A + K of one weighted degree, descending in grevlex.
std::vector<Monomial> standard_monomials(const Ideal& a, long degree);

struct HilbertTable {
  std::vector<std::size_t> dims;  // dim_k (R/A)_d, d = 0..cap
  bool exact_dimension_zero = false;
};

HilbertTable hilbert_table(const Ideal& a, long cap);

/// Largest weighted degree of a standard monomial; requires R/A Artinian.
long top_socle_degree(const Ideal& a);
/// Least N with R_{>=N} ⊆ A; 0 for the unit ideal. Requires R/A Artinian.
long truncation_bound(const Ideal& a);

/// All monomials of S of one weighted degree.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, long degree);

std::string to_string(const Ideal& a);

}  // namespace frobsat
