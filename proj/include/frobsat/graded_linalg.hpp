#pragma once

#include <optional>
#include <vector>

#include "frobsat/ideal.hpp"

namespace frobsat {

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const PrimeField& field() const { return field_; }

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank() const;

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<Coeff> data_;
};

/// Standard monomials spanning (R/A)_d.
struct GradedPieceBasis {
  long degree = 0;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
  /// Position of m in the basis, or -1.
  long index_of(const Monomial& m) const;
};

GradedPieceBasis graded_piece(const Ideal& quotient, long degree);
inline GradedPieceBasis graded_piece(const RingHandle& ring, long degree) {
  return graded_piece(Ideal::zero(ring), degree);
}

/// R_{>=D} ⊆ R_{>=N}·R_{>=M}, checked in every degree D..cap by rank.
bool product_containment(const RingHandle& ring, long N, long M, long D, long cap);

/// dim_k [H_1(elements; R)]_d from the ranks of the first two Koszul differentials.
std::size_t koszul_h1_piece(const RingHandle& ring, const std::vector<Polynomial>& elements, long degree);

struct KoszulReport {
  std::vector<Polynomial> elements;
  std::vector<long> degrees;
  std::vector<std::size_t> dims;  // d = 0..cap
  std::optional<long> top;        // last degree with nonzero H_1
  long cap = 0;
  long window = 0;
  bool stable = false;            // the last `window` scanned degrees vanish
};

KoszulReport koszul_h1_top_degree(const RingHandle& ring, const std::vector<Polynomial>& elements, long cap,
                                  long window);

}  // namespace frobsat
