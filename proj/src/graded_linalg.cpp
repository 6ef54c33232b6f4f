#include "frobsat/graded_linalg.hpp"

#include <unordered_map>

namespace frobsat {

std::size_t FpMatrix::rank() const {
  std::vector<Coeff> m = data_;
  const auto& F = field_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && m[piv * cols_ + col] == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t c = col; c < cols_; ++c) std::swap(m[piv * cols_ + c], m[rank * cols_ + c]);
    Coeff inv = F.inv(m[rank * cols_ + col]);
    for (std::size_t c = col; c < cols_; ++c) m[rank * cols_ + c] = F.mul(m[rank * cols_ + c], inv);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      Coeff f = m[r * cols_ + col];
      if (!f) continue;
      for (std::size_t c = col; c < cols_; ++c)
        m[r * cols_ + c] = F.sub(m[r * cols_ + c], F.mul(f, m[rank * cols_ + c]));
    }
    ++rank;
  }
  return rank;
}

long GradedPieceBasis::index_of(const Monomial& m) const {
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (monomials[i] == m) return static_cast<long>(i);
  return -1;
}

GradedPieceBasis graded_piece(const Ideal& quotient, long degree) {
  return {degree, degree < 0 ? std::vector<Monomial>{} : standard_monomials(quotient, degree)};
}

namespace {

/// Normal forms modulo K written in a graded-piece basis.
class PieceCoordinates {
 public:
  PieceCoordinates(const Ideal& zero, const GradedPieceBasis& basis) : zero_(zero) {
    for (std::size_t i = 0; i < basis.monomials.size(); ++i) index_.emplace(basis.monomials[i], i);
  }

  /// Adds the coordinates of NF(f) into row starting at `offset`.
  void write(const Polynomial& f, FpMatrix& m, std::size_t row, std::size_t offset, bool negate = false) const {
    const auto& F = m.field();
    Polynomial nf = zero_.groebner().is_zero_ideal() ? f : zero_.groebner().normal_form(f);
    for (const auto& t : nf.terms()) {
      auto it = index_.find(t.mono);
      if (it == index_.end()) throw Error(ErrorKind::InvalidArgument, "element is not homogeneous of the expected degree");
      Coeff& slot = m(row, offset + it->second);
      slot = F.add(slot, negate ? F.neg(t.coeff) : t.coeff);
    }
  }

 private:
  const Ideal& zero_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace

bool product_containment(const RingHandle& ring, long N, long M, long D, long cap) {
  if (cap < D) throw Error(ErrorKind::InvalidArgument, "product_containment requires cap >= D");
  const Ideal zero = Ideal::zero(ring);
  const auto& S = ring->poly_ring();
  for (long d = std::max(D, 0L); d <= cap; ++d) {
    GradedPieceBasis target = graded_piece(zero, d);
    if (target.size() == 0) continue;
    std::vector<std::pair<Monomial, Monomial>> products;
    for (long a = std::max(N, 0L); a <= d - std::max(M, 0L); ++a) {
      GradedPieceBasis left = graded_piece(zero, a), right = graded_piece(zero, d - a);
      for (const auto& u : left.monomials)
        for (const auto& v : right.monomials) products.emplace_back(u, v);
    }
    if (products.size() < target.size()) return false;
    FpMatrix mat(S->field(), products.size(), target.size());
    PieceCoordinates coords(zero, target);
    for (std::size_t r = 0; r < products.size(); ++r)
      coords.write(Polynomial::monomial(S, products[r].first * products[r].second), mat, r, 0);
    if (mat.rank() < target.size()) return false;
  }
  return true;
}

std::size_t koszul_h1_piece(const RingHandle& ring, const std::vector<Polynomial>& elements, long degree) {
  const Ideal zero = Ideal::zero(ring);
  const auto& S = ring->poly_ring();
  const std::size_t n = elements.size();
  std::vector<long> deg(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (elements[i].is_zero()) throw Error(ErrorKind::InvalidArgument, "Koszul element is zero");
    require_homogeneous(elements[i], "Koszul element");
    deg[i] = *elements[i].degree();
  }
  // C_1 in degree d: ⊕ R_{d - d_i}
  std::vector<GradedPieceBasis> c1;
  std::vector<std::size_t> offset;
  std::size_t c1_dim = 0;
  for (std::size_t i = 0; i < n; ++i) {
    offset.push_back(c1_dim);
    c1.push_back(graded_piece(zero, degree - deg[i]));
    c1_dim += c1.back().size();
  }
  if (c1_dim == 0) return 0;
  GradedPieceBasis c0 = graded_piece(zero, degree);
  std::size_t rank1 = 0;
  if (c0.size() > 0) {
    FpMatrix d1(S->field(), c1_dim, c0.size());
    PieceCoordinates coords(zero, c0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < c1[i].size(); ++k)
        coords.write(Polynomial::monomial(S, c1[i].monomials[k]) * elements[i], d1, offset[i] + k, 0);
    rank1 = d1.rank();
  }
  const std::size_t kernel = c1_dim - rank1;
  if (kernel == 0) return 0;
  // image of C_2: e_i ∧ e_j ↦ x_i e_j - x_j e_i
  std::vector<PieceCoordinates> c1_coords;
  c1_coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c1_coords.emplace_back(zero, c1[i]);
  std::vector<std::tuple<std::size_t, std::size_t, Monomial>> gens2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& u : graded_piece(zero, degree - deg[i] - deg[j]).monomials) gens2.emplace_back(i, j, u);
  if (gens2.empty()) return kernel;
  FpMatrix d2(S->field(), gens2.size(), c1_dim);
  for (std::size_t r = 0; r < gens2.size(); ++r) {
    const auto& [i, j, u] = gens2[r];
    Polynomial um = Polynomial::monomial(S, u);
    c1_coords[j].write(um * elements[i], d2, r, offset[j]);
    c1_coords[i].write(um * elements[j], d2, r, offset[i], true);
  }
  return kernel - d2.rank();
}

KoszulReport koszul_h1_top_degree(const RingHandle& ring, const std::vector<Polynomial>& elements, long cap,
                                  long window) {
  if (window <= 0) throw Error(ErrorKind::InvalidArgument, "window must be positive");
  KoszulReport report;
  report.elements = elements;
  for (const auto& e : elements) report.degrees.push_back(e.degree().value_or(-1));
  report.cap = cap;
  report.window = window;
  for (long d = 0; d <= cap; ++d) {
    std::size_t h = koszul_h1_piece(ring, elements, d);
    report.dims.push_back(h);
    if (h) report.top = d;
  }
  report.stable = cap + 1 >= window && (!report.top || *report.top <= cap - window);
  return report;
}

}  // namespace frobsat
