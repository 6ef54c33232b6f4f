#pragma once
// Test-only oracles. Nothing here calls into the Gröbner engine: membership
// and colon checks are decided by plain linear algebra on graded pieces of S.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "frobsat/presentation.hpp"

namespace oracle {

using frobsat::Coeff;
using frobsat::Monomial;
using frobsat::Polynomial;
using frobsat::PolyRingPtr;

using ExpVec = std::vector<unsigned>;
using PlainPoly = std::map<ExpVec, std::int64_t>;

inline PlainPoly to_plain(const Polynomial& f) {
  PlainPoly out;
  for (const auto& t : f.terms()) {
    ExpVec e(f.ring()->nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i];
    out[e] = t.coeff;
  }
  return out;
}

/// Schoolbook product with coefficients reduced mod p at the end.
inline PlainPoly schoolbook_mul(const PlainPoly& a, const PlainPoly& b, std::int64_t p) {
  PlainPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] = (out[e] + ca * cb) % p;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// All monomials of S with the given weighted degree.
inline std::vector<Monomial> enumerate_monomials(const frobsat::PolyRing& ring, long d) {
  std::vector<Monomial> out;
  const std::size_t n = ring.nvars();
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const long w = ring.weights()[i];
    for (long e = 0; e * w <= left; ++e) {
      cur.set(i, static_cast<unsigned>(e));
      self(self, i + 1, left - e * w);
      if (w == 0) break;
    }
    cur.set(i, 0);
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

/// Row-reduce over F_p; returns rank. rows are modified.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::int64_t iv = inv(((rows[rank][col] % p) + p) % p);
    for (auto& v : rows[rank]) v = ((v % p) + p) % p * iv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] % p == 0) continue;
      std::int64_t f = ((rows[r][col] % p) + p) % p;
      for (std::size_t c = 0; c < ncols; ++c) rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Spanning set of (gens)_d inside S_d, as coefficient rows over the monomial basis.
inline std::vector<std::vector<std::int64_t>> ideal_piece_rows(const std::vector<Polynomial>& gens, long d,
                                                               const std::vector<Monomial>& basis) {
  const auto& ring = *gens.front().ring();
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<unsigned> key(ring.nvars());
    for (std::size_t k = 0; k < key.size(); ++k) key[k] = basis[i][k];
    index[key] = i;
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto gd = g.degree();
    if (!gd || *gd > d) continue;
    for (const auto& m : enumerate_monomials(ring, d - *gd)) {
      std::vector<std::int64_t> row(basis.size(), 0);
      for (const auto& t : g.terms()) {
        Monomial prod = t.mono * m;
        std::vector<unsigned> key(ring.nvars());
        for (std::size_t k = 0; k < key.size(); ++k) key[k] = prod[k];
        row[index.at(key)] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::vector<std::int64_t> coeff_row(const Polynomial& f, const std::vector<Monomial>& basis) {
  std::vector<std::int64_t> row(basis.size(), 0);
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == t.mono) row[i] = t.coeff;
  return row;
}

/// Homogeneous membership f ∈ (gens) decided degreewise: f lies in the span of
/// all monomial multiples of generators landing in deg f.
inline bool member_degreewise(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  const long d = *f.degree();
  if (gens.empty()) return false;
  const auto& ring = *f.ring();
  const std::int64_t p = ring.characteristic();
  auto basis = enumerate_monomials(ring, d);
  auto rows = ideal_piece_rows(gens, d, basis);
  std::size_t r0 = rank_mod_p(rows, p);
  rows.push_back(coeff_row(f, basis));
  return rank_mod_p(rows, p) == r0;
}

/// dim_k (S/(gens))_d.
inline std::size_t quotient_dim_degreewise(const std::vector<Polynomial>& gens, const PolyRingPtr& ring, long d) {
  auto basis = enumerate_monomials(*ring, d);
  if (gens.empty()) return basis.size();
  auto rows = ideal_piece_rows(gens, d, basis);
  return basis.size() - rank_mod_p(rows, ring->characteristic());
}

inline Polynomial random_form(const PolyRingPtr& ring, long d, std::mt19937_64& rng, double density = 0.6) {
  std::vector<frobsat::Term> terms;
  std::uniform_real_distribution<double> u(0, 1);
  for (const auto& m : enumerate_monomials(*ring, d))
    if (u(rng) < density) terms.push_back({m, static_cast<Coeff>(rng() % ring->characteristic())});
  return Polynomial::from_terms(ring, std::move(terms));
}

inline Polynomial random_poly(const PolyRingPtr& ring, long max_deg, std::mt19937_64& rng) {
  Polynomial f(ring);
  for (long d = 0; d <= max_deg; ++d) f = f + random_form(ring, d, rng, 0.3);
  return f;
}

}  // namespace oracle

namespace oracle {

/// dim_k of (A : (b_1..b_k))_d inside S_d, where `a` already includes K.
inline std::size_t colon_piece_dim(const std::vector<Polynomial>& a, const std::vector<Polynomial>& bs, long d) {
  const auto& ring = *bs.front().ring();
  const std::int64_t p = ring.characteristic();
  auto src = enumerate_monomials(ring, d);
  if (src.empty()) return 0;
  std::vector<std::vector<Monomial>> tgt;
  std::vector<std::size_t> offset;
  std::size_t width = 0;
  for (const auto& b : bs) {
    offset.push_back(width);
    tgt.push_back(enumerate_monomials(ring, d + *b.degree()));
    width += tgt.back().size();
  }
  std::vector<std::vector<std::int64_t>> ideal_rows;
  for (std::size_t j = 0; j < bs.size(); ++j) {
    if (a.empty()) break;
    for (auto& r : ideal_piece_rows(a, d + *bs[j].degree(), tgt[j])) {
      std::vector<std::int64_t> full(width, 0);
      std::copy(r.begin(), r.end(), full.begin() + static_cast<std::ptrdiff_t>(offset[j]));
      ideal_rows.push_back(std::move(full));
    }
  }
  std::vector<std::vector<std::int64_t>> all = ideal_rows;
  for (const auto& u : src) {
    std::vector<std::int64_t> row(width, 0);
    for (std::size_t j = 0; j < bs.size(); ++j) {
      auto prod = Polynomial::monomial(bs[j].ring(), u, 1) * bs[j];
      auto c = coeff_row(prod, tgt[j]);
      std::copy(c.begin(), c.end(), row.begin() + static_cast<std::ptrdiff_t>(offset[j]));
    }
    all.push_back(std::move(row));
  }
  std::size_t image = rank_mod_p(all, p) - rank_mod_p(ideal_rows, p);
  return src.size() - image;
}

}  // namespace oracle
