#include "frobsat/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace frobsat {

struct Ideal::Cache {
  std::once_flag once;
  GroebnerBasis gb;
};

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_as(*b.ring())) throw Error(ErrorKind::RingMismatch, "ideals live in different rings");
}

std::vector<Polynomial> with_relations(const Ideal& a) {
  std::vector<Polynomial> out = a.gens();
  const auto& rel = a.ring()->relations();
  out.insert(out.end(), rel.begin(), rel.end());
  return out;
}

/// Ring with variable `last` moved to the end, plus the index maps both ways.
struct Permuted {
  PolyRingPtr ring;
  std::vector<std::size_t> to_perm, from_perm;
};

Permuted move_variable_last(const PolyRing& ring, std::size_t last) {
  const std::size_t n = ring.nvars();
  Permuted out;
  out.to_perm.resize(n);
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    if (i == last) continue;
    out.to_perm[i] = k++;
    names.push_back(ring.names()[i]);
    weights.push_back(ring.weights()[i]);
  }
  out.to_perm[last] = n - 1;
  names.push_back(ring.names()[last]);
  weights.push_back(ring.weights()[last]);
  out.from_perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.from_perm[out.to_perm[i]] = i;
  out.ring = PolyRing::make(ring.characteristic(), names, weights, MonomialOrder::grevlex());
  return out;
}

/// (A + K) : x_var^power, with power = 0 meaning saturation. Relies on the
/// fact that for a homogeneous ideal and grevlex with x_var smallest, the
/// x_var-power dividing an element's leading term divides the whole element.
Ideal colon_variable_power(const Ideal& a, std::size_t var, unsigned power) {
  const auto& base = a.ring()->poly_ring();
  Permuted perm = move_variable_last(*base, var);
  std::vector<Polynomial> gens;
  for (const auto& g : with_relations(a)) gens.push_back(g.map_variables(perm.ring, perm.to_perm));
  if (gens.empty()) return a;
  GroebnerBasis G = buchberger(gens, perm.ring);
  const std::size_t last = base->nvars() - 1;
  std::vector<Polynomial> out;
  for (const auto& g : G.basis()) {
    unsigned v = 0xffff;
    for (const auto& t : g.terms()) v = std::min<unsigned>(v, t.mono[last]);
    if (power) v = std::min(v, power);
    Polynomial h = g;
    if (v) h = exact_divide(g, Polynomial::monomial(perm.ring, Monomial::variable(last, v)));
    out.push_back(h.map_variables(base, perm.from_perm));
  }
  return Ideal(a.ring(), std::move(out));
}

bool is_term(const Polynomial& f) { return f.size() == 1; }

/// (A + K) ∩ (B + K) in S via a weight-zero auxiliary variable t.
std::vector<Polynomial> intersect_in_s(const RingPresentation& ring, const std::vector<Polynomial>& a,
                                       const std::vector<Polynomial>& b) {
  const auto& base = *ring.poly_ring();
  const std::size_t n = base.nvars();
  if (n + 1 > kMaxVars) throw Error(ErrorKind::InvalidArgument, "too many variables for elimination");
  std::vector<std::string> names = {"_t"};
  std::vector<int> weights = {0};
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(base.names()[i]);
    weights.push_back(base.weights()[i]);
  }
  auto T = PolyRing::make(base.characteristic(), names, weights, MonomialOrder::eliminate(1));
  std::vector<std::size_t> shift(n);
  std::iota(shift.begin(), shift.end(), 1);
  const Polynomial t = Polynomial::variable(T, 0);
  const Polynomial one_minus_t = Polynomial::constant(T, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a) gens.push_back(t * g.map_variables(T, shift));
  for (const auto& g : b) gens.push_back(one_minus_t * g.map_variables(T, shift));
  GroebnerBasis G = buchberger(gens, T);
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = i;
  std::vector<Polynomial> out;
  for (const auto& g : G.basis()) {
    if (g.leading_monomial()[0] != 0) continue;  // block order: t-free iff lead is t-free
    out.push_back(g.map_variables(ring.poly_ring(), back));
  }
  return out;
}

}  // namespace

Ideal::Ideal(RingHandle ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring() || !g.ring()->same_variables(*ring_->poly_ring()))
      throw Error(ErrorKind::RingMismatch, "generator lives in a different ring");
    Polynomial h = g.in_ring(ring_->poly_ring());
    require_homogeneous(h, "generator " + to_string(h));
    gens_.push_back(std::move(h));
  }
}

Ideal Ideal::unit(RingHandle ring) {
  auto one = ring->one();
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::irrelevant(RingHandle ring) {
  auto vars = ring->variables();
  return Ideal(std::move(ring), std::move(vars));
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] {
    auto all = with_relations(*this);
    cache_->gb = all.empty() ? GroebnerBasis(ring_->poly_ring(), {}) : buchberger(all, ring_->poly_ring());
  });
  return cache_->gb;
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(*this, other);
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_zero() const {
  for (const auto& g : gens_) {
    if (ring_->relations().empty()) return false;
    if (!Ideal::zero(ring_).contains(g)) return false;
  }
  return true;
}

bool Ideal::operator==(const Ideal& other) const {
  require_same_ring(*this, other);
  return groebner() == other.groebner();
}

Ideal ideal_combine(const Ideal& a, const Ideal& b, CombineOp op) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens;
  if (op == CombineOp::Sum) {
    gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  } else {
    for (const auto& f : a.gens())
      for (const auto& g : b.gens()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal frobenius_power(const Ideal& ideal, std::uint64_t q) {
  if (!is_power_of(q, ideal.ring()->characteristic()))
    throw Error(ErrorKind::InvalidQ,
                std::to_string(q) + " is not a power of " + std::to_string(ideal.ring()->characteristic()));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(frobenius_pow(g, q));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal colon_by_elimination(const Ideal& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "colon by the zero element");
  require_homogeneous(b, "colon element");
  auto bb = b.in_ring(a.ring()->poly_ring());
  if (bb.is_constant()) return a;
  auto inter = intersect_in_s(*a.ring(), with_relations(a), {bb});
  std::vector<Polynomial> gens;
  for (const auto& g : inter) gens.push_back(exact_divide(g, bb));
  return Ideal(a.ring(), std::move(gens));
}

Ideal colon(const Ideal& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "colon by the zero element");
  require_homogeneous(b, "colon element");
  auto bb = b.in_ring(a.ring()->poly_ring());
  if (bb.is_constant()) return a;
  if (a.contains(bb)) return Ideal::unit(a.ring());
  if (is_term(bb)) {
    Ideal cur = a;
    const Monomial& m = bb.leading_monomial();
    for (std::size_t i = 0; i < a.ring()->nvars(); ++i)
      if (m[i]) cur = colon_variable_power(cur, i, m[i]);
    return cur;
  }
  return colon_by_elimination(a, bb);
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<const Polynomial*> elems;
  for (const auto& g : b.gens())
    if (!a.contains(g)) elems.push_back(&g);
  if (b.gens().empty()) throw Error(ErrorKind::InvalidArgument, "colon by the zero ideal");
  if (elems.empty()) return Ideal::unit(a.ring());
  Ideal result = colon(a, *elems[0]);
  for (std::size_t k = 1; k < elems.size(); ++k) result = intersection(result, colon(a, *elems[k]));
  return result;
}

Ideal saturate_wrt(const Ideal& a, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "saturation by the zero element");
  require_homogeneous(f, "saturation element");
  auto ff = f.in_ring(a.ring()->poly_ring());
  if (ff.is_constant()) return a;
  if (is_term(ff)) {
    Ideal cur = a;
    for (std::size_t i = 0; i < a.ring()->nvars(); ++i)
      if (ff.leading_monomial()[i]) cur = colon_variable_power(cur, i, 0);
    return cur;
  }
  Ideal cur = a;
  while (true) {
    Ideal next = colon(cur, ff);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Ideal saturate_irrelevant(const Ideal& a) {
  if (a.is_unit()) return a;
  if (dimension(a) == 0) return Ideal::unit(a.ring());
  // A : m^∞ = ∩_i A : x_i^∞; any factor equal to A forces the answer A
  std::vector<Ideal> parts;
  for (std::size_t i = 0; i < a.ring()->nvars(); ++i) {
    Ideal s = colon_variable_power(a, i, 0);
    if (s == a) return a;
    parts.push_back(std::move(s));
  }
  Ideal result = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) result = intersection(result, parts[i]);
  return result;
}

Ideal intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (b.contains(a)) return a;
  if (a.contains(b)) return b;
  auto ga = with_relations(a), gb = with_relations(b);
  if (ga.empty()) return a;
  if (gb.empty()) return b;
  return Ideal(a.ring(), intersect_in_s(*a.ring(), ga, gb));
}

std::optional<long> dimension(const Ideal& a) {
  const auto& G = a.groebner();
  if (G.is_unit()) return std::nullopt;
  const std::size_t n = a.ring()->nvars();
  std::vector<std::uint32_t> masks;
  for (const auto& m : G.leading_monomials()) masks.push_back(m.support_mask());
  long best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    long size = std::popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (auto mk : masks)
      if ((mk & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

long height(const Ideal& a) {
  auto d = dimension(a);
  if (!d) throw Error(ErrorKind::UnitIdeal, "height of the unit ideal");
  return *dimension(Ideal::zero(a.ring())) - *d;
}

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const std::size_t n = ring.nvars();
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == n) {
      const long w = ring.weights()[i];
      if (w == 0 ? left == 0 : left % w == 0) {
        cur.set(i, w == 0 ? 0u : static_cast<unsigned>(left / w));
        out.push_back(cur);
        cur.set(i, 0);
      }
      return;
    }
    const long w = ring.weights()[i];
    for (long e = left / std::max(1L, w); e >= 0; --e) {
      if (w == 0 && e > 0) continue;
      cur.set(i, static_cast<unsigned>(e));
      self(self, i + 1, left - e * w);
    }
    cur.set(i, 0);
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) { return ring.greater(x, y); });
  return out;
}

std::vector<Monomial> standard_monomials(const Ideal& a, long degree) {
  const auto& G = a.groebner();
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(*a.ring()->poly_ring(), degree))
    if (!G.in_initial_ideal(m)) out.push_back(m);
  return out;
}

HilbertTable hilbert_table(const Ideal& a, long cap) {
  if (cap < 0) throw Error(ErrorKind::InvalidArgument, "hilbert_table: negative cap");
  HilbertTable table;
  for (long d = 0; d <= cap; ++d) table.dims.push_back(standard_monomials(a, d).size());
  table.exact_dimension_zero = dimension(a).value_or(0) == 0;
  return table;
}

long top_socle_degree(const Ideal& a) {
  auto d = dimension(a);
  if (d && *d > 0) throw Error(ErrorKind::NotArtinian, "R/A is not Artinian (dimension " + std::to_string(*d) + ")");
  const auto& G = a.groebner();
  if (G.is_unit()) throw Error(ErrorKind::UnitIdeal, "top_socle_degree of the unit ideal");
  const auto& ring = *a.ring()->poly_ring();
  const std::size_t n = ring.nvars();
  long best = 0;
  Monomial cur;
  // depth-first walk over the finite order ideal of standard monomials
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      best = std::max(best, ring.degree(cur));
      return;
    }
    for (unsigned e = 0;; ++e) {
      cur.set(i, e);
      if (G.in_initial_ideal(cur)) break;
      self(self, i + 1);
    }
    cur.set(i, 0);
  };
  rec(rec, 0);
  return best;
}

long truncation_bound(const Ideal& a) {
  if (a.is_unit()) return 0;
  return top_socle_degree(a) + 1;
}

std::string to_string(const Ideal& a) {
  const auto& B = a.groebner().basis();
  std::string out = "(";
  for (std::size_t i = B.size(); i-- > 0;) {
    out += to_string(B[i]);
    if (i) out += ", ";
  }
  return out + ")";
}

}  // namespace frobsat
