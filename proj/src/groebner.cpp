#include "frobsat/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "frobsat/budget.hpp"

namespace frobsat {

namespace {

struct Reducer {
  Monomial lead;
  std::uint32_t mask;
  const Polynomial* poly;  // monic
};

int find_divisor(const std::vector<Reducer>& reducers, const Monomial& m) {
  const std::uint32_t mask = m.support_mask();
  for (std::size_t i = 0; i < reducers.size(); ++i) {
    const auto& r = reducers[i];
    if ((r.mask & ~mask) == 0 && r.lead.divides(m)) return static_cast<int>(i);
  }
  return -1;
}

/// Full reduction of f by monic reducers. Returns the remainder, descending.
Polynomial reduce(const Polynomial& f, const std::vector<Reducer>& reducers) {
  const auto& ring = *f.ring();
  const auto& F = ring.field();
  std::vector<Term> rem;
  std::vector<Term> work = f.terms();
  std::vector<Term> next;
  std::size_t head = 0;
  unsigned steps = 0;
  while (head < work.size()) {
    const Term t = work[head];
    int idx = find_divisor(reducers, t.mono);
    if (idx < 0) {
      rem.push_back(t);
      ++head;
      continue;
    }
    if ((++steps & 0xff) == 0) check_budget();
    const Polynomial& g = *reducers[idx].poly;
    const Monomial m = t.mono / g.leading_monomial();
    const Coeff nc = F.neg(t.coeff);
    const auto& gt = g.terms();
    next.clear();
    next.reserve(work.size() - head + gt.size());
    std::size_t i = head + 1, j = 1;
    while (i < work.size() && j < gt.size()) {
      Monomial gm = gt[j].mono * m;
      int c = ring.compare(work[i].mono, gm);
      if (c > 0) {
        next.push_back(work[i++]);
      } else if (c < 0) {
        next.push_back({gm, F.mul(nc, gt[j++].coeff)});
      } else {
        Coeff s = F.add(work[i].coeff, F.mul(nc, gt[j].coeff));
        if (s) next.push_back({gm, s});
        ++i;
        ++j;
      }
    }
    next.insert(next.end(), work.begin() + static_cast<std::ptrdiff_t>(i), work.end());
    for (; j < gt.size(); ++j) next.push_back({gt[j].mono * m, F.mul(nc, gt[j].coeff)});
    std::swap(work, next);
    head = 0;
  }
  return Polynomial::from_terms(f.ring(), std::move(rem));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial s = f.times_term(l / f.leading_monomial(), 1);
  s.sub_scaled(g, l / g.leading_monomial(), 1);
  return s;
}

struct Pair {
  long degree;
  std::size_t i, j;
  Monomial lcm;
  bool operator<(const Pair& o) const { return std::tie(degree, i, j) < std::tie(o.degree, o.i, o.j); }
};

class Engine {
 public:
  explicit Engine(PolyRingPtr ring) : ring_(std::move(ring)) {}

  bool add_generator(const Polynomial& g) {
    Polynomial h = reduce(g, reducers());
    if (h.is_zero()) return false;
    return insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      check_budget();
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Polynomial s = s_polynomial(polys_[pr.i], polys_[pr.j]);
      Polynomial h = reduce(s, reducers());
      if (h.is_zero()) continue;
      if (insert(h.monic())) return;
    }
  }

  bool unit() const { return unit_; }

  std::vector<Polynomial> reduced_basis() const {
    if (unit_) return {Polynomial::constant(ring_, 1)};
    std::vector<const Polynomial*> g;
    for (std::size_t k : active_) g.push_back(&polys_[k]);
    std::sort(g.begin(), g.end(), [&](const Polynomial* a, const Polynomial* b) {
      return ring_->compare(a->leading_monomial(), b->leading_monomial()) < 0;
    });
    std::vector<Polynomial> out;
    out.reserve(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<Reducer> others;
      for (std::size_t l = 0; l < g.size(); ++l)
        if (l != k) others.push_back({g[l]->leading_monomial(), g[l]->leading_monomial().support_mask(), g[l]});
      // leading term is irreducible by the others; only the tail changes
      Polynomial tail = *g[k];
      Polynomial r = reduce(tail, others);
      out.push_back(r.monic());
    }
    return out;
  }

 private:
  std::vector<Reducer> reducers() const {
    std::vector<Reducer> r;
    r.reserve(active_.size());
    for (std::size_t k : active_)
      r.push_back({polys_[k].leading_monomial(), polys_[k].leading_monomial().support_mask(), &polys_[k]});
    return r;
  }

  // Gebauer–Möller update; returns true when the unit ideal was reached.
  bool insert(Polynomial h) {
    if (h.is_constant()) {
      unit_ = true;
      pairs_.clear();
      return true;
    }
    polys_.push_back(std::move(h));
    const std::size_t hn = polys_.size() - 1;
    const Monomial& lh = polys_[hn].leading_monomial();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g : active_) {
      const Monomial& lg = polys_[g].leading_monomial();
      c.push_back({g, lcm(lh, lg), coprime(lh, lg)});
    }
    // first pass: drop (h,g1) when some other candidate's lcm divides it
    std::vector<Cand> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Cand& cur = c[k];
      bool keep = cur.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(cur.lcm)) keep = false;
        for (std::size_t l = 0; l < d.size() && keep; ++l)
          if (d[l].lcm.divides(cur.lcm)) keep = false;
      }
      if (keep) d.push_back(cur);
    }
    // old pairs: drop (g1,g2) when lt(h) | lcm and both new lcms differ from it
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial l1 = lcm(polys_[it->i].leading_monomial(), lh);
      const Monomial l2 = lcm(polys_[it->j].leading_monomial(), lh);
      if (lh.divides(it->lcm) && !(l1 == it->lcm) && !(l2 == it->lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (const Cand& cand : d)
      if (!cand.coprime) pairs_.insert({ring_->degree(cand.lcm), cand.g, hn, cand.lcm});

    std::vector<std::size_t> kept;
    for (std::size_t g : active_)
      if (!lh.divides(polys_[g].leading_monomial())) kept.push_back(g);
    kept.push_back(hn);
    active_ = std::move(kept);
    return false;
  }

  PolyRingPtr ring_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> active_;
  std::set<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!ring_) throw Error(ErrorKind::InvalidArgument, "normal_form on an empty GroebnerBasis");
  if (!f.ring() || !f.ring()->same_variables(*ring_))
    throw Error(ErrorKind::RingMismatch, "normal_form: polynomial and basis live in different rings");
  Polynomial g = f.in_ring(ring_);
  std::vector<Reducer> r;
  r.reserve(basis_.size());
  for (const auto& b : basis_) r.push_back({b.leading_monomial(), b.leading_monomial().support_mask(), &b});
  return reduce(g, r);
}

bool GroebnerBasis::in_initial_ideal(const Monomial& m) const {
  for (const auto& b : basis_)
    if (b.leading_monomial().divides(m)) return true;
  return false;
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  if (basis_.size() != o.basis_.size()) return false;
  if (basis_.empty()) return true;
  if (!(order() == o.order()) || !ring_->same_variables(*o.ring_)) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!(basis_[i].terms() == o.basis_[i].terms())) return false;
  return true;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const PolyRingPtr& ring) {
  std::vector<Polynomial> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(g.in_ring(ring));
  // deterministic feed order: ascending leading monomial
  std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  Engine engine(ring);
  for (const auto& g : input)
    if (engine.add_generator(g) && engine.unit()) break;
  if (!engine.unit()) engine.run();
  return GroebnerBasis(ring, engine.reduced_basis());
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order) {
  for (const auto& g : gens)
    if (g.ring()) return buchberger(gens, g.ring()->with_order(order));
  throw Error(ErrorKind::InvalidArgument, "buchberger: no generator carries a ring");
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) { return G.normal_form(f); }

bool gb_membership(const RingPresentation& ring, const Polynomial& f, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = gens;
  all.insert(all.end(), ring.relations().begin(), ring.relations().end());
  if (f.is_zero()) return true;
  if (all.empty()) return false;
  return buchberger(all, ring.poly_ring()).contains(f);
}

}  // namespace frobsat
