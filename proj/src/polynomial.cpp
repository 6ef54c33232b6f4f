#include "frobsat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace frobsat {

namespace {

void sort_and_merge(const PolyRing& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.greater(a.mono, b.mono); });
  const auto& F = ring.field();
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term t = terms[i];
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == t.mono) t.coeff = F.add(t.coeff, terms[j++].coeff);
    if (t.coeff != 0) terms[out++] = t;
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial Polynomial::constant(PolyRingPtr ring, std::int64_t c) {
  Polynomial f(std::move(ring));
  Coeff v = f.ring_->field().from_int(c);
  if (v) f.terms_.push_back({Monomial{}, v});
  return f;
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  return monomial(std::move(ring), Monomial::variable(i), 1);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m, Coeff c) {
  Polynomial f(std::move(ring));
  c %= f.ring_->characteristic();
  if (c) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  for (auto& t : terms) t.coeff %= f.ring_->characteristic();
  sort_and_merge(*f.ring_, terms);
  f.terms_ = std::move(terms);
  return f;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = ring_->degree(terms_[0].mono);
  for (const auto& t : terms_)
    if (ring_->degree(t.mono) != d) return false;
  return true;
}

std::optional<long> Polynomial::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return ring_->degree(terms_[0].mono);
}

long Polynomial::max_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->degree(t.mono));
  return d;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!ring_ || !o.ring_) throw Error(ErrorKind::RingMismatch, "polynomial without a ring");
  if (ring_ != o.ring_ && !ring_->same_variables(*o.ring_))
    throw Error(ErrorKind::RingMismatch, "polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  const Polynomial& rhs_src = o;
  Polynomial rhs = (ring_->order() == o.ring_->order()) ? rhs_src : o.in_ring(ring_);
  const auto& F = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = ring_->compare(terms_[i].mono, rhs.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(rhs.terms_[j++]);
    } else {
      Coeff s = F.add(terms_[i].coeff, rhs.terms_[j].coeff);
      if (s) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + i, terms_.end());
  r.terms_.insert(r.terms_.end(), rhs.terms_.begin() + j, rhs.terms_.end());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  const auto& F = ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto& slot = acc[a.mono * b.mono];
      slot = F.add(slot, F.mul(a.coeff, b.coeff));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c) terms.push_back({m, c});
  Polynomial r(ring_);
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring_->greater(a.mono, b.mono); });
  r.terms_ = std::move(terms);
  return r;
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial r(ring_);
  c %= ring_->characteristic();
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  Polynomial r(ring_);
  c %= ring_->characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::in_ring(PolyRingPtr target) const {
  if (!ring_->same_variables(*target))
    throw Error(ErrorKind::RingMismatch, "in_ring: variables differ");
  Polynomial r(std::move(target));
  r.terms_ = terms_;
  if (!(r.ring_->order() == ring_->order()))
    std::sort(r.terms_.begin(), r.terms_.end(),
              [&](const Term& a, const Term& b) { return r.ring_->greater(a.mono, b.mono); });
  return r;
}

Polynomial Polynomial::map_variables(PolyRingPtr target, const std::vector<std::size_t>& index_map) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i]) m.set(index_map[i], t.mono[i]);
    terms.push_back({m, t.coeff});
  }
  return from_terms(std::move(target), std::move(terms));
}

void Polynomial::sub_scaled(const Polynomial& g, const Monomial& m, Coeff c) {
  const auto& F = ring_->field();
  Coeff nc = F.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    Monomial gm = g.terms_[j].mono * m;
    int cmp = ring_->compare(terms_[i].mono, gm);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, F.mul(nc, g.terms_[j++].coeff)});
    } else {
      Coeff s = F.add(terms_[i].coeff, F.mul(nc, g.terms_[j].coeff));
      if (s) out.push_back({gm, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + i, terms_.end());
  for (; j < g.terms_.size(); ++j) out.push_back({g.terms_[j].mono * m, F.mul(nc, g.terms_[j].coeff)});
  terms_ = std::move(out);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  if (!ring_ || !o.ring_ || !ring_->same_variables(*o.ring_)) return false;
  if (ring_->order() == o.ring_->order()) return terms_ == o.terms_;
  return terms_ == o.in_ring(ring_).terms_;
}

Polynomial pow(const Polynomial& f, unsigned n) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool is_power_of(std::uint64_t q, std::uint32_t p) {
  if (q == 0 || p < 2) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

Polynomial frobenius_pow(const Polynomial& f, std::uint64_t q) {
  const std::uint32_t p = f.ring()->characteristic();
  if (!is_power_of(q, p))
    throw Error(ErrorKind::InvalidQ, std::to_string(q) + " is not a power of " + std::to_string(p));
  if (q > 0xffffu) throw Error(ErrorKind::Overflow, "q too large for exponent storage");
  std::vector<Term> terms;
  terms.reserve(f.size());
  // c^q = c in F_p, and m -> m^q preserves any monomial order.
  for (const auto& t : f.terms()) terms.push_back({t.mono.pow(static_cast<unsigned>(q)), t.coeff});
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

std::map<long, Polynomial> homogeneous_components(const Polynomial& f) {
  std::map<long, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) buckets[f.ring()->degree(t.mono)].push_back(t);
  std::map<long, Polynomial> out;
  for (auto& [d, terms] : buckets) out.emplace(d, Polynomial::from_terms(f.ring(), std::move(terms)));
  return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& d) {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  Polynomial rem = f;
  Polynomial d_local = d.in_ring(f.ring());
  std::vector<Term> quot;
  const auto& F = f.ring()->field();
  Coeff lc_inv = F.inv(d_local.leading_coeff());
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!d_local.leading_monomial().divides(lt.mono))
      throw Error(ErrorKind::InvalidArgument, "exact_divide: divisor does not divide");
    Monomial m = lt.mono / d_local.leading_monomial();
    Coeff c = F.mul(lt.coeff, lc_inv);
    quot.push_back({m, c});
    rem.sub_scaled(d_local, m, c);
  }
  return Polynomial::from_terms(f.ring(), std::move(quot));
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const auto& ring = *f.ring();
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = ring.field().to_symmetric(t.coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? '-' : '+');
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (wrote) os << '*';
      os << ring.names()[i];
      if (t.mono[i] > 1) os << '^' << t.mono[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const PolyRingPtr& ring) : ring_(ring) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        src_.push_back(text[i]);
        col_.push_back(i + 1);
      }
  }

  Polynomial parse() {
    if (src_.empty()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (pos_ < src_.size()) {
      bool negative = false;
      if (src_[pos_] == '+' || src_[pos_] == '-') {
        negative = src_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      if (negative) t.coeff = ring_->field().neg(t.coeff);
      terms.push_back(t);
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t col = pos_ < col_.size() ? col_[pos_] : (col_.empty() ? 1 : col_.back() + 1);
    throw Error(ErrorKind::Syntax, "column " + std::to_string(col) + ": " + msg);
  }

  std::uint64_t parse_digits() {
    std::uint64_t v = 0;
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(src_[pos_] - '0');
      if (v > (1ull << 40)) fail("integer too large");
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    return v;
  }

  Term parse_term() {
    const auto& F = ring_->field();
    Coeff coeff = 1;
    Monomial mono;
    bool have_factor = false;
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      coeff = static_cast<Coeff>(parse_digits() % F.characteristic());
      have_factor = true;
    }
    while (pos_ < src_.size() && src_[pos_] != '+' && src_[pos_] != '-') {
      if (src_[pos_] == '*') {
        if (!have_factor) fail("'*' without a preceding factor");
        ++pos_;
        if (pos_ >= src_.size() || src_[pos_] == '+' || src_[pos_] == '-') fail("dangling '*'");
      }
      if (std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        coeff = F.mul(coeff, static_cast<Coeff>(parse_digits() % F.characteristic()));
      } else {
        std::size_t var = parse_variable();
        unsigned e = 1;
        if (pos_ < src_.size() && src_[pos_] == '^') {
          ++pos_;
          std::uint64_t v = parse_digits();
          if (v > 0xffff) fail("exponent too large");
          e = static_cast<unsigned>(v);
        }
        mono = mono * Monomial::variable(var, e);
      }
      have_factor = true;
    }
    if (!have_factor) fail("empty term");
    return {mono, coeff};
  }

  // longest variable name matching at the current position
  std::size_t parse_variable() {
    if (!std::isalpha(static_cast<unsigned char>(src_[pos_]))) fail(std::string("unexpected '") + src_[pos_] + "'");
    std::size_t best_len = 0, best = 0;
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      const auto& name = ring_->names()[v];
      if (name.size() > best_len && src_.compare(pos_, name.size(), name) == 0) {
        best_len = name.size();
        best = v;
      }
    }
    if (best_len == 0) {
      std::size_t end = pos_;
      while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
      fail("unknown variable '" + src_.substr(pos_, end - pos_) + "'");
    }
    pos_ += best_len;
    return best;
  }

  const PolyRingPtr& ring_;
  std::string src_;
  std::vector<std::size_t> col_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolyRingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace frobsat
