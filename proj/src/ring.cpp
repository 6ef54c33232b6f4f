#include "frobsat/ring.hpp"

#include <string>

namespace frobsat {

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xffffu) throw Error(ErrorKind::Overflow, "exponent " + std::to_string(e) + " exceeds 65535");
  exp_[i] = static_cast<Exponent>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = static_cast<unsigned>(exp_[i]) + o.exp_[i];
    if (s > 0xffffu) throw Error(ErrorKind::Overflow, "monomial exponent overflow");
    r.exp_[i] = static_cast<Exponent>(s);
  }
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned long s = static_cast<unsigned long>(exp_[i]) * k;
    if (s > 0xffffu) throw Error(ErrorKind::Overflow, "monomial exponent overflow");
    r.exp_[i] = static_cast<Exponent>(s);
  }
  return r;
}

std::string to_string(const MonomialOrder& order) {
  switch (order.kind) {
    case MonomialOrder::Kind::Grevlex: return "grevlex";
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::Block: return "block(" + std::to_string(order.block) + ")";
  }
  return "?";
}

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> names, std::vector<int> weights,
                   MonomialOrder order)
    : field_(p), names_(std::move(names)), weights_(std::move(weights)), order_(order) {
  if (names_.size() > kMaxVars)
    throw Error(ErrorKind::InvalidArgument,
                "at most " + std::to_string(kMaxVars) + " variables are supported");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size())
    throw Error(ErrorKind::InvalidArgument, "one weight per variable required");
  for (int w : weights_)
    if (w < 0) throw Error(ErrorKind::InvalidArgument, "negative variable weight");
  if (order_.kind == MonomialOrder::Kind::Block && order_.block > names_.size())
    throw Error(ErrorKind::InvalidArgument, "block size exceeds number of variables");
}

PolyRingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> names, std::vector<int> weights,
                           MonomialOrder order) {
  return std::make_shared<const PolyRing>(p, std::move(names), std::move(weights), order);
}

int PolyRing::compare_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                              bool unit_zero_weights) const {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    long w = weights_[i];
    if (unit_zero_weights && w == 0) w = 1;
    da += w * a[i];
    db += w * b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = names_.size();
  switch (order_.kind) {
    case MonomialOrder::Kind::Grevlex:
      return compare_grevlex(a, b, 0, n, false);
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case MonomialOrder::Kind::Block: {
      int c = compare_grevlex(a, b, 0, order_.block, true);
      if (c != 0) return c;
      return compare_grevlex(a, b, order_.block, n, true);
    }
  }
  return 0;
}

bool PolyRing::same_variables(const PolyRing& other) const {
  return field_ == other.field_ && names_ == other.names_ && weights_ == other.weights_;
}

PolyRingPtr PolyRing::with_order(MonomialOrder order) const {
  return std::make_shared<const PolyRing>(field_.characteristic(), names_, weights_, order);
}

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace frobsat
