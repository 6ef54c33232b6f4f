#include "frobsat/presentation.hpp"

#include <cctype>
#include <set>

namespace frobsat {

bool valid_variable_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

void require_homogeneous(const Polynomial& f, const std::string& what) {
  if (f.is_homogeneous()) return;
  std::string degrees;
  for (const auto& [d, part] : homogeneous_components(f)) {
    if (!degrees.empty()) degrees += ",";
    degrees += std::to_string(d);
  }
  throw Error(ErrorKind::Inhomogeneous, what + " is not homogeneous: degrees {" + degrees + "}");
}

RingHandle RingPresentation::make(std::uint32_t p, const std::vector<Variable>& vars,
                                  const std::vector<std::string>& relations) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& v : vars) {
    names.push_back(v.name);
    weights.push_back(v.weight);
  }
  auto ring = PolyRing::make(p, names, weights);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_polynomial(r, ring));
  return make(ring, std::move(rels));
}

RingHandle RingPresentation::make(PolyRingPtr poly_ring, std::vector<Polynomial> relations) {
  if (poly_ring->nvars() == 0) throw Error(ErrorKind::InvalidArgument, "ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& name : poly_ring->names()) {
    if (!valid_variable_name(name))
      throw Error(ErrorKind::InvalidArgument, "invalid variable name '" + name + "'");
    if (!seen.insert(name).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate variable name '" + name + "'");
  }
  for (int w : poly_ring->weights())
    if (w <= 0) throw Error(ErrorKind::InvalidArgument, "variable weights must be positive");
  if (!(poly_ring->order() == MonomialOrder::grevlex()))
    poly_ring = poly_ring->with_order(MonomialOrder::grevlex());
  for (auto& r : relations) {
    if (r.is_zero()) throw Error(ErrorKind::InvalidArgument, "relation is zero");
    r = r.in_ring(poly_ring);
    require_homogeneous(r, "relation " + to_string(r));
  }
  return RingHandle(new RingPresentation(std::move(poly_ring), std::move(relations)));
}

RingHandle RingPresentation::polynomial_ring(std::uint32_t p, const std::vector<std::string>& names) {
  return make(PolyRing::make(p, names), {});
}

Polynomial RingPresentation::variable(const std::string& name) const {
  int i = ring_->index_of(name);
  if (i < 0) throw Error(ErrorKind::UnknownName, "unknown variable '" + name + "'");
  return variable(static_cast<std::size_t>(i));
}

std::vector<Polynomial> RingPresentation::variables() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < nvars(); ++i) out.push_back(variable(i));
  return out;
}

bool RingPresentation::same_as(const RingPresentation& other) const {
  return this == &other ||
         (ring_->same_variables(*other.ring_) && relations_ == other.relations_);
}

}  // namespace frobsat
