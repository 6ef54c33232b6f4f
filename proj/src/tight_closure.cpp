#include "frobsat/tight_closure.hpp"

#include <algorithm>

namespace frobsat {

namespace {

Polynomial derivative(const Polynomial& f, std::size_t var) {
  const auto& S = f.ring();
  const auto& F = S->field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Coeff c = F.mul(t.coeff, F.from_int(e));
    if (c == 0) continue;
    terms.push_back({t.mono / Monomial::variable(var, 1), c});
  }
  return Polynomial::from_terms(S, std::move(terms));
}

bool zero_in_ring(const RingHandle& ring, const Polynomial& f) {
  return Ideal::zero(ring).groebner().normal_form(f).is_zero();
}

void require_form(const Polynomial& f, const char* what) {
  if (!f.is_zero()) require_homogeneous(f, what);
}

}  // namespace

const char* to_string(TcStatus s) {
  switch (s) {
    case TcStatus::InIdeal: return "InIdeal";
    case TcStatus::FrobeniusClosure: return "FrobeniusClosure";
    case TcStatus::EvidenceInStar: return "EvidenceInStar";
    case TcStatus::NotInStarIfTestElement: return "NotInStarIfTestElement";
    case TcStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

TcVerdict frobenius_closure_test(const Polynomial& f, const Ideal& ideal, int e_max) {
  require_form(f, "f");
  if (e_max < 0) throw Error(ErrorKind::InvalidArgument, "e_max must be nonnegative");
  TcVerdict v{f, ideal, std::nullopt, e_max};
  if (ideal.contains(f)) {
    v.status = TcStatus::InIdeal;
    return v;
  }
  const std::uint64_t p = ideal.ring()->characteristic();
  std::uint64_t q = 1;
  for (int e = 1; e <= e_max; ++e) {
    q *= p;
    if (frobenius_power(ideal, q).contains(frobenius_pow(f, q))) {
      v.status = TcStatus::FrobeniusClosure;
      v.exponent = e;
      return v;
    }
  }
  return v;
}

std::vector<Polynomial> jacobian_test_candidates(const RingHandle& ring) {
  if (ring->is_polynomial_ring()) return {ring->one()};
  std::vector<Polynomial> out;
  for (const auto& rel : ring->relations())
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      Polynomial d = derivative(rel, i);
      if (!d.is_zero() && !zero_in_ring(ring, d)) out.push_back(std::move(d));
    }
  if (out.empty()) throw Error(ErrorKind::NoCandidates, "every partial derivative of the relations vanishes in R");
  return out;
}

Polynomial default_test_candidate(const RingHandle& ring) {
  auto cands = jacobian_test_candidates(ring);
  return *std::min_element(cands.begin(), cands.end(), [](const Polynomial& a, const Polynomial& b) {
    return *a.degree() < *b.degree();
  });
}

TcVerdict tc_evidence(const Polynomial& f, const Ideal& ideal, const Polynomial& c, int e_max) {
  require_form(f, "f");
  if (c.is_zero() || zero_in_ring(ideal.ring(), c)) throw Error(ErrorKind::InvalidArgument, "c is zero in R");
  require_homogeneous(c, "c");
  if (e_max < 1) throw Error(ErrorKind::InvalidArgument, "e_max must be at least 1");
  TcVerdict v{f, ideal, c, e_max};
  const std::uint64_t p = ideal.ring()->characteristic();
  std::uint64_t q = 1;
  for (int e = 1; e <= e_max; ++e) {
    q *= p;
    if (!frobenius_power(ideal, q).contains(c * frobenius_pow(f, q))) {
      v.status = TcStatus::NotInStarIfTestElement;
      v.exponent = e;
      return v;
    }
  }
  v.status = TcStatus::EvidenceInStar;
  v.exponent = e_max;
  return v;
}

LcStarReport lcstar_scan_heuristic(const Ideal& ideal, const Polynomial& c, const std::vector<std::uint64_t>& q_list) {
  if (c.is_zero() || zero_in_ring(ideal.ring(), c)) throw Error(ErrorKind::InvalidArgument, "c is zero in R");
  require_homogeneous(c, "c");
  if (q_list.empty()) throw Error(ErrorKind::InvalidArgument, "q list is empty");
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "scan of the unit ideal");
  LcStarReport rep{.c = c};
  std::vector<std::pair<std::uint64_t, long>> table;
  for (std::size_t i = 0; i < q_list.size(); ++i) {
    const std::uint64_t q = q_list[i];
    if (!is_power_of(q, ideal.ring()->characteristic())) throw Error(ErrorKind::InvalidQ, "q is not a power of p");
    if (i && q <= q_list[i - 1]) throw Error(ErrorKind::InvalidArgument, "q list must be ascending");
    const Ideal iq = frobenius_power(ideal, q);
    LcStarRow row{q, colon(iq, c)};
    row.sandwich_ok = row.upper.contains(iq);
    if (!row.upper.is_unit()) {
      row.gap = saturation_gap(row.upper);
      row.gap->q = q;
      row.nu_star = row.gap->nu;
    }
    table.emplace_back(q, row.nu_star);
    rep.n_fit = std::max(rep.n_fit.value_or(0), (row.nu_star + static_cast<long>(q) - 1) / static_cast<long>(q));
    rep.rows.push_back(std::move(row));
  }
  rep.verdict = lc_verdict(table, false);
  return rep;
}

}  // namespace frobsat
