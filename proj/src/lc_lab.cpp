#include "frobsat/lc_lab.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "frobsat/budget.hpp"

namespace frobsat {

namespace {

/// Monomial generators of R_{>=n}.
std::vector<Monomial> truncation_generators(const PolyRing& ring, long n) {
  if (n <= 0) return {Monomial{}};
  const long wmax = *std::max_element(ring.weights().begin(), ring.weights().end());
  std::vector<Monomial> out;
  for (long d = n; d < n + wmax; ++d) {
    auto part = monomials_of_degree(ring, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }

void require_q(const RingHandle& ring, std::uint64_t q) {
  if (!is_power_of(q, ring->characteristic()))
    throw Error(ErrorKind::InvalidQ,
                std::to_string(q) + " is not a power of " + std::to_string(ring->characteristic()));
}

}  // namespace

const char* to_string(LcVerdict v) {
  switch (v) {
    case LcVerdict::ConsistentWithLC: return "consistent-with-LC";
    case LcVerdict::GrowthDetected: return "growth-detected";
    case LcVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

SaturationGap saturation_gap(const Ideal& a) {
  if (a.is_unit()) throw Error(ErrorKind::UnitIdeal, "saturation gap of the unit ideal");
  SaturationGap gap{0, a, saturate_irrelevant(a), Ideal::unit(a.ring()), 0, {}};
  if (gap.saturation == a) return gap;
  gap.annihilator = colon(a, gap.saturation);
  gap.nu = truncation_bound(gap.annihilator);
  // gap vanishes from degree ν + (max generator degree of A^sat) on
  long top = 0;
  for (const auto& g : gap.saturation.groebner().basis()) top = std::max(top, g.max_degree());
  for (long d = 0; d < gap.nu + top; ++d) {
    std::size_t lo = standard_monomials(a, d).size();
    std::size_t hi = standard_monomials(gap.saturation, d).size();
    gap.gap_dims.push_back(lo - hi);
  }
  while (!gap.gap_dims.empty() && gap.gap_dims.back() == 0) gap.gap_dims.pop_back();
  return gap;
}

SaturationGap nu_gap(const Ideal& ideal, std::uint64_t q) {
  require_q(ideal.ring(), q);
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "nu is undefined for the unit ideal");
  SaturationGap gap = saturation_gap(frobenius_power(ideal, q));
  gap.q = q;
  return gap;
}

long nu(const Ideal& ideal, std::uint64_t q) { return nu_gap(ideal, q).nu; }

bool verify_nu(const SaturationGap& gap) {
  const auto& ring = *gap.frobenius.ring()->poly_ring();
  const auto& sat = gap.saturation.gens();
  const auto& A = gap.frobenius;
  for (const auto& u : truncation_generators(ring, gap.nu))
    for (const auto& s : sat)
      if (!A.contains(s.times_term(u, 1))) return false;
  if (gap.nu == 0) return true;
  for (const auto& u : truncation_generators(ring, gap.nu - 1))
    for (const auto& s : sat)
      if (!A.contains(s.times_term(u, 1))) return true;
  return false;
}

LcVerdict lc_verdict(const std::vector<std::pair<std::uint64_t, long>>& table, bool partial) {
  if (partial || table.size() < 2) return LcVerdict::Inconclusive;
  bool strictly_increasing = true;
  for (std::size_t i = 1; i < table.size(); ++i) {
    long prev = ceil_div(table[i - 1].second, static_cast<long>(table[i - 1].first));
    long cur = ceil_div(table[i].second, static_cast<long>(table[i].first));
    if (cur <= prev) strictly_increasing = false;
  }
  return strictly_increasing ? LcVerdict::GrowthDetected : LcVerdict::ConsistentWithLC;
}

LcReport lc_scan(const Ideal& ideal, const std::vector<std::uint64_t>& q_list, ScanOptions options) {
  if (q_list.empty()) throw Error(ErrorKind::InvalidArgument, "lc_scan needs at least one q");
  for (std::size_t i = 0; i < q_list.size(); ++i) {
    require_q(ideal.ring(), q_list[i]);
    if (i && q_list[i] <= q_list[i - 1]) throw Error(ErrorKind::InvalidArgument, "q list must be ascending");
  }
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "lc_scan of the unit ideal");
  LcReport report;
  report.ideal = to_string(ideal);
  // rows are independent; assembled in q order
  std::vector<std::future<LcRow>> jobs;
  for (auto q : q_list)
    jobs.push_back(std::async(std::launch::async, [&ideal, q, options] {
      LcRow row;
      row.q = q;
      try {
        std::optional<ScopedBudget> budget;
        if (options.budget_per_q) budget.emplace(*options.budget_per_q);
        row.gap = nu_gap(ideal, q);
        row.completed = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
      }
      return row;
    }));
  std::vector<std::pair<std::uint64_t, long>> table;
  bool partial = false;
  for (auto& j : jobs) {
    LcRow row = j.get();
    if (row.completed) {
      table.emplace_back(row.q, row.gap->nu);
      long c = ceil_div(row.gap->nu, static_cast<long>(row.q));
      report.n_fit = std::max(report.n_fit.value_or(0), c);
    } else {
      partial = true;
    }
    report.rows.push_back(std::move(row));
  }
  report.verdict = lc_verdict(table, partial);
  return report;
}

std::vector<std::uint64_t> default_q_list(std::uint32_t p, int count) {
  std::vector<std::uint64_t> out;
  std::uint64_t q = p;
  for (int i = 0; i < count; ++i, q *= p) out.push_back(q);
  return out;
}

std::optional<long> lemma21_constant(const RingHandle& ring, long n_max, long m_max, long d_cap) {
  if (n_max <= 0 || m_max <= 0 || d_cap <= 0) throw Error(ErrorKind::InvalidArgument, "lemma21 caps must be positive");
  for (long L = 0; n_max + m_max + L <= d_cap; ++L) {
    bool ok = true;
    for (long N = 0; N <= n_max && ok; ++N)
      for (long M = 0; M <= m_max && ok; ++M) ok = product_containment(ring, N, M, N + M + L, d_cap);
    if (ok) return L;
  }
  return std::nullopt;
}

std::optional<Lemma22Result> lemma22_constants(const Ideal& j, const Polynomial& z,
                                               const std::vector<std::uint64_t>& q_list, long l_max, long n_max) {
  if (z.is_zero()) throw Error(ErrorKind::InvalidArgument, "z must be nonzero");
  require_homogeneous(z, "z");
  if (q_list.empty() || l_max < 1) throw Error(ErrorKind::InvalidArgument, "lemma22 needs q values and l_max >= 1");
  for (auto q : q_list) require_q(j.ring(), q);
  const Ideal jz = j + Ideal(j.ring(), {z});
  if (dimension(jz).value_or(0) != 0)
    throw Error(ErrorKind::NotMPrimary, "J + (z) is not m-primary");
  const long k = *z.degree();
  std::map<std::pair<std::uint64_t, long>, long> bound_cache;  // (q, N2·l) -> truncation bound
  auto bound = [&](std::uint64_t q, long power) {
    auto key = std::make_pair(q, power);
    auto it = bound_cache.find(key);
    if (it != bound_cache.end()) return it->second;
    Polynomial zp = pow(frobenius_pow(z, q), static_cast<unsigned>(power));
    long b = truncation_bound(frobenius_power(j, q) + Ideal(j.ring(), {zp}));
    bound_cache.emplace(key, b);
    return b;
  };
  // N2 is the major key: the z-power term is the one that grows with l
  for (long n2 = 1; n2 <= n_max; ++n2)
    for (long n1 = 0; n1 <= n_max; ++n1) {
      bool ok = true;
      for (auto q : q_list) {
        for (long l = 1; l <= l_max && ok; ++l) {
          long lhs = n1 * static_cast<long>(q) + n2 * l * k * static_cast<long>(q);
          ok = lhs >= bound(q, n2 * l);
        }
        if (!ok) break;
      }
      if (ok) return Lemma22Result{n1, n2};
    }
  return std::nullopt;
}

Prop31Report prop31_verify(const RingHandle& ring, const std::vector<Polynomial>& params, const Polynomial& z,
                           const std::vector<std::uint64_t>& q_list, long cap, long window,
                           bool equidimensional_asserted) {
  Prop31Report rep;
  const long n = *dimension(Ideal::zero(ring));
  rep.hypotheses.push_back({"equidimensional", equidimensional_asserted,
                            equidimensional_asserted ? "user assertion recorded" : "user assertion required"});
  rep.hypotheses.push_back({"parameter count", static_cast<long>(params.size()) == n - 1,
                            std::to_string(params.size()) + " parameters, dim R = " + std::to_string(n)});
  bool homogeneous = !z.is_zero() && z.is_homogeneous();
  for (const auto& p : params) homogeneous = homogeneous && !p.is_zero() && p.is_homogeneous();
  rep.hypotheses.push_back({"homogeneous elements", homogeneous, ""});
  if (homogeneous) {
    std::vector<Polynomial> all = params;
    all.push_back(z);
    auto dim = dimension(Ideal(ring, all));
    rep.hypotheses.push_back({"J + (z) m-primary", dim.value_or(0) == 0,
                              dim ? "dim R/(J, z) = " + std::to_string(*dim) : "unit ideal"});
  }
  rep.hypotheses_ok = std::all_of(rep.hypotheses.begin(), rep.hypotheses.end(),
                                  [](const HypothesisCheck& h) { return h.pass; });
  if (!rep.hypotheses_ok) {
    rep.outcome = "hypothesis-violation";
    return rep;
  }
  for (auto q : q_list) require_q(ring, q);
  std::vector<Polynomial> elements = params;
  elements.push_back(z);
  rep.koszul = koszul_h1_top_degree(ring, elements, cap, window);
  for (const auto& p : params) rep.d_sum += *p.degree();
  if (!rep.koszul->stable) {
    rep.outcome = "inconclusive";
    return rep;
  }
  rep.vanishing_from = rep.koszul->top ? *rep.koszul->top + 1 : 0;
  const Ideal J(ring, params);
  bool all_pass = true;
  for (auto q : q_list) {
    Prop31Row row;
    row.q = q;
    row.nu = nu(J, q);
    row.bound = (rep.d_sum + *rep.vanishing_from) * static_cast<long>(q);
    row.pass = row.nu <= row.bound;
    all_pass = all_pass && row.pass;
    rep.rows.push_back(row);
  }
  rep.outcome = all_pass ? "pass" : "fail";
  return rep;
}

Thm23Report thm23_verify(const Ideal& j, const Polynomial& y, const std::vector<std::uint64_t>& q_list,
                         ScanOptions options) {
  require_homogeneous(y, "y");
  if (y.is_zero()) throw Error(ErrorKind::InvalidArgument, "y must be nonzero");
  Thm23Report rep;
  rep.ring_dimension = *dimension(Ideal::zero(j.ring()));
  Ideal jy = colon(j, y);
  rep.colon_ideal = to_string(jy);
  if (!jy.is_unit()) rep.colon_height = height(jy);
  rep.hypothesis_ok = !rep.colon_height || *rep.colon_height >= rep.ring_dimension - 1;
  rep.scan_j = lc_scan(j, q_list, options);
  rep.scan_i = lc_scan(j + Ideal(j.ring(), {y}), q_list, options);
  rep.conclusion_consistent = rep.scan_j.verdict != LcVerdict::ConsistentWithLC ||
                              rep.scan_i.verdict == LcVerdict::ConsistentWithLC;
  return rep;
}

}  // namespace frobsat
