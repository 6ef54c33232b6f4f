#include "frobsat/linkage.hpp"

#include <algorithm>
#include <numeric>

namespace frobsat {

namespace {

bool zero_in_ring(const RingHandle& ring, const Polynomial& f) {
  return Ideal::zero(ring).groebner().normal_form(f).is_zero();
}

Coeff draw(std::mt19937_64& rng, std::uint32_t p) { return static_cast<Coeff>(rng() % p); }

// height((x)) as a plain number; the unit ideal counts as "infinitely high"
std::optional<long> height_or_unit(const Ideal& a) {
  if (a.is_unit()) return std::nullopt;
  return height(a);
}

LinkCertificate certify(const Ideal& ideal, long g, std::vector<Polynomial> x, Ideal link) {
  LinkCertificate cert{ideal, g, std::move(x), std::move(link)};
  Ideal xi(ideal.ring(), cert.x);
  cert.x_height = xi.is_unit() ? -1 : height(xi);
  cert.x_height_ok = cert.x_height == g;
  cert.link_height = height_or_unit(cert.link);
  cert.link_is_unit = !cert.link_height;
  cert.link_height_ok = cert.link_is_unit || *cert.link_height >= g + 1;
  return cert;
}

}  // namespace

std::optional<Polynomial> random_nonzero_form(const RingHandle& ring, long d, std::mt19937_64& rng) {
  const auto& S = ring->poly_ring();
  auto monos = standard_monomials(Ideal::zero(ring), d);
  if (monos.empty()) return std::nullopt;
  const std::uint32_t p = ring->characteristic();
  // standard monomials are independent in R, so any nonzero coefficient vector works
  for (;;) {
    std::vector<Term> terms;
    for (const auto& m : monos)
      if (Coeff c = draw(rng, p)) terms.push_back({m, c});
    if (!terms.empty()) return Polynomial::from_terms(S, std::move(terms));
  }
}

std::vector<Polynomial> equalize_degrees(const RingHandle& ring, const std::vector<Polynomial>& gens,
                                         std::uint64_t seed) {
  if (gens.empty()) return {};
  std::vector<long> deg;
  for (const auto& f : gens) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot equalize a zero generator");
    require_homogeneous(f, "generator");
    deg.push_back(*f.degree());
  }
  const long top = *std::max_element(deg.begin(), deg.end());
  const auto& w = ring->poly_ring()->weights();
  const long span = std::accumulate(w.begin(), w.end(), 1L, [](long a, int b) { return std::lcm(a, static_cast<long>(b)); });
  auto reachable = [&](long target) {
    return std::all_of(deg.begin(), deg.end(), [&](long d) {
      return d == target || !standard_monomials(Ideal::zero(ring), target - d).empty();
    });
  };
  long target = top;
  while (!reachable(target)) {
    if (target > top + span) throw Error(ErrorKind::InvalidArgument, "no common degree for the generators");
    ++target;
  }
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (deg[j] == target) {
      out.push_back(gens[j]);
      continue;
    }
    // z_j y_j may vanish in R when R is not a domain; redraw a few times
    std::optional<Polynomial> prod;
    for (int attempt = 0; attempt < 16 && !prod; ++attempt) {
      Polynomial cand = *random_nonzero_form(ring, target - deg[j], rng) * gens[j];
      if (!zero_in_ring(ring, cand)) prod = std::move(cand);
    }
    if (!prod) throw Error(ErrorKind::InvalidArgument, "generator " + to_string(gens[j]) + " is killed by random forms");
    out.push_back(std::move(*prod));
  }
  return out;
}

Ideal link_ideal(const Ideal& ideal, const std::vector<Polynomial>& x) {
  for (const auto& f : x) {
    if (f.is_zero() || !f.is_homogeneous()) throw Error(ErrorKind::InvalidElements, "elements must be nonzero forms");
    if (!ideal.contains(f)) throw Error(ErrorKind::InvalidElements, to_string(f) + " is not in I");
  }
  return colon(Ideal(ideal.ring(), x), ideal) + ideal;
}

LinkCertificate certify_link(const Ideal& ideal, const std::vector<Polynomial>& x) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "cannot link the unit ideal");
  return certify(ideal, height(ideal), x, link_ideal(ideal, x));
}

LinkCertificate choose_generic_x(const Ideal& ideal, std::uint64_t seed, int max_retries) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "cannot link the unit ideal");
  if (ideal.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot link the zero ideal");
  const long g = height(ideal);
  const auto& ring = ideal.ring();
  const std::uint32_t p = ring->characteristic();
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.gens())
    if (!zero_in_ring(ring, f)) gens.push_back(f);
  std::vector<std::uint64_t> failed;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    std::vector<Polynomial> eq = equalize_degrees(ring, gens, s);
    std::mt19937_64 rng(s ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Polynomial> x;
    for (long i = 0; i < g; ++i) {
      Polynomial comb(ring->poly_ring());
      for (const auto& e : eq) comb = comb + e.scaled(draw(rng, p));
      x.push_back(std::move(comb));
    }
    if (std::any_of(x.begin(), x.end(), [&](const Polynomial& f) { return zero_in_ring(ring, f); })) {
      failed.push_back(s);
      continue;
    }
    LinkCertificate cert = certify(ideal, g, x, link_ideal(ideal, x));
    if (cert.valid()) {
      cert.seed = s;
      cert.retries = attempt;
      return cert;
    }
    failed.push_back(s);
  }
  std::string msg = "no generic elements found for " + to_string(ideal) + "; seeds tried:";
  for (auto s : failed) msg += " " + std::to_string(s);
  throw GenericityError(msg, failed);
}

Lemma34Report lemma34_cm_check(const Ideal& ideal, const std::vector<Polynomial>& x, std::uint64_t q,
                               bool cm_asserted) {
  if (!cm_asserted) throw Error(ErrorKind::MissingAssertion, "the check needs R asserted Cohen-Macaulay (assert cm)");
  if (!is_power_of(q, ideal.ring()->characteristic())) throw Error(ErrorKind::InvalidQ, "q is not a power of p");
  if (ideal.is_unit() || x.empty()) throw Error(ErrorKind::InvalidCertificate, "need a proper ideal and elements");
  for (const auto& f : x)
    if (f.is_zero() || !f.is_homogeneous() || !ideal.contains(f))
      throw Error(ErrorKind::InvalidCertificate, to_string(f) + " is not a form in I");
  const Ideal xi(ideal.ring(), x);
  if (xi.is_unit() || height(xi) != height(ideal))
    throw Error(ErrorKind::InvalidCertificate, "height((x)) differs from height(I)");
  const Ideal iq = frobenius_power(ideal, q);
  Lemma34Report rep{q, intersection(colon(frobenius_power(xi, q), iq), saturate_irrelevant(iq)),
                    frobenius_power(xi, q), false, {}};
  rep.equal = rep.lhs == rep.rhs;
  if (!rep.equal)
    for (const auto& f : rep.lhs.groebner().basis())
      if (!rep.rhs.contains(f)) rep.witnesses.push_back(f);
  return rep;
}

ChainReport reduction_chain(const Ideal& ideal, std::uint64_t seed, int max_steps,
                            const std::vector<std::uint64_t>& q_list, int max_retries, ScanOptions options) {
  ChainReport rep{{}, ideal, dimension(ideal), "", std::nullopt};
  const std::uint64_t stride = static_cast<std::uint64_t>(max_retries) + 1;
  for (int k = 0;; ++k) {
    if (!rep.terminal_dimension) {
      rep.stop_reason = "unit";
      break;
    }
    if (*rep.terminal_dimension <= 1) {
      rep.stop_reason = "dim<=1";
      break;
    }
    if (k >= max_steps) {
      rep.stop_reason = "max-steps";
      break;
    }
    LinkCertificate cert = [&] {
      try {
        return choose_generic_x(rep.terminal, seed + static_cast<std::uint64_t>(k) * stride, max_retries);
      } catch (const GenericityError& e) {
        throw ChainError(e, rep);
      }
    }();
    ChainStep step{cert, *rep.terminal_dimension, dimension(cert.link), false};
    step.dimension_dropped = !step.dim_after || *step.dim_after < step.dim_before;
    rep.terminal = cert.link;
    rep.terminal_dimension = step.dim_after;
    rep.steps.push_back(std::move(step));
    if (!rep.steps.back().dimension_dropped) {
      rep.stop_reason = "no-drop";
      break;
    }
  }
  if (rep.terminal_dimension && !rep.terminal.is_zero())
    rep.terminal_scan = lc_scan(rep.terminal, q_list, options);
  return rep;
}

}  // namespace frobsat
