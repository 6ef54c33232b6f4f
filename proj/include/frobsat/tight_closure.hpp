#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobsat/lc_lab.hpp"

namespace frobsat {

enum class TcStatus { InIdeal, FrobeniusClosure, EvidenceInStar, NotInStarIfTestElement, Inconclusive };
const char* to_string(TcStatus s);

struct TcVerdict {
  Polynomial f;
  Ideal ideal;
  std::optional<Polynomial> c;  // absent for the Frobenius closure test
  int e_max = 0;
  TcStatus status = TcStatus::Inconclusive;
  int exponent = 0;  // witnessing e; 0 for InIdeal and Inconclusive
};

/// InIdeal if f ∈ I, else the least e <= e_max with f^{p^e} ∈ I^[p^e], else Inconclusive.
TcVerdict frobenius_closure_test(const Polynomial& f, const Ideal& ideal, int e_max);

/// Partial derivatives of the relations that are nonzero in R; {1} for a
/// polynomial ring. Whether they lie in R° is the caller's assertion.
std::vector<Polynomial> jacobian_test_candidates(const RingHandle& ring);

/// Lowest-degree candidate, first in order on ties.
Polynomial default_test_candidate(const RingHandle& ring);

/// c·f^{p^e} ∈ I^[p^e] for e = 1..e_max.
TcVerdict tc_evidence(const Polynomial& f, const Ideal& ideal, const Polynomial& c, int e_max);

struct LcStarRow {
  std::uint64_t q = 0;
  Ideal upper;            // U_q = I^[q] : c
  bool sandwich_ok = false;  // I^[q] ⊆ U_q
  long nu_star = 0;
  std::optional<SaturationGap> gap;  // absent when U_q = (1)
};

struct LcStarReport {
  std::string label = "HEURISTIC";
  std::string chain = "I^[q] ⊆ (I^[q])^* ⊆ U_q = I^[q] : c (c a test element)";
  Polynomial c;
  std::vector<LcStarRow> rows;
  std::optional<long> n_fit;
  LcVerdict verdict = LcVerdict::Inconclusive;
};

/// Saturation-gap scan of the upper approximation U_q = I^[q] : c.
LcStarReport lcstar_scan_heuristic(const Ideal& ideal, const Polynomial& c, const std::vector<std::uint64_t>& q_list);

}  // namespace frobsat
