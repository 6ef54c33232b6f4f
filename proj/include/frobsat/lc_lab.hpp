#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "frobsat/graded_linalg.hpp"

namespace frobsat {

/// A = I^[q], its saturation, and Ann = A : A^sat. H^0_m(R/A) is A^sat/A.
struct SaturationGap {
  std::uint64_t q = 0;
  Ideal frobenius;
  Ideal saturation;
  Ideal annihilator;
  long nu = 0;
  std::vector<std::size_t> gap_dims;  // dim (A^sat/A)_d for d = 0.. until it vanishes for good
};

/// ν for an arbitrary homogeneous proper ideal A (no Frobenius power taken):
/// least N with R_{>=N}·A^sat ⊆ A.
SaturationGap saturation_gap(const Ideal& a);

/// ν(q) = min{N : R_{>=N}·(I^[q])^sat ⊆ I^[q]}.
long nu(const Ideal& ideal, std::uint64_t q);
SaturationGap nu_gap(const Ideal& ideal, std::uint64_t q);

/// Re-checks R_{>=ν}·gens(A^sat) ⊆ A and, when ν > 0, finds a generator u of
/// R_{>=ν-1} and a generator s of A^sat with u·s outside A.
bool verify_nu(const SaturationGap& gap);

enum class LcVerdict { ConsistentWithLC, GrowthDetected, Inconclusive };
const char* to_string(LcVerdict v);

struct LcRow {
  std::uint64_t q = 0;
  bool completed = false;  // false when the wall-clock budget ran out
  std::optional<SaturationGap> gap;
};

struct LcReport {
  std::string ideal;
  std::vector<LcRow> rows;  // ascending q
  std::optional<long> n_fit;  // max over completed rows of ceil(ν(q)/q)
  LcVerdict verdict = LcVerdict::Inconclusive;
};

struct ScanOptions {
  std::optional<std::chrono::milliseconds> budget_per_q;
};

/// Tabulates ν over q_list. Verdict: growth-detected when ceil(ν(q)/q) strictly
/// increases along all (at least two) scanned q, consistent-with-LC otherwise;
/// inconclusive when fewer than two rows completed.
LcReport lc_scan(const Ideal& ideal, const std::vector<std::uint64_t>& q_list, ScanOptions options = {});

/// Verdict rule alone, over (q, ν) pairs.
LcVerdict lc_verdict(const std::vector<std::pair<std::uint64_t, long>>& table, bool partial);

/// First q_count powers of p, starting at p.
std::vector<std::uint64_t> default_q_list(std::uint32_t p, int count = 3);

/// Least L with R_{>=N+M+L} ⊆ R_{>=N}·R_{>=M} for all N <= n_max, M <= m_max,
/// checked up to degree d_cap; nullopt when no L fits below the cap.
std::optional<long> lemma21_constant(const RingHandle& ring, long n_max, long m_max, long d_cap);

struct Lemma22Result {
  long n1 = 0, n2 = 0;
};

/// Least (N1, N2) ordered by N2 first, then N1; N1 >= 0 and N2 >= 1, both <= n_max,
/// with R_{>=N1 q + N2 l k q} ⊆ J^[q] + (z^{N2 l q}) for all scanned q and
/// 1 <= l <= l_max (k = deg z). Throws NotMPrimary unless J + (z) is m-primary.
std::optional<Lemma22Result> lemma22_constants(const Ideal& j, const Polynomial& z,
                                               const std::vector<std::uint64_t>& q_list, long l_max,
                                               long n_max = 8);

struct HypothesisCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Prop31Row {
  std::uint64_t q = 0;
  long nu = 0;
  long bound = 0;
  bool pass = false;
};

struct Prop31Report {
  std::vector<HypothesisCheck> hypotheses;
  bool hypotheses_ok = false;
  std::optional<KoszulReport> koszul;
  long d_sum = 0;                         // D, sum of parameter degrees
  std::optional<long> vanishing_from;     // N: [H_1]_i = 0 for all i >= N
  std::vector<Prop31Row> rows;
  std::string outcome;                    // pass | fail | hypothesis-violation | inconclusive
};

/// Checks ν((params), q) <= (D + N)·q where N is the observed Koszul H_1
/// vanishing degree of params ∪ {z}.
Prop31Report prop31_verify(const RingHandle& ring, const std::vector<Polynomial>& params, const Polynomial& z,
                           const std::vector<std::uint64_t>& q_list, long cap, long window,
                           bool equidimensional_asserted);

struct Thm23Report {
  long ring_dimension = 0;
  std::optional<long> colon_height;  // nullopt when J : y is the unit ideal
  std::string colon_ideal;
  bool hypothesis_ok = false;
  LcReport scan_j;
  LcReport scan_i;
  bool conclusion_consistent = false;  // J consistent-with-LC implies I consistent-with-LC
};

Thm23Report thm23_verify(const Ideal& j, const Polynomial& y, const std::vector<std::uint64_t>& q_list,
                         ScanOptions options = {});

}  // namespace frobsat
