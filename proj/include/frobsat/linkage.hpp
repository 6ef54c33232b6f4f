#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobsat/lc_lab.hpp"

namespace frobsat {

struct LinkCertificate {
  Ideal input;
  long g = 0;                    // height(I)
  std::vector<Polynomial> x;     // g homogeneous elements of I
  Ideal link;                    // J = (x : I) + I
  long x_height = 0;
  std::optional<long> link_height;  // nullopt when J = (1)
  bool x_height_ok = false;      // height((x)) = g
  bool link_height_ok = false;   // height(J) >= g + 1, or J = (1)
  bool link_is_unit = false;
  std::uint64_t seed = 0;        // seed of the accepted draw
  int retries = 0;               // failed draws before it
  bool valid() const { return x_height_ok && link_height_ok; }
};

/// Thrown when every draw failed; carries the seeds that were tried.
class GenericityError : public Error {
 public:
  GenericityError(const std::string& what, std::vector<std::uint64_t> seeds)
      : Error(ErrorKind::GenericityFailure, what), seeds_(std::move(seeds)) {}
  const std::vector<std::uint64_t>& failed_seeds() const { return seeds_; }

 private:
  std::vector<std::uint64_t> seeds_;
};

/// z_j·y_j with random forms z_j so that every entry has the top degree.
/// Entries already at the top degree are returned unchanged.
std::vector<Polynomial> equalize_degrees(const RingHandle& ring, const std::vector<Polynomial>& gens,
                                         std::uint64_t seed);

/// Random nonzero-in-R form of degree d; nullopt when R_d = 0.
std::optional<Polynomial> random_nonzero_form(const RingHandle& ring, long d, std::mt19937_64& rng);

/// Draws g = height(I) random combinations of the equalized generators and
/// certifies them. Draw k uses seed + k; k runs up to max_retries.
LinkCertificate choose_generic_x(const Ideal& ideal, std::uint64_t seed, int max_retries = 20);

/// J = ((x) : I) + I. Throws InvalidElements unless x ⊆ I.
Ideal link_ideal(const Ideal& ideal, const std::vector<Polynomial>& x);

/// Certificate for user-supplied elements (no randomness).
LinkCertificate certify_link(const Ideal& ideal, const std::vector<Polynomial>& x);

struct Lemma34Report {
  std::uint64_t q = 0;
  Ideal lhs;   // ((x)^[q] : I^[q]) ∩ (I^[q])^sat
  Ideal rhs;   // (x)^[q]
  bool equal = false;
  std::vector<Polynomial> witnesses;  // generators of lhs outside rhs
};

/// Exact check of ((x)^[q] : I^[q]) ∩ (I^[q])^sat = (x)^[q]. Needs the
/// Cohen–Macaulay assertion; throws InvalidCertificate unless x ⊆ I and
/// height((x)) = height(I).
Lemma34Report lemma34_cm_check(const Ideal& ideal, const std::vector<Polynomial>& x, std::uint64_t q,
                               bool cm_asserted);

struct ChainStep {
  LinkCertificate certificate;
  long dim_before = 0;
  std::optional<long> dim_after;  // nullopt when J = (1)
  bool dimension_dropped = false;
};

struct ChainReport {
  std::vector<ChainStep> steps;
  Ideal terminal;
  std::optional<long> terminal_dimension;
  std::string stop_reason;  // dim<=1 | unit | max-steps | no-drop
  std::optional<LcReport> terminal_scan;
};

/// Thrown when a step cannot find generic elements; carries the chain so far.
class ChainError : public GenericityError {
 public:
  ChainError(const GenericityError& cause, ChainReport partial)
      : GenericityError(cause.what(), cause.failed_seeds()), partial_(std::move(partial)) {}
  const ChainReport& partial() const { return partial_; }

 private:
  ChainReport partial_;
};

/// Links I ← J while dim R/I >= 2. Step k draws with seed + k·(max_retries+1).
ChainReport reduction_chain(const Ideal& ideal, std::uint64_t seed, int max_steps,
                            const std::vector<std::uint64_t>& q_list, int max_retries = 20,
                            ScanOptions options = {});

}  // namespace frobsat
