#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobsat/session.hpp"
#include "json.hpp"

namespace frobsat {

inline constexpr const char* kToolVersion = "0.1.0";

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"lc-scan", "nu",   "lemma21", "lemma22", "koszul", "prop31", "thm23",
                                              "link",    "chain", "lemma34", "tc",      "fc",     "lcstar"};
  return names;
}

struct CommandFlags {
  std::optional<std::string> ideal;
  std::optional<std::string> elem;
  std::optional<std::vector<std::uint64_t>> q;
  std::optional<long> cap;
  std::optional<std::uint64_t> seed;
  std::optional<int> emax;
  std::optional<std::string> c;  // element name or "auto"
  std::optional<long> nmax, mmax, lmax, window;
  std::optional<int> retries, steps;
  std::vector<std::string> x;    // element names for link / lemma34
  std::optional<long> budget_ms;  // per q, for lc-scan
  bool timings = false;
};

/// Runs one command against a session and returns the report tree. Throws
/// Error for input and validation problems; mathematical outcomes such as
/// "fail" or "inconclusive" are part of the report.
nlohmann::json run_command(const Session& session, const std::string& command, const CommandFlags& flags);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize_report(const nlohmann::json& report);

/// Writes to stdout when path is empty; files are replaced atomically.
void write_report(const nlohmann::json& report, const std::optional<std::string>& path);

/// Full command-line entry point; returns the process exit code.
int cli_main(int argc, char** argv);

}  // namespace frobsat
