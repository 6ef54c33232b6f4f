#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frobsat/ideal.hpp"

namespace frobsat {

/// A ring, named ideals and elements, user assertions and scan defaults, as
/// read from a line-oriented session file.
struct Session {
  std::uint32_t characteristic = 0;
  std::vector<RingPresentation::Variable> variables;
  RingHandle ring;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
  std::vector<std::pair<std::string, Polynomial>> elements;
  std::set<std::string> assertions;  // equidim, cm, domain
  std::optional<std::vector<std::uint64_t>> q_list;
  std::optional<long> cap;
  std::optional<std::uint64_t> seed;

  bool asserts(const std::string& what) const { return assertions.count(what) > 0; }
  /// Throws UnknownName.
  Ideal ideal(const std::string& name) const;
  const std::vector<Polynomial>& ideal_generators(const std::string& name) const;
  const Polynomial& element(const std::string& name) const;
};

/// Grammar, one directive per line, `#` starts a comment:
///   char <p> | vars <name>:<weight> ... | rel <poly> | ideal <N> = <poly>, ...
///   elem <N> = <poly> | assert equidim|cm|domain | qlist q1,q2,... | cap <n> | seed <n>
/// Errors carry "line L, column C".
Session parse_session(const std::string& text);
std::string print_session(const Session& s);
bool operator==(const Session& a, const Session& b);

/// "2,4,8" -> {2, 4, 8}.
std::vector<std::uint64_t> parse_q_list(const std::string& text);

}  // namespace frobsat
