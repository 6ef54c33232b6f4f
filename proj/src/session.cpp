#include "frobsat/session.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <sstream>

namespace frobsat {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class Int>
Int parse_int(const std::string& text, const std::string& what) {
  Int v{};
  auto t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw Error(ErrorKind::Syntax, "expected a nonnegative integer for " + what + ", got '" + t + "'");
  return v;
}

struct Line {
  std::size_t number;
  std::string text;  // comment stripped, untrimmed
};

[[noreturn]] void fail_at(const Line& line, std::size_t column, const Error& e) {
  throw Error(e.kind(), "line " + std::to_string(line.number) + ", column " + std::to_string(column) + ": " + e.what());
}

// Parses text found at byte offset `offset` of the line; syntax errors get absolute columns.
Polynomial parse_at(const Line& line, std::size_t offset, const std::string& text, const PolyRingPtr& ring) {
  try {
    return parse_polynomial(text, ring);
  } catch (const Error& e) {
    static const std::regex col(R"(^column (\d+): (.*)$)");
    std::cmatch m;
    std::string what = e.what();
    if (e.kind() == ErrorKind::Syntax && std::regex_match(what.c_str(), m, col))
      throw Error(e.kind(), "line " + std::to_string(line.number) + ", column " +
                                std::to_string(offset + std::stoul(m[1].str())) + ": " + m[2].str());
    fail_at(line, offset + 1, e);
  }
}

void check_name(const Line& line, const std::string& name, std::set<std::string>& taken) {
  if (!valid_variable_name(name))
    throw Error(ErrorKind::Syntax, "line " + std::to_string(line.number) + ": invalid name '" + name + "'");
  if (!taken.insert(name).second)
    throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(line.number) + ": name '" + name + "' defined twice");
}

}  // namespace

std::vector<std::uint64_t> parse_q_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int<std::uint64_t>(item, "q"));
  if (out.empty()) throw Error(ErrorKind::Syntax, "empty q list");
  return out;
}

Ideal Session::ideal(const std::string& name) const { return Ideal(ring, ideal_generators(name)); }

const std::vector<Polynomial>& Session::ideal_generators(const std::string& name) const {
  for (const auto& [n, gens] : ideals)
    if (n == name) return gens;
  throw Error(ErrorKind::UnknownName, "no ideal named '" + name + "'");
}

const Polynomial& Session::element(const std::string& name) const {
  for (const auto& [n, f] : elements)
    if (n == name) return f;
  throw Error(ErrorKind::UnknownName, "no element named '" + name + "'");
}

Session parse_session(const std::string& text) {
  std::vector<Line> lines;
  {
    std::stringstream ss(text);
    std::string raw;
    for (std::size_t n = 1; std::getline(ss, raw); ++n) {
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.resize(hash);
      if (!trim(raw).empty()) lines.push_back({n, raw});
    }
  }
  auto keyword = [](const Line& l) {
    auto t = trim(l.text);
    return t.substr(0, t.find_first_of(" \t"));
  };
  auto rest_offset = [](const Line& l) {
    auto b = l.text.find_first_not_of(" \t");
    auto e = l.text.find_first_of(" \t", b);
    return e == std::string::npos ? l.text.size() : e;
  };

  Session s;
  bool have_char = false, have_vars = false;
  std::vector<const Line*> rels, defs;
  // ring directives first, so definitions may appear in any order
  for (const auto& l : lines) {
    const std::string kw = keyword(l);
    const std::string rest = l.text.substr(rest_offset(l));
    try {
      if (kw == "char") {
        if (have_char) throw Error(ErrorKind::Syntax, "char given twice");
        auto p = parse_int<std::uint64_t>(rest, "char");
        if (!is_prime(p) || p >= (1ULL << 31)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime below 2^31");
        s.characteristic = static_cast<std::uint32_t>(p);
        have_char = true;
      } else if (kw == "vars") {
        if (have_vars) throw Error(ErrorKind::Syntax, "vars given twice");
        std::stringstream ss(rest);
        std::string item;
        while (ss >> item) {
          auto colon = item.find(':');
          RingPresentation::Variable v{item.substr(0, colon), 1};
          if (colon != std::string::npos) v.weight = parse_int<int>(item.substr(colon + 1), "weight of " + v.name);
          s.variables.push_back(v);
        }
        if (s.variables.empty()) throw Error(ErrorKind::Syntax, "vars needs at least one variable");
        have_vars = true;
      } else if (kw == "rel") {
        rels.push_back(&l);
      } else if (kw == "ideal" || kw == "elem") {
        defs.push_back(&l);
      } else if (kw == "assert") {
        auto what = trim(rest);
        if (what != "equidim" && what != "cm" && what != "domain")
          throw Error(ErrorKind::Syntax, "unknown assertion '" + what + "'");
        s.assertions.insert(what);
      } else if (kw == "qlist") {
        if (s.q_list) throw Error(ErrorKind::Syntax, "qlist given twice");
        s.q_list = parse_q_list(trim(rest));
      } else if (kw == "cap") {
        if (s.cap) throw Error(ErrorKind::Syntax, "cap given twice");
        s.cap = parse_int<long>(rest, "cap");
      } else if (kw == "seed") {
        if (s.seed) throw Error(ErrorKind::Syntax, "seed given twice");
        s.seed = parse_int<std::uint64_t>(rest, "seed");
      } else {
        throw Error(ErrorKind::Syntax, "unknown directive '" + kw + "'");
      }
    } catch (const Error& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail_at(l, l.text.find_first_not_of(" \t") + 1, e);
    }
  }
  if (!have_char) throw Error(ErrorKind::Syntax, "missing 'char' directive");
  if (!have_vars) throw Error(ErrorKind::Syntax, "missing 'vars' directive");

  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& v : s.variables) {
    names.push_back(v.name);
    weights.push_back(v.weight);
  }
  for (auto w : weights)
    if (w <= 0) throw Error(ErrorKind::InvalidArgument, "variable weights must be positive");
  PolyRingPtr S = PolyRing::make(s.characteristic, names, weights);
  std::vector<Polynomial> relations;
  for (const Line* l : rels) {
    std::size_t off = rest_offset(*l);
    Polynomial f = parse_at(*l, off, l->text.substr(off), S);
    try {
      require_homogeneous(f, "relation");
    } catch (const Error& e) {
      fail_at(*l, off + 1, e);
    }
    relations.push_back(std::move(f));
  }
  s.ring = RingPresentation::make(S, relations);

  std::set<std::string> taken(names.begin(), names.end());
  static const std::regex def(R"(^\s*(ideal|elem)\s+(\S+)\s*=(.*)$)");
  for (const Line* l : defs) {
    std::smatch m;
    if (!std::regex_match(l->text, m, def))
      throw Error(ErrorKind::Syntax, "line " + std::to_string(l->number) + ": expected '" + keyword(*l) + " <name> = ...'");
    const std::string name = m[2].str();
    check_name(*l, name, taken);
    const std::size_t body = static_cast<std::size_t>(m.position(3));
    const std::string text_body = m[3].str();
    std::vector<Polynomial> polys;
    std::size_t start = 0;
    if (!trim(text_body).empty() || m[1] == "elem") {
      for (;;) {
        std::size_t comma = text_body.find(',', start);
        std::string piece = text_body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        Polynomial f = parse_at(*l, body + start, piece, S);
        try {
          require_homogeneous(f, m[1] == "elem" ? "element " + name : "generator of " + name);
        } catch (const Error& e) {
          fail_at(*l, body + start + piece.find_first_not_of(" \t") + 1, e);
        }
        polys.push_back(std::move(f));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    if (m[1] == "elem") {
      if (polys.size() != 1)
        throw Error(ErrorKind::Syntax, "line " + std::to_string(l->number) + ": elem takes one polynomial");
      s.elements.emplace_back(name, std::move(polys[0]));
    } else {
      s.ideals.emplace_back(name, std::move(polys));
    }
  }
  return s;
}

std::string print_session(const Session& s) {
  std::ostringstream out;
  out << "char " << s.characteristic << "\nvars";
  for (const auto& v : s.variables) out << ' ' << v.name << ':' << v.weight;
  out << '\n';
  for (const auto& r : s.ring->relations()) out << "rel " << to_string(r) << '\n';
  for (const auto& [name, gens] : s.ideals) {
    out << "ideal " << name << " =";
    for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ", " : " ") << to_string(gens[i]);
    out << '\n';
  }
  for (const auto& [name, f] : s.elements) out << "elem " << name << " = " << to_string(f) << '\n';
  for (const auto& a : s.assertions) out << "assert " << a << '\n';
  if (s.q_list) {
    out << "qlist ";
    for (std::size_t i = 0; i < s.q_list->size(); ++i) out << (i ? "," : "") << (*s.q_list)[i];
    out << '\n';
  }
  if (s.cap) out << "cap " << *s.cap << '\n';
  if (s.seed) out << "seed " << *s.seed << '\n';
  return out.str();
}

bool operator==(const Session& a, const Session& b) {
  auto same_polys = [](const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end(),
                      [](const Polynomial& f, const Polynomial& g) { return to_string(f) == to_string(g); });
  };
  if (a.characteristic != b.characteristic || a.variables.size() != b.variables.size()) return false;
  for (std::size_t i = 0; i < a.variables.size(); ++i)
    if (a.variables[i].name != b.variables[i].name || a.variables[i].weight != b.variables[i].weight) return false;
  if (!same_polys(a.ring->relations(), b.ring->relations())) return false;
  if (a.ideals.size() != b.ideals.size() || a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i)
    if (a.ideals[i].first != b.ideals[i].first || !same_polys(a.ideals[i].second, b.ideals[i].second)) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    if (a.elements[i].first != b.elements[i].first || to_string(a.elements[i].second) != to_string(b.elements[i].second))
      return false;
  return a.assertions == b.assertions && a.q_list == b.q_list && a.cap == b.cap && a.seed == b.seed;
}

}  // namespace frobsat
