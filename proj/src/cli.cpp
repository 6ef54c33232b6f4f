#include "frobsat/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobsat/linkage.hpp"
#include "frobsat/tight_closure.hpp"

namespace frobsat {

using nlohmann::json;

namespace {

json to_json(const Ideal& a) { return to_string(a); }

json polys_json(const std::vector<Polynomial>& v) {
  json out = json::array();
  for (const auto& f : v) out.push_back(to_string(f));
  return out;
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json to_json(const SaturationGap& g) {
  return {{"q", g.q},
          {"nu", g.nu},
          {"frobenius", to_json(g.frobenius)},
          {"saturation", to_json(g.saturation)},
          {"annihilator", to_json(g.annihilator)},
          {"gap_dims", g.gap_dims}};
}

json to_json(const LcReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j = {{"q", row.q}, {"completed", row.completed}};
    if (row.gap) j["gap"] = to_json(*row.gap);
    rows.push_back(j);
  }
  return {{"ideal", r.ideal},
          {"rows", rows},
          {"n_fit", opt_json(r.n_fit)},
          {"verdict", to_string(r.verdict)},
          {"scope", "statement covers the scanned q only"}};
}

json to_json(const KoszulReport& k) {
  return {{"elements", polys_json(k.elements)}, {"degrees", k.degrees}, {"dims", k.dims},
          {"top", opt_json(k.top)}, {"cap", k.cap}, {"window", k.window}, {"stable", k.stable}};
}

json to_json(const LinkCertificate& c) {
  return {{"input", to_json(c.input)},
          {"g", c.g},
          {"x", polys_json(c.x)},
          {"link", to_json(c.link)},
          {"x_height", c.x_height},
          {"link_height", opt_json(c.link_height)},
          {"x_height_ok", c.x_height_ok},
          {"link_height_ok", c.link_height_ok},
          {"link_is_unit", c.link_is_unit},
          {"valid", c.valid()},
          {"seed", c.seed},
          {"retries", c.retries}};
}

json to_json(const ChainReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"certificate", to_json(s.certificate)},
                     {"dim_before", s.dim_before},
                     {"dim_after", opt_json(s.dim_after)},
                     {"dimension_dropped", s.dimension_dropped}});
  return {{"steps", steps},
          {"terminal", to_json(r.terminal)},
          {"terminal_dimension", opt_json(r.terminal_dimension)},
          {"stop_reason", r.stop_reason},
          {"terminal_scan", r.terminal_scan ? to_json(*r.terminal_scan) : json(nullptr)}};
}

json to_json(const TcVerdict& v) {
  return {{"f", to_string(v.f)},
          {"ideal", to_json(v.ideal)},
          {"c", v.c ? json(to_string(*v.c)) : json(nullptr)},
          {"e_max", v.e_max},
          {"status", to_string(v.status)},
          {"exponent", v.exponent}};
}

json ring_json(const Session& s) {
  json vars = json::array();
  for (const auto& v : s.variables) vars.push_back(v.name + ":" + std::to_string(v.weight));
  return {{"char", s.characteristic}, {"vars", vars}, {"relations", polys_json(s.ring->relations())}};
}

struct Context {
  const Session& s;
  const CommandFlags& f;
  json inputs = json::object();

  const std::string& need(const std::optional<std::string>& v, const char* flag) const {
    if (!v) throw Error(ErrorKind::InvalidArgument, std::string("missing ") + flag);
    return *v;
  }
  Ideal ideal() {
    const auto& name = need(f.ideal, "--ideal");
    Ideal a = s.ideal(name);
    inputs["ideal"] = {{"name", name}, {"value", to_json(a)}};
    return a;
  }
  std::vector<Polynomial> generators() {
    const auto& name = need(f.ideal, "--ideal");
    const auto& gens = s.ideal_generators(name);
    inputs["ideal"] = {{"name", name}, {"generators", polys_json(gens)}};
    return gens;
  }
  Polynomial elem(const char* key = "elem") {
    const auto& name = need(f.elem, "--elem");
    Polynomial e = s.element(name);
    inputs[key] = {{"name", name}, {"value", to_string(e)}};
    return e;
  }
  std::vector<std::uint64_t> qs() {
    std::vector<std::uint64_t> q = f.q ? *f.q : s.q_list ? *s.q_list : default_q_list(s.characteristic);
    for (auto v : q)
      if (!is_power_of(v, s.characteristic))
        throw Error(ErrorKind::InvalidQ, std::to_string(v) + " is not a power of " + std::to_string(s.characteristic));
    inputs["q"] = q;
    return q;
  }
  long cap(long fallback) {
    long c = f.cap ? *f.cap : s.cap ? *s.cap : fallback;
    inputs["cap"] = c;
    return c;
  }
  std::uint64_t seed() {
    std::uint64_t v = f.seed ? *f.seed : s.seed.value_or(0);
    inputs["seed"] = v;
    return v;
  }
  template <class T>
  T param(const std::optional<T>& v, T fallback, const char* key) {
    T out = v ? *v : fallback;
    inputs[key] = out;
    return out;
  }
  std::vector<Polynomial> x_elements() {
    std::vector<Polynomial> out;
    json names = json::array();
    for (const auto& n : f.x) {
      out.push_back(s.element(n));
      names.push_back(n);
    }
    inputs["x"] = {{"names", names}, {"values", polys_json(out)}};
    return out;
  }
  Polynomial test_candidate() {
    std::string choice = f.c.value_or("auto");
    Polynomial c = choice == "auto" ? default_test_candidate(s.ring) : s.element(choice);
    inputs["c"] = {{"choice", choice}, {"value", to_string(c)}};
    return c;
  }
};

json dispatch(Context& cx, const std::string& command) {
  const Session& s = cx.s;
  const CommandFlags& f = cx.f;
  if (command == "nu") {
    Ideal a = cx.ideal();
    json rows = json::array();
    for (auto q : cx.qs()) rows.push_back(to_json(nu_gap(a, q)));
    return {{"rows", rows}};
  }
  if (command == "lc-scan") {
    Ideal a = cx.ideal();
    auto q = cx.qs();
    ScanOptions opt;
    if (f.budget_ms) {
      opt.budget_per_q = std::chrono::milliseconds(*f.budget_ms);
      cx.inputs["budget_ms"] = *f.budget_ms;
    }
    return to_json(lc_scan(a, q, opt));
  }
  if (command == "lemma21") {
    long n = cx.param(f.nmax, 4L, "nmax"), m = cx.param(f.mmax, 4L, "mmax"), cap = cx.cap(20);
    auto L = lemma21_constant(s.ring, n, m, cap);
    return {{"L", opt_json(L)}, {"found", L.has_value()}, {"note", L ? "least L below the cap" : ">= cap"}};
  }
  if (command == "lemma22") {
    Ideal j = cx.ideal();
    Polynomial z = cx.elem("z");
    auto q = cx.qs();
    long l = cx.param(f.lmax, 2L, "lmax"), n = cx.param(f.nmax, 8L, "nmax");
    auto r = lemma22_constants(j, z, q, l, n);
    if (!r) return {{"found", false}};
    return {{"found", true}, {"n1", r->n1}, {"n2", r->n2}};
  }
  if (command == "koszul") {
    auto gens = cx.generators();
    long cap = cx.cap(10), window = cx.param(f.window, 3L, "window");
    return to_json(koszul_h1_top_degree(s.ring, gens, cap, window));
  }
  if (command == "prop31") {
    auto params = cx.generators();
    Polynomial z = cx.elem("z");
    auto q = cx.qs();
    long cap = cx.cap(10), window = cx.param(f.window, 3L, "window");
    auto r = prop31_verify(s.ring, params, z, q, cap, window, s.asserts("equidim"));
    json hyp = json::array();
    for (const auto& h : r.hypotheses) hyp.push_back({{"name", h.name}, {"pass", h.pass}, {"detail", h.detail}});
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"q", row.q}, {"nu", row.nu}, {"bound", row.bound}, {"pass", row.pass}});
    return {{"hypotheses", hyp},
            {"hypotheses_ok", r.hypotheses_ok},
            {"koszul", r.koszul ? to_json(*r.koszul) : json(nullptr)},
            {"d_sum", r.d_sum},
            {"vanishing_from", opt_json(r.vanishing_from)},
            {"rows", rows},
            {"outcome", r.outcome}};
  }
  if (command == "thm23") {
    Ideal j = cx.ideal();
    Polynomial y = cx.elem("y");
    auto r = thm23_verify(j, y, cx.qs());
    return {{"ring_dimension", r.ring_dimension},
            {"colon_height", opt_json(r.colon_height)},
            {"colon_ideal", r.colon_ideal},
            {"hypothesis_ok", r.hypothesis_ok},
            {"scan_j", to_json(r.scan_j)},
            {"scan_i", to_json(r.scan_i)},
            {"conclusion_consistent", r.conclusion_consistent}};
  }
  if (command == "link") {
    Ideal a = cx.ideal();
    if (!f.x.empty()) return to_json(certify_link(a, cx.x_elements()));
    return to_json(choose_generic_x(a, cx.seed(), cx.param(f.retries, 20, "retries")));
  }
  if (command == "chain") {
    Ideal a = cx.ideal();
    std::uint64_t seed = cx.seed();
    int steps = cx.param(f.steps, 8, "steps"), retries = cx.param(f.retries, 20, "retries");
    return to_json(reduction_chain(a, seed, steps, cx.qs(), retries));
  }
  if (command == "lemma34") {
    if (!s.asserts("cm")) throw Error(ErrorKind::MissingAssertion, "lemma34 requires 'assert cm' in the session");
    Ideal a = cx.ideal();
    std::vector<Polynomial> x;
    json cert = nullptr;
    if (!f.x.empty()) {
      x = cx.x_elements();
    } else {
      auto c = choose_generic_x(a, cx.seed(), cx.param(f.retries, 20, "retries"));
      x = c.x;
      cert = to_json(c);
    }
    json rows = json::array();
    for (auto q : cx.qs()) {
      auto r = lemma34_cm_check(a, x, q, true);
      rows.push_back({{"q", q}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"equal", r.equal},
                      {"witnesses", polys_json(r.witnesses)}});
    }
    return {{"x", polys_json(x)}, {"certificate", cert}, {"rows", rows}};
  }
  if (command == "tc") {
    Ideal a = cx.ideal();
    Polynomial e = cx.elem("f");
    Polynomial c = cx.test_candidate();
    json out = to_json(tc_evidence(e, a, c, cx.param(f.emax, 2, "emax")));
    out["domain_asserted"] = s.asserts("domain");
    out["note"] = "non-membership is certified only if c is a test element";
    return out;
  }
  if (command == "fc") {
    Ideal a = cx.ideal();
    Polynomial e = cx.elem("f");
    return to_json(frobenius_closure_test(e, a, cx.param(f.emax, 2, "emax")));
  }
  if (command == "lcstar") {
    Ideal a = cx.ideal();
    Polynomial c = cx.test_candidate();
    auto r = lcstar_scan_heuristic(a, c, cx.qs());
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"q", row.q}, {"upper", to_json(row.upper)}, {"sandwich_ok", row.sandwich_ok},
                      {"nu_star", row.nu_star}, {"gap", row.gap ? to_json(*row.gap) : json(nullptr)}});
    return {{"label", r.label}, {"chain", r.chain}, {"c", to_string(r.c)}, {"rows", rows},
            {"n_fit", opt_json(r.n_fit)}, {"verdict", to_string(r.verdict)}};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
}

}  // namespace

json run_command(const Session& session, const std::string& command, const CommandFlags& flags) {
  auto start = std::chrono::steady_clock::now();
  Context cx{session, flags};
  json result = dispatch(cx, command);
  json report = {{"command", command},
                 {"tool", {{"name", "frobsat"}, {"version", kToolVersion}}},
                 {"ring", ring_json(session)},
                 {"assertions", json(std::vector<std::string>(session.assertions.begin(), session.assertions.end()))},
                 {"inputs", cx.inputs},
                 {"seed", flags.seed ? *flags.seed : session.seed.value_or(0)},
                 {"result", result}};
  if (flags.timings)
    report["timings_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string serialize_report(const json& report) { return report.dump(2) + "\n"; }

void write_report(const json& report, const std::optional<std::string>& path) {
  const std::string text = serialize_report(report);
  if (!path || path->empty()) {
    std::cout << text << std::flush;
    return;
  }
  const std::string tmp = *path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + tmp + " for writing");
    out << text;
    if (!out.flush()) throw Error(ErrorKind::Io, "write to " + tmp + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, *path, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot move report to " + *path + ": " + ec.message());
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Frobenius powers, saturations and linkage experiments over F_p", "frobsat"};
  std::string command, session_path, q_text, x_text;
  std::optional<std::string> out_path;
  CommandFlags flags;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("session", session_path, "Session file")->required();
  app.add_option("--ideal", flags.ideal, "Ideal name");
  app.add_option("--elem", flags.elem, "Element name");
  app.add_option("--q", q_text, "Comma-separated powers of p");
  app.add_option("--cap", flags.cap, "Degree cap");
  app.add_option("--seed", flags.seed, "Random seed");
  app.add_option("--emax", flags.emax, "Largest Frobenius exponent");
  app.add_option("--c", flags.c, "Test element name or 'auto'");
  app.add_option("--out", out_path, "Report path (stdout if omitted)");
  app.add_option("--nmax", flags.nmax, "Search bound for N");
  app.add_option("--mmax", flags.mmax, "Search bound for M");
  app.add_option("--lmax", flags.lmax, "Largest l");
  app.add_option("--window", flags.window, "Zero window for the Koszul scan");
  app.add_option("--retries", flags.retries, "Redraws for generic elements");
  app.add_option("--steps", flags.steps, "Chain step limit");
  app.add_option("--x", x_text, "Comma-separated element names");
  app.add_option("--budget-ms", flags.budget_ms, "Wall-clock budget per q for lc-scan");
  app.add_flag("--timings", flags.timings, "Include timings in the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (!q_text.empty()) flags.q = parse_q_list(q_text);
    if (!x_text.empty()) {
      std::stringstream ss(x_text);
      std::string item;
      while (std::getline(ss, item, ',')) flags.x.push_back(item);
    }
    std::ifstream in(session_path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + session_path);
    std::stringstream buf;
    buf << in.rdbuf();
    Session session = parse_session(buf.str());
    write_report(run_command(session, command, flags), out_path);
    return 0;
  } catch (const Error& e) {
    std::cerr << "frobsat: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "frobsat: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace frobsat
