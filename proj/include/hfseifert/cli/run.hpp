#pragma once

// Command-line front end. Every subcommand builds a JSON report; human
// output is rendered from that report, so both modes carry the same data.
//
// Exit codes: 0 ok, 2 malformed or rejected input, 3 not applicable,
// 4 unsupported input, 5 internal invariant violation.

#include "hfseifert/cli/report.hpp"
#include "hfseifert/cli/schema.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hfs::cli {

using json::Json;

enum ExitCode : int { ok = 0, parse_failure = 2, not_applicable = 3, unsupported = 4, internal = 5 };

struct Options {
  bool json = false;
  bool verbose = false;
  bool list_all = false;
  std::size_t max_candidates = 100000;
  unsigned jobs = 1;
};

struct Result {
  int code = ok;
  Json report;
};

namespace detail {

inline Json error_report(const std::string& command, const std::string& input, const char* kind,
                         const std::string& message) {
  Json j = json::header(command, input);
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

inline Result cmd_lspace(const std::string& text) {
  const SeifertData m = parse_seifert(text);
  Json j = json::header("lspace", text);
  j["normalized"] = json::seifert(m);
  j["e"] = euler_number(m).str();
  j["h1"] = h1_order(m).str();
  const auto v = is_lspace(m);
  j["verdict"] = v.is_lspace;
  const Json detail = json::lspace(m, v);
  for (const auto& [k, val] : detail.items()) j[k] = val;
  return {ok, j};
}

inline Result cmd_dinv(const std::string& text) {
  const SeifertData m = parse_seifert(text);
  Json j = json::header("dinv", text);
  j["normalized"] = json::seifert(m);
  j["e"] = euler_number(m).str();
  j["h1"] = h1_order(m).str();
  j["table"] = json::dtable(correction_terms(m));
  return {ok, j};
}

inline Result cmd_tight(const std::string& text, const Options& opt) {
  const SeifertData m = parse_seifert(text);
  Json j = json::header("tight", text);
  j["normalized"] = json::seifert(m);
  const Rational e = euler_number(m);
  j["e"] = e.str();
  j["h1"] = h1_order(m).str();
  const auto cands = enumerate_candidates(m, opt.max_candidates);
  std::optional<DTable> table;
  if (e.sign() > 0) table = correction_terms(m);
  const DTable* tp = table ? &*table : nullptr;
  const auto certs = parallel_map<CertificateReport>(
      cands.size(), opt.jobs, [&](std::size_t i) { return tightness_certificate(m, cands[i], tp); });
  j["candidate_count"] = cands.size();
  std::map<std::string, std::size_t> tally;
  Json list = Json::array();
  for (std::size_t i = 0; i < certs.size(); ++i) {
    ++tally[to_string(certs[i].verdict)];
    if (!opt.list_all && certs[i].verdict == Verdict::inconclusive) continue;
    if (!opt.list_all && certs[i].verdict == Verdict::not_applicable) continue;
    Json c = json::certificate(certs[i], tp);
    if (opt.list_all) c["diagram"] = json::diagram(cands[i].diagram);
    list.push_back(c);
  }
  Json t;
  for (const char* v : {"Nonzero", "Ambiguous", "Inconclusive", "NotApplicable"}) t[v] = tally[v];
  j["verdict_counts"] = t;
  j["candidates"] = list;
  if (e.sign() <= 0) {
    j["note"] = "e(M) <= 0: the degree criterion does not apply";
    return {not_applicable, j};
  }
  return {ok, j};
}

inline Result cmd_d3(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open diagram file '" + path + "'");
  const ContactDiagram d = parse_diagram(in);
  d.validate();
  Json j = json::header("d3", path);
  const Json body = json::d3_details(d);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return {ok, j};
}

inline Result cmd_alexander(std::int64_t p, std::int64_t q) {
  Json j = json::header("alexander", std::to_string(p) + " " + std::to_string(q));
  const Json body = json::alexander(alexander_torus(p, q));
  for (const auto& [k, v] : body.items()) j[k] = v;
  return {ok, j};
}

inline Result cmd_torus(std::int64_t p, std::int64_t q, std::int64_t n) {
  const SeifertData m = torus_surgery_seifert(p, q, n);
  Json j = json::header("torus", std::to_string(p) + " " + std::to_string(q) + " " + std::to_string(n));
  j["normalized"] = json::seifert(m);
  j["e"] = euler_number(m).str();
  j["h1"] = h1_order(m).str();
  const AlexanderData a = alexander_torus(p, q);
  std::optional<std::vector<Rational>> torus;
  if (n >= 2 * a.n - 1) {
    torus = d_large_surgery_table(a, n);
    Json rows = Json::array();
    std::int64_t k = -(n - 1) / 2;
    for (const auto& d : *torus) rows.push_back({{"k", k++}, {"d", d.str()}});
    j["torus_route"] = rows;
  } else {
    j["torus_route"] = nullptr;
  }
  std::optional<DTable> table;
  try {
    table = correction_terms(m);
    j["plumbing_route"] = json::dtable(*table);
  } catch (const unsupported_input& e) {
    j["plumbing_route"] = nullptr;
    j["plumbing_note"] = e.what();
  }
  if (torus && table) {
    std::vector<Rational> a1 = *torus, a2 = table->values;
    std::sort(a1.begin(), a1.end());
    std::sort(a2.begin(), a2.end());
    j["multiset_match"] = a1 == a2;
  } else {
    j["multiset_match"] = nullptr;
  }
  return {ok, j};
}

inline Result cmd_critical(std::int64_t p, const Options& opt) {
  ClassifyOptions co;
  co.max_candidates = opt.max_candidates;
  co.jobs = opt.jobs;
  const CriticalReport r = critical_report(p, co);
  Json j = json::header("critical", std::to_string(p));
  j["normalized"] = json::seifert(r.classification.manifold);
  const Json body = json::critical(r, opt.list_all);
  for (const auto& [k, v] : body.items()) j[k] = v;
  if (!r.multiset_match) return {internal, j};
  return {ok, j};
}

inline Result cmd_classify(const std::string& text, const Options& opt) {
  const SeifertData m = parse_seifert(text);
  ClassifyOptions co;
  co.max_candidates = opt.max_candidates;
  co.jobs = opt.jobs;
  const ClassifyReport r = classify(m, co);
  Json j = json::header("classify", text);
  const Json body = json::classification(r, opt.list_all);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return {ok, j};
}

// ---- human rendering -------------------------------------------------------

inline std::string s(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "unknown";
  return v.dump();
}

inline void render_table(std::ostream& os, const Json& t) {
  os << "plumbing weights " << s(t["plumbing"]["weights"]) << " (" << s(t["orientation"]) << " of "
     << s(t["plumbing_boundary"]) << ")\n";
  os << "H1 = " << s(t["group"]) << ", " << s(t["size"]) << " spin^c structures\n";
  os << std::left << std::setw(16) << "label" << std::setw(14) << "d" << "conjugate\n";
  for (const auto& r : t["values"])
    os << std::setw(16) << s(r["label"]) << std::setw(14) << s(r["d"]) << s(r["conjugate"])
       << (r["self_conjugate"].get<bool>() ? "  (spin)" : "") << "\n";
}

inline void render_candidates(std::ostream& os, const Json& j) {
  os << "candidates: " << s(j["candidate_count"]) << "  (";
  bool first = true;
  for (const auto& [k, v] : j["verdict_counts"].items()) {
    os << (first ? "" : ", ") << k << " " << s(v);
    first = false;
  }
  os << ")\n";
  if (j["candidates"].empty()) return;
  os << std::left << std::setw(6) << "id" << std::setw(10) << "conj" << std::setw(14) << "d3" << std::setw(14)
     << "verdict" << "orbit\n";
  for (const auto& c : j["candidates"]) {
    os << std::setw(6) << s(c["id"]) << std::setw(10) << s(c["conjugate_id"]) << std::setw(14) << s(c["d3"])
       << std::setw(14) << s(c["verdict"]);
    if (c.contains("orbit")) {
      os << s(c["orbit"]) << " d=" << s(c["orbit_d"]);
      if (c["orbit_has_spin"].get<bool>()) os << " spin";
    }
    os << "\n";
  }
}

inline void render_lspace(std::ostream& os, const Json& j) {
  os << "L-space: " << (j["is_lspace"].get<bool>() ? "yes" : "no") << " (" << s(j["reason"]) << ")\n";
  for (const char* side : {"positive", "negative"}) {
    const Json& w = j["witnesses"][side];
    if (!w.is_null())
      os << "realizing pair for " << (side[0] == 'p' ? "M" : "-M") << ": m=" << s(w["m"]) << " a=" << s(w["a"])
         << "\n";
  }
  if (!j["transverse_foliation"].is_null())
    os << "transverse foliation: " << (j["transverse_foliation"].get<bool>() ? "yes" : "no") << "\n";
}

inline void render(std::ostream& os, const Json& j) {
  if (j.contains("error")) {
    os << "error (" << s(j["error"]["kind"]) << "): " << s(j["error"]["message"]) << "\n";
    return;
  }
  const std::string cmd = j["command"];
  if (j.contains("normalized"))
    os << "M = M(" << s(j["normalized"]["text"]) << ")"
       << (j.contains("e") ? "  e = " + s(j["e"]) + "  |H1| = " + s(j["h1"]) : "") << "\n";
  if (cmd == "lspace") {
    render_lspace(os, j);
  } else if (cmd == "dinv") {
    render_table(os, j["table"]);
  } else if (cmd == "tight") {
    render_candidates(os, j);
    if (j.contains("note")) os << s(j["note"]) << "\n";
  } else if (cmd == "d3") {
    os << "components " << s(j["b2"]) << ", q = " << s(j["q"]) << ", det = " << s(j["det"]) << "\n"
       << "c^2 = " << s(j["c2"]) << ", signature = " << s(j["signature"]) << "\n"
       << "d3 = " << s(j["d3"]) << "\n";
  } else if (cmd == "alexander") {
    os << "T(" << s(j["p"]) << "," << s(j["q"]) << "): a_0..a_n = " << s(j["coefficients"]) << "\n"
       << "torsion r_0..r_n = " << s(j["torsion"]) << "\nDelta(1) = " << s(j["delta_at_one"]) << "\n";
  } else if (cmd == "torus") {
    if (!j["torus_route"].is_null()) {
      os << "torus-knot route:";
      for (const auto& r : j["torus_route"]) os << " " << s(r["k"]) << ":" << s(r["d"]);
      os << "\n";
    }
    if (!j["plumbing_route"].is_null()) render_table(os, j["plumbing_route"]);
    os << "routes agree: " << s(j["multiset_match"]) << "\n";
  } else if (cmd == "critical") {
    os << "spin d = " << s(j["spin_d"]) << ", routes agree: " << s(j["multiset_match"]) << "\n";
    render_table(os, j["plumbing_route"]);
    render_candidates(os, j["classification"]);
    for (const auto& c : j["nonzero_candidates"])
      os << "nonzero candidate " << s(c["id"]) << ": d3 = " << s(c["d3"]) << ", torus labels " << s(c["torus_labels"])
         << "\n";
    os << "spin structure excluded: " << s(j["spin_label_excluded"]) << "\n";
  } else if (cmd == "classify") {
    render_lspace(os, j["lspace"]);
    os << "zero twisting: " << s(j["zero_twisting"]) << ", family exhaustive: " << s(j["family_exhaustive"])
       << "\n";
    if (j["candidates_enumerated"].get<bool>()) render_candidates(os, j);
    const Json& p = j["planarity"];
    os << "all contact structures planar on M: " << s(p["all_planar_on_M"]) << ", on -M: "
       << s(p["all_planar_on_minus_M"]) << "\n";
    for (const auto& n : j["notes"]) os << "note: " << s(n) << "\n";
    for (const auto& n : p["notes"]) os << "note: " << s(n) << "\n";
  }
}

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace detail

/// Parses and executes one command line (without the program name).
inline Result execute(const std::vector<std::string>& args, Options opt, std::ostream& log) {
  CLI::App app{"Floer-theoretic invariants of small Seifert fibered spaces"};
  app.require_subcommand(1);
  std::string manifold, path;
  std::int64_t p = 0, q = 0, n = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_flag("--verbose,-v", opt.verbose, "timing on stderr");
    sub->add_option("--jobs,-j", opt.jobs, "worker threads");
  };
  auto* lsp = app.add_subcommand("lspace", "L-space decision");
  lsp->add_option("manifold", manifold, "e0;r1,...,rk")->required();
  auto* din = app.add_subcommand("dinv", "correction terms from the plumbing");
  din->add_option("manifold", manifold, "e0;r1,...,rk")->required();
  auto* tig = app.add_subcommand("tight", "candidate contact structures and certificates");
  tig->add_option("manifold", manifold, "e0;r1,...,rk")->required();
  auto* d3c = app.add_subcommand("d3", "d3 of a contact surgery diagram file");
  d3c->add_option("file", path, "diagram file")->required();
  auto* alx = app.add_subcommand("alexander", "Alexander polynomial of T(p,q)");
  alx->add_option("p", p)->required();
  alx->add_option("q", q)->required();
  auto* tor = app.add_subcommand("torus", "n-surgery on T(p,q)");
  tor->add_option("p", p)->required();
  tor->add_option("q", q)->required();
  tor->add_option("n", n)->required();
  auto* cri = app.add_subcommand("critical", "report for (p^2-p-1)-surgery on T(p,p+1)");
  cri->add_option("p", p)->required();
  auto* cls = app.add_subcommand("classify", "full report for M(e0; r1, r2, r3)");
  cls->add_option("manifold", manifold, "e0;r1,r2,r3")->required();
  for (auto* sub : {lsp, din, tig, d3c, alx, tor, cri, cls}) add_common(sub);
  for (auto* sub : {tig, cri, cls}) {
    sub->add_option("--max-candidates", opt.max_candidates, "refuse families larger than this");
    sub->add_flag("--list-all", opt.list_all, "list every candidate");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  std::string command = args.empty() ? "" : args.front();
  std::string input;
  for (std::size_t i = 1; i < args.size(); ++i) input += (i > 1 ? " " : "") + args[i];
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    return {ok, Json{{"help", target->help()}}};
  } catch (const CLI::ParseError& e) {
    return {parse_failure, detail::error_report(command, input, "parse", e.what())};
  }
  if (opt.jobs == 0) opt.jobs = 1;

  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    if (lsp->parsed()) r = detail::cmd_lspace(manifold);
    else if (din->parsed()) r = detail::cmd_dinv(manifold);
    else if (tig->parsed()) r = detail::cmd_tight(manifold, opt);
    else if (d3c->parsed()) r = detail::cmd_d3(path);
    else if (alx->parsed()) r = detail::cmd_alexander(p, q);
    else if (tor->parsed()) r = detail::cmd_torus(p, q, n);
    else if (cri->parsed()) r = detail::cmd_critical(p, opt);
    else if (cls->parsed()) r = detail::cmd_classify(manifold, opt);
  } catch (const parse_error& e) {
    return {parse_failure, detail::error_report(command, input, "parse", e.what())};
  } catch (const domain_error& e) {
    return {parse_failure, detail::error_report(command, input, "domain", e.what())};
  } catch (const unsupported_input& e) {
    return {unsupported, detail::error_report(command, input, "unsupported", e.what())};
  } catch (const invariant_violation& e) {
    return {internal, detail::error_report(command, input, "invariant", e.what())};
  } catch (const std::exception& e) {
    return {internal, detail::error_report(command, input, "internal", e.what())};
  }
  if (opt.verbose)
    log << "[" << command << "] "
        << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return r;
}

/// Full front end: global --schema / --batch handling, then one command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  opt.jobs = default_jobs();

  if (!args.empty() && (args[0] == "--help" || args[0] == "-h")) {
    out << "usage: hfseifert <command> [args] [--json] [--jobs N] [--verbose]\n"
           "       hfseifert --batch FILE [--jobs N]\n"
           "       hfseifert --schema\n"
           "commands: lspace dinv tight d3 alexander torus critical classify\n"
           "run 'hfseifert <command> --help' for details\n";
    return ok;
  }
  if (!args.empty() && args[0] == "--schema") {
    out << report_schema << "\n";
    return ok;
  }
  if (!args.empty() && args[0] == "--batch") {
    if (args.size() < 2) {
      err << "--batch needs a file\n";
      return parse_failure;
    }
    for (std::size_t i = 2; i + 1 < args.size(); ++i)
      if (args[i] == "--jobs" || args[i] == "-j") opt.jobs = static_cast<unsigned>(std::max(1, std::stoi(args[i + 1])));
    std::ifstream in(args[1]);
    if (!in) {
      err << "cannot open batch file '" << args[1] << "'\n";
      return parse_failure;
    }
    std::vector<std::vector<std::string>> lines;
    for (std::string line; std::getline(in, line);) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      auto words = detail::split_words(line);
      if (!words.empty()) lines.push_back(std::move(words));
    }
    Options inner = opt;
    inner.jobs = 1;
    const auto results = parallel_map<Result>(lines.size(), opt.jobs, [&](std::size_t i) {
      std::ostringstream local;
      Result r = execute(lines[i], inner, local);
      r.report["exit_code"] = r.code;
      return r;
    });
    int worst = ok;
    for (const auto& r : results) {
      out << r.report.dump() << "\n";
      worst = std::max(worst, r.code);
    }
    return worst;
  }

  if (args.empty()) {
    err << "no command given; try --help\n";
    return parse_failure;
  }
  Result r = execute(args, opt, err);
  if (r.report.contains("help")) {
    out << r.report["help"].get<std::string>();
    return ok;
  }
  if (opt.json || std::find(args.begin(), args.end(), "--json") != args.end()) {
    out << r.report.dump(2) << "\n";
  } else if (r.report.contains("error")) {
    detail::render(err, r.report);
  } else {
    detail::render(out, r.report);
  }
  return r.code;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace hfs::cli
