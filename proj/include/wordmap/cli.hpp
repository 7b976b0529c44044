#ifndef WORDMAP_CLI_HPP
#define WORDMAP_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordmap/numeric.hpp"
#include "wordmap/sl2_report.hpp"
#include "wordmap/su2_certificate.hpp"
#include "wordmap/trace_algebra.hpp"
#include "wordmap/version.hpp"
#include "wordmap/word.hpp"

namespace wordmap::cli {

enum ExitCode : int { kSuccess = 0, kError = 1, kInconclusive = 2 };

struct RunConfig {
  bool json = false;
  Limits limits;
  // trace-poly / sample / certify
  std::string word;
  // chebyshev
  int n_cheb = 0;
  // certify su2
  std::string family;
  std::int64_t n = 0;
  std::optional<std::int64_t> m;
  std::string batch;
  // certify sl2c
  std::string named;
  std::string template_name;
  // sample
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  // verify
  std::string file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string describe_witness(const Certificate& c) {
  if (const TauPoint* q = c.point()) return "exact point " + format_point(*q);
  if (const IvtWitness* w = c.ivt()) {
    std::ostringstream s;
    s << "sign change of g(" << w->residual_var << ") = " << to_string(w->g) << " on [" << to_short_string(w->bracket.lo)
      << ", " << to_short_string(w->bracket.hi) << "], companion " << companion_tag(w->companion);
    return s.str();
  }
  return "none";
}

inline void print_certificate(const Certificate& c, const RunConfig& cfg, std::ostream& out) {
  if (cfg.json) {
    out << to_json(c).dump(2) << "\n";
    return;
  }
  out << "word:     " << format_word(c.word) << "\n"
      << "status:   " << to_string(c.status) << "\n"
      << "strategy: " << c.strategy << "\n"
      << "witness:  " << describe_witness(c) << "\n";
  for (const auto& n : c.notes) out << "note:     " << n << "\n";
}

inline Family parse_family(const std::string& s) {
  auto f = s.size() == 1 ? family_from_char(s[0]) : std::nullopt;
  if (!f) throw UsageError("family must be one of a..g, got '" + s + "'");
  return *f;
}

/// One batch line: a commutator word, or `family <x> n=<N> [m=<M>]`.
inline Certificate certify_line(const std::string& line, const Limits& limits) {
  std::istringstream in(line);
  std::string head;
  in >> head;
  if (head == "family") {
    std::string fam, tok;
    in >> fam;
    std::optional<std::int64_t> n, m;
    while (in >> tok) {
      if (tok.rfind("n=", 0) == 0) n = std::stoll(tok.substr(2));
      else if (tok.rfind("m=", 0) == 0) m = std::stoll(tok.substr(2));
      else throw UsageError("unexpected token '" + tok + "' in family spec");
    }
    if (!n) throw UsageError("family spec needs n=<N>");
    return certify_family(parse_family(fam), *n, m, limits);
  }
  auto parts = parse_commutator(line);
  if (!parts) throw NotACommutator("word is not of the form [u,v]: " + line);
  return certify_auto(parts->first, parts->second, limits);
}

inline int run_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.batch);
  if (!in) {
    err << "error: cannot open batch file " << cfg.batch << "\n";
    return kError;
  }
  int code = kSuccess;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string text = line.substr(first, last - first + 1);
    nlohmann::json j;
    try {
      Certificate c = certify_line(text, cfg.limits);
      j = to_json(c);
      if (!c.certified() && code == kSuccess) code = kInconclusive;
    } catch (const std::exception& e) {
      j = {{"error", e.what()}};
      code = kError;
    }
    j["line"] = lineno;
    j["input"] = text;
    out << j.dump() << "\n";
  }
  return code;
}

inline int run_certify_su2(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.batch.empty()) {
    if (!cfg.word.empty() || !cfg.family.empty()) throw UsageError("--batch excludes a word or family argument");
    return run_batch(cfg, out, err);
  }
  const bool has_word = !cfg.word.empty(), has_family = !cfg.family.empty();
  if (has_word == has_family) throw UsageError("certify su2 takes exactly one of <word> or --family");
  Certificate c;
  if (has_family) {
    if (cfg.n == 0) throw UsageError("--family requires --n");
    c = certify_family(parse_family(cfg.family), cfg.n, cfg.m, cfg.limits);
  } else {
    if (cfg.m || cfg.n) throw UsageError("--n and --m only apply to --family");
    auto parts = parse_commutator(cfg.word);
    if (!parts) throw NotACommutator("word is not of the form [u,v]: " + cfg.word);
    c = certify_auto(parts->first, parts->second, cfg.limits);
  }
  print_certificate(c, cfg, out);
  return c.certified() ? kSuccess : kInconclusive;
}

inline int run_certify_sl2(const RunConfig& cfg, std::ostream& out) {
  Sl2Report r;
  if (!cfg.named.empty()) {
    if (!cfg.word.empty() || !cfg.template_name.empty()) throw UsageError("--word excludes <word> and --template");
    r = verdict_named(cfg.named, cfg.limits);
  } else {
    if (cfg.word.empty() || cfg.template_name.empty())
      throw UsageError("certify sl2c takes --word <w1..w5> or <word> --template <name>");
    r = verdict(cfg.word, sl2_template(cfg.template_name), cfg.limits);
  }
  if (cfg.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << "word:           " << r.word_text << "\n"
        << "template:       " << r.template_name << "\n"
        << "p12 in rad(I):  " << to_string(r.unipotent.result_I) << "\n"
        << "p12 in rad(J):  " << to_string(r.unipotent.result_J) << "\n"
        << "-I source:      " << to_string(r.minus_identity.kind);
    if (r.minus_identity.direct) out << " (" << r.minus_identity.direct->description << ")";
    if (r.minus_identity.certificate) out << " (" << describe_witness(*r.minus_identity.certificate) << ")";
    out << "\n"
        << "verdict:        " << to_string(r.verdict) << "\n";
  }
  return r.verdict == Sl2Verdict::surjective ? kSuccess : kInconclusive;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.file);
  if (!in) {
    err << "error: cannot open " << cfg.file << "\n";
    return kError;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  VerifyResult v;
  try {
    v = verify_certificate_detailed(certificate_from_json(j));
  } catch (const std::exception& e) {
    v = {false, e.what()};
  }
  if (cfg.json) {
    nlohmann::json r = {{"file", cfg.file}, {"valid", v.ok}};
    if (!v.ok) r["reason"] = v.reason;
    out << r.dump(2) << "\n";
  } else {
    out << (v.ok ? "valid" : "invalid: " + v.reason) << "\n";
  }
  return v.ok ? kSuccess : kInconclusive;
}

inline int run_sample(const RunConfig& cfg, std::ostream& out) {
  Word w = parse_word(cfg.word);
  TraceMatchReport r = trace_match_test(w, cfg.trials, cfg.tol, cfg.seed);
  if (cfg.json) {
    out << nlohmann::json{{"word", format_word(w)},   {"trials", r.trials}, {"seed", cfg.seed},
                          {"tolerance", r.tolerance}, {"max_error", r.max_error}, {"pass", r.pass}}
                   .dump(2)
        << "\n";
  } else {
    out << "max error " << r.max_error << " over " << r.trials << " trials: " << (r.pass ? "pass" : "FAIL") << "\n";
  }
  return r.pass ? kSuccess : kInconclusive;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Word maps on SU(2) and SL(2,C): trace polynomials and surjectivity certificates", "wordmap"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--max-pairs", cfg.limits.max_pairs, "Groebner pair limit")->envname("WORDMAP_MAX_PAIRS");
  app.add_option("--max-degree", cfg.limits.max_degree, "Groebner S-pair degree limit")->envname("WORDMAP_MAX_DEGREE");
  app.add_option("--budget-seconds", cfg.limits.budget_seconds, "Time budget per Groebner run (0 = none)")
      ->envname("WORDMAP_BUDGET_SECONDS");

  auto* trace = app.add_subcommand("trace-poly", "Print the trace polynomial p_w(x,y,z)");
  trace->add_option("word", cfg.word, "Word in a, b, A=a^-1, B=b^-1")->required();

  auto* cheb = app.add_subcommand("chebyshev", "Print S_n(x) = U_n(x/2)");
  cheb->add_option("n", cfg.n_cheb)->required()->check(CLI::Range(0, 4096));

  auto* certify = app.add_subcommand("certify", "Certify surjectivity");
  certify->require_subcommand(1);
  auto* su2 = certify->add_subcommand("su2", "Certificate for a commutator word on SU(2)");
  su2->add_option("word", cfg.word, "Commutator word [u,v]");
  su2->add_option("--family", cfg.family, "Word family a..g");
  su2->add_option("--n", cfg.n, "Family parameter n");
  su2->add_option("--m", cfg.m, "Family parameter m (family f)");
  su2->add_option("--batch", cfg.batch, "File with one word or 'family <x> n=<N> [m=<M>]' per line");
  auto* sl2 = certify->add_subcommand("sl2c", "Surjectivity report on SL(2,C)");
  sl2->add_option("--word", cfg.named, "Named word: w1, w2, w3, w4, w4-listing, w4-header, w5");
  sl2->add_option("WORD", cfg.word, "Word to evaluate on --template");
  sl2->add_option("--template", cfg.template_name, "Matrix template: B1..B5, B5-det");

  auto* sample = app.add_subcommand("sample", "Compare numeric traces with p_w on random SU(2) pairs");
  sample->add_option("word", cfg.word)->required();
  sample->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  sample->add_option("--seed", cfg.seed);
  sample->add_option("--tol", cfg.tol);

  auto* verify = app.add_subcommand("verify", "Re-check a certificate file");
  verify->add_option("file", cfg.file)->required();

  for (auto* s : {trace, cheb, certify, su2, sl2, sample, verify}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kError;
  }

  try {
    if (*trace) {
      MPoly p = trace_polynomial(parse_word(cfg.word));
      if (cfg.json) out << nlohmann::json{{"word", cfg.word}, {"trace_polynomial", to_string(p)}}.dump(2) << "\n";
      else out << to_string(p) << "\n";
      return kSuccess;
    }
    if (*cheb) {
      MPoly p = chebyshev_s(cfg.n_cheb).poly;
      if (cfg.json) out << nlohmann::json{{"n", cfg.n_cheb}, {"S_n", to_string(p)}}.dump(2) << "\n";
      else out << to_string(p) << "\n";
      return kSuccess;
    }
    if (*su2) return run_certify_su2(cfg, out, err);
    if (*sl2) return run_certify_sl2(cfg, out);
    if (*sample) return run_sample(cfg, out);
    if (*verify) return run_verify(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace wordmap::cli

#endif  // WORDMAP_CLI_HPP
