#ifndef WORDMAP_SL2_REPORT_HPP
#define WORDMAP_SL2_REPORT_HPP

// Surjectivity of commutator word maps on SL(2, C).
//
// Every element with trace != +-2 is known to lie in the image of such a
// word map. The remaining classes are the unipotent classes of
// [[+-1, 1], [0, +-1]] and the central elements +-I. For a parametrized
// pair (a, b) with w(a, b) = [[p11, p12], [p21, p22]], the class of trace
// 2 (resp. -2) is met as soon as p12 does not vanish identically on the
// variety of I = <constraints, p11 + p22 - 2> (resp. J with + 2), that is,
// p12 is not in the radical. I is hit at the identity pair, and -I needs
// its own witness.

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wordmap/groebner.hpp"
#include "wordmap/numeric.hpp"
#include "wordmap/poly_parse.hpp"
#include "wordmap/su2_certificate.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

/// Row-major 2x2 matrix [[m0, m1], [m2, m3]].
using Mat2 = std::array<MPoly, 4>;

inline Mat2 mat_identity(const ContextPtr& ctx) {
  return {constant(ctx, 1), MPoly(ctx), MPoly(ctx), constant(ctx, 1)};
}

inline Mat2 mat_mul(const Mat2& p, const Mat2& q) {
  return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
          p[2] * q[1] + p[3] * q[3]};
}

inline Mat2 adjugate(const Mat2& m) { return {m[3], -m[1], -m[2], m[0]}; }
inline MPoly det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }
inline MPoly trace(const Mat2& m) { return m[0] + m[3]; }

struct Sl2Template {
  std::string name;
  ContextPtr ctx;
  Mat2 a, b;
  std::vector<MPoly> constraints;
  /// Random complex parameter values satisfying the constraints, in context
  /// order.
  std::function<std::vector<Complex>(std::mt19937_64&)> sample;
};

namespace detail {

inline Sl2Template make_template(std::string name, std::vector<std::string> vars, std::array<const char*, 4> a,
                                 std::array<const char*, 4> b, std::vector<const char*> constraints,
                                 std::function<std::vector<Complex>(std::mt19937_64&)> sample) {
  Sl2Template t;
  t.name = std::move(name);
  t.ctx = make_context(std::move(vars));
  for (int i = 0; i < 4; ++i) {
    t.a[i] = parse_polynomial(a[i], t.ctx);
    t.b[i] = parse_polynomial(b[i], t.ctx);
  }
  for (const char* c : constraints) t.constraints.push_back(parse_polynomial(c, t.ctx));
  t.sample = std::move(sample);
  return t;
}

inline const std::vector<Sl2Template>& all_templates() {
  static const std::vector<Sl2Template> list = [] {
    std::vector<Sl2Template> v;
    auto rc = [](std::mt19937_64& g) { return random_complex(g); };
    // a = [[0, x], [y, z]], b = [[1, t], [0, 1]]; det a = -xy.
    auto b1 = [rc](std::mt19937_64& g) {
      Complex t = rc(g), x = rc(g), z = rc(g);
      return std::vector<Complex>{t, x, -1.0 / x, z};
    };
    v.push_back(make_template("B1", {"t", "x", "y", "z"}, {"0", "x", "y", "z"}, {"1", "t", "0", "1"}, {"x*y + 1"}, b1));
    // a = [[1, x], [y, 1]], b = [[w, 1], [0, z]]; xy = 0 is met on either axis.
    auto b2 = [rc](std::mt19937_64& g) {
      Complex w, x = rc(g), y = rc(g), z = rc(g);
      if (std::uniform_int_distribution<int>(0, 1)(g)) x = 0;
      else y = 0;
      w = 1.0 / z;
      return std::vector<Complex>{w, x, y, z};
    };
    v.push_back(make_template("B2", {"w", "x", "y", "z"}, {"1", "x", "y", "1"}, {"w", "1", "0", "z"},
                              {"x*y", "w*z - 1"}, b2));
    v.push_back(make_template("B3", {"t", "x", "y", "z"}, {"0", "x", "y", "z"}, {"1", "t", "0", "1"}, {"x*y + 1"}, b1));
    // a = [[x, y], [z, 0]]; det a = -yz.
    auto b4 = [rc](std::mt19937_64& g) {
      Complex t = rc(g), x = rc(g), y = rc(g);
      return std::vector<Complex>{t, x, y, -1.0 / y};
    };
    v.push_back(make_template("B4", {"t", "x", "y", "z"}, {"x", "y", "z", "0"}, {"1", "t", "0", "1"}, {"y*z + 1"}, b4));
    // a = [[x, 0], [y, z]]; det a = xz. Sampling y = z = 1/x satisfies both
    // the relation xy = 1 and det a = 1.
    auto b5 = [rc](std::mt19937_64& g) {
      Complex x = rc(g), t = rc(g);
      return std::vector<Complex>{x, 1.0 / x, 1.0 / x, t};
    };
    v.push_back(make_template("B5", {"x", "y", "z", "t"}, {"x", "0", "y", "z"}, {"1", "t", "0", "1"}, {"x*y - 1"}, b5));
    auto b5d = [rc](std::mt19937_64& g) {
      Complex x = rc(g), y = rc(g), t = rc(g);
      return std::vector<Complex>{x, y, 1.0 / x, t};
    };
    v.push_back(make_template("B5-det", {"x", "y", "z", "t"}, {"x", "0", "y", "z"}, {"1", "t", "0", "1"}, {"x*z - 1"}, b5d));
    return v;
  }();
  return list;
}

}  // namespace detail

class UnknownTemplate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::vector<std::string> template_names() {
  std::vector<std::string> out;
  for (const auto& t : detail::all_templates()) out.push_back(t.name);
  return out;
}

inline const Sl2Template& sl2_template(std::string_view name) {
  for (const auto& t : detail::all_templates())
    if (t.name == name) return t;
  throw UnknownTemplate("unknown template '" + std::string(name) + "'");
}

/// w(a, b) over the template with inverses replaced by adjugates. The
/// syllables are used as given, so unreduced input such as a a^-1 yields
/// det(a) I.
inline Mat2 symbolic_eval(const std::vector<Syllable>& letters, const Sl2Template& tpl) {
  const Mat2 ai = adjugate(tpl.a), bi = adjugate(tpl.b);
  Mat2 r = mat_identity(tpl.ctx);
  for (const auto& s : letters) {
    const Mat2& g = s.gen == Gen::a ? (s.exp > 0 ? tpl.a : ai) : (s.exp > 0 ? tpl.b : bi);
    const std::int64_t e = s.exp > 0 ? s.exp : -s.exp;
    for (std::int64_t i = 0; i < e; ++i) r = mat_mul(r, g);
  }
  return r;
}

inline Mat2 symbolic_eval(const Word& w, const Sl2Template& tpl) { return symbolic_eval(w.syllables(), tpl); }

struct UnipotentCheck {
  MPoly p12;
  MPoly trace_entry;
  Membership result_I = Membership::inconclusive;
  Membership result_J = Membership::inconclusive;
  RadicalResult detail_I, detail_J;
};

inline Ideal trace_ideal(const Sl2Template& tpl, const MPoly& tr, int target) {
  Ideal I;
  I.order = degrevlex(tpl.ctx);
  I.generators = tpl.constraints;
  I.generators.push_back(tr - Rat(target));
  return I;
}

inline UnipotentCheck unipotent_class_check(const Word& w, const Sl2Template& tpl, const Limits& limits = {}) {
  UnipotentCheck out;
  Mat2 m = symbolic_eval(w, tpl);
  out.p12 = m[1];
  out.trace_entry = trace(m);
  out.detail_I = radical_membership_detailed(out.p12, trace_ideal(tpl, out.trace_entry, 2), limits);
  out.detail_J = radical_membership_detailed(out.p12, trace_ideal(tpl, out.trace_entry, -2), limits);
  out.result_I = out.detail_I.result;
  out.result_J = out.detail_J.result;
  return out;
}

// ---------------------------------------------------------------------------
// Sources for -I in the image

enum class MinusIdentityKind { from_su2_certificate, direct_witness, absent };

inline const char* to_string(MinusIdentityKind k) {
  switch (k) {
    case MinusIdentityKind::from_su2_certificate: return "from_su2_certificate";
    case MinusIdentityKind::direct_witness: return "direct_witness";
    case MinusIdentityKind::absent: return "absent";
  }
  return "absent";
}

struct DirectWitness {
  std::string description;
  NumericMatrix a, b;
  double residual = 0;  // max entrywise |w(a, b) + I|
};

struct MinusIdentity {
  MinusIdentityKind kind = MinusIdentityKind::absent;
  std::optional<Certificate> certificate;
  std::optional<DirectWitness> direct;
};

enum class MinusIdentityRoute { su2_first, direct_first };

/// Searches pairs a = diag(zeta, 1/zeta), zeta = exp(i pi k / 4), against a
/// few fixed b in SL(2, C) for w(a, b) = -I within `tol`.
inline std::optional<DirectWitness> direct_minus_identity(const Word& w, double tol = 1e-9) {
  struct Candidate {
    const char* text;
    NumericMatrix m;
  };
  const Candidate bs[] = {
      {"[[0,1],[-1,0]]", {0.0, 1.0, -1.0, 0.0}},
      {"[[1,1],[-1/2,1/2]]", {1.0, 1.0, -0.5, 0.5}},
      {"[[1,1],[0,1]]", {1.0, 1.0, 0.0, 1.0}},
      {"[[2,1],[1,1]]", {2.0, 1.0, 1.0, 1.0}},
  };
  const NumericMatrix minus_i = -NumericMatrix::identity();
  for (int k = 1; k < 8; ++k) {
    const Complex zeta = std::polar(1.0, M_PI * k / 4);
    const NumericMatrix a = make_sl2(zeta, 0.0, 0.0, 1.0 / zeta);
    for (const auto& cand : bs) {
      const NumericMatrix b = make_sl2(cand.m.a, cand.m.b, cand.m.c, cand.m.d);
      double r = eval_word_numeric(w, a, b, InverseMode::adjugate).distance(minus_i);
      if (r < tol) {
        DirectWitness dw;
        dw.description = "a=diag(zeta,1/zeta) with zeta=exp(i*pi*" + std::to_string(k) + "/4), b=" + cand.text;
        dw.a = a;
        dw.b = b;
        dw.residual = r;
        return dw;
      }
    }
  }
  return std::nullopt;
}

/// -I is in the image when w is onto SU(2) (a certified commutator) or when
/// a direct pair maps to -I.
inline MinusIdentity minus_identity_source(std::string_view word_text, MinusIdentityRoute route = MinusIdentityRoute::su2_first,
                                           const Limits& limits = {}) {
  MinusIdentity out;
  const Word w = parse_word(word_text);
  auto via_su2 = [&]() {
    auto parts = parse_commutator(word_text);
    if (!parts) return false;
    Certificate c = certify_auto(parts->first, parts->second, limits);
    if (!c.certified() || !verify_certificate(c)) return false;
    out.kind = MinusIdentityKind::from_su2_certificate;
    out.certificate = std::move(c);
    return true;
  };
  auto via_direct = [&]() {
    auto d = direct_minus_identity(w);
    if (!d) return false;
    out.kind = MinusIdentityKind::direct_witness;
    out.direct = std::move(d);
    return true;
  };
  if (route == MinusIdentityRoute::su2_first) {
    if (via_su2() || via_direct()) return out;
  } else {
    if (via_direct() || via_su2()) return out;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts

/// The words handled by the SL(2, C) propositions, with their templates.
struct NamedWord {
  const char* name;
  const char* text;
  const char* template_name;
  MinusIdentityRoute route;
};

inline const std::vector<NamedWord>& named_words() {
  static const std::vector<NamedWord> list = {
      {"w1", "[[a,b],a[a,b]a^-1]", "B1", MinusIdentityRoute::su2_first},
      {"w2", "[[a,b],b[a,b]b^-1]", "B2", MinusIdentityRoute::su2_first},
      {"w3", "[[a,b],ab[a,b]b^-1a^-1]", "B3", MinusIdentityRoute::su2_first},
      {"w4", "[[a,b],ab^2[a,b]b^-2a^-1]", "B4", MinusIdentityRoute::su2_first},
      {"w4-listing", "[[a,b],ab^2[a,b]b^-3a^-1]", "B4", MinusIdentityRoute::su2_first},
      {"w4-header", "[[a,b],ab^2[a,ab]b^-2a^-1]", "B4", MinusIdentityRoute::su2_first},
      {"w5", "[[a,b],a]", "B5", MinusIdentityRoute::direct_first},
  };
  return list;
}

inline const NamedWord& named_word(std::string_view name) {
  for (const auto& w : named_words())
    if (w.name == name) return w;
  throw std::invalid_argument("unknown named word '" + std::string(name) + "'");
}

enum class Sl2Verdict { surjective, inconclusive };

inline const char* to_string(Sl2Verdict v) { return v == Sl2Verdict::surjective ? "surjective" : "inconclusive"; }

struct Sl2Report {
  std::string word_text;
  Word word;
  std::string template_name;
  UnipotentCheck unipotent;
  MinusIdentity minus_identity;
  Sl2Verdict verdict = Sl2Verdict::inconclusive;
  Limits limits;
};

inline Sl2Report verdict(std::string_view word_text, const Sl2Template& tpl, const Limits& limits = {},
                         MinusIdentityRoute route = MinusIdentityRoute::su2_first) {
  Sl2Report r;
  r.word_text = std::string(word_text);
  r.word = parse_word(word_text);
  r.template_name = tpl.name;
  r.limits = limits;
  r.unipotent = unipotent_class_check(r.word, tpl, limits);
  r.minus_identity = minus_identity_source(word_text, route, limits);
  const bool classes = r.unipotent.result_I == Membership::non_member && r.unipotent.result_J == Membership::non_member;
  r.verdict = classes && r.minus_identity.kind != MinusIdentityKind::absent ? Sl2Verdict::surjective
                                                                            : Sl2Verdict::inconclusive;
  return r;
}

inline Sl2Report verdict_named(std::string_view name, const Limits& limits = {}) {
  const NamedWord& nw = named_word(name);
  return verdict(nw.text, sl2_template(nw.template_name), limits, nw.route);
}

inline nlohmann::json to_json(const Sl2Report& r) {
  using nlohmann::json;
  json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["word"] = r.word_text;
  j["reduced_word"] = format_word(r.word);
  j["template"] = r.template_name;
  j["p12"] = to_string(r.unipotent.p12);
  j["trace"] = to_string(r.unipotent.trace_entry);
  j["result_I"] = to_string(r.unipotent.result_I);
  j["result_J"] = to_string(r.unipotent.result_J);
  auto stats = [](const RadicalResult& d) {
    json s = {{"pairs_reduced", d.stats.pairs_reduced}, {"max_basis_size", d.stats.max_basis_size}, {"seconds", d.stats.seconds}};
    if (!d.limit_reason.empty()) s["limit_reason"] = d.limit_reason;
    return s;
  };
  j["groebner"] = {{"I", stats(r.unipotent.detail_I)}, {"J", stats(r.unipotent.detail_J)}};
  json mi = {{"kind", to_string(r.minus_identity.kind)}};
  if (r.minus_identity.certificate) mi["certificate"] = to_json(*r.minus_identity.certificate);
  if (r.minus_identity.direct) {
    mi["description"] = r.minus_identity.direct->description;
    mi["residual"] = r.minus_identity.direct->residual;
  }
  j["minus_identity"] = mi;
  j["verdict"] = to_string(r.verdict);
  j["limits"] = {{"max_pairs", r.limits.max_pairs},
                 {"max_degree", r.limits.max_degree},
                 {"budget_seconds", r.limits.budget_seconds}};
  return j;
}

}  // namespace wordmap

#endif  // WORDMAP_SL2_REPORT_HPP
