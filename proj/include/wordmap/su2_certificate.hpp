#ifndef WORDMAP_SU2_CERTIFICATE_HPP
#define WORDMAP_SU2_CERTIFICATE_HPP

// Surjectivity certificates for commutator words w = [u, v] on SU(2).
//
// The word map of [u, v] is onto SU(2) exactly when the system
//   p_u = 0, p_v = 0, p_uv = 0
// has a solution in tau = {(x, y, z) in [-2, 2]^3 : |k(x, y, z)| <= 2}.
// A certificate exhibits such a solution, either as an exact rational point
// or as an ideal-containment argument plus a sign change of one univariate
// polynomial (an intermediate value witness) with an explicit companion
// construction of the remaining coordinates.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wordmap/groebner.hpp"
#include "wordmap/poly_parse.hpp"
#include "wordmap/sturm.hpp"
#include "wordmap/trace_algebra.hpp"
#include "wordmap/version.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

struct TraceSystem {
  Word u, v;
  MPoly p_u, p_v, p_uv;

  std::array<const MPoly*, 3> polys() const { return {&p_u, &p_v, &p_uv}; }
  friend bool operator==(const TraceSystem&, const TraceSystem&) = default;
};

inline TraceSystem build_system(const Word& u, const Word& v) {
  return TraceSystem{u, v, trace_polynomial(u), trace_polynomial(v), trace_polynomial(concat(u, v))};
}

struct TauPoint {
  Rat x, y, z;
  friend bool operator==(const TauPoint&, const TauPoint&) = default;
};

inline TauPoint make_point(long x, long y, long z) { return {Rat(x), Rat(y), Rat(z)}; }

inline Rat eval_at(const MPoly& p, const TauPoint& q) { return eval(p, {q.x, q.y, q.z}); }

inline bool in_tau(const TauPoint& q) {
  for (const Rat* c : {&q.x, &q.y, &q.z})
    if (*c < -2 || *c > 2) return false;
  Rat kv = eval_at(commutator_trace(), q);
  return kv >= -2 && kv <= 2;
}

inline std::string format_point(const TauPoint& q) {
  return "(" + to_short_string(q.x) + "," + to_short_string(q.y) + "," + to_short_string(q.z) + ")";
}

inline bool solves(const TraceSystem& sys, const TauPoint& q) {
  for (const MPoly* p : sys.polys())
    if (eval_at(*p, q) != 0) return false;
  return true;
}

/// {-2, -3/2, ..., 2}^3 restricted to tau, in lexicographic order.
inline const std::vector<TauPoint>& default_grid() {
  static const std::vector<TauPoint> grid = [] {
    std::vector<TauPoint> g;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j)
        for (int l = -4; l <= 4; ++l) {
          TauPoint q{make_rat(i, 2), make_rat(j, 2), make_rat(l, 2)};
          if (in_tau(q)) g.push_back(q);
        }
    return g;
  }();
  return grid;
}

inline std::optional<TauPoint> exact_candidate_search(const TraceSystem& sys, const std::vector<TauPoint>& grid) {
  for (const auto& q : grid)
    if (in_tau(q) && solves(sys, q)) return q;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reduction of the system modulo <p_u, p_v>

struct SystemReduction {
  std::vector<MPoly> basis;  // reduced GB of <p_u, p_v>, degrevlex
  bool limits_hit = false;
  MPoly residual;            // normal form of p_uv modulo the basis
  std::vector<MPoly> residual_cofactors;
  std::optional<std::size_t> residual_var;
  MPoly g;                   // monic residual when univariate
};

inline SystemReduction reduce_system(const TraceSystem& sys, const Limits& limits = {}) {
  const auto order = degrevlex(xyz_context());
  SystemReduction r;
  GroebnerBasis gb = buchberger({sys.p_u, sys.p_v}, order, limits);
  r.basis = gb.basis;
  r.limits_hit = gb.limits_hit;
  Division d = divide(sys.p_uv, r.basis, order);
  r.residual = d.remainder;
  r.residual_cofactors = d.cofactors;
  r.residual_var = r.residual.univariate_var();
  if (r.residual_var) r.g = r.residual / r.residual.leading().c;
  return r;
}

// ---------------------------------------------------------------------------
// Certificates

enum class CertStatus { certified, inconclusive };

inline const char* to_string(CertStatus s) { return s == CertStatus::certified ? "certified" : "inconclusive"; }

/// How the coordinates other than the residual one are produced once the
/// residual root is known.
enum class Companion {
  z0_y_from_x,  // residual x: z = 0, y^2 = 2 - x^2
  z0_x_from_y,  // residual y: z = 0, x^2 = 2 - y^2
  y0_x_from_z,  // residual z: y = 0, x^2 = 2 - z^2
  x1_y_from_z,  // residual z: x = 1, y a root of y^2 - z y + z^2 - 1
};

inline const char* companion_tag(Companion c) {
  switch (c) {
    case Companion::z0_y_from_x: return "z=0, y^2=2-x^2";
    case Companion::z0_x_from_y: return "z=0, x^2=2-y^2";
    case Companion::y0_x_from_z: return "y=0, x^2=2-z^2";
    case Companion::x1_y_from_z: return "x=1, y^2-z*y+z^2-1=0";
  }
  return "";
}

inline const char* companion_bound(Companion c) {
  return c == Companion::x1_y_from_z ? "-1<lo<hi<1, 4-3*lo^2>0, 4-3*hi^2>0" : "lo^2<2, hi^2<2";
}

inline std::optional<Companion> companion_from_tag(std::string_view tag) {
  for (Companion c : {Companion::z0_y_from_x, Companion::z0_x_from_y, Companion::y0_x_from_z, Companion::x1_y_from_z})
    if (tag == companion_tag(c)) return c;
  return std::nullopt;
}

inline std::size_t companion_residual_var(Companion c) {
  switch (c) {
    case Companion::z0_y_from_x: return 0;
    case Companion::z0_x_from_y: return 1;
    default: return 2;
  }
}

struct IvtWitness {
  std::string residual_var;
  std::vector<MPoly> generators;
  std::vector<std::vector<MPoly>> cofactors;  // cofactors[i][j]: system poly i, generator j
  MPoly g;
  Interval bracket;
  Companion companion;
};

using Witness = std::variant<std::monostate, TauPoint, IvtWitness>;

struct Certificate {
  Word word;
  TraceSystem system;
  CertStatus status = CertStatus::inconclusive;
  std::string strategy = "none";
  Witness witness;
  std::vector<std::string> notes;

  bool certified() const { return status == CertStatus::certified; }
  const TauPoint* point() const { return std::get_if<TauPoint>(&witness); }
  const IvtWitness* ivt() const { return std::get_if<IvtWitness>(&witness); }
};

enum class Strategy { hints, grid, ivt, chebyshev };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::hints: return "hint";
    case Strategy::grid: return "grid";
    case Strategy::ivt: return "ivt";
    case Strategy::chebyshev: return "chebyshev_containment";
  }
  return "";
}

struct CertifyConfig {
  std::vector<Strategy> plan{Strategy::hints, Strategy::grid, Strategy::ivt, Strategy::chebyshev};
  std::vector<TauPoint> hints;
  std::vector<TauPoint> grid;          // empty: default_grid()
  std::vector<int> chebyshev_first;    // indices m tried before 1..chebyshev_max
  int chebyshev_max = 24;
  Limits limits;
};

class NotACommutator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// 140/99 < sqrt(2): the widest rational range used for the z=0 companions.
inline Rat sqrt2_lower() { return make_rat(140, 99); }

/// Narrows an isolating interval [lo, hi] of a root of g (possibly
/// degenerate) to one with a strict sign change of g at its endpoints,
/// staying inside [lo, hi] widened by at most `pad`. Returns nullopt for
/// roots of even multiplicity.
inline std::optional<Interval> sign_change_bracket(const UPoly& g, Interval iv, const Rat& pad, const Interval& within) {
  if (iv.lo == iv.hi) {
    const Rat r = iv.lo;
    UPoly sqf = squarefree_part(g);
    SturmSequence s(sqf);
    Rat d = pad;
    for (int it = 0; it < 200; ++it, d /= 2) {
      Rat lo = r - d, hi = r + d;
      if (lo < within.lo || hi > within.hi) continue;
      if (sqf(lo) == 0 || sqf(hi) == 0) continue;
      if (s.count(lo, hi) != 1) continue;
      iv = {lo, hi};
      break;
    }
    if (iv.lo == iv.hi) return std::nullopt;
  }
  if (sgn(g(iv.lo)) * sgn(g(iv.hi)) == -1) return iv;
  return std::nullopt;
}

inline std::optional<Companion> sum_of_squares_companion(std::size_t var) {
  switch (var) {
    case 0: return Companion::z0_y_from_x;
    case 1: return Companion::z0_x_from_y;
    case 2: return Companion::y0_x_from_z;
  }
  return std::nullopt;
}

inline std::vector<MPoly> zero_row(std::size_t n) { return std::vector<MPoly>(n, MPoly(xyz_context())); }

/// Picks a bracket for a root of g in (-sqrt2, sqrt2). When g(0) != 0 the
/// bracket starts at 0 and ends at the nearest isolating endpoint on the
/// positive side with the opposite sign, falling back to the negative side.
inline std::optional<Interval> sqrt2_bracket(const UPoly& g) {
  const Rat q = sqrt2_lower();
  const Interval range{-q, q};
  auto ivs = sturm_isolate(g, range);
  const int s0 = sgn(g(Rat(0)));
  if (s0 != 0) {
    for (const auto& iv : ivs) {
      if (iv.lo < 0) continue;
      for (const Rat* e : {&iv.lo, &iv.hi})
        if (*e > 0 && sgn(g(*e)) == -s0) return Interval{Rat(0), *e};
    }
    for (auto it = ivs.rbegin(); it != ivs.rend(); ++it) {
      if (it->hi > 0) continue;
      for (const Rat* e : {&it->hi, &it->lo})
        if (*e < 0 && sgn(g(*e)) == -s0) return Interval{*e, Rat(0)};
    }
  }
  for (const auto& iv : ivs) {
    if (auto b = sign_change_bracket(g, iv, make_rat(1, 64), range)) return b;
  }
  return std::nullopt;
}

}  // namespace detail

/// Intermediate value witness from reduce_system: requires the basis of
/// <p_u, p_v> to be a single multiple of k and the residual of p_uv to be
/// univariate.
inline std::optional<IvtWitness> ivt_witness(const TraceSystem& sys, const Limits& limits = {}) {
  SystemReduction red = reduce_system(sys, limits);
  if (red.limits_hit || red.basis.size() != 1 || !red.residual_var) return std::nullopt;
  const MPoly& k = commutator_trace();
  const MPoly& b0 = red.basis[0];
  if (!(b0 == k * (b0.leading().c / k.leading().c))) return std::nullopt;
  const std::size_t var = *red.residual_var;
  UPoly g = UPoly::from_mpoly(red.g, var);
  auto br = detail::sqrt2_bracket(g);
  if (!br) return std::nullopt;
  const auto order = degrevlex(xyz_context());
  IvtWitness w;
  w.residual_var = xyz_context()->names()[var];
  w.generators = {b0, red.g};
  for (const MPoly* p : {&sys.p_u, &sys.p_v}) {
    Division d = divide(*p, red.basis, order);
    if (!d.remainder.is_zero()) return std::nullopt;
    w.cofactors.push_back({d.cofactors[0], MPoly(xyz_context())});
  }
  w.cofactors.push_back({red.residual_cofactors[0], MPoly::constant(xyz_context(), red.residual.leading().c)});
  w.g = red.g;
  w.bracket = *br;
  w.companion = *detail::sum_of_squares_companion(var);
  return w;
}

/// Containment of the system in <x - 1, S_m(z), k> together with a root of
/// S_m strictly inside (-1, 1); the largest such root is bracketed.
inline std::optional<IvtWitness> chebyshev_witness(const TraceSystem& sys, int m) {
  if (m < 1) return std::nullopt;
  const auto& ctx = xyz_context();
  const MPoly x = var(ctx, "x"), y = var(ctx, "y"), z = var(ctx, "z");
  const MPoly s = chebyshev_s_in(m, ctx, 2);
  const MPoly xm1 = x - Rat(1);
  const MPoly k = commutator_trace();
  // k(1, y, z); the leading monomials x, y^2, z^m in lex are pairwise coprime,
  // so these three polynomials form a Groebner basis.
  const MPoly k1 = y * y - y * z + z * z - Rat(1);
  const MPoly shift = x + Rat(1) - y * z;  // k = k1 + (x - 1) * shift
  const auto order = lex(ctx);
  IvtWitness w;
  for (const MPoly* p : sys.polys()) {
    Division d = divide(*p, {xm1, k1, s}, order);
    if (!d.remainder.is_zero()) return std::nullopt;
    w.cofactors.push_back({d.cofactors[0] - d.cofactors[1] * shift, d.cofactors[2], d.cofactors[1]});
  }
  UPoly su = UPoly::from_mpoly(s, 2);
  const Interval range{Rat(-1), Rat(1)};
  auto ivs = sturm_isolate(su, range);
  for (auto it = ivs.rbegin(); it != ivs.rend(); ++it) {
    auto br = detail::sign_change_bracket(su, *it, make_rat(1, 64), range);
    if (!br) continue;
    Interval b = *br;
    UPoly sqf = squarefree_part(su);
    // Pull the bracket away from +-1 if an endpoint touches them.
    while (b.lo <= -1 || b.hi >= 1) {
      Interval nb = refine(sqf, b, (b.hi - b.lo) / 2);
      if (nb.lo == nb.hi) break;
      b = nb;
    }
    if (b.lo <= -1 || b.hi >= 1 || sgn(su(b.lo)) * sgn(su(b.hi)) != -1) continue;
    w.residual_var = "z";
    w.generators = {xm1, s, k};
    w.g = s;
    w.bracket = b;
    w.companion = Companion::x1_y_from_z;
    return w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification

struct VerifyResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

namespace detail {

inline VerifyResult fail(std::string why) { return {false, std::move(why)}; }

inline VerifyResult verify_ivt(const TraceSystem& sys, const IvtWitness& w) {
  const auto& ctx = xyz_context();
  auto vi = ctx->find(w.residual_var);
  if (!vi) return fail("unknown residual variable");
  if (*vi != companion_residual_var(w.companion)) return fail("companion does not match residual variable");
  if (w.g.univariate_var() != vi) return fail("g is not univariate in the residual variable");
  const MPoly& k = commutator_trace();
  if (w.companion == Companion::x1_y_from_z) {
    if (w.generators.size() != 3) return fail("expected generators x-1, g, k");
    if (!(w.generators[0] == var(ctx, "x") - Rat(1))) return fail("first generator must be x-1");
    if (!(w.generators[1] == w.g)) return fail("second generator must be g");
    if (!(w.generators[2] == k)) return fail("third generator must be k");
  } else {
    if (w.generators.size() != 2) return fail("expected generators c*k, g");
    const MPoly& b0 = w.generators[0];
    if (b0.is_zero() || !(b0 == k * (b0.leading().c / k.leading().c))) return fail("first generator is not a multiple of k");
    if (!(w.generators[1] == w.g)) return fail("second generator must be g");
  }
  if (w.cofactors.size() != 3) return fail("expected three cofactor rows");
  auto system = sys.polys();
  for (std::size_t i = 0; i < 3; ++i) {
    if (w.cofactors[i].size() != w.generators.size()) return fail("cofactor row has the wrong length");
    MPoly sum(ctx);
    for (std::size_t j = 0; j < w.generators.size(); ++j) sum += w.cofactors[i][j] * w.generators[j];
    if (!(sum == *system[i])) return fail("cofactor identity fails for system polynomial " + std::to_string(i));
  }
  const Interval& b = w.bracket;
  if (!(b.lo < b.hi)) return fail("bracket is empty or degenerate");
  UPoly g = UPoly::from_mpoly(w.g, *vi);
  if (sgn(g(b.lo)) * sgn(g(b.hi)) != -1) return fail("g has no strict sign change on the bracket");
  if (w.companion == Companion::x1_y_from_z) {
    if (!(b.lo > -1 && b.hi < 1)) return fail("bracket not inside (-1,1)");
    if (!(4 - 3 * b.lo * b.lo > 0 && 4 - 3 * b.hi * b.hi > 0)) return fail("discriminant not positive on the bracket");
  } else {
    if (!(b.lo * b.lo < 2 && b.hi * b.hi < 2)) return fail("bracket endpoint squared is not below 2");
  }
  return {true, ""};
}

}  // namespace detail

/// Re-checks a certificate from its words alone: the system is rebuilt, and
/// every witness claim is re-evaluated in exact arithmetic.
inline VerifyResult verify_certificate_detailed(const Certificate& c) {
  using detail::fail;
  if (!c.certified()) return fail("certificate is not marked certified");
  if (!(c.word == commutator(c.system.u, c.system.v))) return fail("word is not [u,v]");
  TraceSystem fresh = build_system(c.system.u, c.system.v);
  if (!(fresh.p_u == c.system.p_u && fresh.p_v == c.system.p_v && fresh.p_uv == c.system.p_uv))
    return fail("stored system differs from the recomputed trace polynomials");
  if (const TauPoint* q = c.point()) {
    if (!in_tau(*q)) return fail("point is not in tau");
    if (!solves(fresh, *q)) return fail("point does not solve the system");
    return {true, ""};
  }
  if (const IvtWitness* w = c.ivt()) return detail::verify_ivt(fresh, *w);
  return fail("certificate carries no witness");
}

inline bool verify_certificate(const Certificate& c) {
  try {
    return verify_certificate_detailed(c).ok;
  } catch (const std::exception&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Certification

inline Certificate certify(const Word& u, const Word& v, const CertifyConfig& cfg = {}) {
  Certificate c;
  c.system = build_system(u, v);
  c.word = commutator(u, v);
  auto done = [&](Strategy s, Witness w) {
    c.status = CertStatus::certified;
    c.strategy = to_string(s);
    c.witness = std::move(w);
    return c;
  };
  for (Strategy s : cfg.plan) {
    switch (s) {
      case Strategy::hints:
        for (const auto& q : cfg.hints)
          if (in_tau(q) && solves(c.system, q)) return done(s, q);
        if (!cfg.hints.empty()) c.notes.push_back("no hint point solves the system");
        break;
      case Strategy::grid:
        if (auto q = exact_candidate_search(c.system, cfg.grid.empty() ? default_grid() : cfg.grid))
          return done(s, *q);
        c.notes.push_back("no grid point solves the system");
        break;
      case Strategy::ivt:
        if (auto w = ivt_witness(c.system, cfg.limits)) return done(s, *w);
        c.notes.push_back("no univariate residual with a sign change in (-sqrt2, sqrt2)");
        break;
      case Strategy::chebyshev: {
        std::vector<int> ms = cfg.chebyshev_first;
        for (int m = 1; m <= cfg.chebyshev_max; ++m) ms.push_back(m);
        for (int m : ms)
          if (auto w = chebyshev_witness(c.system, m)) return done(s, *w);
        c.notes.push_back("no containment in <x-1, S_m(z), k> for the tried m");
        break;
      }
    }
  }
  return c;
}

/// Certifies a word given as text; it must be a single outer commutator.
inline Certificate certify(std::string_view text, const CertifyConfig& cfg = {}) {
  auto parts = parse_commutator(text);
  if (!parts) throw NotACommutator("word is not of the form [u,v]: " + std::string(text));
  return certify(parts->first, parts->second, cfg);
}

/// Witness points for the families of commutator words, together with the
/// strategy order of the corresponding existence arguments.
inline CertifyConfig family_config(Family fam, std::int64_t n, std::optional<std::int64_t> m = {}) {
  (void)m;
  CertifyConfig cfg;
  const bool odd = n % 2 != 0;
  auto swap_xy = [](TauPoint p) { return TauPoint{p.y, p.x, p.z}; };
  auto swap_xz = [](TauPoint p) { return TauPoint{p.z, p.y, p.x}; };
  const TauPoint p110 = make_point(1, 1, 0), p101 = make_point(1, 0, 1);
  std::vector<TauPoint> a_hints;
  if (n == 1 || n == 2) a_hints = {p110};
  if (n == 4) a_hints = {make_point(-1, 1, 0)};
  switch (fam) {
    case Family::a: cfg.hints = a_hints; break;
    case Family::b:
      for (auto& p : a_hints) cfg.hints.push_back(swap_xy(p));
      break;
    case Family::c:
      if (n == 1) cfg.hints = {p101};
      else
        for (auto& p : a_hints) cfg.hints.push_back(swap_xz(p));
      break;
    case Family::d: cfg.hints = {make_point(0, 1, 1)}; break;
    case Family::e: {
      const auto r = ((n % 6) + 6) % 6;
      cfg.hints = {(r == 2 || r == 5) ? p101 : p110};
      break;
    }
    case Family::f: cfg.hints = {p101}; break;
    case Family::g:
      if (n == 2 || n == 4) cfg.hints = {make_point(1, 1, 1)};
      else if (odd) cfg.hints = {p110};
      break;
  }
  const bool odd_chebyshev_family = fam == Family::a || fam == Family::b || fam == Family::c;
  if (odd_chebyshev_family && odd && n >= 3) {
    cfg.plan = {Strategy::ivt, Strategy::hints, Strategy::grid, Strategy::chebyshev};
  } else if (fam == Family::g && !odd && n > 4) {
    cfg.chebyshev_first = {static_cast<int>(n) - 2};
    cfg.plan = {Strategy::chebyshev, Strategy::hints, Strategy::grid, Strategy::ivt};
  }
  return cfg;
}

inline Certificate certify_family(Family fam, std::int64_t n, std::optional<std::int64_t> m = {},
                                  const Limits& limits = {}) {
  auto [u, v] = family_parts(fam, n, m);
  CertifyConfig cfg = family_config(fam, n, m);
  cfg.limits = limits;
  return certify(u, v, cfg);
}

struct FamilySpec {
  Family family;
  std::int64_t n;
  std::optional<std::int64_t> m;
};

inline std::string format_family(const FamilySpec& f) {
  std::string s = std::string("family ") + family_char(f.family) + " n=" + std::to_string(f.n);
  if (f.m) s += " m=" + std::to_string(*f.m);
  return s;
}

/// Recognizes (u, v) as a family word with parameters up to `max_n`.
inline std::optional<FamilySpec> identify_family(const Word& u, const Word& v, std::int64_t max_n = 32) {
  if (!(u == commutator(Word::generator(Gen::a), Word::generator(Gen::b)))) return std::nullopt;
  for (Family f : {Family::a, Family::b, Family::c, Family::d, Family::e, Family::g}) {
    for (std::int64_t n = 1; n <= max_n; ++n) {
      if (n == 1 && (f == Family::d || f == Family::g)) continue;
      if (family_parts(f, n).second == v) return FamilySpec{f, n, std::nullopt};
    }
  }
  for (std::int64_t n = 2; n <= max_n; ++n)
    for (std::int64_t m = 2; m <= max_n; ++m)
      if (family_parts(Family::f, n, m).second == v) return FamilySpec{Family::f, n, m};
  return std::nullopt;
}

/// Uses the family plan when (u, v) is a recognized family word and the
/// generic plan otherwise.
inline Certificate certify_auto(const Word& u, const Word& v, const Limits& limits = {}) {
  CertifyConfig cfg;
  auto fam = identify_family(u, v);
  if (fam) cfg = family_config(fam->family, fam->n, fam->m);
  cfg.limits = limits;
  Certificate c = certify(u, v, cfg);
  if (fam) c.notes.insert(c.notes.begin(), "recognized as " + format_family(*fam));
  return c;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::json point_to_json(const TauPoint& q) {
  return {{"x", to_fraction_string(q.x)}, {"y", to_fraction_string(q.y)}, {"z", to_fraction_string(q.z)}};
}

inline nlohmann::json to_json(const Certificate& c) {
  using nlohmann::json;
  json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["word"] = format_word(c.word);
  j["u"] = format_word(c.system.u);
  j["v"] = format_word(c.system.v);
  j["status"] = to_string(c.status);
  j["strategy"] = c.strategy;
  j["system"] = {{"context", xyz_context()->names()},
                 {"p_u", to_string(c.system.p_u)},
                 {"p_v", to_string(c.system.p_v)},
                 {"p_uv", to_string(c.system.p_uv)}};
  if (const TauPoint* q = c.point()) {
    j["witness"] = {{"kind", "exact_point"}, {"point", point_to_json(*q)}};
  } else if (const IvtWitness* w = c.ivt()) {
    json gens = json::array(), cof = json::array();
    for (const auto& g : w->generators) gens.push_back(to_string(g));
    for (const auto& row : w->cofactors) {
      json r = json::array();
      for (const auto& p : row) r.push_back(to_string(p));
      cof.push_back(r);
    }
    j["witness"] = {{"kind", "ivt"},
                    {"residual_var", w->residual_var},
                    {"generators", gens},
                    {"cofactors", cof},
                    {"g", to_string(w->g)},
                    {"bracket", {{"lo", to_fraction_string(w->bracket.lo)}, {"hi", to_fraction_string(w->bracket.hi)}}},
                    {"companion", {{"tag", companion_tag(w->companion)}, {"bound", companion_bound(w->companion)}}}};
  } else {
    j["witness"] = {{"kind", "none"}};
  }
  j["notes"] = c.notes;
  return j;
}

class CertificateFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reads a certificate document. Only the words and witness are trusted as
/// input; the verifier recomputes everything else.
inline Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    const auto& ctx = xyz_context();
    Certificate c;
    c.system.u = parse_word(j.at("u").get<std::string>());
    c.system.v = parse_word(j.at("v").get<std::string>());
    c.word = parse_word(j.at("word").get<std::string>());
    const auto& s = j.at("system");
    c.system.p_u = parse_polynomial(s.at("p_u").get<std::string>(), ctx);
    c.system.p_v = parse_polynomial(s.at("p_v").get<std::string>(), ctx);
    c.system.p_uv = parse_polynomial(s.at("p_uv").get<std::string>(), ctx);
    const std::string status = j.at("status").get<std::string>();
    if (status == "certified") c.status = CertStatus::certified;
    else if (status == "inconclusive") c.status = CertStatus::inconclusive;
    else throw CertificateFormatError("unknown status '" + status + "'");
    c.strategy = j.value("strategy", "none");
    if (j.contains("notes")) c.notes = j.at("notes").get<std::vector<std::string>>();
    const auto& w = j.at("witness");
    const std::string kind = w.at("kind").get<std::string>();
    if (kind == "exact_point") {
      const auto& p = w.at("point");
      c.witness = TauPoint{parse_rat(p.at("x").get<std::string>()), parse_rat(p.at("y").get<std::string>()),
                           parse_rat(p.at("z").get<std::string>())};
    } else if (kind == "ivt") {
      IvtWitness iw;
      iw.residual_var = w.at("residual_var").get<std::string>();
      for (const auto& g : w.at("generators")) iw.generators.push_back(parse_polynomial(g.get<std::string>(), ctx));
      for (const auto& row : w.at("cofactors")) {
        std::vector<MPoly> r;
        for (const auto& p : row) r.push_back(parse_polynomial(p.get<std::string>(), ctx));
        iw.cofactors.push_back(std::move(r));
      }
      iw.g = parse_polynomial(w.at("g").get<std::string>(), ctx);
      iw.bracket = {parse_rat(w.at("bracket").at("lo").get<std::string>()),
                    parse_rat(w.at("bracket").at("hi").get<std::string>())};
      auto comp = companion_from_tag(w.at("companion").at("tag").get<std::string>());
      if (!comp) throw CertificateFormatError("unknown companion construction");
      iw.companion = *comp;
      c.witness = std::move(iw);
    } else if (kind != "none") {
      throw CertificateFormatError("unknown witness kind '" + kind + "'");
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw CertificateFormatError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace wordmap

#endif  // WORDMAP_SU2_CERTIFICATE_HPP
