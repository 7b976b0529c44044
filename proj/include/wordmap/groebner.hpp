#ifndef WORDMAP_GROEBNER_HPP
#define WORDMAP_GROEBNER_HPP

// Buchberger's algorithm over Q with Gebauer-Moller pair elimination, the
// sugar selection strategy and geobucket reduction. Intermediate basis
// elements are kept monic.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordmap/polynomial.hpp"

namespace wordmap {

enum class OrderKind { degrevlex, lex };

struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  ContextPtr ctx;

  int compare(const Monomial& a, const Monomial& b) const {
    return kind == OrderKind::degrevlex ? cmp_grevlex(a, b) : cmp_lex(a, b);
  }
};

inline MonomialOrder degrevlex(ContextPtr ctx) { return {OrderKind::degrevlex, std::move(ctx)}; }
inline MonomialOrder lex(ContextPtr ctx) { return {OrderKind::lex, std::move(ctx)}; }

struct Limits {
  std::size_t max_pairs = 200000;
  std::uint32_t max_degree = 60;
  double budget_seconds = 0;  // 0: no time limit
  const std::atomic<bool>* cancel = nullptr;
};

struct Ideal {
  std::vector<MPoly> generators;
  MonomialOrder order;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped_degree = 0;
  std::size_t max_basis_size = 0;
  double seconds = 0;
};

struct GroebnerBasis {
  std::vector<MPoly> basis;  // reduced and monic unless limits_hit
  MonomialOrder order;
  bool limits_hit = false;
  std::string limit_reason;
  GroebnerStats stats;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero(); }
};

enum class Membership { member, non_member, inconclusive };

inline const char* to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    case Membership::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace gb_detail {

using TermVec = std::vector<Term>;  // descending in the active order

template <class Cmp>
struct Engine {
  Cmp cmp;

  TermVec sorted(TermVec t) const {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return cmp(a.m, b.m) > 0; });
    return t;
  }

  /// Sum of two ascending vectors, consuming both.
  TermVec merge_asc(TermVec&& p, TermVec&& q) const {
    TermVec r;
    r.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() && j < q.size()) {
      int c = cmp(p[i].m, q[j].m);
      if (c < 0) {
        r.push_back(std::move(p[i++]));
      } else if (c > 0) {
        r.push_back(std::move(q[j++]));
      } else {
        p[i].c += q[j].c;
        if (p[i].c != 0) r.push_back(std::move(p[i]));
        ++i;
        ++j;
      }
    }
    for (; i < p.size(); ++i) r.push_back(std::move(p[i]));
    for (; j < q.size(); ++j) r.push_back(std::move(q[j]));
    return r;
  }

  // Buckets hold ascending vectors, so the leading term of each sits at
  // back() and can be popped in O(1).
  class Geobucket {
   public:
    explicit Geobucket(const Engine& e) : e_(e) {}

    void add(TermVec&& asc) {
      std::size_t i = 0;
      while (capacity(i) < asc.size()) ++i;
      while (true) {
        if (i >= buckets_.size()) buckets_.resize(i + 1);
        if (buckets_[i].empty()) {
          buckets_[i] = std::move(asc);
          return;
        }
        asc = e_.merge_asc(std::move(buckets_[i]), std::move(asc));
        buckets_[i].clear();
        if (asc.size() <= capacity(i)) {
          buckets_[i] = std::move(asc);
          return;
        }
        ++i;
      }
    }

    /// Removes and returns the leading term; false when empty.
    bool pop_leading(Term& out) {
      while (true) {
        int best = -1;
        for (std::size_t i = 0; i < buckets_.size(); ++i) {
          if (buckets_[i].empty()) continue;
          if (best < 0) {
            best = static_cast<int>(i);
            continue;
          }
          int c = e_.cmp(buckets_[i].back().m, buckets_[best].back().m);
          if (c > 0) {
            best = static_cast<int>(i);
          } else if (c == 0) {
            buckets_[best].back().c += buckets_[i].back().c;
            buckets_[i].pop_back();
          }
        }
        if (best < 0) return false;
        Term t = std::move(buckets_[best].back());
        buckets_[best].pop_back();
        if (t.c != 0) {
          out = std::move(t);
          return true;
        }
      }
    }

   private:
    static std::size_t capacity(std::size_t i) { return std::size_t(4) << (2 * i); }
    const Engine& e_;
    std::vector<TermVec> buckets_;
  };

  /// -c * m * tail(g) in ascending order, where tail drops g's leading term.
  static TermVec scaled_tail_asc(const TermVec& g, const Monomial& m, const Rat& c) {
    TermVec r;
    r.reserve(g.size() - 1);
    for (std::size_t k = g.size(); k-- > 1;) r.push_back({g[k].m * m, -(c * g[k].c)});
    return r;
  }

  struct Reduced {
    TermVec rem;
    bool unit = false;  // leading remainder term is a constant
  };

  /// Full reduction of p by `basis` (leading coefficients arbitrary).
  /// `cofactors`, when given, receives per-basis quotient terms.
  /// With `stop_at_unit`, returns as soon as a constant leading remainder
  /// term appears.
  Reduced reduce(TermVec p, const std::vector<const TermVec*>& basis,
                 std::vector<TermVec>* cofactors, bool stop_at_unit) const {
    Reduced out;
    if (p.empty()) return out;
    Geobucket bucket(*this);
    std::reverse(p.begin(), p.end());
    bucket.add(std::move(p));
    Term lead;
    while (bucket.pop_leading(lead)) {
      const TermVec* div = nullptr;
      std::size_t which = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (divides(basis[i]->front().m, lead.m)) {
          div = basis[i];
          which = i;
          break;
        }
      }
      if (!div) {
        if (out.rem.empty() && lead.m.is_one()) {
          out.unit = true;
          out.rem.push_back(std::move(lead));
          if (stop_at_unit) return out;
        } else {
          out.rem.push_back(std::move(lead));
        }
        continue;
      }
      Monomial q = quotient(lead.m, div->front().m);
      Rat f = lead.c / div->front().c;
      if (div->size() > 1) bucket.add(scaled_tail_asc(*div, q, f));
      if (cofactors) (*cofactors)[which].push_back({q, std::move(f)});
    }
    return out;
  }

  static void make_monic(TermVec& p) {
    if (p.empty() || p.front().c == 1) return;
    Rat inv = 1 / p.front().c;
    for (auto& t : p) t.c *= inv;
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t sugar;
  };

  TermVec spoly(const TermVec& f, const TermVec& g, const Monomial& l) const {
    // f, g monic: S = (l/LM f) tail(f) - (l/LM g) tail(g).
    Monomial mf = quotient(l, f.front().m), mg = quotient(l, g.front().m);
    TermVec a, b;
    a.reserve(f.size());
    b.reserve(g.size());
    for (std::size_t k = f.size(); k-- > 1;) a.push_back({f[k].m * mf, f[k].c});
    for (std::size_t k = g.size(); k-- > 1;) b.push_back({g[k].m * mg, -g[k].c});
    TermVec s = merge_asc(std::move(a), std::move(b));
    std::reverse(s.begin(), s.end());
    return s;
  }

  struct Result {
    std::vector<TermVec> basis;
    bool limits_hit = false;
    bool unit = false;
    std::string reason;
    GroebnerStats stats;
  };

  Result run(std::vector<TermVec> gens, const Limits& limits) const {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    Result res;

    std::vector<TermVec> polys;
    std::vector<std::uint32_t> sugar;
    std::vector<bool> active;
    std::vector<Pair> pairs;

    auto finish = [&](Result& r) {
      r.stats.seconds = std::chrono::duration<double>(clock::now() - start).count();
      return r;
    };
    auto unit_result = [&]() {
      Result r;
      r.unit = true;
      r.basis.push_back(TermVec{{Monomial{}, Rat(1)}});
      r.stats = res.stats;
      return finish(r);
    };

    auto active_basis = [&]() {
      std::vector<const TermVec*> b;
      for (std::size_t i = 0; i < polys.size(); ++i)
        if (active[i]) b.push_back(&polys[i]);
      return b;
    };

    auto deg_of = [](const TermVec& p) {
      std::uint32_t d = 0;
      for (const auto& t : p) d = std::max(d, t.m.deg);
      return d;
    };

    // Gebauer-Moller update with the new element h = polys.back().
    auto update = [&]() {
      const std::size_t h = polys.size() - 1;
      const Monomial& lh = polys[h].front().m;
      std::vector<Pair> cand;
      for (std::size_t g = 0; g < h; ++g) {
        if (!active[g]) continue;
        const Monomial& lg = polys[g].front().m;
        Monomial l = lcm(lg, lh);
        std::uint32_t s = std::max(sugar[g] + l.deg - lg.deg, sugar[h] + l.deg - lh.deg);
        cand.push_back({g, h, l, s});
      }
      auto is_coprime = [&](const Pair& p) { return coprime(polys[p.i].front().m, polys[p.j].front().m); };
      // Criterion M/F: keep only pairs whose lcm is not a proper multiple of
      // another candidate's lcm (ties keep one representative).
      std::vector<Pair> d;
      for (std::size_t a = 0; a < cand.size(); ++a) {
        bool drop = false;
        for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
          if (a == b) continue;
          if (divides(cand[b].lcm, cand[a].lcm)) {
            if (!(cand[b].lcm == cand[a].lcm)) drop = true;
            else if (b < a) drop = true;
          }
        }
        if (!drop) d.push_back(cand[a]);
      }
      // Product criterion, applied after the chain criterion so that a
      // coprime pair still suppresses its equal-lcm siblings.
      std::vector<Pair> e;
      for (auto& p : d)
        if (!is_coprime(p)) e.push_back(p);
      // Criterion B on old pairs.
      std::vector<Pair> kept;
      kept.reserve(pairs.size() + e.size());
      for (auto& p : pairs) {
        if (divides(lh, p.lcm)) {
          Monomial l1 = lcm(polys[p.i].front().m, lh), l2 = lcm(polys[p.j].front().m, lh);
          if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
        }
        kept.push_back(p);
      }
      for (auto& p : e) kept.push_back(p);
      pairs = std::move(kept);
      for (std::size_t g = 0; g < h; ++g)
        if (active[g] && divides(lh, polys[g].front().m)) active[g] = false;
    };

    auto add_poly = [&](TermVec p, std::uint32_t s) {
      make_monic(p);
      polys.push_back(std::move(p));
      sugar.push_back(s);
      active.push_back(true);
      update();
      std::size_t n = std::count(active.begin(), active.end(), true);
      res.stats.max_basis_size = std::max(res.stats.max_basis_size, n);
    };

    // Seed: reduce each generator by the ones already accepted.
    for (auto& g : gens) {
      if (g.empty()) continue;
      std::uint32_t s = deg_of(g);
      auto r = reduce(std::move(g), active_basis(), nullptr, true);
      if (r.unit) return unit_result();
      if (r.rem.empty()) continue;
      add_poly(std::move(r.rem), s);
    }

    while (!pairs.empty()) {
      if (limits.cancel && limits.cancel->load(std::memory_order_relaxed)) {
        res.limits_hit = true;
        res.reason = "cancelled";
        break;
      }
      if (limits.budget_seconds > 0 &&
          std::chrono::duration<double>(clock::now() - start).count() > limits.budget_seconds) {
        res.limits_hit = true;
        res.reason = "time budget exhausted";
        break;
      }
      if (res.stats.pairs_reduced >= limits.max_pairs) {
        res.limits_hit = true;
        res.reason = "max_pairs reached";
        break;
      }
      // Lowest sugar first, then smallest lcm.
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const Pair& p = pairs[k];
        const Pair& q = pairs[best];
        if (p.sugar < q.sugar || (p.sugar == q.sugar && cmp(p.lcm, q.lcm) < 0)) best = k;
      }
      Pair pr = pairs[best];
      pairs[best] = pairs.back();
      pairs.pop_back();
      if (pr.lcm.deg > limits.max_degree) {
        res.limits_hit = true;
        res.reason = "max_degree exceeded";
        ++res.stats.pairs_skipped_degree;
        continue;
      }
      ++res.stats.pairs_reduced;
      TermVec s = spoly(polys[pr.i], polys[pr.j], pr.lcm);
      auto r = reduce(std::move(s), active_basis(), nullptr, true);
      if (r.unit) return unit_result();
      if (r.rem.empty()) {
        ++res.stats.zero_reductions;
        continue;
      }
      add_poly(std::move(r.rem), pr.sugar);
    }

    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) idx.push_back(i);
    if (!res.limits_hit) {
      // Interreduce tails to obtain the reduced basis.
      for (std::size_t a : idx) {
        std::vector<const TermVec*> others;
        for (std::size_t b : idx)
          if (b != a) others.push_back(&polys[b]);
        TermVec tail(polys[a].begin() + 1, polys[a].end());
        auto r = reduce(std::move(tail), others, nullptr, false);
        TermVec np;
        np.push_back(polys[a].front());
        for (auto& t : r.rem) np.push_back(std::move(t));
        polys[a] = std::move(np);
      }
    }
    for (std::size_t i : idx) res.basis.push_back(polys[i]);
    std::sort(res.basis.begin(), res.basis.end(),
              [&](const TermVec& a, const TermVec& b) { return cmp(a.front().m, b.front().m) > 0; });
    return finish(res);
  }
};

struct GrevlexCmp {
  int operator()(const Monomial& a, const Monomial& b) const { return cmp_grevlex(a, b); }
};
struct LexCmp {
  int operator()(const Monomial& a, const Monomial& b) const { return cmp_lex(a, b); }
};

template <class F>
decltype(auto) with_engine(const MonomialOrder& order, F&& f) {
  if (order.kind == OrderKind::degrevlex) return f(Engine<GrevlexCmp>{});
  return f(Engine<LexCmp>{});
}

inline TermVec to_terms(const MPoly& p) { return p.terms(); }

inline void check_context(const MPoly& p, const MonomialOrder& order) {
  if (p.context() && order.ctx && !same_context(p.context(), order.ctx))
    throw ContextMismatch("polynomial context differs from the monomial order's context");
}

}  // namespace gb_detail

struct Division {
  MPoly remainder;
  std::vector<MPoly> cofactors;  // p = sum cofactors[i] * basis[i] + remainder
};

/// Multivariate division of p by `basis` in `order`, recording quotients.
inline Division divide(const MPoly& p, const std::vector<MPoly>& basis, const MonomialOrder& order) {
  gb_detail::check_context(p, order);
  return gb_detail::with_engine(order, [&](const auto& eng) {
    std::vector<gb_detail::TermVec> bs;
    for (const auto& g : basis) {
      gb_detail::check_context(g, order);
      bs.push_back(eng.sorted(g.terms()));
    }
    std::vector<const gb_detail::TermVec*> ptr;
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < bs.size(); ++i)
      if (!bs[i].empty()) {
        ptr.push_back(&bs[i]);
        map.push_back(i);
      }
    std::vector<gb_detail::TermVec> cof(ptr.size());
    auto r = eng.reduce(eng.sorted(p.terms()), ptr, &cof, false);
    Division d;
    d.remainder = MPoly::from_terms(order.ctx, std::move(r.rem));
    d.cofactors.assign(basis.size(), MPoly(order.ctx));
    for (std::size_t i = 0; i < ptr.size(); ++i)
      d.cofactors[map[i]] = MPoly::from_terms(order.ctx, std::move(cof[i]));
    return d;
  });
}

inline MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis, const MonomialOrder& order) {
  gb_detail::check_context(p, order);
  return gb_detail::with_engine(order, [&](const auto& eng) {
    std::vector<gb_detail::TermVec> bs;
    for (const auto& g : basis)
      if (!g.is_zero()) bs.push_back(eng.sorted(g.terms()));
    std::vector<const gb_detail::TermVec*> ptr;
    for (auto& b : bs) ptr.push_back(&b);
    auto r = eng.reduce(eng.sorted(p.terms()), ptr, nullptr, false);
    return MPoly::from_terms(order.ctx, std::move(r.rem));
  });
}

/// Leading term of p in `order`.
inline Term leading_term(const MPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::logic_error("leading term of zero polynomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (order.compare(t.m, best->m) > 0) best = &t;
  return *best;
}

inline GroebnerBasis buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order,
                                const Limits& limits = {}) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  for (const auto& g : gens) gb_detail::check_context(g, order);
  return gb_detail::with_engine(order, [&](const auto& eng) {
    std::vector<gb_detail::TermVec> in;
    for (const auto& g : gens) in.push_back(eng.sorted(g.terms()));
    auto r = eng.run(std::move(in), limits);
    GroebnerBasis out;
    out.order = order;
    out.limits_hit = r.limits_hit;
    out.limit_reason = r.reason;
    out.stats = r.stats;
    for (auto& b : r.basis) out.basis.push_back(MPoly::from_terms(order.ctx, std::move(b)));
    return out;
  });
}

/// member iff normal_form(p, GB(I)) = 0. A zero remainder modulo a partial
/// basis still proves membership; otherwise exhausted limits give
/// inconclusive.
inline Membership ideal_membership(const MPoly& p, const Ideal& ideal, const Limits& limits = {}) {
  GroebnerBasis g = buchberger(ideal.generators, ideal.order, limits);
  if (g.is_unit()) return Membership::member;
  if (normal_form(p, g.basis, ideal.order).is_zero()) return Membership::member;
  return g.limits_hit ? Membership::inconclusive : Membership::non_member;
}

/// Picks a variable name not present in ctx.
inline std::string fresh_variable_name(const Context& ctx, std::string base = "u") {
  std::string name = base;
  for (int k = 0; ctx.find(name); ++k) name = base + std::to_string(k);
  return name;
}

struct RadicalResult {
  Membership result = Membership::inconclusive;
  GroebnerStats stats;
  std::string limit_reason;
};

/// p in sqrt(I) iff 1 in I + <1 - u p> for a fresh variable u.
inline RadicalResult radical_membership_detailed(const MPoly& p, const Ideal& ideal, const Limits& limits = {}) {
  RadicalResult out;
  if (p.is_zero()) {
    out.result = Membership::member;
    return out;
  }
  const ContextPtr& ctx = ideal.order.ctx;
  if (ctx->size() + 1 > kMaxVars) throw std::invalid_argument("no room to adjoin a variable");
  std::vector<std::string> names = ctx->names();
  std::string u = fresh_variable_name(*ctx);
  names.push_back(u);
  ContextPtr ext = make_context(names);
  std::vector<MPoly> gens;
  for (const auto& g : ideal.generators) gens.push_back(embed(g, ext));
  gens.push_back(constant(ext, 1) - var(ext, u) * embed(p, ext));
  GroebnerBasis g = buchberger(gens, degrevlex(ext), limits);
  out.stats = g.stats;
  out.limit_reason = g.limit_reason;
  if (g.is_unit()) out.result = Membership::member;
  else out.result = g.limits_hit ? Membership::inconclusive : Membership::non_member;
  return out;
}

inline Membership radical_membership(const MPoly& p, const Ideal& ideal, const Limits& limits = {}) {
  return radical_membership_detailed(p, ideal, limits).result;
}

}  // namespace wordmap

#endif  // WORDMAP_GROEBNER_HPP
