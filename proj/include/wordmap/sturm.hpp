#ifndef WORDMAP_STURM_HPP
#define WORDMAP_STURM_HPP

// Exact real-root isolation for univariate polynomials via Sturm sequences.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wordmap/polynomial.hpp"

namespace wordmap {

struct Interval {
  Rat lo;
  Rat hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Dense univariate polynomial, coefficient i multiplies t^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly from_mpoly(const MPoly& p, std::size_t var) {
    std::vector<Rat> c(p.degree_in(var) + 1);
    for (const auto& t : p.terms()) {
      if (t.m.deg != t.m.e[var]) throw std::invalid_argument("polynomial is not univariate");
      c[t.m.e[var]] = t.c;
    }
    return UPoly(std::move(c));
  }

  MPoly to_mpoly(const ContextPtr& ctx, std::size_t var) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) terms.push_back({Monomial::var(var, static_cast<std::uint16_t>(i)), c_[i]});
    return MPoly::from_terms(ctx, std::move(terms));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& lead() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat operator()(const Rat& t) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= t;
      acc += c_[i];
    }
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> d = c_;
    Rat l = lead();
    for (auto& v : d) v /= l;
    return UPoly(std::move(d));
  }

  UPoly operator-() const {
    std::vector<Rat> d = c_;
    for (auto& v : d) v = -v;
    return UPoly(std::move(d));
  }

  /// Polynomial long division: returns (quotient, remainder).
  friend std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> r = num.c_;
    if (num.degree() < den.degree()) return {UPoly(), num};
    std::vector<Rat> q(num.c_.size() - den.c_.size() + 1);
    for (int i = num.degree(); i >= den.degree(); --i) {
      if (r[i] == 0) continue;
      Rat f = r[i] / den.lead();
      q[i - den.degree()] = f;
      for (int j = 0; j <= den.degree(); ++j) r[i - den.degree() + j] -= f * den.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same roots, all simple.
inline UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
    seq_.push_back(p);
    if (p.degree() == 0) return;
    seq_.push_back(p.derivative());
    while (true) {
      UPoly r = -divmod(seq_[seq_.size() - 2], seq_.back()).second;
      if (r.is_zero()) break;
      seq_.push_back(std::move(r));
    }
  }

  int variations(const Rat& t) const {
    int count = 0;
    int prev = 0;
    for (const auto& q : seq_) {
      int s = sgn(q(t));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  /// Distinct real roots in (a, b] for a square-free polynomial.
  int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }

 private:
  std::vector<UPoly> seq_;
};

inline int sign_at(const UPoly& g, const Rat& t) { return sgn(g(t)); }

inline int sign_at(const MPoly& g, const Rat& point) {
  auto v = g.univariate_var();
  if (!v) {
    if (g.is_constant()) return sgn(g.constant_term());
    throw std::invalid_argument("sign_at requires a univariate polynomial");
  }
  return sign_at(UPoly::from_mpoly(g, *v), point);
}

namespace detail {

inline void isolate_rec(const UPoly& sqf, const SturmSequence& s, Rat a, Rat b, std::vector<Interval>& out) {
  int n = s.count(a, b);
  if (n == 0) return;
  if (n == 1) {
    if (sgn(sqf(b)) == 0) {
      out.push_back({b, b});
      return;
    }
    // Pull the left end off a root that belongs to the neighbouring interval.
    while (sgn(sqf(a)) == 0) {
      Rat m = (a + b) / 2;
      if (s.count(m, b) == 1) {
        a = m;
      } else if (sgn(sqf(m)) == 0) {
        out.push_back({m, m});
        return;
      } else {
        b = m;
      }
    }
    out.push_back({a, b});
    return;
  }
  Rat m = (a + b) / 2;
  isolate_rec(sqf, s, a, m, out);
  isolate_rec(sqf, s, m, b, out);
}

}  // namespace detail

/// One isolating interval per distinct real root in the closed range,
/// ascending. Degenerate intervals [r, r] mark exact rational roots; for the
/// others both endpoints are non-roots of the square-free part and that part
/// changes sign across the interval.
inline std::vector<Interval> sturm_isolate(const UPoly& g, const Interval& range) {
  if (g.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
  if (range.lo > range.hi) throw std::invalid_argument("empty range");
  std::vector<Interval> out;
  if (g.degree() == 0) return out;
  UPoly sqf = squarefree_part(g);
  SturmSequence s(sqf);
  if (sgn(sqf(range.lo)) == 0) out.push_back({range.lo, range.lo});
  if (range.lo < range.hi) detail::isolate_rec(sqf, s, range.lo, range.hi, out);
  return out;
}

inline std::vector<Interval> sturm_isolate(const MPoly& g, const Interval& range) {
  if (g.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
  auto v = g.univariate_var();
  if (!v) {
    if (g.is_constant()) return {};
    throw std::invalid_argument("sturm_isolate requires a univariate polynomial");
  }
  return sturm_isolate(UPoly::from_mpoly(g, *v), range);
}

/// Bisects an isolating interval of a square-free polynomial until its width
/// is at most `width`. Degenerate intervals are returned unchanged.
inline Interval refine(const UPoly& sqf, Interval iv, const Rat& width) {
  if (iv.lo == iv.hi) return iv;
  int slo = sgn(sqf(iv.lo));
  while (iv.hi - iv.lo > width) {
    Rat m = (iv.lo + iv.hi) / 2;
    int sm = sgn(sqf(m));
    if (sm == 0) return {m, m};
    if (sm == slo) iv.lo = m;
    else iv.hi = m;
  }
  return iv;
}

}  // namespace wordmap

#endif  // WORDMAP_STURM_HPP
