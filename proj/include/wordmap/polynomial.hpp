#ifndef WORDMAP_POLYNOMIAL_HPP
#define WORDMAP_POLYNOMIAL_HPP

// Sparse multivariate polynomials with exact rational coefficients.
//
// A polynomial lives in a variable context (an ordered list of names). Terms
// are stored in descending graded reverse lexicographic order, which is also
// the order of the canonical text form.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wordmap/rational.hpp"

namespace wordmap {

inline constexpr std::size_t kMaxVars = 8;

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Context {
 public:
  explicit Context(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars)
      throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }
  std::size_t index(const std::string& n) const {
    if (auto i = find(n)) return *i;
    throw UnknownVariable("unknown variable " + n);
  }

  friend bool operator==(const Context& a, const Context& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const Context>;

inline ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const Context>(std::move(names));
}

/// The trace-coordinate context [x, y, z].
inline const ContextPtr& xyz_context() {
  static const ContextPtr ctx = make_context({"x", "y", "z"});
  return ctx;
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Monomials

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial var(std::size_t i, std::uint16_t power = 1) {
    Monomial m;
    m.e[i] = power;
    m.deg = power;
    return m;
  }
  bool is_one() const { return deg == 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t s = std::uint32_t(a.e[i]) + b.e[i];
    if (s > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

inline bool divides(const Monomial& d, const Monomial& m) {
  if (d.deg > m.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (d.e[i] > m.e[i]) return false;
  return true;
}

/// m / d; requires divides(d, m).
inline Monomial quotient(const Monomial& m, const Monomial& d) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(m.e[i] - d.e[i]);
  r.deg = m.deg - d.deg;
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

/// Graded reverse lexicographic comparison: <0, 0, >0.
inline int cmp_grevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

/// Lexicographic comparison with variable 0 largest.
inline int cmp_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

struct Term {
  Monomial m;
  Rat c;
};

// ---------------------------------------------------------------------------
// MPoly

class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static MPoly constant(ContextPtr ctx, const Rat& c) {
    MPoly p(std::move(ctx));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static MPoly variable(ContextPtr ctx, std::size_t i) {
    if (i >= ctx->size()) throw UnknownVariable("variable index out of range");
    MPoly p(std::move(ctx));
    p.terms_.push_back({Monomial::var(i), Rat(1)});
    return p;
  }
  static MPoly variable(ContextPtr ctx, const std::string& name) {
    std::size_t i = ctx->index(name);
    return variable(std::move(ctx), i);
  }
  static MPoly monomial(ContextPtr ctx, const Monomial& m, const Rat& c) {
    MPoly p(std::move(ctx));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  /// Takes ownership of arbitrary terms; sorts and merges duplicates.
  static MPoly from_terms(ContextPtr ctx, std::vector<Term> terms) {
    MPoly p(std::move(ctx));
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return cmp_grevlex(x.m, y.m) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().m == t.m) {
        p.terms_.back().c += t.c;
      } else {
        if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
    return p;
  }

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  Rat constant_term() const {
    if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
    return Rat(0);
  }
  const Term& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.deg);
    return d;
  }
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.m.e[var]);
    return d;
  }
  /// Bit mask of variables that occur.
  unsigned support() const {
    unsigned mask = 0;
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (t.m.e[i]) mask |= 1u << i;
    return mask;
  }
  /// Index of the only occurring variable; nullopt for constants or
  /// polynomials in two or more variables.
  std::optional<std::size_t> univariate_var() const {
    unsigned s = support();
    if (s == 0 || (s & (s - 1)) != 0) return std::nullopt;
    return static_cast<std::size_t>(__builtin_ctz(s));
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  friend MPoly operator+(const MPoly& p, const MPoly& q) { return combine(p, q, false); }
  friend MPoly operator-(const MPoly& p, const MPoly& q) { return combine(p, q, true); }
  friend MPoly operator*(const MPoly& p, const MPoly& q) {
    ContextPtr ctx = join(p, q);
    if (p.is_zero() || q.is_zero()) return MPoly(ctx);
    const MPoly& small = p.size() <= q.size() ? p : q;
    const MPoly& big = p.size() <= q.size() ? q : p;
    if (small.size() == 1) return big.mul_term(small.terms_[0].m, small.terms_[0].c).with_context(ctx);
    std::vector<Term> prod;
    prod.reserve(p.size() * q.size());
    for (const auto& s : small.terms_)
      for (const auto& t : big.terms_) prod.push_back({s.m * t.m, s.c * t.c});
    return from_terms(ctx, std::move(prod));
  }
  friend MPoly operator*(const MPoly& p, const Rat& c) {
    if (c == 0) return MPoly(p.ctx_);
    MPoly r = p;
    for (auto& t : r.terms_) t.c *= c;
    return r;
  }
  friend MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }
  friend MPoly operator/(const MPoly& p, const Rat& c) {
    if (c == 0) throw std::domain_error("polynomial division by zero");
    MPoly r = p;
    for (auto& t : r.terms_) t.c /= c;
    return r;
  }
  friend MPoly operator+(const MPoly& p, const Rat& c) { return p + constant(p.ctx_, c); }
  friend MPoly operator-(const MPoly& p, const Rat& c) { return p - constant(p.ctx_, c); }
  friend MPoly operator+(const Rat& c, const MPoly& p) { return p + c; }
  friend MPoly operator-(const Rat& c, const MPoly& p) { return constant(p.ctx_, c) - p; }

  MPoly& operator+=(const MPoly& q) { return *this = *this + q; }
  MPoly& operator-=(const MPoly& q) { return *this = *this - q; }
  MPoly& operator*=(const MPoly& q) { return *this = *this * q; }

  /// Multiplies by c * m. Order is preserved because grevlex is multiplicative.
  MPoly mul_term(const Monomial& m, const Rat& c) const {
    MPoly r(ctx_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
  }

  friend bool operator==(const MPoly& p, const MPoly& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    if (!(p.is_zero() || same_context(p.ctx_, q.ctx_))) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
      if (!(p.terms_[i].m == q.terms_[i].m) || p.terms_[i].c != q.terms_[i].c) return false;
    return true;
  }

  /// Replaces the context by an equal one (same names).
  MPoly with_context(ContextPtr ctx) const {
    if (ctx_ && ctx && !(*ctx_ == *ctx)) throw ContextMismatch("incompatible variable contexts");
    MPoly r = *this;
    r.ctx_ = std::move(ctx);
    return r;
  }

 private:
  static ContextPtr join(const MPoly& p, const MPoly& q) {
    if (!p.ctx_) return q.ctx_;
    if (!q.ctx_) return p.ctx_;
    if (!same_context(p.ctx_, q.ctx_)) throw ContextMismatch("incompatible variable contexts");
    return p.ctx_;
  }

  static MPoly combine(const MPoly& p, const MPoly& q, bool subtract) {
    MPoly r(join(p, q));
    r.terms_.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
      int c = i == p.size() ? -1 : j == q.size() ? 1 : cmp_grevlex(p.terms_[i].m, q.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(p.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({q.terms_[j].m, subtract ? Rat(-q.terms_[j].c) : q.terms_[j].c});
        ++j;
      } else {
        Rat s = subtract ? Rat(p.terms_[i].c - q.terms_[j].c) : Rat(p.terms_[i].c + q.terms_[j].c);
        if (s != 0) r.terms_.push_back({p.terms_[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

inline MPoly pow(const MPoly& p, unsigned exponent) {
  MPoly result = MPoly::constant(p.context(), Rat(1));
  MPoly base = p;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

inline MPoly var(const ContextPtr& ctx, const std::string& name) { return MPoly::variable(ctx, name); }
inline MPoly constant(const ContextPtr& ctx, const Rat& c) { return MPoly::constant(ctx, c); }
inline MPoly constant(const ContextPtr& ctx, long c) { return MPoly::constant(ctx, Rat(c)); }

/// Evaluates with one value per context variable, in any commutative ring
/// type T that can be built from the rational coefficients via `coeff`.
template <class T, class CoeffFn>
T eval_as(const MPoly& p, const std::vector<T>& point, CoeffFn coeff, T zero, T one) {
  const std::size_t n = p.context() ? p.context()->size() : 0;
  if (point.size() < n) throw std::invalid_argument("evaluation point has too few coordinates");
  std::array<std::vector<T>, kMaxVars> powers;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t d = p.degree_in(i);
    powers[i].reserve(d + 1);
    powers[i].push_back(one);
    for (std::uint32_t k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  T acc = zero;
  for (const auto& t : p.terms()) {
    T v = coeff(t.c);
    for (std::size_t i = 0; i < n; ++i)
      if (t.m.e[i]) v = v * powers[i][t.m.e[i]];
    acc = acc + v;
  }
  return acc;
}

inline Rat eval(const MPoly& p, const std::vector<Rat>& point) {
  return eval_as<Rat>(p, point, [](const Rat& c) { return c; }, Rat(0), Rat(1));
}

/// Replaces variable `var` by `replacement` (same context).
inline MPoly substitute(const MPoly& p, std::size_t var, const MPoly& replacement) {
  const ContextPtr& ctx = p.context();
  if (!ctx || var >= ctx->size()) throw UnknownVariable("unknown variable index");
  if (replacement.context() && !same_context(ctx, replacement.context()))
    throw ContextMismatch("replacement lives in a different context");
  std::uint32_t d = p.degree_in(var);
  std::vector<MPoly> powers{MPoly::constant(ctx, Rat(1))};
  for (std::uint32_t k = 1; k <= d; ++k) powers.push_back(powers.back() * replacement);
  // Group terms by exponent of var to do one product per power.
  std::vector<std::vector<Term>> groups(d + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.m;
    std::uint16_t k = m.e[var];
    m.e[var] = 0;
    m.deg -= k;
    groups[k].push_back({m, t.c});
  }
  MPoly result(ctx);
  for (std::uint32_t k = 0; k <= d; ++k) {
    if (groups[k].empty()) continue;
    result += MPoly::from_terms(ctx, std::move(groups[k])) * powers[k];
  }
  return result;
}

inline MPoly substitute(const MPoly& p, const std::string& var, const MPoly& replacement) {
  return substitute(p, p.context()->index(var), replacement);
}

/// Re-expresses p in `target`, which must contain every variable of p's
/// context that actually occurs.
inline MPoly embed(const MPoly& p, const ContextPtr& target) {
  const ContextPtr& src = p.context();
  if (!src) return MPoly(target);
  std::array<std::size_t, kMaxVars> map{};
  unsigned s = p.support();
  for (std::size_t i = 0; i < src->size(); ++i) {
    auto j = target->find(src->name(i));
    if (j) map[i] = *j;
    else if (s & (1u << i)) throw UnknownVariable("variable " + src->name(i) + " missing from target context");
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src->size(); ++i)
      if (t.m.e[i]) m.e[map[i]] = t.m.e[i];
    m.deg = t.m.deg;
    terms.push_back({m, t.c});
  }
  return MPoly::from_terms(target, std::move(terms));
}

/// Exchanges the roles of variables i and j.
inline MPoly swap_variables(const MPoly& p, std::size_t i, std::size_t j) {
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) std::swap(t.m.e[i], t.m.e[j]);
  return MPoly::from_terms(p.context(), std::move(terms));
}

inline MPoly derivative(const MPoly& p, std::size_t var) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (!t.m.e[var]) continue;
    Monomial m = t.m;
    Rat c = t.c * Rat(m.e[var]);
    --m.e[var];
    --m.deg;
    terms.push_back({m, std::move(c)});
  }
  return MPoly::from_terms(p.context(), std::move(terms));
}

/// Canonical text form: descending grevlex, `[-]c*x^i*y^j`, unit
/// coefficients and zero exponents elided, e.g. `x^2*y - 2*x + 2`.
inline std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  const ContextPtr& ctx = p.context();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = sgn(t.c) < 0;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    Rat mag = abs(t.c);
    std::string mono;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx->name(i);
      if (t.m.e[i] != 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      out += to_short_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_short_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace wordmap

#endif  // WORDMAP_POLYNOMIAL_HPP
