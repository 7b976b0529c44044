#ifndef WORDMAP_TRACE_ALGEBRA_HPP
#define WORDMAP_TRACE_ALGEBRA_HPP

// Trace polynomials of words in F2.
//
// For A, B in SL(2), every product of A, B and their inverses is a
// Q[x,y,z]-combination of I, A, B, AB with x = tr A, y = tr B, z = tr AB.
// Multiplication in that basis follows from Cayley-Hamilton:
//   A^2 = xA - I,  B^2 = yB - I,  (AB)^2 = z AB - I,
//   BA = xB + yA + (z - xy)I - AB,
//   A(AB) = x AB - B,     (AB)A = zA + B - yI,
//   B(AB) = zB + A - xI,  (AB)B = y AB - A.

#include <array>
#include <cstdint>
#include <stdexcept>

#include "wordmap/polynomial.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

/// cI*I + cA*A + cB*B + cAB*AB with coefficients in Q[x,y,z].
struct AlgebraElem {
  std::array<MPoly, 4> c;  // I, A, B, AB

  static AlgebraElem make(MPoly i, MPoly a, MPoly b, MPoly ab) {
    return AlgebraElem{{std::move(i), std::move(a), std::move(b), std::move(ab)}};
  }
  static AlgebraElem identity() { return basis(0); }
  static AlgebraElem gen_a() { return basis(1); }
  static AlgebraElem gen_b() { return basis(2); }
  static AlgebraElem gen_ab() { return basis(3); }
  static AlgebraElem basis(int k) {
    const auto& ctx = xyz_context();
    AlgebraElem e{{MPoly(ctx), MPoly(ctx), MPoly(ctx), MPoly(ctx)}};
    e.c[k] = MPoly::constant(ctx, Rat(1));
    return e;
  }

  friend AlgebraElem operator+(const AlgebraElem& p, const AlgebraElem& q) {
    return make(p.c[0] + q.c[0], p.c[1] + q.c[1], p.c[2] + q.c[2], p.c[3] + q.c[3]);
  }
  friend AlgebraElem operator-(const AlgebraElem& p, const AlgebraElem& q) {
    return make(p.c[0] - q.c[0], p.c[1] - q.c[1], p.c[2] - q.c[2], p.c[3] - q.c[3]);
  }
  friend AlgebraElem operator*(const MPoly& s, const AlgebraElem& p) {
    return make(s * p.c[0], s * p.c[1], s * p.c[2], s * p.c[3]);
  }
  friend bool operator==(const AlgebraElem&, const AlgebraElem&) = default;
};

namespace detail {

/// Products of basis elements e_i * e_j, i, j in {A, B, AB}, as coefficient
/// vectors over {I, A, B, AB}.
inline const std::array<std::array<std::array<MPoly, 4>, 3>, 3>& basis_products() {
  static const auto table = [] {
    const auto& ctx = xyz_context();
    const MPoly x = var(ctx, "x"), y = var(ctx, "y"), z = var(ctx, "z");
    const MPoly zero(ctx), one = constant(ctx, 1), m1 = constant(ctx, -1);
    std::array<std::array<std::array<MPoly, 4>, 3>, 3> t;
    // rows/cols: 0 = A, 1 = B, 2 = AB
    t[0][0] = {m1, x, zero, zero};          // A*A = xA - I
    t[0][1] = {zero, zero, zero, one};      // A*B = AB
    t[0][2] = {zero, zero, m1, x};          // A*AB = x AB - B
    t[1][0] = {z - x * y, y, x, m1};        // B*A
    t[1][1] = {m1, zero, y, zero};          // B*B = yB - I
    t[1][2] = {-x, one, z, zero};           // B*AB = zB + A - xI
    t[2][0] = {-y, z, one, zero};           // AB*A = zA + B - yI
    t[2][1] = {zero, m1, zero, y};          // AB*B = y AB - A
    t[2][2] = {m1, zero, zero, z};          // AB*AB = z AB - I
    return t;
  }();
  return table;
}

}  // namespace detail

inline AlgebraElem algebra_mul(const AlgebraElem& p, const AlgebraElem& q) {
  const auto& table = detail::basis_products();
  std::array<MPoly, 4> r{MPoly(xyz_context()), MPoly(xyz_context()), MPoly(xyz_context()),
                         MPoly(xyz_context())};
  for (int i = 0; i < 4; ++i) {
    if (p.c[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (q.c[j].is_zero()) continue;
      MPoly s = p.c[i] * q.c[j];
      if (i == 0) {
        r[j] += s;
      } else if (j == 0) {
        r[i] += s;
      } else {
        const auto& e = table[i - 1][j - 1];
        for (int k = 0; k < 4; ++k)
          if (!e[k].is_zero()) r[k] += e[k] * s;
      }
    }
  }
  return AlgebraElem{std::move(r)};
}

inline AlgebraElem operator*(const AlgebraElem& p, const AlgebraElem& q) { return algebra_mul(p, q); }

/// tr(cI I + cA A + cB B + cAB AB) = 2cI + x cA + y cB + z cAB.
inline MPoly trace_of(const AlgebraElem& e) {
  const auto& ctx = xyz_context();
  return Rat(2) * e.c[0] + var(ctx, "x") * e.c[1] + var(ctx, "y") * e.c[2] + var(ctx, "z") * e.c[3];
}

/// M^-1 = tr(M) I - M for A and B.
inline AlgebraElem generator_image(Gen g, bool inverse) {
  const auto& ctx = xyz_context();
  if (!inverse) return g == Gen::a ? AlgebraElem::gen_a() : AlgebraElem::gen_b();
  MPoly m1 = constant(ctx, -1), zero(ctx);
  if (g == Gen::a) return AlgebraElem::make(var(ctx, "x"), m1, zero, zero);
  return AlgebraElem::make(var(ctx, "y"), zero, m1, zero);
}

inline MPoly chebyshev_s_in(int n, const ContextPtr& ctx, std::size_t var);

/// M^e for M in {A, B, A^-1, B^-1} and e >= 1, via
/// M^e = S_{e-1}(tr M) M - S_{e-2}(tr M) I.
inline AlgebraElem generator_power(Gen g, std::int64_t exp) {
  const auto& ctx = xyz_context();
  const bool inverse = exp < 0;
  if (exp == INT64_MIN || (inverse ? -exp : exp) > (1 << 15)) throw std::overflow_error("exponent too large");
  const int e = static_cast<int>(inverse ? -exp : exp);
  const std::size_t v = g == Gen::a ? 0 : 1;
  const AlgebraElem m = generator_image(g, inverse);
  if (e == 1) return m;
  MPoly s1 = chebyshev_s_in(e - 1, ctx, v), s2 = chebyshev_s_in(e - 2, ctx, v);
  AlgebraElem r = s1 * m;
  r.c[0] -= s2;
  return r;
}

/// Left-to-right product of syllable images.
inline AlgebraElem word_to_algebra(const Word& w) {
  AlgebraElem acc = AlgebraElem::identity();
  for (const auto& s : w.syllables()) acc = algebra_mul(acc, generator_power(s.gen, s.exp));
  return acc;
}

/// p_w with tr w(A,B) = p_w(tr A, tr B, tr AB).
inline MPoly trace_polynomial(const Word& w) { return trace_of(word_to_algebra(w)); }

/// k(x,y,z) = x^2 + y^2 + z^2 - xyz - 2, the trace of [a,b].
inline MPoly commutator_trace() {
  static const MPoly k = [] {
    const auto& ctx = xyz_context();
    MPoly x = var(ctx, "x"), y = var(ctx, "y"), z = var(ctx, "z");
    return x * x + y * y + z * z - x * y * z - Rat(2);
  }();
  return k;
}

// ---------------------------------------------------------------------------
// Chebyshev polynomials, half-argument normalization S_n(t) = U_n(t/2):
// S_0 = 1, S_1 = t, S_{n+1} = t S_n - S_{n-1}; S_{-1} = 0 extends the
// recurrence so that M^n = S_{n-1}(tr M) M - S_{n-2}(tr M) I for n >= 1.

struct ChebU {
  int n;
  MPoly poly;
};

/// S_n in variable `var` of `ctx`, for n >= -1.
inline MPoly chebyshev_s_in(int n, const ContextPtr& ctx, std::size_t var) {
  if (n < -1) throw std::invalid_argument("Chebyshev index must be >= -1");
  MPoly t = MPoly::variable(ctx, var);
  MPoly prev(ctx);                          // S_{-1}
  MPoly cur = MPoly::constant(ctx, Rat(1));  // S_0
  if (n == -1) return prev;
  for (int i = 0; i < n; ++i) {
    MPoly next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline const ContextPtr& chebyshev_context() {
  static const ContextPtr ctx = make_context({"x"});
  return ctx;
}

/// S_n(x) = U_n(x/2) over the single-variable context [x].
inline ChebU chebyshev_s(int n) {
  if (n < 0) throw std::invalid_argument("Chebyshev index must be >= 0");
  return ChebU{n, chebyshev_s_in(n, chebyshev_context(), 0)};
}

}  // namespace wordmap

#endif  // WORDMAP_TRACE_ALGEBRA_HPP
