#ifndef WORDMAP_NUMERIC_HPP
#define WORDMAP_NUMERIC_HPP

// Floating-point evaluation of words on SU(2) and SL(2, C). Used only to
// falsify symbolic results; nothing here proves anything.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "wordmap/polynomial.hpp"
#include "wordmap/trace_algebra.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

using Complex = std::complex<double>;

struct NumericMatrix {
  Complex a{1}, b{0}, c{0}, d{1};  // [[a, b], [c, d]]

  static NumericMatrix identity() { return {}; }

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  NumericMatrix adjugate() const { return {d, -b, -c, a}; }
  NumericMatrix conjugate_transpose() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

  friend NumericMatrix operator*(const NumericMatrix& p, const NumericMatrix& q) {
    return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
  }
  friend NumericMatrix operator-(const NumericMatrix& p) { return {-p.a, -p.b, -p.c, -p.d}; }

  /// Largest entrywise modulus of the difference.
  double distance(const NumericMatrix& q) const {
    return std::max({std::abs(a - q.a), std::abs(b - q.b), std::abs(c - q.c), std::abs(d - q.d)});
  }

  bool is_unitary(double tol = 1e-12) const { return (*this * conjugate_transpose()).distance(identity()) < tol; }
};

/// Builds a matrix and enforces |det - 1| < tol.
inline NumericMatrix make_sl2(Complex a, Complex b, Complex c, Complex d, double tol = 1e-12) {
  NumericMatrix m{a, b, c, d};
  if (std::abs(m.det() - 1.0) >= tol) throw std::domain_error("matrix determinant is not 1");
  return m;
}

/// Haar-random SU(2) elements: a normalized Gaussian vector in R^4 gives
/// (alpha, beta) on the unit sphere and the matrix [[alpha, beta],
/// [-conj(beta), conj(alpha)]].
inline std::vector<NumericMatrix> random_su2(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<NumericMatrix> out;
  out.reserve(count);
  while (out.size() < count) {
    double v[4];
    double norm2 = 0;
    for (double& t : v) {
      t = normal(rng);
      norm2 += t * t;
    }
    if (norm2 < 1e-24) continue;
    const double s = 1.0 / std::sqrt(norm2);
    Complex alpha(v[0] * s, v[1] * s), beta(v[2] * s, v[3] * s);
    out.push_back(make_sl2(alpha, beta, -std::conj(beta), std::conj(alpha)));
  }
  return out;
}

enum class InverseMode { automatic, unitary, adjugate };

inline NumericMatrix numeric_power(NumericMatrix base, std::uint64_t e) {
  NumericMatrix r = NumericMatrix::identity();
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

/// w(A, B) with A^-1, B^-1 taken as conjugate transposes (unitary inputs)
/// or adjugates (everything else).
inline NumericMatrix eval_word_numeric(const Word& w, const NumericMatrix& A, const NumericMatrix& B,
                                       InverseMode mode = InverseMode::automatic) {
  bool unitary = mode == InverseMode::unitary ||
                 (mode == InverseMode::automatic && A.is_unitary() && B.is_unitary());
  const NumericMatrix Ai = unitary ? A.conjugate_transpose() : A.adjugate();
  const NumericMatrix Bi = unitary ? B.conjugate_transpose() : B.adjugate();
  NumericMatrix r = NumericMatrix::identity();
  for (const auto& s : w.syllables()) {
    const NumericMatrix& g = s.gen == Gen::a ? (s.exp > 0 ? A : Ai) : (s.exp > 0 ? B : Bi);
    const std::uint64_t e = s.exp > 0 ? static_cast<std::uint64_t>(s.exp) : static_cast<std::uint64_t>(-(s.exp + 1)) + 1;
    r = r * numeric_power(g, e);
  }
  return r;
}

/// Evaluates at a complex point. Powers are cached per variable.
inline Complex eval_complex(const MPoly& p, const std::vector<Complex>& point) {
  return eval_as<Complex>(p, point, [](const Rat& c) { return Complex(c.get_d()); }, Complex(0), Complex(1));
}

/// Exact evaluation at a point of doubles, rounded once at the end. This
/// removes cancellation error from high-degree trace polynomials, leaving
/// only the error already present in the inputs.
inline double eval_exact_at_doubles(const MPoly& p, const std::vector<double>& point) {
  const std::size_t n = p.context() ? p.context()->size() : 0;
  if (point.size() < n) throw std::invalid_argument("evaluation point has too few coordinates");
  bool integral = true;
  for (const auto& t : p.terms()) integral = integral && t.c.get_den() == 1;
  if (!integral) {
    std::vector<Rat> q;
    q.reserve(point.size());
    for (double v : point) q.push_back(from_double(v));
    return eval(p, q).get_d();
  }
  // Every double is V / 2^s with integer V; evaluate over the integers and
  // divide by one power of two at the end.
  std::array<BigInt, kMaxVars> num;
  std::array<long, kMaxVars> shift{};
  for (std::size_t i = 0; i < n; ++i) {
    Rat r = from_double(point[i]);
    num[i] = r.get_num();
    shift[i] = static_cast<long>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2)) - 1;
  }
  std::array<std::vector<BigInt>, kMaxVars> powers;
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].push_back(BigInt(1));
    for (std::uint32_t k = 1; k <= p.degree_in(i); ++k) powers[i].push_back(powers[i].back() * num[i]);
  }
  long top = 0;
  for (const auto& t : p.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += shift[i] * t.m.e[i];
    top = std::max(top, s);
  }
  BigInt acc(0), v;
  for (const auto& t : p.terms()) {
    v = t.c.get_num();
    long s = top;
    for (std::size_t i = 0; i < n; ++i)
      if (t.m.e[i]) {
        v *= powers[i][t.m.e[i]];
        s -= shift[i] * t.m.e[i];
      }
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    acc += v;
  }
  Rat out(acc);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(top));
  return out.get_d();
}

struct TraceMatchReport {
  std::size_t trials = 0;
  double max_error = 0;
  double tolerance = 0;
  bool pass = false;
};

/// Compares tr w(A, B) with p_w(tr A, tr B, tr AB) on Haar-random SU(2)
/// pairs. Traces of SU(2) elements are real; imaginary rounding residue
/// is dropped before evaluating p_w.
inline TraceMatchReport trace_match_test(const Word& w, std::size_t trials, double tol, std::uint64_t seed,
                                         const MPoly* precomputed = nullptr) {
  if (trials < 1) throw std::invalid_argument("trace_match_test needs at least one trial");
  const MPoly pw = precomputed ? *precomputed : trace_polynomial(w);
  auto samples = random_su2(seed, 2 * trials);
  TraceMatchReport rep;
  rep.trials = trials;
  rep.tolerance = tol;
  for (std::size_t i = 0; i < trials; ++i) {
    const NumericMatrix& A = samples[2 * i];
    const NumericMatrix& B = samples[2 * i + 1];
    double numeric = eval_word_numeric(w, A, B, InverseMode::unitary).trace().real();
    double symbolic = eval_exact_at_doubles(pw, {A.trace().real(), B.trace().real(), (A * B).trace().real()});
    rep.max_error = std::max(rep.max_error, std::abs(numeric - symbolic));
  }
  rep.pass = rep.max_error < tol;
  return rep;
}

/// Complex number with modulus in [rmin, rmax] and uniform argument.
inline Complex random_complex(std::mt19937_64& rng, double rmin = 0.5, double rmax = 1.5) {
  std::uniform_real_distribution<double> radius(rmin, rmax), angle(0.0, 2 * M_PI);
  return std::polar(radius(rng), angle(rng));
}

}  // namespace wordmap

#endif  // WORDMAP_NUMERIC_HPP
