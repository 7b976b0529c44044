#ifndef WORDMAP_RATIONAL_HPP
#define WORDMAP_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordmap {

/// Exact rational number. gmpxx keeps results of arithmetic in lowest terms
/// with a positive denominator.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Forces a freshly constructed value into canonical form.
inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) {
  return make_rat(BigInt(num), BigInt(den));
}

inline int sign(const Rat& r) { return sgn(r); }

/// Always `num/den`, including integers (`-3/1`, `0/1`).
inline std::string to_fraction_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Integers print without a denominator; everything else as `num/den`.
inline std::string to_short_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts `n`, `-n`, `n/d`, `-n/d` with decimal digits.
inline Rat parse_rat(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return std::string(s.size() && s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text))
      throw std::invalid_argument("malformed rational: " + std::string(text));
    return Rat(BigInt(strip_plus(text)));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + std::string(text));
  return make_rat(BigInt(strip_plus(num)), BigInt(std::string(den)));
}

inline double to_double(const Rat& r) { return r.get_d(); }

/// Exact rational value of a finite double.
inline Rat from_double(double v) {
  Rat r(v);
  r.canonicalize();
  return r;
}

/// Integer power, exponent >= 0.
inline Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

}  // namespace wordmap

#endif  // WORDMAP_RATIONAL_HPP
