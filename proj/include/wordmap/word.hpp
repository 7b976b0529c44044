#ifndef WORDMAP_WORD_HPP
#define WORDMAP_WORD_HPP

// Words in the free group F2 = <a, b>.
//
// Commutator convention: [u, v] = u v u^-1 v^-1. Reversing it conjugates
// or inverts every commutator word, so all trace systems in this library
// assume this orientation.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wordmap {

enum class Gen : std::uint8_t { a = 0, b = 1 };

struct Syllable {
  Gen gen;
  std::int64_t exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Thrown by the parser; `position` is the 0-based byte offset.
class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& msg, std::size_t position)
      : std::invalid_argument(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {
inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw ExponentOverflow("word exponent overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw ExponentOverflow("word exponent overflow");
  return r;
}
}  // namespace detail

/// Freely reduced word: adjacent syllables differ in generator and no
/// exponent is zero. The empty syllable list is the identity.
class Word {
 public:
  Word() = default;

  /// Builds the free reduction of an arbitrary syllable list.
  static Word reduce(const std::vector<Syllable>& raw) {
    std::vector<Syllable> out;
    out.reserve(raw.size());
    for (const auto& s : raw) {
      if (s.exp == 0) continue;
      if (!out.empty() && out.back().gen == s.gen) {
        out.back().exp = detail::checked_add(out.back().exp, s.exp);
        if (out.back().exp == 0) out.pop_back();
      } else {
        out.push_back(s);
      }
    }
    Word w;
    w.syllables_ = std::move(out);
    return w;
  }

  static Word generator(Gen g, std::int64_t exp = 1) { return reduce({{g, exp}}); }

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  std::size_t syllable_count() const { return syllables_.size(); }

  /// Sum of |exponent| over syllables.
  std::uint64_t letter_length() const {
    std::uint64_t n = 0;
    for (const auto& s : syllables_) n += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
    return n;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

inline Word reduce(const std::vector<Syllable>& raw) { return Word::reduce(raw); }

inline Word invert(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllable_count());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
    if (it->exp == INT64_MIN) throw ExponentOverflow("word exponent overflow");
    out.push_back({it->gen, -it->exp});
  }
  return Word::reduce(out);
}

inline Word concat(const Word& u, const Word& v) {
  std::vector<Syllable> raw = u.syllables();
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return Word::reduce(raw);
}

inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

/// [u, v] = u v u^-1 v^-1.
inline Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

inline Word conjugate(const Word& g, const Word& w) { return concat(concat(g, w), invert(g)); }

inline constexpr std::size_t kMaxPowerSyllables = 1u << 20;

/// w^k for any integer k. Single-syllable words scale the exponent; longer
/// words are concatenated and capped at kMaxPowerSyllables syllables.
inline Word power(const Word& w, std::int64_t k) {
  if (k == 0 || w.is_identity()) return Word{};
  if (w.syllable_count() == 1) {
    const auto& s = w.syllables().front();
    return Word::generator(s.gen, detail::checked_mul(s.exp, k));
  }
  Word base = k < 0 ? invert(w) : w;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  if (n > kMaxPowerSyllables / base.syllable_count())
    throw ExponentOverflow("word power too long");
  Word result;
  Word sq = base;
  while (n) {
    if (n & 1u) result = concat(result, sq);
    n >>= 1;
    if (n) sq = concat(sq, sq);
  }
  return result;
}

/// Canonical text: lowercase letters, `^k` when |k| != 1, `^-1` explicit,
/// juxtaposition, identity printed as `1`.
inline std::string format_word(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    out += s.gen == Gen::a ? 'a' : 'b';
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

namespace detail {

// word := term+ ; term := atom ('^' int)? ;
// atom := 'a'|'b'|'A'|'B'|'1'|'[' word ',' word ']'|'(' word ')'
class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse_all() {
    Word w = word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

  /// Succeeds only when the entire text is a single bracket `[u,v]`.
  std::optional<std::pair<Word, Word>> commutator_form() {
    skip_ws();
    if (!peek('[')) return std::nullopt;
    ++pos_;
    Word u = word();
    expect(',');
    Word v = word();
    expect(']');
    skip_ws();
    if (pos_ != text_.size()) return std::nullopt;
    return std::make_pair(std::move(u), std::move(v));
  }

 private:
  Word word() {
    std::vector<Syllable> raw;
    skip_ws();
    if (!starts_atom()) fail(pos_ < text_.size() ? "expected a term" : "unexpected end of input");
    while (starts_atom()) {
      Word t = term();
      raw.insert(raw.end(), t.syllables().begin(), t.syllables().end());
      skip_ws();
    }
    return Word::reduce(raw);
  }

  Word term() {
    Word base = atom();
    skip_ws();
    if (peek('^')) {
      ++pos_;
      std::int64_t k = integer();
      return power(base, k);
    }
    return base;
  }

  Word atom() {
    skip_ws();
    char c = text_[pos_];
    switch (c) {
      case 'a': ++pos_; return Word::generator(Gen::a, 1);
      case 'b': ++pos_; return Word::generator(Gen::b, 1);
      case 'A': ++pos_; return Word::generator(Gen::a, -1);
      case 'B': ++pos_; return Word::generator(Gen::b, -1);
      case '1': ++pos_; return Word{};
      case '(': {
        ++pos_;
        Word w = word();
        expect(')');
        return w;
      }
      case '[': {
        ++pos_;
        Word u = word();
        expect(',');
        Word v = word();
        expect(']');
        return commutator(u, v);
      }
      default: fail("expected a term");
    }
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer exponent");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int d = text_[pos_] - '0';
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_sub_overflow(v, d, &v))
        throw ExponentOverflow("exponent overflow at position " + std::to_string(start));
      ++pos_;
    }
    // Accumulated as a negative number so INT64_MIN is representable.
    if (!neg) {
      if (v == INT64_MIN) throw ExponentOverflow("exponent overflow at position " + std::to_string(start));
      v = -v;
    }
    return v;
  }

  bool starts_atom() const {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == 'a' || c == 'b' || c == 'A' || c == 'B' || c == '1' || c == '(' || c == '[';
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c) {
    skip_ws();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw WordParseError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(std::string_view text) { return detail::WordParser(text).parse_all(); }

/// Returns (u, v) when `text` is exactly one outer bracket `[u,v]`.
/// Throws WordParseError when the text is not a word at all.
inline std::optional<std::pair<Word, Word>> parse_commutator(std::string_view text) {
  parse_word(text);
  try {
    return detail::WordParser(text).commutator_form();
  } catch (const WordParseError&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Word families

enum class Family : std::uint8_t { a, b, c, d, e, f, g };

inline std::optional<Family> family_from_char(char c) {
  if (c < 'a' || c > 'g') return std::nullopt;
  return static_cast<Family>(c - 'a');
}

inline char family_char(Family f) { return static_cast<char>('a' + static_cast<int>(f)); }

class FamilyRangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Both halves of the outer commutator of a family word. The first half is
/// always [a,b].
///   a: a^n [a,b] a^-n           (n >= 1)
///   b: b^n [a,b] b^-n           (n >= 1)
///   c: (ab)^n [a,b] (ab)^-n     (n >= 1)
///   d: a^n b [a,b] b^-1 a^-n    (n >= 2)
///   e: a^n b^2 [a,b] b^-2 a^-n  (n >= 1)
///   f: a^n b^m [a,b] b^-m a^-n  (n >= 2, m >= 2)
///   g: [a, (ab)^n]              (n >= 2)
inline std::pair<Word, Word> family_parts(Family fam, std::int64_t n, std::optional<std::int64_t> m = {}) {
  const Word a = Word::generator(Gen::a);
  const Word b = Word::generator(Gen::b);
  const Word ab = concat(a, b);
  const Word k = commutator(a, b);
  const std::int64_t min_n = (fam == Family::d || fam == Family::f || fam == Family::g) ? 2 : 1;
  const std::string name(1, family_char(fam));
  if (n < min_n)
    throw FamilyRangeError("family " + name + " requires n >= " + std::to_string(min_n));
  if (fam == Family::f) {
    if (!m) throw FamilyRangeError("family f requires the parameter m");
    if (*m < 2) throw FamilyRangeError("family f requires m >= 2");
  } else if (m) {
    throw FamilyRangeError("family " + name + " takes no parameter m");
  }
  Word v;
  switch (fam) {
    case Family::a: v = conjugate(power(a, n), k); break;
    case Family::b: v = conjugate(power(b, n), k); break;
    case Family::c: v = conjugate(power(ab, n), k); break;
    case Family::d: v = conjugate(concat(power(a, n), b), k); break;
    case Family::e: v = conjugate(concat(power(a, n), power(b, 2)), k); break;
    case Family::f: v = conjugate(concat(power(a, n), power(b, *m)), k); break;
    case Family::g: v = commutator(a, power(ab, n)); break;
  }
  return {k, v};
}

inline Word family_word(Family fam, std::int64_t n, std::optional<std::int64_t> m = {}) {
  auto [u, v] = family_parts(fam, n, m);
  return commutator(u, v);
}

}  // namespace wordmap

#endif  // WORDMAP_WORD_HPP
