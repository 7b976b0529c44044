#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace wordmap;

TEST_CASE("Haar samples are in SU(2)", "[oracle]") {
  auto s = random_su2(99, 2000);
  REQUIRE(s.size() == 2000);
  for (const auto& m : s) {
    CHECK(m.is_unitary(1e-12));
    CHECK(std::abs(m.det() - 1.0) < 1e-12);
    CHECK(std::abs(m.trace().imag()) < 1e-15);
  }
}

TEST_CASE("sampling is deterministic per seed", "[oracle]") {
  auto a = random_su2(7, 50), b = random_su2(7, 50), c = random_su2(8, 50);
  for (std::size_t i = 0; i < 50; ++i) CHECK(a[i].distance(b[i]) == 0.0);
  CHECK(a[0].distance(c[0]) > 0.0);
}

TEST_CASE("make_sl2 enforces the determinant", "[oracle]") {
  CHECK_NOTHROW(make_sl2(2.0, 1.0, 1.0, 1.0));
  CHECK_THROWS_AS(make_sl2(2.0, 0.0, 0.0, 2.0), std::domain_error);
}

TEST_CASE("numeric word evaluation", "[oracle]") {
  auto s = random_su2(3, 2);
  const NumericMatrix &A = s[0], &B = s[1];
  NumericMatrix c = eval_word_numeric(parse_word("[a,b]"), A, B);
  NumericMatrix direct = A * B * A.conjugate_transpose() * B.conjugate_transpose();
  CHECK(c.distance(direct) < 1e-14);
  CHECK(eval_word_numeric(parse_word("a^7a^-7"), A, B).distance(NumericMatrix::identity()) < 1e-13);
  // Unitary and adjugate inverses agree on SU(2).
  Word w = parse_word("a^-3 b^2 a b^-5");
  CHECK(eval_word_numeric(w, A, B, InverseMode::unitary).distance(eval_word_numeric(w, A, B, InverseMode::adjugate)) <
        1e-13);
}

TEST_CASE("exact evaluation at doubles matches rational evaluation", "[oracle]") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 200; ++i) {
    MPoly p = oracle::random_poly(rng, xyz_context(), 8, 6);
    std::vector<double> pt{u(rng), u(rng), i % 5 == 0 ? 0.0 : u(rng)};
    double expect = eval(p, {from_double(pt[0]), from_double(pt[1]), from_double(pt[2])}).get_d();
    CHECK(eval_exact_at_doubles(p, pt) == expect);
  }
  MPoly half = parse_polynomial("1/3*x^2 - y", xyz_context());
  CHECK(eval_exact_at_doubles(half, {1.5, 0.25, 0}) == eval(half, {make_rat(3, 2), make_rat(1, 4), Rat(0)}).get_d());
}

TEST_CASE("trace match on family words", "[oracle]") {
  for (Family f : {Family::a, Family::b, Family::c, Family::d, Family::e, Family::g}) {
    for (int n : {2, 5}) {
      auto r = trace_match_test(family_word(f, n), 200, 1e-9, 1);
      CHECK(r.pass);
      CHECK(r.max_error < 1e-9);
    }
  }
  auto r = trace_match_test(family_word(Family::f, 4, 6), 200, 1e-9, 1);
  CHECK(r.pass);
}

TEST_CASE("trace match detects a wrong polynomial", "[oracle]") {
  Word w = parse_word("[a,b]");
  MPoly wrong = trace_polynomial(w) + parse_polynomial("1/1000*x", xyz_context());
  CHECK_FALSE(trace_match_test(w, 200, 1e-9, 5, &wrong).pass);
  CHECK_THROWS(trace_match_test(w, 0, 1e-9, 5));
}

TEST_CASE("template samples satisfy their constraints", "[oracle]") {
  std::mt19937_64 rng(71);
  for (const auto& name : template_names()) {
    const Sl2Template& t = sl2_template(name);
    for (int i = 0; i < 50; ++i) {
      auto pt = t.sample(rng);
      for (const auto& c : t.constraints) CHECK(std::abs(eval_complex(c, pt)) < 1e-12);
    }
  }
}

TEST_CASE("symbolic and numeric evaluation agree on templates", "[oracle]") {
  std::mt19937_64 rng(73);
  for (const auto& nw : named_words()) {
    const Sl2Template& t = sl2_template(nw.template_name);
    Word w = parse_word(nw.text);
    Mat2 sym = symbolic_eval(w, t);
    auto num = [](const Mat2& m, const std::vector<Complex>& pt) {
      return NumericMatrix{eval_complex(m[0], pt), eval_complex(m[1], pt), eval_complex(m[2], pt), eval_complex(m[3], pt)};
    };
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      auto pt = t.sample(rng);
      NumericMatrix W = eval_word_numeric(w, num(t.a, pt), num(t.b, pt), InverseMode::adjugate);
      worst = std::max(worst, W.distance(num(sym, pt)));
    }
    CHECK(worst < 1e-8);
  }
}
