#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace wordmap;

namespace {
const ContextPtr& X() { return xyz_context(); }
MPoly P(const char* s) { return parse_polynomial(s, X()); }
}  // namespace

TEST_CASE("rationals print and parse", "[polyring]") {
  CHECK(to_fraction_string(make_rat(6, -4)) == "-3/2");
  CHECK(to_fraction_string(Rat(0)) == "0/1");
  CHECK(to_short_string(Rat(3)) == "3");
  CHECK(parse_rat("-140/99") == make_rat(-140, 99));
  CHECK(parse_rat("7") == Rat(7));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
  CHECK(from_double(0.5) == make_rat(1, 2));
  CHECK(from_double(-0.375) == make_rat(-3, 8));
  CHECK(wordmap::pow(make_rat(2, 3), 3) == make_rat(8, 27));
}

TEST_CASE("canonical text uses graded reverse lexicographic order", "[polyring]") {
  CHECK(to_string(P("x^2 + y^2 + z^2 - x*y*z - 2")) == "-x*y*z + x^2 + y^2 + z^2 - 2");
  CHECK(to_string(MPoly(X())) == "0");
  CHECK(to_string(P("1/2*x - 3/4")) == "1/2*x - 3/4");
  CHECK(to_string(P("(x + y)^2")) == "x^2 + 2*x*y + y^2");
  CHECK(to_string(P("x*z + y^2")) == "y^2 + x*z");
}

TEST_CASE("parser round-trips canonical text", "[polyring]") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    MPoly p = oracle::random_poly(rng, X(), 6, 4);
    CHECK(parse_polynomial(to_string(p), X()) == p);
  }
}

TEST_CASE("parser errors", "[polyring]") {
  CHECK_THROWS_AS(P("x +"), PolyParseError);
  CHECK_THROWS_AS(P("w"), PolyParseError);
  CHECK_THROWS_AS(P("x^-1"), PolyParseError);
  CHECK_THROWS_AS(P("(x"), PolyParseError);
}

TEST_CASE("ring axioms on random polynomials", "[polyring][property]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    MPoly p = oracle::random_poly(rng, X(), 4, 3), q = oracle::random_poly(rng, X(), 4, 3),
          r = oracle::random_poly(rng, X(), 3, 2);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
    // Evaluation is a ring homomorphism.
    std::vector<Rat> pt{make_rat(1, 2), Rat(-3), make_rat(5, 7)};
    CHECK(eval(p * q + r, pt) == eval(p, pt) * eval(q, pt) + eval(r, pt));
  }
}

TEST_CASE("degrees, support and univariate detection", "[polyring]") {
  MPoly p = P("x^3*y + y^2 - 4");
  CHECK(p.total_degree() == 4);
  CHECK(p.degree_in(0) == 3);
  CHECK(p.degree_in(2) == 0);
  CHECK_FALSE(p.univariate_var());
  CHECK(P("z^5 - z").univariate_var() == 2u);
  CHECK_FALSE(P("3").univariate_var());
  CHECK(P("3").is_constant());
}

TEST_CASE("substitute, swap and derivative", "[polyring]") {
  MPoly k = P("x^2 + y^2 + z^2 - x*y*z - 2");
  CHECK(substitute(k, 2, P("0")) == P("x^2 + y^2 - 2"));
  CHECK(swap_variables(k, 0, 1) == k);
  CHECK(swap_variables(P("x^2*y"), 0, 2) == P("z^2*y"));
  CHECK(derivative(k, 0) == P("2*x - y*z"));
}

TEST_CASE("contexts must match", "[polyring]") {
  ContextPtr other = make_context({"s", "t"});
  CHECK_THROWS_AS(var(X(), "x") + var(other, "s"), ContextMismatch);
  ContextPtr big = make_context({"w", "x", "y", "z"});
  CHECK(embed(P("x*z - y"), big) == parse_polynomial("x*z - y", big));
  CHECK_THROWS(make_context({"x", "x"}));
}

TEST_CASE("Sturm isolation finds every real root", "[polyring][sturm]") {
  const ContextPtr t = make_context({"t"});
  // (t^2 - 2)(t - 1/3)(t + 5)
  MPoly p = parse_polynomial("(t^2 - 2)*(t - 1/3)*(t + 5)", t);
  auto roots = sturm_isolate(p, {Rat(-10), Rat(10)});
  REQUIRE(roots.size() == 4);
  UPoly u = UPoly::from_mpoly(p, 0);
  auto contains = [](const Interval& iv, const Rat& r) { return iv.lo == iv.hi ? iv.lo == r : (iv.lo < r && r <= iv.hi); };
  CHECK(contains(roots[0], Rat(-5)));
  CHECK(contains(roots[2], make_rat(1, 3)));
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
  for (const auto& iv : roots) {
    if (iv.lo == iv.hi) CHECK(u(iv.lo) == 0);
    else if (u(iv.hi) != 0) CHECK(sign_at(u, iv.lo) * sign_at(u, iv.hi) < 0);
  }
  Interval fine = refine(squarefree_part(u), roots[3], make_rat(1, 1000000));
  CHECK(fine.hi - fine.lo <= make_rat(1, 1000000));
  CHECK(fine.lo * fine.lo < 2);
  CHECK(fine.hi * fine.hi > 2);
}

TEST_CASE("Sturm counts roots of squarefree parts", "[polyring][sturm]") {
  UPoly p({Rat(1), Rat(-2), Rat(1)});  // (t - 1)^2
  CHECK(squarefree_part(p) == UPoly({Rat(-1), Rat(1)}));
  auto roots = sturm_isolate(p, {Rat(-3), Rat(3)});
  REQUIRE(roots.size() == 1);
  CHECK((roots[0].lo <= 1 && 1 <= roots[0].hi));
  CHECK(SturmSequence(UPoly({Rat(-2), Rat(0), Rat(1)})).count(Rat(0), Rat(2)) == 1);
  CHECK(sturm_isolate(UPoly({Rat(1), Rat(0), Rat(1)}), {Rat(-5), Rat(5)}).empty());
}

TEST_CASE("Sturm isolation agrees with sign scans on random polynomials", "[polyring][sturm][property]") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    // Product of random linear factors with rational roots in (-2, 2).
    std::vector<Rat> roots;
    UPoly p({Rat(1)});
    for (int i = 0; i < 4; ++i) {
      Rat r = make_rat(c(rng), 3);
      roots.push_back(r);
      std::vector<Rat> lin{-r, Rat(1)}, prod(p.coeffs().size() + 1, Rat(0));
      for (std::size_t a = 0; a < p.coeffs().size(); ++a)
        for (std::size_t b = 0; b < 2; ++b) prod[a + b] += p.coeffs()[a] * lin[b];
      p = UPoly(prod);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    auto iv = sturm_isolate(p, {Rat(-3), Rat(3)});
    REQUIRE(iv.size() == roots.size());
    for (std::size_t i = 0; i < iv.size(); ++i) CHECK((iv[i].lo <= roots[i] && roots[i] <= iv[i].hi));
  }
}
