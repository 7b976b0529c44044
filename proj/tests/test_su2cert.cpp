#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace wordmap;

namespace {
const ContextPtr& X() { return xyz_context(); }
MPoly P(const char* s) { return parse_polynomial(s, X()); }
MPoly S(int n, std::size_t var) { return chebyshev_s_in(n, X(), var); }
}  // namespace

TEST_CASE("tau membership", "[su2cert]") {
  CHECK(in_tau(make_point(1, 1, 0)));
  CHECK(in_tau(make_point(2, 1, 1)));
  CHECK(eval_at(commutator_trace(), make_point(2, 1, 1)) == 2);
  CHECK_FALSE(in_tau(make_point(3, 0, 0)));
  CHECK_FALSE(in_tau(make_point(2, 2, -2)));  // k = 14
  for (const auto& q : default_grid()) CHECK(in_tau(q));
}

TEST_CASE("system for the first family", "[su2cert]") {
  auto [u, v] = family_parts(Family::a, 1);
  TraceSystem s = build_system(u, v);
  MPoly k = commutator_trace();
  CHECK(s.p_u == k);
  CHECK(s.p_v == k);
  CHECK(s.p_uv == P("x^2") * k - P("2*x^2") + Rat(2));
  CHECK(solves(s, make_point(1, 1, 0)));
  CHECK_FALSE(solves(s, make_point(2, 1, 1)));
}

TEST_CASE("family a reduces to k and 1 + (x^2 - 2) S_{n-1}(x)^2", "[su2cert]") {
  MPoly k = commutator_trace();
  for (int n = 2; n <= 8; ++n) {
    TraceSystem s = build_system(family_parts(Family::a, n).first, family_parts(Family::a, n).second);
    MPoly g = Rat(1) + (P("x^2") - Rat(2)) * S(n - 1, 0) * S(n - 1, 0);
    Division d = divide(s.p_uv + Rat(2) * g, {k}, degrevlex(X()));
    REQUIRE(d.remainder.is_zero());
    CHECK(d.cofactors[0] * k - Rat(2) * g == s.p_uv);
    SystemReduction r = reduce_system(s);
    CHECK(r.residual == Rat(-2) * g);
    CHECK(r.residual_var == 0u);
  }
}

TEST_CASE("families b and c are variable swaps of family a", "[su2cert]") {
  for (int n = 1; n <= 6; ++n) {
    TraceSystem a = build_system(family_parts(Family::a, n).first, family_parts(Family::a, n).second);
    TraceSystem b = build_system(family_parts(Family::b, n).first, family_parts(Family::b, n).second);
    TraceSystem c = build_system(family_parts(Family::c, n).first, family_parts(Family::c, n).second);
    CHECK(b.p_uv == swap_variables(a.p_uv, 0, 1));
    CHECK(c.p_uv == swap_variables(a.p_uv, 0, 2));
  }
}

TEST_CASE("family d residual vanishes at (0,1,1)", "[su2cert]") {
  MPoly k = commutator_trace();
  for (int n = 2; n <= 25; ++n) {
    TraceSystem s = build_system(family_parts(Family::d, n).first, family_parts(Family::d, n).second);
    CHECK(solves(s, make_point(0, 1, 1)));
    if (n <= 8) {
      SystemReduction r = reduce_system(s);
      MPoly expect = Rat(2) * (Rat(1) - P("y^2") * S(n - 2, 0) * S(n - 2, 0) - P("z^2") * S(n - 1, 0) * S(n - 1, 0));
      CHECK(normal_form(r.residual - expect, {k}, degrevlex(X())).is_zero());
      CHECK_FALSE(r.residual.univariate_var());
    }
  }
}

TEST_CASE("exact points for the documented witnesses", "[su2cert]") {
  auto point_of = [](Family f, int n, std::optional<std::int64_t> m = {}) {
    Certificate c = certify_family(f, n, m);
    REQUIRE(c.certified());
    REQUIRE(c.point());
    CHECK(verify_certificate(c));
    return *c.point();
  };
  CHECK(point_of(Family::a, 1) == make_point(1, 1, 0));
  CHECK(point_of(Family::a, 2) == make_point(1, 1, 0));
  CHECK(point_of(Family::a, 4) == make_point(-1, 1, 0));
  CHECK(point_of(Family::c, 1) == make_point(1, 0, 1));
  CHECK(point_of(Family::d, 2) == make_point(0, 1, 1));
  CHECK(point_of(Family::f, 2, 4) == make_point(1, 0, 1));
  CHECK(point_of(Family::g, 2) == make_point(1, 1, 1));
  CHECK(point_of(Family::g, 3) == make_point(1, 1, 0));
}

TEST_CASE("family e follows the mod 6 split", "[su2cert]") {
  for (int n = 1; n <= 12; ++n) {
    Certificate c = certify_family(Family::e, n);
    REQUIRE(c.point());
    TauPoint expect = (n % 6 == 2 || n % 6 == 5) ? make_point(1, 0, 1) : make_point(1, 1, 0);
    CHECK(*c.point() == expect);
    if (n % 6 == 2 || n % 6 == 5) CHECK_FALSE(solves(c.system, make_point(1, 1, 0)));
  }
}

TEST_CASE("odd family a emits sign-change witnesses from 0", "[su2cert]") {
  for (int n : {3, 5, 7}) {
    Certificate c = certify_family(Family::a, n);
    REQUIRE(c.ivt());
    const IvtWitness& w = *c.ivt();
    CHECK(w.residual_var == "x");
    CHECK(w.bracket.lo == 0);
    CHECK(w.bracket.hi * w.bracket.hi < 2);
    CHECK(sign_at(w.g, w.bracket.lo) < 0);
    CHECK(verify_certificate(c));
  }
}

TEST_CASE("verifier rejects bad certificates", "[su2cert]") {
  Certificate good = certify_family(Family::a, 1);
  Certificate bad = good;
  bad.witness = make_point(2, 1, 1);
  CHECK_FALSE(verify_certificate(bad));

  Certificate ivt = certify_family(Family::a, 3);
  REQUIRE(ivt.ivt());
  // (3/2)^2 > 2: the companion y^2 = 2 - x^2 is not guaranteed real.
  Certificate wide = ivt;
  std::get<IvtWitness>(wide.witness).bracket = {Rat(0), make_rat(3, 2)};
  VerifyResult vr = verify_certificate_detailed(wide);
  CHECK_FALSE(vr.ok);
  CHECK_THAT(vr.reason, Catch::Matchers::ContainsSubstring("below 2"));

  Certificate no_change = ivt;
  std::get<IvtWitness>(no_change.witness).bracket = {make_rat(1, 10), make_rat(2, 10)};
  CHECK_FALSE(verify_certificate(no_change));

  Certificate tampered = ivt;
  auto& cof = std::get<IvtWitness>(tampered.witness).cofactors;
  cof[2][0] = cof[2][0] + P("x");
  CHECK_FALSE(verify_certificate(tampered));

  Certificate wrong_word = good;
  wrong_word.word = parse_word("[a,b]");
  CHECK_FALSE(verify_certificate(wrong_word));
}

TEST_CASE("family g even n uses containment in <x-1, S_{n-2}(z), k>", "[su2cert]") {
  for (int n : {6, 8}) {
    Certificate c = certify_family(Family::g, n);
    REQUIRE(c.ivt());
    CHECK(c.strategy == "chebyshev_containment");
    const IvtWitness& w = *c.ivt();
    CHECK(w.residual_var == "z");
    CHECK(w.g == S(n - 2, 2));
    double root = 2 * std::cos((n - 2) * M_PI / (2.0 * (n - 1)));
    CHECK(to_double(w.bracket.lo) < root);
    CHECK(root < to_double(w.bracket.hi));
    CHECK(verify_certificate(c));
  }
}

TEST_CASE("JSON round trip", "[su2cert]") {
  for (auto fam : {Family::a, Family::d, Family::g}) {
    for (int n : {2, 3, 6}) {
      Certificate c = certify_family(fam, n);
      auto j = to_json(c);
      Certificate back = certificate_from_json(nlohmann::json::parse(j.dump()));
      CHECK(verify_certificate(back));
      CHECK(to_json(back) == j);
    }
  }
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse("{\"word\": 3}")), CertificateFormatError);
}

TEST_CASE("general commutators", "[su2cert]") {
  Certificate c = certify("[a,b]");
  REQUIRE(c.certified());
  CHECK(verify_certificate(c));
  CHECK_THROWS_AS(certify("aba"), NotACommutator);
  auto spec = identify_family(parse_word("[a,b]"), parse_word("a^2b^2[a,b]b^-2a^-2"));
  REQUIRE(spec);
  CHECK(spec->family == Family::e);
  CHECK(spec->n == 2);
  CHECK_FALSE(identify_family(parse_word("a"), parse_word("b")));
}

TEST_CASE("inconclusive results carry no witness", "[su2cert]") {
  Certificate c = certify_family(Family::f, 3, 3);
  if (!c.certified()) {
    CHECK(std::holds_alternative<std::monostate>(c.witness));
    CHECK_FALSE(c.notes.empty());
  }
}
