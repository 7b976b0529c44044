#include <catch2/catch_amalgamated.hpp>

#include "support/properties.hpp"

namespace {
void require(const props::Outcome& o) {
  INFO(o.first_failure);
  CHECK(o.cases >= 500);
  CHECK(o.failures == 0);
}
}  // namespace

TEST_CASE("free reduction is idempotent", "[property]") { require(props::free_reduction_idempotent()); }
TEST_CASE("trace is cyclic", "[property]") { require(props::trace_cyclic()); }
TEST_CASE("trace is inversion invariant", "[property]") { require(props::trace_inversion()); }
TEST_CASE("trace is conjugation invariant", "[property]") { require(props::trace_conjugation()); }
TEST_CASE("algebra multiplication is associative", "[property]") { require(props::algebra_associative()); }
TEST_CASE("reduced basis is independent of input order", "[property]") { require(props::groebner_order_independent()); }

TEST_CASE("membership is sound for ideal combinations", "[property]") {
  using namespace wordmap;
  const auto& ctx = xyz_context();
  auto o = props::run(500, 107, [&](std::mt19937_64& rng) -> std::string {
    std::vector<MPoly> gens{oracle::random_poly(rng, ctx, 3, 2, 3), oracle::random_poly(rng, ctx, 2, 2, 3)};
    if (gens[0].is_zero() && gens[1].is_zero()) return "";
    MPoly comb = oracle::random_poly(rng, ctx, 2, 2) * gens[0] + oracle::random_poly(rng, ctx, 2, 2) * gens[1];
    if (ideal_membership(comb, {gens, degrevlex(ctx)}) != Membership::member) return "combination not a member";
    GroebnerBasis g = buchberger(gens, degrevlex(ctx));
    MPoly p = oracle::random_poly(rng, ctx, 4, 3);
    if (!(normal_form(p + comb, g.basis, degrevlex(ctx)) == normal_form(p, g.basis, degrevlex(ctx))))
      return "NF(p + q) != NF(p) for q in the ideal";
    return "";
  });
  require(o);
}
