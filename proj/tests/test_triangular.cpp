#include "doctest.h"

#include "liegauge/expr_io.hpp"
#include "liegauge/triangular.hpp"
#include "test_util.hpp"

using namespace liegauge;
using testutil::random_poly;

namespace {

DiffPoly P(const char* s) { return parse_poly(s); }

// Solved A2-style system: b_3' = ap_3*b_3^2 - (a0_1 + a0_2)*b_3 - am_3.
const char* kF3 = "b_3' - ap_3*b_3^2 + (a0_1 + a0_2)*b_3 + am_3";

}  // namespace

TEST_CASE("pseudo-reduction examples") {
  const Ranking rk = Ranking::adapted({1, 1, 2});
  const std::vector<DiffPoly> eqs = {P(kF3)};
  auto r0 = pseudo_reduce(eqs[0], eqs, rk);
  CHECK(r0.remainder.is_zero());
  CHECK(check_witness(eqs[0], eqs, r0));

  auto r1 = pseudo_reduce(derive(eqs[0], 2), eqs, rk);
  CHECK(r1.remainder.is_zero());
  CHECK(r1.multiplier == P("1"));
  CHECK(check_witness(derive(eqs[0], 2), eqs, r1));

  // b_3'' with b_3' = g, g two terms: remainder is g' with b_3' replaced by g.
  const std::vector<DiffPoly> simple = {P("b_3' - ap_1*b_3 - am_1")};
  const DiffPoly g = P("ap_1*b_3 + am_1");
  auto r2 = pseudo_reduce(P("b_3''"), simple, rk);
  CHECK(r2.remainder == P("ap_1'*b_3 + ap_1*(ap_1*b_3 + am_1) + am_1'"));
  CHECK(r2.remainder == substitute_derivatives(derive(g), [&](const Derivative& v) -> std::optional<DiffPoly> {
          if (v == parse_derivative("b_3'")) return g;
          return std::nullopt;
        }));
  CHECK(check_witness(P("b_3''"), simple, r2));
}

TEST_CASE("pseudo-reduction with nonconstant initials keeps a membership witness") {
  const Ranking rk = Ranking::orderly();
  const std::vector<DiffPoly> eqs = {P("x_1*y_1' + y_1^2 - x_2"), P("x_2*y_2^2 - y_1")};
  std::mt19937 rng(3);
  for (int it = 0; it < 60; ++it) {
    const DiffPoly p = random_poly(rng, {yv(1), yv(2), xv(1), xv(2)}, 3, 2, 2);
    const auto pr = pseudo_reduce(p, eqs, rk);
    CHECK(check_witness(p, eqs, pr));
    CHECK_FALSE(is_reducible(pr.remainder, eqs, rk));
    // multiplier is a power product of initials/separants: x_1, x_2 and 2*x_2*y_2.
    for (const auto& v : pr.multiplier.derivatives()) {
      CHECK((v == parse_derivative("x_1") || v == parse_derivative("x_2") || v == parse_derivative("y_2")));
    }
  }
}

TEST_CASE("simplicity") {
  const Ranking ord = Ranking::orderly();
  auto r1 = is_simple({P("y_1'"), P("y_1'' - 1")}, {}, ord);
  CHECK(r1.verdict == Verdict::NotSimple);
  auto r2 = is_simple({P("y_1^2")}, {P("y_1")}, ord);
  CHECK(r2.verdict == Verdict::NotSimple);
  CHECK(r2.condition == "1b");
  auto r3 = is_simple({P("y_1' - x_1"), P("y_2' - y_1*y_2")}, {P("x_1")}, ord);
  CHECK(r3.verdict == Verdict::Simple);
  auto r4 = is_simple({P("3")}, {}, ord);
  CHECK(r4.condition == "1a");
  auto r5 = is_simple({P("x_1*y_1' - 1")}, {}, ord);
  CHECK(r5.verdict == Verdict::Undecided);
  CHECK(is_simple({P(kF3)}, {}, Ranking::adapted({1, 1, 2})).verdict == Verdict::Simple);
  // Lower leaders may occur; their proper derivatives may not.
  CHECK(is_simple({P("y_1' - x_1"), P("y_2' - y_1'*y_2")}, {}, ord).verdict == Verdict::Simple);
  auto r6 = is_simple({P("y_1' - x_1"), P("y_2'' - y_1''")}, {}, ord);
  CHECK(r6.verdict == Verdict::NotSimple);
  CHECK(r6.condition == "2");
  CHECK(is_simple({P("y_1' - x_1")}, {P("y_2 - y_1''")}, ord).condition == "3");
}

TEST_CASE("triangular normal form") {
  const TriangularSystem sys({P(kF3)}, Ranking::adapted({1, 1, 2}));
  CHECK(sys.reduce(P(kF3)).is_zero());
  CHECK(sys.reduce(P("b_3")) == P("b_3"));
  const DiffPoly rhs = P("ap_3*b_3^2 - (a0_1 + a0_2)*b_3 - am_3");
  CHECK(sys.reduce(P("b_3'")) == rhs);
  const DiffPoly d = derive(rhs);
  CHECK(sys.reduce(P("b_3''")) == sys.reduce(d));
  CHECK_FALSE(sys.reduce(P("b_3''")).contains(parse_derivative("b_3'")));
  CHECK(sys.is_principal(parse_derivative("b_3^(4)")));
  CHECK_FALSE(sys.is_principal(parse_derivative("b_3")));
}

TEST_CASE("triangular_reduce is an idempotent differential morphism") {
  const TriangularSystem sys({P("b_3' - ap_3*b_3^2 + b_1*b_3 + am_3"), P("b_1' - b_1^2 + am_1")},
                             Ranking::adapted({1, 1, 2}));
  std::mt19937 rng(8);
  const std::vector<DiffIndet> vars = {bv(1), bv(3), ap(3), am(1), am(3)};
  for (int it = 0; it < 80; ++it) {
    const DiffPoly p = random_poly(rng, vars, 3, 2, 2);
    const DiffPoly q = random_poly(rng, vars, 3, 2, 2);
    const DiffPoly rp = sys.reduce(p);
    const DiffPoly rq = sys.reduce(q);
    CHECK(sys.reduce(rp) == rp);
    CHECK(sys.reduce(p + q) == rp + rq);
    CHECK(sys.reduce(p * q) == sys.reduce(rp * rq));
    CHECK(sys.reduce(derive(p)) == sys.reduce(derive(rp)));
    for (const auto& v : rp.derivatives()) CHECK_FALSE(sys.is_principal(v));
    // Normal form agrees with the pseudo-remainder (constant initials).
    CHECK(pseudo_reduce(p, sys.originals(), sys.ranking()).remainder == rp);
  }
}

TEST_CASE("triangular system validation") {
  const Ranking ord = Ranking::orderly();
  CHECK_THROWS_AS(TriangularSystem({P("y_1'^2 - x_1")}, ord), std::invalid_argument);
  CHECK_THROWS_AS(TriangularSystem({P("x_1*y_1' - 1")}, ord), std::invalid_argument);
  CHECK_THROWS_AS(TriangularSystem({P("y_1' - 1"), P("y_1'' - x_1")}, ord), std::invalid_argument);
  const TriangularSystem ok({P("2*y_1' - x_1")}, ord);
  CHECK(ok.reduce(P("y_1'")) == P("1/2*x_1"));
}
