#include "doctest.h"

#include "liegauge/difffrac.hpp"
#include "liegauge/expr_io.hpp"
#include "liegauge/triangular.hpp"
#include "test_util.hpp"

using namespace liegauge;
using testutil::random_poly;

namespace {

DiffPoly P(const char* s) { return parse_poly(s); }
DiffFrac F(const char* s) { return parse_frac(s); }

DiffFrac random_frac(std::mt19937& rng) {
  const std::vector<DiffIndet> vars = {xv(1), xv(2), yv(1)};
  DiffPoly den;
  while (den.is_zero()) den = random_poly(rng, vars, 2, 1, 2);
  return DiffFrac(random_poly(rng, vars, 3, 1, 2), den);
}

}  // namespace

TEST_CASE("construction and cancellation") {
  CHECK(DiffFrac(P("x_1*y_1"), P("y_1")).is_polynomial());
  CHECK(DiffFrac(P("x_1*y_1"), P("y_1")).numerator() == P("x_1"));
  CHECK(DiffFrac(P("x_1^2 - 1"), P("2*x_1 + 2")).numerator() == P("1/2*x_1 - 1/2"));
  const DiffFrac f(P("1"), P("-2*x_1*y_1"));
  CHECK(f.numerator() == P("-1/2"));
  CHECK(f.factors().size() == 2);
  CHECK_THROWS_AS(DiffFrac(P("1"), P("0")), std::domain_error);
  CHECK_THROWS_AS(DiffFrac(0).inverse(), std::domain_error);
  CHECK((F("x_1/y_1") * F("y_1/x_1")).equals(DiffFrac(1)));
  CHECK((F("1/x_1") + F("1/y_1")).equals(F("(x_1 + y_1)/(x_1*y_1)")));
  CHECK((F("1/x_1") - F("1/x_1")).is_zero());
}

TEST_CASE("field laws on random fractions") {
  std::mt19937 rng(21);
  for (int it = 0; it < 100; ++it) {
    const DiffFrac a = random_frac(rng);
    const DiffFrac b = random_frac(rng);
    const DiffFrac c = random_frac(rng);
    CHECK(((a + b) + c).equals(a + (b + c)));
    CHECK((a * (b + c)).equals(a * b + a * c));
    CHECK((a * b).equals(b * a));
    if (!a.is_zero()) CHECK((a * a.inverse()).equals(DiffFrac(1)));
    CHECK(derive(a * b).equals(derive(a) * b + a * derive(b)));
    // Quotient rule against the plain numerator/denominator formula.
    const DiffPoly n = a.numerator();
    const DiffPoly d = a.denominator();
    CHECK(derive(a).equals(DiffFrac(derive(n) * d - n * derive(d), d * d)));
  }
}

TEST_CASE("reduction modulo a triangular system") {
  const TriangularSystem sys({P("b_1' - b_1^2 - am_1")}, Ranking::adapted({1}));
  const Reducer red = [&](const DiffPoly& p) { return sys.reduce(p); };
  const DiffFrac f(P("b_1'"), P("b_1"));
  const DiffFrac g = f.reduced(red);
  CHECK(g.equals(F("(b_1^2 + am_1)/b_1")));
  CHECK(derive(F("1/b_1"), red).equals(F("-(b_1^2 + am_1)/b_1^2")));
  CHECK(F("(b_1' - b_1^2)/am_1").equals(DiffFrac(1), red));
  const TriangularSystem zero({P("b_1' - am_1")}, Ranking::adapted({1}));
  CHECK_THROWS_AS(DiffFrac(P("1"), P("b_1' - am_1")).reduced([&](const DiffPoly& p) { return zero.reduce(p); }),
                  std::domain_error);
}
