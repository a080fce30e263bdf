#include "doctest.h"
#include "qcl/formexpr.hpp"

#include <random>

#include "qcl/quadrics.hpp"

using namespace qcl;

TEST_CASE("basic expressions") {
  FieldSpec F = make_field(3, 1);
  Form4 hyp = parse_form("x0*x1+x2*x3", F);
  Form4 want{};
  want[mon4_index(0, 1)] = 1;
  want[mon4_index(2, 3)] = 1;
  CHECK(hyp == want);

  Form4 line = parse_form("x0^2+x0*x1+2*x1^2", F);
  Geometry G(F, true);
  CHECK(classify4(G, line).cls == SurfaceClass::SingleLine);

  // like terms combine in the field
  Form4 twice = parse_form("x0*x1+x1*x0", F);
  CHECK(twice[mon4_index(0, 1)] == 2);
  CHECK(parse_form("x0*x1+2*x1*x0", F)[mon4_index(0, 1)] == 0);

  // minus maps to the additive inverse
  CHECK(parse_form("-x0*x1", F)[mon4_index(0, 1)] == 2);
  CHECK(parse_form("x0^2-x1*x2", F)[mon4_index(1, 2)] == 2);

  // whitespace is ignored
  CHECK(parse_form("  x0 * x1 + 2 * x2 ^ 2 ", F)[mon4_index(2, 2)] == 2);
}

TEST_CASE("extension-field coefficients") {
  FieldSpec F = make_field(2, 2);
  CHECK(parse_form("a*x0*x1", F)[mon4_index(0, 1)] == 2);
  CHECK(parse_form("(a+1)*x0*x1", F)[mon4_index(0, 1)] == 3);
  CHECK(parse_form("(a)*x3^2", F)[mon4_index(3, 3)] == 2);

  FieldSpec F9 = make_field(3, 2);
  CHECK(parse_form("(2a+2)*x0^2", F9)[mon4_index(0, 0)] == 8);
  CHECK(parse_form("(2*a+2)*x0^2", F9)[mon4_index(0, 0)] == 8);
  CHECK(parse_form("(a^2)*x0^2", F9)[mon4_index(0, 0)] == F9.mul(3, 3));
}

TEST_CASE("parse errors carry a position") {
  FieldSpec F = make_field(3, 1);
  CHECK_THROWS_AS(parse_form("x4^2", F), ParseError);
  CHECK_THROWS_AS(parse_form("x0", F), ParseError);          // degree 1
  CHECK_THROWS_AS(parse_form("x0*x1*x2", F), ParseError);    // degree 3
  CHECK_THROWS_AS(parse_form("x0^3", F), ParseError);
  CHECK_THROWS_AS(parse_form("", F), ParseError);
  CHECK_THROWS_AS(parse_form("x0*x1 + ", F), ParseError);
  CHECK_THROWS_AS(parse_form("a*x0*x1", F), ParseError);     // no 'a' in a prime field
  try {
    parse_form("x0*x1 ? x2*x3", F);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos == 6);
  }
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937 rng(33);
  for (auto [p, m] : {std::pair{3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    FieldSpec F = make_field(p, m);
    for (int t = 0; t < 1000; ++t) {
      Form4 f{};
      for (auto& c : f) c = Fel(rng() % F.q);
      if (is_zero_form(f)) continue;
      CHECK(parse_form(serialize_form(F, f), F) == f);
    }
  }
}
