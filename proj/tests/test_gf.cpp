#include "doctest.h"
#include "qcl/gf.hpp"
#include <stdexcept>

#include <set>

using namespace qcl;

namespace {

// independent irreducibility oracle for quadratics/cubics over GF(p):
// degree <= 3 is irreducible iff it has no root
bool has_root_mod_p(const std::vector<int>& poly, int p) {
  for (int x = 0; x < p; ++x) {
    long v = 0, xp = 1;
    for (int c : poly) {
      v = (v + c * xp) % p;
      xp = (xp * x) % p;
    }
    if (v % p == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("prime fields") {
  FieldSpec F = make_field(3, 1);
  CHECK(F.q == 3);
  CHECK(field_elements(F) == std::vector<Fel>{0, 1, 2});
  CHECK(F.modulus == std::vector<int>{0, 1});  // x

  FieldSpec F5 = make_field(5, 1);
  CHECK(F5.add(3, 4) == 2);
  CHECK(F5.mul(3, 4) == 2);
  FieldSpec F7 = make_field(7, 1);
  CHECK(F7.inv(3) == 5);
}

TEST_CASE("GF(4) has the unique irreducible quadratic as modulus") {
  // oracle: scan all monic quadratics over GF(2) for roots
  std::vector<std::vector<int>> irreducible;
  for (int c0 = 0; c0 < 2; ++c0)
    for (int c1 = 0; c1 < 2; ++c1) {
      std::vector<int> f{c0, c1, 1};
      if (!has_root_mod_p(f, 2)) irreducible.push_back(f);
    }
  REQUIRE(irreducible.size() == 1);
  CHECK(irreducible[0] == std::vector<int>{1, 1, 1});

  FieldSpec F = make_field(2, 2);
  CHECK(F.modulus == std::vector<int>{1, 1, 1});
  CHECK(F.q == 4);
  // x * x = x + 1 under x^2+x+1
  CHECK(F.mul(2, 2) == 3);
  // characteristic 2
  CHECK(F.add(2, 2) == 0);
}

TEST_CASE("GF(8) and GF(9) moduli are the smallest irreducible tuples") {
  FieldSpec F8 = make_field(2, 3);
  // tuple order is constant term first, so (1,0,1) precedes (1,1,0)
  CHECK(F8.modulus == std::vector<int>{1, 0, 1, 1});  // x^3+x^2+1
  CHECK_FALSE(has_root_mod_p(F8.modulus, 2));
  for (int a = 1; a < 8; ++a) CHECK(F8.mul(Fel(a), F8.inv(Fel(a))) == 1);

  FieldSpec F9 = make_field(3, 2);
  CHECK(F9.q == 9);
  CHECK(F9.modulus == std::vector<int>{1, 0, 1});  // x^2+1
  CHECK_FALSE(has_root_mod_p(F9.modulus, 3));
  CHECK(F9.add(1, 0) == 1);
  std::vector<Fel> elems = field_elements(F9);
  std::set<Fel> uniq(elems.begin(), elems.end());
  CHECK(uniq.size() == 9);
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
  for (auto [p, m] : {std::pair{3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    FieldSpec F = make_field(p, m);
    const int q = F.q;
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(Fel(a), 0) == Fel(a));
      CHECK(F.mul(Fel(a), 1) == Fel(a));
      CHECK(F.mul(Fel(a), 0) == 0);
      CHECK(F.add(Fel(a), F.neg(Fel(a))) == 0);
      if (a != 0) CHECK(F.mul(Fel(a), F.inv(Fel(a))) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(Fel(a), Fel(b)) == F.add(Fel(b), Fel(a)));
        CHECK(F.mul(Fel(a), Fel(b)) == F.mul(Fel(b), Fel(a)));
        for (int c = 0; c < q; ++c) {
          CHECK(F.add(F.add(Fel(a), Fel(b)), Fel(c)) == F.add(Fel(a), F.add(Fel(b), Fel(c))));
          CHECK(F.mul(F.mul(Fel(a), Fel(b)), Fel(c)) == F.mul(Fel(a), F.mul(Fel(b), Fel(c))));
          CHECK(F.mul(Fel(a), F.add(Fel(b), Fel(c))) ==
                F.add(F.mul(Fel(a), Fel(b)), F.mul(Fel(a), Fel(c))));
        }
      }
    }
  }
}

TEST_CASE("Frobenius is additive and the unit group is cyclic") {
  for (auto [p, m] : {std::pair{3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    FieldSpec F = make_field(p, m);
    for (int a = 0; a < F.q; ++a)
      for (int b = 0; b < F.q; ++b)
        CHECK(F.pow(F.add(Fel(a), Fel(b)), p) == F.add(F.pow(Fel(a), p), F.pow(Fel(b), p)));

    bool found_generator = false;
    for (int g = 1; g < F.q && !found_generator; ++g) {
      int order = 1;
      Fel x = Fel(g);
      while (x != 1) {
        x = F.mul(x, Fel(g));
        ++order;
      }
      found_generator = order == F.q - 1;
    }
    CHECK(found_generator);
  }
}

TEST_CASE("construction and range errors") {
  CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);  // composite characteristic
  CHECK_THROWS_AS(make_field(2, 1), std::invalid_argument);  // q < 3
  CHECK_THROWS_AS(make_field(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_field(3, 5), std::invalid_argument);  // q > 81
  FieldSpec F = make_field(3, 1);
  CHECK_THROWS_AS(F.add(3, 0), std::out_of_range);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  CHECK(make_field(3, 4).q == 81);
}

TEST_CASE("element strings round through digits") {
  FieldSpec F9 = make_field(3, 2);
  CHECK(F9.element_str(0) == "0");
  CHECK(F9.element_str(2) == "2");
  CHECK(F9.element_str(3) == "a");
  CHECK(F9.element_str(4) == "a+1");
  CHECK(F9.element_str(8) == "2a+2");
  CHECK(F9.modulus_str() == "x^2+1");
}
