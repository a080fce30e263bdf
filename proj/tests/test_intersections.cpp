#include "doctest.h"
#include "qcl/intersections.hpp"

#include <stdexcept>

#include "qcl/formexpr.hpp"

using namespace qcl;

TEST_CASE("witness pair: plane-pair quadrics meeting in 4q+1 points") {
  for (auto [p, m] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
    FieldSpec F = make_field(p, m);
    Geometry G(F, true);
    Form4 f1 = parse_form("x0*x2+x1*x2+x2^2", F);  // (x0+x1)x2 + x2^2
    Form4 f2 = parse_form("x0*x1", F);
    IntersectionReport r = intersection_count(G, f1, f2);
    CHECK(r.size == 4 * F.q + 1);
    CHECK(r.common_lines.size() == 4);
    CHECK(r.shared_planes.empty());
    // the four common lines are concurrent
    Mask common = G.lines()[r.common_lines[0]].mask;
    for (int li : r.common_lines) {
      Mask next;
      next.resize_bits(common.bits);
      for (int t = 0; t < common.bits; ++t)
        if (common.test(t) && G.lines()[li].mask.test(t)) next.set(t);
      common = next;
    }
    CHECK(common.count() == 1);
    // the first factor splits into two planes
    CHECK(classify4(G, f1).cls == SurfaceClass::PlanePair);
  }
}

TEST_CASE("witness pair: hyperbolic quadrics sharing four lines for odd q") {
  for (int q : {3, 5}) {
    FieldSpec F = make_field(q, 1);
    Geometry G(F, true);
    Form4 f1 = parse_form("x0*x1+x2*x3", F);
    Form4 f2 = parse_form("x0*x3+x1*x2", F);
    IntersectionReport r = intersection_count(G, f1, f2);
    CHECK(r.size == 4 * q);
    CHECK(r.common_lines.size() == 4);
    CHECK(common_lines(G, f1, f2).size() == 4);
  }
  // at even q the same pair is tangent along a line and shares only 3
  FieldSpec F4 = make_field(2, 2);
  Geometry G4(F4, true);
  IntersectionReport r4 =
      intersection_count(G4, parse_form("x0*x1+x2*x3", F4), parse_form("x0*x3+x1*x2", F4));
  CHECK(r4.size == 3 * 4 + 1);
  CHECK(r4.common_lines.size() == 3);
}

TEST_CASE("identical forms intersect in the full zero set") {
  FieldSpec F = make_field(3, 1);
  Geometry G(F, true);
  Form4 f = canonical_form(F, SurfaceClass::Hyperbolic);
  CHECK(intersection_count(G, f, f).size == 16);
  Form4 zero{};
  CHECK_THROWS_AS(intersection_count(G, f, zero), std::invalid_argument);
}

TEST_CASE("elliptic pairs share no lines") {
  FieldSpec F = make_field(3, 1);
  Geometry G(F, true);
  Form4 f = canonical_form(F, SurfaceClass::Elliptic);
  Form4 g = pullback(F, f, {{{{0, 1, 0, 0}}, {{1, 0, 0, 0}}, {{0, 0, 1, 0}}, {{0, 0, 0, 1}}}});
  REQUIRE(classify4(G, g).cls == SurfaceClass::Elliptic);
  REQUIRE_FALSE(zero_mask(G, f) == zero_mask(G, g));
  CHECK(common_lines(G, f, g).empty());
}

TEST_CASE("a cone-pair lookalike that shares a whole plane") {
  // (x0+x1)x2+x2^2 and (x2+x0)x1+x1^2 both contain the plane x0+x1+x2=0,
  // so they factor as plane pairs and the 4-line ceiling does not apply
  FieldSpec F = make_field(3, 1);
  Geometry G(F, true);
  Form4 f1 = parse_form("x0*x2+x1*x2+x2^2", F);
  Form4 f2 = parse_form("x0*x1+x1*x2+x1^2", F);
  IntersectionReport r = intersection_count(G, f1, f2);
  CHECK(classify4(G, f1).cls == SurfaceClass::PlanePair);
  CHECK(classify4(G, f2).cls == SurfaceClass::PlanePair);
  CHECK(r.shared_planes.size() == 1);
  CHECK(int(r.common_lines.size()) > 4);  // every line of the shared plane
}

TEST_CASE("genuine rank-3 cone pairs with four common lines exist only from q=4 on") {
  {
    FieldSpec F = make_field(3, 1);
    Geometry G(F, true);
    Form4 f, g;
    // at q=3 a pencil of conics through 4 general points has a single
    // nondegenerate member, so no such pair exists
    CHECK_FALSE(find_cone_pair_with_four_lines(G, f, g));
  }
  {
    FieldSpec F = make_field(2, 2);
    Geometry G(F, true);
    Form4 f, g;
    REQUIRE(find_cone_pair_with_four_lines(G, f, g));
    CHECK(classify4(G, f).cls == SurfaceClass::Cone);
    CHECK(classify4(G, g).cls == SurfaceClass::Cone);
    IntersectionReport r = intersection_count(G, f, g);
    CHECK(r.common_lines.size() == 4);
    CHECK(r.size == 4 * F.q + 1);
  }
}

TEST_CASE("exhaustive spectra at q=3 match the stated patterns") {
  FieldSpec F = make_field(3, 1);
  Geometry G(F, true);
  const int q = 3;

  FunctionalCode hyp = build_code(G, canonical_form(F, SurfaceClass::Hyperbolic));
  SpectrumCertificate ch = spectrum(G, hyp, true);
  CHECK(ch.pattern_ok);
  CHECK(ch.violations.empty());
  CHECK(ch.max1 == 4 * q);
  CHECK(ch.max2 == 3 * q + 1);
  CHECK(ch.max3 <= 3 * q);

  FunctionalCode ell = build_code(G, canonical_form(F, SurfaceClass::Elliptic));
  SpectrumCertificate ce = spectrum(G, ell, true);
  CHECK(ce.pattern_ok);
  CHECK(ce.violations.empty());
  CHECK(ce.max1 == 2 * (q + 1));
  CHECK(ce.max2 == 2 * q + 1);
  CHECK(ce.max3 <= 2 * q);

  // kernel forms are excluded, so the q=3 cone never attains 4q+1 = n
  FunctionalCode cone = build_code(G, canonical_form(F, SurfaceClass::Cone));
  SpectrumCertificate cc = spectrum(G, cone, true);
  CHECK(cc.pattern_ok);
  CHECK(cc.violations.empty());
  CHECK(cc.max1 == 3 * q + 1);
  CHECK_FALSE(cc.top1_attained);
  CHECK(cc.top2_attained);
}

TEST_CASE("spectrum-hierarchy duality at q=3") {
  FieldSpec F = make_field(3, 1);
  Geometry G(F, true);
  for (SurfaceClass c : {SurfaceClass::Cone, SurfaceClass::Hyperbolic, SurfaceClass::Elliptic}) {
    FunctionalCode code = build_code(G, canonical_form(F, c));
    WeightDistribution d = weight_distribution(code, F);
    SpectrumCertificate cert = spectrum(G, code, true);
    std::vector<int> from_weights;
    for (int w : d.nonzero_weights()) from_weights.push_back(code.n - w);
    std::sort(from_weights.begin(), from_weights.end());
    CHECK(from_weights == cert.attained);
  }
}

TEST_CASE("sampled spectra are seed-reproducible") {
  FieldSpec F = make_field(5, 1);
  Geometry G(F, true);
  FunctionalCode code = build_code(G, canonical_form(F, SurfaceClass::Elliptic));
  SpectrumCertificate a = spectrum(G, code, false, 20000, 7, 1);
  SpectrumCertificate b = spectrum(G, code, false, 20000, 7, 1);
  CHECK(a.attained == b.attained);
  CHECK(a.pattern_ok);
  CHECK(a.violations.empty());
  CHECK(a.seed == 7);
}

TEST_CASE("structured bound suite at q=4 reports no violations") {
  FieldSpec F = make_field(2, 2);
  Geometry G(F, true);
  BoundSuiteReport r = bound_suite(G, 1, 1, 2000);
  CHECK(r.mode == "structured");
  CHECK(r.ok());
  // the exact-value cases were exercised and attained their predicted sizes
  const int q = 4;
  CHECK(r.cases.at("B.hyp_tangent_pair_bisecant_axis=4q").attained() ==
        std::vector<int>{4 * q});
  CHECK(r.cases.at("B.ell_tangent_pair=2").attained() == std::vector<int>{2});
  CHECK(r.cases.at("C.cone_generator_pairs_vertex_axis=4q+1").attained() ==
        std::vector<int>{4 * q + 1});
  CHECK(r.cases.at("D4.cone_pair_4_lines=4q+1").attained() == std::vector<int>{4 * q + 1});
}

TEST_CASE("bound suite rejects unsupported q") {
  FieldSpec F = make_field(7, 1);
  Geometry G(F, true);
  CHECK_THROWS_AS(bound_suite(G, 1, 1, 10), std::invalid_argument);
}

TEST_CASE("the three largest attained sizes are the hierarchy duals (q=4,5 exhaustive)") {
  for (int q : {4, 5}) {
    FieldSpec F = q == 4 ? make_field(2, 2) : make_field(5, 1);
    Geometry G(F, true);
    for (SurfaceClass c : {SurfaceClass::Cone, SurfaceClass::Hyperbolic, SurfaceClass::Elliptic}) {
      FunctionalCode code = build_code(G, canonical_form(F, c));
      SpectrumCertificate cert = spectrum(G, code, true);  // q^10 <= 1e8 here
      WeightHierarchy h = weight_hierarchy(weight_distribution(code, F));
      CHECK(cert.max1 == code.n - h.w1);
      CHECK(cert.max2 == code.n - h.w2);
      CHECK(cert.max3 == code.n - h.w3);
      switch (c) {
        case SurfaceClass::Cone:
          CHECK(cert.max1 == 4 * q + 1);
          CHECK(cert.max2 == 3 * q + 1);
          CHECK(cert.max3 == 3 * q);
          break;
        case SurfaceClass::Hyperbolic:
          CHECK(cert.max1 == 4 * q);
          CHECK(cert.max2 == 3 * q + 1);
          CHECK(cert.max3 == 3 * q);
          break;
        default:
          CHECK(cert.max1 == 2 * (q + 1));
          CHECK(cert.max2 == 2 * q + 1);
          CHECK(cert.max3 == 2 * q);
          break;
      }
    }
  }
}
