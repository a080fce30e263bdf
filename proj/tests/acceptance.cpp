// acceptance.cpp — runs every acceptance criterion and prints one line per
// criterion. Exit code is the number of failed criteria.
//
// Known honest failures are reported with their full analysis: the expected
// second-weight lists omit the three-common-line tangency quadrics, the
// expected elliptic minimum-weight list omits the two-conic elliptic type
// (q = 5), and its cone type is vacuous at q = 3. See the README.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "qcl/formexpr.hpp"
#include "qcl/intersections.hpp"
#include "qcl/parallel.hpp"
#include "qcl/wordgeom.hpp"

using namespace qcl;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int criterion, bool pass, const std::string& what, double secs) {
  std::printf("[%s] criterion %2d: %s [%.1fs]\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
              secs);
  if (!pass) ++g_failures;
}

FieldSpec field_for(int q) {
  switch (q) {
    case 4: return make_field(2, 2);
    case 8: return make_field(2, 3);
    case 9: return make_field(3, 2);
    default: return make_field(q, 1);
  }
}

const std::vector<SurfaceClass> kAllClasses{SurfaceClass::RepeatedPlane, SurfaceClass::PlanePair,
                                            SurfaceClass::SingleLine,    SurfaceClass::Cone,
                                            SurfaceClass::Hyperbolic,    SurfaceClass::Elliptic};

void criterion1() {
  Timer t;
  bool ok = true;
  std::ostringstream note;
  int assertions = 0;
  for (int q : {3, 4, 5, 7}) {
    FieldSpec F = field_for(q);
    Geometry G(F, false);
    for (SurfaceClass c : kAllClasses) {
      int got = int(zero_set(G, canonical_form(F, c)).size());
      ++assertions;
      if (got != orbit_point_count(c, q)) {
        ok = false;
        note << " " << to_string(c) << "@q=" << q << " got " << got;
      }
    }
  }
  report(1, ok && assertions == 24,
         "orbit point counts for all six canonical quadrics, q in {3,4,5,7} (24 assertions)" +
             note.str(),
         t.secs());
}

struct CodeRun {
  FunctionalCode code;
  WeightDistribution dist;
  WeightHierarchy h;
};

CodeRun run_code(const Geometry& G, SurfaceClass c, int workers = 1) {
  CodeRun r;
  r.code = build_code(G, canonical_form(G.field(), c));
  r.dist = weight_distribution(r.code, G.field(), workers);
  r.h = weight_hierarchy(r.dist);
  return r;
}

bool params_match(const CodeRun& r, const CodeParams& want, std::ostringstream& note, int q) {
  bool ok = r.code.n == want.n && r.code.k == want.k && r.h.w1 == want.d && r.h.w2 == want.w2 &&
            r.h.w3 == want.w3;
  if (!ok)
    note << " q=" << q << " measured [" << r.code.n << "," << r.code.k << "," << r.h.w1 << ","
         << r.h.w2 << "," << r.h.w3 << "] expected [" << want.n << "," << want.k << "," << want.d
         << "," << want.w2 << "," << want.w3 << "]";
  return ok;
}

void criterion2() {
  Timer t;
  bool ok = true;
  std::ostringstream note;
  for (int q : {3, 4, 5}) {
    FieldSpec F = field_for(q);
    Geometry G(F, true);
    CodeRun r = run_code(G, SurfaceClass::Hyperbolic);
    ok = params_match(r, expected_params(SurfaceClass::Hyperbolic, q), note, q) && ok;
  }
  report(2, ok, "hyperbolic codes: (n,k,d,w2,w3) = ((q+1)^2, 9, (q-1)^2, q(q-1), q^2-q+1)" +
                    note.str(),
         t.secs());
}

void criterion3() {
  Timer t;
  bool ok = true;
  std::ostringstream note;
  for (int q : {3, 4, 5}) {
    FieldSpec F = field_for(q);
    Geometry G(F, true);
    CodeRun r = run_code(G, SurfaceClass::Elliptic);
    ok = params_match(r, expected_params(SurfaceClass::Elliptic, q), note, q) && ok;
  }
  report(3, ok, "elliptic codes: [10,9,2]_3, [17,9,7]_4, [26,9,14]_5 with w2=q(q-2), w3=(q-1)^2" +
                    note.str(),
         t.secs());
}

void criterion4() {
  Timer t;
  bool ok = true;
  std::ostringstream note;
  for (int q : {4, 5}) {
    FieldSpec F = field_for(q);
    Geometry G(F, true);
    CodeRun r = run_code(G, SurfaceClass::Cone);
    ok = params_match(r, expected_params(SurfaceClass::Cone, q), note, q) && ok;
  }
  {
    FieldSpec F = field_for(3);
    Geometry G(F, true);
    FunctionalCode cone = build_code(G, canonical_form(F, SurfaceClass::Cone));
    if (cone.k != 8) {
      ok = false;
      note << " q=3 cone measured k=" << cone.k << " (expected 8)";
    } else {
      note << " (q=3: measured k=8, documented deviation from the stated k=9)";
    }
  }
  report(4, ok, "cone codes: (q^2+q+1, 9, q(q-3), q(q-2), (q-1)^2) at q in {4,5}" + note.str(),
         t.secs());
}

void criterion5() {
  Timer t;
  bool ok = true;
  std::ostringstream note;
  FieldSpec F = field_for(3);
  Geometry G(F, true);
  for (SurfaceClass c : {SurfaceClass::Cone, SurfaceClass::Hyperbolic, SurfaceClass::Elliptic}) {
    FunctionalCode code = build_code(G, canonical_form(F, c));
    SpectrumCertificate cert = spectrum(G, code, true);
    if (!cert.pattern_ok || !cert.violations.empty()) {
      ok = false;
      note << " " << to_string(c) << ": " << cert.violations.size() << " violations";
    }
  }
  report(5, ok,
         "exhaustive q=3 spectra over all 3^10 forms match the stated patterns "
         "(cone with the q=3 kernel caveat)" +
             note.str(),
         t.secs());
}

void criterion6() {
  Timer t;
  bool ok = true;
  std::ostringstream note;
  std::uint64_t pairs = 0;
  for (int q : {3, 4, 5}) {
    FieldSpec F = field_for(q);
    Geometry G(F, true);
    BoundSuiteReport r = bound_suite(G, resolve_workers(0), 1, 20000);
    pairs += r.pairs_checked;
    if (!r.ok()) {
      ok = false;
      note << " q=" << q << ": " << r.violation_count << " violations;";
      for (std::size_t i = 0; i < r.violations.size() && i < 2; ++i)
        note << " " << r.violations[i] << ";";
    }
    // the exact-value cases must actually be exercised at every q
    for (const char* cs : {"B.hyp_tangent_pair_bisecant_axis=4q", "B.ell_tangent_pair=2",
                           "C.cone_generator_pairs_vertex_axis=4q+1"})
      if (r.cases.at(cs).pairs == 0) {
        ok = false;
        note << " case unexercised at q=" << q << ": " << cs << ";";
      }
    if (r.cases.at(q == 3 ? "E1.hyp_pair_4_lines=4q" : "D4.cone_pair_4_lines=4q+1").pairs == 0) {
      ok = false;
      note << " four-line case unexercised at q=" << q << ";";
    }
  }
  // the elliptic-pair ceiling 2(q+1) dominates the irreducible-quartic bound
  for (int q : {3, 4, 5, 6, 7, 8, 9})
    if (2 * (q + 1) < 1 + q + int(std::floor(2 * std::sqrt(double(q))))) {
      ok = false;
      note << " dominance fails at q=" << q;
    }
  std::ostringstream what;
  what << "intersection bound suite: q=3 exhaustive, q in {4,5} structured (" << pairs
       << " pairs, zero violations)" << note.str();
  report(6, ok, what.str(), t.secs());
}

void criterion7() {
  Timer t;
  bool ok = true;
  std::ostringstream note;
  for (int q : {3, 4, 5}) {
    FieldSpec F = field_for(q);
    Geometry G(F, true);
    IntersectionReport r = intersection_count(G, parse_form("x0*x2+x1*x2+x2^2", F),
                                              parse_form("x0*x1", F));
    if (r.size != 4 * q + 1) {
      ok = false;
      note << " pair1@q=" << q << " size " << r.size;
    }
  }
  for (int q : {3, 5}) {
    FieldSpec F = field_for(q);
    Geometry G(F, true);
    IntersectionReport r = intersection_count(G, parse_form("x0*x1+x2*x3", F),
                                              parse_form("x0*x3+x1*x2", F));
    if (r.size != 4 * q || r.common_lines.size() != 4) {
      ok = false;
      note << " pair2@q=" << q << " size " << r.size << " lines " << r.common_lines.size();
    }
  }
  report(7, ok,
         "witness pairs: (x0+x1)x2+x2^2 vs x0x1 gives 4q+1 (q=3,4,5); "
         "x0x1+x2x3 vs x0x3+x1x2 gives 4 lines and 4q points (q=3,5)" +
             note.str(),
         t.secs());
}

void criterion8() {
  Timer t;
  bool ok = true;
  std::ostringstream note;

  struct Gap {  // documented census findings; anything outside this list is a real failure
    SurfaceClass cls;
    int q, tier;
    std::string failure;
  };
  const std::vector<Gap> documented{
      {SurfaceClass::Elliptic, 3, 1, "listed type not attained: cone_all_bisecants"},
      {SurfaceClass::Elliptic, 5, 1, "unlisted type attained: elliptic_two_conics"},
      {SurfaceClass::Hyperbolic, 3, 2, "unlisted type attained: hyperbolic_three_common_lines"},
      {SurfaceClass::Hyperbolic, 4, 2, "unlisted type attained: hyperbolic_three_common_lines"},
      {SurfaceClass::Hyperbolic, 5, 2, "unlisted type attained: hyperbolic_three_common_lines"},
      {SurfaceClass::Cone, 4, 2, "unlisted type attained: cone_three_common_lines"},
      {SurfaceClass::Cone, 5, 2, "unlisted type attained: cone_three_common_lines"},
  };

  auto run = [&](SurfaceClass cls, int q, int tier) {
    FieldSpec F = field_for(q);
    Geometry G(F, true);
    CodeRun r = run_code(G, cls, resolve_workers(0));
    TheoremCheckResult tc = theorem_check(G, r.code, r.dist, tier, resolve_workers(0));
    if (!tc.applicable || tc.pass) return;
    ok = false;
    bool known = false;
    for (const Gap& g : documented)
      known = known || (g.cls == cls && g.q == q && g.tier == tier && tc.failures.size() == 1 &&
                        tc.failures[0] == g.failure);
    note << " " << to_string(cls) << " q=" << q << " w" << tier << ": " << tc.failures[0]
         << (known ? " (documented census finding)" : " (UNEXPLAINED)") << ";";
  };

  for (int q : {3, 4, 5}) {
    run(SurfaceClass::Hyperbolic, q, 1);
    run(SurfaceClass::Hyperbolic, q, 2);
    run(SurfaceClass::Elliptic, q, 1);
  }
  for (int q : {4, 5}) {
    run(SurfaceClass::Cone, q, 1);
    run(SurfaceClass::Cone, q, 2);
  }
  // elliptic w2 census is emitted without assertion
  {
    FieldSpec F = field_for(4);
    Geometry G(F, true);
    CodeRun r = run_code(G, SurfaceClass::Elliptic);
    TheoremCheckResult tc = theorem_check(G, r.code, r.dist, 2);
    if (tc.applicable) {
      ok = false;
      note << " elliptic w2 unexpectedly asserted;";
    }
  }
  report(8, ok,
         "word censuses match the expected minimum/second-weight type lists exactly" + note.str(),
         t.secs());
}

void criterion9() {
  Timer t;
  bool ok = true;
  std::ostringstream note;
  for (int q : {3, 4, 5}) {
    FieldSpec F = field_for(q);
    Geometry G(F, true);
    for (SurfaceClass c : {SurfaceClass::Hyperbolic, SurfaceClass::Elliptic}) {
      FunctionalCode code = build_code(G, canonical_form(F, c));
      WeightDistribution d1 = weight_distribution(code, F, 1);
      WeightDistribution d4 = weight_distribution(code, F, 4);
      if (d1.counts != d4.counts) {
        ok = false;
        note << " " << to_string(c) << "@q=" << q << " worker-dependent;";
      }
    }
  }
  // the q=7 elliptic distribution: 7^9 codewords, [50,9,34]
  {
    Timer t7;
    FieldSpec F = field_for(7);
    Geometry G(F, true);
    CodeRun r = run_code(G, SurfaceClass::Elliptic, resolve_workers(0));
    bool ok7 = r.code.n == 50 && r.code.k == 9 && r.h.w1 == 34 && r.h.w2 == 35 && r.h.w3 == 36 &&
               r.dist.total() == 40353607ull && t7.secs() < 600.0;
    if (!ok7) {
      ok = false;
      note << " q=7 elliptic failed;";
    } else {
      std::ostringstream o;
      o << " (q=7 elliptic [50,9,34] in " << int(t7.secs() * 10) / 10.0 << "s)";
      note << o.str();
    }
  }
  report(9, ok, "1-worker and 4-worker distributions are bit-identical; q=7 elliptic target" +
                    note.str(),
         t.secs());
}

void criterion10() {
  Timer t;
  bool ok = true;
  std::ostringstream note;

  // field axioms, exhaustively for q <= 9
  for (int q : {3, 4, 5, 7, 8, 9}) {
    FieldSpec F = field_for(q);
    bool axioms = true;
    for (int a = 0; a < q && axioms; ++a) {
      if (F.add(Fel(a), 0) != Fel(a) || F.mul(Fel(a), 1) != Fel(a)) axioms = false;
      if (a != 0 && F.mul(Fel(a), F.inv(Fel(a))) != 1) axioms = false;
      if (F.add(Fel(a), F.neg(Fel(a))) != 0) axioms = false;
      for (int b = 0; b < q && axioms; ++b) {
        if (F.add(Fel(a), Fel(b)) != F.add(Fel(b), Fel(a))) axioms = false;
        if (F.mul(Fel(a), Fel(b)) != F.mul(Fel(b), Fel(a))) axioms = false;
        for (int c = 0; c < q && axioms; ++c) {
          if (F.add(F.add(Fel(a), Fel(b)), Fel(c)) != F.add(Fel(a), F.add(Fel(b), Fel(c))))
            axioms = false;
          if (F.mul(F.mul(Fel(a), Fel(b)), Fel(c)) != F.mul(Fel(a), F.mul(Fel(b), Fel(c))))
            axioms = false;
          if (F.mul(Fel(a), F.add(Fel(b), Fel(c))) !=
              F.add(F.mul(Fel(a), Fel(b)), F.mul(Fel(a), Fel(c))))
            axioms = false;
        }
      }
    }
    if (!axioms) {
      ok = false;
      note << " axioms fail at q=" << q << ";";
    }
  }

  // scalar and coordinate-change invariance of class and distribution
  std::mt19937 rng(17);
  for (int q : {3, 4}) {
    FieldSpec F = field_for(q);
    Geometry G(F, true);
    auto random_invertible = [&] {
      while (true) {
        std::array<std::array<Fel, 4>, 4> M;
        for (auto& row : M)
          for (auto& c : row) c = Fel(rng() % q);
        Form4 probe = pullback(F, canonical_form(F, SurfaceClass::Hyperbolic), M);
        if (!is_zero_form(probe) && zero_mask(G, probe).count() == (q + 1) * (q + 1)) return M;
      }
    };
    for (SurfaceClass c : {SurfaceClass::Hyperbolic, SurfaceClass::Elliptic, SurfaceClass::Cone}) {
      Form4 f = canonical_form(F, c);
      WeightDistribution base = weight_distribution(build_code(G, f), F);
      for (int s = 2; s < q; ++s)
        if (classify4(G, scale_form(F, f, Fel(s))).cls != c) {
          ok = false;
          note << " scalar invariance fails;";
        }
      for (int trial = 0; trial < 10; ++trial) {
        Form4 g = pullback(F, f, random_invertible());
        if (classify4(G, g).cls != c) {
          ok = false;
          note << " class not invariant under coordinate change;";
          break;
        }
        WeightDistribution d = weight_distribution(build_code(G, g), F);
        if (d.counts != base.counts) {
          ok = false;
          note << " distribution not invariant under coordinate change;";
          break;
        }
      }
    }
    // 50 random coordinate changes preserve every canonical class
    for (int trial = 0; trial < 50; ++trial) {
      auto M = random_invertible();
      for (SurfaceClass c : kAllClasses)
        if (classify4(G, pullback(F, canonical_form(F, c), M)).cls != c) {
          ok = false;
          note << " class not invariant (rank<=2);";
        }
    }
  }

  // spectrum-hierarchy duality, exhaustive at q=3
  {
    FieldSpec F = field_for(3);
    Geometry G(F, true);
    for (SurfaceClass c : {SurfaceClass::Cone, SurfaceClass::Hyperbolic, SurfaceClass::Elliptic}) {
      FunctionalCode code = build_code(G, canonical_form(F, c));
      WeightDistribution d = weight_distribution(code, F);
      SpectrumCertificate cert = spectrum(G, code, true);
      std::vector<int> dual;
      for (int w : d.nonzero_weights()) dual.push_back(code.n - w);
      std::sort(dual.begin(), dual.end());
      if (dual != cert.attained) {
        ok = false;
        note << " duality fails for " << to_string(c) << ";";
      }
    }
  }
  report(10, ok,
         "property suites: field axioms (q<=9 exhaustive), scalar/coordinate-change "
         "invariance, spectrum-hierarchy duality" +
             note.str(),
         t.secs());
}

}  // namespace

int main(int argc, char** argv) {
  Timer total;
  void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9, criterion10};
  if (argc > 1) {  // run a single criterion, e.g. ./acceptance 6
    int n = std::atoi(argv[1]);
    if (n < 1 || n > 10) {
      std::fprintf(stderr, "usage: %s [1..10]\n", argv[0]);
      return 64;
    }
    criteria[n - 1]();
    return g_failures;
  }
  for (auto* c : criteria) c();
  std::printf("%d/10 criteria passed in %.1fs\n", 10 - g_failures, total.secs());
  if (g_failures > 0)
    std::printf("failed criteria reflect measured mathematics; see README.md and the census "
                "reports for the analysis\n");
  return g_failures;
}
