#include "qcl/intersections.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "qcl/parallel.hpp"

namespace qcl {
namespace {

constexpr int kMaxViolationDetails = 24;

// per-pair bound cases; each entry aggregates pair count and attained sizes
enum CaseId {
  cSectionNondeg,
  cSectionCone,
  cHypPP_TT_Bis,
  cHypPP_TT_Gen,
  cHypPP_TN_Tan,
  cHypPP_TN_Bis,
  cHypPP_NN_Tan,
  cHypPP_NN_Bis,
  cHypPP_NN_Skew,
  cEllPP_TT,
  cEllPP_TN_Tan,
  cEllPP_TN_Skew,
  cEllPP_NN_Tan,
  cEllPP_NN_Bis,
  cEllPP_NN_Skew,
  cConePP_GG_Point,
  cConePP_GG_Gen,
  cConePP_TG_Vertex,
  cConePP_Rest,
  cLineSection,
  cEllEll,
  cEllHyp,
  cEllCone,
  cHypHyp_c01,
  cHypHyp_c2Same,
  cHypHyp_c2Diff,
  cHypHyp_c3,
  cHypHyp_c4,
  cConeHyp_NoLine,
  cConeHyp_Line,
  cConeCone_c0,
  cConeCone_c1,
  cConeCone_c2,
  cConeCone_c3,
  cConeCone_c4,
  cBezout,
  cNondegVsAny,
  kCaseCount
};

const char* case_name(int c) {
  switch (c) {
    case cSectionNondeg: return "A.section_nondegenerate<=2q+1";
    case cSectionCone: return "A.section_cone<=2q+1";
    case cHypPP_TT_Bis: return "B.hyp_tangent_pair_bisecant_axis=4q";
    case cHypPP_TT_Gen: return "B.hyp_tangent_pair_generator_axis=3q+1";
    case cHypPP_TN_Tan: return "B.hyp_mixed_pair_tangent_axis=3q+1";
    case cHypPP_TN_Bis: return "B.hyp_mixed_pair_bisecant_axis=3q";
    case cHypPP_NN_Tan: return "B.hyp_nontangent_pair_tangent_axis=2q+1";
    case cHypPP_NN_Bis: return "B.hyp_nontangent_pair_bisecant_axis=2q";
    case cHypPP_NN_Skew: return "B.hyp_nontangent_pair_skew_axis=2q+2";
    case cEllPP_TT: return "B.ell_tangent_pair=2";
    case cEllPP_TN_Tan: return "B.ell_mixed_pair_tangent_axis=q+1";
    case cEllPP_TN_Skew: return "B.ell_mixed_pair_skew_axis=q+2";
    case cEllPP_NN_Tan: return "B.ell_nontangent_pair_tangent_axis=2q+1";
    case cEllPP_NN_Bis: return "B.ell_nontangent_pair_bisecant_axis=2q";
    case cEllPP_NN_Skew: return "B.ell_nontangent_pair_skew_axis=2q+2";
    case cConePP_GG_Point: return "C.cone_generator_pairs_vertex_axis=4q+1";
    case cConePP_GG_Gen: return "C.cone_generator_pairs_generator_axis=3q+1";
    case cConePP_TG_Vertex: return "C.cone_tangent_generator_pair_vertex_axis=3q+1";
    case cConePP_Rest: return "C.cone_plane_pair_rest<=3q";
    case cLineSection: return "D1.line_quadric<=q+1";
    case cEllEll: return "E2.elliptic_pair<=2q+2";
    case cEllHyp: return "D2.elliptic_hyperbolic<=2q+2";
    case cEllCone: return "D2.elliptic_cone<=2q+2";
    case cHypHyp_c01: return "E1.hyp_pair_common<=1<=2q+2";
    case cHypHyp_c2Same: return "E1.hyp_pair_2_same_regulus=2q+2";
    case cHypHyp_c2Diff: return "E1.hyp_pair_2_distinct_reguli<=3q+1";
    case cHypHyp_c3: return "E1.hyp_pair_3_lines_tangency=3q+1";
    case cHypHyp_c4: return "E1.hyp_pair_4_lines=4q";
    case cConeHyp_NoLine: return "D3.cone_hyp_no_line<=2q+2";
    case cConeHyp_Line: return "D3.cone_hyp_with_line<=3q";
    case cConeCone_c0: return "D4.cone_pair_0_lines<=2q+2";
    case cConeCone_c1: return "D4.cone_pair_1_line<=2q+1";
    case cConeCone_c2: return "D4.cone_pair_2_lines<=3q";
    case cConeCone_c3: return "D4.cone_pair_3_lines_tangency=3q+1";
    case cConeCone_c4: return "D4.cone_pair_4_lines=4q+1";
    case cBezout: return "bezout.common_lines<=4";
    case cNondegVsAny: return "P47.nondegenerate_vs_any<=4q";
  }
  return "?";
}

struct FormInfo {
  Form4 f{};
  SurfaceClass cls;
  Mask zmask;
  Mask lmask;  // contained lines
  Mask pmask;  // contained planes
  int H1 = -1, H2 = -1, axis = -1;  // plane pair decomposition
  int vertex = -1;                  // cone
  Mask tangent_planes;              // per-plane bit (Tangent / ConeTangent)
  Mask gpair_planes;                // per-plane bit (ConeGeneratorPair)
};

FormInfo make_info(const Geometry& G, const Form4& f) {
  const int q = G.q();
  FormInfo I;
  I.f = f;
  I.zmask = zero_mask(G, f);
  I.cls = classify4(G, f, I.zmask).cls;
  const auto& lines = G.lines();
  const auto& planes = G.planes();
  I.lmask.resize_bits(int(lines.size()));
  for (int li = 0; li < int(lines.size()); ++li)
    if (subset(lines[li].mask, I.zmask)) I.lmask.set(li);
  I.pmask.resize_bits(int(planes.size()));
  for (int hi = 0; hi < int(planes.size()); ++hi)
    if (subset(planes[hi].mask, I.zmask)) I.pmask.set(hi);

  if (I.cls == SurfaceClass::PlanePair) {
    for (int hi = 0; hi < int(planes.size()); ++hi)
      if (I.pmask.test(hi)) {
        if (I.H1 < 0)
          I.H1 = hi;
        else
          I.H2 = hi;
      }
    int a = -1, b = -1;
    for (int t = 0; t < I.zmask.bits && b < 0; ++t)
      if (planes[I.H1].mask.test(t) && planes[I.H2].mask.test(t)) {
        if (a < 0)
          a = t;
        else
          b = t;
      }
    I.axis = G.line_through(a, b);
  }
  if (I.cls == SurfaceClass::Cone || I.cls == SurfaceClass::Hyperbolic ||
      I.cls == SurfaceClass::Elliptic) {
    if (I.cls == SurfaceClass::Cone) {
      int g1 = -1, g2 = -1;
      for (int li = 0; li < int(lines.size()) && g2 < 0; ++li)
        if (I.lmask.test(li)) {
          if (g1 < 0)
            g1 = li;
          else
            g2 = li;
        }
      for (int t : lines[g1].pts)
        if (lines[g2].mask.test(t)) {
          I.vertex = t;
          break;
        }
    }
    I.tangent_planes.resize_bits(int(planes.size()));
    I.gpair_planes.resize_bits(int(planes.size()));
    for (int hi = 0; hi < int(planes.size()); ++hi) {
      int cnt = and_count(planes[hi].mask, I.zmask);
      switch (I.cls) {
        case SurfaceClass::Hyperbolic:
          if (cnt == 2 * q + 1) I.tangent_planes.set(hi);
          break;
        case SurfaceClass::Elliptic:
          if (cnt == 1) I.tangent_planes.set(hi);
          break;
        default:  // cone
          if (cnt == 2 * q + 1)
            I.gpair_planes.set(hi);
          else if (cnt == q + 1 && planes[hi].mask.test(I.vertex))
            I.tangent_planes.set(hi);
          break;
      }
    }
  }
  return I;
}

struct Agg {
  std::array<BoundCaseStat, kCaseCount> cases{};
  std::vector<std::string> violations;
  std::uint64_t violation_count = 0;
  std::uint64_t pairs = 0;
  std::uint64_t shared_plane_pairs = 0;
};

void note_violation(Agg& agg, const Geometry& G, int c, const FormInfo& A, const FormInfo& B,
                    int size, int cl, const char* why) {
  ++agg.violation_count;
  if (int(agg.violations.size()) >= kMaxViolationDetails) return;
  std::ostringstream os;
  os << case_name(c) << ": " << why << " size=" << size << " common_lines=" << cl << " f="
     << form_to_string(G.field(), A.f) << " (" << to_string(A.cls) << ") g="
     << form_to_string(G.field(), B.f) << " (" << to_string(B.cls) << ")";
  agg.violations.push_back(os.str());
}

void record(Agg& agg, const Geometry& G, int c, const FormInfo& A, const FormInfo& B, int size,
            int cl, bool ok, const char* why) {
  BoundCaseStat& s = agg.cases[c];
  ++s.pairs;
  if (size >= 0 && size < 64) s.attained_bits |= std::uint64_t(1) << size;
  if (!ok) note_violation(agg, G, c, A, B, size, cl, why);
}

// the two common line indices of a pair sharing exactly two lines
std::array<int, 2> two_common_lines(const FormInfo& A, const FormInfo& B) {
  std::array<int, 2> out{-1, -1};
  int found = 0;
  for (std::size_t w = 0; w < A.lmask.w.size() && found < 2; ++w) {
    std::uint64_t x = A.lmask.w[w] & B.lmask.w[w];
    while (x && found < 2) {
      int bit = std::countr_zero(x);
      out[found++] = int(w * 64) + bit;
      x &= x - 1;
    }
  }
  return out;
}

void check_pair(Agg& agg, const Geometry& G, const FormInfo& A, const FormInfo& B) {
  const int q = G.q();
  ++agg.pairs;
  const int size = and_count(A.zmask, B.zmask);
  const int cl = and_count(A.lmask, B.lmask);
  const bool shared_plane = intersects(A.pmask, B.pmask);

  if (shared_plane) {
    ++agg.shared_plane_pairs;
  } else {
    record(agg, G, cBezout, A, B, cl, cl, cl <= 4, "more than 4 common lines without a shared plane");
  }

  const bool a_nondeg = A.cls == SurfaceClass::Hyperbolic || A.cls == SurfaceClass::Elliptic;
  const bool b_nondeg = B.cls == SurfaceClass::Hyperbolic || B.cls == SurfaceClass::Elliptic;
  if (a_nondeg || b_nondeg)
    record(agg, G, cNondegVsAny, A, B, size, cl, size <= 4 * q, "exceeds 4q");
  if (A.cls == SurfaceClass::SingleLine || B.cls == SurfaceClass::SingleLine)
    record(agg, G, cLineSection, A, B, size, cl, size <= q + 1, "exceeds q+1");

  // orient pairs with a plane-pair member
  const FormInfo* S = nullptr;
  const FormInfo* P = nullptr;
  if (A.cls == SurfaceClass::PlanePair)
    P = &A, S = &B;
  else if (B.cls == SurfaceClass::PlanePair)
    P = &B, S = &A;

  if (P && (S->cls == SurfaceClass::Hyperbolic || S->cls == SurfaceClass::Elliptic ||
            S->cls == SurfaceClass::Cone)) {
    const bool t1 = S->tangent_planes.test(P->H1);
    const bool t2 = S->tangent_planes.test(P->H2);
    const int lc = and_count(G.lines()[P->axis].mask, S->zmask);
    if (S->cls == SurfaceClass::Hyperbolic) {
      if (t1 && t2) {
        if (lc == 2)
          record(agg, G, cHypPP_TT_Bis, *S, *P, size, cl, size == 4 * q, "expected exactly 4q");
        else if (lc == q + 1)
          record(agg, G, cHypPP_TT_Gen, *S, *P, size, cl, size == 3 * q + 1,
                 "expected exactly 3q+1");
        else
          note_violation(agg, G, cHypPP_TT_Bis, *S, *P, size, lc,
                         "tangent-pair axis neither bisecant nor generator");
      } else if (t1 != t2) {
        if (lc == 1)
          record(agg, G, cHypPP_TN_Tan, *S, *P, size, cl, size == 3 * q + 1,
                 "expected exactly 3q+1");
        else if (lc == 2)
          record(agg, G, cHypPP_TN_Bis, *S, *P, size, cl, size == 3 * q, "expected exactly 3q");
        else
          note_violation(agg, G, cHypPP_TN_Tan, *S, *P, size, lc,
                         "mixed-pair axis neither tangent nor bisecant");
      } else {
        if (lc == 1)
          record(agg, G, cHypPP_NN_Tan, *S, *P, size, cl, size == 2 * q + 1,
                 "expected exactly 2q+1");
        else if (lc == 2)
          record(agg, G, cHypPP_NN_Bis, *S, *P, size, cl, size == 2 * q, "expected exactly 2q");
        else if (lc == 0)
          record(agg, G, cHypPP_NN_Skew, *S, *P, size, cl, size == 2 * (q + 1),
                 "expected exactly 2q+2");
        else
          note_violation(agg, G, cHypPP_NN_Tan, *S, *P, size, lc,
                         "non-tangent pair axis is a generator");
      }
    } else if (S->cls == SurfaceClass::Elliptic) {
      if (t1 && t2) {
        record(agg, G, cEllPP_TT, *S, *P, size, cl, lc == 0 && size == 2,
               "tangent pair must meet an elliptic quadric in exactly 2 points over a skew axis");
      } else if (t1 != t2) {
        if (lc == 1)
          record(agg, G, cEllPP_TN_Tan, *S, *P, size, cl, size == q + 1, "expected exactly q+1");
        else if (lc == 0)
          record(agg, G, cEllPP_TN_Skew, *S, *P, size, cl, size == q + 2, "expected exactly q+2");
        else
          note_violation(agg, G, cEllPP_TN_Tan, *S, *P, size, lc,
                         "mixed-pair axis neither tangent nor skew");
      } else {
        if (lc == 1)
          record(agg, G, cEllPP_NN_Tan, *S, *P, size, cl, size == 2 * q + 1,
                 "expected exactly 2q+1");
        else if (lc == 2)
          record(agg, G, cEllPP_NN_Bis, *S, *P, size, cl, size == 2 * q, "expected exactly 2q");
        else if (lc == 0)
          record(agg, G, cEllPP_NN_Skew, *S, *P, size, cl, size == 2 * (q + 1),
                 "expected exactly 2q+2");
        else
          note_violation(agg, G, cEllPP_NN_Tan, *S, *P, size, lc, "impossible axis class");
      }
    } else {  // cone
      const bool g1 = S->gpair_planes.test(P->H1);
      const bool g2 = S->gpair_planes.test(P->H2);
      const bool tt1 = S->tangent_planes.test(P->H1);
      const bool tt2 = S->tangent_planes.test(P->H2);
      const bool axis_through_vertex = G.lines()[P->axis].mask.test(S->vertex);
      if (g1 && g2) {
        if (lc == 1)
          record(agg, G, cConePP_GG_Point, *S, *P, size, cl,
                 axis_through_vertex && size == 4 * q + 1, "expected exactly 4q+1");
        else if (lc == q + 1)
          record(agg, G, cConePP_GG_Gen, *S, *P, size, cl, size == 3 * q + 1,
                 "expected exactly 3q+1");
        else
          note_violation(agg, G, cConePP_GG_Point, *S, *P, size, lc,
                         "generator-pair axis neither vertex tangent nor generator");
      } else if ((g1 && tt2) || (g2 && tt1)) {
        if (lc == 1 && axis_through_vertex)
          record(agg, G, cConePP_TG_Vertex, *S, *P, size, cl, size == 3 * q + 1,
                 "expected exactly 3q+1");
        else
          record(agg, G, cConePP_Rest, *S, *P, size, cl, size <= 3 * q, "exceeds 3q");
      } else {
        record(agg, G, cConePP_Rest, *S, *P, size, cl, size <= 3 * q, "exceeds 3q");
      }
    }
    return;
  }

  // same-class and mixed nondegenerate / cone combinations
  auto has = [&](SurfaceClass x, SurfaceClass y) {
    return (A.cls == x && B.cls == y) || (A.cls == y && B.cls == x);
  };
  if (A.cls == SurfaceClass::Elliptic && B.cls == SurfaceClass::Elliptic) {
    record(agg, G, cEllEll, A, B, size, cl, cl == 0 && size <= 2 * (q + 1),
           "elliptic pair exceeds 2q+2 or shares a line");
  } else if (has(SurfaceClass::Elliptic, SurfaceClass::Hyperbolic)) {
    record(agg, G, cEllHyp, A, B, size, cl, cl == 0 && size <= 2 * (q + 1), "exceeds 2q+2");
  } else if (has(SurfaceClass::Elliptic, SurfaceClass::Cone)) {
    record(agg, G, cEllCone, A, B, size, cl, cl == 0 && size <= 2 * (q + 1), "exceeds 2q+2");
  } else if (A.cls == SurfaceClass::Hyperbolic && B.cls == SurfaceClass::Hyperbolic) {
    if (cl <= 1) {
      record(agg, G, cHypHyp_c01, A, B, size, cl, size <= 2 * (q + 1), "exceeds 2q+2");
    } else if (cl == 2) {
      auto two = two_common_lines(A, B);
      bool skew = !intersects(G.lines()[two[0]].mask, G.lines()[two[1]].mask);
      if (skew)
        record(agg, G, cHypHyp_c2Same, A, B, size, cl, size == 2 * (q + 1),
               "two skew common lines must give exactly 2q+2");
      else
        record(agg, G, cHypHyp_c2Diff, A, B, size, cl, size <= 3 * q + 1, "exceeds 3q+1");
    } else if (cl == 3) {
      // intersection cycle with a doubled line: three distinct lines carry
      // the full intersection
      record(agg, G, cHypHyp_c3, A, B, size, cl, size == 3 * q + 1, "expected exactly 3q+1");
    } else if (cl == 4) {
      record(agg, G, cHypHyp_c4, A, B, size, cl, size == 4 * q, "expected exactly 4q");
    } else {
      note_violation(agg, G, cHypHyp_c4, A, B, size, cl,
                     "distinct hyperbolic pair with >4 common lines");
    }
  } else if (has(SurfaceClass::Cone, SurfaceClass::Hyperbolic)) {
    if (cl == 0)
      record(agg, G, cConeHyp_NoLine, A, B, size, cl, size <= 2 * (q + 1), "exceeds 2q+2");
    else
      record(agg, G, cConeHyp_Line, A, B, size, cl, cl <= 2 && size <= 3 * q,
             "exceeds 3q or more than 2 common generators");
  } else if (A.cls == SurfaceClass::Cone && B.cls == SurfaceClass::Cone) {
    if (cl == 0)
      record(agg, G, cConeCone_c0, A, B, size, cl, size <= 2 * (q + 1), "exceeds 2q+2");
    else if (cl == 1)
      record(agg, G, cConeCone_c1, A, B, size, cl, size <= 2 * q + 1, "exceeds 2q+1");
    else if (cl == 2)
      record(agg, G, cConeCone_c2, A, B, size, cl, size <= 3 * q, "exceeds 3q");
    else if (cl == 3)
      // tangent base conics: the fourth component of the intersection cycle
      // is a doubled line, so exactly three concurrent lines remain
      record(agg, G, cConeCone_c3, A, B, size, cl, size == 3 * q + 1, "expected exactly 3q+1");
    else if (cl == 4)
      record(agg, G, cConeCone_c4, A, B, size, cl, size == 4 * q + 1, "expected exactly 4q+1");
    else
      note_violation(agg, G, cConeCone_c4, A, B, size, cl, "cone pair with >4 common lines");
  }
}

void check_sections(Agg& agg, const Geometry& G, const FormInfo& I) {
  if (I.cls != SurfaceClass::Cone && I.cls != SurfaceClass::Hyperbolic &&
      I.cls != SurfaceClass::Elliptic)
    return;
  const int q = G.q();
  int c = I.cls == SurfaceClass::Cone ? cSectionCone : cSectionNondeg;
  for (const Plane& H : G.planes()) {
    int s = and_count(H.mask, I.zmask);
    record(agg, G, c, I, I, s, 0, s <= 2 * q + 1, "plane section exceeds 2q+1");
  }
}

void merge(Agg& into, Agg& from) {
  for (int c = 0; c < kCaseCount; ++c) {
    into.cases[c].pairs += from.cases[c].pairs;
    into.cases[c].attained_bits |= from.cases[c].attained_bits;
  }
  into.pairs += from.pairs;
  into.shared_plane_pairs += from.shared_plane_pairs;
  into.violation_count += from.violation_count;
  for (auto& v : from.violations)
    if (int(into.violations.size()) < kMaxViolationDetails) into.violations.push_back(std::move(v));
}

Form4 form_from_digits(const std::vector<Fel>& digits) {
  Form4 f{};
  for (int i = 0; i < 10; ++i) f[i] = digits[i];
  return f;
}

// all scalar-class representatives (first nonzero coefficient = 1)
std::vector<Form4> all_canonical_forms(int q) {
  std::vector<Form4> out;
  std::uint64_t total = 1;
  for (int i = 0; i < 10; ++i) total *= std::uint64_t(q);
  for (std::uint64_t rep = 1; rep < total; ++rep) {
    Form4 f{};
    std::uint64_t t = rep;
    for (int i = 9; i >= 0; --i) {
      f[i] = Fel(t % q);
      t /= q;
    }
    bool canonical = false;
    for (int i = 0; i < 10; ++i) {
      if (f[i] == 0) continue;
      canonical = f[i] == 1;
      break;
    }
    if (canonical) out.push_back(f);
  }
  return out;
}

// product of two planes given by dual vectors
Form4 plane_pair_form(const FieldSpec& F, const Point& d1, const Point& d2) {
  Form4 f{};
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Fel c = i == j ? F.mul(d1.c[i], d2.c[i])
                     : F.add(F.mul(d1.c[i], d2.c[j]), F.mul(d1.c[j], d2.c[i]));
      f[mon4_index(i, j)] = c;
    }
  return f;
}

std::vector<FormInfo> build_infos(const Geometry& G, const std::vector<Form4>& forms,
                                  int workers) {
  std::vector<FormInfo> infos(forms.size());
  run_workers(workers, [&](int w) {
    auto [lo, hi] = chunk(forms.size(), workers, w);
    for (std::uint64_t i = lo; i < hi; ++i) infos[i] = make_info(G, forms[i]);
  });
  return infos;
}

}  // namespace

std::vector<int> BoundCaseStat::attained() const {
  std::vector<int> v;
  for (int s = 0; s < 64; ++s)
    if (attained_bits & (std::uint64_t(1) << s)) v.push_back(s);
  return v;
}

std::string form_to_string(const FieldSpec& F, const Form4& f) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 10; ++i) {
    if (i) os << ",";
    os << int(f[i]);
  }
  os << "]";
  (void)F;
  return os.str();
}

IntersectionReport intersection_count(const Geometry& G, const Form4& f, const Form4& g) {
  if (is_zero_form(f) || is_zero_form(g)) throw std::invalid_argument("zero form");
  IntersectionReport r;
  r.f = f;
  r.g = g;
  Mask zf = zero_mask(G, f);
  Mask zg = zero_mask(G, g);
  r.size = and_count(zf, zg);
  const auto& lines = G.lines();
  for (int li = 0; li < int(lines.size()); ++li)
    if (subset(lines[li].mask, zf) && subset(lines[li].mask, zg)) r.common_lines.push_back(li);
  const auto& planes = G.planes();
  for (int hi = 0; hi < int(planes.size()); ++hi)
    if (subset(planes[hi].mask, zf) && subset(planes[hi].mask, zg)) r.shared_planes.push_back(hi);
  Classification cf = classify4(G, f, zf);
  Classification cg = classify4(G, g, zg);
  r.case_label = std::string(to_string(cf.cls)) + "/" + to_string(cg.cls);
  return r;
}

std::vector<int> common_lines(const Geometry& G, const Form4& f, const Form4& g) {
  IntersectionReport r = intersection_count(G, f, g);
  if (r.shared_planes.empty() && int(r.common_lines.size()) > 4)
    throw std::logic_error("degree-4 intersection contains more than 4 lines");
  return r.common_lines;
}

SpectrumCertificate spectrum(const Geometry& G, const FunctionalCode& code, bool exhaustive,
                             std::uint64_t samples, std::uint64_t seed, int workers, bool force) {
  const FieldSpec& F = G.field();
  const int q = F.q;
  SpectrumCertificate cert;
  cert.cls = code.cls;
  cert.q = q;
  cert.n = code.n;
  switch (code.cls) {
    case SurfaceClass::Cone:
      cert.top1 = 4 * q + 1;
      cert.top2 = 3 * q + 1;
      cert.rest_ceiling = 3 * q;
      break;
    case SurfaceClass::Hyperbolic:
      cert.top1 = 4 * q;
      cert.top2 = 3 * q + 1;
      cert.rest_ceiling = 3 * q;
      break;
    default:
      cert.top1 = 2 * (q + 1);
      cert.top2 = 2 * q + 1;
      cert.rest_ceiling = 2 * q;
      break;
  }

  std::vector<std::uint64_t> size_counts(code.n + 1, 0);
  std::vector<Form4> size_witness(code.n + 1);
  std::vector<bool> size_seen(code.n + 1, false);

  if (exhaustive) {
    if (!force && std::pow(double(q), 10.0) > 1e8)
      throw SizeGuardError("exhaustive spectrum guard: q^10 > 1e8 (use force to override)");
    cert.mode = "exhaustive";
    RowSpaceScan scan = scan_row_space(F, code.monomial_rows, code.n, workers);
    for (int w = 1; w <= code.n; ++w) {  // w = 0 is the kernel
      if (scan.counts[w] == 0) continue;
      int s = code.n - w;
      size_counts[s] = scan.counts[w];
      size_seen[s] = true;
      size_witness[s] = form_from_digits(scan.witnesses[w]);
    }
  } else {
    cert.mode = "sample";
    cert.samples = samples;
    cert.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(0, q - 1);
    const auto& pts = G.points();
    for (std::uint64_t i = 0; i < samples; ++i) {
      Form4 g{};
      for (int t = 0; t < 10; ++t) g[t] = Fel(coef(rng));
      if (is_zero_form(g)) continue;
      int w = 0;
      for (int c : code.columns)
        if (evaluate(F, g, pts[c]) != 0) ++w;
      if (w == 0) continue;  // vanishes identically on X
      int s = code.n - w;
      ++size_counts[s];
      if (!size_seen[s]) {
        size_seen[s] = true;
        size_witness[s] = g;
      }
    }
  }

  for (int s = 0; s <= code.n; ++s)
    if (size_seen[s]) {
      cert.attained.push_back(s);
      cert.witnesses.emplace_back(s, size_witness[s]);
    }
  int na = int(cert.attained.size());
  cert.max1 = na > 0 ? cert.attained[na - 1] : -1;
  cert.max2 = na > 1 ? cert.attained[na - 2] : -1;
  cert.max3 = na > 2 ? cert.attained[na - 3] : -1;
  cert.top1_attained = size_seen[cert.top1];
  cert.top2_attained = size_seen[cert.top2];
  cert.pattern_ok = true;
  for (int s : cert.attained) {
    if (s == cert.top1 || s == cert.top2 || s <= cert.rest_ceiling) continue;
    cert.pattern_ok = false;
    std::ostringstream os;
    os << "attained size " << s << " outside {" << cert.top1 << ", " << cert.top2 << ", <="
       << cert.rest_ceiling << "} witness=" << form_to_string(F, size_witness[s]);
    cert.violations.push_back(os.str());
  }
  if (exhaustive) {
    // the top two sizes realize the first and second weight; at q = 3 the
    // cone's 4q+1 equals n and is reachable only by kernel forms
    bool need_top1 = !(code.cls == SurfaceClass::Cone && q == 3);
    if (need_top1 && !cert.top1_attained)
      cert.violations.push_back("expected top intersection size not attained");
    if (!cert.top2_attained)
      cert.violations.push_back("expected second intersection size not attained");
  }
  return cert;
}

BoundSuiteReport bound_suite(const Geometry& G, int workers, std::uint64_t seed,
                             std::uint64_t random_samples) {
  const FieldSpec& F = G.field();
  const int q = F.q;
  if (q != 3 && q != 4 && q != 5)
    throw std::invalid_argument("bound suite supports q in {3,4,5}");
  workers = resolve_workers(workers);

  BoundSuiteReport rep;
  rep.q = q;
  rep.seed = seed;

  if (q == 3) {
    rep.mode = "exhaustive";
    std::vector<Form4> forms = all_canonical_forms(q);
    std::vector<FormInfo> infos = build_infos(G, forms, workers);

    std::vector<Agg> aggs(workers);
    run_workers(workers, [&](int w) {
      Agg& agg = aggs[w];
      auto [lo, hi] = chunk(infos.size(), workers, w);
      for (std::uint64_t i = lo; i < hi; ++i) {
        check_sections(agg, G, infos[i]);
        for (std::uint64_t j = i + 1; j < infos.size(); ++j) check_pair(agg, G, infos[i], infos[j]);
      }
    });
    Agg total;
    for (auto& a : aggs) merge(total, a);
    for (int c = 0; c < kCaseCount; ++c) rep.cases[case_name(c)] = total.cases[c];
    rep.violations = std::move(total.violations);
    rep.violation_count = total.violation_count;
    rep.pairs_checked = total.pairs;
    rep.shared_plane_pairs = total.shared_plane_pairs;
    return rep;
  }

  // structured families at q = 4, 5
  rep.mode = "structured";
  std::mt19937_64 rng(seed);
  std::vector<Form4> family;

  // every plane pair
  const auto& planes = G.planes();
  std::vector<std::size_t> pp_range;
  for (int h1 = 0; h1 < int(planes.size()); ++h1)
    for (int h2 = h1 + 1; h2 < int(planes.size()); ++h2) {
      family.push_back(plane_pair_form(F, planes[h1].dual, planes[h2].dual));
      pp_range.push_back(family.size() - 1);
    }

  // the three reference surfaces plus seeded coordinate changes of them
  std::vector<std::size_t> surf_range;
  std::uniform_int_distribution<int> coef(0, q - 1);
  auto random_invertible = [&] {
    std::array<std::array<Fel, 4>, 4> M;
    while (true) {
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) M[r][c] = Fel(coef(rng));
      // invertibility probe: a pulled-back hyperbolic form keeps its point count
      Form4 probe = pullback(F, canonical_form(F, SurfaceClass::Hyperbolic), M);
      if (is_zero_form(probe)) continue;
      Mask zm = zero_mask(G, probe);
      if (zm.count() == (q + 1) * (q + 1)) return M;
    }
  };
  for (SurfaceClass c :
       {SurfaceClass::Cone, SurfaceClass::Hyperbolic, SurfaceClass::Elliptic}) {
    family.push_back(canonical_form(F, c));
    surf_range.push_back(family.size() - 1);
    for (int t = 0; t < 3; ++t) {
      family.push_back(pullback(F, canonical_form(F, c), random_invertible()));
      surf_range.push_back(family.size() - 1);
    }
  }

  // every cone with vertex (0:0:0:1): nondegenerate ternary forms lifted
  std::vector<std::size_t> cone1_range;
  {
    std::uint64_t total = 1;
    for (int i = 0; i < 6; ++i) total *= std::uint64_t(q);
    for (std::uint64_t repn = 1; repn < total; ++repn) {
      Form3 g{};
      std::uint64_t t = repn;
      for (int i = 5; i >= 0; --i) {
        g[i] = Fel(t % q);
        t /= q;
      }
      bool canonical = false;
      for (int i = 0; i < 6; ++i) {
        if (g[i] == 0) continue;
        canonical = g[i] == 1;
        break;
      }
      if (!canonical) continue;
      if (classify3(G, g).cls != TernaryClass::Conic) continue;
      Form4 f{};
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) f[mon4_index(i, j)] = g[mon3_index(i, j)];
      family.push_back(f);
      cone1_range.push_back(family.size() - 1);
    }
  }

  // a seeded sample of cones with vertex (1:0:0:0)
  std::vector<std::size_t> cone2_range;
  {
    std::uint64_t kept = 0;
    while (kept < 300) {
      Form3 g{};
      for (int i = 0; i < 6; ++i) g[i] = Fel(coef(rng));
      bool zero = true;
      for (int i = 0; i < 6; ++i) zero = zero && g[i] == 0;
      if (zero) continue;
      if (classify3(G, g).cls != TernaryClass::Conic) continue;
      Form4 f{};
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) f[mon4_index(i + 1, j + 1)] = g[mon3_index(i, j)];
      family.push_back(f);
      cone2_range.push_back(family.size() - 1);
      ++kept;
    }
  }

  // seeded random forms
  std::vector<std::size_t> rand_range;
  for (std::uint64_t i = 0; i < random_samples; ++i) {
    Form4 f{};
    for (int t = 0; t < 10; ++t) f[t] = Fel(coef(rng));
    if (is_zero_form(f)) continue;
    family.push_back(normalize_form(F, f));
    rand_range.push_back(family.size() - 1);
  }

  std::vector<FormInfo> infos = build_infos(G, family, workers);

  // pair lists: indices into infos
  std::vector<std::pair<std::uint32_t, std::uint32_t>> jobs;
  for (auto s : surf_range)
    for (auto p : pp_range) jobs.emplace_back(std::uint32_t(s), std::uint32_t(p));
  for (std::size_t i = 0; i < cone1_range.size(); ++i)
    for (std::size_t j = i + 1; j < cone1_range.size(); ++j)
      jobs.emplace_back(std::uint32_t(cone1_range[i]), std::uint32_t(cone1_range[j]));
  for (auto i : cone1_range)
    for (auto j : cone2_range) jobs.emplace_back(std::uint32_t(i), std::uint32_t(j));
  for (auto s : surf_range)
    for (auto c : cone1_range) jobs.emplace_back(std::uint32_t(s), std::uint32_t(c));
  for (auto s : surf_range)
    for (auto r : rand_range) jobs.emplace_back(std::uint32_t(s), std::uint32_t(r));
  for (std::size_t i = 0; i < rand_range.size(); ++i)
    for (std::size_t j = i + 1; j < rand_range.size() && j < i + 40; ++j)
      jobs.emplace_back(std::uint32_t(rand_range[i]), std::uint32_t(rand_range[j]));

  std::vector<Agg> aggs(workers);
  run_workers(workers, [&](int w) {
    Agg& agg = aggs[w];
    auto [lo, hi] = chunk(jobs.size(), workers, w);
    for (std::uint64_t t = lo; t < hi; ++t) {
      const auto& [i, j] = jobs[t];
      if (infos[i].zmask == infos[j].zmask && infos[i].cls == infos[j].cls) continue;
      check_pair(agg, G, infos[i], infos[j]);
    }
    // plane sections of the reference surfaces and the vertex-1 cones
    auto [slo, shi] = chunk(surf_range.size(), workers, w);
    for (std::uint64_t t = slo; t < shi; ++t) check_sections(agg, G, infos[surf_range[t]]);
    auto [clo, chi] = chunk(cone1_range.size(), workers, w);
    for (std::uint64_t t = clo; t < chi; ++t) check_sections(agg, G, infos[cone1_range[t]]);
  });
  Agg total;
  for (auto& a : aggs) merge(total, a);
  for (int c = 0; c < kCaseCount; ++c) rep.cases[case_name(c)] = total.cases[c];
  rep.violations = std::move(total.violations);
  rep.violation_count = total.violation_count;
  rep.pairs_checked = total.pairs;
  rep.shared_plane_pairs = total.shared_plane_pairs;
  return rep;
}

bool find_cone_pair_with_four_lines(const Geometry& G, Form4& f_out, Form4& g_out) {
  // two cones with >= 2 common lines share their vertex, so same-vertex
  // pairs are exhaustive for the 4-line configuration; base conics sharing
  // exactly 4 points lift to the witness pair
  const FieldSpec& F = G.field();
  const int q = F.q;
  std::vector<Form3> conics;
  std::vector<std::vector<Point2>> conic_zeros;
  std::uint64_t total = 1;
  for (int i = 0; i < 6; ++i) total *= std::uint64_t(q);
  for (std::uint64_t repn = 1; repn < total; ++repn) {
    Form3 g{};
    std::uint64_t t = repn;
    for (int i = 5; i >= 0; --i) {
      g[i] = Fel(t % q);
      t /= q;
    }
    bool canonical = false;
    for (int i = 0; i < 6; ++i) {
      if (g[i] == 0) continue;
      canonical = g[i] == 1;
      break;
    }
    if (!canonical) continue;
    if (classify3(G, g).cls != TernaryClass::Conic) continue;
    std::vector<Point2> zs;
    for (const Point2& u : G.points2())
      if (evaluate3(F, g, u) == 0) zs.push_back(u);
    conics.push_back(g);
    conic_zeros.push_back(std::move(zs));
  }
  for (std::size_t i = 0; i < conics.size(); ++i)
    for (std::size_t j = i + 1; j < conics.size(); ++j) {
      int common = 0;
      for (const Point2& u : conic_zeros[i])
        if (std::find(conic_zeros[j].begin(), conic_zeros[j].end(), u) != conic_zeros[j].end())
          ++common;
      if (common == 4) {
        Form4 f{}, g{};
        for (int a = 0; a < 3; ++a)
          for (int b = a; b < 3; ++b) {
            f[mon4_index(a, b)] = conics[i][mon3_index(a, b)];
            g[mon4_index(a, b)] = conics[j][mon3_index(a, b)];
          }
        f_out = f;
        g_out = g;
        return true;
      }
    }
  return false;
}

}  // namespace qcl
