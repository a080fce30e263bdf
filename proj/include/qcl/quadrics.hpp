// quadrics.hpp — degree-2 forms, their zero sets, and the orbit
// classification of quadrics in PG(3,q) and PG(2,q).
//
// The orbit label is inferred from point counts plus collinearity,
// coplanarity and singular-locus tests; the rank of the form is never
// computed, which keeps the classification uniform across characteristic 2.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "qcl/pgspace.hpp"

namespace qcl {

// quaternary form: 10 coefficients in the fixed monomial order
// x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2
using Form4 = std::array<Fel, 10>;
// ternary form: u0^2, u0u1, u0u2, u1^2, u1u2, u2^2
using Form3 = std::array<Fel, 6>;

constexpr int mon4_index(int i, int j) {  // i <= j
  constexpr int off[4] = {0, 4, 7, 9};
  return off[i] + (j - i);
}
constexpr int mon3_index(int i, int j) {
  constexpr int off[3] = {0, 3, 5};
  return off[i] + (j - i);
}

enum class SurfaceClass { RepeatedPlane, PlanePair, SingleLine, Cone, Hyperbolic, Elliptic };
enum class TernaryClass { WholePlane, RepeatedLine, LinePair, SinglePoint, Conic };
enum class LineClass {
  Generator,
  SimpleTangent,
  ExternalVertexTangent,
  InternalVertexTangent,
  NuclearLine,
  ThroughVertexOther,
  Bisecant,
  Skew
};
enum class PlaneClass { Tangent, NonTangent, ConeTangent, ConeGeneratorPair, ConeVertexOnly, ConeConic };

const char* to_string(SurfaceClass c);
const char* to_string(TernaryClass c);
const char* to_string(LineClass c);
const char* to_string(PlaneClass c);

// point count of each orbit at the given q
int orbit_point_count(SurfaceClass c, int q);
int orbit_point_count(TernaryClass c, int q);

bool is_zero_form(const Form4& f);
Fel evaluate(const FieldSpec& F, const Form4& f, const Point& x);
Fel evaluate3(const FieldSpec& F, const Form3& g, const Point2& u);

Form4 scale_form(const FieldSpec& F, const Form4& f, Fel s);
// scalar-class representative: first nonzero coefficient scaled to 1
Form4 normalize_form(const FieldSpec& F, const Form4& f);
// f(Mx) for a coordinate change M (columns are images of the basis vectors)
Form4 pullback(const FieldSpec& F, const Form4& f, const std::array<std::array<Fel, 4>, 4>& M);

Mask zero_mask(const Geometry& G, const Form4& f);
std::vector<int> zero_set(const Geometry& G, const Form4& f);  // global point order

// every line through a singular point meets Z(f) in 1 or q+1 points;
// decided by exhaustive scan of the pencil through each zero point
std::vector<int> singular_points(const Geometry& G, const Form4& f);

struct Classification {
  SurfaceClass cls;
  int points = 0;
};
Classification classify4(const Geometry& G, const Form4& f);
Classification classify4(const Geometry& G, const Form4& f, const Mask& zmask);

struct Classification3 {
  TernaryClass cls;
  int points = 0;
};
Classification3 classify3(const Geometry& G, const Form3& g);

// the ternary form u -> f(u0 e0 + u1 e1 + u2 e2) on the plane's basis
Form3 restrict_form(const Geometry& G, const Form4& f, const Plane& H);

// plane type via restriction and Table-II classification of the section
PlaneClass plane_class(const Geometry& G, const Plane& H, const Form4& f);

LineClass line_class(const Geometry& G, int line_idx, const Form4& f);

// generator partition of a hyperbolic quadric; [0] holds the smallest line
std::array<std::vector<int>, 2> reguli(const Geometry& G, const Form4& f);

// fixed representative forms, verified against the orbit point counts
Form4 canonical_form(const FieldSpec& F, SurfaceClass c);
// smallest c with u^2 + u + c irreducible over GF(q)
Fel smallest_irreducible_c(const FieldSpec& F);

// Batched analysis of one surface against the whole incidence structure;
// plane and line types are derived from section point counts and checked
// against the restriction route in the test suite.
struct Surface {
  Form4 f;
  SurfaceClass cls;
  Mask zmask;                        // over points
  std::vector<int> zpts;
  Mask line_mask;                    // lines fully contained in Z(f)
  Mask plane_mask;                   // planes fully contained in Z(f)
  std::vector<int> contained_lines;
  int vertex = -1;                   // cone apex
  std::array<std::vector<int>, 2> regs;  // hyperbolic reguli
  std::vector<PlaneClass> plane_classes;  // per plane; only for Cone/Hyp/Ell
  std::vector<LineClass> line_classes;    // per line; only for Cone/Hyp/Ell
};
Surface analyze_surface(const Geometry& G, const Form4& f);
// cheap variant: class, masks and contained lines/planes only
Surface analyze_surface_basic(const Geometry& G, const Form4& f);

}  // namespace qcl
