#include "qcl/quadrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcl {
namespace {

Fel evaluate_raw4(const FieldSpec& F, const Form4& f, const std::array<Fel, 4>& x) {
  Fel s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Fel c = f[mon4_index(i, j)];
      if (c == 0) continue;
      s = F.add(s, F.mul(c, F.mul(x[i], x[j])));
    }
  return s;
}

Fel evaluate_raw3(const FieldSpec& F, const Form3& g, const std::array<Fel, 3>& u) {
  Fel s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Fel c = g[mon3_index(i, j)];
      if (c == 0) continue;
      s = F.add(s, F.mul(c, F.mul(u[i], u[j])));
    }
  return s;
}

std::array<Fel, 4> raw_sum(const FieldSpec& F, const std::array<Fel, 4>& a,
                           const std::array<Fel, 4>& b) {
  std::array<Fel, 4> s;
  for (int i = 0; i < 4; ++i) s[i] = F.add(a[i], b[i]);
  return s;
}

}  // namespace

const char* to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::RepeatedPlane: return "repeated_plane";
    case SurfaceClass::PlanePair: return "plane_pair";
    case SurfaceClass::SingleLine: return "line";
    case SurfaceClass::Cone: return "cone";
    case SurfaceClass::Hyperbolic: return "hyperbolic";
    case SurfaceClass::Elliptic: return "elliptic";
  }
  return "?";
}

const char* to_string(TernaryClass c) {
  switch (c) {
    case TernaryClass::WholePlane: return "whole_plane";
    case TernaryClass::RepeatedLine: return "repeated_line";
    case TernaryClass::LinePair: return "line_pair";
    case TernaryClass::SinglePoint: return "single_point";
    case TernaryClass::Conic: return "conic";
  }
  return "?";
}

const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::Generator: return "generator";
    case LineClass::SimpleTangent: return "simple_tangent";
    case LineClass::ExternalVertexTangent: return "external_vertex_tangent";
    case LineClass::InternalVertexTangent: return "internal_vertex_tangent";
    case LineClass::NuclearLine: return "nuclear_line";
    case LineClass::ThroughVertexOther: return "through_vertex_other";
    case LineClass::Bisecant: return "bisecant";
    case LineClass::Skew: return "skew";
  }
  return "?";
}

const char* to_string(PlaneClass c) {
  switch (c) {
    case PlaneClass::Tangent: return "tangent";
    case PlaneClass::NonTangent: return "non_tangent";
    case PlaneClass::ConeTangent: return "cone_tangent";
    case PlaneClass::ConeGeneratorPair: return "cone_generator_pair";
    case PlaneClass::ConeVertexOnly: return "cone_vertex_only";
    case PlaneClass::ConeConic: return "cone_conic_section";
  }
  return "?";
}

int orbit_point_count(SurfaceClass c, int q) {
  switch (c) {
    case SurfaceClass::RepeatedPlane: return q * q + q + 1;
    case SurfaceClass::PlanePair: return 2 * q * q + q + 1;
    case SurfaceClass::SingleLine: return q + 1;
    case SurfaceClass::Cone: return q * q + q + 1;
    case SurfaceClass::Hyperbolic: return (q + 1) * (q + 1);
    case SurfaceClass::Elliptic: return q * q + 1;
  }
  return -1;
}

int orbit_point_count(TernaryClass c, int q) {
  switch (c) {
    case TernaryClass::WholePlane: return q * q + q + 1;
    case TernaryClass::RepeatedLine: return q + 1;
    case TernaryClass::LinePair: return 2 * q + 1;
    case TernaryClass::SinglePoint: return 1;
    case TernaryClass::Conic: return q + 1;
  }
  return -1;
}

bool is_zero_form(const Form4& f) {
  for (Fel c : f)
    if (c != 0) return false;
  return true;
}

Fel evaluate(const FieldSpec& F, const Form4& f, const Point& x) {
  return evaluate_raw4(F, f, x.c);
}

Fel evaluate3(const FieldSpec& F, const Form3& g, const Point2& u) {
  return evaluate_raw3(F, g, u.c);
}

Form4 scale_form(const FieldSpec& F, const Form4& f, Fel s) {
  Form4 r;
  for (int i = 0; i < 10; ++i) r[i] = F.mul(f[i], s);
  return r;
}

Form4 normalize_form(const FieldSpec& F, const Form4& f) {
  for (int i = 0; i < 10; ++i)
    if (f[i] != 0) return scale_form(F, f, F.inv(f[i]));
  return f;
}

Form4 pullback(const FieldSpec& F, const Form4& f, const std::array<std::array<Fel, 4>, 4>& M) {
  std::array<std::array<Fel, 4>, 4> col;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i) col[k][i] = M[i][k];
  std::array<Fel, 4> fcol;
  for (int k = 0; k < 4; ++k) fcol[k] = evaluate_raw4(F, f, col[k]);
  Form4 h{};
  for (int k = 0; k < 4; ++k) h[mon4_index(k, k)] = fcol[k];
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l) {
      Fel b = F.sub(F.sub(evaluate_raw4(F, f, raw_sum(F, col[k], col[l])), fcol[k]), fcol[l]);
      h[mon4_index(k, l)] = b;
    }
  return h;
}

Mask zero_mask(const Geometry& G, const Form4& f) {
  if (is_zero_form(f)) throw std::invalid_argument("zero form has no quadric");
  const auto& pts = G.points();
  Mask m;
  m.resize_bits(int(pts.size()));
  for (int i = 0; i < int(pts.size()); ++i)
    if (evaluate(G.field(), f, pts[i]) == 0) m.set(i);
  return m;
}

std::vector<int> zero_set(const Geometry& G, const Form4& f) {
  if (is_zero_form(f)) throw std::invalid_argument("zero form has no quadric");
  std::vector<int> out;
  const auto& pts = G.points();
  for (int i = 0; i < int(pts.size()); ++i)
    if (evaluate(G.field(), f, pts[i]) == 0) out.push_back(i);
  return out;
}

std::vector<int> singular_points(const Geometry& G, const Form4& f) {
  Mask zm = zero_mask(G, f);
  const int q = G.q();
  std::vector<int> out;
  for (int p = 0; p < zm.bits; ++p) {
    if (!zm.test(p)) continue;
    bool singular = true;
    for (int li : G.lines_through_point(p)) {
      int cnt = and_count(G.lines()[li].mask, zm);
      if (cnt != 1 && cnt != q + 1) {
        singular = false;
        break;
      }
    }
    if (singular) out.push_back(p);
  }
  return out;
}

Classification classify4(const Geometry& G, const Form4& f) {
  return classify4(G, f, zero_mask(G, f));
}

Classification classify4(const Geometry& G, const Form4& f, const Mask& zmask) {
  if (is_zero_form(f)) throw std::invalid_argument("zero form has no quadric");
  const int q = G.q();
  const int N = zmask.count();
  auto rank_of_zeros = [&] {
    std::vector<int> zp;
    for (int i = 0; i < zmask.bits; ++i)
      if (zmask.test(i)) zp.push_back(i);
    return G.coord_rank(zp);
  };
  if (N == 2 * q * q + q + 1) return {SurfaceClass::PlanePair, N};
  if (N == (q + 1) * (q + 1)) return {SurfaceClass::Hyperbolic, N};
  if (N == q * q + 1) return {SurfaceClass::Elliptic, N};
  if (N == q + 1) {
    if (rank_of_zeros() != 2) throw std::logic_error("q+1 zeros but not collinear");
    return {SurfaceClass::SingleLine, N};
  }
  if (N == q * q + q + 1)
    return {rank_of_zeros() == 3 ? SurfaceClass::RepeatedPlane : SurfaceClass::Cone, N};
  throw std::logic_error("zero count matches no quadric orbit");
}

Classification3 classify3(const Geometry& G, const Form3& g) {
  const int q = G.q();
  const auto& pts2 = G.points2();
  int N = 0;
  std::vector<Point2> zeros;
  for (const Point2& u : pts2)
    if (evaluate3(G.field(), g, u) == 0) {
      ++N;
      zeros.push_back(u);
    }
  if (N == q * q + q + 1) return {TernaryClass::WholePlane, N};
  if (N == 1) return {TernaryClass::SinglePoint, N};
  if (N == 2 * q + 1) return {TernaryClass::LinePair, N};
  if (N == q + 1) {
    // collinear iff every zero is orthogonal to the dual of the first two:
    // use a 3x3 rank computation on the zero coordinates
    std::vector<std::array<Fel, 3>> rows;
    for (const Point2& z : zeros) rows.push_back(z.c);
    const FieldSpec& F = G.field();
    int rank = 0;
    for (int col = 0; col < 3 && rank < int(rows.size()); ++col) {
      int pivot = -1;
      for (int r = rank; r < int(rows.size()); ++r)
        if (rows[r][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(rows[rank], rows[pivot]);
      Fel s = F.inv(rows[rank][col]);
      for (int c = 0; c < 3; ++c) rows[rank][c] = F.mul(rows[rank][c], s);
      for (int r = 0; r < int(rows.size()); ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        Fel fc = rows[r][col];
        for (int c = 0; c < 3; ++c) rows[r][c] = F.sub(rows[r][c], F.mul(fc, rows[rank][c]));
      }
      ++rank;
    }
    return {rank == 2 ? TernaryClass::RepeatedLine : TernaryClass::Conic, N};
  }
  throw std::logic_error("zero count matches no ternary orbit");
}

Form3 restrict_form(const Geometry& G, const Form4& f, const Plane& H) {
  const FieldSpec& F = G.field();
  const auto& pts = G.points();
  std::array<std::array<Fel, 4>, 3> e;
  for (int i = 0; i < 3; ++i) e[i] = pts[H.basis[i]].c;
  if (G.coord_rank({H.basis[0], H.basis[1], H.basis[2]}) != 3)
    throw std::invalid_argument("degenerate plane basis");
  std::array<Fel, 3> fe;
  for (int i = 0; i < 3; ++i) fe[i] = evaluate_raw4(F, f, e[i]);
  Form3 g{};
  for (int i = 0; i < 3; ++i) g[mon3_index(i, i)] = fe[i];
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      g[mon3_index(i, j)] =
          F.sub(F.sub(evaluate_raw4(F, f, raw_sum(F, e[i], e[j])), fe[i]), fe[j]);
  return g;
}

PlaneClass plane_class(const Geometry& G, const Plane& H, const Form4& f) {
  SurfaceClass cls = classify4(G, f).cls;
  TernaryClass sec = classify3(G, restrict_form(G, f, H)).cls;
  switch (cls) {
    case SurfaceClass::Hyperbolic:
      if (sec == TernaryClass::LinePair) return PlaneClass::Tangent;
      if (sec == TernaryClass::Conic) return PlaneClass::NonTangent;
      break;
    case SurfaceClass::Elliptic:
      if (sec == TernaryClass::SinglePoint) return PlaneClass::Tangent;
      if (sec == TernaryClass::Conic) return PlaneClass::NonTangent;
      break;
    case SurfaceClass::Cone:
      if (sec == TernaryClass::RepeatedLine) return PlaneClass::ConeTangent;
      if (sec == TernaryClass::LinePair) return PlaneClass::ConeGeneratorPair;
      if (sec == TernaryClass::SinglePoint) return PlaneClass::ConeVertexOnly;
      if (sec == TernaryClass::Conic) return PlaneClass::ConeConic;
      break;
    default:
      throw std::invalid_argument("plane types are defined for cones and non-degenerate quadrics");
  }
  throw std::logic_error("impossible plane section");
}

LineClass line_class(const Geometry& G, int line_idx, const Form4& f) {
  Surface s = analyze_surface(G, f);
  if (s.line_classes.empty())
    throw std::invalid_argument("line types are defined for cones and non-degenerate quadrics");
  return s.line_classes[line_idx];
}

std::array<std::vector<int>, 2> reguli(const Geometry& G, const Form4& f) {
  Surface s = analyze_surface_basic(G, f);
  if (s.cls != SurfaceClass::Hyperbolic)
    throw std::invalid_argument("reguli are defined for hyperbolic quadrics only");
  const int q = G.q();
  const auto& gens = s.contained_lines;
  if (int(gens.size()) != 2 * (q + 1)) throw std::logic_error("wrong generator count");
  const auto& lines = G.lines();
  std::array<std::vector<int>, 2> R;
  R[0].push_back(gens[0]);
  for (std::size_t i = 1; i < gens.size(); ++i) {
    bool meets_first = intersects(lines[gens[0]].mask, lines[gens[i]].mask);
    R[meets_first ? 1 : 0].push_back(gens[i]);
  }
  if (int(R[0].size()) != q + 1 || int(R[1].size()) != q + 1)
    throw std::logic_error("generator intersection graph is not balanced");
  for (int side = 0; side < 2; ++side)
    for (std::size_t i = 0; i < R[side].size(); ++i)
      for (std::size_t j = i + 1; j < R[side].size(); ++j)
        if (intersects(lines[R[side][i]].mask, lines[R[side][j]].mask))
          throw std::logic_error("regulus contains meeting generators");
  for (int a : R[0])
    for (int b : R[1])
      if (!intersects(lines[a].mask, lines[b].mask))
        throw std::logic_error("complementary generators fail to meet");
  return R;
}

Fel smallest_irreducible_c(const FieldSpec& F) {
  for (int c = 1; c < F.q; ++c) {
    bool has_root = false;
    for (int u = 0; u < F.q && !has_root; ++u)
      if (F.add(F.add(F.mul(Fel(u), Fel(u)), Fel(u)), Fel(c)) == 0) has_root = true;
    if (!has_root) return Fel(c);
  }
  throw std::logic_error("no irreducible quadratic u^2+u+c");  // impossible over a finite field
}

Form4 canonical_form(const FieldSpec& F, SurfaceClass c) {
  Form4 f{};
  switch (c) {
    case SurfaceClass::RepeatedPlane:
      f[mon4_index(0, 0)] = 1;
      return f;
    case SurfaceClass::PlanePair:
      f[mon4_index(0, 1)] = 1;
      return f;
    case SurfaceClass::SingleLine:
      f[mon4_index(0, 0)] = 1;
      f[mon4_index(0, 1)] = 1;
      f[mon4_index(1, 1)] = smallest_irreducible_c(F);
      return f;
    case SurfaceClass::Cone:
      f[mon4_index(0, 1)] = 1;
      f[mon4_index(2, 2)] = 1;
      return f;
    case SurfaceClass::Hyperbolic:
      f[mon4_index(0, 1)] = 1;
      f[mon4_index(2, 3)] = 1;
      return f;
    case SurfaceClass::Elliptic:
      f[mon4_index(2, 3)] = 1;
      f[mon4_index(0, 0)] = 1;
      f[mon4_index(0, 1)] = 1;
      f[mon4_index(1, 1)] = smallest_irreducible_c(F);
      return f;
  }
  throw std::invalid_argument("unknown surface class");
}

Surface analyze_surface_basic(const Geometry& G, const Form4& f) {
  Surface s;
  s.f = f;
  s.zmask = zero_mask(G, f);
  for (int i = 0; i < s.zmask.bits; ++i)
    if (s.zmask.test(i)) s.zpts.push_back(i);
  s.cls = classify4(G, f, s.zmask).cls;
  const auto& lines = G.lines();
  s.line_mask.resize_bits(int(lines.size()));
  for (int li = 0; li < int(lines.size()); ++li)
    if (subset(lines[li].mask, s.zmask)) {
      s.line_mask.set(li);
      s.contained_lines.push_back(li);
    }
  const auto& planes = G.planes();
  s.plane_mask.resize_bits(int(planes.size()));
  for (int hi = 0; hi < int(planes.size()); ++hi)
    if (subset(planes[hi].mask, s.zmask)) s.plane_mask.set(hi);
  return s;
}

Surface analyze_surface(const Geometry& G, const Form4& f) {
  Surface s = analyze_surface_basic(G, f);
  const int q = G.q();
  const auto& lines = G.lines();
  const auto& planes = G.planes();

  if (s.cls == SurfaceClass::Cone) {
    // the vertex is the common point of any two generators
    if (s.contained_lines.size() < 2) throw std::logic_error("cone with fewer than 2 generators");
    const Mask& m1 = lines[s.contained_lines[1]].mask;
    for (int p : lines[s.contained_lines[0]].pts)
      if (m1.test(p)) {
        s.vertex = p;
        break;
      }
  }
  if (s.cls == SurfaceClass::Hyperbolic) s.regs = reguli(G, f);

  if (s.cls != SurfaceClass::Cone && s.cls != SurfaceClass::Hyperbolic &&
      s.cls != SurfaceClass::Elliptic)
    return s;

  s.plane_classes.resize(planes.size());
  for (int hi = 0; hi < int(planes.size()); ++hi) {
    int cnt = and_count(planes[hi].mask, s.zmask);
    switch (s.cls) {
      case SurfaceClass::Hyperbolic:
        if (cnt == 2 * q + 1)
          s.plane_classes[hi] = PlaneClass::Tangent;
        else if (cnt == q + 1)
          s.plane_classes[hi] = PlaneClass::NonTangent;
        else
          throw std::logic_error("impossible hyperbolic plane section size");
        break;
      case SurfaceClass::Elliptic:
        if (cnt == 1)
          s.plane_classes[hi] = PlaneClass::Tangent;
        else if (cnt == q + 1)
          s.plane_classes[hi] = PlaneClass::NonTangent;
        else
          throw std::logic_error("impossible elliptic plane section size");
        break;
      default:  // cone
        if (cnt == 2 * q + 1)
          s.plane_classes[hi] = PlaneClass::ConeGeneratorPair;
        else if (cnt == 1)
          s.plane_classes[hi] = PlaneClass::ConeVertexOnly;
        else if (cnt == q + 1)
          s.plane_classes[hi] =
              planes[hi].mask.test(s.vertex) ? PlaneClass::ConeTangent : PlaneClass::ConeConic;
        else
          throw std::logic_error("impossible cone plane section size");
        break;
    }
  }

  s.line_classes.resize(lines.size());
  for (int li = 0; li < int(lines.size()); ++li) {
    int cnt = and_count(lines[li].mask, s.zmask);
    if (cnt == q + 1) {
      s.line_classes[li] = LineClass::Generator;
    } else if (cnt == 2) {
      s.line_classes[li] = LineClass::Bisecant;
    } else if (cnt == 0) {
      s.line_classes[li] = LineClass::Skew;
    } else if (cnt == 1) {
      if (s.cls != SurfaceClass::Cone || !lines[li].mask.test(s.vertex)) {
        s.line_classes[li] = LineClass::SimpleTangent;
      } else {
        int t = 0;
        for (int hi : G.planes_through_line(li))
          if (s.plane_classes[hi] == PlaneClass::ConeTangent) ++t;
        if (q % 2 == 1)
          s.line_classes[li] =
              t >= 1 ? LineClass::ExternalVertexTangent : LineClass::InternalVertexTangent;
        else
          s.line_classes[li] = t == q + 1 ? LineClass::NuclearLine : LineClass::ThroughVertexOther;
      }
    } else {
      throw std::logic_error("impossible line section size");
    }
  }
  return s;
}

}  // namespace qcl
