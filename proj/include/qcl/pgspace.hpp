// pgspace.hpp — points, lines and planes of PG(2,q) and PG(3,q).
//
// Every point is stored as its W-representative: the unique scaling with
// leading coordinate 1 after i leading zeros. The global point order —
// W0 block first (free coordinates ascending by rep), then W1, W2, W3 —
// is the column order of every generator matrix and part of the report
// contract.
#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qcl/gf.hpp"

namespace qcl {

struct Point {
  std::array<Fel, 4> c{0, 0, 0, 0};
  int w_index() const {
    for (int i = 0; i < 4; ++i)
      if (c[i] != 0) return i;
    return 4;
  }
  friend bool operator==(const Point&, const Point&) = default;
};

struct Point2 {
  std::array<Fel, 3> c{0, 0, 0};
  friend bool operator==(const Point2&, const Point2&) = default;
};

// W-representative of a projective class; throws on the zero tuple
Point normalize_point(const FieldSpec& F, std::array<Fel, 4> raw);
Point2 normalize_point2(const FieldSpec& F, std::array<Fel, 3> raw);

// fixed-size bitset over point (or line) indices
struct Mask {
  std::vector<std::uint64_t> w;
  int bits = 0;

  void resize_bits(int n) {
    bits = n;
    w.assign((n + 63) / 64, 0);
  }
  void set(int i) { w[std::size_t(i) >> 6] |= std::uint64_t(1) << (i & 63); }
  bool test(int i) const { return (w[std::size_t(i) >> 6] >> (i & 63)) & 1; }
  int count() const;
  bool any() const;
  friend int and_count(const Mask& a, const Mask& b);
  friend bool intersects(const Mask& a, const Mask& b);
  // every bit of a also set in b
  friend bool subset(const Mask& a, const Mask& b);
  friend bool operator==(const Mask&, const Mask&) = default;
};

struct Line {
  std::array<int, 2> basis{-1, -1};  // two smallest points, global order
  std::vector<int> pts;              // q+1 point indices, ascending
  Mask mask;
};

struct Plane {
  Point dual;                        // normalized dual coordinates
  std::array<int, 3> basis{-1, -1, -1};
  std::vector<int> pts;              // q^2+q+1 point indices, ascending
  Mask mask;
};

// Precomputed ambient geometry shared by every surface computation.
// Incidence structures (lines, planes, pencils) are built when
// with_incidence is true; point enumeration alone supports any q <= 81.
class Geometry {
 public:
  explicit Geometry(FieldSpec spec, bool with_incidence = true);

  const FieldSpec& field() const { return F_; }
  int q() const { return F_.q; }

  const std::vector<Point>& points() const { return pts_; }    // PG(3,q)
  const std::vector<Point2>& points2() const { return pts2_; }  // PG(2,q)
  int point_index(const Point& p) const;   // O(1), W-block arithmetic
  int point_index2(const Point2& p) const;

  bool has_incidence() const { return incidence_; }
  const std::vector<Line>& lines() const;
  const std::vector<Plane>& planes() const;
  // index of the line through two distinct points
  int line_through(int p1, int p2) const;
  const std::vector<int>& lines_through_point(int p) const;
  const std::vector<int>& planes_through_line(int l) const;

  // the q+1 point indices spanned by two distinct points (no incidence needed)
  std::vector<int> span_points(int p1, int p2) const;

  Fel dual_dot(const Point& dual, const Point& p) const;

  // rank over GF(q) of the coordinate matrix of the given points
  int coord_rank(const std::vector<int>& point_idx) const;

 private:
  void build_incidence();

  FieldSpec F_;
  bool incidence_ = false;
  std::vector<Point> pts_;
  std::vector<Point2> pts2_;
  std::vector<Line> lines_;
  std::vector<Plane> planes_;
  std::vector<std::vector<int>> lines_at_point_;
  std::vector<std::vector<int>> planes_at_line_;
  std::unordered_map<std::uint64_t, int> line_by_basis_;
};

}  // namespace qcl
