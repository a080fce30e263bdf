#include "qcl/pgspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qcl {

int Mask::count() const {
  int n = 0;
  for (auto x : w) n += std::popcount(x);
  return n;
}

bool Mask::any() const {
  for (auto x : w)
    if (x) return true;
  return false;
}

int and_count(const Mask& a, const Mask& b) {
  int n = 0;
  for (std::size_t i = 0; i < a.w.size(); ++i) n += std::popcount(a.w[i] & b.w[i]);
  return n;
}

bool intersects(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.w.size(); ++i)
    if (a.w[i] & b.w[i]) return true;
  return false;
}

bool subset(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.w.size(); ++i)
    if (a.w[i] & ~b.w[i]) return false;
  return true;
}

Point normalize_point(const FieldSpec& F, std::array<Fel, 4> raw) {
  int lead = -1;
  for (int i = 0; i < 4 && lead < 0; ++i)
    if (raw[i] != 0) lead = i;
  if (lead < 0) throw std::invalid_argument("cannot normalize the zero tuple");
  Fel s = F.inv(raw[lead]);
  Point p;
  for (int i = 0; i < 4; ++i) p.c[i] = F.mul(raw[i], s);
  return p;
}

Point2 normalize_point2(const FieldSpec& F, std::array<Fel, 3> raw) {
  int lead = -1;
  for (int i = 0; i < 3 && lead < 0; ++i)
    if (raw[i] != 0) lead = i;
  if (lead < 0) throw std::invalid_argument("cannot normalize the zero tuple");
  Fel s = F.inv(raw[lead]);
  Point2 p;
  for (int i = 0; i < 3; ++i) p.c[i] = F.mul(raw[i], s);
  return p;
}

Geometry::Geometry(FieldSpec spec, bool with_incidence) : F_(std::move(spec)) {
  const int q = F_.q;
  pts_.reserve(std::size_t(q) * q * q + q * q + q + 1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) pts_.push_back(Point{{1, Fel(a), Fel(b), Fel(c)}});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) pts_.push_back(Point{{0, 1, Fel(a), Fel(b)}});
  for (int a = 0; a < q; ++a) pts_.push_back(Point{{0, 0, 1, Fel(a)}});
  pts_.push_back(Point{{0, 0, 0, 1}});

  pts2_.reserve(std::size_t(q) * q + q + 1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) pts2_.push_back(Point2{{1, Fel(a), Fel(b)}});
  for (int a = 0; a < q; ++a) pts2_.push_back(Point2{{0, 1, Fel(a)}});
  pts2_.push_back(Point2{{0, 0, 1}});

  if (with_incidence) build_incidence();
}

int Geometry::point_index(const Point& p) const {
  const int q = F_.q;
  switch (p.w_index()) {
    case 0:
      return (int(p.c[1]) * q + p.c[2]) * q + p.c[3];
    case 1:
      return q * q * q + int(p.c[2]) * q + p.c[3];
    case 2:
      return q * q * q + q * q + p.c[3];
    case 3:
      return q * q * q + q * q + q;
    default:
      throw std::invalid_argument("not a normalized point");
  }
}

int Geometry::point_index2(const Point2& p) const {
  const int q = F_.q;
  if (p.c[0] == 1) return int(p.c[1]) * q + p.c[2];
  if (p.c[1] == 1) return q * q + p.c[2];
  return q * q + q;
}

std::vector<int> Geometry::span_points(int p1, int p2) const {
  if (p1 == p2) throw std::invalid_argument("line requires two distinct points");
  const Point& a = pts_[p1];
  const Point& b = pts_[p2];
  std::vector<int> out;
  out.reserve(F_.q + 1);
  out.push_back(point_index(b));  // (alpha:beta) = (0:1)
  for (int t = 0; t < F_.q; ++t) {
    std::array<Fel, 4> raw;
    for (int i = 0; i < 4; ++i) raw[i] = F_.add(a.c[i], F_.mul(Fel(t), b.c[i]));
    out.push_back(point_index(normalize_point(F_, raw)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Geometry::build_incidence() {
  incidence_ = true;
  const int q = F_.q;
  const int n = int(pts_.size());

  // every line exactly once: keep the span of (i, j) iff i, j are its two
  // smallest points
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> sp = span_points(i, j);
      if (sp[0] != i || sp[1] != j) continue;
      Line l;
      l.basis = {i, j};
      l.pts = std::move(sp);
      l.mask.resize_bits(n);
      for (int t : l.pts) l.mask.set(t);
      line_by_basis_.emplace(std::uint64_t(i) * n + j, int(lines_.size()));
      lines_.push_back(std::move(l));
    }
  }

  lines_at_point_.assign(n, {});
  for (int li = 0; li < int(lines_.size()); ++li)
    for (int t : lines_[li].pts) lines_at_point_[t].push_back(li);

  // planes in dual W-order
  planes_.reserve(n);
  for (const Point& d : pts_) {
    Plane H;
    H.dual = d;
    H.mask.resize_bits(n);
    for (int t = 0; t < n; ++t)
      if (dual_dot(d, pts_[t]) == 0) {
        H.pts.push_back(t);
        H.mask.set(t);
      }
    H.basis = {H.pts[0], H.pts[1], -1};
    // third basis point off the line of the first two
    Mask span_mask;
    span_mask.resize_bits(n);
    for (int t : span_points(H.pts[0], H.pts[1])) span_mask.set(t);
    for (int t : H.pts)
      if (!span_mask.test(t)) {
        H.basis[2] = t;
        break;
      }
    planes_.push_back(std::move(H));
  }

  // the q+1 planes through each line, by double orthogonality to the basis
  planes_at_line_.assign(lines_.size(), {});
  for (int li = 0; li < int(lines_.size()); ++li) {
    const Line& l = lines_[li];
    for (int hi = 0; hi < int(planes_.size()); ++hi) {
      const Point& d = planes_[hi].dual;
      if (dual_dot(d, pts_[l.basis[0]]) == 0 && dual_dot(d, pts_[l.basis[1]]) == 0)
        planes_at_line_[li].push_back(hi);
    }
    if (int(planes_at_line_[li].size()) != q + 1)
      throw std::logic_error("line lies in the wrong number of planes");
  }
}

const std::vector<Line>& Geometry::lines() const {
  if (!incidence_) throw std::logic_error("geometry built without incidence structures");
  return lines_;
}

const std::vector<Plane>& Geometry::planes() const {
  if (!incidence_) throw std::logic_error("geometry built without incidence structures");
  return planes_;
}

int Geometry::line_through(int p1, int p2) const {
  std::vector<int> sp = span_points(p1, p2);
  auto it = line_by_basis_.find(std::uint64_t(sp[0]) * pts_.size() + sp[1]);
  if (it == line_by_basis_.end()) throw std::logic_error("line lookup failed");
  return it->second;
}

const std::vector<int>& Geometry::lines_through_point(int p) const {
  if (!incidence_) throw std::logic_error("geometry built without incidence structures");
  return lines_at_point_[p];
}

const std::vector<int>& Geometry::planes_through_line(int l) const {
  if (!incidence_) throw std::logic_error("geometry built without incidence structures");
  return planes_at_line_[l];
}

Fel Geometry::dual_dot(const Point& dual, const Point& p) const {
  Fel s = 0;
  for (int i = 0; i < 4; ++i) s = F_.add(s, F_.mul(dual.c[i], p.c[i]));
  return s;
}

int Geometry::coord_rank(const std::vector<int>& point_idx) const {
  std::vector<std::array<Fel, 4>> rows;
  rows.reserve(point_idx.size());
  for (int t : point_idx) rows.push_back(pts_[t].c);
  int rank = 0;
  for (int col = 0; col < 4 && rank < int(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < int(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Fel s = F_.inv(rows[rank][col]);
    for (int c = 0; c < 4; ++c) rows[rank][c] = F_.mul(rows[rank][c], s);
    for (int r = 0; r < int(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Fel f = rows[r][col];
      for (int c = 0; c < 4; ++c) rows[r][c] = F_.sub(rows[r][c], F_.mul(f, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace qcl
