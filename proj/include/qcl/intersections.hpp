// intersections.hpp — exact intersection counting for quadric pairs and
// exhaustive certification of the pairwise intersection bounds.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcl/funcodes.hpp"
#include "qcl/quadrics.hpp"

namespace qcl {

struct IntersectionReport {
  Form4 f{}, g{};
  int size = 0;
  std::vector<int> common_lines;   // line indices fully contained in both zero sets
  std::vector<int> shared_planes;  // plane indices contained in both zero sets
  std::string case_label;          // classes of the pair, plus axis type for plane pairs
};

IntersectionReport intersection_count(const Geometry& G, const Form4& f, const Form4& g);

// lines contained in both zero sets; when no plane is shared the count is
// checked against the degree-4 ceiling
std::vector<int> common_lines(const Geometry& G, const Form4& f, const Form4& g);

struct SpectrumCertificate {
  SurfaceClass cls;
  int q = 0;
  std::string mode;  // "exhaustive" or "sample"
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int n = 0;
  std::vector<int> attained;  // intersection sizes over non-kernel forms, ascending
  int max1 = -1, max2 = -1, max3 = -1;
  // expected two top values and the ceiling for the rest
  int top1 = 0, top2 = 0, rest_ceiling = 0;
  bool pattern_ok = false;    // no size outside {top1, top2, <= rest_ceiling}
  bool top1_attained = false;
  bool top2_attained = false;
  std::vector<std::pair<int, Form4>> witnesses;  // size -> first witness form
  std::vector<std::string> violations;
};

// intersection sizes |X ∩ Z(g)| over all forms g (exhaustive) or a seeded
// uniform sample, excluding forms vanishing identically on X
SpectrumCertificate spectrum(const Geometry& G, const FunctionalCode& code, bool exhaustive,
                             std::uint64_t samples = 0, std::uint64_t seed = 0, int workers = 1,
                             bool force = false);

struct BoundCaseStat {
  std::uint64_t pairs = 0;
  std::uint64_t attained_bits = 0;  // bit s set when size s occurred (s <= 63)
  std::vector<int> attained() const;
};

struct BoundSuiteReport {
  int q = 0;
  std::string mode;  // "exhaustive" or "structured"
  std::uint64_t seed = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t shared_plane_pairs = 0;
  std::map<std::string, BoundCaseStat> cases;
  std::vector<std::string> violations;  // capped detail strings
  std::uint64_t violation_count = 0;
  bool ok() const { return violation_count == 0; }
};

// Certifies the plane-section and pairwise bounds: exhaustive over all
// scalar classes of forms at q = 3, structured families (all plane pairs,
// all cones over two reference vertices, seeded random forms) at q = 4, 5.
BoundSuiteReport bound_suite(const Geometry& G, int workers = 1, std::uint64_t seed = 1,
                             std::uint64_t random_samples = 20000);

// exhaustive search for two distinct cones sharing exactly four lines;
// returns true and fills the pair when one exists
bool find_cone_pair_with_four_lines(const Geometry& G, Form4& f_out, Form4& g_out);

std::string form_to_string(const FieldSpec& F, const Form4& f);

}  // namespace qcl
