// funcodes.hpp — the functional code of a quadric surface: generator matrix,
// exhaustive weight distribution and weight hierarchy.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcl/quadrics.hpp"

namespace qcl {

struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FunctionalCode {
  Form4 f{};
  SurfaceClass cls = SurfaceClass::Cone;
  std::vector<int> columns;  // point indices of X, global order
  int n = 0;
  int k = 0;  // measured rank of the 10 monomial evaluation rows
  std::vector<std::vector<Fel>> monomial_rows;  // 10 rows of length n
  std::vector<std::vector<Fel>> gen;            // k rows, reduced row echelon form
};

// evaluation code of degree-2 forms on Z(f); f must be a cone, hyperbolic
// or elliptic quadric
FunctionalCode build_code(const Geometry& G, const Form4& f);

// codeword weight of the form g: |{x in X : g(x) != 0}|
int weight_of(const Geometry& G, const FunctionalCode& code, const Form4& g);

struct WeightDistribution {
  std::vector<std::uint64_t> counts;  // counts[w] = number of codewords of weight w
  std::uint64_t total() const;
  std::vector<int> nonzero_weights() const;  // ascending, excluding weight 0
};

struct WeightHierarchy {
  int w1 = 0, w2 = 0, w3 = 0;
};

WeightDistribution weight_distribution(const FunctionalCode& code, const FieldSpec& F,
                                       int workers = 1, bool force = false,
                                       const std::string& kernel_impl = {});

// three smallest distinct nonzero weights; throws if fewer exist
WeightHierarchy weight_hierarchy(const WeightDistribution& d);

struct CodeParams {
  int n, k, d, w2, w3;
};
// closed-form parameters for the cone / hyperbolic / elliptic codes
CodeParams expected_params(SurfaceClass cls, int q);

// --- shared exhaustive row-space scans ------------------------------------
//
// All q^R coefficient tuples over the given rows, walked in odometer order
// (last coefficient fastest). Results are identical for any worker count.

struct RowSpaceScan {
  std::vector<std::uint64_t> counts;        // per weight 0..n
  std::vector<std::vector<Fel>> witnesses;  // per weight: first tuple attaining it
};
RowSpaceScan scan_row_space(const FieldSpec& F, const std::vector<std::vector<Fel>>& rows, int n,
                            int workers = 1, const std::string& kernel_impl = {});

// tuples of given weight; canonical_only keeps one per scalar class
// (first nonzero coefficient = 1)
std::vector<std::vector<Fel>> tuples_with_weight(const FieldSpec& F,
                                                 const std::vector<std::vector<Fel>>& rows, int n,
                                                 int target_weight, bool canonical_only,
                                                 int workers = 1,
                                                 const std::string& kernel_impl = {});

}  // namespace qcl
