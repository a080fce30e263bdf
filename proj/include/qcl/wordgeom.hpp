// wordgeom.hpp — geometric classification of the quadrics behind low-weight
// codewords, and the tier censuses that verify the classification lists.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcl/funcodes.hpp"
#include "qcl/quadrics.hpp"

namespace qcl {

enum class WordType {
  TangentPairBisecantAxis,        // two tangent planes, axis meets X twice
  TangentPairGeneratorAxis,       // two tangent planes, axis is a generator
  TangentNonTangentTangentAxis,   // mixed pair, axis tangent
  NonTangentPairSkewAxis,         // two non-tangent planes, axis skew
  GeneratorPairPointAxis,         // two generator-pair planes, axis meets X once
  GeneratorPairGeneratorAxis,     // two generator-pair planes, axis is a generator
  TangentGeneratorPairVertexAxis, // tangent + generator-pair plane, axis through the vertex
  HyperbolicFourCommonLines,      // hyperbolic quadric sharing 4 lines, 2 per regulus
  ConeAllBisecants,               // cone with vertex off X, all lines bisecant
  HyperbolicRegulusBisecants,     // hyperbolic quadric with a regulus of bisecants
  ConeFourCommonLines,            // cone sharing exactly 4 lines with the cone X
  // tangency configurations: the intersection cycle carries a doubled line,
  // leaving exactly three distinct common lines (absent from the expected
  // second-weight lists; see the census reports)
  HyperbolicThreeCommonLines,
  ConeThreeCommonLines,
  // elliptic quadric meeting the elliptic X in two disjoint plane conics
  // (absent from the expected minimum-weight list; occurs from q = 5 on)
  EllipticTwoConics,
  Other
};

const char* to_string(WordType t);

struct WordTypeResult {
  WordType type = WordType::Other;
  std::string detail;
};

// classify the quadric Z(g) against the surface X; g must not vanish on X
WordTypeResult word_type(const Geometry& G, const Surface& X, const Form4& g);

struct WordCensus {
  SurfaceClass cls;
  int q = 0;
  int tier = 0;  // 1 or 2
  int tier_weight = 0;
  std::uint64_t scalar_classes = 0;
  std::map<WordType, std::uint64_t> counts;
  std::vector<Form4> unmatched;  // capped detail
  std::uint64_t unmatched_total = 0;
};

// every scalar class of forms whose codeword has the tier weight, classified
WordCensus census(const Geometry& G, const FunctionalCode& code, const WeightDistribution& dist,
                  int tier, int workers = 1);

struct TheoremCheckResult {
  WordCensus census;
  bool applicable = true;  // false: census-only, nothing asserted
  bool pass = false;
  std::vector<WordType> expected;
  std::vector<std::string> failures;
};

// checks that the tier census matches the classification list for this
// surface and tier exactly: no unmatched forms, every listed type attained,
// no unlisted type attained; elliptic w2 (and the q=3 cone) are census-only
TheoremCheckResult theorem_check(const Geometry& G, const FunctionalCode& code,
                                 const WeightDistribution& dist, int tier, int workers = 1);

}  // namespace qcl
