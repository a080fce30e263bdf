#include "qcl/report.hpp"

#include <ostream>
#include <sstream>

#include "qcl/formexpr.hpp"

namespace qcl {

std::string point_str(const FieldSpec& F, const Point& p) {
  (void)F;
  std::ostringstream os;
  os << "(" << int(p.c[0]) << ":" << int(p.c[1]) << ":" << int(p.c[2]) << ":" << int(p.c[3])
     << ")";
  return os.str();
}

Json json_field(const FieldSpec& F) {
  return Json{{"p", F.p}, {"m", F.m}, {"q", F.q}, {"modulus", F.modulus_str()}};
}

Json json_form(const FieldSpec& F, const Form4& f) {
  Json coeffs = Json::array();
  for (Fel c : f) coeffs.push_back(int(c));
  return Json{{"coeffs", coeffs}, {"expr", serialize_form(F, f)}};
}

Json json_distribution(const WeightDistribution& d) {
  Json out = Json::array();
  for (int w = 0; w < int(d.counts.size()); ++w)
    if (d.counts[w] > 0) out.push_back(Json{{"weight", w}, {"count", d.counts[w]}});
  return out;
}

Json json_params(const CodeParams& p) {
  return Json{{"n", p.n}, {"k", p.k}, {"d", p.d}, {"w2", p.w2}, {"w3", p.w3}};
}

Json json_spectrum(const FieldSpec& F, const SpectrumCertificate& c) {
  Json witnesses = Json::array();
  for (const auto& [size, form] : c.witnesses)
    witnesses.push_back(Json{{"size", size}, {"form", json_form(F, form)}});
  Json out{{"case", to_string(c.cls)},
           {"q", c.q},
           {"mode", c.mode},
           {"n", c.n},
           {"attained", c.attained},
           {"max1", c.max1},
           {"max2", c.max2},
           {"max3", c.max3},
           {"expected_top", Json::array({c.top1, c.top2})},
           {"ceiling", c.rest_ceiling},
           {"pattern_ok", c.pattern_ok},
           {"top1_attained", c.top1_attained},
           {"top2_attained", c.top2_attained},
           {"witnesses", witnesses},
           {"violations", c.violations}};
  if (c.mode == "sample") {
    out["samples"] = c.samples;
    out["seed"] = c.seed;
  }
  return out;
}

Json json_bound_suite(const BoundSuiteReport& r) {
  Json cases = Json::object();
  for (const auto& [name, stat] : r.cases) {
    if (stat.pairs == 0) continue;
    cases[name] = Json{{"pairs", stat.pairs}, {"attained", stat.attained()}};
  }
  return Json{{"q", r.q},
              {"mode", r.mode},
              {"seed", r.seed},
              {"pairs_checked", r.pairs_checked},
              {"shared_plane_pairs", r.shared_plane_pairs},
              {"violation_count", r.violation_count},
              {"violations", r.violations},
              {"cases", cases}};
}

Json json_census(const FieldSpec& F, const WordCensus& c) {
  Json types = Json::object();
  for (const auto& [t, n] : c.counts) types[to_string(t)] = n;
  Json unmatched = Json::array();
  for (const Form4& g : c.unmatched) unmatched.push_back(json_form(F, g));
  return Json{{"surface", to_string(c.cls)},
              {"q", c.q},
              {"tier", std::string("w") + std::to_string(c.tier)},
              {"tier_weight", c.tier_weight},
              {"scalar_classes", c.scalar_classes},
              {"types", types},
              {"unmatched_total", c.unmatched_total},
              {"unmatched", unmatched}};
}

void write_distribution_csv(std::ostream& os, const WeightDistribution& d) {
  os << "weight,count\n";
  for (int w = 0; w < int(d.counts.size()); ++w)
    if (d.counts[w] > 0) os << w << "," << d.counts[w] << "\n";
}

}  // namespace qcl
