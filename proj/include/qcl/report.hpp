// report.hpp — JSON and CSV serialization of run artifacts (schema 1).
#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "qcl/funcodes.hpp"
#include "qcl/intersections.hpp"
#include "qcl/wordgeom.hpp"

namespace qcl {

using Json = nlohmann::json;

constexpr int kReportSchema = 1;

std::string point_str(const FieldSpec& F, const Point& p);  // "(a:b:c:d)" in reps

Json json_field(const FieldSpec& F);
Json json_form(const FieldSpec& F, const Form4& f);
Json json_distribution(const WeightDistribution& d);
Json json_params(const CodeParams& p);
Json json_spectrum(const FieldSpec& F, const SpectrumCertificate& c);
Json json_bound_suite(const BoundSuiteReport& r);
Json json_census(const FieldSpec& F, const WordCensus& c);

// "weight,count" per line, ascending weights with nonzero count
void write_distribution_csv(std::ostream& os, const WeightDistribution& d);

}  // namespace qcl
