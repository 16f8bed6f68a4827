#pragma once

#include <string>

#include <json.hpp>

#include "bq/families.hpp"
#include "bq/quadratic_points.hpp"
#include "bq/quotient.hpp"

namespace bq {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "bq-report/1";

json to_json(const Rational& q);
json to_json(const NFElement& x);
json to_json(const ProjPoint& P);
json to_json(const ProjectiveTransformation& M);
json to_json(const TernaryForm& F);
json to_json(const PlaneCurve& C);
json to_json(const WeierstrassCurve& E);
json to_json(const ECPoint& P);
json to_json(const NonTorsionCertificate& c);
json to_json(const RankVerdict& v);
json to_json(const FixedLocusReport& r);
json to_json(const QuotientChain& c);
json to_json(const GenusOneQuarticModel& m);
json to_json(const QuotientResult& r);
json to_json(const AdmissibilityReport& r);
json to_json(const QuadraticPoint& q);
json to_json(const QuadraticFieldReport& r);
json to_json(const PullbackPoint& p);
json error_json(const std::exception& e);

// Curve input: a bare term string, or {"form": "...", "field": "Q(zeta4)"},
// or {"terms": [[i, j, k, "coefficient"], ...], "degree": d, "field": ...}.
TernaryForm curve_from_json(const json& j);
TernaryForm curve_from_text(const std::string& text);  // JSON or a bare term string
// Matrix input: a 9-entry array of element strings, or {"matrix": [...], "field": ...}.
ProjectiveTransformation matrix_from_json(const json& j, const NumberField& fallback);
ProjectiveTransformation matrix_from_text(const std::string& text, const NumberField& fallback);

std::string read_file(const std::string& path);

}  // namespace bq
