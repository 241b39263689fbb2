#pragma once

#include <string>

#include <json.hpp>

#include "entloc/factorization.hpp"
#include "entloc/symbolic.hpp"

namespace entloc::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "entloc-report/v1";
inline constexpr const char* kVersion = "0.1.0";

/// Complex numbers serialize as [re, im].
json to_json(cplx z);
json to_json(const Vec& v);
/// Row-major list of rows.
json to_json(const Mat& m);
json to_json(const ExactMatrix& m);
json to_json(const Tolerances& tol);
json to_json(const State& s);
json to_json(const SeparabilityVerdict& v);
json to_json(const FamilyPoint& p);
json to_json(const Certificate& c);
json to_json(const TwoBasisTest& t);
json to_json(const AuditReport& r);
json to_json(const WitnessSearch& w);
json to_json(const ControlReport& r);

/// Flat CSV projection of a results array: one row per element, columns from
/// the first element's keys, nested values written as compact JSON.
std::string to_csv(const json& results);

}  // namespace entloc::cli
