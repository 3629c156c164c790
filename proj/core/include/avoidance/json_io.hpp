#pragma once

#include <string>
#include <vector>

#include "avoidance/claims.hpp"
#include "avoidance/wilf.hpp"

namespace avoidance {

inline constexpr int kVerifyReportSchemaVersion = 1;
inline constexpr int kClassificationSchemaVersion = 1;

// Deterministic JSON documents; counts and claimed values are strings
// ("12", "3/2").
std::string verify_reports_to_json(const std::vector<VerifyReport>& reports, int n_max,
                                   int k_max);
std::string classification_to_json(const Classification& classification);

}  // namespace avoidance
