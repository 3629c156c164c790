#include "avoidance/json_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "avoidance/table_io.hpp"

namespace avoidance {

namespace {

using nlohmann::ordered_json;

ordered_json grid(int n_max, int k_max) {
  ordered_json g;
  g["n_max"] = n_max;
  g["k_max"] = k_max;
  return g;
}

ordered_json mismatches_json(const std::vector<Mismatch>& mismatches) {
  auto out = ordered_json::array();
  for (const auto& m : mismatches) {
    ordered_json item;
    item["n"] = m.n;
    item["k"] = m.k;
    item["claimed"] = to_compact(m.claimed);
    item["oracle"] = to_decimal(m.oracle);
    out.push_back(std::move(item));
  }
  return out;
}

ordered_json report_json(const VerifyReport& r) {
  ordered_json doc;
  doc["id"] = r.claim_id;
  doc["pattern_set"] = r.pattern_set;
  doc["points_checked"] = r.points_checked;
  doc["expected_status"] = std::string(to_string(r.expected_status));
  doc["status"] = std::string(to_string(r.status));
  doc["as_expected"] = r.as_expected;
  doc["resolved_reading"] =
      r.resolved_reading ? ordered_json(*r.resolved_reading) : ordered_json(nullptr);
  doc["signature_matched"] = r.signature_matched;
  doc["mismatches"] = mismatches_json(r.mismatches);
  auto readings = ordered_json::array();
  for (const auto& reading : r.readings) {
    ordered_json item;
    item["name"] = reading.name;
    item["holds"] = reading.holds();
    item["mismatch_count"] = reading.mismatches.size();
    readings.push_back(std::move(item));
  }
  doc["readings"] = std::move(readings);
  return doc;
}

}  // namespace

std::string verify_reports_to_json(const std::vector<VerifyReport>& reports, int n_max,
                                   int k_max) {
  ordered_json doc;
  doc["schema"] = "avoidance-lab/verify-report";
  doc["schema_version"] = kVerifyReportSchemaVersion;
  doc["grid"] = grid(n_max, k_max);
  doc["all_as_expected"] = std::all_of(reports.begin(), reports.end(),
                                       [](const VerifyReport& r) { return r.as_expected; });
  auto claims = ordered_json::array();
  for (const auto& r : reports) claims.push_back(report_json(r));
  doc["claims"] = std::move(claims);
  return doc.dump(2) + "\n";
}

std::string classification_to_json(const Classification& c) {
  ordered_json doc;
  doc["schema"] = "avoidance-lab/classification";
  doc["schema_version"] = kClassificationSchemaVersion;
  doc["grid"] = grid(c.n_max, c.k_max);
  doc["label"] = c.label();
  auto classes = ordered_json::array();
  for (const auto& wc : c.classes) {
    ordered_json item;
    auto members = ordered_json::array();
    for (const auto& m : wc.members) members.push_back(m.to_string());
    item["members"] = std::move(members);
    item["provenance"] = wc.provenance;
    item["table"] = ordered_json::parse(table_to_json(wc.table));
    classes.push_back(std::move(item));
  }
  doc["classes"] = std::move(classes);
  return doc.dump(2) + "\n";
}

}  // namespace avoidance
