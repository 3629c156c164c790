#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "avoidance/oracle.hpp"

namespace avoidance {

inline constexpr int kCountTableSchemaVersion = 1;

// JSON document: schema tag and version, canonical pattern-set text, provenance,
// grid bounds and counts[n][k] as decimal strings. Output is deterministic.
std::string table_to_json(const CountTable& table);
CountTable table_from_json(std::string_view text);

// Header "n,k,count", rows in (n, k) order.
std::string table_to_csv(const CountTable& table);

void save_table(const CountTable& table, const std::filesystem::path& path);
// Throws SchemaError on a foreign schema version or a corrupt file.
CountTable load_table(const std::filesystem::path& path);

}  // namespace avoidance
