#include "avoidance/table_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "avoidance/errors.hpp"

namespace avoidance {

namespace {

constexpr std::string_view kSchemaTag = "avoidance-lab/count-table";

}  // namespace

std::string table_to_json(const CountTable& table) {
  nlohmann::ordered_json doc;
  doc["schema"] = kSchemaTag;
  doc["schema_version"] = kCountTableSchemaVersion;
  doc["pattern_set"] = table.pattern_set().to_string();
  doc["provenance"] = table.provenance();
  doc["n_max"] = table.n_max();
  doc["k_max"] = table.k_max();
  auto rows = nlohmann::ordered_json::array();
  for (int n = 0; n <= table.n_max(); ++n) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 0; k <= table.k_max(); ++k) row.push_back(to_decimal(table.at(n, k)));
    rows.push_back(std::move(row));
  }
  doc["counts"] = std::move(rows);
  return doc.dump(2) + "\n";
}

CountTable table_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("corrupt count table: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != kSchemaTag) {
      throw SchemaError("not a count table document");
    }
    const int version = doc.at("schema_version").get<int>();
    if (version != kCountTableSchemaVersion) {
      throw SchemaError("count table schema version " + std::to_string(version) +
                        " is not supported (expected " +
                        std::to_string(kCountTableSchemaVersion) + ")");
    }
    const int n_max = doc.at("n_max").get<int>();
    const int k_max = doc.at("k_max").get<int>();
    CountTable table(PatternSet::parse(doc.at("pattern_set").get<std::string>()), n_max, k_max,
                     doc.at("provenance").get<std::string>());
    const auto& rows = doc.at("counts");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n_max + 1) {
      throw SchemaError("count table rows do not match n_max");
    }
    for (int n = 0; n <= n_max; ++n) {
      const auto& row = rows[n];
      if (!row.is_array() || static_cast<int>(row.size()) != k_max + 1) {
        throw SchemaError("count table row " + std::to_string(n) + " does not match k_max");
      }
      for (int k = 0; k <= k_max; ++k) {
        BigInt value;
        if (value.set_str(row[k].get<std::string>(), 10) != 0 || value < 0) {
          throw SchemaError("count at (" + std::to_string(n) + "," + std::to_string(k) +
                            ") is not a nonnegative decimal string");
        }
        table.set(n, k, std::move(value));
      }
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed count table: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw SchemaError(std::string("malformed count table: ") + e.what());
  }
}

std::string table_to_csv(const CountTable& table) {
  std::string out = "n,k,count\n";
  for (int n = 0; n <= table.n_max(); ++n) {
    for (int k = 0; k <= table.k_max(); ++k) {
      out += std::to_string(n) + "," + std::to_string(k) + "," + to_decimal(table.at(n, k)) + "\n";
    }
  }
  return out;
}

void save_table(const CountTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << table_to_json(table);
}

CountTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return table_from_json(buffer.str());
}

}  // namespace avoidance
