#include "avoidance/claims.hpp"

#include <algorithm>
#include <map>

#include "avoidance/errors.hpp"
#include "parallel.hpp"

namespace avoidance {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::verified:
      return "VERIFIED";
    case ClaimStatus::erratum_suspected:
      return "ERRATUM_SUSPECTED";
    case ClaimStatus::ambiguous:
      return "AMBIGUOUS";
  }
  return "?";
}

ClaimStatus parse_claim_status(std::string_view text) {
  if (text == "VERIFIED") return ClaimStatus::verified;
  if (text == "ERRATUM_SUSPECTED") return ClaimStatus::erratum_suspected;
  if (text == "AMBIGUOUS") return ClaimStatus::ambiguous;
  throw InvalidArgument("unknown claim status \"" + std::string(text) + "\"");
}

Rational Claim::evaluate(int n, int k) const {
  if (!valid_at(n, k)) {
    throw OutsideValidity("claim " + id + " is outside its validity domain at (" +
                          std::to_string(n) + "," + std::to_string(k) + ")");
  }
  return readings.front().evaluate(n, k);
}

const Claim& find_claim(std::string_view id) {
  const auto& registry = claim_registry();
  auto it = std::lower_bound(registry.begin(), registry.end(), id,
                             [](const Claim& c, std::string_view key) { return c.id < key; });
  if (it == registry.end() || it->id != id) {
    throw UnknownClaim("no claim registered as \"" + std::string(id) + "\"");
  }
  return *it;
}

const Claim* verified_claim_for(const PatternSet& set) {
  for (const auto& claim : claim_registry()) {
    if (claim.expected_status == ClaimStatus::verified && claim.pattern_set == set) return &claim;
  }
  return nullptr;
}

VerifyReport verify_claim(const Claim& claim, const CountTable& oracle) {
  if (oracle.pattern_set() != claim.pattern_set) {
    throw InvalidArgument("oracle table for " + oracle.pattern_set().to_string() +
                          " cannot check claim " + claim.id + " on " +
                          claim.pattern_set.to_string());
  }
  VerifyReport report;
  report.claim_id = claim.id;
  report.pattern_set = claim.pattern_set.to_string();
  report.n_max = oracle.n_max();
  report.k_max = oracle.k_max();
  report.expected_status = claim.expected_status;

  for (const auto& reading : claim.readings) report.readings.push_back({reading.name, {}});
  for (int n = 0; n <= oracle.n_max(); ++n) {
    for (int k = 0; k <= oracle.k_max(); ++k) {
      if (!claim.valid_at(n, k)) continue;
      ++report.points_checked;
      const BigInt& truth = oracle.at(n, k);
      for (std::size_t r = 0; r < claim.readings.size(); ++r) {
        Rational claimed = claim.readings[r].evaluate(n, k);
        if (claimed != Rational(truth)) {
          report.readings[r].mismatches.push_back({n, k, std::move(claimed), truth});
        }
      }
    }
  }
  report.mismatches = report.readings.front().mismatches;

  if (report.readings.front().holds()) {
    report.status = ClaimStatus::verified;
  } else {
    auto alternative = std::find_if(report.readings.begin() + 1, report.readings.end(),
                                    [](const ReadingResult& r) { return r.holds(); });
    if (alternative != report.readings.end()) {
      report.status = ClaimStatus::ambiguous;
      report.resolved_reading = alternative->name;
    } else {
      report.status = ClaimStatus::erratum_suspected;
    }
  }

  if (report.status == ClaimStatus::erratum_suspected && claim.erratum) {
    const auto& signature = *claim.erratum;
    const auto& first = report.mismatches.front();
    report.signature_matched =
        first.n == signature.first_n && first.k == signature.first_k &&
        std::all_of(report.mismatches.begin(), report.mismatches.end(), [&](const Mismatch& m) {
          return !signature.law || signature.law(m.n, m.k, m.claimed, oracle);
        });
  }

  switch (claim.expected_status) {
    case ClaimStatus::verified:
      report.as_expected = report.status == ClaimStatus::verified;
      break;
    case ClaimStatus::erratum_suspected:
      report.as_expected = report.status == ClaimStatus::erratum_suspected &&
                           (!claim.erratum || report.signature_matched);
      break;
    case ClaimStatus::ambiguous:
      report.as_expected = report.status == ClaimStatus::ambiguous &&
                           report.resolved_reading == claim.expected_reading;
      break;
  }
  return report;
}

VerifyReport verify_claim(const Claim& claim, int n_max, int k_max, const OracleOptions& options) {
  return verify_claim(claim, build_table(claim.pattern_set, n_max, k_max, options));
}

VerifyReport verify_claim(std::string_view id, int n_max, int k_max, const OracleOptions& options) {
  return verify_claim(find_claim(id), n_max, k_max, options);
}

std::vector<VerifyReport> verify_all(int n_max, int k_max, const OracleOptions& options) {
  const auto& registry = claim_registry();

  std::vector<PatternSet> sets;
  for (const auto& claim : registry) sets.push_back(claim.pattern_set);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  OracleOptions single = options;
  single.workers = 1;
  std::vector<std::optional<CountTable>> tables(sets.size());
  detail::run_indexed(sets.size(), options.workers,
              [&](std::size_t i) { tables[i] = build_table(sets[i], n_max, k_max, single); });

  std::map<PatternSet, const CountTable*> by_set;
  for (std::size_t i = 0; i < sets.size(); ++i) by_set.emplace(sets[i], &*tables[i]);

  std::vector<std::optional<VerifyReport>> reports(registry.size());
  detail::run_indexed(registry.size(), options.workers, [&](std::size_t i) {
    reports[i] = verify_claim(registry[i], *by_set.at(registry[i].pattern_set));
  });

  std::vector<VerifyReport> out;
  out.reserve(reports.size());
  for (auto& r : reports) out.push_back(std::move(*r));
  return out;
}

CountTable table_from_claim(const Claim& claim, int n_max, int k_max) {
  CountTable table(claim.pattern_set, n_max, k_max, claim_provenance(claim.id));
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= k_max; ++k) {
      const Rational value = claim.evaluate(n, k);
      if (!is_integer(value) || value < 0) {
        throw InvalidArgument("claim " + claim.id + " does not give a count at (" +
                              std::to_string(n) + "," + std::to_string(k) + ")");
      }
      table.set(n, k, value.get_num());
    }
  }
  return table;
}

}  // namespace avoidance
