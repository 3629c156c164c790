#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avoidance/numeric.hpp"
#include "avoidance/oracle.hpp"
#include "avoidance/words.hpp"

namespace avoidance {

enum class ClaimStatus { verified, erratum_suspected, ambiguous };

std::string_view to_string(ClaimStatus status);  // "VERIFIED", ...
ClaimStatus parse_claim_status(std::string_view text);

using ClaimEvaluator = std::function<Rational(int n, int k)>;
using ClaimValidity = std::function<bool(int n, int k)>;

// One way of reading a stated formula. The first reading of a claim is the
// statement taken literally.
struct ClaimReading {
  std::string name;
  ClaimEvaluator evaluate;
};

// What a documented erratum looks like: where the literal statement first
// departs from the oracle, and a law every mismatch must satisfy.
struct ErratumSignature {
  int first_n = 0;
  int first_k = 0;
  std::function<bool(int n, int k, const Rational& claimed, const CountTable& oracle)> law;
  std::string description;
};

struct Claim {
  std::string id;
  PatternSet pattern_set;
  std::vector<ClaimReading> readings;
  ClaimValidity validity;
  ClaimStatus expected_status = ClaimStatus::verified;
  // For AMBIGUOUS claims: the reading expected to hold.
  std::string expected_reading;
  std::optional<ErratumSignature> erratum;
  std::string notes;

  bool valid_at(int n, int k) const { return !validity || validity(n, k); }
  // Literal reading; throws OutsideValidity off the validity domain.
  Rational evaluate(int n, int k) const;
};

struct Mismatch {
  int n = 0;
  int k = 0;
  Rational claimed;
  BigInt oracle;
};

struct ReadingResult {
  std::string name;
  std::vector<Mismatch> mismatches;
  bool holds() const { return mismatches.empty(); }
};

struct VerifyReport {
  std::string claim_id;
  std::string pattern_set;
  int n_max = 0;
  int k_max = 0;
  std::size_t points_checked = 0;
  ClaimStatus expected_status = ClaimStatus::verified;
  ClaimStatus status = ClaimStatus::verified;
  // Mismatches of the literal reading, ordered by (n, k).
  std::vector<Mismatch> mismatches;
  // Every reading, literal first.
  std::vector<ReadingResult> readings;
  std::optional<std::string> resolved_reading;
  // The documented erratum signature matched (only meaningful for errata).
  bool signature_matched = false;
  // Observed behaviour equals the documented expectation.
  bool as_expected = false;
};

// All registered claims, ordered by id.
const std::vector<Claim>& claim_registry();
// Throws UnknownClaim.
const Claim& find_claim(std::string_view id);

// The lowest-id claim expected to be VERIFIED for exactly this pattern set, if any.
const Claim* verified_claim_for(const PatternSet& set);

// Compares every reading of the claim with oracle counts at each valid grid
// point. Points outside the validity domain are skipped.
VerifyReport verify_claim(const Claim& claim, const CountTable& oracle);
VerifyReport verify_claim(const Claim& claim, int n_max, int k_max,
                          const OracleOptions& options = {});
VerifyReport verify_claim(std::string_view id, int n_max, int k_max,
                          const OracleOptions& options = {});

// Reports in claim-id order. Oracle tables are built once per distinct pattern
// set, spread over the requested workers.
std::vector<VerifyReport> verify_all(int n_max, int k_max, const OracleOptions& options = {});

// A verified claim's table over the grid; every grid point must be valid.
CountTable table_from_claim(const Claim& claim, int n_max, int k_max);

}  // namespace avoidance
